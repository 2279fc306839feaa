#pragma once

// Rectangular lattice over a window. A node is flagged when it is interior and
// its distance to the boundary clears the safety margin.

#include <cstdint>
#include <optional>
#include <vector>

#include "vislab/domain.hpp"

namespace vislab {

struct GridOptions {
    double margin_factor = 1.0;              // flag iff dtb_lower > margin_factor * h
    std::optional<std::pair<Complex, double>> clip;  // keep only nodes with |z - c| < r
    double dtb_rel_tol = 0.05;
    unsigned threads = 0;                    // 0: hardware concurrency
};

struct GridMask {
    Box window;
    double h = 0.0;
    int nx = 0;
    int ny = 0;
    double margin = 0.0;
    std::vector<std::uint8_t> flag;
    std::vector<double> dtb;        // lower bound of dtb at flagged nodes, 0 elsewhere
    std::vector<std::uint8_t> member;  // Membership per node

    std::size_t index(int i, int j) const { return static_cast<std::size_t>(j) * nx + i; }
    int col(std::size_t k) const { return static_cast<int>(k % nx); }
    int row(std::size_t k) const { return static_cast<int>(k / nx); }
    Complex node(int i, int j) const { return {window.x0 + i * h, window.y0 + j * h}; }
    Complex node(std::size_t k) const { return node(col(k), row(k)); }
    std::size_t size() const { return flag.size(); }
    std::size_t flagged_count() const;
    /// Nearest flagged node within distance h, ties by index.
    std::optional<std::size_t> snap(Complex z) const;
};

/// Throws ResolutionError when no node is flagged or the lattice is too large.
GridMask build_grid(const DomainSpec& d, const Box& window, double h, const GridOptions& opt = {});

/// 8-neighbour offsets (di, dj) in a fixed order.
inline constexpr int kNbr[8][2] = {{1, 0}, {-1, 0}, {0, 1}, {0, -1}, {1, 1}, {-1, 1}, {1, -1}, {-1, -1}};

}  // namespace vislab
