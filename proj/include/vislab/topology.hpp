#pragma once

// Discrete connectivity on grid masks and point clouds.

#include <cstdint>
#include <string>
#include <vector>

#include "vislab/grid.hpp"

namespace vislab {

class DisjointSet {
public:
    explicit DisjointSet(std::size_t n);
    std::size_t find(std::size_t x);
    bool unite(std::size_t a, std::size_t b);

private:
    std::vector<std::size_t> parent_;
    std::vector<std::uint8_t> rank_;
};

/// Labels are 0..count-1 in order of first appearance; -1 marks excluded items.
struct ComponentLabeling {
    std::vector<int> labels;
    int count = 0;
    std::vector<Box> boxes;
    std::vector<Complex> representatives;
};

/// 8-adjacency over the flagged nodes.
ComponentLabeling components(const GridMask& mask);
/// 8-adjacency over an arbitrary node selection of an nx-by-ny lattice.
ComponentLabeling components(const std::vector<std::uint8_t>& selected, int nx, int ny, const Box& window, double h);
/// Points joined when |a - b| <= radius.
ComponentLabeling components(const std::vector<Complex>& cloud, double radius);

/// Components of B(p, r) ∩ Ω on the grid with margin h/sqrt(2).
ComponentLabeling collar_components(const DomainSpec& d, Complex p, double r, double h);

struct LocalConnectivity {
    bool pass = true;
    bool vacuous = false;
    int components = 0;     // components of the eps-ball cloud met by the delta-ball
    double res = 0.0;
    double radius = 0.0;
};

/// PreconditionError unless delta < eps and radius >= 2 * res.
LocalConnectivity local_connectivity_probe(const std::vector<Complex>& cloud, double res, Complex p, double eps,
                                           double delta, double radius);

/// Largest Euclidean diameter among the components at each scale.
/// PreconditionError unless scales are strictly decreasing.
std::vector<double> totally_disconnected_probe(const std::vector<Complex>& cloud, const std::vector<double>& scales);

double diameter(const std::vector<Complex>& pts);

struct EndProfile {
    std::vector<double> radii;
    std::vector<double> margins;
    std::vector<int> counts;
    double h = 0.0;
};

/// PreconditionError for bounded domains or margins not above the radii;
/// ResolutionError past 2e7 lattice nodes.
EndProfile end_profile(const DomainSpec& d, const std::vector<double>& radii, const std::vector<double>& margins, double h);

/// PreconditionError for empty clouds.
double hausdorff_distance_euclidean(const std::vector<Complex>& a, const std::vector<Complex>& b);

}  // namespace vislab
