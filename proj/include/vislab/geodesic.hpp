#pragma once

// Grid shortest paths with conservative edge weights, and exact disk geodesics.

#include <vector>

#include "vislab/curves.hpp"
#include "vislab/grid.hpp"

namespace vislab {

struct WeightedGrid {
    GridMask mask;
    std::vector<double> hi;      // density upper bound per flagged node
    bool dtb_weights = false;    // hi is 1/dtb: edges are padded by the Lipschitz bound
    double edge_weight(std::size_t a, std::size_t b, double len) const;
};

/// Exact density where the domain is a model, else 1/dtb_lower.
WeightedGrid weigh(const DomainSpec& d, GridMask mask);

struct PathResult {
    Curve curve;                  // node positions, Euclidean arclength parameter
    std::vector<std::size_t> nodes;
    double upper = 0.0;           // summed edge weights
    double min_dtb = 0.0;
    double max_dtb = 0.0;
};

/// Dijkstra from snap(z) to snap(w). Ties are broken by node index.
/// InvalidArgument if an endpoint has no flagged node within h; DisconnectedError if unreachable.
PathResult shortest_path(const WeightedGrid& g, Complex z, Complex w);

/// Single-source distances over the flagged nodes; kInfinity where unreachable.
std::vector<double> distances_from(const WeightedGrid& g, std::size_t source);

/// Arc of the circle orthogonal to the unit circle through a and b (or the diameter).
struct DiskGeodesic {
    Complex a, b;
    bool diameter = false;
    Complex center{0.0, 0.0};
    double radius = 0.0;
    Complex at(double s) const;      // s in [0,1], a -> b
    std::vector<Complex> sample(int n) const;
    double min_modulus() const;      // Euclidean distance from 0 to the arc
};

/// Endpoints may lie on the unit circle. InvalidArgument if a == b or outside the closed disk.
DiskGeodesic disk_geodesic(Complex a, Complex b);

/// Membership in the region between the boundary arc from x1 to x2 through 1 and their geodesic.
bool region_reg(Complex x1, Complex x2, Complex z);

/// Shortest paths from o to each target.
std::vector<PathResult> geodesic_ray_family(const WeightedGrid& g, Complex o, const std::vector<Complex>& targets);

/// sup over Euclidean arclength s <= T of |a(s) - b(s)|.
double initial_arc_deviation(const Curve& a, const Curve& b, double T);

}  // namespace vislab
