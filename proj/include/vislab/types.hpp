#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace vislab {

using Complex = std::complex<double>;

inline constexpr double kPi = 3.14159265358979323846;
inline constexpr double kInfinity = std::numeric_limits<double>::infinity();

/// Axis-aligned rectangle [x0,x1] x [y0,y1].
struct Box {
    double x0 = 0, y0 = 0, x1 = 0, y1 = 0;

    bool contains(Complex z) const {
        return z.real() >= x0 && z.real() <= x1 && z.imag() >= y0 && z.imag() <= y1;
    }
    bool intersects(const Box& o) const {
        return !(o.x1 < x0 || o.x0 > x1 || o.y1 < y0 || o.y0 > y1);
    }
    Box expanded(double r) const { return {x0 - r, y0 - r, x1 + r, y1 + r}; }
    double width() const { return x1 - x0; }
    double height() const { return y1 - y0; }

    static Box around(Complex c, double r) {
        return {c.real() - r, c.imag() - r, c.real() + r, c.imag() + r};
    }
};

// Error hierarchy. The CLI maps each family onto an exit code.
struct LabError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct InvalidArgument : LabError {
    using LabError::LabError;
};
struct PreconditionError : LabError {
    using LabError::LabError;
};
struct ResolutionError : LabError {
    using LabError::LabError;
};
struct DisconnectedError : ResolutionError {
    using ResolutionError::ResolutionError;
};
struct BandError : LabError {
    using LabError::LabError;
};

inline double cross(Complex a, Complex b) { return a.real() * b.imag() - a.imag() * b.real(); }
inline double dot(Complex a, Complex b) { return a.real() * b.real() + a.imag() * b.imag(); }

/// Euclidean distance from z to the closed segment [a,b].
inline double segment_distance(Complex z, Complex a, Complex b) {
    const Complex d = b - a;
    const double len2 = std::norm(d);
    if (len2 == 0.0) return std::abs(z - a);
    const double t = std::clamp(dot(z - a, d) / len2, 0.0, 1.0);
    return std::abs(z - (a + t * d));
}

}  // namespace vislab
