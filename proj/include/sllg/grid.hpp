#ifndef SLLG_GRID_HPP
#define SLLG_GRID_HPP

#include <cmath>

#include "sllg/errors.hpp"

namespace sllg {

inline constexpr double kTwoPi = 6.283185307179586476925286766559;
inline constexpr double kTorusArea = kTwoPi * kTwoPi;

// Uniform periodic grid on [0,2pi)^2, row-major with x1 as the slow index.
struct Grid {
    int n = 0;
    double h = 0.0;

    Grid() = default;
    explicit Grid(int n_) : n(n_), h(kTwoPi / n_) {
        if (n_ < 8 || n_ % 2 != 0) throw BadParamsError("grid size must be even and >= 8");
    }

    int size() const { return n * n; }
    int idx(int i1, int i2) const { return i1 * n + i2; }
    double x1(int i1) const { return h * i1; }
    double x2(int i2) const { return h * i2; }
    double cell_area() const { return h * h; }
    // modes with |k| above this are dropped by dealiased products
    int dealias_cutoff() const { return n / 3; }

    bool operator==(const Grid& o) const { return n == o.n; }
    bool operator!=(const Grid& o) const { return n != o.n; }
};

// shortest signed distance between two coordinates on the periodic axis
inline double torus_delta(double a, double b) {
    double d = std::fmod(a - b, kTwoPi);
    if (d > kTwoPi / 2) d -= kTwoPi;
    if (d < -kTwoPi / 2) d += kTwoPi;
    return d;
}

inline double torus_dist(double ax, double ay, double bx, double by) {
    double d1 = torus_delta(ax, bx), d2 = torus_delta(ay, by);
    return std::sqrt(d1 * d1 + d2 * d2);
}

}  // namespace sllg

#endif
