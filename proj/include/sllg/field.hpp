#ifndef SLLG_FIELD_HPP
#define SLLG_FIELD_HPP

#include <array>
#include <cmath>
#include <functional>
#include <vector>

#include "sllg/grid.hpp"

namespace sllg {

inline constexpr double kSphereTol = 1e-10;

struct ScalarField {
    Grid grid;
    std::vector<double> v;

    ScalarField() = default;
    explicit ScalarField(const Grid& g, double fill = 0.0) : grid(g), v(g.size(), fill) {}

    double& operator()(int i1, int i2) { return v[grid.idx(i1, i2)]; }
    double operator()(int i1, int i2) const { return v[grid.idx(i1, i2)]; }

    static ScalarField sample(const Grid& g, const std::function<double(double, double)>& f) {
        ScalarField out(g);
        for (int i1 = 0; i1 < g.n; ++i1)
            for (int i2 = 0; i2 < g.n; ++i2) out.v[g.idx(i1, i2)] = f(g.x1(i1), g.x2(i2));
        return out;
    }

    double mean() const {
        double s = 0.0;
        for (double x : v) s += x;
        return s / v.size();
    }

    double integral() const { return mean() * kTorusArea; }

    bool finite() const {
        for (double x : v)
            if (!std::isfinite(x)) return false;
        return true;
    }

    ScalarField& operator+=(const ScalarField& o) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] += o.v[i];
        return *this;
    }
    ScalarField& operator-=(const ScalarField& o) {
        for (std::size_t i = 0; i < v.size(); ++i) v[i] -= o.v[i];
        return *this;
    }
    ScalarField& operator*=(double c) {
        for (double& x : v) x *= c;
        return *this;
    }
};

inline ScalarField operator+(ScalarField a, const ScalarField& b) { return a += b; }
inline ScalarField operator-(ScalarField a, const ScalarField& b) { return a -= b; }
inline ScalarField operator*(double c, ScalarField a) { return a *= c; }

// pointwise product; no dealiasing (see spectral.hpp for the dealiased version)
inline ScalarField pointwise(const ScalarField& a, const ScalarField& b) {
    ScalarField out(a.grid);
    for (std::size_t i = 0; i < out.v.size(); ++i) out.v[i] = a.v[i] * b.v[i];
    return out;
}

struct VectorField3 {
    std::array<ScalarField, 3> c;

    VectorField3() = default;
    explicit VectorField3(const Grid& g) : c{ScalarField(g), ScalarField(g), ScalarField(g)} {}

    const Grid& grid() const { return c[0].grid; }

    ScalarField norm_sq() const {
        ScalarField out(grid());
        for (std::size_t i = 0; i < out.v.size(); ++i)
            out.v[i] = c[0].v[i] * c[0].v[i] + c[1].v[i] * c[1].v[i] + c[2].v[i] * c[2].v[i];
        return out;
    }

    double min_norm() const {
        double m = INFINITY;
        for (std::size_t i = 0; i < c[0].v.size(); ++i) {
            double s = c[0].v[i] * c[0].v[i] + c[1].v[i] * c[1].v[i] + c[2].v[i] * c[2].v[i];
            m = std::min(m, s);
        }
        return std::sqrt(m);
    }

    // max_x | |u(x)| - 1 |
    double max_sphere_deviation() const {
        double m = 0.0;
        for (std::size_t i = 0; i < c[0].v.size(); ++i) {
            double s = std::sqrt(c[0].v[i] * c[0].v[i] + c[1].v[i] * c[1].v[i] +
                                 c[2].v[i] * c[2].v[i]);
            m = std::max(m, std::fabs(s - 1.0));
        }
        return m;
    }

    bool finite() const { return c[0].finite() && c[1].finite() && c[2].finite(); }

    VectorField3& operator+=(const VectorField3& o) {
        for (int i = 0; i < 3; ++i) c[i] += o.c[i];
        return *this;
    }
    VectorField3& operator-=(const VectorField3& o) {
        for (int i = 0; i < 3; ++i) c[i] -= o.c[i];
        return *this;
    }
    VectorField3& operator*=(double s) {
        for (int i = 0; i < 3; ++i) c[i] *= s;
        return *this;
    }
};

inline VectorField3 operator-(VectorField3 a, const VectorField3& b) { return a -= b; }
inline VectorField3 operator+(VectorField3 a, const VectorField3& b) { return a += b; }

inline VectorField3 cross(const VectorField3& a, const VectorField3& b) {
    VectorField3 out(a.grid());
    const std::size_t m = out.c[0].v.size();
    for (std::size_t i = 0; i < m; ++i) {
        const double a1 = a.c[0].v[i], a2 = a.c[1].v[i], a3 = a.c[2].v[i];
        const double b1 = b.c[0].v[i], b2 = b.c[1].v[i], b3 = b.c[2].v[i];
        out.c[0].v[i] = a2 * b3 - a3 * b2;
        out.c[1].v[i] = a3 * b1 - a1 * b3;
        out.c[2].v[i] = a1 * b2 - a2 * b1;
    }
    return out;
}

inline ScalarField dot(const VectorField3& a, const VectorField3& b) {
    ScalarField out(a.grid());
    for (std::size_t i = 0; i < out.v.size(); ++i)
        out.v[i] = a.c[0].v[i] * b.c[0].v[i] + a.c[1].v[i] * b.c[1].v[i] +
                   a.c[2].v[i] * b.c[2].v[i];
    return out;
}

// pointwise renormalization u / |u|
VectorField3 project_to_sphere(const VectorField3& u);

double l2_norm(const VectorField3& u);
double l2_dist_sq(const VectorField3& a, const VectorField3& b);

}  // namespace sllg

#endif
