#include "sllg/initial_data.hpp"

#include <cmath>

#include "sllg/errors.hpp"
#include "sllg/spectral.hpp"

namespace sllg {

namespace {

// alternate truncate/project until the field is band-limited and unit-norm
// to grid tolerance; ends on a projection so the sphere constraint is exact
VectorField3 reconcile(VectorField3 u, int cutoff) {
    for (int it = 0; it < 12; ++it) {
        VectorField3 t;
        for (int i = 0; i < 3; ++i) t.c[i] = truncate_modes(u.c[i], cutoff);
        VectorField3 next = project_to_sphere(t);
        const double delta = std::sqrt(l2_dist_sq(next, u));
        u = std::move(next);
        if (delta < 1e-13) break;
    }
    return u;
}

VectorField3 random_smooth(const InitialParams& p, const Grid& g) {
    PhiloxRng rng(p.seed, 0x494e4954u);  // dedicated initial-data stream
    VectorField3 u(g);
    for (int i = 0; i < 3; ++i) u.c[i] = ScalarField(g, i == 2 ? 1.0 : 0.0);
    // band-limited random perturbation with smoothly decaying spectrum
    for (int i = 0; i < 3; ++i) {
        for (int k2 = 0; k2 <= p.kmax; ++k2) {
            const int k1lo = (k2 == 0) ? 0 : -p.kmax;
            for (int k1 = k1lo; k1 <= p.kmax; ++k1) {
                if (k1 == 0 && k2 == 0) continue;
                const double ksq = double(k1) * k1 + double(k2) * k2;
                if (ksq > double(p.kmax) * p.kmax) continue;
                const double amp = p.amplitude * std::exp(-0.5 * ksq) / (p.kmax);
                const double ac = amp * rng.gaussian();
                const double as = amp * rng.gaussian();
                for (int i1 = 0; i1 < g.n; ++i1)
                    for (int i2 = 0; i2 < g.n; ++i2) {
                        const double ph = k1 * g.x1(i1) + k2 * g.x2(i2);
                        u.c[i].v[g.idx(i1, i2)] += ac * std::cos(ph) + as * std::sin(ph);
                    }
            }
        }
    }
    if (u.min_norm() < 0.5)
        throw BadParamsError("random_smooth: amplitude too large, field passes near zero");
    return reconcile(std::move(u), g.dealias_cutoff());
}

VectorField3 concentrated(const InitialParams& p, const Grid& g) {
    if (!(p.eps > 0.0)) throw BadParamsError("concentrated: eps must be positive");
    VectorField3 u(g);
    for (int i1 = 0; i1 < g.n; ++i1)
        for (int i2 = 0; i2 < g.n; ++i2) {
            const double X = torus_delta(g.x1(i1), p.center_x1);
            const double Y = torus_delta(g.x2(i2), p.center_x2);
            const double r2 = X * X + Y * Y;
            const double den = r2 + p.eps * p.eps;
            const int q = g.idx(i1, i2);
            u.c[0].v[q] = 2.0 * p.eps * X / den;
            u.c[1].v[q] = 2.0 * p.eps * Y / den;
            u.c[2].v[q] = (r2 - p.eps * p.eps) / den;
        }
    return reconcile(std::move(u), g.dealias_cutoff());
}

}  // namespace

VectorField3 make_initial(const std::string& kind, const InitialParams& params, const Grid& grid) {
    if (kind == "constant") {
        VectorField3 u(grid);
        u.c[2] = ScalarField(grid, 1.0);
        return u;
    }
    if (kind == "equator") {
        VectorField3 u(grid);
        u.c[0] = ScalarField::sample(grid, [](double x1, double) { return std::cos(x1); });
        u.c[1] = ScalarField::sample(grid, [](double x1, double) { return std::sin(x1); });
        return u;
    }
    if (kind == "random_smooth") return random_smooth(params, grid);
    if (kind == "concentrated") return concentrated(params, grid);
    throw BadParamsError("unknown initial data kind: " + kind);
}

}  // namespace sllg
