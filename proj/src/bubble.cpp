#include "sllg/bubble.hpp"

#include <cmath>

#include "sllg/errors.hpp"

namespace sllg {

BallCover build_cover(const Grid& grid, double rho, double lambda) {
    const double limit = (kTwoPi / 2.0) / lambda;
    if (!(rho > 0.0) || rho > limit * (1.0 + 1e-12))
        throw RadiusOutOfRangeError(rho, limit);
    BallCover cov;
    cov.grid = grid;
    cov.rho = rho;
    cov.lambda = lambda;
    cov.per_axis = int(std::ceil(kTwoPi / rho - 1e-9));
    for (int i = 0; i < cov.per_axis; ++i)
        for (int j = 0; j < cov.per_axis; ++j) {
            // sublattice of spacing <= rho, snapped to grid points
            int g1 = int(std::lround(double(i) * grid.n / cov.per_axis)) % grid.n;
            int g2 = int(std::lround(double(j) * grid.n / cov.per_axis)) % grid.n;
            cov.centers.emplace_back(g1, g2);
        }
    return cov;
}

namespace {

// quintic smoothstep, C^2 at both ends
inline double smooth5(double t) { return t * t * t * (10.0 + t * (-15.0 + 6.0 * t)); }

double bump_profile(double r, double rho, double lambda, bool sharp) {
    if (sharp) return r <= rho ? 1.0 : 0.0;
    const double inner = lambda * rho, outer = 2.0 * lambda * rho;
    if (r <= inner) return 1.0;
    if (r >= outer) return 0.0;
    return 1.0 - smooth5((r - inner) / (outer - inner));
}

}  // namespace

WindowKernel make_window(const Grid& grid, double cx1, double cx2, double rho, double lambda,
                         bool sharp) {
    if (!(rho > 0.0)) throw RadiusOutOfRangeError(rho, kTwoPi / 2.0 / lambda);
    WindowKernel w;
    w.rho = rho;
    w.lambda = lambda;
    w.sharp = sharp;
    w.support_radius = sharp ? rho : 2.0 * lambda * rho;
    w.grad_bound_const = sharp ? 0.0 : 15.0 / (8.0 * lambda);
    w.eta = ScalarField::sample(grid, [&](double x1, double x2) {
        return bump_profile(torus_dist(x1, x2, cx1, cx2), rho, lambda, sharp);
    });
    return w;
}

BubbleMonitor::BubbleMonitor(const BallCover& cover, bool sharp) : cover_(cover) {
    WindowKernel w = make_window(cover.grid, 0.0, 0.0, cover.rho, cover.lambda, sharp);
    profile_hat_ = analyze(w.eta_sq());
}

LocalEnergy BubbleMonitor::local_energy_sup(const Spectrum& grad_sq_hat) const {
    // int eta^2(y - c) g(y) dy  =  4pi^2 * ifft(what * ghat)(c) for the
    // radially symmetric profile (real, even spectrum)
    Spectrum prod = grad_sq_hat;
    for (std::size_t i = 0; i < prod.c.size(); ++i) prod.c[i] *= profile_hat_.c[i];
    ScalarField corr = synthesize(prod);
    LocalEnergy best;
    for (int i = 0; i < cover_.count(); ++i) {
        const double val = kTorusArea * corr(cover_.centers[i].first, cover_.centers[i].second);
        if (val > best.value || best.center_index < 0) {
            best.value = val;
            best.center_index = i;
        }
    }
    return best;
}

LocalEnergy BubbleMonitor::local_energy_sup(const VectorField3& u) const {
    if (u.grid() != cover_.grid) throw GridMismatchError();
    ScalarField gsq(u.grid());
    for (int i = 0; i < 3; ++i) {
        auto d = gradient(u.c[i]);
        for (int p = 0; p < u.grid().size(); ++p)
            gsq.v[p] += d[0].v[p] * d[0].v[p] + d[1].v[p] * d[1].v[p];
    }
    return local_energy_sup(analyze(gsq));
}

std::optional<std::size_t> detect_stop(const std::vector<double>& local_sup_series, double eps1) {
    if (!(eps1 > 0.0)) throw BadParamsError("detect_stop: eps1 must be positive");
    for (std::size_t i = 0; i < local_sup_series.size(); ++i)
        if (local_sup_series[i] >= eps1) return i;
    return std::nullopt;
}

VectorField3 restart_data(const VectorField3& u, int cutoff) {
    // Low-pass and re-projection fight each other slightly; iterate to a
    // joint fixed point so restart is idempotent at grid tolerance.
    VectorField3 w = u;
    for (int it = 0; it < 8; ++it) {
        VectorField3 lp;
        for (int i = 0; i < 3; ++i) lp.c[i] = truncate_modes(w.c[i], cutoff);
        const double mn = lp.min_norm();
        if (mn < 0.5) {
            // heavy truncation can collapse the modulus; keep the projected
            // low-pass of the original data instead of iterating further
            if (it == 0) throw NormCollapseError(-1, mn);
            break;
        }
        VectorField3 next = project_to_sphere(lp);
        const double delta = std::sqrt(l2_dist_sq(next, w));
        w = std::move(next);
        if (delta < 1e-12) break;
    }
    return w;
}

int count_events(const std::vector<BlowupEvent>& ledger, double t) {
    int n = 0;
    for (const auto& ev : ledger)
        if (ev.time < t) ++n;
    return n;
}

bool bound_check(double mean_events, double eps1, double energy0, double c_phi, double T) {
    return mean_events <= (2.0 * energy0 + c_phi * T) / eps1;
}

}  // namespace sllg
