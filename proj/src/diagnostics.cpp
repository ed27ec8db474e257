#include "sllg/diagnostics.hpp"

#include <algorithm>
#include <cmath>

#include "sllg/errors.hpp"

namespace sllg {

double energy(const VectorField3& u) {
    double acc = 0.0;
    for (int i = 0; i < 3; ++i) acc += grad_norm_sq(analyze(u.c[i]));
    return 0.5 * acc;
}

std::vector<double> martingale_residual(const TrajectoryRecord& rec, const NoiseModel& model) {
    const auto t = rec.series("t");
    const auto E = rec.series("energy");
    const auto I = rec.series("tension_sq_int");
    const double cphi = model.c_phi();
    std::vector<double> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i) out[i] = E[i] - E[0] + I[i] - cphi * t[i];
    return out;
}

std::vector<double> qv_estimate(const TrajectoryRecord& rec) { return rec.series("qv_int"); }

int EnsembleSummary::quantity_index(const std::string& name) const {
    for (std::size_t i = 0; i < quantities.size(); ++i)
        if (quantities[i] == name) return int(i);
    throw BadParamsError("no such summary quantity: " + name);
}

EnsembleSummary summarize(const std::vector<TrajectoryRecord>& records,
                          const std::vector<std::string>& quantities) {
    if (records.empty()) throw BadParamsError("summarize: empty ensemble");
    EnsembleSummary s;
    s.count = records.size();
    s.times = records[0].series("t");
    s.quantities = quantities;
    const std::size_t nt = s.times.size();
    for (const auto& r : records)
        if (r.rows() != nt) throw BadParamsError("summarize: trajectories have unequal sampling");

    const double M = double(records.size());
    for (const auto& q : quantities) {
        std::vector<double> mean(nt, 0.0), se(nt, 0.0), ci(nt, 0.0);
        std::vector<std::vector<double>> cols;
        cols.reserve(records.size());
        for (const auto& r : records) cols.push_back(r.series(q));
        for (std::size_t i = 0; i < nt; ++i) {
            double m = 0.0;
            for (const auto& c : cols) m += c[i];
            m /= M;
            double var = 0.0;
            for (const auto& c : cols) var += (c[i] - m) * (c[i] - m);
            var = records.size() > 1 ? var / (M - 1.0) : 0.0;
            mean[i] = m;
            se[i] = std::sqrt(var / M);
            ci[i] = kZ99 * se[i];
        }
        s.mean.push_back(std::move(mean));
        s.std_err.push_back(std::move(se));
        s.ci_half.push_back(std::move(ci));
    }
    return s;
}

namespace {

std::size_t nearest_index(const std::vector<double>& times, double t) {
    std::size_t best = 0;
    for (std::size_t i = 1; i < times.size(); ++i)
        if (std::fabs(times[i] - t) < std::fabs(times[best] - t)) best = i;
    return best;
}

SupermartingaleVerdict increment_verdict(const std::vector<double>& incs, double s, double t,
                                         double slack) {
    SupermartingaleVerdict v;
    v.s = s;
    v.t = t;
    v.mean_increment = sample_mean(incs);
    v.std_err = incs.size() > 1 ? std::sqrt(sample_variance(incs) / double(incs.size())) : 0.0;
    v.upper_ci = v.mean_increment + kZ99 * v.std_err;
    v.pass = v.upper_ci <= slack;
    return v;
}

}  // namespace

SupermartingaleReport supermartingale_test(const std::vector<GainSeries>& ensemble,
                                           const std::vector<double>& sample_times,
                                           double slack, int bins) {
    if (ensemble.size() < kMinEnsemble)
        throw InsufficientEnsembleError(ensemble.size(), kMinEnsemble);
    SupermartingaleReport rep;
    rep.bins = bins;
    rep.pass = true;
    const auto& tgrid = ensemble[0].t;
    for (std::size_t a = 0; a < sample_times.size(); ++a)
        for (std::size_t b = a + 1; b < sample_times.size(); ++b) {
            const std::size_t is = nearest_index(tgrid, sample_times[a]);
            const std::size_t it = nearest_index(tgrid, sample_times[b]);
            if (is >= it) continue;
            std::vector<double> incs(ensemble.size());
            std::vector<double> at_s(ensemble.size());
            for (std::size_t m = 0; m < ensemble.size(); ++m) {
                incs[m] = ensemble[m].g[it] - ensemble[m].g[is];
                at_s[m] = ensemble[m].g[is];
            }
            rep.pairs.push_back(increment_verdict(incs, tgrid[is], tgrid[it], slack));
            rep.pass = rep.pass && rep.pairs.back().pass;

            // conditional variant: bin on G(s) quantiles
            std::vector<std::size_t> order(ensemble.size());
            for (std::size_t m = 0; m < order.size(); ++m) order[m] = m;
            std::sort(order.begin(), order.end(),
                      [&](std::size_t x, std::size_t y) { return at_s[x] < at_s[y]; });
            std::vector<SupermartingaleVerdict> cond;
            for (int bin = 0; bin < bins; ++bin) {
                const std::size_t lo = bin * order.size() / bins;
                const std::size_t hi = (bin + 1) * order.size() / bins;
                if (hi <= lo) continue;
                std::vector<double> sub;
                for (std::size_t q = lo; q < hi; ++q) sub.push_back(incs[order[q]]);
                cond.push_back(increment_verdict(sub, tgrid[is], tgrid[it], slack));
            }
            rep.conditional.push_back(std::move(cond));
        }
    return rep;
}

double c0_ratio(const ScalarField& f) {
    const double l4 = lp_norm(f, 4.0);
    const double quartic = l4 * l4 * l4 * l4;
    const double l2sq = l2_norm_sq(f);
    const double gsq = grad_norm_sq(analyze(f));
    if (l2sq == 0.0 || gsq == 0.0) return 0.0;
    return quartic / (l2sq * gsq);
}

namespace {

// one coefficient set, realized on any grid: zero-mean band-limited field
struct RandomBandField {
    struct Term {
        int k1, k2;
        double ac, as;
    };
    std::vector<Term> terms;

    static RandomBandField draw(PhiloxRng& rng, int kmax) {
        RandomBandField f;
        for (int k2 = 0; k2 <= kmax; ++k2) {
            const int k1lo = (k2 == 0) ? 1 : -kmax;
            for (int k1 = k1lo; k1 <= kmax; ++k1) {
                if (k1 * k1 + k2 * k2 > kmax * kmax) continue;
                const double decay = std::pow(1.0 + k1 * k1 + k2 * k2, -0.5);
                f.terms.push_back({k1, k2, decay * rng.gaussian(), decay * rng.gaussian()});
            }
        }
        return f;
    }

    ScalarField realize(const Grid& g) const {
        Spectrum s(g);
        for (const auto& t : terms) {
            const int a1 = (t.k1 + g.n) % g.n;
            const std::complex<double> c(t.ac / 2.0, -t.as / 2.0);
            s.at(a1, t.k2) += c;
            if (t.k2 == 0) s.at((g.n - t.k1) % g.n, 0) += std::conj(c);
        }
        return synthesize(s);
    }
};

}  // namespace

ConstantEstimate estimate_C0(int sample_count, const std::vector<int>& grid_sizes,
                             std::uint64_t seed) {
    ConstantEstimate est;
    est.name = "C0";
    est.grid_sizes = grid_sizes;
    est.per_grid.assign(grid_sizes.size(), 0.0);
    PhiloxRng rng(seed, 0xC0C0C0C0u);
    for (int s = 0; s < sample_count; ++s) {
        RandomBandField f = RandomBandField::draw(rng, 6);
        for (std::size_t gi = 0; gi < grid_sizes.size(); ++gi) {
            Grid g(grid_sizes[gi]);
            est.per_grid[gi] = std::max(est.per_grid[gi], c0_ratio(f.realize(g)));
        }
    }
    est.value = *std::max_element(est.per_grid.begin(), est.per_grid.end());
    const double lo = *std::min_element(est.per_grid.begin(), est.per_grid.end());
    est.stability_ratio = lo > 0.0 ? est.value / lo : 0.0;
    return est;
}

double c1_ratio(const VectorField3& u, const BubbleMonitor& monitor, double rho) {
    double grad_sq = 0.0, hess_sq = 0.0, grad_l4_4 = 0.0;
    {
        std::array<Spectrum, 3> uh = analyze3(u);
        for (int i = 0; i < 3; ++i) {
            grad_sq += grad_norm_sq(uh[i]);
            hess_sq += hess_norm_sq(uh[i]);
        }
        const double l4 = l4_gradient_norm(u);
        grad_l4_4 = l4 * l4 * l4 * l4;
    }
    if (grad_sq <= 0.0) return 0.0;  // degenerate (constant) input skipped
    const double loc = monitor.local_energy_sup(u).value;
    if (loc <= 0.0) return 0.0;
    return grad_l4_4 / (loc * (hess_sq + grad_sq / (rho * rho)));
}

C1Estimate estimate_C1(const std::vector<std::vector<VectorField3>>& per_grid_samples,
                       const std::vector<int>& grid_sizes, const std::vector<double>& rhos,
                       bool sharp_windows) {
    if (per_grid_samples.size() != grid_sizes.size())
        throw BadParamsError("estimate_C1: samples/grid mismatch");
    C1Estimate out;
    out.estimate.name = "C1";
    out.estimate.grid_sizes = grid_sizes;
    out.estimate.per_grid.assign(grid_sizes.size(), 0.0);
    for (std::size_t gi = 0; gi < grid_sizes.size(); ++gi) {
        Grid g(grid_sizes[gi]);
        for (double rho : rhos) {
            BubbleMonitor monitor(build_cover(g, rho), sharp_windows);
            for (const auto& u : per_grid_samples[gi])
                out.estimate.per_grid[gi] =
                    std::max(out.estimate.per_grid[gi], c1_ratio(u, monitor, rho));
        }
    }
    out.estimate.value =
        *std::max_element(out.estimate.per_grid.begin(), out.estimate.per_grid.end());
    const double lo = *std::min_element(out.estimate.per_grid.begin(), out.estimate.per_grid.end());
    out.estimate.stability_ratio = lo > 0.0 ? out.estimate.value / lo : 0.0;
    out.eps1_star = out.estimate.value > 0.0 ? 1.0 / out.estimate.value : 0.0;
    return out;
}

std::vector<double> local_dissipation_defect(const TrajectoryRecord& rec,
                                             const WindowKernel& window,
                                             const NoiseModel& model) {
    const auto t = rec.series("t");
    const auto w = rec.series("window_half_sq");
    const auto gint = rec.series("gradsq_int");
    const double inj = model.c_phi_windowed(window.eta_sq());
    const double c = window.grad_bound_const * window.grad_bound_const / (window.rho * window.rho);
    std::vector<double> out(t.size());
    for (std::size_t i = 0; i < t.size(); ++i)
        out[i] = w[i] - w[0] - t[i] * inj - c * gint[i];
    return out;
}

LocalDissipationReport local_dissipation_check(const std::vector<TrajectoryRecord>& records,
                                               const WindowKernel& window,
                                               const NoiseModel& model, double slack) {
    if (records.size() < kMinEnsemble)
        throw InsufficientEnsembleError(records.size(), kMinEnsemble);
    LocalDissipationReport rep;
    rep.slack = slack;
    rep.times = records[0].series("t");
    const std::size_t nt = rep.times.size();
    std::vector<std::vector<double>> defects;
    defects.reserve(records.size());
    for (const auto& r : records) defects.push_back(local_dissipation_defect(r, window, model));
    rep.mean_defect.assign(nt, 0.0);
    rep.ci_half.assign(nt, 0.0);
    rep.pass = true;
    for (std::size_t i = 0; i < nt; ++i) {
        std::vector<double> col(records.size());
        for (std::size_t m = 0; m < records.size(); ++m) col[m] = defects[m][i];
        rep.mean_defect[i] = sample_mean(col);
        rep.ci_half[i] = kZ99 * std::sqrt(sample_variance(col) / double(col.size()));
        rep.pass = rep.pass && rep.mean_defect[i] <= rep.ci_half[i] + slack;
    }
    return rep;
}

double sample_mean(const std::vector<double>& xs) {
    double s = 0.0;
    for (double x : xs) s += x;
    return s / double(xs.size());
}

double sample_variance(const std::vector<double>& xs) {
    if (xs.size() < 2) return 0.0;
    const double m = sample_mean(xs);
    double s = 0.0;
    for (double x : xs) s += (x - m) * (x - m);
    return s / double(xs.size() - 1);
}

double bootstrap_variance_se(const std::vector<double>& xs, int resamples, std::uint64_t seed) {
    PhiloxRng rng(seed, 0xB007u);
    std::vector<double> vars(resamples);
    std::vector<double> draw(xs.size());
    for (int r = 0; r < resamples; ++r) {
        for (std::size_t i = 0; i < xs.size(); ++i) {
            const std::size_t j = std::size_t(rng.uniform() * xs.size()) % xs.size();
            draw[i] = xs[j];
        }
        vars[r] = sample_variance(draw);
    }
    return std::sqrt(sample_variance(vars));
}

}  // namespace sllg
