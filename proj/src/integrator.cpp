#include "sllg/integrator.hpp"

#include <cmath>

#include "sllg/errors.hpp"
#include "sllg/helein.hpp"

namespace sllg {

SchemeKind scheme_kind_from_string(const std::string& s) {
    if (s == "explicit-EM" || s == "explicit-em") return SchemeKind::ExplicitEM;
    if (s == "semi-implicit-EM" || s == "semi-implicit-em") return SchemeKind::SemiImplicitEM;
    if (s == "exponential-mild") return SchemeKind::ExponentialMild;
    throw ConfigError("unknown scheme kind: " + s);
}

std::string to_string(SchemeKind k) {
    switch (k) {
        case SchemeKind::ExplicitEM: return "explicit-EM";
        case SchemeKind::SemiImplicitEM: return "semi-implicit-EM";
        default: return "exponential-mild";
    }
}

namespace {

// Per-step pass over one state: spectra and diagnostics of u(t) plus the
// advanced field before noise/projection.  Shared by step/evolve/tension.
struct CorePass {
    std::array<Spectrum, 3> u_hat;
    std::array<std::array<ScalarField, 2>, 3> du;  // dealias-truncated derivatives
    ScalarField grad_sq;                           // |grad u|^2 pointwise
    Spectrum grad_sq_hat;                          // untruncated, for window quadrature
    std::array<Spectrum, 3> cubic_hat;             // dealiased u |grad u|^2
    double tension_sq = 0.0;
    double grad_norm2 = 0.0;  // ||grad u||_{L2}^2
};

CorePass core_pass(const VectorField3& u) {
    const Grid& g = u.grid();
    const int kc = g.dealias_cutoff();
    CorePass cp;
    cp.u_hat = analyze3(u);

    for (int i = 0; i < 3; ++i)
        for (int ax = 0; ax < 2; ++ax) {
            Spectrum s = cp.u_hat[i];
            apply_derivative(s, ax);
            truncate(s, kc);
            cp.du[i][ax] = synthesize(s);
        }

    cp.grad_sq = ScalarField(g);
    for (int p = 0; p < g.size(); ++p) {
        double acc = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int ax = 0; ax < 2; ++ax) acc += cp.du[i][ax].v[p] * cp.du[i][ax].v[p];
        cp.grad_sq.v[p] = acc;
    }
    cp.grad_sq_hat = analyze(cp.grad_sq);

    Spectrum gt = cp.grad_sq_hat;
    truncate(gt, kc);
    ScalarField grad_sq_t = synthesize(gt);

    for (int i = 0; i < 3; ++i) {
        Spectrum ut = cp.u_hat[i];
        truncate(ut, kc);
        ScalarField u_t = synthesize(ut);
        Spectrum ch = analyze(pointwise(u_t, grad_sq_t));
        truncate(ch, kc);
        cp.cubic_hat[i] = std::move(ch);
    }

    for (int i = 0; i < 3; ++i) {
        Spectrum tau = cp.u_hat[i];
        apply_laplacian(tau);
        for (std::size_t m = 0; m < tau.c.size(); ++m) tau.c[m] += cp.cubic_hat[i].c[m];
        cp.tension_sq += parseval_norm_sq(tau);
        cp.grad_norm2 += grad_norm_sq(cp.u_hat[i]);
    }
    return cp;
}

// u(t+dt) before the noise increment and projection
VectorField3 advance_drift(const CorePass& cp, const NoiseModel& model, const StepScheme& sc) {
    const Grid& g = cp.u_hat[0].grid;
    const int n = g.n;
    const int cols = n / 2 + 1;
    const double dt = sc.dt;
    const double fphi = (sc.ito_correction && model.sigma() > 0.0)
                            ? model.ito_correction_mean()
                            : 0.0;
    std::array<Spectrum, 3> out;
    for (int i = 0; i < 3; ++i) {
        Spectrum s(g);
        for (int a1 = 0; a1 < n; ++a1) {
            const int k1 = a1 <= n / 2 ? a1 : a1 - n;
            for (int a2 = 0; a2 < cols; ++a2) {
                const std::size_t m = std::size_t(a1) * cols + a2;
                const double ksq = double(k1) * k1 + double(a2) * a2;
                const std::complex<double> uh = cp.u_hat[i].c[m];
                const std::complex<double> nh = cp.cubic_hat[i].c[m] + fphi * uh;
                std::complex<double> z;
                switch (sc.kind) {
                    case SchemeKind::ExplicitEM: {
                        // explicit laplacian follows the public operator
                        // (Nyquist modes dropped)
                        const double lap =
                            (a1 == n / 2 || a2 == n / 2) ? 0.0 : -ksq;
                        z = uh + dt * (lap * uh + nh);
                        break;
                    }
                    case SchemeKind::SemiImplicitEM:
                        z = (uh + dt * nh) / (1.0 + dt * ksq);
                        break;
                    default:
                        z = std::exp(-ksq * dt) * (uh + dt * nh);
                }
                s.c[m] = z;
            }
        }
        out[i] = std::move(s);
    }
    return synthesize3(out);
}

// div(u x grad u) as three half-spectra, from fields already in hand
std::array<Spectrum, 3> div_u_cross_grad(const VectorField3& u, const CorePass& cp) {
    const Grid& g = u.grid();
    std::array<Spectrum, 3> out;
    for (int i = 0; i < 3; ++i) {
        const int j = (i + 1) % 3, k = (i + 2) % 3;
        std::array<Spectrum, 2> vh;
        for (int ax = 0; ax < 2; ++ax) {
            ScalarField v(g);
            for (int p = 0; p < g.size(); ++p)
                v.v[p] = u.c[j].v[p] * cp.du[k][ax].v[p] - u.c[k].v[p] * cp.du[j][ax].v[p];
            vh[ax] = analyze(v);
            apply_derivative(vh[ax], ax);
        }
        for (std::size_t m = 0; m < vh[0].c.size(); ++m) vh[0].c[m] += vh[1].c[m];
        out[i] = std::move(vh[0]);
    }
    return out;
}

}  // namespace

VectorField3 tension(const VectorField3& u) {
    CorePass cp = core_pass(u);
    std::array<Spectrum, 3> tau;
    for (int i = 0; i < 3; ++i) {
        tau[i] = cp.u_hat[i];
        apply_laplacian(tau[i]);
        for (std::size_t m = 0; m < tau[i].c.size(); ++m) tau[i].c[m] += cp.cubic_hat[i].c[m];
    }
    return synthesize3(tau);
}

VectorField3 tension_projected(const VectorField3& u) {
    VectorField3 lap;
    for (int i = 0; i < 3; ++i) lap.c[i] = laplacian(u.c[i]);
    ScalarField ul = dot(u, lap);
    VectorField3 out(u.grid());
    for (int i = 0; i < 3; ++i)
        for (int p = 0; p < u.grid().size(); ++p)
            out.c[i].v[p] = lap.c[i].v[p] - ul.v[p] * u.c[i].v[p];
    return out;
}

VectorField3 drift(const VectorField3& u, const NoiseModel& model) {
    VectorField3 tau = tension(u);
    if (model.sigma() == 0.0) return tau;
    ScalarField fphi = model.ito_correction_field();
    for (int i = 0; i < 3; ++i)
        for (int p = 0; p < u.grid().size(); ++p)
            tau.c[i].v[p] += fphi.v[p] * u.c[i].v[p];
    return tau;
}

namespace {

VectorField3 step_impl(const FlowState& state, const NoiseModel& model, const StepScheme& sc,
                       PhiloxRng& rng, const CorePass& cp) {
    VectorField3 u1 = advance_drift(cp, model, sc);
    if (model.sigma() > 0.0) {
        NoiseIncrement inc = model.sample_increment(sc.dt, rng);
        u1 += cross(state.u, inc.dW);
    }
    const double mn = u1.min_norm();
    if (!(mn >= 0.5)) {
        if (!u1.finite()) throw NonFiniteError(state.step_count);
        throw NormCollapseError(state.step_count, mn);
    }
    if (!u1.finite()) throw NonFiniteError(state.step_count);
    if (sc.projection) u1 = project_to_sphere(u1);
    return u1;
}

}  // namespace

FlowState step(const FlowState& state, const NoiseModel& model, const StepScheme& scheme) {
    if (scheme.dt <= 0.0) throw BadParamsError("step: dt must be positive");
    CorePass cp = core_pass(state.u);
    FlowState next = state;
    next.u = step_impl(state, model, scheme, next.rng, cp);
    next.step_count = state.step_count + 1;
    next.t = next.step_count * scheme.dt;
    return next;
}

const std::vector<std::string> kCoreColumns = {
    "t",         "energy",     "tension_sq", "tension_sq_int", "gain",
    "grad_l4_4", "hess_sq",    "local_sup",  "window_half_sq", "gradsq_int",
    "qv_int",    "min_norm",   "sphere_dev"};

const std::vector<std::string> kHeleinColumns = {"delta_alpha_sq", "beta_grad_sq",
                                                 "div_residual", "helein_residual"};

TrajectoryRecord evolve(const VectorField3& u0, const NoiseModel& model,
                        const StepScheme& scheme, double T, PhiloxRng rng,
                        const EvolveOptions& opts) {
    if (T <= 0.0) throw BadParamsError("evolve: T must be positive");
    const double steps_f = T / scheme.dt;
    const long steps = std::lround(steps_f);
    if (steps < 1 || std::fabs(steps_f - double(steps)) > 1e-9 * steps)
        throw BadParamsError("evolve: T must be an integral number of steps");

    const bool qv = opts.qv && model.sigma() > 0.0;
    const double cphi = model.c_phi();

    TrajectoryRecord rec;
    rec.columns = kCoreColumns;
    if (opts.helein)
        rec.columns.insert(rec.columns.end(), kHeleinColumns.begin(), kHeleinColumns.end());

    std::optional<ScalarField> window_sq;
    if (opts.window) window_sq = opts.window->eta_sq();

    FlowState state(u0, rng);
    double tension_sq_int = 0.0, gradsq_int = 0.0, qv_int = 0.0;
    int consecutive_restarts = 0;

    auto record_sample = [&](const CorePass& cp) {
        std::vector<double> row(rec.columns.size(), 0.0);
        const double E = 0.5 * cp.grad_norm2;
        row[0] = state.t;
        row[1] = E;
        row[2] = cp.tension_sq;
        row[3] = tension_sq_int;
        row[4] = E - cphi * state.t;
        double l4 = 0.0;
        for (int p = 0; p < state.u.grid().size(); ++p)
            l4 += cp.grad_sq.v[p] * cp.grad_sq.v[p];
        row[5] = l4 * state.u.grid().cell_area();
        double hess = 0.0;
        for (int i = 0; i < 3; ++i) hess += hess_norm_sq(cp.u_hat[i]);
        row[6] = hess;
        if (opts.monitor) row[7] = opts.monitor->local_energy_sup(cp.grad_sq_hat).value;
        if (window_sq) {
            double w = 0.0;
            for (int p = 0; p < state.u.grid().size(); ++p)
                w += window_sq->v[p] * cp.grad_sq.v[p];
            row[8] = 0.5 * w * state.u.grid().cell_area();
        }
        row[9] = gradsq_int;
        row[10] = qv_int;
        row[11] = state.u.min_norm();
        row[12] = state.u.max_sphere_deviation();
        if (opts.helein) {
            HeleinSample hs = helein_sample(state.u);
            row[13] = hs.delta_alpha_sq;
            row[14] = hs.beta_grad_sq;
            row[15] = hs.div_residual_scaled;
            row[16] = hs.reconstruction_residual;
        }
        rec.push_row(row);
    };

    while (true) {
        CorePass cp = core_pass(state.u);

        // stopping-time detection on the pre-step state
        if (opts.monitor && opts.monitor->eps1 &&
            state.step_count % opts.monitor->detection_stride == 0) {
            LocalEnergy le = opts.monitor->local_energy_sup(cp.grad_sq_hat);
            if (le.value >= *opts.monitor->eps1) {
                if (!opts.monitor->restart_enabled || consecutive_restarts >= 1 ||
                    int(rec.events.size()) >= opts.monitor->max_events) {
                    rec.stop_reason = consecutive_restarts >= 1 ? "persistent-concentration"
                                                                : "bubbling";
                    rec.stop_time = state.t;
                    record_sample(cp);
                    return rec;
                }
                BlowupEvent ev;
                ev.time = state.t;
                ev.center_x1 = opts.monitor->cover().center_x1(le.center_index);
                ev.center_x2 = opts.monitor->cover().center_x2(le.center_index);
                ev.local_energy = le.value;
                ev.energy_pre = 0.5 * cp.grad_norm2;
                ev.eps1 = *opts.monitor->eps1;
                ev.restart_cutoff = opts.monitor->restart_cutoff;
                ev.detection_stride = opts.monitor->detection_stride;
                state.u = restart_data(state.u, opts.monitor->restart_cutoff);
                CorePass cp2 = core_pass(state.u);
                ev.energy_post = 0.5 * cp2.grad_norm2;
                ev.energy_drop = ev.energy_pre - ev.energy_post;
                ev.quantum = ev.energy_drop >= ev.eps1;
                rec.events.push_back(ev);
                ++consecutive_restarts;
                continue;  // re-enter with the restarted field, clock unchanged
            }
            consecutive_restarts = 0;
        }

        if (state.step_count % opts.record_stride == 0 || state.step_count == steps)
            record_sample(cp);
        if (state.step_count == steps) break;

        tension_sq_int += scheme.dt * cp.tension_sq;
        gradsq_int += scheme.dt * cp.grad_norm2;
        if (qv) qv_int += scheme.dt * model.weighted_projection_sq(div_u_cross_grad(state.u, cp));

        state.u = step_impl(state, model, scheme, state.rng, cp);
        state.step_count += 1;
        state.t = state.step_count * scheme.dt;
    }
    return rec;
}

CoupledResult coupled_evolve(const VectorField3& u0, const VectorField3& v0,
                             const NoiseModel& model, const StepScheme& scheme, double T,
                             PhiloxRng rng, int record_stride) {
    if (u0.grid() != v0.grid()) throw GridMismatchError();
    const long steps = std::lround(T / scheme.dt);
    if (steps < 1 || std::fabs(T / scheme.dt - double(steps)) > 1e-9 * steps)
        throw BadParamsError("coupled_evolve: T must be an integral number of steps");

    CoupledResult out;
    out.u_record.columns = {"t", "energy", "grad_l4_4"};
    out.v_record.columns = {"t", "energy", "grad_l4_4"};

    FlowState su(u0, rng), sv(v0, rng);
    double budget = 0.0, growth = 0.0;

    auto sample = [&](const CorePass& cu, const CorePass& cv, double t) {
        out.t.push_back(t);
        out.dist_half_sq.push_back(0.5 * l2_dist_sq(su.u, sv.u));
        out.budget_int.push_back(budget);
        out.growth_int.push_back(growth);
        auto l4p4 = [](const CorePass& c, const Grid& g) {
            double a = 0.0;
            for (int p = 0; p < g.size(); ++p) a += c.grad_sq.v[p] * c.grad_sq.v[p];
            return a * g.cell_area();
        };
        out.u_record.push_row({t, 0.5 * cu.grad_norm2, l4p4(cu, su.u.grid())});
        out.v_record.push_row({t, 0.5 * cv.grad_norm2, l4p4(cv, sv.u.grid())});
    };

    for (long k = 0;; ++k) {
        CorePass cu = core_pass(su.u);
        CorePass cv = core_pass(sv.u);
        if (k % record_stride == 0 || k == steps) sample(cu, cv, k * scheme.dt);
        if (k == steps) break;

        auto l4p4 = [&](const CorePass& c) {
            double a = 0.0;
            for (int p = 0; p < su.u.grid().size(); ++p) a += c.grad_sq.v[p] * c.grad_sq.v[p];
            return a * su.u.grid().cell_area();
        };
        const double integrand = l4p4(cu) + l4p4(cv) + 1.0;
        budget += scheme.dt * integrand * 0.5 * l2_dist_sq(su.u, sv.u);
        growth += scheme.dt * integrand;

        VectorField3 nu = advance_drift(cu, model, scheme);
        VectorField3 nv = advance_drift(cv, model, scheme);
        if (model.sigma() > 0.0) {
            // one draw, shared by both trajectories (common stochastic basis)
            NoiseIncrement inc = model.sample_increment(scheme.dt, su.rng);
            nu += cross(su.u, inc.dW);
            nv += cross(sv.u, inc.dW);
        }
        for (VectorField3* w : {&nu, &nv}) {
            const double mn = w->min_norm();
            if (!w->finite()) throw NonFiniteError(k);
            if (mn < 0.5) throw NormCollapseError(k, mn);
        }
        if (scheme.projection) {
            nu = project_to_sphere(nu);
            nv = project_to_sphere(nv);
        }
        su.u = std::move(nu);
        sv.u = std::move(nv);
    }
    return out;
}

}  // namespace sllg
