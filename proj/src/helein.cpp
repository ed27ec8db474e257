#include "sllg/helein.hpp"

#include <cmath>

#include "sllg/errors.hpp"

namespace sllg {

// defined in integrator.cpp; declared here to avoid the include cycle
VectorField3 tension(const VectorField3& u);

std::array<std::array<ScalarField, 2>, 3> gradient3(const VectorField3& u) {
    std::array<std::array<ScalarField, 2>, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = gradient(u.c[i]);
    return d;
}

TensorField32 helein_tensor(const VectorField3& u) {
    const Grid& g = u.grid();
    auto d = gradient3(u);
    TensorField32 A(g);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;  // diagonal vanishes identically
            for (int k = 0; k < 2; ++k) {
                ScalarField& out = A.at(i, j, k);
                for (int p = 0; p < g.size(); ++p)
                    out.v[p] = u.c[i].v[p] * d[j][k].v[p] - u.c[j].v[p] * d[i][k].v[p];
            }
        }
    return A;
}

VectorField3 tensor_contract(const TensorField32& A,
                             const std::array<std::array<ScalarField, 2>, 3>& f) {
    VectorField3 out(A.grid);
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j)
            for (int k = 0; k < 2; ++k) {
                const ScalarField& a = A.at(i, j, k);
                const ScalarField& b = f[j][k];
                for (int p = 0; p < A.grid.size(); ++p) out.c[i].v[p] += a.v[p] * b.v[p];
            }
    return out;
}

HeleinSplit helmholtz_split(const TensorField32& A) {
    HeleinSplit sp;
    sp.grid = A.grid;
    sp.alpha.assign(9, ScalarField(A.grid));
    sp.beta.assign(9, ScalarField(A.grid));
    double res_sq = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            std::array<ScalarField, 2> v = {A.at(i, j, 0), A.at(i, j, 1)};
            for (int k = 0; k < 2; ++k) {
                const double m = v[k].mean();
                sp.mean[std::size_t(i * 3 + j) * 2 + k] = m;
                for (double& x : v[k].v) x -= m;
            }
            ScalarField a = poisson_solve(divergence(v));
            ScalarField b = poisson_solve(curl2(v));
            auto ga = gradient(a);
            auto pb = perp_gradient(b);
            for (int k = 0; k < 2; ++k)
                for (int p = 0; p < A.grid.size(); ++p) {
                    const double d = v[k].v[p] - ga[k].v[p] - pb[k].v[p];
                    res_sq += d * d;
                }
            sp.alpha_at(i, j) = std::move(a);
            sp.beta_at(i, j) = std::move(b);
        }
    sp.reconstruction_residual = std::sqrt(res_sq * A.grid.cell_area());
    return sp;
}

HeleinSample helein_sample(const VectorField3& u) {
    const Grid& g = u.grid();
    HeleinSample out;

    VectorField3 lap;
    for (int i = 0; i < 3; ++i) lap.c[i] = laplacian(u.c[i]);

    TensorField32 A = helein_tensor(u);
    HeleinSplit sp = helmholtz_split(A);
    out.reconstruction_residual = sp.reconstruction_residual;

    double lap_sq = 0.0;
    for (int i = 0; i < 3; ++i) lap_sq += l2_norm_sq(lap.c[i]);
    const double scale = 1.0 + std::sqrt(lap_sq);

    double res_sq = 0.0;
    for (int i = 0; i < 3; ++i)
        for (int j = 0; j < 3; ++j) {
            if (i == j) continue;
            ScalarField div_a = divergence({A.at(i, j, 0), A.at(i, j, 1)});
            out.delta_alpha_sq += l2_norm_sq(div_a);
            Spectrum bh = analyze(sp.beta_at(i, j));
            out.beta_grad_sq += grad_norm_sq(bh);
            for (int p = 0; p < g.size(); ++p) {
                const double exact = u.c[i].v[p] * lap.c[j].v[p] - u.c[j].v[p] * lap.c[i].v[p];
                const double d = div_a.v[p] - exact;
                res_sq += d * d;
            }
        }
    out.div_residual_scaled = std::sqrt(res_sq * g.cell_area()) / scale;
    return out;
}

AlphaTensionReport alpha_tension_bound(const std::vector<VectorField3>& samples, double dt) {
    if (samples.empty()) throw BadParamsError("alpha_tension_bound: no samples");
    AlphaTensionReport rep;
    for (const auto& u : samples) {
        HeleinSample hs = helein_sample(u);
        rep.int_delta_alpha_sq += dt * hs.delta_alpha_sq;
        rep.max_div_residual_scaled = std::max(rep.max_div_residual_scaled,
                                               hs.div_residual_scaled);
        VectorField3 tau = tension(u);
        double ts = 0.0;
        for (int i = 0; i < 3; ++i) ts += l2_norm_sq(tau.c[i]);
        rep.int_tension_sq += dt * ts;
    }
    rep.ratio = rep.int_tension_sq > 0.0 ? rep.int_delta_alpha_sq / rep.int_tension_sq : 0.0;
    return rep;
}

WenteOperator wente_operator_from_string(const std::string& s) {
    if (s == "shifted" || s == "I-lap") return WenteOperator::ShiftedLaplacian;
    if (s == "literal" || s == "I+lap") return WenteOperator::LiteralPlus;
    if (s == "laplacian") return WenteOperator::PureLaplacian;
    throw ConfigError("unknown Wente operator mode: " + s);
}

WenteResult wente_solve(const ScalarField& a, const ScalarField& b, WenteOperator op) {
    if (a.grid != b.grid) throw GridMismatchError();
    const ScalarField a1 = derivative(a, 0), a2 = derivative(a, 1);
    const ScalarField b1 = derivative(b, 0), b2 = derivative(b, 1);
    ScalarField rhs = dealias_product(a1, b2) - dealias_product(a2, b1);

    WenteResult out;
    if (op == WenteOperator::PureLaplacian) {
        out.phi = poisson_solve(rhs);
    } else {
        Spectrum s = analyze(rhs);
        const int n = s.grid.n;
        const int cols = s.cols();
        const double rhs_scale = std::max(1.0, std::sqrt(l2_norm_sq(rhs)));
        for (int p1 = 0; p1 < n; ++p1) {
            const int k1 = s.k1_of(p1);
            for (int p2 = 0; p2 < cols; ++p2) {
                std::complex<double>& z = s.c[std::size_t(p1) * cols + p2];
                const double ksq = double(k1) * k1 + double(p2) * p2;
                if (op == WenteOperator::ShiftedLaplacian) {
                    z /= 1.0 + ksq;
                } else {
                    if (ksq == 1.0) {
                        if (std::abs(z) > 1e-12 * rhs_scale) throw SingularModeError(k1, p2);
                        z = 0.0;
                    } else {
                        z /= 1.0 - ksq;
                    }
                }
            }
        }
        out.phi = synthesize(s);
    }

    out.sup_norm = linf_norm(out.phi);
    out.grad_norm = std::sqrt(grad_norm_sq(analyze(out.phi)));
    const double ga = std::sqrt(grad_norm_sq(analyze(a)));
    const double gb = std::sqrt(grad_norm_sq(analyze(b)));
    out.ratio = (ga > 0.0 && gb > 0.0) ? (out.sup_norm + out.grad_norm) / (ga * gb) : 0.0;
    return out;
}

GainSeries gain_series(const TrajectoryRecord& rec, const NoiseModel& model) {
    GainSeries gs;
    gs.t = rec.series("t");
    const std::vector<double> E = rec.series("energy");
    const double cphi = model.c_phi();
    gs.g.resize(gs.t.size());
    for (std::size_t i = 0; i < gs.t.size(); ++i) gs.g[i] = E[i] - cphi * gs.t[i];
    return gs;
}

}  // namespace sllg
