#include "sllg/noise.hpp"

#include <cmath>
#include <sstream>

#include "sllg/errors.hpp"

namespace sllg {

namespace {
constexpr double kPi = 3.14159265358979323846;
// basis normalizations on [0,2pi)^2
constexpr double kConstBasis = 1.0 / kTwoPi;                 // e_0
const double kPairBasis = 1.0 / (kPi * std::sqrt(2.0));      // cos/sin modes
}  // namespace

NoiseModel NoiseModel::build(const Grid& grid, double sigma, double s, int cutoff) {
    if (sigma < 0.0) throw BadParamsError("noise amplitude must be nonnegative");
    if (cutoff < 0) throw BadParamsError("noise cutoff must be nonnegative");
    if (cutoff > grid.dealias_cutoff()) throw CutoffTooLargeError(cutoff, grid.dealias_cutoff());
    NoiseModel m;
    m.grid_ = grid;
    m.sigma_ = sigma;
    m.s_ = s;
    m.cutoff_ = cutoff;
    if (sigma == 0.0) return m;

    m.modes_.push_back({0, 0, NoiseMode::Constant, sigma});
    for (int k2 = 0; k2 <= cutoff; ++k2) {
        const int k1lo = (k2 == 0) ? 1 : -cutoff;
        for (int k1 = k1lo; k1 <= cutoff; ++k1) {
            if (k1 * k1 + k2 * k2 > cutoff * cutoff) continue;
            const double lam = sigma * std::pow(1.0 + k1 * k1 + k2 * k2, -s / 2.0);
            m.modes_.push_back({k1, k2, NoiseMode::Cos, lam});
            m.modes_.push_back({k1, k2, NoiseMode::Sin, lam});
        }
    }
    return m;
}

double NoiseModel::hs_norm(double s) const {
    double acc = 0.0;
    for (const auto& md : modes_) acc += md.lambda * md.lambda * std::pow(1.0 + md.ksq(), s);
    return acc;
}

double NoiseModel::c_phi() const {
    double acc = 0.0;
    for (const auto& md : modes_) acc += md.lambda * md.lambda * md.ksq();
    return acc;
}

ScalarField NoiseModel::ito_correction_field() const {
    ScalarField f(grid_);
    for (const auto& md : modes_) {
        const double l2 = md.lambda * md.lambda;
        if (md.kind == NoiseMode::Constant) {
            const double val = l2 * kConstBasis * kConstBasis;
            for (double& x : f.v) x -= val;
            continue;
        }
        for (int i1 = 0; i1 < grid_.n; ++i1)
            for (int i2 = 0; i2 < grid_.n; ++i2) {
                const double ph = md.k1 * grid_.x1(i1) + md.k2 * grid_.x2(i2);
                const double b = (md.kind == NoiseMode::Cos ? std::cos(ph) : std::sin(ph)) *
                                 kPairBasis;
                f.v[grid_.idx(i1, i2)] -= l2 * b * b;
            }
    }
    return f;
}

double NoiseModel::ito_correction_mean() const {
    // int e_l^2 = 1 for every basis member, so mean F_phi = -sum lambda^2 / area
    return -hs_norm(0.0) / kTorusArea;
}

NoiseIncrement NoiseModel::sample_increment(double dt, PhiloxRng& rng) const {
    if (dt <= 0.0) throw BadParamsError("sample_increment: dt must be positive");
    NoiseIncrement inc;
    inc.dt = dt;
    inc.dW = VectorField3(grid_);
    if (modes_.empty()) return inc;

    const double sq = std::sqrt(dt);
    const int n = grid_.n;
    for (int comp = 0; comp < 3; ++comp) {
        Spectrum sp(grid_);
        for (const auto& md : modes_) {
            const double g = rng.gaussian();
            const double amp = sq * md.lambda * g;
            if (md.kind == NoiseMode::Constant) {
                sp.at(0, 0) += amp * kConstBasis;
                continue;
            }
            const int a1 = (md.k1 + n) % n;
            // coefficient at +k is (g_cos - i g_sin)/2 times the basis scale
            const std::complex<double> c = md.kind == NoiseMode::Cos
                                               ? std::complex<double>(amp * kPairBasis / 2, 0.0)
                                               : std::complex<double>(0.0, -amp * kPairBasis / 2);
            sp.at(a1, md.k2) += c;
            // the k2 = 0 plane stores both halves; keep it Hermitian
            if (md.k2 == 0) sp.at((n - md.k1) % n, 0) += std::conj(c);
        }
        inc.dW.c[comp] = synthesize(sp);
    }
    return inc;
}

double NoiseModel::weighted_projection_sq(const Spectrum& g) const {
    const int n = grid_.n;
    double acc = 0.0;
    const double pair_scale = 2.0 * std::sqrt(2.0) * kPi;  // <g, cos_k e> = this * Re g_k
    for (const auto& md : modes_) {
        double proj;
        if (md.kind == NoiseMode::Constant) {
            proj = kTwoPi * g.at(0, 0).real();
        } else {
            const std::complex<double> z = g.at((md.k1 + n) % n, md.k2);
            proj = md.kind == NoiseMode::Cos ? pair_scale * z.real() : -pair_scale * z.imag();
        }
        acc += md.lambda * md.lambda * proj * proj;
    }
    return acc;
}

double NoiseModel::weighted_projection_sq(const std::array<Spectrum, 3>& g) const {
    return weighted_projection_sq(g[0]) + weighted_projection_sq(g[1]) +
           weighted_projection_sq(g[2]);
}

double NoiseModel::c_phi_windowed(const ScalarField& eta_sq) const {
    // complete cos/sin pairs make the local injection density constant,
    // c_phi / (4 pi^2)
    return c_phi() / kTorusArea * eta_sq.integral();
}

std::string NoiseModel::lambda_table_csv() const {
    std::ostringstream os;
    os << "k1,k2,kind,lambda\n";
    for (const auto& md : modes_) {
        const char* kind = md.kind == NoiseMode::Constant ? "const"
                           : md.kind == NoiseMode::Cos    ? "cos"
                                                          : "sin";
        char buf[64];
        std::snprintf(buf, sizeof buf, "%.17g", md.lambda);
        os << md.k1 << ',' << md.k2 << ',' << kind << ',' << buf << '\n';
    }
    return os.str();
}

}  // namespace sllg
