#include "sllg/spectral.hpp"

#include <fftw3.h>

#include <cmath>
#include <cstring>
#include <map>
#include <mutex>

#include "sllg/errors.hpp"

namespace sllg {

namespace {

// One r2c/c2r plan pair per grid size, shared across threads.  Plans are
// created with FFTW_ESTIMATE (deterministic kernel choice, so runs are
// bit-reproducible) and FFTW_UNALIGNED so the new-array execute functions
// accept any buffer.
struct PlanPair {
    fftw_plan fwd = nullptr;
    fftw_plan inv = nullptr;
};

std::mutex g_plan_mutex;
std::map<int, PlanPair>& plan_cache() {
    static std::map<int, PlanPair> cache;
    return cache;
}

PlanPair get_plans(int n) {
    std::lock_guard<std::mutex> lock(g_plan_mutex);
    auto& cache = plan_cache();
    auto it = cache.find(n);
    if (it != cache.end()) return it->second;
    std::vector<double> re(std::size_t(n) * n);
    std::vector<std::complex<double>> cf(std::size_t(n) * (n / 2 + 1));
    PlanPair p;
    p.fwd = fftw_plan_dft_r2c_2d(n, n, re.data(), reinterpret_cast<fftw_complex*>(cf.data()),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    p.inv = fftw_plan_dft_c2r_2d(n, n, reinterpret_cast<fftw_complex*>(cf.data()), re.data(),
                                 FFTW_ESTIMATE | FFTW_UNALIGNED);
    cache[n] = p;
    return p;
}

struct Scratch {
    std::vector<double> re;
    std::vector<std::complex<double>> cf;
};

Scratch& scratch_for(int n) {
    thread_local std::map<int, Scratch> pool;
    Scratch& s = pool[n];
    s.re.resize(std::size_t(n) * n);
    s.cf.resize(std::size_t(n) * (n / 2 + 1));
    return s;
}

}  // namespace

Spectrum analyze(const ScalarField& f) {
    const int n = f.grid.n;
    PlanPair p = get_plans(n);
    Scratch& s = scratch_for(n);
    std::memcpy(s.re.data(), f.v.data(), sizeof(double) * f.v.size());
    Spectrum out(f.grid);
    fftw_execute_dft_r2c(p.fwd, s.re.data(), reinterpret_cast<fftw_complex*>(out.c.data()));
    const double scale = 1.0 / (double(n) * n);
    for (auto& z : out.c) z *= scale;
    return out;
}

ScalarField synthesize(const Spectrum& sp) {
    const int n = sp.grid.n;
    PlanPair p = get_plans(n);
    Scratch& s = scratch_for(n);
    // c2r destroys its input, work on a copy
    std::memcpy(s.cf.data(), sp.c.data(), sizeof(std::complex<double>) * sp.c.size());
    ScalarField out(sp.grid);
    fftw_execute_dft_c2r(p.inv, reinterpret_cast<fftw_complex*>(s.cf.data()), out.v.data());
    return out;
}

void apply_derivative(Spectrum& s, int axis) {
    const int n = s.grid.n;
    const int cols = s.cols();
    for (int a1 = 0; a1 < n; ++a1) {
        const int k1 = s.k1_of(a1);
        for (int a2 = 0; a2 < cols; ++a2) {
            const int k = axis == 0 ? k1 : a2;
            std::complex<double>& z = s.c[std::size_t(a1) * cols + a2];
            if ((axis == 0 && a1 == n / 2) || (axis == 1 && a2 == n / 2))
                z = 0.0;
            else
                z *= std::complex<double>(0.0, double(k));
        }
    }
}

void apply_laplacian(Spectrum& s) {
    const int n = s.grid.n;
    const int cols = s.cols();
    for (int a1 = 0; a1 < n; ++a1) {
        const int k1 = s.k1_of(a1);
        for (int a2 = 0; a2 < cols; ++a2) {
            std::complex<double>& z = s.c[std::size_t(a1) * cols + a2];
            if (a1 == n / 2 || a2 == n / 2)
                z = 0.0;
            else
                z *= -double(k1) * k1 - double(a2) * a2;
        }
    }
}

double parseval_norm_sq(const Spectrum& s) { return kTorusArea * spectral_energy(s); }

double grad_norm_sq(const Spectrum& s) {
    const int n = s.grid.n;
    const int cols = s.cols();
    double acc = 0.0;
    for (int a1 = 0; a1 < n; ++a1) {
        if (a1 == n / 2) continue;
        const int k1 = s.k1_of(a1);
        for (int a2 = 0; a2 < cols; ++a2) {
            if (a2 == n / 2) continue;
            const double w = (a2 == 0) ? 1.0 : 2.0;
            const double ksq = double(k1) * k1 + double(a2) * a2;
            acc += w * ksq * std::norm(s.c[std::size_t(a1) * cols + a2]);
        }
    }
    return kTorusArea * acc;
}

double hess_norm_sq(const Spectrum& s) {
    const int n = s.grid.n;
    const int cols = s.cols();
    double acc = 0.0;
    for (int a1 = 0; a1 < n; ++a1) {
        if (a1 == n / 2) continue;
        const int k1 = s.k1_of(a1);
        for (int a2 = 0; a2 < cols; ++a2) {
            if (a2 == n / 2) continue;
            const double w = (a2 == 0) ? 1.0 : 2.0;
            const double ksq = double(k1) * k1 + double(a2) * a2;
            acc += w * ksq * ksq * std::norm(s.c[std::size_t(a1) * cols + a2]);
        }
    }
    return kTorusArea * acc;
}

ScalarField derivative(const ScalarField& f, int axis) {
    Spectrum s = analyze(f);
    apply_derivative(s, axis);
    return synthesize(s);
}

std::array<ScalarField, 2> gradient(const ScalarField& f) {
    Spectrum s = analyze(f);
    Spectrum s2 = s;
    apply_derivative(s, 0);
    apply_derivative(s2, 1);
    return {synthesize(s), synthesize(s2)};
}

ScalarField laplacian(const ScalarField& f) {
    Spectrum s = analyze(f);
    apply_laplacian(s);
    return synthesize(s);
}

std::array<ScalarField, 2> perp_gradient(const ScalarField& f) {
    auto g = gradient(f);
    g[1] *= -1.0;
    return {g[1], g[0]};
}

ScalarField divergence(const std::array<ScalarField, 2>& v) {
    Spectrum s0 = analyze(v[0]);
    Spectrum s1 = analyze(v[1]);
    apply_derivative(s0, 0);
    apply_derivative(s1, 1);
    for (std::size_t i = 0; i < s0.c.size(); ++i) s0.c[i] += s1.c[i];
    return synthesize(s0);
}

ScalarField curl2(const std::array<ScalarField, 2>& v) {
    Spectrum s0 = analyze(v[1]);
    Spectrum s1 = analyze(v[0]);
    apply_derivative(s0, 0);
    apply_derivative(s1, 1);
    for (std::size_t i = 0; i < s0.c.size(); ++i) s0.c[i] -= s1.c[i];
    return synthesize(s0);
}

ScalarField poisson_solve(const ScalarField& rhs, double mean_tol) {
    const double m = rhs.mean();
    if (std::fabs(m) > mean_tol) throw NonZeroMeanError(m);
    Spectrum s = analyze(rhs);
    const int n = s.grid.n;
    const int cols = s.cols();
    for (int a1 = 0; a1 < n; ++a1) {
        const int k1 = s.k1_of(a1);
        for (int a2 = 0; a2 < cols; ++a2) {
            std::complex<double>& z = s.c[std::size_t(a1) * cols + a2];
            if (a1 == 0 && a2 == 0)
                z = 0.0;
            else
                z /= -(double(k1) * k1 + double(a2) * a2);
        }
    }
    return synthesize(s);
}

void truncate(Spectrum& s, int kc) {
    const int n = s.grid.n;
    const int cols = s.cols();
    for (int a1 = 0; a1 < n; ++a1) {
        const int k1 = s.k1_of(a1);
        for (int a2 = 0; a2 < cols; ++a2)
            if (std::abs(k1) > kc || a2 > kc) s.c[std::size_t(a1) * cols + a2] = 0.0;
    }
}

ScalarField truncate_modes(const ScalarField& f, int kc) {
    Spectrum s = analyze(f);
    truncate(s, kc);
    return synthesize(s);
}

ScalarField dealias_product(const ScalarField& a, const ScalarField& b) {
    if (a.grid != b.grid) throw GridMismatchError();
    const int kc = a.grid.dealias_cutoff();
    ScalarField at = truncate_modes(a, kc);
    ScalarField bt = truncate_modes(b, kc);
    ScalarField prod = pointwise(at, bt);
    return truncate_modes(prod, kc);
}

ScalarField dealias_product(const std::vector<const ScalarField*>& fs) {
    if (fs.empty()) throw BadParamsError("dealias_product: no factors");
    const int kc = fs[0]->grid.dealias_cutoff();
    ScalarField acc = truncate_modes(*fs[0], kc);
    for (std::size_t i = 1; i < fs.size(); ++i) {
        if (fs[i]->grid != acc.grid) throw GridMismatchError();
        ScalarField t = truncate_modes(*fs[i], kc);
        acc = truncate_modes(pointwise(acc, t), kc);
    }
    return acc;
}

double lp_norm(const ScalarField& f, double p) {
    if (std::isinf(p)) return linf_norm(f);
    if (p != 1.0 && p != 2.0 && p != 4.0)
        throw BadParamsError("lp_norm: p must be 1, 2, 4 or inf");
    double s = 0.0;
    if (p == 1.0)
        for (double x : f.v) s += std::fabs(x);
    else if (p == 2.0)
        for (double x : f.v) s += x * x;
    else
        for (double x : f.v) s += (x * x) * (x * x);
    s *= f.grid.cell_area();
    return p == 1.0 ? s : (p == 2.0 ? std::sqrt(s) : std::pow(s, 0.25));
}

double linf_norm(const ScalarField& f) {
    double m = 0.0;
    for (double x : f.v) m = std::max(m, std::fabs(x));
    return m;
}

double l2_norm_sq(const ScalarField& f) {
    double s = 0.0;
    for (double x : f.v) s += x * x;
    return s * f.grid.cell_area();
}

double sobolev_h1_norm(const ScalarField& f) {
    Spectrum s = analyze(f);
    const int n = s.grid.n;
    const int cols = s.cols();
    double acc = 0.0;
    for (int a1 = 0; a1 < n; ++a1) {
        const int k1 = s.k1_of(a1);
        for (int a2 = 0; a2 < cols; ++a2) {
            const double w = (a2 == 0 || a2 == n / 2) ? 1.0 : 2.0;
            const double ksq = double(k1) * k1 + double(a2) * a2;
            acc += w * (1.0 + ksq) * std::norm(s.c[std::size_t(a1) * cols + a2]);
        }
    }
    return std::sqrt(kTorusArea * acc);
}

double l4_gradient_norm(const VectorField3& u) {
    const Grid& g = u.grid();
    std::array<std::array<ScalarField, 2>, 3> d;
    for (int i = 0; i < 3; ++i) d[i] = gradient(u.c[i]);
    double s = 0.0;
    for (int p = 0; p < g.size(); ++p) {
        double q = 0.0;
        for (int i = 0; i < 3; ++i)
            for (int k = 0; k < 2; ++k) q += d[i][k].v[p] * d[i][k].v[p];
        s += q * q;
    }
    return std::pow(s * g.cell_area(), 0.25);
}

double spectral_energy(const Spectrum& s) {
    const int n = s.grid.n;
    const int cols = s.cols();
    double acc = 0.0;
    for (int a1 = 0; a1 < n; ++a1)
        for (int a2 = 0; a2 < cols; ++a2) {
            const double w = (a2 == 0 || a2 == n / 2) ? 1.0 : 2.0;
            acc += w * std::norm(s.c[std::size_t(a1) * cols + a2]);
        }
    return acc;
}

std::array<Spectrum, 3> analyze3(const VectorField3& u) {
    return {analyze(u.c[0]), analyze(u.c[1]), analyze(u.c[2])};
}

VectorField3 synthesize3(const std::array<Spectrum, 3>& s) {
    VectorField3 out;
    out.c = {synthesize(s[0]), synthesize(s[1]), synthesize(s[2])};
    return out;
}

}  // namespace sllg
