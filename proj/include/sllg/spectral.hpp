#ifndef SLLG_SPECTRAL_HPP
#define SLLG_SPECTRAL_HPP

#include <array>
#include <complex>
#include <vector>

#include "sllg/field.hpp"

namespace sllg {

// Half-spectrum of a real field, n x (n/2+1), coefficients c_k such that
// f(x) = sum_k c_k exp(i k.x).  Row index a1 maps to k1 = a1 <= n/2 ? a1 : a1-n;
// column index a2 = k2 in [0, n/2].
struct Spectrum {
    Grid grid;
    std::vector<std::complex<double>> c;

    Spectrum() = default;
    explicit Spectrum(const Grid& g) : grid(g), c(std::size_t(g.n) * (g.n / 2 + 1)) {}

    int cols() const { return grid.n / 2 + 1; }
    std::complex<double>& at(int a1, int a2) { return c[std::size_t(a1) * cols() + a2]; }
    const std::complex<double>& at(int a1, int a2) const {
        return c[std::size_t(a1) * cols() + a2];
    }
    int k1_of(int a1) const { return a1 <= grid.n / 2 ? a1 : a1 - grid.n; }
};

Spectrum analyze(const ScalarField& f);
ScalarField synthesize(const Spectrum& s);

// Fourier-mode differentiation.  All derivative operators zero the Nyquist
// modes of the differentiated axis so that laplacian == divergence(gradient)
// holds exactly.
ScalarField derivative(const ScalarField& f, int axis);
std::array<ScalarField, 2> gradient(const ScalarField& f);
ScalarField laplacian(const ScalarField& f);
// (-d2 f, d1 f); divergence-free by construction
std::array<ScalarField, 2> perp_gradient(const ScalarField& f);
ScalarField divergence(const std::array<ScalarField, 2>& v);
// d1 v2 - d2 v1
ScalarField curl2(const std::array<ScalarField, 2>& v);

// zero-mean solution of  laplacian(out) = rhs; throws NonZeroMeanError if
// |mean(rhs)| > mean_tol
ScalarField poisson_solve(const ScalarField& rhs, double mean_tol = 1e-10);

// zero all modes with |k1| > kc or |k2| > kc
void truncate(Spectrum& s, int kc);
ScalarField truncate_modes(const ScalarField& f, int kc);

// pointwise product with 2/3-rule dealiasing: inputs are truncated at the
// grid cutoff, multiplied pairwise, and the result is truncated again
ScalarField dealias_product(const ScalarField& a, const ScalarField& b);
ScalarField dealias_product(const std::vector<const ScalarField*>& fs);

// in-place spectral multipliers (shared with the integrator fast path)
void apply_derivative(Spectrum& s, int axis);
void apply_laplacian(Spectrum& s);
// 4pi^2 sum_k |c_k|^2  (== ||f||_{L2}^2 by Parseval)
double parseval_norm_sq(const Spectrum& s);
// 4pi^2 sum_k |k|^2 |c_k|^2 with the Nyquist modes dropped, == ||grad f||^2
double grad_norm_sq(const Spectrum& s);
// 4pi^2 sum_k |k|^4 |c_k|^2, == sum of squared second derivatives
double hess_norm_sq(const Spectrum& s);

// quadrature norms; p in {1, 2, 4}, infinity as max-abs
double lp_norm(const ScalarField& f, double p);
double linf_norm(const ScalarField& f);
double l2_norm_sq(const ScalarField& f);
double sobolev_h1_norm(const ScalarField& f);
// || |grad u| ||_{L^4}
double l4_gradient_norm(const VectorField3& u);

// sum over the full lattice of |c_k|^2 (Parseval companion of l2_norm_sq / 4pi^2)
double spectral_energy(const Spectrum& s);

std::array<Spectrum, 3> analyze3(const VectorField3& u);
VectorField3 synthesize3(const std::array<Spectrum, 3>& s);

}  // namespace sllg

#endif
