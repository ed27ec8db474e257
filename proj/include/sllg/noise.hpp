#ifndef SLLG_NOISE_HPP
#define SLLG_NOISE_HPP

#include <string>
#include <vector>

#include "sllg/rng.hpp"
#include "sllg/spectral.hpp"

namespace sllg {

// One retained member of the real orthonormal torus basis
// { 1/(2pi), cos(k.x)/(pi sqrt2), sin(k.x)/(pi sqrt2) }.  Wavevectors are
// enumerated over the half-lattice k2 > 0 or (k2 == 0 and k1 > 0), so every
// mode maps directly into the half-spectrum storage.
struct NoiseMode {
    enum Kind { Constant, Cos, Sin };
    int k1 = 0, k2 = 0;
    Kind kind = Constant;
    double lambda = 0.0;
    int ksq() const { return k1 * k1 + k2 * k2; }
};

struct NoiseIncrement {
    VectorField3 dW;
    double dt = 0.0;
};

// Isotropic trace-class Wiener process W = sum_l B_l phi e_l with spectrum
// lambda_k = sigma (1+|k|^2)^(-s/2) for |k| <= K.
class NoiseModel {
public:
    static NoiseModel build(const Grid& grid, double sigma, double s, int cutoff);

    const Grid& grid() const { return grid_; }
    double sigma() const { return sigma_; }
    double regularity() const { return s_; }
    int cutoff() const { return cutoff_; }
    const std::vector<NoiseMode>& modes() const { return modes_; }

    // sum_l lambda_l^2 (1+|k_l|^2)^s, the squared HS norm of phi into H^s
    double hs_norm(double s) const;
    // C_phi = |grad phi|^2_{L_2} = sum_l lambda_l^2 |k_l|^2
    double c_phi() const;
    // F_phi(x) = -sum_l (phi e_l(x))^2; constant for the paired spectrum here
    ScalarField ito_correction_field() const;
    double ito_correction_mean() const;

    NoiseIncrement sample_increment(double dt, PhiloxRng& rng) const;

    // sum over components i of sum_l lambda_l^2 <g_i, e_l>^2, evaluated from
    // the half-spectra of g's components (quadratic-variation integrand)
    double weighted_projection_sq(const std::array<Spectrum, 3>& g) const;
    // same for a single scalar field
    double weighted_projection_sq(const Spectrum& g) const;

    // sum_l lambda_l^2 int eta2 |grad e_l|^2, the localized injection rate
    double c_phi_windowed(const ScalarField& eta_sq) const;

    std::string lambda_table_csv() const;

private:
    Grid grid_;
    double sigma_ = 0.0, s_ = 0.0;
    int cutoff_ = 0;
    std::vector<NoiseMode> modes_;
};

}  // namespace sllg

#endif
