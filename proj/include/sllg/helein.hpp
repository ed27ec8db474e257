#ifndef SLLG_HELEIN_HPP
#define SLLG_HELEIN_HPP

#include <array>
#include <vector>

#include "sllg/noise.hpp"
#include "sllg/spectral.hpp"
#include "sllg/trajectory.hpp"

namespace sllg {

// A^{i,j}_k with target indices i,j and spatial index k
struct TensorField32 {
    Grid grid;
    std::vector<ScalarField> f;  // 18 components, (i*3+j)*2+k

    TensorField32() = default;
    explicit TensorField32(const Grid& g) : grid(g), f(18, ScalarField(g)) {}

    ScalarField& at(int i, int j, int k) { return f[std::size_t(i * 3 + j) * 2 + k]; }
    const ScalarField& at(int i, int j, int k) const { return f[std::size_t(i * 3 + j) * 2 + k]; }
};

// A^{i,j}_k = u^i d_k u^j - u^j d_k u^i  (pointwise products of spectral
// derivatives; antisymmetric in (i,j) exactly)
TensorField32 helein_tensor(const VectorField3& u);

// (sum_{j,k} A^{i,j}_k f^j_k)_i ; with f = grad u this reproduces u |grad u|^2
VectorField3 tensor_contract(const TensorField32& A, const std::array<std::array<ScalarField, 2>, 3>& f);
std::array<std::array<ScalarField, 2>, 3> gradient3(const VectorField3& u);

// A = mean + grad alpha + perp-grad beta, parts L2-orthogonal, alpha and beta
// zero-mean; the torus harmonic (constant) component is kept explicitly
struct HeleinSplit {
    Grid grid;
    std::array<double, 18> mean{};              // (i*3+j)*2+k
    std::vector<ScalarField> alpha;             // 9, i*3+j
    std::vector<ScalarField> beta;              // 9
    double reconstruction_residual = 0.0;       // L2 norm of A - (mean + grad a + perp b)

    ScalarField& alpha_at(int i, int j) { return alpha[std::size_t(i * 3 + j)]; }
    ScalarField& beta_at(int i, int j) { return beta[std::size_t(i * 3 + j)]; }
    const ScalarField& alpha_at(int i, int j) const { return alpha[std::size_t(i * 3 + j)]; }
    const ScalarField& beta_at(int i, int j) const { return beta[std::size_t(i * 3 + j)]; }
};

HeleinSplit helmholtz_split(const TensorField32& A);

// per-sample Helein diagnostics recorded along a trajectory
struct HeleinSample {
    double delta_alpha_sq = 0.0;   // sum_{i,j} ||div A^{i,j}||^2 == sum ||lap alpha||^2
    double beta_grad_sq = 0.0;     // sum_{i,j} ||perp-grad beta^{i,j}||^2
    double div_residual_scaled = 0.0;  // ||div A - (u /\ lap u)||_F over a flow scale
    double reconstruction_residual = 0.0;
};

HeleinSample helein_sample(const VectorField3& u);

// time-integrated ||div A||^2 against ||tau||^2 along field samples
struct AlphaTensionReport {
    double int_delta_alpha_sq = 0.0;
    double int_tension_sq = 0.0;
    double ratio = 0.0;
    double max_div_residual_scaled = 0.0;
};

AlphaTensionReport alpha_tension_bound(const std::vector<VectorField3>& samples, double dt);

enum class WenteOperator {
    ShiftedLaplacian,  // (I - lap) phi = {a,b}; coercive, kernel-free (default)
    LiteralPlus,       // phi + lap phi = {a,b}; |k|^2 = 1 modes pseudo-inverted
    PureLaplacian,     // lap phi = {a,b}, zero-mean solution
};

WenteOperator wente_operator_from_string(const std::string& s);

struct WenteResult {
    ScalarField phi;
    double sup_norm = 0.0;
    double grad_norm = 0.0;
    double ratio = 0.0;  // (|phi|_inf + ||grad phi||) / (||grad a|| ||grad b||)
};

WenteResult wente_solve(const ScalarField& a, const ScalarField& b,
                        WenteOperator op = WenteOperator::ShiftedLaplacian);

struct GainSeries {
    std::vector<double> t;
    std::vector<double> g;  // E_t - c_phi t
};

GainSeries gain_series(const TrajectoryRecord& rec, const NoiseModel& model);

}  // namespace sllg

#endif
