#ifndef SLLG_INTEGRATOR_HPP
#define SLLG_INTEGRATOR_HPP

#include <functional>
#include <optional>

#include "sllg/bubble.hpp"
#include "sllg/noise.hpp"
#include "sllg/trajectory.hpp"

namespace sllg {

enum class SchemeKind { ExplicitEM, SemiImplicitEM, ExponentialMild };

SchemeKind scheme_kind_from_string(const std::string& s);
std::string to_string(SchemeKind k);

struct StepScheme {
    SchemeKind kind = SchemeKind::SemiImplicitEM;
    double dt = 1e-4;
    bool projection = true;
    // Stratonovich correction F_phi u in the drift; disabling it simulates
    // the uncorrected Ito equation (negative-control runs)
    bool ito_correction = true;
};

// tau = laplacian(u) + u |grad u|^2, cubic term dealiased
VectorField3 tension(const VectorField3& u);
// alternate evaluation laplacian(u) - (u . laplacian(u)) u; agrees with
// tension exactly iff |u| == 1
VectorField3 tension_projected(const VectorField3& u);
// tau + F_phi u
VectorField3 drift(const VectorField3& u, const NoiseModel& model);

FlowState step(const FlowState& state, const NoiseModel& model, const StepScheme& scheme);

struct EvolveOptions {
    int record_stride = 10;
    bool qv = true;              // accumulate the quadratic-variation estimate
    bool helein = false;         // per-sample Helein/Helmholtz diagnostics
    BubbleMonitor* monitor = nullptr;
    std::optional<WindowKernel> window;  // fixed window for the local dissipation series
};

extern const std::vector<std::string> kCoreColumns;
extern const std::vector<std::string> kHeleinColumns;

TrajectoryRecord evolve(const VectorField3& u0, const NoiseModel& model,
                        const StepScheme& scheme, double T, PhiloxRng rng,
                        const EvolveOptions& opts = {});

struct CoupledResult {
    std::vector<double> t;
    std::vector<double> dist_half_sq;   // d(t) = 1/2 ||u - v||_{L2}^2
    std::vector<double> budget_int;     // int_0^t (|grad u|_L4^4 + |grad v|_L4^4 + 1) d(s) ds
    std::vector<double> growth_int;     // int_0^t (|grad u|_L4^4 + |grad v|_L4^4 + 1) ds
    TrajectoryRecord u_record, v_record;
};

// both trajectories consume the identical increment sequence
CoupledResult coupled_evolve(const VectorField3& u0, const VectorField3& v0,
                             const NoiseModel& model, const StepScheme& scheme, double T,
                             PhiloxRng rng, int record_stride = 10);

}  // namespace sllg

#endif
