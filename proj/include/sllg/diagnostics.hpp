#ifndef SLLG_DIAGNOSTICS_HPP
#define SLLG_DIAGNOSTICS_HPP

#include <string>
#include <vector>

#include "sllg/bubble.hpp"
#include "sllg/helein.hpp"
#include "sllg/noise.hpp"
#include "sllg/trajectory.hpp"

namespace sllg {

inline constexpr double kZ99 = 2.576;  // fixed 99% confidence level
inline constexpr std::size_t kMinEnsemble = 100;

// E_t = 1/2 ||grad u||^2
double energy(const VectorField3& u);

// M(t) = E_t - E_0 + int_0^t ||tau||^2 - t c_phi; mean-zero martingale for
// the continuum flow
std::vector<double> martingale_residual(const TrajectoryRecord& rec, const NoiseModel& model);

// accumulated quadratic-variation estimate recorded by the integrator
std::vector<double> qv_estimate(const TrajectoryRecord& rec);

struct EnsembleSummary {
    std::size_t count = 0;
    std::vector<double> times;
    std::vector<std::string> quantities;
    // [quantity][time]
    std::vector<std::vector<double>> mean, std_err, ci_half;

    int quantity_index(const std::string& name) const;
};

EnsembleSummary summarize(const std::vector<TrajectoryRecord>& records,
                          const std::vector<std::string>& quantities);

struct SupermartingaleVerdict {
    double s = 0.0, t = 0.0;
    double mean_increment = 0.0;
    double std_err = 0.0;
    double upper_ci = 0.0;
    bool pass = false;
};

struct SupermartingaleReport {
    std::vector<SupermartingaleVerdict> pairs;
    // conditional variant binned on G(s) quantiles: [pair][bin]
    int bins = 5;
    std::vector<std::vector<SupermartingaleVerdict>> conditional;
    bool pass = false;
};

// PASS when mean[G(t) - G(s)] + z * SE <= slack for all sampled s < t
SupermartingaleReport supermartingale_test(const std::vector<GainSeries>& ensemble,
                                           const std::vector<double>& sample_times,
                                           double slack, int bins = 5);

struct ConstantEstimate {
    std::string name;
    double value = 0.0;
    std::vector<int> grid_sizes;
    std::vector<double> per_grid;
    double stability_ratio = 0.0;  // max/min across refinements
};

// C0: sup over zero-mean band-limited f of  int f^4 / (int f^2 int |grad f|^2)
ConstantEstimate estimate_C0(int sample_count, const std::vector<int>& grid_sizes,
                             std::uint64_t seed);
double c0_ratio(const ScalarField& f);

// C1: sup over flow samples and window radii of the localized interpolation
// ratio; eps1* = 1 / C1
struct C1Estimate {
    ConstantEstimate estimate;
    double eps1_star = 0.0;
};

double c1_ratio(const VectorField3& u, const BubbleMonitor& monitor, double rho);
C1Estimate estimate_C1(const std::vector<std::vector<VectorField3>>& per_grid_samples,
                       const std::vector<int>& grid_sizes, const std::vector<double>& rhos,
                       bool sharp_windows = false);

struct LocalDissipationReport {
    std::vector<double> times;
    std::vector<double> mean_defect;  // LHS - budget terms, ensemble mean
    std::vector<double> ci_half;
    double slack = 0.0;
    bool pass = false;
};

// mean[ 1/2|eta grad u(t)|^2 - 1/2|eta grad u(0)|^2
//        - t |eta grad phi|^2 - (C_eta^2/rho^2) int ||grad u||^2 ] <= slack
LocalDissipationReport local_dissipation_check(const std::vector<TrajectoryRecord>& records,
                                               const WindowKernel& window,
                                               const NoiseModel& model, double slack);

// deterministic pathwise variant (sigma = 0): defect at every sample
std::vector<double> local_dissipation_defect(const TrajectoryRecord& rec,
                                             const WindowKernel& window,
                                             const NoiseModel& model);

double sample_mean(const std::vector<double>& xs);
double sample_variance(const std::vector<double>& xs);
// standard error of the sample variance under resampling
double bootstrap_variance_se(const std::vector<double>& xs, int resamples, std::uint64_t seed);

}  // namespace sllg

#endif
