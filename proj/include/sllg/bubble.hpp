#ifndef SLLG_BUBBLE_HPP
#define SLLG_BUBBLE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sllg/spectral.hpp"
#include "sllg/trajectory.hpp"

namespace sllg {

// Regular sublattice of ball centers such that every ball B(x, rho) is
// contained in some B(center, lambda * rho).
struct BallCover {
    Grid grid;
    double rho = 0.0;
    double lambda = 2.0;
    int per_axis = 0;
    std::vector<std::pair<int, int>> centers;  // grid indices

    int count() const { return int(centers.size()); }
    double center_x1(int i) const { return grid.x1(centers[i].first); }
    double center_x2(int i) const { return grid.x2(centers[i].second); }
};

BallCover build_cover(const Grid& grid, double rho, double lambda = 2.0);

// Smooth radial bump: 1 on B(lambda rho), 0 outside B(2 lambda rho), C^2
// quintic transition with |grad eta| <= (15 / (8 lambda)) / rho.  The sharp
// variant is the indicator of B(rho) used for analytic cross-checks.
struct WindowKernel {
    ScalarField eta;
    double rho = 0.0;
    double lambda = 2.0;
    bool sharp = false;
    double support_radius = 0.0;
    double grad_bound_const = 0.0;  // C_eta with max |grad eta| <= C_eta / rho

    ScalarField eta_sq() const { return pointwise(eta, eta); }
};

WindowKernel make_window(const Grid& grid, double cx1, double cx2, double rho,
                         double lambda = 2.0, bool sharp = false);

struct LocalEnergy {
    double value = 0.0;
    int center_index = -1;
};

// max over cover centers of int eta_i^2 |grad u|^2, window quadrature done by
// FFT correlation of |grad u|^2 with the bump profile
class BubbleMonitor {
public:
    BubbleMonitor(const BallCover& cover, bool sharp = false);

    const BallCover& cover() const { return cover_; }

    LocalEnergy local_energy_sup(const VectorField3& u) const;
    // same but starting from the half-spectrum of |grad u|^2 (as produced
    // inside the integrator step, saving the transforms)
    LocalEnergy local_energy_sup(const Spectrum& grad_sq_hat) const;

    std::optional<double> eps1;   // detection threshold, off when unset
    bool restart_enabled = false;
    int restart_cutoff = 8;
    int detection_stride = 1;
    int max_events = 64;

private:
    BallCover cover_;
    Spectrum profile_hat_;  // spectrum of eta^2 centered at the origin
};

// first sampled index with local_energy_sup >= eps1 (the paper's zeta; none
// means zeta = T)
std::optional<std::size_t> detect_stop(const std::vector<double>& local_sup_series, double eps1);

// low-pass below cutoff, re-projected to the sphere; iterated so the result
// is simultaneously band-limited and unit-norm to tolerance
VectorField3 restart_data(const VectorField3& u, int cutoff);

// event bookkeeping
int count_events(const std::vector<BlowupEvent>& ledger, double t);
// E[N_T] <= eps1^{-1} (2 E_0 + c_phi T)
bool bound_check(double mean_events, double eps1, double energy0, double c_phi, double T);

}  // namespace sllg

#endif
