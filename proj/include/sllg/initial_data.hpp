#ifndef SLLG_INITIAL_DATA_HPP
#define SLLG_INITIAL_DATA_HPP

#include <string>

#include "sllg/field.hpp"
#include "sllg/rng.hpp"

namespace sllg {

struct InitialParams {
    double amplitude = 0.8;   // random_smooth: size of the tangential perturbation
    int kmax = 4;             // random_smooth: spectral band of the perturbation
    std::uint64_t seed = 2024;
    double eps = 0.4;         // concentrated: bubble scale
    double center_x1 = kTwoPi / 2, center_x2 = kTwoPi / 2;
};

// kinds: constant (0,0,1); equator (cos x1, sin x1, 0); random_smooth
// (band-limited perturbation of the constant map, projected); concentrated
// (periodized inverse-stereographic bubble of scale eps, projected).
// Output is sphere-valued within 1e-10 and band-limited below the dealias
// cutoff (the two constraints are reconciled by a short fixed-point
// iteration of truncate + project).
VectorField3 make_initial(const std::string& kind, const InitialParams& params, const Grid& grid);

}  // namespace sllg

#endif
