#pragma once

#include <vector>

#include <Eigen/Dense>

#include "lackwalk/instance.hpp"
#include "lackwalk/trace.hpp"

namespace lackwalk {

// How self-loops enter the adjacency diagonal. Doubled counts each loop
// twice; both conventions shift the Hamiltonian by a multiple of the
// identity and leave every success probability unchanged.
enum class LoopDiagonal { Single, Doubled };

// The continuous-time search Hamiltonian reduced to the {|a>, |b>} basis
// of marked / unmarked uniform superpositions.
struct CtqwModel {
    int n = 0;
    int loops = 0;
    int marked = 1;
    double gamma = 0.0;
    Eigen::Matrix2d hamiltonian;
    double e_minus = 0.0; // lower eigenvalue
    double e_plus = 0.0;  // upper eigenvalue
    double gap = 0.0;     // e_plus - e_minus
};

inline double critical_gamma(int n) { return 1.0 / n; }

// Reduced 2x2 Hamiltonian; gamma must be > 0.
CtqwModel build_hamiltonian(const SearchInstance& inst, double gamma,
                            LoopDiagonal diag = LoopDiagonal::Single);

// exp(-iHt) evolution via exact eigendecomposition, sampled at the given
// nonnegative sorted times. Success probability is the squared |a>
// component.
CtqwTrace ctqw_evolve(const CtqwModel& model, const std::vector<double>& times);

// Max |p_l(t) - p_0(t)| between the instance and its loopless counterpart.
double loop_invariance_check(const SearchInstance& inst, double gamma,
                             const std::vector<double>& times);

// Full N-dimensional evolution (dense Hermitian eigendecomposition);
// oracle for the 2D reduction. N is capped at 512.
CtqwTrace ctqw_full_evolve(const SearchInstance& inst, double gamma,
                           const std::vector<double>& times,
                           LoopDiagonal diag = LoopDiagonal::Single);

} // namespace lackwalk
