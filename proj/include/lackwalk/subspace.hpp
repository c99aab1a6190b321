#pragma once

#include <string>
#include <vector>

#include <Eigen/Dense>

#include "lackwalk/analytics.hpp"
#include "lackwalk/instance.hpp"
#include "lackwalk/trace.hpp"

namespace lackwalk {

// The walk on the complete graph closes on a small invariant subspace of
// vertex/direction superpositions. With one marked vertex and no loops the
// basis is {|ab>, |ba>, |bb>}; otherwise {|aa>, |ab>, |ba>, |bb>}, where
// |aa> is the uniform superposition over all marked-to-marked directions
// (edges between marked vertices plus self-loops, k+l-1 per vertex).
struct SubspaceBasis {
    std::vector<std::string> labels;
    int dim() const { return static_cast<int>(labels.size()); }
};

struct SubspaceOperator {
    Eigen::MatrixXd entries; // real orthogonal, 3x3 or 4x4
    SubspaceBasis basis;
    AngleSet angles;
};

struct SubspaceState {
    Eigen::VectorXcd amplitudes;
    int step = 0;
};

// True when the reduced evolution is 3-dimensional (single marked vertex,
// no self-loops). For k > 1 the marked-to-marked direction class is
// occupied even at l = 0, so the 4D machinery is required.
inline bool reduced_is_3d(const SearchInstance& inst) {
    return inst.loops == 0 && inst.marked == 1;
}

SubspaceBasis subspace_basis(const SearchInstance& inst);

// Uniform superposition over the full vertex x coin space, expressed in
// the reduced basis. Norm is exactly 1.
SubspaceState initial_state(const SearchInstance& inst);

// The reduced search operator for the instance's coin.
SubspaceOperator build_operator(const SearchInstance& inst);

// One operator application. Throws DimensionMismatch if sizes disagree.
SubspaceState step(const SubspaceState& state, const SubspaceOperator& op);

// Probability of measuring the walker at a marked vertex: the squared
// |ab> amplitude in 3D, |aa> plus |ab> in 4D.
double success_probability(const SubspaceState& state);

// Trace over steps 0..max_steps with peak and reach-1/2 detection.
EvolutionTrace evolve(const SearchInstance& inst, int max_steps);

} // namespace lackwalk
