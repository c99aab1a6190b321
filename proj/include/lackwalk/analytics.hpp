#pragma once

#include <complex>
#include <optional>
#include <vector>

#include <Eigen/Dense>

#include "lackwalk/instance.hpp"

namespace lackwalk {

// Rotation angles of the reduced search operator. theta is always present;
// phi and alpha exist only for the 4D Flip operator, where alpha is the
// phase gap of the e^{+-i alpha} eigenvalue pair and
// cos(alpha) = (cos(theta) + cos(phi)) / 2.
struct AngleSet {
    double cos_theta = 0.0;
    double sin_theta = 0.0;
    std::optional<double> cos_phi;
    std::optional<double> sin_phi;
    std::optional<double> cos_alpha;
    std::optional<double> sin_alpha;
};

enum class LoopBranch { SublinearLoops, ProportionalLoops, SuperlinearLoops };
enum class SpeedupClass { Grover, SubClassicalSpeedup, NoSpeedup };

// Finite-N heuristic classification of the loop count's scaling regime.
// The o/omega branches are statements about families, not single (N, l)
// pairs, so `branch` is a documented heuristic (see classify_regime).
struct RegimeClassification {
    LoopBranch branch = LoopBranch::SublinearLoops;
    double c = 0.0; // loops / N, meaningful for ProportionalLoops
    SpeedupClass speedup = SpeedupClass::Grover;
};

// Closed-form prediction for one instance. runtime counts operator
// applications for discrete walks and is a real time for the CTQW.
// initial_loop_probability is the probability initially trapped on the
// marked self-loop component for the SKW coin (a -1 eigenvector that
// never transfers); zero otherwise.
struct Prediction {
    double runtime = 0.0;
    double peak_probability = 0.0;
    double phase_gap = 0.0; // runtime == pi / phase_gap
    RegimeClassification regime;
    double initial_loop_probability = 0.0;
};

struct EigenPair {
    std::complex<double> value;
    Eigen::VectorXcd vector;
};

struct EigenSystem {
    std::vector<EigenPair> pairs;
};

// Exact angle formulas for the instance's coin and loop count.
AngleSet angles(const SearchInstance& inst);

// Exact finite-N prediction. For continuous walks gamma <= 0 selects the
// critical rate 1/N. Never substitutes an asymptotic branch expression.
Prediction predict(const SearchInstance& inst,
                   WalkKind walk = WalkKind::DiscreteSubspace,
                   double gamma = 0.0);

// Large-N branch expressions; the caller names the branch explicitly.
// c defaults to loops/N for the proportional branch.
Prediction asymptotic_prediction(const SearchInstance& inst, LoopBranch branch,
                                 std::optional<double> c = std::nullopt);

// Eigenpairs of the reduced discrete search operator: closed forms for the
// 3D operator and the 4D Flip operator, numerical for the 4D SKW operator.
// All vectors are normalized.
EigenSystem eigen_system(const SearchInstance& inst);

// Branch heuristic: proportional if c_hint is given, else sublinear when
// l < N/log2(N), superlinear when l > N*log2(N), proportional otherwise.
// Speedup follows the coin's robustness to loops (see implementation).
RegimeClassification classify_regime(const SearchInstance& inst,
                                     std::optional<double> c_hint = std::nullopt);

std::string to_string(LoopBranch branch);
std::string to_string(SpeedupClass speedup);

} // namespace lackwalk
