#include "lackwalk/analytics.hpp"

#include <algorithm>
#include <cmath>

#include <Eigen/Eigenvalues>

#include "lackwalk/ctqw.hpp"
#include "lackwalk/errors.hpp"
#include "lackwalk/subspace.hpp"

namespace lackwalk {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Half the angular distance between the e^{+-i phi} eigenvalues of the
// 3D-form operator with rotation angle theta; the reach-1/2 runtime is
// pi / (2 * this).
double half_gap_3d(double cos_theta) {
    return std::asin(std::sqrt((1.0 - cos_theta) * (3.0 + cos_theta)) / 2.0);
}

} // namespace

AngleSet angles(const SearchInstance& inst) {
    const auto v = validate(inst);
    const double n = v.n, l = v.loops, k = v.marked;
    AngleSet a;
    if (v.loops == 0 && v.marked == 1) {
        a.cos_theta = (n - 3.0) / (n - 1.0);
        a.sin_theta = 2.0 * std::sqrt(n - 2.0) / (n - 1.0);
        return a;
    }
    const double d = n + l - 1.0;
    if (v.coin == CoinKind::Flip) {
        a.cos_theta = (n - 2.0 * k - l + 1.0) / d;
        a.sin_theta = 2.0 * std::sqrt((n - k) * (k + l - 1.0)) / d;
        a.cos_phi = (n - 2.0 * k + l - 1.0) / d;
        a.sin_phi = 2.0 * std::sqrt(k * (n - k + l - 1.0)) / d;
        a.cos_alpha = (n - 2.0 * k) / d;
        a.sin_alpha = std::sqrt((2.0 * n - 2.0 * k + l - 1.0) * (2.0 * k + l - 1.0)) / d;
    } else {
        a.cos_theta = (n - 2.0 * k + l - 1.0) / d;
        a.sin_theta = 2.0 * std::sqrt(k * (n - k + l - 1.0)) / d;
    }
    return a;
}

Prediction predict(const SearchInstance& inst, WalkKind walk, double gamma) {
    const auto v = validate(inst);
    const double n = v.n, l = v.loops, k = v.marked;
    Prediction pred;
    pred.regime = classify_regime(v);

    if (is_continuous(walk)) {
        const double g = gamma > 0.0 ? gamma : 1.0 / n;
        const CtqwModel model = build_hamiltonian(v, g);
        pred.phase_gap = model.gap;
        pred.runtime = kPi / model.gap;
        pred.peak_probability = 1.0;
        return pred;
    }

    const AngleSet a = angles(v);
    const bool flip_rotation = v.coin == CoinKind::Flip && !reduced_is_3d(v);
    if (flip_rotation) {
        const double alpha = std::atan2(*a.sin_alpha, *a.cos_alpha);
        pred.phase_gap = alpha;
        pred.runtime = kPi / alpha;
        const double num =
            k * (16.0 * n * (k + l - 1.0) + 9.0 * (l - 1.0) * (l - 1.0) -
                 4.0 * k * (l - 1.0) - 12.0 * k * k);
        const double den =
            4.0 * (2.0 * k + l - 1.0) * (2.0 * k + l - 1.0) * (n - k + l - 1.0);
        // The closed form is a leading-order expression and can exceed 1
        // by O(k/N) for small N; clamp into the probability range.
        pred.peak_probability = std::clamp(num / den, 0.0, 1.0);
    } else {
        // SKW coin (and the loopless single-marked walk, where both coins
        // coincide): the |aa> component is a -1 eigenvector and decouples,
        // the rest evolves with the 3D-form gap.
        const double half = half_gap_3d(a.cos_theta);
        pred.phase_gap = 2.0 * half;
        pred.runtime = kPi / (2.0 * half);
        pred.peak_probability = 0.5;
        if (v.coin == CoinKind::Skw && !reduced_is_3d(v))
            pred.initial_loop_probability = k * (k + l - 1.0) / (n * (n + l - 1.0));
    }
    return pred;
}

Prediction asymptotic_prediction(const SearchInstance& inst, LoopBranch branch,
                                 std::optional<double> c_opt) {
    const auto v = validate(inst);
    const double n = v.n, l = v.loops, k = v.marked;
    const double c = c_opt.value_or(l / n);
    Prediction pred;
    pred.regime = classify_regime(v, branch == LoopBranch::ProportionalLoops
                                         ? std::optional<double>(c)
                                         : std::nullopt);
    pred.regime.branch = branch;

    if (v.coin == CoinKind::Flip) {
        switch (branch) {
        case LoopBranch::SublinearLoops:
            pred.runtime = kPi * std::sqrt(n) / std::sqrt(2.0 * (2.0 * k + l - 1.0));
            pred.peak_probability =
                4.0 * k * (k + l - 1.0) / ((2.0 * k + l - 1.0) * (2.0 * k + l - 1.0));
            break;
        case LoopBranch::ProportionalLoops:
            pred.runtime = kPi / std::asin(std::sqrt(c * (c + 2.0)) / (c + 1.0));
            pred.peak_probability = (16.0 + 9.0 * c) / (4.0 * c * (c + 1.0)) * k / n;
            break;
        case LoopBranch::SuperlinearLoops:
            pred.runtime = 2.0;
            pred.peak_probability = 9.0 * k / (4.0 * l);
            break;
        }
    } else {
        switch (branch) {
        case LoopBranch::SublinearLoops:
            pred.runtime = kPi * std::sqrt(n) / (2.0 * std::sqrt(2.0 * k));
            break;
        case LoopBranch::ProportionalLoops:
            pred.runtime = kPi * std::sqrt(c + 1.0) * std::sqrt(n) / (2.0 * std::sqrt(2.0 * k));
            break;
        case LoopBranch::SuperlinearLoops:
            pred.runtime = kPi * std::sqrt(l) / (2.0 * std::sqrt(2.0 * k));
            break;
        }
        pred.peak_probability = 0.5;
    }
    pred.phase_gap = kPi / pred.runtime;
    return pred;
}

EigenSystem eigen_system(const SearchInstance& inst) {
    const auto v = validate(inst);
    const AngleSet a = angles(v);
    EigenSystem sys;
    const std::complex<double> im(0.0, 1.0);

    if (reduced_is_3d(v)) {
        const double ct = a.cos_theta;
        const double cph = (1.0 + ct) / 2.0;
        const double sph = std::sqrt((1.0 - ct) * (3.0 + ct)) / 2.0;
        const double p = std::sqrt(1.0 - ct), q = std::sqrt(3.0 + ct);
        const double r = 2.0 * std::sqrt(1.0 + ct);

        Eigen::VectorXcd plus(3), minus(3), neg(3);
        plus << (p - im * q) / r, (p + im * q) / r, 1.0;
        minus << (p + im * q) / r, (p - im * q) / r, 1.0;
        const double w = std::sqrt((1.0 + ct) / (1.0 - ct));
        neg << -w, -w, 1.0;
        sys.pairs.push_back({std::complex<double>(cph, sph), plus.normalized()});
        sys.pairs.push_back({std::complex<double>(cph, -sph), minus.normalized()});
        sys.pairs.push_back({std::complex<double>(-1.0, 0.0), neg.normalized()});
        return sys;
    }

    if (v.coin == CoinKind::Flip) {
        const double ct = a.cos_theta, st = a.sin_theta;
        const double cp = *a.cos_phi, sp = *a.sin_phi;
        const double ca = *a.cos_alpha, sa = *a.sin_alpha;

        Eigen::VectorXcd m1(4), p1(4), ma(4), pa(4);
        m1 << -(st / (1.0 + ct)) * ((1.0 + cp) / sp), -(1.0 + cp) / sp,
              -(1.0 + cp) / sp, 1.0;
        p1 << -((1.0 + ct) / st) * (sp / (1.0 + cp)), sp / (1.0 + cp),
              sp / (1.0 + cp), 1.0;
        const double mid = (ct - cp) / (2.0 * sp);
        ma << st / sp, mid + im * (sa / sp), mid - im * (sa / sp), 1.0;
        pa << st / sp, mid - im * (sa / sp), mid + im * (sa / sp), 1.0;
        sys.pairs.push_back({std::complex<double>(-1.0, 0.0), m1.normalized()});
        sys.pairs.push_back({std::complex<double>(1.0, 0.0), p1.normalized()});
        sys.pairs.push_back({std::complex<double>(ca, -sa), ma.normalized()});
        sys.pairs.push_back({std::complex<double>(ca, sa), pa.normalized()});
        return sys;
    }

    // 4D SKW: numerical eigenpairs of the constructed operator.
    const SubspaceOperator op = build_operator(v);
    Eigen::EigenSolver<Eigen::MatrixXd> solver(op.entries);
    for (int i = 0; i < op.entries.rows(); ++i) {
        Eigen::VectorXcd vec = solver.eigenvectors().col(i);
        sys.pairs.push_back({solver.eigenvalues()(i), vec.normalized()});
    }
    return sys;
}

RegimeClassification classify_regime(const SearchInstance& inst,
                                     std::optional<double> c_hint) {
    const auto v = validate(inst);
    const double n = v.n, l = v.loops;
    const double log2n = std::log2(n);
    RegimeClassification regime;

    if (c_hint) {
        regime.branch = LoopBranch::ProportionalLoops;
        regime.c = *c_hint;
    } else if (l < n / log2n) {
        regime.branch = LoopBranch::SublinearLoops;
    } else if (l > n * log2n) {
        regime.branch = LoopBranch::SuperlinearLoops;
    } else {
        regime.branch = LoopBranch::ProportionalLoops;
        regime.c = l / n;
    }

    if (v.coin == CoinKind::Flip) {
        // Grover scaling survives only constant l; any growing l costs the
        // quadratic speedup, and l growing at least linearly costs all of it.
        // "Constant-bounded" at finite N: l <= max(8, log2 N).
        if (regime.branch == LoopBranch::SublinearLoops)
            regime.speedup = l <= std::max(8.0, log2n) ? SpeedupClass::Grover
                                                       : SpeedupClass::SubClassicalSpeedup;
        else
            regime.speedup = SpeedupClass::NoSpeedup;
    } else {
        // SKW keeps Grover scaling up to l = O(N) and beats classical up
        // to l = o(N^2); finite-N cut for the latter: l < N^2 / log2 N.
        if (regime.branch != LoopBranch::SuperlinearLoops)
            regime.speedup = SpeedupClass::Grover;
        else
            regime.speedup = l < n * n / log2n ? SpeedupClass::SubClassicalSpeedup
                                               : SpeedupClass::NoSpeedup;
    }
    return regime;
}

std::string to_string(LoopBranch branch) {
    switch (branch) {
    case LoopBranch::SublinearLoops: return "sublinear";
    case LoopBranch::ProportionalLoops: return "proportional";
    case LoopBranch::SuperlinearLoops: return "superlinear";
    }
    return "?";
}

std::string to_string(SpeedupClass speedup) {
    switch (speedup) {
    case SpeedupClass::Grover: return "grover";
    case SpeedupClass::SubClassicalSpeedup: return "sub-classical";
    case SpeedupClass::NoSpeedup: return "none";
    }
    return "?";
}

} // namespace lackwalk
