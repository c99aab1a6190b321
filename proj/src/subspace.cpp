#include "lackwalk/subspace.hpp"

#include <cmath>

#include "lackwalk/errors.hpp"

namespace lackwalk {

SubspaceBasis subspace_basis(const SearchInstance& inst) {
    if (reduced_is_3d(inst))
        return {{"|ab>", "|ba>", "|bb>"}};
    return {{"|aa>", "|ab>", "|ba>", "|bb>"}};
}

SubspaceState initial_state(const SearchInstance& inst) {
    const auto v = validate(inst);
    const double n = v.n, l = v.loops, k = v.marked;
    SubspaceState state;
    if (reduced_is_3d(v)) {
        const double norm = std::sqrt(n);
        state.amplitudes = Eigen::VectorXcd(3);
        state.amplitudes << 1.0 / norm, 1.0 / norm, std::sqrt(n - 2.0) / norm;
    } else {
        const double norm = std::sqrt(n * (n + l - 1.0));
        state.amplitudes = Eigen::VectorXcd(4);
        state.amplitudes << std::sqrt(k * (k + l - 1.0)) / norm,
            std::sqrt(k * (n - k)) / norm,
            std::sqrt(k * (n - k)) / norm,
            std::sqrt((n - k) * (n - k + l - 1.0)) / norm;
    }
    return state;
}

SubspaceOperator build_operator(const SearchInstance& inst) {
    const auto v = validate(inst);
    const AngleSet a = angles(v);
    SubspaceOperator op;
    op.basis = subspace_basis(v);
    op.angles = a;
    const double ct = a.cos_theta, st = a.sin_theta;
    if (reduced_is_3d(v)) {
        op.entries = Eigen::MatrixXd(3, 3);
        op.entries << 0, -ct, st,
                     -1, 0, 0,
                      0, st, ct;
    } else if (v.coin == CoinKind::Flip) {
        const double cp = *a.cos_phi, sp = *a.sin_phi;
        op.entries = Eigen::MatrixXd(4, 4);
        op.entries << ct, -st, 0, 0,
                       0, 0, -cp, sp,
                     -st, -ct, 0, 0,
                       0, 0, sp, cp;
    } else {
        op.entries = Eigen::MatrixXd(4, 4);
        op.entries << -1, 0, 0, 0,
                       0, 0, -ct, st,
                       0, -1, 0, 0,
                       0, 0, st, ct;
    }
    return op;
}

SubspaceState step(const SubspaceState& state, const SubspaceOperator& op) {
    if (state.amplitudes.size() != op.entries.cols())
        throw DimensionMismatch("state dimension " + std::to_string(state.amplitudes.size()) +
                                " does not match operator dimension " +
                                std::to_string(op.entries.cols()));
    SubspaceState next;
    next.amplitudes = op.entries * state.amplitudes;
    next.step = state.step + 1;
    return next;
}

double success_probability(const SubspaceState& state) {
    double p = std::norm(state.amplitudes(0));
    if (state.amplitudes.size() == 4)
        p += std::norm(state.amplitudes(1));
    return p;
}

EvolutionTrace evolve(const SearchInstance& inst, int max_steps) {
    if (max_steps < 1)
        throw DomainError("max_steps must be >= 1");
    const SubspaceOperator op = build_operator(inst);
    SubspaceState state = initial_state(inst);

    EvolutionTrace trace;
    trace.samples.reserve(static_cast<std::size_t>(max_steps) + 1);
    auto record = [&trace](int s, double p) {
        trace.samples.push_back({s, p});
        if (p > trace.peak_probability) {
            trace.peak_probability = p;
            trace.peak_step = s;
        }
        if (trace.first_reach_half < 0 && p >= kReachHalfThreshold)
            trace.first_reach_half = s;
    };
    record(0, success_probability(state));
    for (int s = 1; s <= max_steps; ++s) {
        state = step(state, op);
        record(s, success_probability(state));
    }
    return trace;
}

} // namespace lackwalk
