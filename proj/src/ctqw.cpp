#include "lackwalk/ctqw.hpp"

#include <cmath>
#include <complex>

#include <Eigen/Eigenvalues>

#include "lackwalk/errors.hpp"

namespace lackwalk {

namespace {

constexpr int kFullSpaceMaxN = 512;

CtqwTrace make_trace(const std::vector<double>& times,
                     const std::vector<double>& probs) {
    CtqwTrace trace;
    trace.samples.reserve(times.size());
    trace.peak_probability = -1.0;
    for (std::size_t i = 0; i < times.size(); ++i) {
        trace.samples.push_back({times[i], probs[i]});
        if (probs[i] > trace.peak_probability) {
            trace.peak_probability = probs[i];
            trace.peak_time = times[i];
        }
    }
    return trace;
}

void check_times(const std::vector<double>& times) {
    double prev = 0.0;
    for (double t : times) {
        if (t < prev)
            throw DomainError("sample times must be sorted and nonnegative");
        prev = t;
    }
}

} // namespace

CtqwModel build_hamiltonian(const SearchInstance& inst, double gamma,
                            LoopDiagonal diag) {
    const auto v = validate(inst);
    if (gamma <= 0.0)
        throw DomainError("gamma must be > 0");
    const double n = v.n, k = v.marked;
    const double l = (diag == LoopDiagonal::Doubled ? 2.0 : 1.0) * v.loops;

    CtqwModel model;
    model.n = v.n;
    model.loops = v.loops;
    model.marked = v.marked;
    model.gamma = gamma;
    model.hamiltonian << -(1.0 + gamma * (k + l - 1.0)),
        -gamma * std::sqrt(k * (n - k)),
        -gamma * std::sqrt(k * (n - k)),
        -gamma * (n - k + l - 1.0);

    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(model.hamiltonian);
    model.e_minus = solver.eigenvalues()(0);
    model.e_plus = solver.eigenvalues()(1);
    model.gap = model.e_plus - model.e_minus;
    return model;
}

CtqwTrace ctqw_evolve(const CtqwModel& model, const std::vector<double>& times) {
    check_times(times);
    Eigen::SelfAdjointEigenSolver<Eigen::Matrix2d> solver(model.hamiltonian);
    const Eigen::Matrix2d vecs = solver.eigenvectors();
    const Eigen::Vector2d vals = solver.eigenvalues();

    Eigen::Vector2d psi0(std::sqrt(double(model.marked) / model.n),
                         std::sqrt(double(model.n - model.marked) / model.n));
    const Eigen::Vector2d coeff = vecs.transpose() * psi0;

    const std::complex<double> im(0.0, 1.0);
    std::vector<double> probs;
    probs.reserve(times.size());
    for (double t : times) {
        std::complex<double> a = 0.0;
        for (int j = 0; j < 2; ++j)
            a += std::exp(-im * vals(j) * t) * coeff(j) * vecs(0, j);
        probs.push_back(std::norm(a));
    }
    return make_trace(times, probs);
}

double loop_invariance_check(const SearchInstance& inst, double gamma,
                             const std::vector<double>& times) {
    SearchInstance loopless = inst;
    loopless.loops = 0;
    const CtqwTrace with = ctqw_evolve(build_hamiltonian(inst, gamma), times);
    const CtqwTrace without = ctqw_evolve(build_hamiltonian(loopless, gamma), times);
    double dev = 0.0;
    for (std::size_t i = 0; i < times.size(); ++i)
        dev = std::max(dev, std::abs(with.samples[i].success_probability -
                                     without.samples[i].success_probability));
    return dev;
}

CtqwTrace ctqw_full_evolve(const SearchInstance& inst, double gamma,
                           const std::vector<double>& times, LoopDiagonal diag) {
    const auto v = validate(inst);
    if (gamma <= 0.0)
        throw DomainError("gamma must be > 0");
    check_times(times);
    if (v.n > kFullSpaceMaxN)
        throw CapacityExceeded("full-space CTQW limited to N <= " +
                               std::to_string(kFullSpaceMaxN));

    const int n = v.n, k = v.marked;
    const double ldiag = (diag == LoopDiagonal::Doubled ? 2.0 : 1.0) * v.loops;
    Eigen::MatrixXd h = Eigen::MatrixXd::Constant(n, n, -gamma);
    h.diagonal().setConstant(-gamma * ldiag);
    for (int i = 0; i < k; ++i)
        h(i, i) -= 1.0;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(h);
    const Eigen::MatrixXd& vecs = solver.eigenvectors();
    const Eigen::VectorXd& vals = solver.eigenvalues();
    const Eigen::VectorXd coeff =
        vecs.transpose() * Eigen::VectorXd::Constant(n, 1.0 / std::sqrt(double(n)));

    const std::complex<double> im(0.0, 1.0);
    std::vector<double> probs;
    probs.reserve(times.size());
    for (double t : times) {
        const Eigen::VectorXcd phases =
            (-im * t * vals.cast<std::complex<double>>().array()).exp();
        const Eigen::VectorXcd psi =
            vecs.cast<std::complex<double>>() * phases.cwiseProduct(coeff.cast<std::complex<double>>());
        probs.push_back(psi.head(k).squaredNorm());
    }
    return make_trace(times, probs);
}

} // namespace lackwalk
