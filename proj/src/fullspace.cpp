#include "lackwalk/fullspace.hpp"

#include <cmath>
#include <cstdlib>
#include <string>

#include "lackwalk/errors.hpp"

namespace lackwalk {

namespace {

constexpr std::size_t kDefaultCap = std::size_t{1} << 24;
constexpr int kGroverCheckMaxN = 512;

using Complex = std::complex<double>;

// Coin stage into `out`: rank-one diffusion update per vertex, O(d) each.
void apply_coin(const FullState& state, std::vector<Complex>& out,
                int marked, CoinKind coin) {
    const int n = state.n, d = state.coin_dim();
    for (int v = 0; v < n; ++v) {
        const Complex* a = state.amplitudes.data() + std::size_t(v) * d;
        Complex* b = out.data() + std::size_t(v) * d;
        const bool is_marked = v < marked;
        if (is_marked && coin == CoinKind::Skw) {
            for (int j = 0; j < d; ++j)
                b[j] = -a[j];
            continue;
        }
        Complex sum = 0.0;
        for (int j = 0; j < d; ++j)
            sum += a[j];
        const Complex mean2 = 2.0 * sum / double(d);
        const double sign = (is_marked && coin == CoinKind::Flip) ? -1.0 : 1.0;
        for (int j = 0; j < d; ++j)
            b[j] = sign * (mean2 - a[j]);
    }
}

// Flip-flop shift: swap (v, ->u) with (u, ->v); loops stay put.
void apply_shift(const std::vector<Complex>& in, std::vector<Complex>& out,
                 int n, int d) {
    for (int v = 0; v < n; ++v) {
        const std::size_t base_v = std::size_t(v) * d;
        for (int j = 0; j < n - 1; ++j) {
            const int u = direction_target(v, j, n);
            out[std::size_t(u) * d + direction_index(u, v, n)] = in[base_v + j];
        }
        for (int j = n - 1; j < d; ++j)
            out[base_v + j] = in[base_v + j];
    }
}

FullState step_impl(const FullState& state, int marked, CoinKind coin) {
    FullState next = state;
    std::vector<Complex> coined(state.amplitudes.size());
    apply_coin(state, coined, marked, coin);
    apply_shift(coined, next.amplitudes, state.n, state.coin_dim());
    return next;
}

} // namespace

std::size_t amplitude_cap() {
    if (const char* env = std::getenv("LACKWALK_MAX_AMPLITUDES")) {
        const long long parsed = std::atoll(env);
        if (parsed > 0)
            return static_cast<std::size_t>(parsed);
    }
    return kDefaultCap;
}

std::size_t full_dimension(const SearchInstance& inst) {
    return std::size_t(inst.n) * (std::size_t(inst.n) - 1 + std::size_t(inst.loops));
}

FullState full_initial_state(const SearchInstance& inst) {
    const auto v = validate(inst);
    const std::size_t dim = full_dimension(v);
    if (dim > amplitude_cap())
        throw CapacityExceeded("state of " + std::to_string(dim) +
                               " amplitudes exceeds cap " +
                               std::to_string(amplitude_cap()));
    FullState state;
    state.n = v.n;
    state.loops = v.loops;
    state.marked = v.marked;
    state.amplitudes.assign(dim, Complex(1.0 / std::sqrt(double(dim)), 0.0));
    return state;
}

FullState full_step(const FullState& state, const SearchInstance& inst) {
    if (state.n != inst.n || state.loops != inst.loops || state.marked != inst.marked)
        throw DimensionMismatch("state layout does not match instance");
    return step_impl(state, inst.marked, inst.coin);
}

FullState unmarked_step(const FullState& state) {
    return step_impl(state, 0, CoinKind::Flip);
}

double full_success_probability(const FullState& state) {
    const int d = state.coin_dim();
    double p = 0.0;
    for (int v = 0; v < state.marked; ++v)
        for (int j = 0; j < d; ++j)
            p += std::norm(state.amplitudes[std::size_t(v) * d + j]);
    return p;
}

EvolutionTrace full_evolve(const SearchInstance& inst, int max_steps) {
    if (max_steps < 1)
        throw DomainError("max_steps must be >= 1");
    FullState state = full_initial_state(inst);

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
    record(0, full_success_probability(state));
    for (int s = 1; s <= max_steps; ++s) {
        state = full_step(state, inst);
        record(s, full_success_probability(state));
    }
    return trace;
}

double grover_equivalence_check(int n) {
    if (n > kGroverCheckMaxN)
        throw CapacityExceeded("grover equivalence check limited to N <= " +
                               std::to_string(kGroverCheckMaxN));
    const SearchInstance inst = validate({n, 1, 1, CoinKind::Flip});
    FullState walk = full_initial_state(inst);

    // Grover reflections on the N-dimensional vertex space.
    auto reflect_marked = [](std::vector<double>& v) { v[0] = -v[0]; };
    auto reflect_superposition = [n](std::vector<double>& v) {
        double sum = 0.0;
        for (double x : v)
            sum += x;
        const double mean2 = 2.0 * sum / n;
        for (double& x : v)
            x = mean2 - x;
    };
    std::vector<double> g(n, 1.0 / std::sqrt(double(n))); // (R_perp R_w)^t |s>
    std::vector<double> h = g;                            // (R_w R_perp)^t |s>

    const int horizon = static_cast<int>(std::ceil(3.14159265358979323846 * std::sqrt(double(n)) / 2.0));
    const int d = n; // l = 1 makes the coin space N-dimensional
    double dev = 0.0;
    for (int t = 1; t <= horizon; ++t) {
        walk = full_step(walk, inst);
        walk = full_step(walk, inst);
        reflect_marked(g);
        reflect_superposition(g);
        reflect_superposition(h);
        reflect_marked(h);
        for (int v = 0; v < n; ++v) {
            for (int j = 0; j < d; ++j) {
                // Coin direction j at v names vertex u: the edge target for
                // j < n-1, v itself for the loop direction.
                const int u = j < n - 1 ? direction_target(v, j, n) : v;
                const Complex expected(g[v] * h[u], 0.0);
                dev = std::max(dev,
                               std::abs(walk.amplitudes[std::size_t(v) * d + j] - expected));
            }
        }
    }
    return dev;
}

} // namespace lackwalk
