#pragma once

#include <complex>
#include <cstddef>
#include <vector>

#include "lackwalk/instance.hpp"
#include "lackwalk/trace.hpp"

namespace lackwalk {

// Amplitudes over the vertex x coin space, laid out as
// index = v * (N-1+l) + j for v in 0..N-1. Directions j < N-1 point to the
// other vertices in increasing label order; j >= N-1 are self-loops.
struct FullState {
    int n = 0;
    int loops = 0;
    int marked = 1;
    std::vector<std::complex<double>> amplitudes;

    int coin_dim() const { return n - 1 + loops; }
};

// Target vertex of edge direction j at vertex v (0-based, j < n-1).
inline int direction_target(int v, int j, int) {
    return j < v ? j : j + 1;
}

// Direction index at v pointing to u (u != v).
inline int direction_index(int v, int u, int) {
    return u < v ? u : u - 1;
}

// Default 2^24; LACKWALK_MAX_AMPLITUDES overrides.
std::size_t amplitude_cap();

std::size_t full_dimension(const SearchInstance& inst);

// Equal superposition over all N*(N-1+l) amplitudes. Throws
// CapacityExceeded past the amplitude cap.
FullState full_initial_state(const SearchInstance& inst);

// One application of the search operator: per-vertex coin (Grover
// diffusion on unmarked vertices, C1 per the instance's coin on marked
// ones) followed by the flip-flop shift, which fixes loop directions.
// Writes to a fresh buffer; O(N * d).
FullState full_step(const FullState& state, const SearchInstance& inst);

// As full_step but with the Grover diffusion coin everywhere (no marked
// vertices); the equal superposition is its fixed point.
FullState unmarked_step(const FullState& state);

// Sum of squared amplitudes over all directions of the marked vertices,
// accumulated in vertex-major, direction-ascending order.
double full_success_probability(const FullState& state);

EvolutionTrace full_evolve(const SearchInstance& inst, int max_steps);

// For l=1, k=1 and the flip coin, two walk steps equal the Grover iterate
// on the vertex factor. Returns the max entrywise deviation between
// U^{2t}|psi0> and the product-form Grover state over t = 1..ceil(pi
// sqrt(N)/2). Requires n <= 512.
double grover_equivalence_check(int n);

} // namespace lackwalk
