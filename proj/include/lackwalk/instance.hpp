#pragma once

#include <string>

namespace lackwalk {

// Marked-vertex coin: C1 = -C0 (Flip) or C1 = -I (Skw).
enum class CoinKind { Flip, Skw };

// Which engine evolves the instance.
enum class WalkKind { DiscreteSubspace, DiscreteFull, ContinuousSubspace, ContinuousFull };

constexpr bool is_continuous(WalkKind w) {
    return w == WalkKind::ContinuousSubspace || w == WalkKind::ContinuousFull;
}

// Search on the complete graph of n vertices, each carrying `loops`
// self-loops, with `marked` target vertices. Marked set is vertices
// 1..marked by convention; complete-graph symmetry makes the identity
// of the marked set irrelevant.
struct SearchInstance {
    int n = 0;        // vertex count, >= 3
    int loops = 0;    // self-loops per vertex, >= 0
    int marked = 1;   // marked vertex count, 1 <= marked < n
    CoinKind coin = CoinKind::Flip;
};

// Checks all bounds; returns the instance unchanged or throws DomainError
// naming the violated bound. Never clamps.
SearchInstance validate(const SearchInstance& inst);

std::string to_string(CoinKind coin);
std::string to_string(WalkKind walk);

} // namespace lackwalk
