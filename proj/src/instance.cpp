#include "lackwalk/instance.hpp"

#include "lackwalk/errors.hpp"

namespace lackwalk {

SearchInstance validate(const SearchInstance& inst) {
    if (inst.n < 3)
        throw DomainError("N < 3: got N = " + std::to_string(inst.n));
    if (inst.loops < 0)
        throw DomainError("l < 0: got l = " + std::to_string(inst.loops));
    if (inst.marked < 1)
        throw DomainError("k < 1: got k = " + std::to_string(inst.marked));
    if (inst.marked >= inst.n)
        throw DomainError("k >= N: got k = " + std::to_string(inst.marked) +
                          " with N = " + std::to_string(inst.n));
    return inst;
}

std::string to_string(CoinKind coin) {
    return coin == CoinKind::Flip ? "flip" : "skw";
}

std::string to_string(WalkKind walk) {
    switch (walk) {
    case WalkKind::DiscreteSubspace: return "discrete-subspace";
    case WalkKind::DiscreteFull: return "discrete-full";
    case WalkKind::ContinuousSubspace: return "continuous-subspace";
    case WalkKind::ContinuousFull: return "continuous-full";
    }
    return "?";
}

} // namespace lackwalk
