#ifndef PEBBLETREE_PARAMS_HPP
#define PEBBLETREE_PARAMS_HPP

#include <string>

#include "pebbletree/errors.hpp"

namespace pebbletree {

/** Default cap on leaves * (colors + 1) for exhaustive constructions. */
inline constexpr int kDefaultCap = 24;

/**
 * Size parameters of a pebble tree family: number of leaves, number of
 * balanced colors and number of unbalanced colors.
 *
 * Colors are numbered 1..b+u, with 1..b balanced and b+1..b+u unbalanced
 * for the whole tree.
 */
struct Params {
    int leaves = 1;
    int balanced = 0;
    int unbalanced = 0;

    int colors() const { return balanced + unbalanced; }

    bool isBalancedColor(int color) const {
        return color >= 1 && color <= balanced;
    }
    bool isUnbalancedColor(int color) const {
        return color > balanced && color <= colors();
    }

    /** Size of the ambient index set I = [l(b+u+1)-1]. */
    int ambientSize() const { return leaves * (colors() + 1) - 1; }

    /** Node count of a maximal tree: l(1+b+u)-u-1. */
    int maximalRank() const {
        return leaves * (1 + colors()) - unbalanced - 1;
    }

    /** Dimension of the subspace where the fan and polytope live. */
    int subspaceDim() const {
        int d = leaves + leaves * balanced + leaves * unbalanced - unbalanced - 2;
        if (leaves == 1 && balanced == 0) d += 1;  // block I_0 is empty
        return d;
    }

    /** Cost proxy l(b+u+1) used by the enumeration cap. */
    int enumerationWeight() const { return leaves * (colors() + 1); }

    bool operator==(const Params&) const = default;

    std::string str() const {
        return "(l=" + std::to_string(leaves) + ",b=" + std::to_string(balanced) +
               ",u=" + std::to_string(unbalanced) + ")";
    }
};

inline void requireValid(const Params& p) {
    if (p.leaves < 1 || p.balanced < 0 || p.unbalanced < 0 || p.colors() > 30)
        throw Error("invalid parameters " + p.str());
}

inline void requireWithinCap(const Params& p, int cap) {
    requireValid(p);
    if (p.enumerationWeight() > cap)
        throw CapExceeded("parameters " + p.str() + " exceed cap " +
                          std::to_string(cap) + " on l(b+u+1)");
}

}  // namespace pebbletree

#endif  // PEBBLETREE_PARAMS_HPP
