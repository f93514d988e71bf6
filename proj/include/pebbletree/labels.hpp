#ifndef PEBBLETREE_LABELS_HPP
#define PEBBLETREE_LABELS_HPP

#include <vector>

#include "pebbletree/tree.hpp"

namespace pebbletree {

/** A subset of the index set I = [l(b+u+1)-1], kept sorted. */
using LabelSet = std::vector<int>;

/** [s,t-1] together with the color chunks [l*p+s-1, l*p+t-1] for p in B. */
LabelSet boxTimes(int ell, int s, int t, const std::vector<int>& colors);

/** Only the color chunks (the second part of boxTimes). */
LabelSet oTimes(int ell, int s, int t, const std::vector<int>& colors);

/**
 * Flat annotation of a pebble tree: for every node (leaves included, in
 * preorder) its parent, children, leaf interval [s,t] and the set of colors
 * on which the subtree is balanced.
 */
struct Annotated {
    struct Node {
        int parent = -1;
        std::vector<int> kids;
        int s = 0, t = 0;            // leaf interval, 1-based inclusive
        unsigned balancedMask = 0;   // bit c-1 set iff color c has default 0
        bool leaf = false;
        std::vector<int> pebbles;    // pebbles at this node only
        bool hasPebble(int color) const {
            for (int c : pebbles)
                if (c == color) return true;
            return false;
        }
    };
    std::vector<Node> nodes;  // nodes[0] is the root
    int ell = 0;

    LabelSet lambda(int v) const;
    std::vector<int> balancedColors(int v) const;
};

Annotated annotate(const TreePtr& t, const Params& p);

/** The label set of the subtree at `path`; empty for a leaf, I_0 for the root. */
LabelSet lambdaAt(const TreePtr& t, const Path& path, const Params& p);

/**
 * The simplex of the tree: label sets of all internal non-root nodes,
 * sorted.  Faces of the pebble tree complex are exactly these collections.
 */
std::vector<LabelSet> lambdaSets(const TreePtr& t, const Params& p);

std::string labelSetToString(const LabelSet& s);
std::string faceToString(const std::vector<LabelSet>& face);

}  // namespace pebbletree

#endif  // PEBBLETREE_LABELS_HPP
