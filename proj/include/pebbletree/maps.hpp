#ifndef PEBBLETREE_MAPS_HPP
#define PEBBLETREE_MAPS_HPP

#include <string>
#include <vector>

#include "pebbletree/tree.hpp"

namespace pebbletree {

/**
 * Result of a map that moves a tree into another family.  Colors are
 * renumbered so that balanced colors occupy 1..b' and unbalanced colors
 * b'+1..b'+u', preserving relative order within each group.
 */
struct Recolored {
    TreePtr tree;
    Params params;
};

/** Reverses the children of every node; pebbles are preserved. */
TreePtr mirror(const TreePtr& t);

/**
 * Puts a new unary root with a single pebble of the (unbalanced) color on
 * top of t, turning that color balanced.  Throws NotUnbalanced when the
 * color is balanced for t.
 */
Recolored balance(const TreePtr& t, const Params& p, int color);

/**
 * Replaces every leaf by a unary node with one pebble of a fresh color over
 * a leaf.  freshColor must not lie in [1, b+u]; it becomes balanced color
 * b+1 after renumbering.  Throws ColorInUse.
 */
Recolored insert(const TreePtr& t, const Params& p, int freshColor);

/**
 * Hangs a fully balanced tree from its x-th leaf (1-based).  The old root
 * position becomes a leaf of the result.  Throws UnbalancedInput when the
 * family has unbalanced colors.
 */
TreePtr reroot(const TreePtr& t, const Params& p, int leafIndex);

/**
 * For a fully unbalanced tree with l > 1 leaves: hangs the tree from its
 * rightmost leaf, deletes the leftmost leaf placing a pebble of the fresh
 * color at its parent, and replaces every remaining leaf except the first
 * by a unary pebbled node.  The result is fully balanced with l-1 leaves.
 * Throws PreconditionFailed naming the violated clause.
 */
Recolored uproot(const TreePtr& t, const Params& p, int freshColor);

struct ONode;
using OPtr = std::shared_ptr<const ONode>;

/**
 * Rooted plane tree with one direction bit per arc; upward[i] is true when
 * the arc to child i points from the child to this node.
 */
struct ONode {
    std::vector<OPtr> children;
    std::vector<bool> upward;
    bool isLeaf() const { return children.empty(); }
};

OPtr oleaf();
OPtr onode(std::vector<OPtr> children, std::vector<bool> upward);
bool orientedEquals(const OPtr& a, const OPtr& b);

/**
 * Bijection with the all-outgoing oriented trees: orients each arc towards
 * the parent iff the child subtree is balanced and forgets the pebbles.
 * Requires a one-balanced-color family (b=1, u=0); throws WrongParams.
 */
OPtr toOriented(const TreePtr& t, const Params& p);

/**
 * Inverse of toOriented: places outdegree-1 pebbles of color 1 at every
 * node.  Validates the oriented-tree conditions; throws WrongParams.
 */
TreePtr fromOriented(const OPtr& o, Params* outParams = nullptr);

/** Canonical serialization of an oriented tree (shape plus preorder bits). */
std::string serializeOriented(const OPtr& o);

/**
 * The generator of the principal upper set attached to a signature over
 * {I,O} starting with O: a root with l - #I pebbles whose i-th child is a
 * leaf when the (i+1)-st letter is O and a pebbled unary node when it is I.
 * The family is (l, 1, 0).  Throws BadSignature.
 */
Recolored alphaGenerator(const std::string& alpha);

}  // namespace pebbletree

#endif  // PEBBLETREE_MAPS_HPP
