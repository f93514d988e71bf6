#ifndef PEBBLETREE_TREE_HPP
#define PEBBLETREE_TREE_HPP

#include <map>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "pebbletree/params.hpp"

namespace pebbletree {

struct TreeNode;
using TreePtr = std::shared_ptr<const TreeNode>;
using Path = std::vector<int>;  // child indices from the root

/**
 * An ordered tree with a multiset of colored pebbles at each node.
 *
 * Values are immutable after construction; subtrees are shared freely.
 * A leaf has no children and no pebbles.  Structurally malformed trees
 * (e.g. a childless node carrying pebbles) are representable so that
 * validate() can report them.
 */
struct TreeNode {
    std::vector<int> pebbles;    // sorted ascending
    std::vector<TreePtr> children;
    int leafCount = 1;           // leaves of this subtree
    int nodeCount = 0;           // internal nodes of this subtree (leaf = 0)

    bool isLeaf() const { return children.empty(); }
    int arity() const { return static_cast<int>(children.size()); }
};

/** The unique leaf (shared). */
TreePtr leaf();

/** Builds a node; the pebble list is sorted on construction. */
TreePtr node(std::vector<int> pebbles, std::vector<TreePtr> children);

bool treeEquals(const TreePtr& a, const TreePtr& b);

/** Subtree addressed by a child-index path from the root. Throws BadPath. */
TreePtr subtreeAt(const TreePtr& t, const Path& path);

/** Number of pebbles of the given color in the whole subtree. */
int pebbleCount(const TreePtr& t, int color);

/** Pebble default: leaves minus pebbles of the given color. */
int pebbleDefault(const TreePtr& t, int color);

struct TreeStats {
    int nodeCount = 0;
    int leafCount = 0;
    std::map<int, int> perColorDefault;
};
TreeStats stats(const TreePtr& t, const Params& p);

struct Violation {
    std::string clause;  // "leaf-pebble", "unary-pebble-missing", ...
    Path path;
    std::string message;
};

/**
 * Checks the pebble tree conditions against the given parameters and
 * returns every violated clause; an empty result means the tree is valid.
 */
std::vector<Violation> validate(const TreePtr& t, const Params& p);
bool isValid(const TreePtr& t, const Params& p);

/**
 * Whether t is a maximal pebble tree: every unary node carries exactly one
 * pebble, every binary node none, and there is no node of arity >= 3.
 * Validity against p is part of the check.
 */
bool isMaximal(const TreePtr& t, const Params& p);

/**
 * Canonical serialization: {"pebbles":[...],"children":[...]} with sorted
 * pebble lists and no whitespace.  Used as the stable key for orderings.
 */
std::string serialize(const TreePtr& t);

/**
 * Parses a serialized tree and validates it against p.
 * Throws ParseError (with byte offset) on malformed input and
 * ValidationError-style Error listing the violations otherwise.
 */
TreePtr deserialize(std::string_view text, const Params& p);

/** Parse failure carrying the violations reported by validate(). */
class ValidationError : public Error {
  public:
    ValidationError(const std::string& what, std::vector<Violation> violations)
        : Error(what), violations(std::move(violations)) {}
    std::vector<Violation> violations;
};

std::string pathToString(const Path& path);

}  // namespace pebbletree

#endif  // PEBBLETREE_TREE_HPP
