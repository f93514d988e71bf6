#ifndef PEBBLETREE_COMPLEX_HPP
#define PEBBLETREE_COMPLEX_HPP

#include <string>
#include <unordered_map>
#include <vector>

#include "pebbletree/labels.hpp"
#include "pebbletree/tree.hpp"

namespace pebbletree {

/**
 * Contraction of the (non-leaf, non-root) node at `path`: the node is
 * replaced by its children in its parent's child list and its pebbles move
 * to the parent.  Throws BadPath when a leaf or the root is addressed.
 */
TreePtr contract(const TreePtr& t, const Path& path);

/**
 * The contraction poset of a family: all trees, ordered by "obtained by
 * contractions from".  Covers are single contractions; the rank of a tree
 * is its node count.
 */
struct ContractionPoset {
    Params params;
    std::vector<TreePtr> trees;       // sorted by canonical serialization
    std::vector<int> rank;            // node counts
    std::vector<std::vector<int>> coversDown;  // tree -> single contractions
    std::vector<std::vector<int>> coversUp;

    int indexOf(const TreePtr& t) const;
    int indexOfKey(const std::string& serialized) const;
    /** Rank histogram indexed from rank 1 (the minimal corolla). */
    std::vector<long long> rankHistogram() const;
    /** ids of elements >= the given element (inclusive). */
    std::vector<int> upperSet(int id) const;
    bool leq(int lo, int hi) const;
    std::vector<int> maximalElements() const;
    int minimalElement() const;

    std::unordered_map<std::string, int> index;
};

ContractionPoset buildPoset(const Params& p, int cap = kDefaultCap);

/**
 * The simplicial complex with one face per tree, encoded by label sets.
 * faces[i] is the simplex of poset.trees[i].
 */
struct Complex {
    Params params;
    ContractionPoset poset;
    std::vector<std::vector<LabelSet>> faces;
    std::vector<LabelSet> groundSet;  // distinct label sets, sorted
    int facetSize = 0;                // maximal-tree rank minus one
    std::vector<int> facets;          // ids of maximal faces
};

Complex buildComplex(const Params& p, int cap = kDefaultCap);

struct RidgeInfo {
    int treeId = -1;      // corank-1 tree realizing the ridge
    int facetCount = 0;
    int caseKind = 0;     // 1 = ternary node, 2 = binary with pebble,
                          // 3 = unary with two pebbles
};

struct PseudomanifoldReport {
    bool ok = false;
    int ridgeCount = 0;
    int facetCount = 0;
    std::vector<RidgeInfo> ridges;
    std::vector<std::string> violations;
};

/** Verifies that every ridge lies in exactly two facets. */
PseudomanifoldReport checkPseudomanifold(const Complex& c);

/**
 * Flip graph on maximal trees; each edge is labeled with its local move
 * type (1..5) and with the label sets exchanged by the flip.
 */
struct FlipGraph {
    Params params;
    std::vector<TreePtr> vertices;  // sorted by canonical serialization
    struct Edge {
        int a = -1, b = -1;   // vertex ids, a < b
        int flipCase = 0;     // 1..5
        LabelSet removedA;    // label in Lambda(a) \ Lambda(b)
        LabelSet removedB;
    };
    std::vector<Edge> edges;
    std::vector<std::vector<int>> adjacency;
};

FlipGraph buildFlipGraph(const Params& p, int cap = kDefaultCap);

/**
 * Classifies the flip between two adjacent maximal trees into one of the
 * five local move types.  Throws NotAdjacent.
 */
int classifyFlip(const TreePtr& a, const TreePtr& b, const Params& p);

}  // namespace pebbletree

#endif  // PEBBLETREE_COMPLEX_HPP
