#ifndef PEBBLETREE_POLYTOPE_HPP
#define PEBBLETREE_POLYTOPE_HPP

#include <optional>
#include <string>
#include <vector>

#include "pebbletree/fan.hpp"

namespace pebbletree {

/**
 * A set function on [n] with f(empty) = 0, stored densely by bitmask.
 * delta() is the minimal submodularity slack over incomparable pairs;
 * it is absent (+infinity) when n <= 1.
 */
struct SetFunction {
    int n = 0;
    std::vector<Rational> values;  // size 1 << n

    const Rational& operator()(unsigned mask) const { return values[mask]; }
    Rational maxValue() const;
    bool isSubmodular() const;
    std::optional<Rational> delta() const;
};

/** X -> n|X| - |X|(|X|-1)/2: strictly submodular with slack 1 for n >= 2. */
SetFunction baseSubmodular(int n);

/**
 * Three submodular height functions: f and g on leaf subsets, h on color
 * subsets.  defaultHeights rescales the base function so that the
 * inequalities delta f > 4(lb+lu-u)(max g + max h) and
 * delta g > (lb+lu-u+1) max h hold by construction.
 */
struct HeightTriple {
    SetFunction f, g, h;
};
HeightTriple defaultHeights(const Params& p);

/** One inequality <normal, x> <= rhs of the H-representation. */
struct HRow {
    int s = 1, t = 1;            // leaf interval
    unsigned colorMask = 0;      // subset B of [b+u]
    LabelSet key;                // [s,t] boxtimes B
    RatVec normal;
    Rational rhs;
    bool zeroNormal = false;
};

/**
 * The inequality system of the polytope: one row per (interval, color
 * subset) pair, plus the block equalities defining the subspace H.
 */
struct HRep {
    Params params;
    Ambient ambient;
    HeightTriple heights;
    std::vector<HRow> rows;

    const HRow* rowFor(const LabelSet& key) const;
    explicit HRep(const Params& p) : params(p), ambient(p) {}
};

/**
 * Builds the H-representation, verifying the height hypotheses first.
 * Throws HypothesisViolated naming the failed inequality.
 */
HRep buildHRep(const Params& p, const HeightTriple& ht);

/**
 * The vertex of a maximal tree: unique solution of the block equalities
 * plus the rows indexed by Lambda(T) set to equality.
 * Throws SingularSystem if the square system degenerates.
 */
RatVec vertexOf(const TreePtr& t, const HRep& hrep);

struct PolytopeCertificate {
    Params params;
    bool ok = false;
    int vertexCount = 0;
    int wallCount = 0;
    bool wallCrossingsPositive = false;
    bool verticesDistinct = false;
    bool tightnessExact = false;     // tight rows at vertex(T) = Lambda(T)
    bool facesConsistent = false;    // Lambda(face) rows tight on refinements
    std::vector<long long> fvector;  // by dimension, includes the polytope
    bool fvectorMatchesPoset = false;
    bool eulerOk = false;
    std::vector<std::string> failures;
};

/**
 * Certifies the polytope for the given heights: strictly positive wall
 * crossing values, pairwise distinct vertices with exact tightness
 * patterns, face consistency, f-vector against the contraction poset, and
 * the Euler alternating sum.
 */
PolytopeCertificate certifyPolytope(const Params& p, const HeightTriple& ht,
                                    int cap = kDefaultCap);

/**
 * Face counts by dimension 0..dim (vertices first, the polytope itself
 * last), computed from the contraction poset: a tree with n nodes spans the
 * face of dimension dim+1-n.
 */
std::vector<long long> fVector(const Params& p, int cap = kDefaultCap);

/**
 * The face of the one-color polytope attached to a signature: rows with
 * key {i} boxtimes [1] are tight for every i whose letter is I.  Returns
 * its vertices (maximal trees of the upper set of the signature generator),
 * dimension, and f-vector.  Throws BadSignature.
 */
struct AlphaFace {
    std::string alpha;
    Params params;
    TreePtr generator;
    std::vector<TreePtr> vertexTrees;
    std::vector<RatVec> vertices;
    int dimension = 0;
    std::vector<long long> fvector;
};
AlphaFace assocoipahedronFace(const std::string& alpha, const HeightTriple& ht,
                              int cap = kDefaultCap);

/** Coordinate permutation of I induced by mirroring (an isometry). */
std::vector<int> mirrorIndexPermutation(const Params& p);

}  // namespace pebbletree

#endif  // PEBBLETREE_POLYTOPE_HPP
