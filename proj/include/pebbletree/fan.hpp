#ifndef PEBBLETREE_FAN_HPP
#define PEBBLETREE_FAN_HPP

#include <map>
#include <string>
#include <vector>

#include "pebbletree/complex.hpp"
#include "pebbletree/labels.hpp"
#include "pebbletree/rational.hpp"

namespace pebbletree {

/**
 * The ambient index set I = [l(b+u+1)-1] split into the block I_0 of the
 * interval part and balanced colors, and one block I_i per unbalanced
 * color.  The fan lives in the subspace H where every block sums to zero.
 */
struct Ambient {
    Params params;
    int size = 0;                               // |I|
    int dim = 0;                                // dim H
    std::vector<std::pair<int, int>> blocks;    // 1-based inclusive; I_0 first

    explicit Ambient(const Params& p);
    int blockOf(int index) const;               // 0..u
};

/**
 * The ray vector of a subset J of I: per block, |I_i \ J| on I_i n J and
 * -|I_i n J| on I_i \ J.  Throws IndexOutOfRange when J leaves I.
 */
RatVec rayOf(const Ambient& a, const LabelSet& J);

/** Rays of the maximal cone of a maximal tree, one per label of Lambda(T). */
struct Cone {
    TreePtr tree;
    std::vector<LabelSet> keys;   // sorted
    RatMat rays;                  // |I| x dim, column j = ray of keys[j]
};
Cone coneOf(const TreePtr& t, const Ambient& a);

/**
 * The linear dependence supported on the rays of two adjacent maximal
 * cones, normalized so that the two exchanged rays have coefficient sum 2.
 */
struct Dependence {
    std::map<LabelSet, Rational> coefficients;
    LabelSet exchangedA, exchangedB;
    int flipCase = 0;  // 1..5
};

/** Computes the dependence as the nullspace of the joint ray matrix. */
Dependence wallDependence(const TreePtr& a, const TreePtr& b, const Ambient& amb);

/**
 * The same dependence assembled from the five local flip templates, with
 * pebbled-subtree chains expanded through the closest-pebbled-descendant
 * construction.  Used to cross-check wallDependence.
 */
Dependence templateDependence(const TreePtr& a, const TreePtr& b, const Ambient& amb);

/**
 * The anchor vector placed inside a single maximal cone: the sum of the
 * comb rays plus, per color block, a ray of the block weighted by a power
 * of two.
 */
RatVec witnessVector(const Ambient& a);

struct WallRecord {
    int a = -1, b = -1;
    int flipCase = 0;
    std::map<LabelSet, Rational> coefficients;
    bool exchangedUnit = false;  // both exchanged coefficients equal 1
    bool matchesTemplate = false;
};

struct FanCertificate {
    Params params;
    bool ok = false;
    int coneCount = 0;
    bool allSimplicial = false;
    int witnessCones = 0;            // number of open cones containing the witness
    int witnessTree = -1;
    RatVec witness;
    std::vector<WallRecord> walls;
    bool smooth = false;             // every cone an integral basis of H
    int sampleCount = 0;
    bool samplesCovered = false;     // every sample inside >= 1 closed cone
    unsigned long long seed = 0;
    std::vector<std::string> failures;
};

/**
 * Certifies that the cones of the maximal trees form an essential complete
 * simplicial fan: every cone simplicial, the witness vector in exactly one
 * open cone, and every wall dependence with both exchanged coefficients
 * equal to one.  Also checks smoothness and samples points of H for
 * coverage by closed cones.
 */
FanCertificate certifyFan(const Params& p, int cap = kDefaultCap,
                          unsigned long long seed = 0, int samples = 100);

/** Determinant of the ray matrix in a lattice basis of H, per cone. */
bool checkSmooth(const Params& p, int cap = kDefaultCap);

/** Solves M c = v for a full-column-rank M; empty result if inconsistent. */
bool solveInCone(const RatMat& rays, const RatVec& v, RatVec& coords);

}  // namespace pebbletree

#endif  // PEBBLETREE_FAN_HPP
