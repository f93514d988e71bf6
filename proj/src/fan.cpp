#include "pebbletree/fan.hpp"

#include <algorithm>
#include <random>

namespace pebbletree {

Ambient::Ambient(const Params& p) : params(p) {
    requireValid(p);
    size = p.ambientSize();
    int ell = p.leaves, b = p.balanced, u = p.unbalanced;
    blocks.emplace_back(1, ell * (b + 1) - 1);  // I_0, may be empty
    for (int i = 1; i <= u; ++i)
        blocks.emplace_back(ell * (b + i), ell * (b + i + 1) - 1);
    dim = 0;
    for (const auto& [lo, hi] : blocks) dim += std::max(0, hi - lo);
}

int Ambient::blockOf(int index) const {
    for (std::size_t i = 0; i < blocks.size(); ++i)
        if (index >= blocks[i].first && index <= blocks[i].second)
            return static_cast<int>(i);
    throw IndexOutOfRange("index " + std::to_string(index) + " outside I");
}

RatVec rayOf(const Ambient& a, const LabelSet& J) {
    RatVec v = RatVec::Zero(a.size);
    std::vector<char> inJ(static_cast<std::size_t>(a.size) + 1, 0);
    for (int j : J) {
        if (j < 1 || j > a.size)
            throw IndexOutOfRange("label " + std::to_string(j) + " outside I = [1," +
                                  std::to_string(a.size) + "]");
        inJ[static_cast<std::size_t>(j)] = 1;
    }
    for (const auto& [lo, hi] : a.blocks) {
        if (lo > hi) continue;
        int inside = 0;
        for (int j = lo; j <= hi; ++j) inside += inJ[static_cast<std::size_t>(j)];
        int outside = hi - lo + 1 - inside;
        for (int j = lo; j <= hi; ++j)
            v(j - 1) = inJ[static_cast<std::size_t>(j)] ? Rational(outside)
                                                        : Rational(-inside);
    }
    return v;
}

Cone coneOf(const TreePtr& t, const Ambient& a) {
    if (!isMaximal(t, a.params))
        throw NotMaximal("tree is not maximal in " + a.params.str());
    Cone c;
    c.tree = t;
    c.keys = lambdaSets(t, a.params);
    c.rays.resize(a.size, static_cast<Eigen::Index>(c.keys.size()));
    for (std::size_t j = 0; j < c.keys.size(); ++j)
        c.rays.col(static_cast<Eigen::Index>(j)) = rayOf(a, c.keys[j]);
    return c;
}

bool solveInCone(const RatMat& rays, const RatVec& v, RatVec& coords) {
    Eigen::FullPivLU<RatMat> lu(rays);
    coords = lu.solve(v);
    RatVec check = rays * coords;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (check(i) != v(i)) return false;
    return true;
}

namespace {

LabelSet removedLabelOf(const std::vector<LabelSet>& fa,
                        const std::vector<LabelSet>& fb) {
    std::vector<LabelSet> diff;
    std::set_difference(fa.begin(), fa.end(), fb.begin(), fb.end(),
                        std::back_inserter(diff));
    if (diff.size() != 1)
        throw NotAdjacent("faces differ by " + std::to_string(diff.size()) +
                          " labels");
    return diff[0];
}

int findByLabel(const Annotated& ann, const LabelSet& l) {
    for (std::size_t v = 1; v < ann.nodes.size(); ++v)
        if (!ann.nodes[v].leaf && ann.lambda(static_cast<int>(v)) == l)
            return static_cast<int>(v);
    return -1;
}

// Closest descendants of v (v included) carrying a pebble of the color;
// never descends into the barrier subtree.
void closestPebbled(const Annotated& ann, int v, int color, int barrier,
                    std::vector<int>& out) {
    if (v == barrier) return;
    const auto& n = ann.nodes[static_cast<std::size_t>(v)];
    if (n.hasPebble(color)) {
        out.push_back(v);
        return;
    }
    for (int k : n.kids) closestPebbled(ann, k, color, barrier, out);
}

void addCoeff(std::map<LabelSet, Rational>& coeffs, const Ambient& amb,
              const LabelSet& key, const Rational& c) {
    if (isZero(rayOf(amb, key))) return;  // leaves, the root, full blocks
    coeffs[key] += c;
}

// Adds sign * sum over the closest color-pebbled subtrees U of start (with
// children V) of (ray(U) - ray(V)).
void addChainExpansion(std::map<LabelSet, Rational>& coeffs, const Ambient& amb,
                       const Annotated& ann, int start, int color, int sign,
                       int barrier = -1) {
    std::vector<int> us;
    closestPebbled(ann, start, color, barrier, us);
    for (int u : us) {
        const auto& n = ann.nodes[static_cast<std::size_t>(u)];
        addCoeff(coeffs, amb, ann.lambda(u), sign);
        addCoeff(coeffs, amb, ann.lambda(n.kids.at(0)), -sign);
    }
}

void dropZeroCoefficients(Dependence& dep) {
    for (auto it = dep.coefficients.begin(); it != dep.coefficients.end();)
        it = it->second == 0 ? dep.coefficients.erase(it) : std::next(it);
}

std::vector<int> maskDiffColors(unsigned has, unsigned minus) {
    std::vector<int> out;
    unsigned m = has & ~minus;
    for (int c = 1; m; ++c, m >>= 1)
        if (m & 1u) out.push_back(c);
    return out;
}

}  // namespace

Dependence wallDependence(const TreePtr& a, const TreePtr& b, const Ambient& amb) {
    const Params& p = amb.params;
    auto fa = lambdaSets(a, p);
    auto fb = lambdaSets(b, p);
    Dependence dep;
    dep.exchangedA = removedLabelOf(fa, fb);
    dep.exchangedB = removedLabelOf(fb, fa);
    dep.flipCase = classifyFlip(a, b, p);
    std::vector<LabelSet> keys;
    std::set_union(fa.begin(), fa.end(), fb.begin(), fb.end(),
                   std::back_inserter(keys));
    RatMat m(amb.size, static_cast<Eigen::Index>(keys.size()));
    for (std::size_t j = 0; j < keys.size(); ++j)
        m.col(static_cast<Eigen::Index>(j)) = rayOf(amb, keys[j]);
    Eigen::FullPivLU<RatMat> lu(m);
    RatMat kernel = lu.kernel();
    if (kernel.cols() != 1)
        throw CertificationFailed("wall has a " + std::to_string(kernel.cols()) +
                                  "-dimensional dependence space");
    auto indexOfKey = [&keys](const LabelSet& l) {
        return static_cast<Eigen::Index>(
            std::lower_bound(keys.begin(), keys.end(), l) - keys.begin());
    };
    Rational sum = kernel(indexOfKey(dep.exchangedA), 0) +
                   kernel(indexOfKey(dep.exchangedB), 0);
    if (sum == 0)
        throw CertificationFailed("wall dependence cannot be normalized");
    Rational scale = Rational(2) / sum;
    for (std::size_t j = 0; j < keys.size(); ++j) {
        Rational c = kernel(static_cast<Eigen::Index>(j), 0) * scale;
        if (c != 0) dep.coefficients[keys[j]] = c;
    }
    return dep;
}

Dependence templateDependence(const TreePtr& a, const TreePtr& b,
                              const Ambient& amb) {
    const Params& p = amb.params;
    auto fa = lambdaSets(a, p);
    auto fb = lambdaSets(b, p);
    LabelSet remA = removedLabelOf(fa, fb);
    LabelSet remB = removedLabelOf(fb, fa);
    Annotated annA = annotate(a, p);
    Annotated annB = annotate(b, p);
    int nA = findByLabel(annA, remA);
    int nB = findByLabel(annB, remB);
    if (nA < 0 || nB < 0) throw NotAdjacent("exchanged label not found");

    Dependence dep;
    dep.exchangedA = remA;
    dep.exchangedB = remB;
    auto& coeffs = dep.coefficients;
    addCoeff(coeffs, amb, remA, 1);
    addCoeff(coeffs, amb, remB, 1);

    const auto& sA = annA.nodes[static_cast<std::size_t>(nA)];
    const auto& sB = annB.nodes[static_cast<std::size_t>(nB)];
    bool aUnary = sA.kids.size() == 1;
    bool bUnary = sB.kids.size() == 1;

    if (!aUnary && !bUnary) {
        // rotation at a pebble-free node
        dep.flipCase = 1;
        int ra = sA.parent;
        const auto& rn = annA.nodes[static_cast<std::size_t>(ra)];
        bool sFirst = rn.kids[0] == nA;
        int yMid = sFirst ? sA.kids[1] : sA.kids[0];
        addCoeff(coeffs, amb, annA.lambda(ra), -1);
        addCoeff(coeffs, amb, annA.lambda(yMid), -1);
        unsigned bR = rn.balancedMask;
        for (int c : maskDiffColors(sA.balancedMask, bR))
            addChainExpansion(coeffs, amb, annA, nA, c, -1);
        for (int c : maskDiffColors(sB.balancedMask, bR))
            addChainExpansion(coeffs, amb, annB, nB, c, -1);
        for (int c : maskDiffColors(annA.nodes[static_cast<std::size_t>(yMid)].balancedMask, bR))
            addChainExpansion(coeffs, amb, annA, yMid, c, 1);
        dropZeroCoefficients(dep);
        return dep;
    }

    if (aUnary && bUnary) {
        const auto& parA = annA.nodes[static_cast<std::size_t>(sA.parent)];
        if (parA.kids.size() == 1) {
            // two pebbles split over a unary chain
            dep.flipCase = 5;
            addCoeff(coeffs, amb, annA.lambda(sA.parent), -1);
            addCoeff(coeffs, amb, annA.lambda(sA.kids[0]), -1);
            dropZeroCoefficients(dep);
            return dep;
        }
        // pebble hops across a binary node
        dep.flipCase = 4;
        int color = sA.pebbles.at(0);
        int ra = sA.parent;
        int x = sA.kids[0];
        int y = parA.kids[0] == nA ? parA.kids[1] : parA.kids[0];
        addCoeff(coeffs, amb, annA.lambda(x), -1);
        addCoeff(coeffs, amb, annA.lambda(y), -1);
        int u0 = -1;
        for (int v = annA.nodes[static_cast<std::size_t>(ra)].parent; v >= 0;
             v = annA.nodes[static_cast<std::size_t>(v)].parent)
            if (annA.nodes[static_cast<std::size_t>(v)].hasPebble(color)) {
                u0 = v;
                break;
            }
        if (u0 >= 0) {
            int v0 = annA.nodes[static_cast<std::size_t>(u0)].kids.at(0);
            addCoeff(coeffs, amb, annA.lambda(u0), -1);
            addCoeff(coeffs, amb, annA.lambda(v0), 1);
            addChainExpansion(coeffs, amb, annA, v0, color, 1, ra);
        } else {
            addChainExpansion(coeffs, amb, annA, 0, color, 1, ra);
        }
        dropZeroCoefficients(dep);
        return dep;
    }

    // one side unary, the other binary: a pebble slides along an arc
    const Annotated& annU = aUnary ? annA : annB;
    int nU = aUnary ? nA : nB;
    const auto& sU = annU.nodes[static_cast<std::size_t>(nU)];
    int color = sU.pebbles.at(0);
    int ru = sU.parent;
    const auto& rn = annU.nodes[static_cast<std::size_t>(ru)];
    addCoeff(coeffs, amb, annU.lambda(ru), -1);
    int child = sU.kids[0];
    if (rn.kids[0] == nU) {
        dep.flipCase = 2;
        int y = rn.kids[1];
        addCoeff(coeffs, amb, annU.lambda(child), -1);  // X
        addChainExpansion(coeffs, amb, annU, y, color, 1);
    } else {
        dep.flipCase = 3;
        int x = rn.kids[0];
        addCoeff(coeffs, amb, annU.lambda(child), -1);  // Y
        addChainExpansion(coeffs, amb, annU, x, color, 1);
    }
    dropZeroCoefficients(dep);
    return dep;
}

RatVec witnessVector(const Ambient& a) {
    const Params& p = a.params;
    int ell = p.leaves;
    RatVec v = RatVec::Zero(a.size);
    for (int i = 1; i <= ell - 2; ++i) {
        LabelSet J;
        for (int j = 1; j <= i; ++j) J.push_back(j);
        v += rayOf(a, J);
    }
    for (int i = 1; i <= p.balanced; ++i) {
        LabelSet J;
        for (int j = ell * i; j <= ell * (i + 1) - 1; ++j) J.push_back(j);
        Rational w = Rational(Int(1) << (ell + i));
        v += w * rayOf(a, J);
    }
    for (int i = 1; i <= p.unbalanced; ++i) {
        LabelSet J;
        for (int j = ell * (p.balanced + i) + 1; j <= ell * (p.balanced + i + 1) - 1; ++j)
            J.push_back(j);
        Rational w = Rational(Int(1) << (ell + p.balanced + i));
        v += w * rayOf(a, J);
    }
    return v;
}

namespace {

// Coordinates of an integer vector of H in the block-difference lattice
// basis (e_{j} - e_{j+1} within each block): partial sums per block.
RatVec latticeCoordinates(const Ambient& a, const RatVec& r) {
    RatVec out(a.dim);
    Eigen::Index k = 0;
    for (const auto& [lo, hi] : a.blocks) {
        Rational partial = 0;
        for (int j = lo; j < hi; ++j) {
            partial += r(j - 1);
            out(k++) = partial;
        }
    }
    return out;
}

bool coneLatticeDetUnit(const Ambient& a, const Cone& c) {
    RatMat m(a.dim, a.dim);
    for (Eigen::Index j = 0; j < m.cols(); ++j)
        m.col(j) = latticeCoordinates(a, c.rays.col(j));
    Eigen::FullPivLU<RatMat> lu(m);
    Rational det = lu.determinant();
    return det == 1 || det == -1;
}

bool dependenceEquals(const Dependence& x, const Dependence& y) {
    return x.coefficients == y.coefficients && x.exchangedA == y.exchangedA &&
           x.exchangedB == y.exchangedB;
}

}  // namespace

FanCertificate certifyFan(const Params& p, int cap, unsigned long long seed,
                          int samples) {
    requireWithinCap(p, cap);
    Ambient amb(p);
    FanCertificate cert;
    cert.params = p;
    cert.seed = seed;
    FlipGraph graph = buildFlipGraph(p, cap);
    std::vector<Cone> cones;
    cones.reserve(graph.vertices.size());
    cert.coneCount = static_cast<int>(graph.vertices.size());
    cert.allSimplicial = true;
    for (const auto& t : graph.vertices) {
        cones.push_back(coneOf(t, amb));
        const Cone& c = cones.back();
        bool simplicial = static_cast<int>(c.keys.size()) == amb.dim &&
                          Eigen::FullPivLU<RatMat>(c.rays).rank() == amb.dim;
        if (!simplicial) {
            cert.allSimplicial = false;
            cert.failures.push_back("cone of " + serialize(t) + " is not simplicial");
        }
    }

    cert.witness = witnessVector(amb);
    cert.witnessCones = 0;
    for (std::size_t i = 0; i < cones.size(); ++i) {
        RatVec coords;
        if (!solveInCone(cones[i].rays, cert.witness, coords)) continue;
        bool interior = true;
        for (Eigen::Index j = 0; j < coords.size(); ++j)
            if (coords(j) <= 0) interior = false;
        if (interior) {
            ++cert.witnessCones;
            cert.witnessTree = static_cast<int>(i);
        }
    }
    if (cert.witnessCones != 1)
        cert.failures.push_back("witness vector lies in " +
                                std::to_string(cert.witnessCones) +
                                " open cones (expected 1)");

    for (const auto& e : graph.edges) {
        WallRecord w;
        w.a = e.a;
        w.b = e.b;
        const TreePtr& ta = graph.vertices[static_cast<std::size_t>(e.a)];
        const TreePtr& tb = graph.vertices[static_cast<std::size_t>(e.b)];
        Dependence dep = wallDependence(ta, tb, amb);
        w.flipCase = dep.flipCase;
        w.coefficients = dep.coefficients;
        auto ca = dep.coefficients.find(dep.exchangedA);
        auto cb = dep.coefficients.find(dep.exchangedB);
        w.exchangedUnit = ca != dep.coefficients.end() &&
                          cb != dep.coefficients.end() && ca->second == 1 &&
                          cb->second == 1;
        Dependence tpl = templateDependence(ta, tb, amb);
        w.matchesTemplate = dependenceEquals(dep, tpl) && tpl.flipCase == dep.flipCase;
        if (!w.exchangedUnit)
            cert.failures.push_back("wall " + std::to_string(e.a) + "-" +
                                    std::to_string(e.b) +
                                    ": exchanged coefficients are not both 1");
        if (!w.matchesTemplate)
            cert.failures.push_back("wall " + std::to_string(e.a) + "-" +
                                    std::to_string(e.b) +
                                    ": dependence does not match its template");
        cert.walls.push_back(std::move(w));
    }

    cert.smooth = true;
    for (std::size_t i = 0; i < cones.size(); ++i)
        if (!coneLatticeDetUnit(amb, cones[i])) {
            cert.smooth = false;
            cert.failures.push_back("cone of " + serialize(cones[i].tree) +
                                    " is not unimodular");
        }

    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> dist(-50, 50);
    cert.sampleCount = samples;
    cert.samplesCovered = true;
    for (int s = 0; s < samples; ++s) {
        RatVec x(amb.size);
        for (Eigen::Index i = 0; i < x.size(); ++i) x(i) = dist(rng);
        for (const auto& [lo, hi] : amb.blocks) {
            if (lo > hi) continue;
            Rational mean = 0;
            for (int j = lo; j <= hi; ++j) mean += x(j - 1);
            mean /= (hi - lo + 1);
            for (int j = lo; j <= hi; ++j) x(j - 1) -= mean;
        }
        bool covered = false;
        for (const auto& c : cones) {
            RatVec coords;
            if (!solveInCone(c.rays, x, coords)) continue;
            bool nonneg = true;
            for (Eigen::Index j = 0; j < coords.size(); ++j)
                if (coords(j) < 0) nonneg = false;
            if (nonneg) {
                covered = true;
                break;
            }
        }
        if (!covered) {
            cert.samplesCovered = false;
            cert.failures.push_back("sampled point " + std::to_string(s) +
                                    " lies in no closed cone");
        }
    }

    cert.ok = cert.failures.empty();
    return cert;
}

bool checkSmooth(const Params& p, int cap) {
    Ambient amb(p);
    for (const auto& t : enumerateTrees(p, true, cap))
        if (!coneLatticeDetUnit(amb, coneOf(t, amb))) return false;
    return true;
}

}  // namespace pebbletree
