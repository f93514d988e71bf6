#include "pebbletree/complex.hpp"

#include <algorithm>
#include <map>

#include "pebbletree/enumerate.hpp"

namespace pebbletree {

namespace {

TreePtr contractRec(const TreePtr& t, const Path& path, std::size_t depth) {
    int i = path[depth];
    if (i < 0 || i >= t->arity()) throw BadPath("no child at " + pathToString(path));
    if (depth + 1 < path.size()) {
        std::vector<TreePtr> kids = t->children;
        kids[i] = contractRec(kids[i], path, depth + 1);
        return node(t->pebbles, std::move(kids));
    }
    const TreePtr& c = t->children[i];
    if (c->isLeaf()) throw BadPath("cannot contract a leaf at " + pathToString(path));
    std::vector<int> pebbles = t->pebbles;
    pebbles.insert(pebbles.end(), c->pebbles.begin(), c->pebbles.end());
    std::vector<TreePtr> kids;
    for (int j = 0; j < t->arity(); ++j) {
        if (j == i)
            kids.insert(kids.end(), c->children.begin(), c->children.end());
        else
            kids.push_back(t->children[j]);
    }
    return node(std::move(pebbles), std::move(kids));
}

void internalNonRootPaths(const TreePtr& t, Path& cur, std::vector<Path>& out) {
    for (int i = 0; i < t->arity(); ++i) {
        cur.push_back(i);
        if (!t->children[i]->isLeaf()) {
            out.push_back(cur);
            internalNonRootPaths(t->children[i], cur, out);
        }
        cur.pop_back();
    }
}

}  // namespace

TreePtr contract(const TreePtr& t, const Path& path) {
    if (path.empty()) throw BadPath("cannot contract the root");
    return contractRec(t, path, 0);
}

int ContractionPoset::indexOf(const TreePtr& t) const {
    return indexOfKey(serialize(t));
}

int ContractionPoset::indexOfKey(const std::string& serialized) const {
    auto it = index.find(serialized);
    return it == index.end() ? -1 : it->second;
}

std::vector<long long> ContractionPoset::rankHistogram() const {
    int top = 0;
    for (int r : rank) top = std::max(top, r);
    std::vector<long long> h(static_cast<std::size_t>(top) + 1, 0);
    for (int r : rank) ++h[static_cast<std::size_t>(r)];
    return h;
}

std::vector<int> ContractionPoset::upperSet(int id) const {
    std::vector<char> seen(trees.size(), 0);
    std::vector<int> queue{id}, out;
    seen[static_cast<std::size_t>(id)] = 1;
    while (!queue.empty()) {
        int v = queue.back();
        queue.pop_back();
        out.push_back(v);
        for (int w : coversUp[static_cast<std::size_t>(v)])
            if (!seen[static_cast<std::size_t>(w)]) {
                seen[static_cast<std::size_t>(w)] = 1;
                queue.push_back(w);
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool ContractionPoset::leq(int lo, int hi) const {
    if (lo == hi) return true;
    if (rank[static_cast<std::size_t>(lo)] >= rank[static_cast<std::size_t>(hi)])
        return false;
    std::vector<int> up = upperSet(lo);
    return std::binary_search(up.begin(), up.end(), hi);
}

std::vector<int> ContractionPoset::maximalElements() const {
    std::vector<int> out;
    for (std::size_t i = 0; i < trees.size(); ++i)
        if (coversUp[i].empty()) out.push_back(static_cast<int>(i));
    return out;
}

int ContractionPoset::minimalElement() const {
    for (std::size_t i = 0; i < trees.size(); ++i)
        if (coversDown[i].empty()) return static_cast<int>(i);
    return -1;
}

ContractionPoset buildPoset(const Params& p, int cap) {
    ContractionPoset poset;
    poset.params = p;
    poset.trees = enumerateTrees(p, false, cap);
    poset.rank.reserve(poset.trees.size());
    for (std::size_t i = 0; i < poset.trees.size(); ++i) {
        poset.index.emplace(serialize(poset.trees[i]), static_cast<int>(i));
        poset.rank.push_back(poset.trees[i]->nodeCount);
    }
    poset.coversDown.assign(poset.trees.size(), {});
    poset.coversUp.assign(poset.trees.size(), {});
    for (std::size_t i = 0; i < poset.trees.size(); ++i) {
        std::vector<Path> paths;
        Path cur;
        internalNonRootPaths(poset.trees[i], cur, paths);
        for (const auto& path : paths) {
            TreePtr smaller = contract(poset.trees[i], path);
            int j = poset.indexOf(smaller);
            if (j < 0) throw Error("contraction left the family: " + serialize(smaller));
            poset.coversDown[i].push_back(j);
            poset.coversUp[static_cast<std::size_t>(j)].push_back(static_cast<int>(i));
        }
        std::sort(poset.coversDown[i].begin(), poset.coversDown[i].end());
    }
    for (auto& ups : poset.coversUp) std::sort(ups.begin(), ups.end());
    return poset;
}

Complex buildComplex(const Params& p, int cap) {
    Complex c;
    c.params = p;
    c.poset = buildPoset(p, cap);
    c.facetSize = p.maximalRank() - 1;
    c.faces.reserve(c.poset.trees.size());
    std::map<LabelSet, int> ground;
    for (std::size_t i = 0; i < c.poset.trees.size(); ++i) {
        c.faces.push_back(lambdaSets(c.poset.trees[i], p));
        if (static_cast<int>(c.faces.back().size()) != c.poset.rank[i] - 1)
            throw Error("label collision inside " + serialize(c.poset.trees[i]));
        for (const auto& l : c.faces.back()) ground.emplace(l, 0);
        if (c.poset.rank[i] == p.maximalRank()) c.facets.push_back(static_cast<int>(i));
    }
    for (const auto& kv : ground) c.groundSet.push_back(kv.first);
    return c;
}

namespace {

// Classifies the unique node of a corank-1 tree which is neither unary with
// one pebble nor binary with no pebble: ternary (1), binary with one pebble
// (2), unary with two pebbles (3).  Returns 0 when the tree has no such
// unique node.
int irregularKind(const TreeNode* n) {
    if (n->arity() == 3 && n->pebbles.empty()) return 1;
    if (n->arity() == 2 && n->pebbles.size() == 1) return 2;
    if (n->arity() == 1 && n->pebbles.size() == 2 && n->pebbles[0] != n->pebbles[1])
        return 3;
    return 0;
}

void scanIrregular(const TreeNode* n, int& count, int& kind) {
    if (n->isLeaf()) return;
    bool regular = (n->arity() == 1 && n->pebbles.size() == 1) ||
                   (n->arity() == 2 && n->pebbles.empty());
    if (!regular) {
        ++count;
        kind = irregularKind(n);
    }
    for (const auto& c : n->children) scanIrregular(c.get(), count, kind);
}

int ridgeCaseKind(const TreePtr& t) {
    int count = 0, kind = 0;
    scanIrregular(t.get(), count, kind);
    return count == 1 ? kind : 0;
}

}  // namespace

PseudomanifoldReport checkPseudomanifold(const Complex& c) {
    PseudomanifoldReport rep;
    rep.facetCount = static_cast<int>(c.facets.size());
    std::map<std::string, int> facetsByRidge;
    for (int f : c.facets) {
        const auto& face = c.faces[static_cast<std::size_t>(f)];
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::vector<LabelSet> ridge;
            ridge.reserve(face.size() - 1);
            for (std::size_t i = 0; i < face.size(); ++i)
                if (i != drop) ridge.push_back(face[i]);
            ++facetsByRidge[faceToString(ridge)];
        }
    }
    rep.ok = true;
    for (std::size_t i = 0; i < c.faces.size(); ++i) {
        if (static_cast<int>(c.faces[i].size()) != c.facetSize - 1) continue;
        RidgeInfo info;
        info.treeId = static_cast<int>(i);
        auto it = facetsByRidge.find(faceToString(c.faces[i]));
        info.facetCount = it == facetsByRidge.end() ? 0 : it->second;
        info.caseKind = ridgeCaseKind(c.poset.trees[i]);
        if (info.facetCount != 2) {
            rep.ok = false;
            rep.violations.push_back("ridge " + faceToString(c.faces[i]) + " lies in " +
                                     std::to_string(info.facetCount) + " facets");
        }
        if (info.caseKind == 0) {
            rep.ok = false;
            rep.violations.push_back("ridge tree " + serialize(c.poset.trees[i]) +
                                     " has no unique opening node");
        }
        rep.ridges.push_back(info);
        ++rep.ridgeCount;
    }
    // every ridge key produced by facets must belong to a corank-1 tree
    if (static_cast<int>(facetsByRidge.size()) != rep.ridgeCount) {
        rep.ok = false;
        rep.violations.push_back("facet ridges do not match corank-1 trees: " +
                                 std::to_string(facetsByRidge.size()) + " vs " +
                                 std::to_string(rep.ridgeCount));
    }
    return rep;
}

namespace {

// Finds the unique label of face(a) missing from face(b); NotAdjacent if the
// faces do not differ by exactly one label on each side.
LabelSet removedLabel(const std::vector<LabelSet>& fa,
                      const std::vector<LabelSet>& fb) {
    std::vector<LabelSet> diff;
    std::set_difference(fa.begin(), fa.end(), fb.begin(), fb.end(),
                        std::back_inserter(diff));
    if (diff.size() != 1) throw NotAdjacent("faces differ by " +
                                            std::to_string(diff.size()) + " labels");
    return diff[0];
}

int flipCaseFromRidge(const TreePtr& ridgeTree, const Params& p) {
    Annotated ann = annotate(ridgeTree, p);
    for (std::size_t v = 0; v < ann.nodes.size(); ++v) {
        const auto& n = ann.nodes[v];
        if (n.leaf) continue;
        bool regular = (n.kids.size() == 1 && n.pebbles.size() == 1) ||
                       (n.kids.size() == 2 && n.pebbles.empty());
        if (regular) continue;
        if (n.kids.size() == 3 && n.pebbles.empty()) return 1;
        if (n.kids.size() == 1 && n.pebbles.size() == 2) return 5;
        if (n.kids.size() == 2 && n.pebbles.size() == 1) {
            int color = n.pebbles[0];
            unsigned bit = 1u << (color - 1);
            bool xBal = ann.nodes[static_cast<std::size_t>(n.kids[0])].balancedMask & bit;
            bool yBal = ann.nodes[static_cast<std::size_t>(n.kids[1])].balancedMask & bit;
            if (yBal && !xBal) return 2;
            if (xBal && !yBal) return 3;
            if (!xBal && !yBal) return 4;
            throw Error("both children balanced at a pebbled binary node");
        }
        throw Error("unexpected irregular node in ridge tree");
    }
    throw Error("ridge tree has no irregular node");
}

}  // namespace

int classifyFlip(const TreePtr& a, const TreePtr& b, const Params& p) {
    auto fa = lambdaSets(a, p);
    auto fb = lambdaSets(b, p);
    LabelSet removed = removedLabel(fa, fb);
    removedLabel(fb, fa);
    Annotated ann = annotate(a, p);
    Path path;
    // path of the node of a whose label is the removed one
    int target = -1;
    for (std::size_t v = 1; v < ann.nodes.size(); ++v)
        if (!ann.nodes[v].leaf && ann.lambda(static_cast<int>(v)) == removed)
            target = static_cast<int>(v);
    if (target < 0) throw NotAdjacent("exchanged label not found");
    for (int v = target; ann.nodes[static_cast<std::size_t>(v)].parent >= 0;) {
        int par = ann.nodes[static_cast<std::size_t>(v)].parent;
        const auto& kids = ann.nodes[static_cast<std::size_t>(par)].kids;
        int idx = static_cast<int>(std::find(kids.begin(), kids.end(), v) - kids.begin());
        path.push_back(idx);
        v = par;
    }
    std::reverse(path.begin(), path.end());
    return flipCaseFromRidge(contract(a, path), p);
}

FlipGraph buildFlipGraph(const Params& p, int cap) {
    FlipGraph g;
    g.params = p;
    g.vertices = enumerateTrees(p, true, cap);
    std::vector<std::vector<LabelSet>> faces;
    faces.reserve(g.vertices.size());
    for (const auto& t : g.vertices) faces.push_back(lambdaSets(t, p));
    std::map<std::string, std::vector<std::pair<int, LabelSet>>> byRidge;
    for (std::size_t i = 0; i < g.vertices.size(); ++i) {
        const auto& face = faces[i];
        for (std::size_t drop = 0; drop < face.size(); ++drop) {
            std::vector<LabelSet> ridge;
            for (std::size_t j = 0; j < face.size(); ++j)
                if (j != drop) ridge.push_back(face[j]);
            byRidge[faceToString(ridge)].push_back({static_cast<int>(i), face[drop]});
        }
    }
    g.adjacency.assign(g.vertices.size(), {});
    for (const auto& kv : byRidge) {
        if (kv.second.size() != 2)
            throw Error("ridge shared by " + std::to_string(kv.second.size()) +
                        " maximal trees; not a pseudomanifold");
        auto [ia, la] = kv.second[0];
        auto [ib, lb] = kv.second[1];
        FlipGraph::Edge e;
        e.a = std::min(ia, ib);
        e.b = std::max(ia, ib);
        e.removedA = ia < ib ? la : lb;
        e.removedB = ia < ib ? lb : la;
        e.flipCase = classifyFlip(g.vertices[static_cast<std::size_t>(e.a)],
                                  g.vertices[static_cast<std::size_t>(e.b)], p);
        g.adjacency[static_cast<std::size_t>(e.a)].push_back(static_cast<int>(g.edges.size()));
        g.adjacency[static_cast<std::size_t>(e.b)].push_back(static_cast<int>(g.edges.size()));
        g.edges.push_back(e);
    }
    return g;
}

}  // namespace pebbletree
