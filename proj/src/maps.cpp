#include "pebbletree/maps.hpp"

#include <algorithm>
#include <map>

namespace pebbletree {

TreePtr mirror(const TreePtr& t) {
    if (t->isLeaf()) return t;
    std::vector<TreePtr> kids(t->children.rbegin(), t->children.rend());
    for (auto& k : kids) k = mirror(k);
    return node(t->pebbles, std::move(kids));
}

namespace {

TreePtr recolor(const TreePtr& t, const std::map<int, int>& colorMap) {
    std::vector<int> pebbles;
    pebbles.reserve(t->pebbles.size());
    for (int c : t->pebbles) pebbles.push_back(colorMap.at(c));
    std::vector<TreePtr> kids;
    kids.reserve(t->children.size());
    for (const auto& c : t->children) kids.push_back(recolor(c, colorMap));
    if (pebbles.empty() && kids.empty()) return leaf();
    return node(std::move(pebbles), std::move(kids));
}

// Renumbers an abstract color partition (balanced, unbalanced) so balanced
// colors occupy 1..b and unbalanced b+1..b+u, preserving relative order.
std::map<int, int> canonicalColorMap(std::vector<int> balanced,
                                     std::vector<int> unbalanced) {
    std::sort(balanced.begin(), balanced.end());
    std::sort(unbalanced.begin(), unbalanced.end());
    std::map<int, int> m;
    int next = 1;
    for (int c : balanced) m[c] = next++;
    for (int c : unbalanced) m[c] = next++;
    return m;
}

}  // namespace

Recolored balance(const TreePtr& t, const Params& p, int color) {
    if (color < 1 || color > p.colors())
        throw IndexOutOfRange("color " + std::to_string(color) + " outside [1," +
                              std::to_string(p.colors()) + "]");
    if (pebbleDefault(t, color) != 1)
        throw NotUnbalanced("tree is balanced on color " + std::to_string(color));
    TreePtr raised = node({color}, {t});
    std::vector<int> bal, unbal;
    for (int c = 1; c <= p.colors(); ++c) {
        if (c == color || p.isBalancedColor(c))
            bal.push_back(c);
        else
            unbal.push_back(c);
    }
    Params q{p.leaves, p.balanced + 1, p.unbalanced - 1};
    return {recolor(raised, canonicalColorMap(bal, unbal)), q};
}

namespace {

TreePtr insertLeaves(const TreePtr& t, int color) {
    if (t->isLeaf()) return node({color}, {leaf()});
    std::vector<TreePtr> kids;
    for (const auto& c : t->children) kids.push_back(insertLeaves(c, color));
    return node(t->pebbles, std::move(kids));
}

}  // namespace

Recolored insert(const TreePtr& t, const Params& p, int freshColor) {
    if (freshColor >= 1 && freshColor <= p.colors())
        throw ColorInUse("color " + std::to_string(freshColor) + " already in use");
    TreePtr grown = insertLeaves(t, freshColor);
    std::vector<int> bal, unbal;
    for (int c = 1; c <= p.balanced; ++c) bal.push_back(c);
    bal.push_back(freshColor);
    for (int c = p.balanced + 1; c <= p.colors(); ++c) unbal.push_back(c);
    Params q{p.leaves, p.balanced + 1, p.unbalanced};
    return {recolor(grown, canonicalColorMap(bal, unbal)), q};
}

namespace {

// Marker leaf with a distinct identity, used by the rerooting recursion.
TreePtr marker() {
    static const TreePtr kMarker = std::make_shared<const TreeNode>();
    return kMarker;
}

bool containsMarker(const TreePtr& t) {
    if (t.get() == marker().get()) return true;
    for (const auto& c : t->children)
        if (containsMarker(c)) return true;
    return false;
}

TreePtr substMarker(const TreePtr& t, const TreePtr& repl) {
    if (t.get() == marker().get()) return repl;
    if (t->isLeaf()) return t;
    std::vector<TreePtr> kids;
    for (const auto& c : t->children) kids.push_back(substMarker(c, repl));
    return node(t->pebbles, std::move(kids));
}

// Hangs the tree from its x-th leaf; the old root position becomes the
// marker leaf of the result.
TreePtr hangAtLeaf(const TreePtr& t, int x) {
    if (t->isLeaf()) return marker();
    int offset = 0;
    for (int i = 0; i < t->arity(); ++i) {
        const TreePtr& c = t->children[i];
        if (x <= offset + c->leafCount) {
            TreePtr inner = hangAtLeaf(c, x - offset);
            std::vector<TreePtr> kids;
            for (int j = i + 1; j < t->arity(); ++j) kids.push_back(t->children[j]);
            kids.push_back(marker());
            for (int j = 0; j < i; ++j) kids.push_back(t->children[j]);
            return substMarker(inner, node(t->pebbles, std::move(kids)));
        }
        offset += c->leafCount;
    }
    throw IndexOutOfRange("leaf index " + std::to_string(x));
}

}  // namespace

TreePtr reroot(const TreePtr& t, const Params& p, int leafIndex) {
    if (p.unbalanced != 0)
        throw UnbalancedInput("rerooting requires a fully balanced family");
    if (leafIndex < 1 || leafIndex > t->leafCount)
        throw IndexOutOfRange("leaf index " + std::to_string(leafIndex));
    return substMarker(hangAtLeaf(t, leafIndex), leaf());
}

namespace {

// Removes the marker child (the relocated root position) and pebbles its
// parent with the fresh color.
TreePtr dropMarkerLeaf(const TreePtr& t, int color, bool& done) {
    if (t->isLeaf()) return t;
    for (int i = 0; i < t->arity(); ++i) {
        if (t->children[i].get() == marker().get()) {
            std::vector<int> pebbles = t->pebbles;
            pebbles.push_back(color);
            std::vector<TreePtr> kids;
            for (int j = 0; j < t->arity(); ++j)
                if (j != i) kids.push_back(t->children[j]);
            done = true;
            return node(std::move(pebbles), std::move(kids));
        }
    }
    std::vector<TreePtr> kids;
    for (const auto& c : t->children) kids.push_back(done ? c : dropMarkerLeaf(c, color, done));
    return node(t->pebbles, std::move(kids));
}

TreePtr pebbleLaterLeaves(const TreePtr& t, int color, int& leafNo) {
    if (t->isLeaf()) {
        ++leafNo;
        return leafNo == 1 ? t : node({color}, {leaf()});
    }
    std::vector<TreePtr> kids;
    for (const auto& c : t->children) kids.push_back(pebbleLaterLeaves(c, color, leafNo));
    return node(t->pebbles, std::move(kids));
}

}  // namespace

Recolored uproot(const TreePtr& t, const Params& p, int freshColor) {
    if (t->leafCount <= 1)
        throw PreconditionFailed("uproot requires more than one leaf");
    if (p.balanced != 0)
        throw PreconditionFailed("uproot requires a fully unbalanced family");
    if (freshColor >= 1 && freshColor <= p.colors())
        throw PreconditionFailed("uproot color " + std::to_string(freshColor) +
                                 " already in use");
    TreePtr hung = hangAtLeaf(t, t->leafCount);
    bool done = false;
    TreePtr pruned = dropMarkerLeaf(hung, freshColor, done);
    if (!done) throw Error("internal: relocated root not found");
    int leafNo = 0;
    TreePtr grown = pebbleLaterLeaves(pruned, freshColor, leafNo);
    std::vector<int> bal, unbal;
    for (int c = 1; c <= p.unbalanced; ++c) bal.push_back(c);
    bal.push_back(freshColor);
    Params q{p.leaves - 1, p.unbalanced + 1, 0};
    return {recolor(grown, canonicalColorMap(bal, unbal)), q};
}

OPtr oleaf() {
    static const OPtr kLeaf = std::make_shared<const ONode>();
    return kLeaf;
}

OPtr onode(std::vector<OPtr> children, std::vector<bool> upward) {
    auto n = std::make_shared<ONode>();
    n->children = std::move(children);
    n->upward = std::move(upward);
    return n;
}

bool orientedEquals(const OPtr& a, const OPtr& b) {
    if (a->children.size() != b->children.size() || a->upward != b->upward)
        return false;
    for (std::size_t i = 0; i < a->children.size(); ++i)
        if (!orientedEquals(a->children[i], b->children[i])) return false;
    return true;
}

namespace {

OPtr orientRec(const TreePtr& t) {
    std::vector<OPtr> kids;
    std::vector<bool> up;
    for (const auto& c : t->children) {
        kids.push_back(orientRec(c));
        up.push_back(pebbleDefault(c, 1) == 0);
    }
    if (kids.empty()) return oleaf();
    return onode(std::move(kids), std::move(up));
}

int oleafCount(const OPtr& o) {
    if (o->isLeaf()) return 1;
    int n = 0;
    for (const auto& c : o->children) n += oleafCount(c);
    return n;
}

// parentUp: the arc to the parent points away from this node (or the root
// arrow, which is always outgoing).
void checkOriented(const OPtr& o, bool parentUp) {
    int out = parentUp ? 1 : 0;
    int in = parentUp ? 0 : 1;
    for (std::size_t i = 0; i < o->children.size(); ++i) {
        if (o->children[i]->isLeaf() && o->upward[i])
            throw WrongParams("leaf arrow must be outgoing");
        if (o->upward[i])
            ++in;
        else
            ++out;
    }
    if (!o->isLeaf()) {
        if (out < 1) throw WrongParams("internal node without outgoing arrow");
        if (out == 1 && in == 1)
            throw WrongParams("node with exactly one incoming and one outgoing arrow");
        for (std::size_t i = 0; i < o->children.size(); ++i)
            if (!o->children[i]->isLeaf())
                checkOriented(o->children[i], o->upward[i]);
    }
}

TreePtr unorientRec(const OPtr& o, bool parentUp) {
    if (o->isLeaf()) return leaf();
    int out = parentUp ? 1 : 0;
    std::vector<TreePtr> kids;
    for (std::size_t i = 0; i < o->children.size(); ++i) {
        kids.push_back(unorientRec(o->children[i], o->upward[i]));
        if (!o->upward[i]) ++out;
    }
    std::vector<int> pebbles(static_cast<std::size_t>(out - 1), 1);
    return node(std::move(pebbles), std::move(kids));
}

}  // namespace

OPtr toOriented(const TreePtr& t, const Params& p) {
    if (p.balanced != 1 || p.unbalanced != 0)
        throw WrongParams("oriented-tree bijection requires b=1, u=0");
    if (!isValid(t, p)) throw WrongParams("tree is not valid for " + p.str());
    return orientRec(t);
}

TreePtr fromOriented(const OPtr& o, Params* outParams) {
    checkOriented(o, true);
    TreePtr t = unorientRec(o, true);
    Params p{oleafCount(o), 1, 0};
    if (!isValid(t, p)) throw WrongParams("oriented tree does not map to " + p.str());
    if (outParams) *outParams = p;
    return t;
}

namespace {

void orientBits(const OPtr& o, std::string& out) {
    for (std::size_t i = 0; i < o->children.size(); ++i) {
        if (!out.empty()) out += ",";
        out += o->upward[i] ? "1" : "0";
        orientBits(o->children[i], out);
    }
}

void oshape(const OPtr& o, std::string& out) {
    out += "{\"pebbles\":[],\"children\":[";
    for (std::size_t i = 0; i < o->children.size(); ++i) {
        if (i) out += ",";
        oshape(o->children[i], out);
    }
    out += "]}";
}

}  // namespace

std::string serializeOriented(const OPtr& o) {
    std::string shape;
    oshape(o, shape);
    std::string bits;
    orientBits(o, bits);
    // same grammar as trees, with the arc bits (preorder) appended at the root
    shape.pop_back();  // trailing '}'
    return shape + ",\"orient\":[" + bits + "]}";
}

Recolored alphaGenerator(const std::string& alpha) {
    if (alpha.size() < 2) throw BadSignature("signature too short");
    for (char c : alpha)
        if (c != 'I' && c != 'O') throw BadSignature("signature letters must be I or O");
    if (alpha[0] != 'O') throw BadSignature("signature must start with O");
    int ell = static_cast<int>(alpha.size()) - 1;
    int nIn = static_cast<int>(std::count(alpha.begin(), alpha.end(), 'I'));
    std::vector<TreePtr> kids;
    for (int i = 1; i <= ell; ++i)
        kids.push_back(alpha[i] == 'I' ? node({1}, {leaf()}) : leaf());
    std::vector<int> pebbles(static_cast<std::size_t>(ell - nIn), 1);
    TreePtr gen = node(std::move(pebbles), std::move(kids));
    Params p{ell, 1, 0};
    if (!isValid(gen, p))
        throw BadSignature("signature " + alpha + " has no valid generator");
    return {gen, p};
}

}  // namespace pebbletree
