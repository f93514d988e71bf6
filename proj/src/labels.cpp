#include "pebbletree/labels.hpp"

#include <algorithm>

namespace pebbletree {

LabelSet oTimes(int ell, int s, int t, const std::vector<int>& colors) {
    LabelSet out;
    for (int p : colors)
        for (int j = ell * p + s - 1; j <= ell * p + t - 1; ++j) out.push_back(j);
    std::sort(out.begin(), out.end());
    return out;
}

LabelSet boxTimes(int ell, int s, int t, const std::vector<int>& colors) {
    LabelSet out;
    for (int j = s; j <= t - 1; ++j) out.push_back(j);
    LabelSet chunks = oTimes(ell, s, t, colors);
    out.insert(out.end(), chunks.begin(), chunks.end());
    std::sort(out.begin(), out.end());
    return out;
}

LabelSet Annotated::lambda(int v) const {
    const Node& n = nodes[v];
    return boxTimes(ell, n.s, n.t, balancedColors(v));
}

std::vector<int> Annotated::balancedColors(int v) const {
    std::vector<int> out;
    unsigned m = nodes[v].balancedMask;
    for (int c = 1; m; ++c, m >>= 1)
        if (m & 1u) out.push_back(c);
    return out;
}

namespace {

// Returns per-color pebble totals of the subtree rooted at the new node.
std::vector<int> annotateRec(const TreePtr& t, const Params& p, int parent,
                             int& nextLeaf, Annotated& out) {
    int v = static_cast<int>(out.nodes.size());
    out.nodes.emplace_back();
    out.nodes[v].parent = parent;
    out.nodes[v].pebbles = t->pebbles;
    std::vector<int> totals(p.colors() + 1, 0);
    for (int c : t->pebbles)
        if (c >= 1 && c <= p.colors()) ++totals[c];
    if (t->isLeaf()) {
        out.nodes[v].leaf = true;
        out.nodes[v].s = out.nodes[v].t = nextLeaf++;
    } else {
        out.nodes[v].s = nextLeaf;
        for (const auto& c : t->children) {
            int kid = static_cast<int>(out.nodes.size());
            std::vector<int> sub = annotateRec(c, p, v, nextLeaf, out);
            out.nodes[v].kids.push_back(kid);
            for (int i = 1; i <= p.colors(); ++i) totals[i] += sub[i];
        }
        out.nodes[v].t = nextLeaf - 1;
    }
    int leaves = out.nodes[v].t - out.nodes[v].s + 1;
    unsigned mask = 0;
    for (int c = 1; c <= p.colors(); ++c)
        if (leaves - totals[c] == 0) mask |= 1u << (c - 1);
    out.nodes[v].balancedMask = mask;
    return totals;
}

}  // namespace

Annotated annotate(const TreePtr& t, const Params& p) {
    Annotated out;
    out.ell = p.leaves;
    int nextLeaf = 1;
    annotateRec(t, p, -1, nextLeaf, out);
    return out;
}

LabelSet lambdaAt(const TreePtr& t, const Path& path, const Params& p) {
    subtreeAt(t, path);  // BadPath if absent
    Annotated ann = annotate(t, p);
    int v = 0;
    for (int i : path) v = ann.nodes[v].kids[i];
    return ann.lambda(v);
}

std::vector<LabelSet> lambdaSets(const TreePtr& t, const Params& p) {
    Annotated ann = annotate(t, p);
    std::vector<LabelSet> out;
    for (std::size_t v = 1; v < ann.nodes.size(); ++v)
        if (!ann.nodes[v].leaf) out.push_back(ann.lambda(static_cast<int>(v)));
    std::sort(out.begin(), out.end());
    return out;
}

std::string labelSetToString(const LabelSet& s) {
    std::string out = "{";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(s[i]);
    }
    return out + "}";
}

std::string faceToString(const std::vector<LabelSet>& face) {
    std::string out = "[";
    for (std::size_t i = 0; i < face.size(); ++i) {
        if (i) out += " ";
        out += labelSetToString(face[i]);
    }
    return out + "]";
}

}  // namespace pebbletree
