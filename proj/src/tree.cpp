#include "pebbletree/tree.hpp"

#include <algorithm>
#include <sstream>

#include <nlohmann/json.hpp>

namespace pebbletree {

TreePtr leaf() {
    static const TreePtr kLeaf = std::make_shared<const TreeNode>();
    return kLeaf;
}

TreePtr node(std::vector<int> pebbles, std::vector<TreePtr> children) {
    std::sort(pebbles.begin(), pebbles.end());
    auto n = std::make_shared<TreeNode>();
    n->pebbles = std::move(pebbles);
    n->children = std::move(children);
    if (n->children.empty()) {
        n->leafCount = 1;
        n->nodeCount = n->pebbles.empty() ? 0 : 1;  // pebbled "leaf" is malformed
    } else {
        n->leafCount = 0;
        n->nodeCount = 1;
        for (const auto& c : n->children) {
            n->leafCount += c->leafCount;
            n->nodeCount += c->nodeCount;
        }
    }
    return n;
}

bool treeEquals(const TreePtr& a, const TreePtr& b) {
    if (a.get() == b.get()) return true;
    if (a->pebbles != b->pebbles || a->arity() != b->arity()) return false;
    for (int i = 0; i < a->arity(); ++i)
        if (!treeEquals(a->children[i], b->children[i])) return false;
    return true;
}

TreePtr subtreeAt(const TreePtr& t, const Path& path) {
    TreePtr cur = t;
    for (int i : path) {
        if (i < 0 || i >= cur->arity())
            throw BadPath("no child " + std::to_string(i) + " at " + pathToString(path));
        cur = cur->children[i];
    }
    return cur;
}

int pebbleCount(const TreePtr& t, int color) {
    int n = static_cast<int>(
        std::count(t->pebbles.begin(), t->pebbles.end(), color));
    for (const auto& c : t->children) n += pebbleCount(c, color);
    return n;
}

int pebbleDefault(const TreePtr& t, int color) {
    return t->leafCount - pebbleCount(t, color);
}

TreeStats stats(const TreePtr& t, const Params& p) {
    TreeStats s;
    s.nodeCount = t->nodeCount;
    s.leafCount = t->leafCount;
    for (int c = 1; c <= p.colors(); ++c) s.perColorDefault[c] = pebbleDefault(t, c);
    return s;
}

namespace {

void validateRec(const TreePtr& t, const Params& p, Path& path,
                 std::vector<Violation>& out) {
    if (t->isLeaf()) {
        if (!t->pebbles.empty())
            out.push_back({"leaf-pebble", path, "leaf carries pebbles"});
        return;
    }
    if (t->arity() == 1 && t->pebbles.empty())
        out.push_back({"unary-pebble-missing", path, "unary node without pebble"});
    for (int c : t->pebbles)
        if (c < 1 || c > p.colors())
            out.push_back({"color-out-of-range", path,
                           "pebble color " + std::to_string(c) + " outside [1," +
                               std::to_string(p.colors()) + "]"});
    for (int c = 1; c <= p.colors(); ++c) {
        int d = pebbleDefault(t, c);
        if (d != 0 && d != 1)
            out.push_back({"default-out-of-range", path,
                           "color " + std::to_string(c) + " has default " +
                               std::to_string(d)});
    }
    for (int i = 0; i < t->arity(); ++i) {
        path.push_back(i);
        validateRec(t->children[i], p, path, out);
        path.pop_back();
    }
}

}  // namespace

std::vector<Violation> validate(const TreePtr& t, const Params& p) {
    requireValid(p);
    std::vector<Violation> out;
    Path path;
    validateRec(t, p, path, out);
    for (int c = 1; c <= p.colors(); ++c) {
        int d = pebbleDefault(t, c);
        int want = p.isBalancedColor(c) ? 0 : 1;
        if (d != want && (d == 0 || d == 1))  // out-of-range already reported
            out.push_back({"global-default-mismatch", {},
                           "color " + std::to_string(c) + " has default " +
                               std::to_string(d) + ", expected " +
                               std::to_string(want)});
    }
    return out;
}

bool isValid(const TreePtr& t, const Params& p) { return validate(t, p).empty(); }

namespace {

bool maximalShape(const TreePtr& t) {
    if (t->isLeaf()) return true;
    if (t->arity() == 1 && t->pebbles.size() != 1) return false;
    if (t->arity() == 2 && !t->pebbles.empty()) return false;
    if (t->arity() > 2) return false;
    for (const auto& c : t->children)
        if (!maximalShape(c)) return false;
    return true;
}

}  // namespace

bool isMaximal(const TreePtr& t, const Params& p) {
    return maximalShape(t) && isValid(t, p);
}

namespace {

void serializeRec(const TreePtr& t, std::string& out) {
    out += "{\"pebbles\":[";
    for (std::size_t i = 0; i < t->pebbles.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(t->pebbles[i]);
    }
    out += "],\"children\":[";
    for (int i = 0; i < t->arity(); ++i) {
        if (i) out += ',';
        serializeRec(t->children[i], out);
    }
    out += "]}";
}

TreePtr fromJson(const nlohmann::json& j) {
    if (!j.is_object() || !j.contains("pebbles") || !j.contains("children") ||
        !j["pebbles"].is_array() || !j["children"].is_array())
        throw ParseError("expected {\"pebbles\":[...],\"children\":[...]}", 0);
    std::vector<int> pebbles;
    for (const auto& x : j["pebbles"]) {
        if (!x.is_number_integer()) throw ParseError("pebble is not an integer", 0);
        pebbles.push_back(x.get<int>());
    }
    std::vector<TreePtr> children;
    for (const auto& c : j["children"]) children.push_back(fromJson(c));
    if (pebbles.empty() && children.empty()) return leaf();
    return node(std::move(pebbles), std::move(children));
}

}  // namespace

std::string serialize(const TreePtr& t) {
    std::string out;
    serializeRec(t, out);
    return out;
}

TreePtr deserialize(std::string_view text, const Params& p) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        std::size_t byte = e.byte > 0 ? e.byte - 1 : 0;  // 0-based offset
        throw ParseError(e.what(), byte);
    }
    TreePtr t = fromJson(j);
    auto violations = validate(t, p);
    if (!violations.empty()) {
        std::ostringstream msg;
        msg << "tree invalid for " << p.str() << ":";
        for (const auto& v : violations)
            msg << " [" << v.clause << " at " << pathToString(v.path) << "]";
        throw ValidationError(msg.str(), std::move(violations));
    }
    return t;
}

std::string pathToString(const Path& path) {
    if (path.empty()) return "/";
    std::string s;
    for (int i : path) s += "/" + std::to_string(i);
    return s;
}

}  // namespace pebbletree
