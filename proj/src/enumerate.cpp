#include "pebbletree/enumerate.hpp"

#include <algorithm>
#include <map>

namespace pebbletree {

namespace {

// Recursive generator over (leaf count, balanced color mask).  A subtree is
// balanced exactly on the colors of its mask and unbalanced on the others,
// so the pair identifies the family of admissible subtrees up to leaf
// relabeling.  Lists for proper subtrees are memoized and shared.
class Enumerator {
  public:
    Enumerator(const Params& p, bool maximalOnly)
        : k_(p.colors()), maximal_(maximalOnly) {}

    const std::vector<TreePtr>& lists(int leaves, unsigned mask) {
        auto key = std::make_pair(leaves, mask);
        auto it = memo_.find(key);
        if (it != memo_.end()) return it->second;
        std::vector<TreePtr> out;
        generate(leaves, mask, [&out](TreePtr t) { out.push_back(std::move(t)); });
        return memo_.emplace(key, std::move(out)).first->second;
    }

    // Streams the trees of (leaves, mask) without storing the top-level list.
    void generate(int leaves, unsigned mask,
                  const std::function<void(TreePtr)>& emit) {
        if (leaves == 1 && mask == 0) emit(leaf());
        unaryRoots(leaves, mask, emit);
        wideRoots(leaves, mask, emit);
    }

  private:
    // Unary root with a nonempty pebble set S inside the balanced mask; the
    // child is balanced on mask \ S.
    void unaryRoots(int leaves, unsigned mask,
                    const std::function<void(TreePtr)>& emit) {
        for (unsigned s = mask; s > 0; s = (s - 1) & mask) {
            if (maximal_ && __builtin_popcount(s) != 1) continue;
            std::vector<int> pebbles = maskColors(s);
            for (const auto& child : lists(leaves, mask & ~s))
                emit(node(pebbles, {child}));
        }
    }

    // Root of arity d >= 2.  Per color, the set of balanced children is an
    // arbitrary subset of [d] for a balanced color and a strict subset for
    // an unbalanced color; the root pebble multiset is derived from the
    // children defaults.
    void wideRoots(int leaves, unsigned mask,
                   const std::function<void(TreePtr)>& emit) {
        int dmax = maximal_ ? 2 : leaves;
        for (int d = 2; d <= dmax; ++d) {
            std::vector<int> parts(d, 1);
            compositions(leaves, d, 0, parts, mask, emit);
        }
    }

    void compositions(int leaves, int d, int i, std::vector<int>& parts,
                      unsigned mask, const std::function<void(TreePtr)>& emit) {
        if (i == d - 1) {
            parts[i] = leaves;
            if (parts[i] >= 1) assignColors(d, parts, mask, emit);
            return;
        }
        for (int take = 1; take <= leaves - (d - 1 - i); ++take) {
            parts[i] = take;
            compositions(leaves - take, d, i + 1, parts, mask, emit);
        }
    }

    void assignColors(int d, const std::vector<int>& parts, unsigned mask,
                      const std::function<void(TreePtr)>& emit) {
        std::vector<unsigned> childMask(d, 0);
        std::vector<int> rootPebbles;
        colorLoop(1, d, parts, mask, childMask, rootPebbles, emit);
    }

    // Chooses, color by color, which children are balanced in that color.
    void colorLoop(int color, int d, const std::vector<int>& parts,
                   unsigned mask, std::vector<unsigned>& childMask,
                   std::vector<int>& rootPebbles,
                   const std::function<void(TreePtr)>& emit) {
        if (color > k_) {
            buildTuples(d, parts, childMask, rootPebbles, emit);
            return;
        }
        const unsigned full = (1u << d) - 1;
        const bool balancedHere = (mask >> (color - 1)) & 1u;
        for (unsigned sub = 0; sub <= full; ++sub) {
            int unbalRoot = d - __builtin_popcount(sub) - (balancedHere ? 0 : 1);
            if (balancedHere) {
                if (maximal_ && sub != full) continue;
            } else {
                if (sub == full) continue;  // at least one unbalanced child
                if (maximal_ && unbalRoot != 0) continue;
            }
            for (int i = 0; i < d; ++i)
                if ((sub >> i) & 1u) childMask[i] |= 1u << (color - 1);
            std::size_t base = rootPebbles.size();
            for (int r = 0; r < unbalRoot; ++r) rootPebbles.push_back(color);
            colorLoop(color + 1, d, parts, mask, childMask, rootPebbles, emit);
            rootPebbles.resize(base);
            for (int i = 0; i < d; ++i)
                if ((sub >> i) & 1u) childMask[i] &= ~(1u << (color - 1));
        }
    }

    void buildTuples(int d, const std::vector<int>& parts,
                     const std::vector<unsigned>& childMask,
                     const std::vector<int>& rootPebbles,
                     const std::function<void(TreePtr)>& emit) {
        if (static_cast<int>(stack_.size()) < d) stack_.resize(d);
        tupleLoop(0, d, parts, childMask, rootPebbles, emit);
    }

    void tupleLoop(int i, int d, const std::vector<int>& parts,
                   const std::vector<unsigned>& childMask,
                   const std::vector<int>& rootPebbles,
                   const std::function<void(TreePtr)>& emit) {
        if (i == d) {
            std::vector<TreePtr> children(stack_.begin(), stack_.begin() + d);
            emit(node(rootPebbles, std::move(children)));
            return;
        }
        for (const auto& t : lists(parts[i], childMask[i])) {
            stack_[i] = t;
            tupleLoop(i + 1, d, parts, childMask, rootPebbles, emit);
        }
    }

    std::vector<int> maskColors(unsigned mask) const {
        std::vector<int> out;
        for (int c = 1; c <= k_; ++c)
            if ((mask >> (c - 1)) & 1u) out.push_back(c);
        return out;
    }

    int k_;
    bool maximal_;
    std::map<std::pair<int, unsigned>, std::vector<TreePtr>> memo_;
    std::vector<TreePtr> stack_;
};

unsigned rootMask(const Params& p) {
    return p.balanced == 0 ? 0u : (1u << p.balanced) - 1u;
}

}  // namespace

std::vector<TreePtr> enumerateTrees(const Params& p, bool maximalOnly, int cap) {
    requireWithinCap(p, cap);
    Enumerator en(p, maximalOnly);
    std::vector<std::pair<std::string, TreePtr>> keyed;
    en.generate(p.leaves, rootMask(p), [&keyed](TreePtr t) {
        keyed.emplace_back(serialize(t), std::move(t));
    });
    std::sort(keyed.begin(), keyed.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<TreePtr> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
}

void forEachTree(const Params& p, bool maximalOnly, int cap,
                 const std::function<void(const TreePtr&)>& visit) {
    requireWithinCap(p, cap);
    Enumerator en(p, maximalOnly);
    en.generate(p.leaves, rootMask(p), [&visit](TreePtr t) { visit(t); });
}

}  // namespace pebbletree
