#ifndef PEBBLETREE_ENUMERATE_HPP
#define PEBBLETREE_ENUMERATE_HPP

#include <functional>
#include <vector>

#include "pebbletree/tree.hpp"

namespace pebbletree {

/**
 * All pebble trees of the family (or only the maximal ones), without
 * duplicates, sorted lexicographically by canonical serialization.
 * Throws CapExceeded when l(b+u+1) exceeds the cap.
 */
std::vector<TreePtr> enumerateTrees(const Params& p, bool maximalOnly,
                                    int cap = kDefaultCap);

/**
 * Visits every tree of the family in a deterministic (but unsorted) order.
 * Cheaper than enumerateTrees for counting passes over large families.
 */
void forEachTree(const Params& p, bool maximalOnly, int cap,
                 const std::function<void(const TreePtr&)>& visit);

}  // namespace pebbletree

#endif  // PEBBLETREE_ENUMERATE_HPP
