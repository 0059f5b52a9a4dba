#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <vector>

#include "emanet/geometry.hpp"

namespace emanet {

// Immutable two-level range tree over a fixed point set, specialized to one
// (frame, cone) wedge: the first level orders points by their offset from the
// cone's lower boundary ray, associated second-level structures order them by
// the offset from the upper boundary and carry the minimum-sweep-key point of
// every subtree. Built by build_index; safe to copy and to query from
// multiple threads concurrently.
class MinAugmentedRangeTree {
 public:
  MinAugmentedRangeTree(const MinAugmentedRangeTree&) = default;
  MinAugmentedRangeTree(MinAugmentedRangeTree&&) noexcept = default;
  MinAugmentedRangeTree& operator=(const MinAugmentedRangeTree&) = default;
  MinAugmentedRangeTree& operator=(MinAugmentedRangeTree&&) noexcept = default;
  ~MinAugmentedRangeTree() = default;

  Frame frame() const;
  ConeId cone() const;
  std::size_t size() const;

  struct Impl;

 private:
  explicit MinAugmentedRangeTree(std::shared_ptr<const Impl> impl);
  std::shared_ptr<const Impl> impl_;

  friend MinAugmentedRangeTree build_index(const std::vector<Point>& points, Frame frame,
                                           ConeId cone);
  friend std::optional<Point> query_first_in_cone(const MinAugmentedRangeTree& tree,
                                                  const Point& p);
  friend bool audit_index(const MinAugmentedRangeTree& tree);
};

// Builds the (frame, cone) index over `points`. Any point multiset is
// accepted, including the empty set and duplicates; a frame outside [0, 8)
// raises InvalidConfig. Tree keys are floating-point images of the exact
// oblique coordinates; queries re-verify every candidate with exact
// predicates, so lookups are exact regardless of rounding.
MinAugmentedRangeTree build_index(const std::vector<Point>& points, Frame frame, ConeId cone);

// First point swept in the tree's cone as seen from `p`: minimum sweep-key
// point of the indexed set inside the wedge, ties broken by squared distance
// for the two top cones and by the secondary sweep axis otherwise, then by
// point id. Points coinciding with `p` are never reported. Returns nullopt
// when the cone is empty. Result always equals an exact linear scan.
std::optional<Point> query_first_in_cone(const MinAugmentedRangeTree& tree, const Point& p);

// Recomputes both orderings and every subtree-minimum augmentation from
// scratch; true when the stored structure matches.
bool audit_index(const MinAugmentedRangeTree& tree);

}  // namespace emanet
