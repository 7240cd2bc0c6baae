#ifndef BWF2_WINDOW_MAP_HPP
#define BWF2_WINDOW_MAP_HPP

#include <functional>
#include <utility>
#include <vector>

#include "bwf2/element.hpp"

namespace bwf2 {

using ElementMap = std::function<Element(const Element&)>;

/// All (i, j, [p)) with i, j <= bound and p in {0, 1}, in the fixed order
/// i ascending, then j, then p. Every exhaustive check iterates in this order,
/// which keeps reports reproducible.
std::vector<Element> window_elements(Nat bound);

/// A map sampled totally on the window i, j <= bound over the two-tail family.
class WindowMap {
public:
  WindowMap(Nat bound, const ElementMap& fn);

  /// Builds a map from explicit (from, to) pairs. The bound is inferred from
  /// the largest source coordinate; the entries must cover that window exactly
  /// once and all targets must be two-tail elements.
  static WindowMap from_entries(
      const std::vector<std::pair<Element, Element>>& entries);

  Nat bound() const { return bound_; }
  bool contains(const Element& x) const;
  const Element& at(const Element& x) const;
  std::size_t size() const { return targets_.size(); }

  friend bool operator==(const WindowMap&, const WindowMap&) = default;

private:
  WindowMap(Nat bound, std::vector<Element> targets)
      : bound_(bound), targets_(std::move(targets)) {}

  std::size_t index(const Element& x) const;

  Nat bound_ = 0;
  std::vector<Element> targets_;
};

}  // namespace bwf2

#endif  // BWF2_WINDOW_MAP_HPP
