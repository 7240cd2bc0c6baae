#include "bwf2/window_map.hpp"

#include <stdexcept>

namespace bwf2 {

std::vector<Element> window_elements(Nat bound) {
  std::vector<Element> out;
  out.reserve(2 * (bound + 1) * (bound + 1));
  for (Nat i = 0; i <= bound; ++i) {
    for (Nat j = 0; j <= bound; ++j) {
      for (Nat p = 0; p <= 1; ++p) {
        out.emplace_back(i, j, p);
      }
    }
  }
  return out;
}

namespace {

void require_window_element(const Element& x, Nat bound) {
  if (x.is_zero() || x.tail() > 1 || x.i() > bound || x.j() > bound) {
    throw std::out_of_range("element " + format_element(x) +
                            " lies outside the window with bound " +
                            std::to_string(bound));
  }
}

void require_two_tail(const Element& x) {
  if (x.is_zero() || x.tail() > 1) {
    throw std::invalid_argument("target " + format_element(x) +
                                " is not a two-tail element");
  }
}

}  // namespace

WindowMap::WindowMap(Nat bound, const ElementMap& fn) : bound_(bound) {
  targets_.reserve(2 * (bound + 1) * (bound + 1));
  for (const Element& x : window_elements(bound)) {
    Element y = fn(x);
    require_two_tail(y);
    targets_.push_back(y);
  }
}

WindowMap WindowMap::from_entries(
    const std::vector<std::pair<Element, Element>>& entries) {
  if (entries.empty()) throw std::invalid_argument("no entries");
  Nat bound = 0;
  for (const auto& [from, to] : entries) {
    require_two_tail(from);
    require_two_tail(to);
    bound = std::max({bound, from.i(), from.j()});
  }
  const std::size_t expected = 2 * (bound + 1) * (bound + 1);
  if (entries.size() != expected) {
    throw std::invalid_argument(
        "entries do not cover the window with bound " + std::to_string(bound) +
        " exactly once (" + std::to_string(entries.size()) + " of " +
        std::to_string(expected) + ")");
  }
  std::vector<Element> targets(expected);
  std::vector<bool> seen(expected, false);
  WindowMap probe(bound, std::move(targets));
  for (const auto& [from, to] : entries) {
    const std::size_t idx = probe.index(from);
    if (seen[idx]) {
      throw std::invalid_argument("duplicate entry for " +
                                  format_element(from));
    }
    seen[idx] = true;
    probe.targets_[idx] = to;
  }
  return probe;
}

bool WindowMap::contains(const Element& x) const {
  return !x.is_zero() && x.tail() <= 1 && x.i() <= bound_ && x.j() <= bound_;
}

const Element& WindowMap::at(const Element& x) const {
  require_window_element(x, bound_);
  return targets_[index(x)];
}

std::size_t WindowMap::index(const Element& x) const {
  return static_cast<std::size_t>((x.i() * (bound_ + 1) + x.j()) * 2 +
                                  x.tail());
}

}  // namespace bwf2
