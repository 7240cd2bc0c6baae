#include "bwf2/json_io.hpp"

#include <stdexcept>

namespace bwf2 {

namespace {

Nat nat_field(const nlohmann::json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_unsigned()) {
    throw std::invalid_argument(std::string("expected a natural field '") +
                                key + "'");
  }
  const auto value = j[key].get<std::uint64_t>();
  if (value > nat_max) {
    throw std::overflow_error(std::string("field '") + key +
                              "' exceeds the coordinate bound");
  }
  return value;
}

Element element_from_triple(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 3 || !j[0].is_number_unsigned() ||
      !j[1].is_number_unsigned() || !j[2].is_number_unsigned()) {
    throw std::invalid_argument("expected a triple [i,j,p] of naturals");
  }
  const auto i = j[0].get<std::uint64_t>();
  const auto jj = j[1].get<std::uint64_t>();
  const auto p = j[2].get<std::uint64_t>();
  if (i > nat_max || jj > nat_max) {
    throw std::overflow_error("coordinate exceeds the bound");
  }
  if (p > 1) throw std::invalid_argument("tail component must be 0 or 1");
  return Element(i, jj, p);
}

nlohmann::json triple(const Element& x) {
  return nlohmann::json::array({x.i(), x.j(), x.tail()});
}

}  // namespace

nlohmann::json to_json(const Element& x) {
  if (x.is_zero()) return nlohmann::json{{"zero", true}};
  return nlohmann::json{{"i", x.i()}, {"j", x.j()}, {"f", x.tail()}};
}

Element element_from_json(const nlohmann::json& j, const Family& fam) {
  if (j.contains("zero")) {
    if (j["zero"].get<bool>() && fam.includes_empty()) return Element::zero();
    throw std::invalid_argument("this family has no zero class");
  }
  const Element x(nat_field(j, "i"), nat_field(j, "j"), nat_field(j, "f"));
  if (!fam.contains(x.tail())) {
    throw std::invalid_argument("tail [" + std::to_string(x.tail()) +
                                ") is not a member of the family");
  }
  return x;
}

nlohmann::json to_json(const EndoNormalForm& e) {
  nlohmann::json j{{"expr", format_endo(e)}, {"n", e.power()}};
  std::visit(
      [&](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Alpha>) {
          j["kind"] = "alpha";
          j["k"] = v.k;
          j["p"] = v.p;
        } else if constexpr (std::is_same_v<T, Beta>) {
          j["kind"] = "beta";
          j["k"] = v.k;
          j["p"] = v.p;
        } else if constexpr (std::is_same_v<T, Gamma>) {
          j["kind"] = "gamma";
          j["k"] = v.k;
        } else if constexpr (std::is_same_v<T, Delta>) {
          j["kind"] = "delta";
          j["k"] = v.k;
        } else {
          j["kind"] = "chi";
          j["s"] = e.power() / 2;
          j["q"] = e.power() % 2;
        }
      },
      e.part());
  return j;
}

nlohmann::json to_json(const LawReport& report) {
  return nlohmann::json{{"law", report.law},
                        {"checked", report.checked},
                        {"skipped", report.skipped},
                        {"violations", report.violation_total},
                        {"counterexamples", report.violations}};
}

nlohmann::json to_json(const WindowMap& m) {
  nlohmann::json out = nlohmann::json::array();
  for (const Element& x : window_elements(m.bound())) {
    out.push_back({{"from", triple(x)}, {"to", triple(m.at(x))}});
  }
  return out;
}

WindowMap window_map_from_json(const nlohmann::json& j) {
  if (!j.is_array()) {
    throw std::invalid_argument("a window map is a JSON array of entries");
  }
  std::vector<std::pair<Element, Element>> entries;
  entries.reserve(j.size());
  for (const auto& entry : j) {
    if (!entry.contains("from") || !entry.contains("to")) {
      throw std::invalid_argument("entry needs 'from' and 'to' triples");
    }
    entries.emplace_back(element_from_triple(entry["from"]),
                         element_from_triple(entry["to"]));
  }
  return WindowMap::from_entries(entries);
}

}  // namespace bwf2
