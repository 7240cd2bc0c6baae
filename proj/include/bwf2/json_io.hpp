#ifndef BWF2_JSON_IO_HPP
#define BWF2_JSON_IO_HPP

#include <json.hpp>

#include "bwf2/element.hpp"
#include "bwf2/endo.hpp"
#include "bwf2/verify.hpp"
#include "bwf2/window_map.hpp"

namespace bwf2 {

/// {"i":N,"j":N,"f":N} for triples, {"zero":true} for the zero class.
nlohmann::json to_json(const Element& x);
Element element_from_json(const nlohmann::json& j,
                          const Family& fam = Family::f2());

nlohmann::json to_json(const EndoNormalForm& e);

nlohmann::json to_json(const LawReport& report);

/// Array of {"from":[i,j,p],"to":[i,j,p]} covering a window exactly once.
nlohmann::json to_json(const WindowMap& m);
WindowMap window_map_from_json(const nlohmann::json& j);

}  // namespace bwf2

#endif  // BWF2_JSON_IO_HPP
