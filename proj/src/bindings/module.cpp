#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "bwf2/element.hpp"
#include "bwf2/endo.hpp"
#include "bwf2/verify.hpp"
#include "bwf2/window_map.hpp"

namespace py = pybind11;

using namespace bwf2;

namespace {

GreenRelation relation_from_string(const std::string& text) {
  if (text == "R") return GreenRelation::R;
  if (text == "L") return GreenRelation::L;
  if (text == "H") return GreenRelation::H;
  throw std::invalid_argument("relation must be one of 'R', 'L', 'H'");
}

std::string part_kind(const MonoidPart& part) {
  if (std::holds_alternative<Alpha>(part)) return "alpha";
  if (std::holds_alternative<Beta>(part)) return "beta";
  if (std::holds_alternative<Gamma>(part)) return "gamma";
  if (std::holds_alternative<Delta>(part)) return "delta";
  return "chi";
}

std::optional<Nat> part_k(const MonoidPart& part) {
  if (const auto* a = std::get_if<Alpha>(&part)) return a->k;
  if (const auto* b = std::get_if<Beta>(&part)) return b->k;
  if (const auto* g = std::get_if<Gamma>(&part)) return g->k;
  if (const auto* d = std::get_if<Delta>(&part)) return d->k;
  return std::nullopt;
}

std::optional<Nat> part_p(const MonoidPart& part) {
  if (const auto* a = std::get_if<Alpha>(&part)) return a->p;
  if (const auto* b = std::get_if<Beta>(&part)) return b->p;
  return std::nullopt;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() =
      "Exact arithmetic, endomorphism normal forms and law checks for the "
      "bicyclic extension over the two-tail family {[0), [1)}";

  py::class_<Family>(m, "Family")
      .def(py::init<std::vector<Nat>, bool>(), py::arg("tails"),
           py::arg("includes_empty") = false)
      .def_static("f2", [] { return Family::f2(); })
      .def_property_readonly("tails", &Family::tails)
      .def_property_readonly("includes_empty", &Family::includes_empty)
      .def("contains", &Family::contains)
      .def("__eq__", [](const Family& a, const Family& b) { return a == b; })
      .def("__repr__", [](const Family& f) {
        std::string out = "Family([";
        for (std::size_t i = 0; i < f.tails().size(); ++i) {
          if (i) out += ", ";
          out += std::to_string(f.tails()[i]);
        }
        out += "]";
        if (f.includes_empty()) out += ", includes_empty=True";
        return out + ")";
      });

  py::class_<Element>(m, "Element")
      .def(py::init<Nat, Nat, Nat>(), py::arg("i"), py::arg("j"),
           py::arg("tail"))
      .def_static("zero", &Element::zero)
      .def_property_readonly("is_zero", &Element::is_zero)
      .def_property_readonly("i", &Element::i)
      .def_property_readonly("j", &Element::j)
      .def_property_readonly("tail", &Element::tail)
      .def("__mul__", [](const Element& a, const Element& b) { return a * b; })
      .def("__eq__", [](const Element& a, const Element& b) { return a == b; })
      .def("__hash__",
           [](const Element& x) {
             if (x.is_zero()) return py::hash(py::none());
             return py::hash(py::make_tuple(x.i(), x.j(), x.tail()));
           })
      .def("__str__", &format_element)
      .def("__repr__", &format_element);

  m.def("shift_intersect",
        [](std::int64_t shift, std::optional<Nat> f1, std::optional<Nat> f2)
            -> std::optional<Nat> {
          const auto lift = [](const std::optional<Nat>& t) {
            return t ? InductiveSet::tail(*t) : InductiveSet::empty();
          };
          const auto out = shift_intersect(shift, lift(f1), lift(f2));
          if (out.is_empty()) return std::nullopt;
          return out.least();
        },
        py::arg("shift"), py::arg("f1"), py::arg("f2"),
        "Least element of (shift + [f1)) ∩ [f2); None stands for the empty "
        "set");

  m.def("multiply", &multiply, py::arg("x"), py::arg("y"), py::arg("family"));
  m.def("inverse", &inverse, py::arg("x"));
  m.def("is_idempotent", &is_idempotent, py::arg("x"));
  m.def("natural_leq", &natural_leq, py::arg("x"), py::arg("y"));
  m.def(
      "green_related",
      [](const Element& x, const Element& y, const std::string& rel) {
        return green_related(x, y, relation_from_string(rel));
      },
      py::arg("x"), py::arg("y"), py::arg("relation"));
  m.def("validate_family", &validate_family, py::arg("tails"));
  m.def(
      "family_closure_witness",
      [](const std::vector<Nat>& tails)
          -> std::optional<std::tuple<Nat, Nat, Nat, Nat>> {
        const auto w = family_closure_witness(tails);
        if (!w) return std::nullopt;
        return std::make_tuple(w->a, w->b, w->n, w->produced);
      },
      py::arg("tails"),
      "First closure failure as (a, b, n, produced), or None when closed");
  m.def("parse_element", &parse_element, py::arg("text"),
        py::arg("family") = Family::f2());
  m.def("format_element", &format_element, py::arg("x"));

  py::class_<EndoNormalForm>(m, "EndoNormalForm")
      .def_static("identity", &EndoNormalForm::identity)
      .def_static("pi", &EndoNormalForm::pi_power, py::arg("n") = 1)
      .def_static("chi", &EndoNormalForm::chi, py::arg("s"), py::arg("q"))
      .def_static("alpha",
                  [](Nat k, Nat p) { return EndoNormalForm(Alpha{k, p}, 0); })
      .def_static("beta",
                  [](Nat k, Nat p) { return EndoNormalForm(Beta{k, p}, 0); })
      .def_static("gamma", [](Nat k) { return EndoNormalForm(Gamma{k}, 0); })
      .def_static("delta", [](Nat k) { return EndoNormalForm(Delta{k}, 0); })
      .def_property_readonly("power", &EndoNormalForm::power)
      .def_property_readonly(
          "kind", [](const EndoNormalForm& e) { return part_kind(e.part()); })
      .def_property_readonly(
          "k", [](const EndoNormalForm& e) { return part_k(e.part()); })
      .def_property_readonly(
          "p", [](const EndoNormalForm& e) { return part_p(e.part()); })
      .def("__eq__", [](const EndoNormalForm& a,
                        const EndoNormalForm& b) { return a == b; })
      .def("__str__", &format_endo)
      .def("__repr__", &format_endo);

  m.def("parse_endo", &parse_endo_expression, py::arg("text"));
  m.def("format_endo", &format_endo, py::arg("e"));
  m.def("apply_pi", &apply_pi, py::arg("x"));
  m.def("apply_pi_power", &apply_pi_power, py::arg("x"), py::arg("n"));
  m.def("unapply_pi_power", &unapply_pi_power, py::arg("x"), py::arg("n"));
  m.def("in_pi_power_image", &in_pi_power_image, py::arg("x"), py::arg("n"));
  m.def("apply", &apply, py::arg("e"), py::arg("x"));
  m.def("compose", &compose, py::arg("f"), py::arg("g"));
  m.def(
      "factor",
      [](const std::function<Element(const Element&)>& fn) {
        return factor(fn);
      },
      py::arg("map"),
      "Normal form of a callable that is known to be an endomorphism");
  m.def(
      "predicates",
      [](const EndoNormalForm& e) {
        const auto flags = predicates(e);
        py::dict out;
        out["injective"] = flags.injective;
        out["annihilating"] = flags.annihilating;
        out["monoidal"] = flags.monoidal;
        return out;
      },
      py::arg("e"));
  m.def(
      "corner_membership",
      [](Nat s, Nat p, const Element& x) {
        return corner_membership(CornerDescriptor{s, p}, x);
      },
      py::arg("s"), py::arg("p"), py::arg("x"));

  py::class_<WindowMap>(m, "WindowMap")
      .def(py::init([](Nat bound,
                       const std::function<Element(const Element&)>& fn) {
             return WindowMap(bound, fn);
           }),
           py::arg("bound"), py::arg("fn"))
      .def_static("from_entries", &WindowMap::from_entries, py::arg("entries"))
      .def_property_readonly("bound", &WindowMap::bound)
      .def("at", &WindowMap::at, py::arg("x"))
      .def("__len__", &WindowMap::size);

  m.def("window_elements", &window_elements, py::arg("bound"));
  m.def("classify_window", &classify_window, py::arg("m"));

  py::class_<LawReport>(m, "LawReport")
      .def_readonly("law", &LawReport::law)
      .def_readonly("checked", &LawReport::checked)
      .def_readonly("skipped", &LawReport::skipped)
      .def_readonly("violation_total", &LawReport::violation_total)
      .def_readonly("violations", &LawReport::violations)
      .def("ok", &LawReport::ok)
      .def("__repr__", [](const LawReport& r) {
        return "<LawReport " + r.law + (r.ok() ? " ok" : " VIOLATED") + ">";
      });

  py::class_<SweepRanges>(m, "SweepRanges")
      .def(py::init([](Nat max_k, Nat max_power, Nat max_ann_power) {
             return SweepRanges{max_k, max_power, max_ann_power};
           }),
           py::arg("max_k") = 4, py::arg("max_power") = 5,
           py::arg("max_ann_power") = 10)
      .def_readwrite("max_k", &SweepRanges::max_k)
      .def_readwrite("max_power", &SweepRanges::max_power)
      .def_readwrite("max_ann_power", &SweepRanges::max_ann_power);

  m.def("enumerate_normal_forms", &enumerate_normal_forms, py::arg("sweep"));
  m.def("check_associativity",
        py::overload_cast<Nat, const Family&>(&check_associativity),
        py::arg("bound"), py::arg("family"));
  m.def("check_homomorphism",
        py::overload_cast<const WindowMap&>(&check_homomorphism),
        py::arg("m"));
  m.def("check_pi_window", &check_pi_window, py::arg("bound"));
  m.def("check_pi_power_closed_form", &check_pi_power_closed_form,
        py::arg("bound"), py::arg("max_power"));
  m.def("check_corner_subsemigroups", &check_corner_subsemigroups,
        py::arg("max_s"), py::arg("bound"));
  m.def("check_endomorphism_law", &check_endomorphism_law, py::arg("sweep"),
        py::arg("bound"));
  m.def("check_composition_coherence", &check_composition_coherence,
        py::arg("sweep"), py::arg("bound"));
  m.def("check_factorization_uniqueness", &check_factorization_uniqueness,
        py::arg("sweep"), py::arg("window_bound"));
  m.def("check_classification", &check_classification, py::arg("sweep"),
        py::arg("window_bound"));
  m.def("check_minimal_ideal", &check_minimal_ideal, py::arg("sweep"));
  m.def("check_inverse_uniqueness", &check_inverse_uniqueness,
        py::arg("bound"));
  m.def("check_idempotent_characterization",
        &check_idempotent_characterization, py::arg("bound"));
  m.def("check_natural_order", &check_natural_order, py::arg("bound"));
  m.def("check_green_relations", &check_green_relations, py::arg("bound"));
  m.def("oracle_family_interval", &oracle_family_interval,
        py::arg("max_index"));
  m.def(
      "run_default_suite",
      [](Nat element_window) {
        return run_default_suite(SuiteOptions{element_window});
      },
      py::arg("element_window") = 6);
}
