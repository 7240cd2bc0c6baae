#include "bwf2/verify.hpp"

#include <algorithm>
#include <stdexcept>

namespace bwf2 {

namespace {

constexpr std::size_t kMaxRenderedViolations = 100;

std::string fmt(const Element& x) { return format_element(x); }

bool window_injective(const std::vector<Element>& targets) {
  std::vector<Element> sorted(targets);
  std::sort(sorted.begin(), sorted.end());
  return std::adjacent_find(sorted.begin(), sorted.end()) == sorted.end();
}

bool window_constant(const std::vector<Element>& targets) {
  return std::adjacent_find(targets.begin(), targets.end(),
                            std::not_equal_to<>()) == targets.end();
}

std::vector<Element> sample_targets(const EndoNormalForm& e, Nat bound) {
  std::vector<Element> out;
  const auto window = window_elements(bound);
  out.reserve(window.size());
  for (const Element& x : window) out.push_back(apply(e, x));
  return out;
}

}  // namespace

void LawReport::add_violation(std::string text) {
  ++violation_total;
  if (violations.size() < kMaxRenderedViolations) {
    violations.push_back(std::move(text));
  }
}

std::vector<Element> family_window_elements(Nat bound, const Family& fam) {
  std::vector<Element> out;
  out.reserve((bound + 1) * (bound + 1) * fam.tails().size() + 1);
  for (Nat i = 0; i <= bound; ++i) {
    for (Nat j = 0; j <= bound; ++j) {
      for (Nat t : fam.tails()) out.emplace_back(i, j, t);
    }
  }
  if (fam.includes_empty()) out.push_back(Element::zero());
  return out;
}

LawReport check_associativity(Nat bound, const Family& fam) {
  return check_associativity(
      bound, fam, [](const Element& x, const Element& y) { return x * y; });
}

LawReport check_associativity(Nat bound, const Family& fam,
                              const ProductFn& product) {
  if (bound > 8) {
    throw std::invalid_argument("associativity window is capped at bound 8");
  }
  LawReport report;
  report.law = "associativity";
  const auto elements = family_window_elements(bound, fam);
  for (const Element& x : elements) {
    for (const Element& y : elements) {
      const Element xy = product(x, y);
      for (const Element& z : elements) {
        ++report.checked;
        if (product(xy, z) != product(x, product(y, z))) {
          report.add_violation("(" + fmt(x) + "·" + fmt(y) + ")·" + fmt(z) +
                               " != " + fmt(x) + "·(" + fmt(y) + "·" + fmt(z) +
                               ")");
        }
      }
    }
  }
  return report;
}

LawReport check_unit_law(Nat bound) {
  LawReport report;
  report.law = "unit-law";
  const Element unit(0, 0, 0);
  for (const Element& x : window_elements(bound)) {
    ++report.checked;
    if (unit * x != x || x * unit != x) {
      report.add_violation("unit fails on " + fmt(x));
    }
  }
  return report;
}

LawReport check_zero_absorption(Nat bound, const Family& fam) {
  if (!fam.includes_empty()) {
    throw std::invalid_argument("zero absorption needs a family with zero");
  }
  LawReport report;
  report.law = "zero-absorption";
  const Element z = Element::zero();
  for (const Element& x : family_window_elements(bound, fam)) {
    ++report.checked;
    if (multiply(z, x, fam) != z || multiply(x, z, fam) != z) {
      report.add_violation("zero does not absorb " + fmt(x));
    }
  }
  return report;
}

LawReport check_homomorphism(const WindowMap& m) {
  if (m.bound() < 2) {
    throw std::invalid_argument("homomorphism window needs bound >= 2");
  }
  LawReport report;
  report.law = "homomorphism";
  const auto elements = window_elements(m.bound());
  for (const Element& x : elements) {
    for (const Element& y : elements) {
      const Element xy = x * y;
      if (!m.contains(xy)) {
        ++report.skipped;
        continue;
      }
      ++report.checked;
      if (m.at(xy) != m.at(x) * m.at(y)) {
        report.add_violation("images of " + fmt(x) + ", " + fmt(y) +
                             " break the law: (" + fmt(m.at(xy)) + ") vs " +
                             fmt(m.at(x)) + "·" + fmt(m.at(y)));
      }
    }
  }
  return report;
}

LawReport check_homomorphism(Nat bound, const ElementMap& fn) {
  LawReport report;
  report.law = "homomorphism";
  const auto elements = window_elements(bound);
  for (const Element& x : elements) {
    for (const Element& y : elements) {
      ++report.checked;
      const Element lhs = fn(x * y);
      const Element rhs = fn(x) * fn(y);
      if (lhs != rhs) {
        report.add_violation("images of " + fmt(x) + ", " + fmt(y) +
                             " break the law: " + fmt(lhs) + " vs " + fmt(rhs));
      }
    }
  }
  return report;
}

LawReport check_pi_window(Nat bound) {
  LawReport report = check_homomorphism(bound, apply_pi);
  report.law = "pi-endomorphism";
  std::vector<Element> targets;
  const auto elements = window_elements(bound);
  targets.reserve(elements.size());
  for (const Element& x : elements) targets.push_back(apply_pi(x));
  ++report.checked;
  if (!window_injective(targets)) {
    report.add_violation("pi is not injective on the window");
  }
  return report;
}

LawReport check_pi_power_closed_form(Nat bound, Nat max_power) {
  LawReport report;
  report.law = "pi-power-closed-form";
  for (const Element& x : window_elements(bound)) {
    Element iterated = x;
    for (Nat n = 0; n <= max_power; ++n) {
      ++report.checked;
      const Element closed = apply_pi_power(x, n);
      if (closed != iterated) {
        report.add_violation("closed form of w^" + std::to_string(n) +
                             " differs from iteration at " + fmt(x));
      }
      if (unapply_pi_power(closed, n) != x) {
        report.add_violation("undoing w^" + std::to_string(n) +
                             " does not return " + fmt(x));
      }
      if (in_pi_power_image(x, n) &&
          apply_pi_power(unapply_pi_power(x, n), n) != x) {
        report.add_violation("w^" + std::to_string(n) +
                             " does not reproduce its image point " + fmt(x));
      }
      iterated = apply_pi(iterated);
    }
  }
  return report;
}

LawReport check_corner_subsemigroups(Nat max_s, Nat bound) {
  LawReport report;
  report.law = "corner-subsemigroups";
  const auto elements = window_elements(bound);
  for (Nat s = 0; s <= max_s; ++s) {
    for (Nat p = 0; p <= 1; ++p) {
      const CornerDescriptor corner{s, p};
      const Nat exponent = 2 * s + p;
      for (const Element& x : elements) {
        ++report.checked;
        if (corner_membership(corner, x) != in_pi_power_image(x, exponent)) {
          report.add_violation("corner (" + std::to_string(s) + "," +
                               std::to_string(p) + ") disagrees with the w^" +
                               std::to_string(exponent) + " image at " +
                               fmt(x));
        }
      }
    }
  }
  // The odd corner genuinely needs exponent 2s+1: with exponent 2s-1 the
  // element (0,0,[1)) would have to belong to the s = 1 corner, and it does
  // not.
  ++report.checked;
  const Element probe(0, 0, 1);
  if (!in_pi_power_image(probe, 1) ||
      corner_membership(CornerDescriptor{1, 1}, probe)) {
    report.add_violation(
        "exponent 2s-1 is not refuted at s = 1, x = (0,0,[1))");
  }
  return report;
}

std::pair<bool, bool> check_inductive_characterization(const BoundedSubset& f) {
  const bool lhs = f.shifted_down(1).intersect(f) == f;
  const bool rhs = f.closed_under_successor();
  return {lhs, rhs};
}

LawReport check_inductivity_window(Nat max_point) {
  LawReport report;
  report.law = "inductivity-characterization";
  if (max_point > 24) {
    throw std::invalid_argument("inductivity sweep is capped at point 24");
  }
  // Finite subsets of {0..max_point} as bitmasks: shift-and-intersect on one
  // side, successor closure on the other, both evaluated literally.
  const std::uint64_t masks = std::uint64_t{1} << (max_point + 1);
  for (std::uint64_t m = 0; m < masks; ++m) {
    ++report.checked;
    const bool lhs = ((m >> 1) & m) == m;
    const bool rhs = ((m << 1) & ~m) == 0;
    if (lhs != rhs) {
      report.add_violation("finite subset mask " + std::to_string(m));
    }
  }
  // The same identity through BoundedSubset, including sets with a tail.
  const Nat class_points = std::min<Nat>(max_point, 11);
  const std::uint64_t class_masks = std::uint64_t{1} << (class_points + 1);
  for (std::uint64_t m = 0; m < class_masks; ++m) {
    std::vector<Nat> points;
    for (Nat b = 0; b <= class_points; ++b) {
      if (m & (std::uint64_t{1} << b)) points.push_back(b);
    }
    for (Nat t = 0; t <= class_points + 2; ++t) {
      ++report.checked;
      const BoundedSubset f(points, t == 0 ? std::optional<Nat>{}
                                           : std::optional<Nat>{t - 1});
      const auto [lhs, rhs] = check_inductive_characterization(f);
      if (lhs != rhs) {
        report.add_violation("subset mask " + std::to_string(m) + " with tail " +
                             std::to_string(t) + " splits the equivalence");
      }
    }
  }
  return report;
}

std::vector<EndoNormalForm> enumerate_normal_forms(const SweepRanges& sweep) {
  std::vector<MonoidPart> parts;
  for (Nat k = 1; k <= sweep.max_k; ++k) {
    for (Nat p = 0; p < k; ++p) parts.push_back(Alpha{k, p});
  }
  for (Nat k = 2; k <= sweep.max_k; ++k) {
    for (Nat p = 1; p < k; ++p) parts.push_back(Beta{k, p});
  }
  for (Nat k = 1; k <= sweep.max_k; ++k) parts.push_back(Gamma{k});
  for (Nat k = 1; k <= sweep.max_k; ++k) parts.push_back(Delta{k});
  parts.push_back(AnnUnit{});

  std::vector<EndoNormalForm> forms;
  forms.reserve(parts.size() * (sweep.max_power + 1));
  for (const MonoidPart& part : parts) {
    for (Nat n = 0; n <= sweep.max_power; ++n) forms.emplace_back(part, n);
  }
  return forms;
}

LawReport check_endomorphism_law(const SweepRanges& sweep, Nat bound) {
  LawReport report;
  report.law = "endomorphism-law";
  const auto elements = window_elements(bound);
  for (const EndoNormalForm& e : enumerate_normal_forms(sweep)) {
    for (const Element& x : elements) {
      for (const Element& y : elements) {
        ++report.checked;
        if (apply(e, x * y) != apply(e, x) * apply(e, y)) {
          report.add_violation(format_endo(e) + " breaks the law on " +
                               fmt(x) + ", " + fmt(y));
        }
      }
    }
  }
  return report;
}

LawReport check_composition_coherence(const SweepRanges& sweep, Nat bound) {
  LawReport report;
  report.law = "composition-coherence";
  const auto forms = enumerate_normal_forms(sweep);
  const auto elements = window_elements(bound);
  for (const EndoNormalForm& f : forms) {
    for (const EndoNormalForm& g : forms) {
      const EndoNormalForm h = compose(f, g);
      for (const Element& x : elements) {
        ++report.checked;
        if (apply(h, x) != apply(g, apply(f, x))) {
          report.add_violation("compose(" + format_endo(f) + ", " +
                               format_endo(g) + ") misses at " + fmt(x));
        }
      }
    }
  }
  // Associativity over triples grows with the cube of the sweep; a reduced
  // sub-sweep still covers all five kinds.
  const SweepRanges triple_sweep{std::min<Nat>(sweep.max_k, 3),
                                 std::min<Nat>(sweep.max_power, 3),
                                 sweep.max_ann_power};
  const auto triple_forms = enumerate_normal_forms(triple_sweep);
  for (const EndoNormalForm& f : triple_forms) {
    for (const EndoNormalForm& g : triple_forms) {
      const EndoNormalForm fg = compose(f, g);
      for (const EndoNormalForm& h : triple_forms) {
        ++report.checked;
        if (compose(fg, h) != compose(f, compose(g, h))) {
          report.add_violation("composition is not associative on " +
                               format_endo(f) + ", " + format_endo(g) + ", " +
                               format_endo(h));
        }
      }
    }
  }
  return report;
}

namespace {

// Images of these seven elements pin a normal form down completely.
const std::vector<Element> kProbes = {
    Element(0, 0, 0), Element(1, 1, 0), Element(2, 2, 0), Element(0, 0, 1),
    Element(1, 1, 1), Element(0, 1, 0), Element(1, 0, 0)};

std::vector<Element> probe_images(const EndoNormalForm& e) {
  std::vector<Element> out;
  out.reserve(kProbes.size());
  for (const Element& x : kProbes) out.push_back(apply(e, x));
  return out;
}

}  // namespace

LawReport check_factorization_uniqueness(const SweepRanges& sweep,
                                         Nat window_bound) {
  LawReport report;
  report.law = "factorization-uniqueness";
  const auto forms = enumerate_normal_forms(sweep);

  std::vector<std::vector<Element>> windows;
  std::vector<std::vector<Element>> probes;
  windows.reserve(forms.size());
  probes.reserve(forms.size());
  for (const EndoNormalForm& e : forms) {
    windows.push_back(sample_targets(e, window_bound));
    probes.push_back(probe_images(e));
  }

  for (std::size_t a = 0; a < forms.size(); ++a) {
    const EndoNormalForm& e = forms[a];

    ++report.checked;
    const EndoNormalForm refactored =
        factor([&](const Element& x) { return apply(e, x); });
    if (refactored != e) {
      report.add_violation("factor(apply(" + format_endo(e) + ")) gave " +
                           format_endo(refactored));
    }

    // Injectivity and constancy transfer between the form and its monoid
    // part alone.
    ++report.checked;
    const EndoNormalForm part_only(e.part(), 0);
    const bool inj = window_injective(windows[a]);
    const bool inj_part = window_injective(sample_targets(part_only, window_bound));
    const bool constant = window_constant(windows[a]);
    const bool constant_part =
        window_constant(sample_targets(part_only, window_bound));
    if (inj != predicates(e).injective || inj_part != inj ||
        constant != predicates(e).annihilating || constant_part != constant) {
      report.add_violation("predicate transfer fails for " + format_endo(e));
    }

    for (std::size_t b = a + 1; b < forms.size(); ++b) {
      ++report.checked;
      if (windows[a] == windows[b]) {
        report.add_violation("windows of " + format_endo(e) + " and " +
                             format_endo(forms[b]) + " coincide");
      }
      if (probes[a] == probes[b]) {
        report.add_violation("probe images of " + format_endo(e) + " and " +
                             format_endo(forms[b]) + " coincide");
      }
    }
  }
  return report;
}

LawReport check_classification(const SweepRanges& sweep, Nat window_bound) {
  LawReport report;
  report.law = "classification";
  for (const EndoNormalForm& e : enumerate_normal_forms(sweep)) {
    ++report.checked;
    const WindowMap m(window_bound,
                      [&](const Element& x) { return apply(e, x); });
    EndoNormalForm classified;
    try {
      classified = classify_window(m);
    } catch (const std::invalid_argument& err) {
      report.add_violation("window of " + format_endo(e) +
                           " failed to classify: " + err.what());
      continue;
    }
    if (classified != e) {
      report.add_violation("window of " + format_endo(e) + " classified as " +
                           format_endo(classified));
      continue;
    }
    std::vector<Element> targets;
    for (const Element& x : window_elements(window_bound)) {
      targets.push_back(m.at(x));
    }
    const EndoPredicates flags = predicates(classified);
    if (window_injective(targets) != flags.injective ||
        window_constant(targets) != flags.annihilating) {
      report.add_violation("class of " + format_endo(e) +
                           " disagrees with its window behaviour");
    }
  }
  return report;
}

LawReport check_minimal_ideal(const SweepRanges& sweep) {
  LawReport report;
  report.law = "right-zero-ideal";
  std::vector<EndoNormalForm> annihilating;
  for (Nat n = 0; n <= sweep.max_ann_power; ++n) {
    annihilating.push_back(EndoNormalForm(AnnUnit{}, n));
  }
  const Element unit(0, 0, 0);

  for (const EndoNormalForm& a : annihilating) {
    for (const EndoNormalForm& b : annihilating) {
      ++report.checked;
      if (compose(a, b) != b) {
        report.add_violation("right-zero law fails for " + format_endo(a) +
                             " then " + format_endo(b));
      }
      ++report.checked;
      if (a != b && apply(a, unit) == apply(b, unit)) {
        report.add_violation(format_endo(a) + " and " + format_endo(b) +
                             " are not distinct constants");
      }
    }
  }

  for (const EndoNormalForm& e : enumerate_normal_forms(sweep)) {
    for (const EndoNormalForm& a : annihilating) {
      ++report.checked;
      if (compose(e, a) != a) {
        report.add_violation(format_endo(e) + " then " + format_endo(a) +
                             " is not " + format_endo(a));
      }
      ++report.checked;
      // The other order lands on the annihilating form whose constant is the
      // image of a's constant under e.
      const Element value = apply(e, apply(a, unit));
      const EndoNormalForm predicted(AnnUnit{}, 2 * value.i() + value.tail());
      if (compose(a, e) != predicted) {
        report.add_violation(format_endo(a) + " then " + format_endo(e) +
                             " is not " + format_endo(predicted));
      }
    }
  }
  return report;
}

LawReport check_inverse_uniqueness(Nat bound) {
  LawReport report;
  report.law = "inverse-uniqueness";
  const auto candidates = window_elements(2 * bound);
  for (const Element& x : window_elements(bound)) {
    ++report.checked;
    Nat found = 0;
    Element witness;
    for (const Element& y : candidates) {
      if (x * y * x == x && y * x * y == y) {
        ++found;
        witness = y;
      }
    }
    if (found != 1 || witness != inverse(x)) {
      report.add_violation("inverse of " + fmt(x) + " is not unique (" +
                           std::to_string(found) + " candidates)");
    }
  }
  return report;
}

LawReport check_idempotent_characterization(Nat bound) {
  LawReport report;
  report.law = "idempotent-characterization";
  for (const Element& x : window_elements(bound)) {
    ++report.checked;
    if (is_idempotent(x) != (x.i() == x.j())) {
      report.add_violation("idempotency of " + fmt(x) +
                           " disagrees with the diagonal form");
    }
  }
  return report;
}

LawReport check_natural_order(Nat bound) {
  LawReport report;
  report.law = "natural-order";
  const auto elements = window_elements(bound);
  const std::size_t n = elements.size();

  // The closed form against the existential definition; idempotent witnesses
  // range over the doubled window so nothing is truncated away.
  std::vector<Element> idempotents;
  for (Nat m = 0; m <= 2 * bound; ++m) {
    for (Nat p = 0; p <= 1; ++p) idempotents.emplace_back(m, m, p);
  }
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) {
      ++report.checked;
      leq[a][b] = natural_leq(elements[a], elements[b]);
      bool existential = false;
      for (const Element& e : idempotents) {
        if (elements[a] == elements[b] * e) {
          existential = true;
          break;
        }
      }
      if (leq[a][b] != existential) {
        report.add_violation("closed form and existential order split on " +
                             fmt(elements[a]) + " vs " + fmt(elements[b]));
      }
    }
  }

  for (std::size_t a = 0; a < n; ++a) {
    ++report.checked;
    if (!leq[a][a]) report.add_violation("order is not reflexive at " + fmt(elements[a]));
    for (std::size_t b = 0; b < n; ++b) {
      ++report.checked;
      if (leq[a][b] && leq[b][a] && a != b) {
        report.add_violation("order is not antisymmetric on " +
                             fmt(elements[a]) + ", " + fmt(elements[b]));
      }
      if (!leq[a][b]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        ++report.checked;
        if (leq[b][c] && !leq[a][c]) {
          report.add_violation("order is not transitive through " +
                               fmt(elements[b]));
        }
      }
    }
  }
  return report;
}

LawReport check_green_relations(Nat bound) {
  LawReport report;
  report.law = "green-relations";
  const auto elements = window_elements(bound);
  const std::size_t n = elements.size();
  const GreenRelation rels[] = {GreenRelation::R, GreenRelation::L,
                                GreenRelation::H};
  std::vector<std::vector<std::vector<bool>>> rel(
      3, std::vector<std::vector<bool>>(n, std::vector<bool>(n, false)));
  for (std::size_t r = 0; r < 3; ++r) {
    for (std::size_t a = 0; a < n; ++a) {
      for (std::size_t b = 0; b < n; ++b) {
        ++report.checked;
        rel[r][a][b] = green_related(elements[a], elements[b], rels[r]);
      }
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t r = 0; r < 3; ++r) {
      ++report.checked;
      if (!rel[r][a][a]) {
        report.add_violation("relation is not reflexive at " + fmt(elements[a]));
      }
    }
    for (std::size_t b = 0; b < n; ++b) {
      ++report.checked;
      if (rel[2][a][b] != (rel[0][a][b] && rel[1][a][b])) {
        report.add_violation("H is not R ∧ L on " + fmt(elements[a]) + ", " +
                             fmt(elements[b]));
      }
      for (std::size_t r = 0; r < 3; ++r) {
        if (rel[r][a][b] != rel[r][b][a]) {
          report.add_violation("relation is not symmetric on " +
                               fmt(elements[a]) + ", " + fmt(elements[b]));
        }
        if (!rel[r][a][b]) continue;
        for (std::size_t c = 0; c < n; ++c) {
          ++report.checked;
          if (rel[r][b][c] && !rel[r][a][c]) {
            report.add_violation("relation is not transitive through " +
                                 fmt(elements[b]));
          }
        }
      }
    }
  }
  return report;
}

LawReport oracle_family_interval(Nat max_index) {
  if (max_index > 10) {
    throw std::invalid_argument("family oracle is capped at index 10");
  }
  LawReport report;
  report.law = "family-interval-oracle";
  const std::uint64_t masks = std::uint64_t{1} << (max_index + 1);
  for (std::uint64_t m = 1; m < masks; ++m) {
    ++report.checked;
    std::vector<Nat> tails;
    for (Nat b = 0; b <= max_index; ++b) {
      if (m & (std::uint64_t{1} << b)) tails.push_back(b);
    }

    bool closed = true;
    for (Nat a : tails) {
      for (Nat b : tails) {
        for (Nat shift = 0; shift <= max_index && closed; ++shift) {
          const Nat produced = std::max(a, b >= shift ? b - shift : 0);
          closed = std::binary_search(tails.begin(), tails.end(), produced);
        }
        if (!closed) break;
      }
      if (!closed) break;
    }

    const bool contiguous = tails.back() - tails.front() + 1 == tails.size();
    const bool validated = validate_family(tails);

    if (closed != contiguous || validated != closed) {
      report.add_violation("mask " + std::to_string(m) +
                           ": closure=" + std::to_string(closed) +
                           " interval=" + std::to_string(contiguous) +
                           " validate=" + std::to_string(validated));
    }
  }
  return report;
}

std::vector<LawReport> run_default_suite(const SuiteOptions& options) {
  const Nat w = options.element_window;
  const SweepRanges sweep{};
  const Family three_tails({0, 1, 2});
  const Family quotient({0, 1}, true);

  std::vector<LawReport> reports;
  reports.push_back(check_associativity(w, Family::f2()));
  reports.back().law = "associativity-two-tails";
  reports.push_back(check_associativity(std::min<Nat>(w, 4), three_tails));
  reports.back().law = "associativity-three-tails";
  reports.push_back(check_unit_law(w));
  reports.push_back(check_zero_absorption(w, quotient));
  reports.push_back(check_pi_window(w));
  reports.push_back(check_pi_power_closed_form(w, 12));
  reports.push_back(check_corner_subsemigroups(4, 10));
  reports.push_back(check_endomorphism_law(sweep, w));
  reports.push_back(check_composition_coherence(sweep, std::min<Nat>(w, 4)));
  reports.push_back(check_factorization_uniqueness(sweep, 8));
  reports.push_back(check_classification(sweep, 8));
  reports.push_back(check_minimal_ideal(sweep));
  reports.push_back(check_inverse_uniqueness(w));
  reports.push_back(check_idempotent_characterization(w));
  reports.push_back(check_natural_order(w));
  reports.push_back(check_green_relations(w));
  reports.push_back(check_inductivity_window(20));
  reports.push_back(oracle_family_interval(8));
  return reports;
}

}  // namespace bwf2
