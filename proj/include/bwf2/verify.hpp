#ifndef BWF2_VERIFY_HPP
#define BWF2_VERIFY_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "bwf2/element.hpp"
#include "bwf2/endo.hpp"
#include "bwf2/window_map.hpp"

namespace bwf2 {

/// Outcome of one exhaustive law check. Violations are counterexamples, not
/// errors; iteration order over windows is fixed, so reports are reproducible.
/// Only the first few counterexamples are rendered; violation_total carries
/// the full count.
struct LawReport {
  std::string law;
  std::uint64_t checked = 0;
  std::uint64_t skipped = 0;  // raw-window pairs whose product left the window
  std::uint64_t violation_total = 0;
  std::vector<std::string> violations;

  bool ok() const { return violation_total == 0; }
  void add_violation(std::string text);
};

using ProductFn = std::function<Element(const Element&, const Element&)>;

/// Elements (i, j, [t)) with i, j <= bound and t running over the family
/// tails, in the fixed order i, j, tail; the zero class comes last when the
/// family has one.
std::vector<Element> family_window_elements(Nat bound, const Family& fam);

/// Exhaustive associativity over the family window; bound must stay <= 8.
LawReport check_associativity(Nat bound, const Family& fam);

/// Same check against an arbitrary product, used to confirm that the oracle
/// catches deliberately broken case splits.
LawReport check_associativity(Nat bound, const Family& fam,
                              const ProductFn& product);

LawReport check_unit_law(Nat bound);

/// Zero absorption over a family that contains the empty set.
LawReport check_zero_absorption(Nat bound, const Family& fam);

/// Homomorphism law on a raw sampled window: pairs whose product leaves the
/// window are skipped and counted. The bound must be at least 2.
LawReport check_homomorphism(const WindowMap& m);

/// Homomorphism law with closed-form target evaluation; nothing is skipped.
LawReport check_homomorphism(Nat bound, const ElementMap& fn);

/// Homomorphism law plus injectivity of the tail-swapping endomorphism.
LawReport check_pi_window(Nat bound);

/// Closed-form powers of pi against plain iteration, and the round trips of
/// unapply_pi_power on both sides, for all powers up to max_power.
LawReport check_pi_power_closed_form(Nat bound, Nat max_power);

/// Corner membership e·x·e = x for e = (s,s,[p)) against closed-form image
/// membership of pi^(2s+p), for all s <= max_s on the given window. Also
/// pins the counterexample showing that exponent 2s-1 fails for p = 1 at
/// s = 1.
LawReport check_corner_subsemigroups(Nat max_s, Nat bound);

/// (lhs, rhs) of the inductivity identity: lhs is (-1+F) ∩ F = F evaluated
/// with set operations, rhs is closure under successor checked pointwise.
std::pair<bool, bool> check_inductive_characterization(const BoundedSubset& f);

/// Sweeps the inductivity identity over every finite subset of
/// {0..max_point} (bitmask evaluation) and over point-plus-tail subsets
/// (BoundedSubset evaluation), requiring both sides to agree everywhere.
LawReport check_inductivity_window(Nat max_point);

/// Parameter ranges for normal-form sweeps.
struct SweepRanges {
  Nat max_k = 4;
  Nat max_power = 5;
  Nat max_ann_power = 10;
};

/// Every normal form with k <= max_k, all legal p, power <= max_power, in a
/// fixed order.
std::vector<EndoNormalForm> enumerate_normal_forms(const SweepRanges& sweep);

/// Every sweep form satisfies the homomorphism law on the window.
LawReport check_endomorphism_law(const SweepRanges& sweep, Nat bound);

/// compose agrees pointwise with "f then g" on the window for all sweep
/// pairs, and is associative on sweep triples.
LawReport check_composition_coherence(const SweepRanges& sweep, Nat bound);

/// factor ∘ apply is the identity on sweep forms, distinct forms have
/// distinct windows at window_bound, and the injectivity/constancy of a form
/// on the window agrees with its monoid part alone.
LawReport check_factorization_uniqueness(const SweepRanges& sweep,
                                         Nat window_bound);

/// Every sweep window classifies back to its form, and the class matches the
/// window-level injectivity/constancy.
LawReport check_classification(const SweepRanges& sweep, Nat window_bound);

/// The annihilating forms are right zeros and form the minimal ideal:
/// a·b = b, e·a = a, and a·e is the annihilating form predicted by the image
/// of the constant value under e.
LawReport check_minimal_ideal(const SweepRanges& sweep);

LawReport check_inverse_uniqueness(Nat bound);
LawReport check_idempotent_characterization(Nat bound);

/// Closed form of the natural partial order against the existential
/// definition, plus the partial-order laws.
LawReport check_natural_order(Nat bound);

/// R, L and H are equivalence relations and H = R ∧ L on the window.
LawReport check_green_relations(Nat bound);

/// validate_family against brute-force closure and against the
/// contiguous-interval characterization, over every nonempty subset of
/// {0..max_index}.
LawReport oracle_family_interval(Nat max_index);

struct SuiteOptions {
  Nat element_window = 6;  // window for the element-level exhaustive laws
};

/// Runs every check at its standing bounds. The suite is clean on a correct
/// build; any violation means a law of the semigroup or of its endomorphism
/// calculus failed.
std::vector<LawReport> run_default_suite(const SuiteOptions& options = {});

}  // namespace bwf2

#endif  // BWF2_VERIFY_HPP
