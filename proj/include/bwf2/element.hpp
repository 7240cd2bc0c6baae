#ifndef BWF2_ELEMENT_HPP
#define BWF2_ELEMENT_HPP

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace bwf2 {

/// Natural numbers as used for coordinates and tail indices. Values are kept
/// below 2^63 so that signed differences are always exact; operations that
/// would leave that range throw std::overflow_error.
using Nat = std::uint64_t;

inline constexpr Nat nat_max = (Nat{1} << 63) - 1;

Nat checked_add(Nat a, Nat b);
Nat checked_mul(Nat a, Nat b);

/// An inductive subset of omega: the empty set or a tail [n) = {i : i >= n},
/// stored by its least element n.
class InductiveSet {
public:
  static InductiveSet tail(Nat least) { return InductiveSet(false, least); }
  static InductiveSet empty() { return InductiveSet(true, 0); }

  bool is_empty() const { return empty_; }
  Nat least() const;

  friend bool operator==(const InductiveSet&, const InductiveSet&) = default;

private:
  InductiveSet(bool empty, Nat least) : empty_(empty), least_(least) {}

  bool empty_;
  Nat least_;
};

/// (m + f1) ∩ f2 as a subset of omega. The shift may be negative; intersecting
/// with f2 ⊆ omega clips the shifted set back into omega. The empty set
/// absorbs.
InductiveSet shift_intersect(std::int64_t m, const InductiveSet& f1,
                             const InductiveSet& f2);

/// A finite omega-closed family of tails given by their indices, optionally
/// containing the empty set as a member. Construction rejects input that
/// violates omega-closure: [a) ∩ (-n + [b)) must again be a member for all
/// member tails [a), [b) and every shift n.
class Family {
public:
  explicit Family(std::vector<Nat> tails, bool includes_empty = false);

  /// The two-tail family {[0), [1)}.
  static const Family& f2();

  bool contains(Nat tail_index) const;
  bool includes_empty() const { return includes_empty_; }
  const std::vector<Nat>& tails() const { return tails_; }
  Nat max_tail() const { return tails_.back(); }

  friend bool operator==(const Family&, const Family&) = default;

private:
  std::vector<Nat> tails_;  // sorted, unique, nonempty
  bool includes_empty_;
};

/// Element of the bicyclic extension over a family of tails: a triple
/// (i, j, [t)), or the zero class when the ambient family contains the empty
/// set. Default-constructs to the unit (0,0,[0)).
class Element {
public:
  Element() = default;
  Element(Nat i, Nat j, Nat tail_index) : i_(i), j_(j), tail_(tail_index) {}
  Element(Nat i, Nat j, const InductiveSet& f);

  static Element zero();

  bool is_zero() const { return zero_; }
  Nat i() const;
  Nat j() const;
  Nat tail() const;
  InductiveSet set() const;

  friend bool operator==(const Element&, const Element&) = default;
  friend std::strong_ordering operator<=>(const Element&,
                                          const Element&) = default;

private:
  bool zero_ = false;
  Nat i_ = 0;
  Nat j_ = 0;
  Nat tail_ = 0;
};

/// Raw product
///
///   (i1,j1,F1)(i2,j2,F2) = (i1-j1+i2, j2,    (j1-i2+F1) ∩ F2)   if j1 < i2
///                          (i1,       j2,    F1 ∩ F2)           if j1 = i2
///                          (i1, j1-i2+j2,    F1 ∩ (i2-j1+F2))   if j1 > i2
///
/// with zero absorbing. Operands are not checked against any family.
Element operator*(const Element& x, const Element& y);

/// True when x is an element over fam: a triple whose tail is a member, or
/// zero when fam contains the empty set.
bool valid_over(const Element& x, const Family& fam);

/// Product with family-membership validation of both operands.
Element multiply(const Element& x, const Element& y, const Family& fam);

/// (i,j,F) -> (j,i,F); zero is its own inverse.
Element inverse(const Element& x);

/// x·x = x, decided by computing the square.
bool is_idempotent(const Element& x);

/// Natural partial order, decided by the closed form x = x·x⁻¹·y.
/// Both arguments must be nonzero.
bool natural_leq(const Element& x, const Element& y);

enum class GreenRelation { R, L, H };

/// R: x·x⁻¹ = y·y⁻¹;  L: x⁻¹·x = y⁻¹·y;  H: both. Arguments must be nonzero.
bool green_related(const Element& x, const Element& y, GreenRelation rel);

/// First omega-closure failure of a candidate tail set:
/// [a) ∩ (-n + [b)) = [produced) with produced not in the set. Search order is
/// fixed: a ascending, then b ascending, then n ascending, with n bounded by
/// the largest candidate index (larger shifts produce nothing new).
struct ClosureWitness {
  Nat a = 0;
  Nat b = 0;
  Nat n = 0;
  Nat produced = 0;
};

std::optional<ClosureWitness> family_closure_witness(
    const std::vector<Nat>& tails);

/// True iff the candidate tail indices form an omega-closed family.
bool validate_family(const std::vector<Nat>& tails);

/// Grammar "(" i "," j ",[" t "))" with decimal naturals and optional blanks
/// between tokens; "0" denotes the zero class when the family has one.
Element parse_element(std::string_view text, const Family& fam = Family::f2());
std::string format_element(const Element& x);

/// A subset of omega with finite support: finitely many points plus at most
/// one tail, kept in a canonical split (points lie strictly below the tail,
/// and a point adjacent to the tail is merged into it).
class BoundedSubset {
public:
  BoundedSubset() = default;  // the empty set
  explicit BoundedSubset(std::vector<Nat> points,
                         std::optional<Nat> tail = std::nullopt);

  bool empty() const { return points_.empty() && !tail_; }
  bool contains(Nat k) const;

  /// The successor-closure property i ∈ F ⇒ i+1 ∈ F, checked pointwise.
  bool closed_under_successor() const;

  /// (-m + F) ∩ omega.
  BoundedSubset shifted_down(Nat m) const;
  BoundedSubset intersect(const BoundedSubset& other) const;

  const std::vector<Nat>& points() const { return points_; }
  const std::optional<Nat>& tail() const { return tail_; }

  friend bool operator==(const BoundedSubset&, const BoundedSubset&) = default;

private:
  std::vector<Nat> points_;  // sorted, unique, all below tail_ when present
  std::optional<Nat> tail_;
};

}  // namespace bwf2

#endif  // BWF2_ELEMENT_HPP
