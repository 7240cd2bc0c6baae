#ifndef BWF2_ENDO_HPP
#define BWF2_ENDO_HPP

#include <string>
#include <string_view>
#include <variant>

#include "bwf2/element.hpp"
#include "bwf2/window_map.hpp"

namespace bwf2 {

// The five families of monoid endomorphisms of the two-tail extension,
// written as right actions:
//
//   alpha_{k,p}:  (i,j,[0)) -> (ki,kj,[0))        (i,j,[1)) -> (p+ki,p+kj,[1))
//   beta_{k,p}:   (i,j,[0)) -> (ki,kj,[0))        (i,j,[1)) -> (p+ki,p+kj,[0))
//   gamma_k:      (i,j,[0)) -> (ki,kj,[0))        (i,j,[1)) -> (ki,kj,[0))
//   delta_k:      (i,j,[0)) -> (ki,kj,[0))        (i,j,[1)) -> (k(i+1),k(j+1),[0))
//   ann_unit:     everything -> (0,0,[0))
//
// The identity is alpha_{1,0}; it is the canonical representation.

struct Alpha {
  Nat k = 1;  // k >= 1
  Nat p = 0;  // 0 <= p <= k-1
  friend bool operator==(const Alpha&, const Alpha&) = default;
};

struct Beta {
  Nat k = 2;  // k >= 2
  Nat p = 1;  // 1 <= p <= k-1
  friend bool operator==(const Beta&, const Beta&) = default;
};

struct Gamma {
  Nat k = 1;  // k >= 1
  friend bool operator==(const Gamma&, const Gamma&) = default;
};

struct Delta {
  Nat k = 1;  // k >= 1
  friend bool operator==(const Delta&, const Delta&) = default;
};

struct AnnUnit {
  friend bool operator==(const AnnUnit&, const AnnUnit&) = default;
};

using MonoidPart = std::variant<Alpha, Beta, Gamma, Delta, AnnUnit>;

/// Throws std::invalid_argument when a parameter is out of range.
void validate_part(const MonoidPart& part);

/// The normal form of an endomorphism: a monoid endomorphism followed by the
/// n-th power of the tail-swapping endomorphism pi. Every endomorphism of the
/// two-tail extension has exactly one such representation.
class EndoNormalForm {
public:
  EndoNormalForm() = default;  // the identity
  EndoNormalForm(MonoidPart part, Nat power);

  static EndoNormalForm identity() { return EndoNormalForm(); }
  static EndoNormalForm pi_power(Nat n) { return EndoNormalForm(Alpha{}, n); }
  /// The constant map onto (s,s,[q)), stored as (ann_unit, 2s+q).
  static EndoNormalForm chi(Nat s, Nat q);

  const MonoidPart& part() const { return part_; }
  Nat power() const { return power_; }

  friend bool operator==(const EndoNormalForm&,
                         const EndoNormalForm&) = default;

private:
  MonoidPart part_ = Alpha{};
  Nat power_ = 0;
};

/// The tail-swapping endomorphism pi:
///   (i,j,[0)) -> (i,j,[1))      (i,j,[1)) -> (i+1,j+1,[0)).
Element apply_pi(const Element& x);

/// Closed form of the n-th power of pi: with t = floor(n/2),
///   n even:  (i,j,[p)) -> (i+t, j+t, [p))
///   n odd:   (i,j,[0)) -> (i+t, j+t, [1))    (i,j,[1)) -> (i+t+1, j+t+1, [0))
Element apply_pi_power(const Element& x, Nat n);

/// Inverse of pi^n on its image; throws when x lies outside that image.
Element unapply_pi_power(const Element& x, Nat n);

/// Closed-form membership in the image of pi^n.
bool in_pi_power_image(const Element& x, Nat n);

Element apply_part(const MonoidPart& part, const Element& x);
Element apply(const EndoNormalForm& e, const Element& x);

/// The unique normal form h with h(x) = g(f(x)) — "f then g", matching the
/// right-action convention in which the power of pi is applied last. Computed
/// by composing pointwise on the probe elements and classifying the result.
EndoNormalForm compose(const EndoNormalForm& f, const EndoNormalForm& g);

/// Recovers the normal form of a map known to be an endomorphism. The power n
/// is read off the image (s,s,[p)) of the unit as n = 2s + p; the monoid part
/// is recovered from the images of (1,1,[0)) and (0,0,[1)) after undoing
/// pi^n. Throws std::invalid_argument when the probe images cannot belong to
/// any endomorphism.
EndoNormalForm factor(const ElementMap& map);
EndoNormalForm factor(const WindowMap& m);

/// Like factor, but additionally verifies that the recovered form reproduces
/// the supplied map on its whole window; the window must reach at least
/// bound 2 so the probe elements are covered.
EndoNormalForm classify_window(const WindowMap& m);

struct EndoPredicates {
  bool injective = false;
  bool annihilating = false;
  bool monoidal = false;
};

/// injective <=> monoid part is alpha or beta; annihilating <=> ann_unit;
/// monoidal <=> the pi power is zero.
EndoPredicates predicates(const EndoNormalForm& e);

/// The corner subsemigroup (s,s,[p))·S·(s,s,[p)).
struct CornerDescriptor {
  Nat s = 0;
  Nat p = 0;  // p in {0, 1}
};

/// e·x·e = x for the corner unit e = (s,s,[p)); x must be nonzero.
bool corner_membership(const CornerDescriptor& c, const Element& x);

/// Expression grammar: terms `alpha[k,p]`, `beta[k,p]`, `gamma[k]`,
/// `delta[k]`, `chi[s,q]`, `w^n`, `w`, `id`, chained left-to-right with `;`.
EndoNormalForm parse_endo_expression(std::string_view text);

/// Canonical text: annihilating forms render as `chi[s,q]`, powers of pi as
/// `id` or `w^n`, and other forms as the part followed by ` ; w^n` when the
/// power is nonzero. Parsing the result reproduces the normal form.
std::string format_endo(const EndoNormalForm& e);

std::string format_part(const MonoidPart& part);

}  // namespace bwf2

#endif  // BWF2_ENDO_HPP
