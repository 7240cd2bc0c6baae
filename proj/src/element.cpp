#include "bwf2/element.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace bwf2 {

namespace {

using Wide = __int128;

Nat narrow(Wide v, const char* what) {
  if (v < 0 || v > static_cast<Wide>(nat_max)) {
    throw std::overflow_error(std::string(what) + " exceeds the coordinate bound 2^63-1");
  }
  return static_cast<Nat>(v);
}

}  // namespace

Nat checked_add(Nat a, Nat b) {
  return narrow(static_cast<Wide>(a) + static_cast<Wide>(b), "sum");
}

Nat checked_mul(Nat a, Nat b) {
  return narrow(static_cast<Wide>(a) * static_cast<Wide>(b), "product");
}

Nat InductiveSet::least() const {
  if (empty_) throw std::logic_error("the empty set has no least element");
  return least_;
}

InductiveSet shift_intersect(std::int64_t m, const InductiveSet& f1,
                             const InductiveSet& f2) {
  if (f1.is_empty() || f2.is_empty()) return InductiveSet::empty();
  Wide shifted = static_cast<Wide>(f1.least()) + m;
  Wide least = std::max(shifted, static_cast<Wide>(f2.least()));
  return InductiveSet::tail(narrow(least, "tail index"));
}

Family::Family(std::vector<Nat> tails, bool includes_empty)
    : tails_(std::move(tails)), includes_empty_(includes_empty) {
  std::sort(tails_.begin(), tails_.end());
  tails_.erase(std::unique(tails_.begin(), tails_.end()), tails_.end());
  if (tails_.empty()) throw std::invalid_argument("a family needs at least one tail");
  if (auto w = family_closure_witness(tails_)) {
    throw std::invalid_argument(
        "tail set is not omega-closed: [" + std::to_string(w->a) + ") ∩ (-" +
        std::to_string(w->n) + " + [" + std::to_string(w->b) + ")) = [" +
        std::to_string(w->produced) + ") is missing");
  }
}

const Family& Family::f2() {
  static const Family fam(std::vector<Nat>{0, 1});
  return fam;
}

bool Family::contains(Nat tail_index) const {
  return std::binary_search(tails_.begin(), tails_.end(), tail_index);
}

Element::Element(Nat i, Nat j, const InductiveSet& f)
    : i_(i), j_(j), tail_(f.least()) {}

Element Element::zero() {
  Element z;
  z.zero_ = true;
  return z;
}

Nat Element::i() const {
  if (zero_) throw std::logic_error("zero element has no coordinates");
  return i_;
}

Nat Element::j() const {
  if (zero_) throw std::logic_error("zero element has no coordinates");
  return j_;
}

Nat Element::tail() const {
  if (zero_) throw std::logic_error("zero element has no tail");
  return tail_;
}

InductiveSet Element::set() const { return InductiveSet::tail(tail()); }

Element operator*(const Element& x, const Element& y) {
  if (x.is_zero() || y.is_zero()) return Element::zero();
  InductiveSet f = InductiveSet::empty();
  Nat i = 0;
  Nat j = 0;
  if (x.j() < y.i()) {
    i = checked_add(x.i(), y.i() - x.j());
    j = y.j();
    f = shift_intersect(static_cast<std::int64_t>(x.j()) -
                            static_cast<std::int64_t>(y.i()),
                        x.set(), y.set());
  } else if (x.j() == y.i()) {
    i = x.i();
    j = y.j();
    f = shift_intersect(0, x.set(), y.set());
  } else {
    i = x.i();
    j = checked_add(y.j(), x.j() - y.i());
    f = shift_intersect(static_cast<std::int64_t>(y.i()) -
                            static_cast<std::int64_t>(x.j()),
                        y.set(), x.set());
  }
  if (f.is_empty()) return Element::zero();
  return Element(i, j, f);
}

bool valid_over(const Element& x, const Family& fam) {
  if (x.is_zero()) return fam.includes_empty();
  return fam.contains(x.tail());
}

Element multiply(const Element& x, const Element& y, const Family& fam) {
  if (!valid_over(x, fam) || !valid_over(y, fam)) {
    throw std::invalid_argument("operand is not an element over the family");
  }
  return x * y;
}

Element inverse(const Element& x) {
  if (x.is_zero()) return x;
  return Element(x.j(), x.i(), x.tail());
}

bool is_idempotent(const Element& x) { return x * x == x; }

namespace {

void require_nonzero(const Element& x, const char* op) {
  if (x.is_zero()) {
    throw std::invalid_argument(std::string(op) + " is not defined for the zero element");
  }
}

}  // namespace

bool natural_leq(const Element& x, const Element& y) {
  require_nonzero(x, "the natural partial order");
  require_nonzero(y, "the natural partial order");
  return x == (x * inverse(x)) * y;
}

bool green_related(const Element& x, const Element& y, GreenRelation rel) {
  require_nonzero(x, "a Green relation");
  require_nonzero(y, "a Green relation");
  const bool r = x * inverse(x) == y * inverse(y);
  if (rel == GreenRelation::R) return r;
  const bool l = inverse(x) * x == inverse(y) * y;
  if (rel == GreenRelation::L) return l;
  return r && l;
}

std::optional<ClosureWitness> family_closure_witness(
    const std::vector<Nat>& tails) {
  std::vector<Nat> sorted(tails);
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  if (sorted.empty()) throw std::invalid_argument("empty tail set");
  const Nat max = sorted.back();
  for (Nat a : sorted) {
    for (Nat b : sorted) {
      for (Nat n = 0; n <= max; ++n) {
        const Nat produced = std::max(a, b >= n ? b - n : 0);
        if (!std::binary_search(sorted.begin(), sorted.end(), produced)) {
          return ClosureWitness{a, b, n, produced};
        }
      }
    }
  }
  return std::nullopt;
}

bool validate_family(const std::vector<Nat>& tails) {
  return !family_closure_witness(tails).has_value();
}

namespace {

struct Scanner {
  std::string_view text;
  std::size_t pos = 0;

  void skip_blanks() {
    while (pos < text.size() &&
           std::isspace(static_cast<unsigned char>(text[pos]))) {
      ++pos;
    }
  }

  bool consume(char c) {
    skip_blanks();
    if (pos < text.size() && text[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }

  void expect(char c) {
    if (!consume(c)) {
      throw std::invalid_argument("expected '" + std::string(1, c) +
                                  "' at position " + std::to_string(pos));
    }
  }

  Nat number() {
    skip_blanks();
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("expected a number at position " +
                                  std::to_string(pos));
    }
    Nat value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const Nat digit = static_cast<Nat>(text[pos] - '0');
      if (value > (nat_max - digit) / 10) {
        throw std::overflow_error("number exceeds the coordinate bound");
      }
      value = value * 10 + digit;
      ++pos;
    }
    return value;
  }

  bool at_end() {
    skip_blanks();
    return pos == text.size();
  }
};

}  // namespace

Element parse_element(std::string_view text, const Family& fam) {
  Scanner s{text};
  if (s.consume('0')) {
    if (!s.at_end()) throw std::invalid_argument("trailing input after '0'");
    if (!fam.includes_empty()) {
      throw std::invalid_argument(
          "'0' denotes the zero class, which this family does not have");
    }
    return Element::zero();
  }
  s.expect('(');
  const Nat i = s.number();
  s.expect(',');
  const Nat j = s.number();
  s.expect(',');
  s.expect('[');
  const Nat t = s.number();
  s.expect(')');
  s.expect(')');
  if (!s.at_end()) throw std::invalid_argument("trailing input after element");
  if (!fam.contains(t)) {
    throw std::invalid_argument("tail [" + std::to_string(t) +
                                ") is not a member of the family");
  }
  return Element(i, j, t);
}

std::string format_element(const Element& x) {
  if (x.is_zero()) return "0";
  return "(" + std::to_string(x.i()) + "," + std::to_string(x.j()) + ",[" +
         std::to_string(x.tail()) + "))";
}

BoundedSubset::BoundedSubset(std::vector<Nat> points, std::optional<Nat> tail)
    : points_(std::move(points)), tail_(tail) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
  if (tail_) {
    // drop points the tail already covers, then pull the tail across points
    // touching it from below
    points_.erase(
        std::remove_if(points_.begin(), points_.end(),
                       [&](Nat k) { return k >= *tail_; }),
        points_.end());
    while (*tail_ > 0 && !points_.empty() && points_.back() == *tail_ - 1) {
      --*tail_;
      points_.pop_back();
    }
  }
}

bool BoundedSubset::contains(Nat k) const {
  if (tail_ && k >= *tail_) return true;
  return std::binary_search(points_.begin(), points_.end(), k);
}

bool BoundedSubset::closed_under_successor() const {
  for (Nat k : points_) {
    if (!contains(k + 1)) return false;
  }
  return true;
}

BoundedSubset BoundedSubset::shifted_down(Nat m) const {
  std::vector<Nat> pts;
  for (Nat k : points_) {
    if (k >= m) pts.push_back(k - m);
  }
  std::optional<Nat> t;
  if (tail_) t = *tail_ >= m ? *tail_ - m : 0;
  return BoundedSubset(std::move(pts), t);
}

BoundedSubset BoundedSubset::intersect(const BoundedSubset& other) const {
  std::vector<Nat> pts;
  for (Nat k : points_) {
    if (other.contains(k)) pts.push_back(k);
  }
  for (Nat k : other.points_) {
    if (contains(k)) pts.push_back(k);
  }
  std::optional<Nat> t;
  if (tail_ && other.tail_) t = std::max(*tail_, *other.tail_);
  return BoundedSubset(std::move(pts), t);
}

}  // namespace bwf2
