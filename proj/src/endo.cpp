#include "bwf2/endo.hpp"

#include <cctype>
#include <stdexcept>

namespace bwf2 {

namespace {

const Element kUnit(0, 0, 0);

void require_two_tail_element(const Element& x) {
  if (x.is_zero() || x.tail() > 1) {
    throw std::invalid_argument(
        "endomorphisms act on two-tail elements, got " + format_element(x));
  }
}

}  // namespace

void validate_part(const MonoidPart& part) {
  std::visit(
      [](const auto& v) {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Alpha>) {
          if (v.k < 1 || v.p > v.k - 1) {
            throw std::invalid_argument("alpha requires k >= 1 and 0 <= p <= k-1");
          }
        } else if constexpr (std::is_same_v<T, Beta>) {
          if (v.k < 2 || v.p < 1 || v.p > v.k - 1) {
            throw std::invalid_argument("beta requires k >= 2 and 1 <= p <= k-1");
          }
        } else if constexpr (std::is_same_v<T, Gamma>) {
          if (v.k < 1) throw std::invalid_argument("gamma requires k >= 1");
        } else if constexpr (std::is_same_v<T, Delta>) {
          if (v.k < 1) throw std::invalid_argument("delta requires k >= 1");
        }
      },
      part);
}

EndoNormalForm::EndoNormalForm(MonoidPart part, Nat power)
    : part_(std::move(part)), power_(power) {
  validate_part(part_);
}

EndoNormalForm EndoNormalForm::chi(Nat s, Nat q) {
  if (q > 1) throw std::invalid_argument("chi requires q in {0, 1}");
  return EndoNormalForm(AnnUnit{}, checked_add(checked_mul(2, s), q));
}

Element apply_pi(const Element& x) {
  require_two_tail_element(x);
  if (x.tail() == 0) return Element(x.i(), x.j(), 1);
  return Element(checked_add(x.i(), 1), checked_add(x.j(), 1), 0);
}

Element apply_pi_power(const Element& x, Nat n) {
  require_two_tail_element(x);
  const Nat t = n / 2;
  if (n % 2 == 0) {
    return Element(checked_add(x.i(), t), checked_add(x.j(), t), x.tail());
  }
  if (x.tail() == 0) {
    return Element(checked_add(x.i(), t), checked_add(x.j(), t), 1);
  }
  return Element(checked_add(x.i(), t + 1), checked_add(x.j(), t + 1), 0);
}

bool in_pi_power_image(const Element& x, Nat n) {
  if (x.is_zero() || x.tail() > 1) return false;
  const Nat t = n / 2;
  if (n % 2 == 0) return x.i() >= t && x.j() >= t;
  if (x.tail() == 1) return x.i() >= t && x.j() >= t;
  return x.i() >= t + 1 && x.j() >= t + 1;
}

Element unapply_pi_power(const Element& x, Nat n) {
  require_two_tail_element(x);
  if (!in_pi_power_image(x, n)) {
    throw std::invalid_argument(format_element(x) +
                                " is not in the image of w^" +
                                std::to_string(n));
  }
  const Nat t = n / 2;
  if (n % 2 == 0) return Element(x.i() - t, x.j() - t, x.tail());
  if (x.tail() == 1) return Element(x.i() - t, x.j() - t, 0);
  return Element(x.i() - t - 1, x.j() - t - 1, 1);
}

Element apply_part(const MonoidPart& part, const Element& x) {
  require_two_tail_element(x);
  return std::visit(
      [&](const auto& v) -> Element {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Alpha>) {
          if (x.tail() == 0) {
            return Element(checked_mul(v.k, x.i()), checked_mul(v.k, x.j()), 0);
          }
          return Element(checked_add(v.p, checked_mul(v.k, x.i())),
                         checked_add(v.p, checked_mul(v.k, x.j())), 1);
        } else if constexpr (std::is_same_v<T, Beta>) {
          if (x.tail() == 0) {
            return Element(checked_mul(v.k, x.i()), checked_mul(v.k, x.j()), 0);
          }
          return Element(checked_add(v.p, checked_mul(v.k, x.i())),
                         checked_add(v.p, checked_mul(v.k, x.j())), 0);
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return Element(checked_mul(v.k, x.i()), checked_mul(v.k, x.j()), 0);
        } else if constexpr (std::is_same_v<T, Delta>) {
          if (x.tail() == 0) {
            return Element(checked_mul(v.k, x.i()), checked_mul(v.k, x.j()), 0);
          }
          return Element(checked_mul(v.k, checked_add(x.i(), 1)),
                         checked_mul(v.k, checked_add(x.j(), 1)), 0);
        } else {
          return kUnit;
        }
      },
      part);
}

Element apply(const EndoNormalForm& e, const Element& x) {
  return apply_pi_power(apply_part(e.part(), x), e.power());
}

namespace {

template <typename Map>
EndoNormalForm factor_impl(const Map& map) {
  const Element unit_image = map(kUnit);
  if (unit_image.is_zero() || unit_image.tail() > 1 ||
      !is_idempotent(unit_image)) {
    throw std::invalid_argument(
        "the image of the unit is not a two-tail idempotent; the map is not "
        "an endomorphism");
  }
  const Nat s = unit_image.i();
  const Nat q = unit_image.tail();
  const Nat n = checked_add(checked_mul(2, s), q);

  const Element v = unapply_pi_power(map(Element(1, 1, 0)), n);
  if (v.tail() != 0 || v.i() != v.j()) {
    throw std::invalid_argument("no monoid part matches the image of (1,1,[0))");
  }
  if (v == kUnit) return EndoNormalForm(AnnUnit{}, n);
  const Nat k = v.i();

  const Element w = unapply_pi_power(map(Element(0, 0, 1)), n);
  if (w.i() != w.j()) {
    throw std::invalid_argument("no monoid part matches the image of (0,0,[1))");
  }
  const Nat offset = w.i();
  if (w.tail() == 1) {
    if (offset > k - 1) {
      throw std::invalid_argument("no monoid part matches the image of (0,0,[1))");
    }
    return EndoNormalForm(Alpha{k, offset}, n);
  }
  if (offset == 0) return EndoNormalForm(Gamma{k}, n);
  if (offset == k) return EndoNormalForm(Delta{k}, n);
  if (offset < k) return EndoNormalForm(Beta{k, offset}, n);
  throw std::invalid_argument("no monoid part matches the image of (0,0,[1))");
}

}  // namespace

EndoNormalForm factor(const ElementMap& map) { return factor_impl(map); }

EndoNormalForm factor(const WindowMap& m) { return classify_window(m); }

namespace {

// Scan for a homomorphism failure among pairs whose product stays inside the
// window, to sharpen the error when a window matches no normal form.
std::string homomorphism_diagnosis(const WindowMap& m) {
  const auto elements = window_elements(m.bound());
  for (const Element& x : elements) {
    for (const Element& y : elements) {
      const Element xy = x * y;
      if (!m.contains(xy)) continue;
      if (m.at(xy) != m.at(x) * m.at(y)) {
        return "homomorphism violation on the window: image of " +
               format_element(x) + "·" + format_element(y) +
               " is not the product of the images";
      }
    }
  }
  return "";
}

}  // namespace

EndoNormalForm classify_window(const WindowMap& m) {
  if (m.bound() < 2) {
    throw std::invalid_argument(
        "window bound " + std::to_string(m.bound()) +
        " is too small; classification needs the probes up to bound 2");
  }
  EndoNormalForm e;
  try {
    e = factor([&](const Element& x) { return m.at(x); });
  } catch (const std::invalid_argument&) {
    const std::string diag = homomorphism_diagnosis(m);
    if (!diag.empty()) throw std::invalid_argument(diag);
    throw;
  }
  for (const Element& x : window_elements(m.bound())) {
    if (apply(e, x) != m.at(x)) {
      const std::string diag = homomorphism_diagnosis(m);
      if (!diag.empty()) throw std::invalid_argument(diag);
      throw std::invalid_argument(
          "window does not match any endomorphism normal form: mismatch at " +
          format_element(x));
    }
  }
  return e;
}

EndoPredicates predicates(const EndoNormalForm& e) {
  EndoPredicates out;
  out.injective = std::holds_alternative<Alpha>(e.part()) ||
                  std::holds_alternative<Beta>(e.part());
  out.annihilating = std::holds_alternative<AnnUnit>(e.part());
  out.monoidal = e.power() == 0;
  return out;
}

bool corner_membership(const CornerDescriptor& c, const Element& x) {
  if (c.p > 1) throw std::invalid_argument("corner tail must be 0 or 1");
  if (x.is_zero()) {
    throw std::invalid_argument("corner membership is not defined for zero");
  }
  const Element e(c.s, c.s, c.p);
  return (e * x) * e == x;
}

namespace {

struct TermScanner {
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
                                  "' in endomorphism term");
    }
  }

  std::string word() {
    skip_blanks();
    std::string out;
    while (pos < text.size() &&
           std::isalpha(static_cast<unsigned char>(text[pos]))) {
      out.push_back(text[pos]);
      ++pos;
    }
    return out;
  }

  Nat number() {
    skip_blanks();
    if (pos >= text.size() ||
        !std::isdigit(static_cast<unsigned char>(text[pos]))) {
      throw std::invalid_argument("expected a number in endomorphism term");
    }
    Nat value = 0;
    while (pos < text.size() &&
           std::isdigit(static_cast<unsigned char>(text[pos]))) {
      const Nat digit = static_cast<Nat>(text[pos] - '0');
      if (value > (nat_max - digit) / 10) {
        throw std::overflow_error("parameter exceeds the coordinate bound");
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

EndoNormalForm parse_term(std::string_view term) {
  TermScanner s{term};
  const std::string name = s.word();
  if (name.empty()) {
    throw std::invalid_argument("empty endomorphism term");
  }
  if (name == "id") {
    if (!s.at_end()) throw std::invalid_argument("trailing input after 'id'");
    return EndoNormalForm::identity();
  }
  if (name == "w") {
    Nat n = 1;
    if (s.consume('^')) n = s.number();
    if (!s.at_end()) throw std::invalid_argument("trailing input after power");
    return EndoNormalForm::pi_power(n);
  }
  s.expect('[');
  const Nat first = s.number();
  Nat second = 0;
  bool has_second = false;
  if (s.consume(',')) {
    second = s.number();
    has_second = true;
  }
  s.expect(']');
  if (!s.at_end()) throw std::invalid_argument("trailing input after term");

  if (name == "alpha") {
    if (!has_second) throw std::invalid_argument("alpha takes [k,p]");
    return EndoNormalForm(Alpha{first, second}, 0);
  }
  if (name == "beta") {
    if (!has_second) throw std::invalid_argument("beta takes [k,p]");
    return EndoNormalForm(Beta{first, second}, 0);
  }
  if (name == "gamma") {
    if (has_second) throw std::invalid_argument("gamma takes [k]");
    return EndoNormalForm(Gamma{first}, 0);
  }
  if (name == "delta") {
    if (has_second) throw std::invalid_argument("delta takes [k]");
    return EndoNormalForm(Delta{first}, 0);
  }
  if (name == "chi") {
    if (!has_second) throw std::invalid_argument("chi takes [s,q]");
    return EndoNormalForm::chi(first, second);
  }
  throw std::invalid_argument("unknown endomorphism '" + name + "'");
}

}  // namespace

EndoNormalForm compose(const EndoNormalForm& f, const EndoNormalForm& g) {
  return factor_impl(
      [&](const Element& x) { return apply(g, apply(f, x)); });
}

EndoNormalForm parse_endo_expression(std::string_view text) {
  std::vector<std::string_view> terms;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i == text.size() || text[i] == ';') {
      terms.push_back(text.substr(start, i - start));
      start = i + 1;
    }
  }
  EndoNormalForm result = parse_term(terms.front());
  for (std::size_t i = 1; i < terms.size(); ++i) {
    result = compose(result, parse_term(terms[i]));
  }
  return result;
}

std::string format_part(const MonoidPart& part) {
  return std::visit(
      [](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Alpha>) {
          return "alpha[" + std::to_string(v.k) + "," + std::to_string(v.p) + "]";
        } else if constexpr (std::is_same_v<T, Beta>) {
          return "beta[" + std::to_string(v.k) + "," + std::to_string(v.p) + "]";
        } else if constexpr (std::is_same_v<T, Gamma>) {
          return "gamma[" + std::to_string(v.k) + "]";
        } else if constexpr (std::is_same_v<T, Delta>) {
          return "delta[" + std::to_string(v.k) + "]";
        } else {
          return "chi[0,0]";
        }
      },
      part);
}

std::string format_endo(const EndoNormalForm& e) {
  if (std::holds_alternative<AnnUnit>(e.part())) {
    return "chi[" + std::to_string(e.power() / 2) + "," +
           std::to_string(e.power() % 2) + "]";
  }
  if (e.part() == MonoidPart(Alpha{1, 0})) {
    if (e.power() == 0) return "id";
    return "w^" + std::to_string(e.power());
  }
  std::string out = format_part(e.part());
  if (e.power() > 0) out += " ; w^" + std::to_string(e.power());
  return out;
}

}  // namespace bwf2
