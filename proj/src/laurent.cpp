#include "negcurve/laurent.hpp"

#include <cctype>
#include <sstream>

namespace negcurve {

LaurentPoly::LaurentPoly(std::uint64_t characteristic) : char_(characteristic) { check_characteristic(characteristic); }

LaurentPoly LaurentPoly::monomial(const LatticePoint& exponent, const Scalar& c) {
  LaurentPoly f(c.characteristic());
  f.add_term(exponent, c);
  return f;
}

LaurentPoly LaurentPoly::constant(const Scalar& c) { return monomial(LatticePoint::Zero(), c); }

LaurentPoly LaurentPoly::from_terms(const std::vector<std::pair<LatticePoint, Rational>>& terms,
                                    std::uint64_t characteristic) {
  LaurentPoly f(characteristic);
  for (const auto& [e, c] : terms) f.add_term(e, Scalar(c, characteristic));
  return f;
}

Scalar LaurentPoly::coefficient(const LatticePoint& exponent) const {
  const auto it = terms_.find(exponent);
  return it == terms_.end() ? Scalar(0, char_) : it->second;
}

std::vector<LatticePoint> LaurentPoly::support() const {
  std::vector<LatticePoint> out;
  out.reserve(terms_.size());
  for (const auto& [e, c] : terms_) out.push_back(e);
  return out;
}

void LaurentPoly::add_term(const LatticePoint& exponent, const Scalar& c) {
  if (c.characteristic() != char_)
    throw CharacteristicMismatch("term of characteristic " + std::to_string(c.characteristic()) +
                                 " added to a polynomial of characteristic " + std::to_string(char_));
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(exponent, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly f = *this;
  for (const auto& [e, c] : o.terms_) f.add_term(e, c);
  return f;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const { return *this + (-o); }

LaurentPoly LaurentPoly::operator-() const {
  LaurentPoly f(char_);
  for (const auto& [e, c] : terms_) f.terms_.emplace(e, -c);
  return f;
}

LaurentPoly LaurentPoly::operator*(const LaurentPoly& o) const {
  if (char_ != o.char_) throw CharacteristicMismatch("product of polynomials of different characteristic");
  LaurentPoly f(char_);
  for (const auto& [e1, c1] : terms_)
    for (const auto& [e2, c2] : o.terms_) f.add_term(e1 + e2, c1 * c2);
  return f;
}

LaurentPoly LaurentPoly::scaled(const Scalar& c) const {
  LaurentPoly f(char_);
  if (c.is_zero()) return f;
  for (const auto& [e, x] : terms_) f.terms_.emplace(e, x * c);
  return f;
}

LaurentPoly LaurentPoly::pow(unsigned e) const {
  LaurentPoly result = constant(Scalar(1, char_));
  LaurentPoly base = *this;
  while (e) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e) base = base * base;
  }
  return result;
}

bool LaurentPoly::operator==(const LaurentPoly& o) const {
  if (char_ != o.char_ || terms_.size() != o.terms_.size()) return false;
  auto it = o.terms_.begin();
  for (const auto& [e, c] : terms_) {
    if (it->first != e || !(it->second == c)) return false;
    ++it;
  }
  return true;
}

LaurentPoly LaurentPoly::reduce_mod(std::uint64_t p) const {
  if (char_ == p) return *this;
  if (char_ != 0) throw CharacteristicMismatch("cannot change a positive characteristic");
  LaurentPoly f(p);
  for (const auto& [e, c] : terms_) f.add_term(e, Scalar(c.value(), p));
  return f;
}

// ---------------------------------------------------------------------------
// Text format

namespace {

class Parser {
 public:
  Parser(const std::string& text, std::uint64_t characteristic) : s_(text), char_(characteristic) {}

  LaurentPoly parse() {
    LaurentPoly f = expression();
    skip();
    if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw Error("polynomial parse error at position " + std::to_string(pos_) + ": " + msg);
  }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < s_.size() && s_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= s_.size()) return false;
    const char c = s_[pos_];
    return c == '(' || c == 'v' || c == 'w' || std::isdigit(static_cast<unsigned char>(c));
  }

  LaurentPoly expression() {
    LaurentPoly f(char_);
    bool first = true;
    for (;;) {
      bool negate = false;
      if (accept('-')) {
        negate = true;
      } else if (accept('+')) {
      } else if (!first) {
        break;
      }
      LaurentPoly t = term();
      f = negate ? f - t : f + t;
      first = false;
      skip();
      if (pos_ >= s_.size() || (s_[pos_] != '+' && s_[pos_] != '-')) break;
    }
    return f;
  }

  LaurentPoly term() {
    LaurentPoly f = factor();
    for (;;) {
      if (accept('*')) {
        f = f * factor();
      } else if (starts_factor()) {
        f = f * factor();
      } else {
        break;
      }
    }
    return f;
  }

  std::string digits() {
    skip();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return s_.substr(start, pos_ - start);
  }

  LaurentPoly factor() {
    LaurentPoly base = primary();
    if (!accept('^')) return base;
    bool negative = false;
    if (accept('-')) negative = true;
    else accept('+');
    const std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    const unsigned e = static_cast<unsigned>(std::stoul(d));
    if (!negative) return base.pow(e);
    if (base.size() != 1) fail("negative power of a non-monomial");
    const auto& [exp, c] = *base.terms().begin();
    return LaurentPoly::monomial(LatticePoint(-exp), c.inverse()).pow(e);
  }

  LaurentPoly primary() {
    skip();
    if (pos_ >= s_.size()) fail("unexpected end of input");
    const char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      LaurentPoly f = expression();
      if (!accept(')')) fail("expected ')'");
      return f;
    }
    if (c == 'v' || c == 'w') {
      ++pos_;
      return LaurentPoly::monomial(c == 'v' ? LatticePoint(1, 0) : LatticePoint(0, 1), Scalar(1, char_));
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value{Integer(digits())};
      const std::size_t save = pos_;
      if (accept('/')) {
        skip();
        if (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
          Integer den(digits());
          if (den == 0) fail("zero denominator");
          value /= Rational(den);
        } else {
          pos_ = save;
        }
      }
      return LaurentPoly::constant(Scalar(value, char_));
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  std::uint64_t char_;
  std::size_t pos_ = 0;
};

std::string monomial_text(const LatticePoint& e) {
  std::string out;
  const auto var = [&](char name, std::int64_t k) {
    if (k == 0) return;
    if (!out.empty()) out += "*";
    out += name;
    if (k != 1) out += "^" + std::to_string(k);
  };
  var('v', e.x());
  var('w', e.y());
  return out;
}

}  // namespace

LaurentPoly parse_laurent(const std::string& text, std::uint64_t characteristic) {
  check_characteristic(characteristic);
  return Parser(text, characteristic).parse();
}

std::string to_text(const LaurentPoly& f) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    Rational q = c.value();
    const bool negative = f.characteristic() == 0 && q < 0;
    if (negative) q = -q;
    if (first) {
      if (negative) os << "-";
    } else {
      os << (negative ? " - " : " + ");
    }
    first = false;
    const std::string mono = monomial_text(e);
    if (mono.empty()) {
      os << q.str();
    } else if (q == 1) {
      os << mono;
    } else if (denominator(q) == 1) {
      os << q.str() << "*" << mono;
    } else {
      os << "(" << q.str() << ")*" << mono;
    }
  }
  return os.str();
}

IntegralPolygon newton_polygon(const LaurentPoly& f) {
  if (f.is_zero()) throw PreconditionError("Newton polygon of the zero polynomial");
  return convex_hull(f.support());
}

LaurentPoly unit_multiply(const LaurentPoly& f, const Scalar& c, const LatticePoint& shift) {
  if (c.is_zero()) throw PreconditionError("unit multiplier must be nonzero");
  return f * LaurentPoly::monomial(shift, c);
}

LaurentPoly apply_gl2z(const LaurentPoly& f, const Matrix2i& m) {
  const std::int64_t det = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  if (det != 1 && det != -1) throw PreconditionError("exponent map must have determinant +-1");
  UnimodularAffineMap map;
  map.matrix = m;
  return apply_affine(f, map);
}

LaurentPoly apply_affine(const LaurentPoly& f, const UnimodularAffineMap& map) {
  LaurentPoly g(f.characteristic());
  for (const auto& [e, c] : f.terms()) g.add_term(map(e), c);
  return g;
}

std::size_t jet_index(unsigned i, unsigned j) {
  const std::size_t k = i + j;
  return k * (k + 1) / 2 + i;
}

bool JetVector::vanishes() const {
  for (const auto& e : entries)
    if (!e.is_zero()) return false;
  return true;
}

namespace {

/// binom(a, i) for i = 0..n-1.
std::vector<Integer> binomial_row(std::int64_t a, unsigned n) {
  std::vector<Integer> out(n);
  Integer cur = 1;
  for (unsigned i = 0; i < n; ++i) {
    out[i] = cur;
    cur *= Integer(a) - i;
    cur /= Integer(i + 1);
  }
  return out;
}

Scalar jet_entry(const LaurentPoly& f, unsigned i, unsigned j, std::map<std::int64_t, std::vector<Integer>>& rows_a,
                 std::map<std::int64_t, std::vector<Integer>>& rows_b, unsigned len) {
  const std::uint64_t p = f.characteristic();
  if (p == 0) {
    Rational sum = 0;
    for (const auto& [e, c] : f.terms()) {
      auto& ra = rows_a.try_emplace(e.x(), binomial_row(e.x(), len)).first->second;
      auto& rb = rows_b.try_emplace(e.y(), binomial_row(e.y(), len)).first->second;
      sum += c.value() * Rational(ra[i] * rb[j]);
    }
    return Scalar(sum, 0);
  }
  std::uint64_t sum = 0;
  for (const auto& [e, c] : f.terms()) {
    auto& ra = rows_a.try_emplace(e.x(), binomial_row(e.x(), len)).first->second;
    auto& rb = rows_b.try_emplace(e.y(), binomial_row(e.y(), len)).first->second;
    sum = add_mod(sum, mul_mod(c.residue(), mul_mod(reduce(ra[i], p), reduce(rb[j], p), p), p), p);
  }
  return Scalar(Rational(sum), p);
}

}  // namespace

JetVector jet(const LaurentPoly& f, unsigned r) {
  if (r < 1) throw PreconditionError("jet order must be at least 1");
  JetVector out;
  out.r = r;
  out.entries.resize(static_cast<std::size_t>(r) * (r + 1) / 2);
  std::map<std::int64_t, std::vector<Integer>> ra, rb;
  for (unsigned k = 0; k < r; ++k)
    for (unsigned i = 0; i <= k; ++i) out.entries[jet_index(i, k - i)] = jet_entry(f, i, k - i, ra, rb, r);
  return out;
}

unsigned multiplicity_at_one(const LaurentPoly& f) {
  if (f.is_zero()) throw PreconditionError("multiplicity of the zero polynomial");
  for (unsigned start = 0, len = 8;; start = len, len *= 2) {
    std::map<std::int64_t, std::vector<Integer>> ra, rb;
    for (unsigned k = start; k < len; ++k)
      for (unsigned i = 0; i <= k; ++i)
        if (!jet_entry(f, i, k - i, ra, rb, len).is_zero()) return k;
  }
}

LaurentPoly log_derivative_v(const LaurentPoly& f) {
  LaurentPoly g(f.characteristic());
  for (const auto& [e, c] : f.terms()) g.add_term(e, c * Scalar(Rational(e.x()), f.characteristic()));
  return g;
}

LaurentPoly normalized(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  const Scalar lead = f.terms().begin()->second;
  return f.scaled(-lead.inverse());
}

}  // namespace negcurve
