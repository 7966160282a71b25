#include "negcurve/exact.hpp"

#include <algorithm>
#include <limits>
#include <utility>

namespace negcurve {

namespace {

using Index = Eigen::Index;

void divexact_inplace(Integer& x, const Integer& d) {
  mpz_divexact(x.backend().data(), x.backend().data(), d.backend().data());
}

}  // namespace

Integer floor_div(const Integer& a, const Integer& b) {
  if (b == 0) throw PreconditionError("floor_div: division by zero");
  Integer q;
  mpz_fdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

Integer ceil_div(const Integer& a, const Integer& b) {
  if (b == 0) throw PreconditionError("ceil_div: division by zero");
  Integer q;
  mpz_cdiv_q(q.backend().data(), a.backend().data(), b.backend().data());
  return q;
}

Integer floor(const Rational& q) { return floor_div(numerator(q), denominator(q)); }
Integer ceil(const Rational& q) { return ceil_div(numerator(q), denominator(q)); }

std::int64_t to_int64(const Integer& z) {
  if (z > std::numeric_limits<std::int64_t>::max() || z < std::numeric_limits<std::int64_t>::min())
    throw Error("integer does not fit in 64 bits: " + z.str());
  return z.convert_to<std::int64_t>();
}

Integer gcd(const Integer& a, const Integer& b) {
  Integer g;
  mpz_gcd(g.backend().data(), a.backend().data(), b.backend().data());
  return g;
}

std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    std::tie(old_r, r) = std::pair{r, old_r - q * r};
    std::tie(old_s, s) = std::pair{s, old_s - q * s};
    std::tie(old_t, t) = std::pair{t, old_t - q * t};
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  x = old_s;
  y = old_t;
  return old_r;
}

Integer binomial(const Integer& n, unsigned k) {
  Integer result = 1;
  for (unsigned i = 0; i < k; ++i) {
    result *= n - i;
    divexact_inplace(result, Integer(i + 1));
  }
  return result;
}

Integer binomial(std::int64_t n, unsigned k) { return binomial(Integer(n), k); }

Rational parse_rational(const std::string& text) {
  std::string s;
  for (char ch : text)
    if (ch != ' ' && ch != '\t') s.push_back(ch);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  if (s.empty()) throw Error("empty number");
  const auto valid_int = [](const std::string& t) {
    std::size_t i = (!t.empty() && t[0] == '-') ? 1 : 0;
    if (i >= t.size()) return false;
    return std::all_of(t.begin() + static_cast<long>(i), t.end(), [](char c) { return c >= '0' && c <= '9'; });
  };
  const auto slash = s.find('/');
  if (slash == std::string::npos) {
    if (!valid_int(s)) throw Error("malformed number '" + text + "'");
    return Rational(Integer(s));
  }
  const std::string num = s.substr(0, slash), den = s.substr(slash + 1);
  if (!valid_int(num) || !valid_int(den)) throw Error("malformed number '" + text + "'");
  Integer d(den);
  if (d == 0) throw Error("zero denominator in '" + text + "'");
  return Rational(Integer(num), d);
}

std::string to_string(const Rational& q) { return q.str(); }

// ---------------------------------------------------------------------------

namespace {

std::uint64_t mulmod_wide(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod_wide(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod_wide(r, a, m);
    a = mulmod_wide(a, a, m);
    e >>= 1;
  }
  return r;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod_wide(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod_wide(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t next_prime(std::uint64_t n) {
  while (!is_prime(n)) ++n;
  return n;
}

std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p) { return powmod_wide(a, e, p); }

std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error("inverse of zero modulo " + std::to_string(p));
  return powmod_wide(a, p - 2, p);
}

std::uint64_t reduce(const Integer& z, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.backend().data(), z.backend().data(), p);
  return r.convert_to<std::uint64_t>();
}

std::uint64_t reduce(const Rational& q, std::uint64_t p) {
  const std::uint64_t den = reduce(denominator(q), p);
  if (den == 0) throw CharacteristicMismatch("coefficient " + q.str() + " is not defined modulo " + std::to_string(p));
  return mul_mod(reduce(numerator(q), p), inv_mod(den, p), p);
}

void check_characteristic(std::uint64_t characteristic) {
  if (characteristic == 0) return;
  if (characteristic >= (1ULL << 32) || !is_prime(characteristic))
    throw PreconditionError("characteristic must be 0 or a prime below 2^32, got " + std::to_string(characteristic));
}

// ---------------------------------------------------------------------------
// Scalar

Scalar::Scalar(Rational value, std::uint64_t characteristic) : char_(characteristic) {
  if (characteristic == 0) {
    value_ = std::move(value);
  } else {
    value_ = Rational(reduce(value, characteristic));
  }
}

std::uint64_t Scalar::residue() const {
  if (char_ == 0) throw Error("residue() requested for a characteristic-0 scalar");
  return numerator(value_).convert_to<std::uint64_t>();
}

void Scalar::require_same(const Scalar& o) const {
  if (char_ != o.char_)
    throw CharacteristicMismatch("cannot combine scalars of characteristic " + std::to_string(char_) + " and " +
                                 std::to_string(o.char_));
}

Scalar Scalar::operator+(const Scalar& o) const {
  require_same(o);
  if (char_ == 0) return Scalar(value_ + o.value_, 0);
  return Scalar(Rational(add_mod(residue(), o.residue(), char_)), char_);
}

Scalar Scalar::operator-(const Scalar& o) const {
  require_same(o);
  if (char_ == 0) return Scalar(value_ - o.value_, 0);
  return Scalar(Rational(sub_mod(residue(), o.residue(), char_)), char_);
}

Scalar Scalar::operator*(const Scalar& o) const {
  require_same(o);
  if (char_ == 0) return Scalar(value_ * o.value_, 0);
  return Scalar(Rational(mul_mod(residue(), o.residue(), char_)), char_);
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw Error("division by zero scalar");
  if (char_ == 0) return Scalar(1 / value_, 0);
  return Scalar(Rational(inv_mod(residue(), char_)), char_);
}

Scalar Scalar::operator/(const Scalar& o) const {
  require_same(o);
  return *this * o.inverse();
}

Scalar Scalar::operator-() const {
  if (char_ == 0) return Scalar(-value_, 0);
  return Scalar(Rational(sub_mod(0, residue(), char_)), char_);
}

std::strong_ordering Scalar::operator<=>(const Scalar& o) const {
  if (char_ != o.char_) return char_ <=> o.char_;
  if (value_ < o.value_) return std::strong_ordering::less;
  if (value_ > o.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

// ---------------------------------------------------------------------------
// Modular elimination

ResidueMatrix reduce_mod_p(const IntMatrix& m, std::uint64_t p) {
  ResidueMatrix r(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i)
    for (Index j = 0; j < m.cols(); ++j) r(i, j) = reduce(m(i, j), p);
  return r;
}

namespace {

/// In-place reduced row echelon form over F_p; returns the pivot columns.
std::vector<Index> rref_mod_p(ResidueMatrix& m, std::uint64_t p) {
  std::vector<Index> pivots;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index r = row;
    while (r < m.rows() && m(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != row) m.row(r).swap(m.row(row));
    const std::uint64_t inv = inv_mod(m(row, col), p);
    for (Index j = col; j < m.cols(); ++j) m(row, j) = mul_mod(m(row, j), inv, p);
    for (Index i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const std::uint64_t f = m(i, col);
      for (Index j = col; j < m.cols(); ++j) {
        if (m(row, j) != 0) m(i, j) = sub_mod(m(i, j), mul_mod(f, m(row, j), p), p);
      }
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank_mod_p(ResidueMatrix m, std::uint64_t p) { return rref_mod_p(m, p).size(); }

std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p) { return rank_mod_p(reduce_mod_p(m, p), p); }

std::vector<Vec<std::uint64_t>> nullspace_mod_p(ResidueMatrix m, std::uint64_t p) {
  const auto pivots = rref_mod_p(m, p);
  std::vector<bool> is_pivot(static_cast<std::size_t>(m.cols()), false);
  for (Index c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;
  std::vector<Vec<std::uint64_t>> basis;
  for (Index f = 0; f < m.cols(); ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<std::uint64_t> x = Vec<std::uint64_t>::Zero(m.cols());
    x(f) = 1;
    for (std::size_t k = 0; k < pivots.size(); ++k) x(pivots[k]) = sub_mod(0, m(static_cast<Index>(k), f), p);
    Index first = 0;
    while (x(first) == 0) ++first;
    const std::uint64_t inv = inv_mod(x(first), p);
    for (Index j = 0; j < x.size(); ++j) x(j) = mul_mod(x(j), inv, p);
    basis.push_back(std::move(x));
  }
  return basis;
}

// ---------------------------------------------------------------------------
// Fraction-free elimination over Z

namespace {

struct Echelon {
  IntMatrix m;
  std::vector<Index> pivots;
};

Echelon bareiss(IntMatrix m) {
  std::vector<Index> pivots;
  Integer prev = 1;
  Integer tmp;
  Index row = 0;
  for (Index col = 0; col < m.cols() && row < m.rows(); ++col) {
    Index r = row;
    while (r < m.rows() && m(r, col) == 0) ++r;
    if (r == m.rows()) continue;
    if (r != row) m.row(r).swap(m.row(row));
    const Integer pivot = m(row, col);
    for (Index i = row + 1; i < m.rows(); ++i) {
      const Integer lead = m(i, col);
      for (Index j = col + 1; j < m.cols(); ++j) {
        Integer& e = m(i, j);
        e *= pivot;
        if (lead != 0 && m(row, j) != 0) {
          tmp = lead * m(row, j);
          e -= tmp;
        }
        if (prev != 1) divexact_inplace(e, prev);
      }
      m(i, col) = 0;
    }
    prev = pivot;
    pivots.push_back(col);
    ++row;
  }
  return {std::move(m), std::move(pivots)};
}

IntMatrix clear_denominators(const Mat<Rational>& m) {
  IntMatrix out(m.rows(), m.cols());
  for (Index i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (Index j = 0; j < m.cols(); ++j) {
      const Integer& d = denominator(m(i, j));
      mpz_lcm(l.backend().data(), l.backend().data(), d.backend().data());
    }
    for (Index j = 0; j < m.cols(); ++j) out(i, j) = numerator(m(i, j)) * (l / denominator(m(i, j)));
  }
  return out;
}

}  // namespace

std::size_t rank(const IntMatrix& m) { return bareiss(m).pivots.size(); }

std::vector<Vec<Rational>> nullspace(const IntMatrix& input) {
  const Echelon e = bareiss(input);
  const Index cols = input.cols();
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
  for (Index c : e.pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<Vec<Rational>> basis;
  for (Index f = 0; f < cols; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    Vec<Rational> x = Vec<Rational>::Zero(cols);
    x(f) = 1;
    for (Index k = static_cast<Index>(e.pivots.size()) - 1; k >= 0; --k) {
      const Index pc = e.pivots[static_cast<std::size_t>(k)];
      Rational s = 0;
      for (Index j = pc + 1; j < cols; ++j)
        if (e.m(k, j) != 0 && x(j) != 0) s += Rational(e.m(k, j)) * x(j);
      x(pc) = -s / Rational(e.m(k, pc));
    }
    Index first = 0;
    while (x(first) == 0) ++first;
    const Rational lead = x(first);
    for (Index j = 0; j < cols; ++j) x(j) /= lead;
    basis.push_back(std::move(x));
  }
  return basis;
}

std::vector<Vec<Rational>> nullspace(const Mat<Rational>& m) { return nullspace(clear_denominators(m)); }

std::vector<std::vector<Scalar>> nullspace(const IntMatrix& m, std::uint64_t characteristic) {
  check_characteristic(characteristic);
  std::vector<std::vector<Scalar>> out;
  if (characteristic == 0) {
    for (const auto& v : nullspace(m)) {
      std::vector<Scalar> s;
      s.reserve(static_cast<std::size_t>(v.size()));
      for (Index j = 0; j < v.size(); ++j) s.emplace_back(v(j), 0);
      out.push_back(std::move(s));
    }
  } else {
    for (const auto& v : nullspace_mod_p(reduce_mod_p(m, characteristic), characteristic)) {
      std::vector<Scalar> s;
      s.reserve(static_cast<std::size_t>(v.size()));
      for (Index j = 0; j < v.size(); ++j) s.emplace_back(Rational(v(j)), characteristic);
      out.push_back(std::move(s));
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// Smith normal form

SmithForm smith_normal_form(const IntMatrix& input) {
  IntMatrix a = input;
  const Index rows = a.rows(), cols = a.cols();
  IntMatrix left = IntMatrix::Identity(rows, rows);
  IntMatrix right = IntMatrix::Identity(cols, cols);

  const auto swap_rows = [&](Index i, Index j) {
    if (i == j) return;
    a.row(i).swap(a.row(j));
    left.row(i).swap(left.row(j));
  };
  const auto swap_cols = [&](Index i, Index j) {
    if (i == j) return;
    a.col(i).swap(a.col(j));
    right.col(i).swap(right.col(j));
  };
  // row_i -= q * row_t
  const auto row_axpy = [&](Index i, Index t, const Integer& q) {
    for (Index j = 0; j < cols; ++j) a(i, j) -= q * a(t, j);
    for (Index j = 0; j < rows; ++j) left(i, j) -= q * left(t, j);
  };
  const auto col_axpy = [&](Index j, Index t, const Integer& q) {
    for (Index i = 0; i < rows; ++i) a(i, j) -= q * a(i, t);
    for (Index i = 0; i < cols; ++i) right(i, j) -= q * right(i, t);
  };

  std::vector<Integer> factors;
  const Index n = std::min(rows, cols);
  for (Index t = 0; t < n; ++t) {
    for (;;) {
      // smallest nonzero |entry| in the trailing block
      Index pi = -1, pj = -1;
      for (Index i = t; i < rows; ++i)
        for (Index j = t; j < cols; ++j)
          if (a(i, j) != 0 && (pi < 0 || abs(a(i, j)) < abs(a(pi, pj)))) {
            pi = i;
            pj = j;
          }
      if (pi < 0) break;
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool clean = true;
      for (Index i = t + 1; i < rows; ++i) {
        if (a(i, t) == 0) continue;
        row_axpy(i, t, floor_div(a(i, t), a(t, t)));
        if (a(i, t) != 0) clean = false;
      }
      for (Index j = t + 1; j < cols; ++j) {
        if (a(t, j) == 0) continue;
        col_axpy(j, t, floor_div(a(t, j), a(t, t)));
        if (a(t, j) != 0) clean = false;
      }
      if (!clean) continue;
      // divisibility of the trailing block by the pivot
      Index bad = -1;
      for (Index i = t + 1; i < rows && bad < 0; ++i)
        for (Index j = t + 1; j < cols; ++j)
          if (a(i, j) % a(t, t) != 0) {
            bad = i;
            break;
          }
      if (bad < 0) break;
      row_axpy(t, bad, Integer(-1));
    }
    if (a(t, t) == 0) break;
    if (a(t, t) < 0) {
      a.row(t) *= Integer(-1);
      left.row(t) *= Integer(-1);
    }
    factors.push_back(a(t, t));
  }
  return {std::move(a), std::move(left), std::move(right), std::move(factors)};
}

}  // namespace negcurve
