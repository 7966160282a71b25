#pragma once

// Exact scalars and exact linear algebra.
//
// Everything in the library is computed over Q or a prime field F_p; there
// is no floating point anywhere.  Dense matrices are Eigen matrices whose
// scalar is one of Integer, Rational or a residue stored as std::uint64_t.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>
#include <Eigen/Dense>

#include <compare>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace negcurve {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;

template <typename T>
using Mat = Eigen::Matrix<T, Eigen::Dynamic, Eigen::Dynamic>;
template <typename T>
using Vec = Eigen::Matrix<T, Eigen::Dynamic, 1>;

using IntMatrix = Mat<Integer>;
using ResidueMatrix = Mat<std::uint64_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class CharacteristicMismatch : public Error {
 public:
  using Error::Error;
};

// ---------------------------------------------------------------------------
// Integer helpers

Integer floor_div(const Integer& a, const Integer& b);
Integer ceil_div(const Integer& a, const Integer& b);
Integer floor(const Rational& q);
Integer ceil(const Rational& q);
std::int64_t to_int64(const Integer& z);
Integer gcd(const Integer& a, const Integer& b);

/// Extended Euclid: returns g = gcd(a, b) >= 0 and sets x, y with a*x + b*y = g.
std::int64_t ext_gcd(std::int64_t a, std::int64_t b, std::int64_t& x, std::int64_t& y);

/// n(n-1)...(n-k+1)/k! for any integer n, including negative n.
Integer binomial(const Integer& n, unsigned k);
Integer binomial(std::int64_t n, unsigned k);

/// Parses "a", "-a" or "a/b".
Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// ---------------------------------------------------------------------------
// Prime fields.  Moduli are restricted to p < 2^32 so products fit a uint64.

bool is_prime(std::uint64_t n);
std::uint64_t next_prime(std::uint64_t n);

inline std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; }
inline std::uint64_t add_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  const std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}
inline std::uint64_t sub_mod(std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a >= b ? a - b : a + p - b; }
std::uint64_t pow_mod(std::uint64_t a, std::uint64_t e, std::uint64_t p);
std::uint64_t inv_mod(std::uint64_t a, std::uint64_t p);

/// Residue of an integer in [0, p).
std::uint64_t reduce(const Integer& z, std::uint64_t p);
/// Residue of a rational whose denominator is prime to p.
std::uint64_t reduce(const Rational& q, std::uint64_t p);

void check_characteristic(std::uint64_t characteristic);

/// Element of Q (characteristic 0) or of F_p.  Residues are held as
/// integer-valued rationals in [0, p) so both kinds share one payload.
class Scalar {
 public:
  Scalar() = default;
  Scalar(Rational value, std::uint64_t characteristic);
  static Scalar from_int(std::int64_t v, std::uint64_t characteristic) { return Scalar(Rational(v), characteristic); }

  std::uint64_t characteristic() const { return char_; }
  const Rational& value() const { return value_; }
  std::uint64_t residue() const;
  bool is_zero() const { return value_ == 0; }

  Scalar operator+(const Scalar& o) const;
  Scalar operator-(const Scalar& o) const;
  Scalar operator*(const Scalar& o) const;
  Scalar operator/(const Scalar& o) const;
  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o) { return *this = *this + o; }
  Scalar& operator-=(const Scalar& o) { return *this = *this - o; }
  Scalar& operator*=(const Scalar& o) { return *this = *this * o; }
  Scalar inverse() const;

  bool operator==(const Scalar& o) const { return char_ == o.char_ && value_ == o.value_; }
  /// Total order used for canonical forms: by numeric value, residues as 0..p-1.
  std::strong_ordering operator<=>(const Scalar& o) const;

  std::string str() const { return to_string(value_); }

 private:
  void require_same(const Scalar& o) const;
  Rational value_ = 0;
  std::uint64_t char_ = 0;
};

// ---------------------------------------------------------------------------
// Linear algebra

/// Reduces every entry of an integer matrix into [0, p).
ResidueMatrix reduce_mod_p(const IntMatrix& m, std::uint64_t p);

/// Rank over F_p (m must already be reduced).
std::size_t rank_mod_p(ResidueMatrix m, std::uint64_t p);
std::size_t rank_mod_p(const IntMatrix& m, std::uint64_t p);

/// Right kernel over F_p.  Each basis vector has first nonzero entry 1.
std::vector<Vec<std::uint64_t>> nullspace_mod_p(ResidueMatrix m, std::uint64_t p);

/// Right kernel over Q by fraction-free (Bareiss) elimination.  Pivots are
/// the first nonzero entry scanning columns left to right, rows top to
/// bottom, so the basis is reproducible.  Each basis vector is scaled so its
/// first nonzero entry is 1.
std::vector<Vec<Rational>> nullspace(const IntMatrix& m);
std::vector<Vec<Rational>> nullspace(const Mat<Rational>& m);
std::size_t rank(const IntMatrix& m);

/// Kernel of an integer matrix read in characteristic 0 or p.
std::vector<std::vector<Scalar>> nullspace(const IntMatrix& m, std::uint64_t characteristic);

struct SmithForm {
  IntMatrix diagonal;               ///< left * input * right
  IntMatrix left;                   ///< unimodular, rows x rows
  IntMatrix right;                  ///< unimodular, cols x cols
  std::vector<Integer> factors;     ///< nonzero diagonal entries d1 | d2 | ...
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace negcurve
