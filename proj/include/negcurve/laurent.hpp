#pragma once

// Laurent polynomials in v, w over Q or F_p.
//
// Exponent convention for GL(2,Z): a row vector (a, b) is sent to (a, b) * M,
// i.e. v -> v^{m00} w^{m01}, w -> v^{m10} w^{m11}.

#include "negcurve/exact.hpp"
#include "negcurve/geometry.hpp"

#include <map>
#include <string>
#include <vector>

namespace negcurve {

using Matrix2i = Eigen::Matrix<std::int64_t, 2, 2>;

class LaurentPoly {
 public:
  using Terms = std::map<LatticePoint, Scalar, LexLess>;

  explicit LaurentPoly(std::uint64_t characteristic = 0);

  static LaurentPoly monomial(const LatticePoint& exponent, const Scalar& c);
  static LaurentPoly constant(const Scalar& c);
  static LaurentPoly from_terms(const std::vector<std::pair<LatticePoint, Rational>>& terms, std::uint64_t characteristic);

  std::uint64_t characteristic() const { return char_; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  /// Zero if the exponent is not in the support.
  Scalar coefficient(const LatticePoint& exponent) const;
  /// Support in lexicographic order.
  std::vector<LatticePoint> support() const;

  void add_term(const LatticePoint& exponent, const Scalar& c);

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  LaurentPoly operator*(const LaurentPoly& o) const;
  LaurentPoly operator-() const;
  LaurentPoly scaled(const Scalar& c) const;
  LaurentPoly pow(unsigned e) const;
  bool operator==(const LaurentPoly& o) const;

  /// Image in characteristic p; throws CharacteristicMismatch when a
  /// denominator vanishes mod p.
  LaurentPoly reduce_mod(std::uint64_t p) const;

  Scalar scalar(const Rational& q) const { return Scalar(q, char_); }

 private:
  Terms terms_;
  std::uint64_t char_ = 0;
};

/// Grammar: sums of products of integer or n/m literals, v, w, parentheses
/// and powers; negative powers are allowed on monomials.
LaurentPoly parse_laurent(const std::string& text, std::uint64_t characteristic);
std::string to_text(const LaurentPoly& f);

/// Newton polygon; throws PreconditionError for the zero polynomial.
IntegralPolygon newton_polygon(const LaurentPoly& f);

/// c * v^a w^b * f
LaurentPoly unit_multiply(const LaurentPoly& f, const Scalar& c, const LatticePoint& shift);
LaurentPoly apply_gl2z(const LaurentPoly& f, const Matrix2i& m);
LaurentPoly apply_affine(const LaurentPoly& f, const UnimodularAffineMap& map);

/// Index of the jet entry (i, j) with i + j < r: grouped by total degree,
/// then by i ascending.
std::size_t jet_index(unsigned i, unsigned j);

struct JetVector {
  unsigned r = 0;
  std::vector<Scalar> entries;  ///< r(r+1)/2 values ordered by jet_index

  const Scalar& at(unsigned i, unsigned j) const { return entries[jet_index(i, j)]; }
  bool vanishes() const;
};

/// Entry (i, j) is sum_{(a,b)} c_{a,b} binom(a, i) binom(b, j): the
/// coefficient of s^i t^j after v = 1 + s, w = 1 + t.
JetVector jet(const LaurentPoly& f, unsigned r);

/// Largest r with f in (v-1, w-1)^r.
unsigned multiplicity_at_one(const LaurentPoly& f);

/// v * df/dv
LaurentPoly log_derivative_v(const LaurentPoly& f);

/// Scales f so its lexicographically least support point has coefficient -1.
LaurentPoly normalized(const LaurentPoly& f);

}  // namespace negcurve
