#pragma once

// Laurent polynomials with prescribed support vanishing to order r at
// (v, w) = (1, 1), as kernels of integer matrices of binomial coefficients.

#include "negcurve/exact.hpp"
#include "negcurve/geometry.hpp"
#include "negcurve/laurent.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace negcurve {

/// Lexicographically sorted, duplicate-free exponent set.
using Support = std::vector<LatticePoint>;

Support make_support(std::vector<LatticePoint> points);

/// Rows (i, j) with i + j < r in jet_index order, one column per support
/// point: binom(a, i) * binom(b, j).
IntMatrix jet_matrix(const Support& support, unsigned r);

/// Support shifted so its bounding box is centred at the origin.  The kernel
/// is unchanged (multiplying by a monomial preserves vanishing order) and
/// the binomials are much smaller.
Support centred(const Support& support);

/// Nullity of the jet matrix over F_p.
std::size_t nullity_mod_p(const Support& support, unsigned r, std::uint64_t p);

/// Exact nullity in the given characteristic.
std::size_t jet_nullity(const Support& support, unsigned r, std::uint64_t characteristic);

/// Kernel basis as polynomials supported on `support` (first nonzero
/// coefficient, in support order, equal to 1).
std::vector<LaurentPoly> jet_kernel(const Support& support, unsigned r, std::uint64_t characteristic);

struct Prefilter {
  std::uint64_t primes[2] = {0, 0};
  std::size_t nullities[2] = {0, 0};
  bool passes() const { return nullities[0] > 0 && nullities[1] > 0; }
};

/// Draws a random prime in [2^29, 2^30).
std::uint64_t random_prime_30(std::mt19937_64& rng);

/// Nullities modulo two distinct random 30-bit primes.  Each is an upper
/// bound for the rational nullity.
Prefilter modular_prefilter(const Support& support, unsigned r, std::mt19937_64& rng);

/// dim of the degree-d piece of the r-th symbolic power:
/// |dP cap Z^2| - rank(jet matrix).  r = 0 gives |dP cap Z^2|.
template <typename T>
std::size_t symbolic_dim(const Polygon<T>& p, std::int64_t d, unsigned r, std::uint64_t characteristic);

/// Support minus the points on the line through `p` and `q`; requires the
/// line to meet the support in exactly n points.
Support lemma_eu_reduce(const Support& support, const LatticePoint& p, const LatticePoint& q, std::size_t n);

struct EhrhartData {
  Rational quadratic;  ///< area
  Rational linear;     ///< B / 2
  Rational constant;   ///< 1

  Rational operator()(std::int64_t n) const { return quadratic * n * n + linear * n + constant; }
};

EhrhartData ehrhart_polynomial(const IntegralPolygon& p);

/// Numerator f of sum_n L(n) s^n = f(s) / (1 - s)^3 from direct counts of
/// nP for n <= truncation; throws if the truncated product has a tail.
std::vector<Integer> hilbert_numerator(const IntegralPolygon& p, std::int64_t truncation);

}  // namespace negcurve
