#pragma once

// Presentation data of the monomial curve (t^a, t^b, t^c) and the rational
// triangle whose Ehrhart ring is its coordinate ring.

#include "negcurve/geometry.hpp"
#include "negcurve/toric.hpp"

#include <array>
#include <cstdint>

namespace negcurve {

struct HerzogData {
  std::int64_t a = 0, b = 0, c = 0;  ///< after the permutation
  std::array<int, 3> permutation{0, 1, 2};  ///< (a, b, c) = input[perm[0]], input[perm[1]], input[perm[2]]
  std::array<std::int64_t, 3> input{0, 0, 0};
  std::int64_t s = 0, s2 = 0, s3 = 0;
  std::int64_t t = 0, t1 = 0, t3 = 0;
  std::int64_t u = 0, u1 = 0, u2 = 0;
  std::int64_t i0 = 0, j0 = 0;  ///< i0 a + j0 b = 1, 0 <= i0 < b

  /// True when some relation has a single-variable right-hand side.
  bool complete_intersection() const { return s2 == 0 || s3 == 0 || t1 == 0 || t3 == 0 || u1 == 0 || u2 == 0; }
};

/// Membership of n in the numerical semigroup generated by p and q.
bool in_semigroup(std::int64_t n, std::int64_t p, std::int64_t q);

/// Throws PreconditionError unless a, b, c are positive and pairwise coprime.
HerzogData herzog_data(std::int64_t a, std::int64_t b, std::int64_t c);

/// Checks every identity between the data; returns the first failure or "".
std::string check_invariants(const HerzogData& h);

/// s2 x + s3 y + i0 >= 0, -t x + t3 y + j0 >= 0, u2 x - u y >= 0.
std::vector<HalfPlane<Rational>> triangle_halfplanes(const HerzogData& h);
RationalPolygon triangle(const HerzogData& h);

/// |d P cap Z^2|
std::int64_t graded_dimension(const HerzogData& h, std::int64_t d);

/// Number of (i, j, k) >= 0 with i a + j b + k c = d.
std::int64_t monomial_count(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d);

struct HerzogFan {
  Fan2D fan;
  std::array<LatticePoint, 3> raw_rays;  ///< (s2,s3), (-t,t3), (u2,-u)
  std::array<std::int64_t, 3> divisors;  ///< gcd removed from each raw ray
};

HerzogFan herzog_fan(const HerzogData& h);

}  // namespace negcurve
