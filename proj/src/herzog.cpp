#include "negcurve/herzog.hpp"

#include <algorithm>
#include <numeric>

namespace negcurve {

bool in_semigroup(std::int64_t n, std::int64_t p, std::int64_t q) {
  if (n < 0) return false;
  for (std::int64_t k = 0; k * q <= n; ++k)
    if ((n - k * q) % p == 0) return true;
  return false;
}

namespace {

/// All (x, y) >= 0 with x p + y q = n, ordered by y.
std::vector<std::pair<std::int64_t, std::int64_t>> representations(std::int64_t n, std::int64_t p, std::int64_t q) {
  std::vector<std::pair<std::int64_t, std::int64_t>> out;
  for (std::int64_t y = 0; y * q <= n; ++y)
    if ((n - y * q) % p == 0) out.emplace_back((n - y * q) / p, y);
  return out;
}

std::int64_t least_multiple_in(std::int64_t g, std::int64_t p, std::int64_t q) {
  for (std::int64_t n = 1;; ++n)
    if (in_semigroup(n * g, p, q)) return n;
}

bool try_ordering(HerzogData& h) {
  const std::int64_t a = h.a, b = h.b, c = h.c;
  h.t = least_multiple_in(b, a, c);
  h.u = least_multiple_in(c, a, b);
  for (const auto& [s2, u2] : representations(h.t * b, a, c)) {
    for (const auto& [s3, t3] : representations(h.u * c, a, b)) {
      const std::int64_t s = s2 + s3, t1 = h.t - t3, u1 = h.u - u2;
      if (t1 < 0 || u1 < 0 || s3 <= 0 || t3 <= 0) continue;
      if (s * a != t1 * b + u1 * c) continue;
      if (a != h.t * h.u - t3 * u2 || b != s2 * h.u + s3 * u2) continue;
      h.s = s;
      h.s2 = s2;
      h.s3 = s3;
      h.t1 = t1;
      h.t3 = t3;
      h.u1 = u1;
      h.u2 = u2;
      return true;
    }
  }
  return false;
}

}  // namespace

HerzogData herzog_data(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (a <= 0 || b <= 0 || c <= 0) throw PreconditionError("weights must be positive");
  if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1)
    throw PreconditionError("weights must be pairwise coprime");
  const std::array<std::int64_t, 3> in{a, b, c};
  std::array<int, 3> perm{0, 1, 2};
  do {
    HerzogData h;
    h.input = in;
    h.permutation = perm;
    h.a = in[static_cast<std::size_t>(perm[0])];
    h.b = in[static_cast<std::size_t>(perm[1])];
    h.c = in[static_cast<std::size_t>(perm[2])];
    if (!try_ordering(h)) continue;
    std::int64_t x = 0, y = 0;
    ext_gcd(h.a % h.b, h.b, x, y);
    h.i0 = ((x % h.b) + h.b) % h.b;
    h.j0 = (1 - h.i0 * h.a) / h.b;
    return h;
  } while (std::next_permutation(perm.begin(), perm.end()));
  throw Error("no ordering of the weights gives consistent presentation data");
}

std::string check_invariants(const HerzogData& h) {
  const auto fail = [](const std::string& what) { return what; };
  if (h.s != h.s2 + h.s3) return fail("s != s2 + s3");
  if (h.t != h.t1 + h.t3) return fail("t != t1 + t3");
  if (h.u != h.u1 + h.u2) return fail("u != u1 + u2");
  if (h.s * h.a != h.t1 * h.b + h.u1 * h.c) return fail("s a != t1 b + u1 c");
  if (h.t * h.b != h.s2 * h.a + h.u2 * h.c) return fail("t b != s2 a + u2 c");
  if (h.u * h.c != h.s3 * h.a + h.t3 * h.b) return fail("u c != s3 a + t3 b");
  if (h.a != h.t * h.u - h.t3 * h.u2) return fail("a != t u - t3 u2");
  if (h.b != h.s2 * h.u + h.s3 * h.u2) return fail("b != s2 u + s3 u2");
  if (h.s3 <= 0 || h.t3 <= 0 || h.u <= 0) return fail("s3, t3, u must be positive");
  if (h.i0 * h.a + h.j0 * h.b != 1) return fail("i0 a + j0 b != 1");
  if (h.i0 < 0 || (h.b > 1 && h.i0 >= h.b)) return fail("i0 out of range");
  if (!in_semigroup(h.t * h.b, h.a, h.c) || !in_semigroup(h.u * h.c, h.a, h.b)) return fail("relation not in semigroup");
  for (std::int64_t n = 1; n < h.t; ++n)
    if (in_semigroup(n * h.b, h.a, h.c)) return fail("t is not minimal");
  for (std::int64_t n = 1; n < h.u; ++n)
    if (in_semigroup(n * h.c, h.a, h.b)) return fail("u is not minimal");
  return "";
}

std::vector<HalfPlane<Rational>> triangle_halfplanes(const HerzogData& h) {
  const auto q = [](std::int64_t v) { return Rational(v); };
  return {
      {RationalPoint(q(h.s2), q(h.s3)), q(-h.i0)},
      {RationalPoint(q(-h.t), q(h.t3)), q(-h.j0)},
      {RationalPoint(q(h.u2), q(-h.u)), q(0)},
  };
}

RationalPolygon triangle(const HerzogData& h) { return halfplane_polygon(triangle_halfplanes(h)); }

std::int64_t graded_dimension(const HerzogData& h, std::int64_t d) {
  if (d < 0) throw PreconditionError("degree must be nonnegative");
  if (d == 0) return 1;
  return static_cast<std::int64_t>(lattice_points(dilate(triangle(h), d)).size());
}

std::int64_t monomial_count(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  if (d < 0) return 0;
  std::int64_t count = 0;
  for (std::int64_t k = 0; k * c <= d; ++k)
    for (std::int64_t j = 0; j * b + k * c <= d; ++j)
      if ((d - j * b - k * c) % a == 0) ++count;
  return count;
}

HerzogFan herzog_fan(const HerzogData& h) {
  HerzogFan out;
  out.raw_rays = {LatticePoint(h.s2, h.s3), LatticePoint(-h.t, h.t3), LatticePoint(h.u2, -h.u)};
  for (std::size_t i = 0; i < 3; ++i) out.divisors[i] = lattice_length(out.raw_rays[i]);
  out.fan = make_fan({out.raw_rays[0], out.raw_rays[1], out.raw_rays[2]});
  return out;
}

}  // namespace negcurve
