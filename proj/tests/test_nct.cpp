#include "negcurve/nct.hpp"
#include "negcurve/symbolic_power.hpp"
#include "negcurve/toric.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace negcurve;

namespace {

LatticePoint P(std::int64_t a, std::int64_t b) { return LatticePoint(a, b); }

const char* kPhi3Prime = "-1 + 5*v*w - 3*v^2*w + v^3*w - 2*v*w^2 - v^2*w^2 + v^2*w^3";

bool check_passed(const NctReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c.passed;
  return false;
}

// Accepted reports must carry Pick's identity and the counting bounds.
void check_accepted_shape(const NctReport& rep) {
  REQUIRE(rep.accepted());
  const std::int64_t r = rep.r;
  for (const auto& c : rep.checks) CHECK(c.passed);
  CHECK(rep.multiplicity == static_cast<unsigned>(r));
  CHECK(rep.kernel_dimension == 1);
  CHECK(rep.lattice_count <= r * (r + 1) / 2 + 1);
  if (rep.polygon.dimension() == 2) CHECK(rep.area2 == Rational(rep.boundary + 2 * rep.interior - 2));
}

}  // namespace

TEST_CASE("the first members of the recursion") {
  CHECK(phi_family(1) == parse_laurent("v*w - 1", 0));
  CHECK(phi_family(2) == parse_laurent("-v^2*w - v*w^2 + 3*v*w - 1", 0));
  CHECK(phi_family(3) == parse_laurent("-1 + 6*v*w - 4*v^2*w + v^3*w - 4*v*w^2 + v^2*w^2 + v*w^3", 0));
  const auto phi4 = phi_family(4);
  CHECK(multiplicity_at_one(phi4) == 4);
  CHECK(area2(newton_polygon(phi4)) < 16);
  const auto rep = is_nct(phi4, 4);
  for (const auto& c : rep.checks)
    if (c.name != "irreducible") CHECK(c.passed);
}

TEST_CASE("catalogued ncts are accepted") {
  const auto r1 = is_nct(phi_family(1), 1);
  check_accepted_shape(r1);
  CHECK(r1.area2 == 0);

  const auto r2 = is_nct(phi_family(2), 2);
  check_accepted_shape(r2);
  CHECK(r2.area2 == 3);

  check_accepted_shape(is_nct(phi_family(3), 3));
  check_accepted_shape(is_nct(parse_laurent(kPhi3Prime, 0), 3));

  const auto r2p = is_nct(parse_laurent(kPhi3Prime, 2), 3);
  check_accepted_shape(r2p);
  CHECK(r2p.area2 == 7);
  CHECK(r2p.polygon.vertices == std::vector<LatticePoint>{P(0, 0), P(3, 1), P(2, 3)});
}

TEST_CASE("non-ncts are rejected") {
  const auto sq = is_nct(parse_laurent("(v - 1)^2", 0), 2);
  CHECK(sq.status == NctStatus::Rejected);
  CHECK(sq.certificate.verdict == Verdict::Factored);
  CHECK_FALSE(check_passed(sq, "irreducible"));

  // Right multiplicity but too large a polygon.
  CHECK(is_nct(phi_family(2), 1).status == NctStatus::Rejected);
  CHECK(is_nct(phi_family(2), 3).status == NctStatus::Rejected);
  CHECK_THROWS_AS(is_nct(LaurentPoly(0), 1), PreconditionError);
}

TEST_CASE("the tetragon family") {
  const auto g3 = ggk_prime_family(3);
  CHECK(canonical_form(g3, 3) == canonical_form(parse_laurent(kPhi3Prime, 0), 3));

  CHECK(ggk_tetragon(4).vertices == std::vector<LatticePoint>{P(-1, -1), P(3, 0), P(2, 2), P(1, 3)});
  CHECK(lattice_counts(ggk_tetragon(4)).total == 11);

  const auto c5 = lattice_counts(ggk_tetragon(5));
  CHECK(c5.boundary == 6);
  CHECK(c5.interior == 10);

  for (unsigned r = 3; r <= 8; ++r) {
    INFO("r=" << r);
    const auto f = ggk_prime_family(r);
    CHECK(newton_polygon(f) == ggk_tetragon(r));
    CHECK(f.coefficient(P(-1, -1)) == Scalar::from_int(-1, 0));
    CHECK(jet_nullity(make_support(lattice_points(ggk_tetragon(r))), r, 0) == 1);
  }
  CHECK_THROWS_AS(ggk_prime_family(2), Error);
}

TEST_CASE("canonical forms") {
  CHECK(canonical_form(parse_laurent("v*w - 1", 0), 1) == canonical_form(parse_laurent("v - 1", 0), 1));
  const auto c2 = canonical_form(phi_family(2), 2);
  CHECK(canonical_form(c2, 2) == c2);
  CHECK(c2.coefficient(P(0, 0)) == Scalar::from_int(-1, 0));
  CHECK_THROWS_AS(canonical_form(parse_laurent("v - 1", 0), 2), Error);
}

TEST_CASE("canonical forms ignore units and substitutions", "[property]") {
  std::mt19937_64 rng(71);
  std::uniform_int_distribution<int> shift(-4, 4), coef(1, 9);
  const std::vector<std::pair<LaurentPoly, std::int64_t>> ncts{
      {phi_family(2), 2}, {phi_family(3), 3}, {parse_laurent(kPhi3Prime, 0), 3}, {ggk_prime_family(4), 4},
      {parse_laurent(kPhi3Prime, 2), 3}};
  for (const auto& [f, r] : ncts) {
    const auto base = canonical_form(f, r);
    const auto rep = is_nct(f, r);
    for (int trial = 0; trial < 12; ++trial) {
      const std::uint64_t ch = f.characteristic();
      const Scalar c = Scalar::from_int(ch == 2 ? 1 : (trial % 2 ? -coef(rng) : coef(rng)), ch);
      const auto g = apply_gl2z(unit_multiply(f, c, P(shift(rng), shift(rng))), oracle::random_unimodular(rng));
      CHECK(canonical_form(g, r) == base);
      const auto other = is_nct(g, r);
      CHECK(other.status == rep.status);
      CHECK(other.area2 == rep.area2);
      CHECK(other.boundary == rep.boundary);
      CHECK(other.interior == rep.interior);
    }
  }
}

TEST_CASE("candidate polygons respect the pruning bounds") {
  for (std::int64_t r = 1; r <= 3; ++r) {
    for (const auto& p : candidate_polygons(r)) {
      CHECK(area2(p) < Rational(r * r));
      CHECK(lattice_counts(p).total <= r * (r + 1) / 2 + 1);
      if (p.dimension() == 2) {
        CHECK(max_collinear(p) <= r);
        for (const auto& v : p.vertices) CHECK(in_omega(v, r));
      }
    }
  }
}

TEST_CASE("classification in low multiplicity") {
  const auto c1 = classify(1, 0);
  REQUIRE(c1.classes.size() == 1);
  CHECK(c1.classes[0].representative == canonical_form(parse_laurent("v - 1", 0), 1));

  const auto c2 = classify(2, 0);
  REQUIRE(c2.classes.size() == 1);
  CHECK(c2.classes[0].representative == canonical_form(phi_family(2), 2));

  CHECK_THROWS_AS(classify(3, 0), PreconditionError);
  CHECK_THROWS_AS(classify(4, 0, true), PreconditionError);
}

TEST_CASE("classification at multiplicity three finds both classes") {
  const auto c3 = classify(3, 0, true, 2);
  REQUIRE(c3.classes.size() == 2);
  const auto a = canonical_form(phi_family(3), 3), b = canonical_form(parse_laurent(kPhi3Prime, 0), 3);
  const bool both = (c3.classes[0].representative == a && c3.classes[1].representative == b) ||
                    (c3.classes[0].representative == b && c3.classes[1].representative == a);
  CHECK(both);
  for (const auto& e : c3.classes) check_accepted_shape(e.report);
}

TEST_CASE("classification is independent of the worker count") {
  const auto one = classify(3, 0, true, 1);
  const auto many = classify(3, 0, true, 4);
  REQUIRE(one.classes.size() == many.classes.size());
  for (std::size_t i = 0; i < one.classes.size(); ++i)
    CHECK(one.classes[i].representative == many.classes[i].representative);
}
