#include "negcurve/search.hpp"
#include "negcurve/toric.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <numeric>
#include <random>

using namespace negcurve;

namespace {

const char* kPhi3Prime = "-1 + 5*v*w - 3*v^2*w + v^3*w - 2*v*w^2 - v^2*w^2 + v^2*w^3";

}  // namespace

TEST_CASE("negative pairs") {
  CHECK(is_negative_pair(9, 10, 13, 3, 100));
  CHECK(is_negative_pair(9, 10, 13, 3, 102));
  CHECK_FALSE(is_negative_pair(9, 10, 13, 3, 103));
  CHECK_THROWS_AS(is_negative_pair(9, 10, 13, 0, 1), PreconditionError);
  // 645^2 = 416025 < 417960 = 5160 * 81 < 647^2.
  CHECK(is_negative_pair(8, 15, 43, 9, 645));
  CHECK_FALSE(is_negative_pair(8, 15, 43, 9, 647));
}

TEST_CASE("the char 2 curve for (9, 10, 13)") {
  const auto rep = find(9, 10, 13, 2, 3, 100);
  REQUIRE(rep);
  CHECK(rep->accepted());
  CHECK(rep->kernel_dimension == 1);
  CHECK(rep->nct.accepted());
  CHECK(canonical_form(rep->phi, 3) == canonical_form(parse_laurent(kPhi3Prime, 2), 3));
  CHECK(symbolic_dim(triangle(herzog_data(9, 10, 13)), 100, 3, 2) == 1);
}

TEST_CASE("nothing at multiplicity three in char 0 for (9, 10, 13)") {
  for (std::int64_t d = 1; is_negative_pair(9, 10, 13, 3, d); ++d) {
    INFO("d=" << d);
    CHECK_FALSE(find(9, 10, 13, 0, 3, d));
  }
  CHECK(scan(9, 10, 13, 0, 3).empty());
}

TEST_CASE("the pentagon for (8, 15, 43)") {
  const auto rep = find(8, 15, 43, 0, 9, 645);
  REQUIRE(rep);
  CHECK(rep->accepted());
  const auto poly = newton_polygon(rep->phi);
  CHECK(poly.vertices.size() == 5);
  const auto counts = lattice_counts(poly);
  CHECK(counts.boundary == 9);
  CHECK(counts.interior == 36);
  CHECK(counts.total == 45);
  CHECK(rep->nct.accepted());
  CHECK(rep->interior_hull == 36);
  CHECK(rep->genus == 0);
  // The rational polygon has one more interior point than the hull.
  CHECK(rep->interior_dp == 37);
}

TEST_CASE("scanning small weights") {
  const auto found = scan(3, 7, 8, 0, 2);
  REQUIRE_FALSE(found.empty());
  for (std::size_t i = 0; i + 1 < found.size(); ++i)
    CHECK(std::make_pair(found[i].r, found[i].d) < std::make_pair(found[i + 1].r, found[i + 1].d));
  for (const auto& rep : found) {
    CHECK(is_negative_pair(3, 7, 8, rep.r, rep.d));
    CHECK(rep.nct.accepted());
  }
  CHECK(scan(9, 10, 13, 2, 3, {100}).size() == 1);
  CHECK(scan(9, 10, 13, 2, 3, {99}).empty());
}

TEST_CASE("scan output does not depend on the worker count") {
  SearchOptions one, many;
  many.jobs = 4;
  const auto a = scan(9, 10, 13, 2, 3, {}, one);
  const auto b = scan(9, 10, 13, 2, 3, {}, many);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].r == b[i].r);
    CHECK(a[i].d == b[i].d);
    CHECK(a[i].phi == b[i].phi);
  }
}

TEST_CASE("the prefilter never hides a curve") {
  SearchOptions off;
  off.prefilter = false;
  const auto with = scan(3, 7, 8, 0, 2);
  const auto without = scan(3, 7, 8, 0, 2, {}, off);
  REQUIRE(with.size() == without.size());
  for (std::size_t i = 0; i < with.size(); ++i) CHECK(with[i].phi == without[i].phi);
}

TEST_CASE("genus payload") {
  CHECK(genus_payload(8, 15, 43, 9, 645) == 0);
  CHECK(genus_payload(9, 10, 13, 3, 100) == 0);
  CHECK(genus_payload(3, 7, 8, 2, 24) == 0);
  CHECK(genus_payload(9, 10, 13, 1, 30) == 0);
  CHECK_THROWS_AS(genus_payload(9, 10, 13, 3, 10), Error);
}

TEST_CASE("curves at multiplicity one are rational") {
  std::size_t hits = 0;
  for (const auto& [a, b, c] : {std::array<std::int64_t, 3>{5, 6, 7}, {5, 7, 8}, {7, 8, 9}}) {
    for (const auto& rep : scan(a, b, c, 0, 1)) {
      CHECK(rep.accepted());
      CHECK(rep.genus == 0);
      CHECK(genus_payload(a, b, c, 1, rep.d) == 0);
      ++hits;
    }
  }
  CHECK(hits == 3);
}

TEST_CASE("found curves on random weights are ncts with one-dimensional kernels", "[property]") {
  std::mt19937_64 rng(61);
  std::uniform_int_distribution<std::int64_t> w(2, 30);
  int done = 0, hits = 0;
  while (done < 25) {
    const std::int64_t a = w(rng), b = w(rng), c = w(rng);
    if (std::gcd(a, b) != 1 || std::gcd(a, c) != 1 || std::gcd(b, c) != 1) continue;
    ++done;
    INFO(a << " " << b << " " << c);
    for (const auto& rep : scan(a, b, c, 0, 3)) {
      CHECK(is_negative_pair(a, b, c, rep.r, rep.d));
      if (!rep.accepted()) continue;
      ++hits;
      CHECK(is_nct(rep.phi, rep.r).accepted());
      CHECK(jet(rep.phi, static_cast<unsigned>(rep.r)).vanishes());
      CHECK(symbolic_dim(triangle(herzog_data(a, b, c)), rep.d, rep.r, 0) == 1);
    }
  }
  CHECK(hits > 0);
}
