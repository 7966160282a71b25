#include "negcurve/geometry.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>
#include <set>

using namespace negcurve;

namespace {

using Pts = std::vector<LatticePoint>;

LatticePoint P(std::int64_t a, std::int64_t b) { return LatticePoint(a, b); }

IntegralPolygon hull(Pts pts) { return convex_hull(std::move(pts)); }

const Pts phi2_support{P(0, 0), P(1, 1), P(2, 1), P(1, 2)};
const Pts phi3p_support{P(0, 0), P(1, 1), P(2, 1), P(3, 1), P(1, 2), P(2, 2), P(2, 3)};

// Every input point inside, every vertex an input point, no collinear triple.
void check_hull(const Pts& input, const IntegralPolygon& h) {
  std::set<std::pair<std::int64_t, std::int64_t>> in;
  for (const auto& p : input) in.insert({p.x(), p.y()});
  for (const auto& v : h.vertices) CHECK(in.count({v.x(), v.y()}) == 1);
  if (h.dimension() == 2) {
    for (std::size_t i = 0; i < h.size(); ++i)
      CHECK(cross<std::int64_t>(h.vertex(i + 1) - h.vertex(i), h.vertex(i + 2) - h.vertex(i + 1)) > 0);
    for (const auto& p : input) CHECK(oracle::locate(h.vertices, p) >= 0);
  }
}

}  // namespace

TEST_CASE("convex hull examples") {
  const auto seg = hull({P(0, 0), P(1, 1), P(2, 2)});
  CHECK(seg.dimension() == 1);
  CHECK(seg.vertices == Pts{P(0, 0), P(2, 2)});

  const auto tet = hull(phi3p_support);
  CHECK(tet.dimension() == 2);
  CHECK(tet.vertices == Pts{P(0, 0), P(3, 1), P(2, 3), P(1, 2)});

  const auto pt = hull({P(0, 0)});
  CHECK(pt.dimension() == 0);
  CHECK_THROWS_AS(hull({}), GeometryError);
}

TEST_CASE("hulls of random point sets", "[property]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const auto pts = oracle::random_points(rng, 2 + trial % 9, 6);
    check_hull(pts, hull(pts));
  }
}

TEST_CASE("area and lattice counts") {
  CHECK(area2(hull(phi2_support)) == 3);
  CHECK(area2(hull({P(0, 0), P(1, 0), P(0, 1), P(1, 1)})) == 2);
  CHECK(area2(hull(phi3p_support)) == 8);
  CHECK(area2(hull({P(0, 0), P(3, 3)})) == 0);

  const auto phi3 = hull({P(0, 0), P(3, 1), P(1, 3)});
  const auto c = lattice_counts(phi3);
  CHECK(c.total == 7);
  CHECK(c.boundary == 4);
  CHECK(c.interior == 3);
  CHECK(lattice_points(phi3).size() == 7);

  const auto sq = lattice_counts(hull({P(0, 0), P(1, 0), P(0, 1), P(1, 1)}));
  CHECK(sq.boundary == 4);
  CHECK(sq.interior == 0);
}

TEST_CASE("Pick and the scan oracle agree on random polygons", "[property]") {
  std::mt19937_64 rng(12);
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto h = hull(oracle::random_points(rng, 3 + trial % 6, 7));
    if (h.dimension() < 2) continue;
    const auto c = lattice_counts(h);
    const auto o = oracle::scan(h.vertices);
    CHECK(c.total == o.total);
    CHECK(c.boundary == o.boundary);
    CHECK(c.interior == o.interior);
    CHECK(area2(h) == Rational(c.boundary + 2 * c.interior - 2));
    ++checked;
  }
  CHECK(checked > 300);
}

TEST_CASE("rational polygons count like the scan oracle", "[property]") {
  std::mt19937_64 rng(13);
  std::uniform_int_distribution<int> num(-30, 30), den(1, 7);
  for (int trial = 0; trial < 150; ++trial) {
    std::vector<RationalPoint> pts;
    for (int i = 0; i < 4; ++i) pts.emplace_back(Rational(num(rng), den(rng)), Rational(num(rng), den(rng)));
    const auto h = convex_hull(pts);
    if (h.dimension() < 2) continue;
    const auto c = lattice_counts(h);
    const auto o = oracle::scan(h.vertices);
    CHECK(c.total == o.total);
    CHECK(c.boundary == o.boundary);
    CHECK(c.interior == o.interior);
  }
}

TEST_CASE("dilation scales area quadratically") {
  const auto tri = hull({P(0, 0), P(1, 0), P(0, 1)});
  CHECK(dilate(tri, 2).vertices == Pts{P(0, 0), P(2, 0), P(0, 2)});
  CHECK(dilate(tri, 1) == tri);
  CHECK_THROWS_AS(dilate(tri, 0), Error);

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 50; ++trial) {
    const auto h = hull(oracle::random_points(rng, 5, 5));
    const std::int64_t d = 1 + trial % 4;
    CHECK(area2(dilate(h, d)) == area2(h) * d * d);
  }
}

TEST_CASE("half-plane intersections") {
  using H = HalfPlane<Rational>;
  auto h = [](std::int64_t x, std::int64_t y, std::int64_t b) { return H{RationalPoint(x, y), Rational(b)}; };
  const auto p2 = halfplane_polygon({h(1, 0, -1), h(0, 1, -1), h(-1, -1, -1)});
  CHECK(p2.dimension() == 2);
  CHECK(area2(p2) == 9);
  CHECK(p2.vertices.size() == 3);
  std::set<std::pair<Rational, Rational>> vs;
  for (const auto& v : p2.vertices) vs.insert({v.x(), v.y()});
  CHECK(vs == std::set<std::pair<Rational, Rational>>{{-1, -1}, {2, -1}, {-1, 2}});

  const auto seg = halfplane_polygon({h(1, 0, 0), h(-1, 0, 0), h(0, 1, 0), h(0, -1, -1)});
  CHECK(seg.dimension() == 1);

  CHECK_THROWS_AS(halfplane_polygon({h(1, 0, 1), h(-1, 0, 0), h(0, 1, 0), h(0, -1, -1)}), GeometryError);
  CHECK_THROWS_AS(halfplane_polygon({h(1, 0, 0), h(0, 1, 0)}), GeometryError);
}

TEST_CASE("collinear lattice points") {
  CHECK(max_collinear(hull({P(0, 0), P(3, 0)})) == 4);
  CHECK(max_collinear(hull(phi2_support)) == 2);
  CHECK(max_collinear(hull({P(0, 0), P(3, 1), P(1, 3)})) == 3);
}

TEST_CASE("collinearity matches a brute-force line scan", "[property]") {
  std::mt19937_64 rng(15);
  for (int trial = 0; trial < 80; ++trial) {
    const auto h = hull(oracle::random_points(rng, 4, 3));
    const auto pts = lattice_points(h);
    std::int64_t best = std::min<std::int64_t>(2, static_cast<std::int64_t>(pts.size()));
    for (std::size_t i = 0; i < pts.size(); ++i)
      for (std::size_t j = i + 1; j < pts.size(); ++j) {
        std::int64_t n = 0;
        for (const auto& q : pts)
          if (cross<std::int64_t>(pts[j] - pts[i], q - pts[i]) == 0) ++n;
        best = std::max(best, n);
      }
    CHECK(max_collinear(h) == best);
  }
}

TEST_CASE("normalization places a flag at the origin") {
  const auto [q, m] = normalize(hull(phi2_support), 2);
  CHECK(std::llabs(m.det()) == 1);
  CHECK(q.vertex(0) == P(0, 0));
  CHECK(q.vertex(1).y() == 0);
  CHECK(q.vertex(1).x() > 0);
  const auto other = q.vertex(q.size() - 1);
  CHECK(other.x() >= 0);
  CHECK(other.y() > other.x());
  for (const auto& v : q.vertices) CHECK(in_omega(v, 2));

  const auto sq = hull({P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
  CHECK(normalize(sq, 2).first == sq);
  CHECK_THROWS_AS(normalize(hull({P(0, 0), P(2, 1)}), 2), GeometryError);
}

TEST_CASE("normalization preserves lattice invariants", "[property]") {
  std::mt19937_64 rng(16);
  int checked = 0;
  for (int trial = 0; trial < 300; ++trial) {
    const auto h = hull(oracle::random_points(rng, 4, 3));
    if (h.dimension() < 2) continue;
    const std::int64_t r = 4;
    if (area2(h) >= r * r) continue;
    const auto [q, m] = normalize(h, r);
    const auto a = lattice_counts(h), b = lattice_counts(q);
    CHECK(area2(q) == area2(h));
    CHECK(a.boundary == b.boundary);
    CHECK(a.interior == b.interior);
    CHECK(max_collinear(q) == max_collinear(h));
    CHECK(transform(h, m) == q);
    ++checked;
  }
  CHECK(checked > 100);
}

TEST_CASE("Minkowski decompositions") {
  const auto sq = hull({P(0, 0), P(1, 0), P(1, 1), P(0, 1)});
  const auto ds = minkowski_decompositions(sq);
  REQUIRE(ds.size() == 1);
  CHECK(ds[0].first.dimension() == 1);
  CHECK(ds[0].second.dimension() == 1);
  CHECK(minkowski_sum(ds[0].first, ds[0].second) == sq);

  CHECK(minkowski_decompositions(hull(phi2_support)).empty());
  CHECK_FALSE(is_decomposable(hull(phi2_support)));

  const auto big = hull({P(0, 0), P(2, 0), P(0, 2)});
  const auto bd = minkowski_decompositions(big);
  REQUIRE(bd.size() == 1);
  const auto unit = hull({P(0, 0), P(1, 0), P(0, 1)});
  CHECK(bd[0].second == unit);
  CHECK(area2(bd[0].first) == 1);
}

TEST_CASE("decompositions sum back and satisfy Brunn-Minkowski", "[property]") {
  std::mt19937_64 rng(17);
  int seen = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const auto q1 = hull(oracle::random_points(rng, 3, 2));
    const auto q2 = hull(oracle::random_points(rng, 3, 2));
    const auto p = minkowski_sum(q1, q2);
    if (p.dimension() < 2) continue;
    const auto ds = minkowski_decompositions(p);
    if (q1.dimension() > 0 && q2.dimension() > 0) CHECK_FALSE(ds.empty());
    for (const auto& [a, b] : ds) {
      CHECK(area2(minkowski_sum(a, b)) == area2(p));
      // sqrt|A| + sqrt|B| <= sqrt|P| squared twice: (|P| - |A| - |B|)^2 >= 4|A||B| with |P| >= |A| + |B|
      const Rational x = area2(a), y = area2(b), z = area2(p);
      CHECK(z - x - y >= 0);
      CHECK((z - x - y) * (z - x - y) >= 4 * x * y);
      ++seen;
    }
  }
  CHECK(seen > 50);
}

TEST_CASE("unimodular maps compose") {
  UnimodularAffineMap a, b;
  a.matrix << 1, 1, 0, 1;
  a.translation = P(2, -1);
  b.matrix << 0, 1, -1, 0;
  b.translation = P(0, 3);
  const LatticePoint x = P(4, 7);
  CHECK(a.then(b)(x) == b(a(x)));
  CHECK(a.det() == 1);
}
