#include "negcurve/irreducibility.hpp"
#include "negcurve/nct.hpp"
#include "negcurve/univariate.hpp"
#include "oracles.hpp"

#include <catch_amalgamated.hpp>

#include <random>

using namespace negcurve;

namespace {

LatticePoint P(std::int64_t a, std::int64_t b) { return LatticePoint(a, b); }

using Dense = std::vector<std::vector<std::uint64_t>>;  // [x][y]

Dense dense(const LaurentPoly& f, std::size_t X, std::size_t Y, std::uint64_t p) {
  Dense d(X + 1, std::vector<std::uint64_t>(Y + 1, 0));
  for (const auto& [e, c] : f.terms()) d[static_cast<std::size_t>(e.x())][static_cast<std::size_t>(e.y())] = reduce(c.value(), p);
  return d;
}

// Lex-leading-term division over F_p; true if g divides f exactly in F_p[x, y].
bool divides(Dense f, const Dense& g, std::uint64_t p) {
  int gx = -1, gy = -1;
  for (int x = static_cast<int>(g.size()) - 1; x >= 0 && gx < 0; --x)
    for (int y = static_cast<int>(g[0].size()) - 1; y >= 0; --y)
      if (g[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)]) {
        gx = x;
        gy = y;
        break;
      }
  const std::uint64_t inv = inv_mod(g[static_cast<std::size_t>(gx)][static_cast<std::size_t>(gy)], p);
  for (int x = static_cast<int>(f.size()) - 1; x >= 0; --x)
    for (int y = static_cast<int>(f[0].size()) - 1; y >= 0; --y) {
      const std::uint64_t c = f[static_cast<std::size_t>(x)][static_cast<std::size_t>(y)];
      if (!c) continue;
      if (x < gx || y < gy) return false;
      const std::uint64_t q = mul_mod(c, inv, p);
      for (std::size_t i = 0; i < g.size(); ++i)
        for (std::size_t j = 0; j < g[0].size(); ++j) {
          if (!g[i][j]) continue;
          const std::size_t tx = static_cast<std::size_t>(x - gx) + i, ty = static_cast<std::size_t>(y - gy) + j;
          if (tx >= f.size() || ty >= f[0].size()) return false;
          f[tx][ty] = sub_mod(f[tx][ty], mul_mod(q, g[i][j], p), p);
        }
    }
  return true;
}

std::size_t nonzeros(const Dense& d) {
  std::size_t n = 0;
  for (const auto& row : d)
    for (auto c : row) n += c != 0;
  return n;
}

// Brute force: f is reducible up to units iff some non-monomial g, without a
// monomial factor and smaller than f in some degree, divides its polynomial
// form.  Candidates g range over the bounding box of f.
bool reducible_brute(const LaurentPoly& f, std::uint64_t p) {
  const LaurentPoly pf = polynomial_form(f);
  std::size_t X = 0, Y = 0;
  for (const auto& e : pf.support()) {
    X = std::max<std::size_t>(X, static_cast<std::size_t>(e.x()));
    Y = std::max<std::size_t>(Y, static_cast<std::size_t>(e.y()));
  }
  const Dense fd = dense(pf, X, Y, p);
  const std::size_t cells = (X + 1) * (Y + 1);
  std::uint64_t total = 1;
  for (std::size_t i = 0; i < cells; ++i) total *= p;
  Dense g(X + 1, std::vector<std::uint64_t>(Y + 1, 0));
  for (std::uint64_t code = 1; code < total; ++code) {
    std::uint64_t c = code;
    for (std::size_t i = 0; i < cells; ++i, c /= p) g[i / (Y + 1)][i % (Y + 1)] = c % p;
    if (nonzeros(g) < 2) continue;
    // g must use x^0 and y^0 somewhere, or it carries a monomial factor.
    bool x0 = false, y0 = false;
    for (std::size_t j = 0; j <= Y; ++j) x0 = x0 || g[0][j];
    for (std::size_t i = 0; i <= X; ++i) y0 = y0 || g[i][0];
    if (!x0 || !y0) continue;
    // Skip the associates of f itself: same bounding degrees in both directions.
    std::size_t gx = 0, gy = 0;
    for (std::size_t i = 0; i <= X; ++i)
      for (std::size_t j = 0; j <= Y; ++j)
        if (g[i][j]) {
          gx = std::max(gx, i);
          gy = std::max(gy, j);
        }
    if (gx == X && gy == Y) continue;
    if (divides(fd, g, p)) return true;
  }
  return false;
}

LaurentPoly random_small(std::mt19937_64& rng, std::uint64_t p, int X, int Y, int terms) {
  std::uniform_int_distribution<int> ex(0, X), ey(0, Y);
  std::uniform_int_distribution<std::uint64_t> cf(1, p - 1);
  for (;;) {
    LaurentPoly f(p);
    for (int k = 0; k < terms; ++k) f.add_term(LatticePoint(ex(rng), ey(rng)), Scalar(Rational(cf(rng)), p));
    if (f.size() >= 2) return f;
  }
}

LaurentPoly rebuild(const ModPFactorization& m) {
  LaurentPoly prod = LaurentPoly::monomial(m.unit_shift, m.unit_coefficient);
  for (const auto& g : m.factors) prod = prod * g;
  return prod;
}

}  // namespace

TEST_CASE("univariate arithmetic over F_p") {
  const std::uint64_t p = 7;
  const fp::Poly a{1, 2, 3}, b{6, 1};
  fp::Poly q, r;
  fp::divmod(fp::mul(a, b, p), b, p, q, r);
  CHECK(q == a);
  CHECK(fp::is_zero(r));
  CHECK(fp::degree(fp::Poly{}) == -1);
  CHECK(fp::gcd(fp::mul(a, b, p), fp::mul(b, b, p), p) == fp::monic(b, p));
  CHECK(fp::derivative(fp::Poly{5, 0, 0, 0, 0, 0, 0, 1}, p) == fp::Poly{});
}

TEST_CASE("univariate factorizations multiply back to irreducibles", "[property]") {
  std::mt19937_64 rng(61);
  for (std::uint64_t p : {2u, 3u, 5u, 13u}) {
    std::uniform_int_distribution<std::uint64_t> cf(0, p - 1);
    for (int trial = 0; trial < 60; ++trial) {
      fp::Poly f(static_cast<std::size_t>(2 + trial % 8));
      for (auto& c : f) c = cf(rng);
      f.back() = 1 + cf(rng) % (p - 1);
      std::uint64_t lead = 0;
      const auto fs = fp::factor(f, p, &lead);
      fp::Poly prod{lead};
      for (const auto& x : fs) {
        for (unsigned k = 0; k < x.multiplicity; ++k) prod = fp::mul(prod, x.poly, p);
        // No factor of lower degree: test every monic polynomial of degree <= deg/2.
        const int d = fp::degree(x.poly);
        for (int e = 1; 2 * e <= d; ++e) {
          std::uint64_t count = 1;
          for (int i = 0; i < e; ++i) count *= p;
          for (std::uint64_t code = 0; code < count; ++code) {
            fp::Poly g(static_cast<std::size_t>(e + 1));
            std::uint64_t c = code;
            for (int i = 0; i < e; ++i, c /= p) g[static_cast<std::size_t>(i)] = c % p;
            g[static_cast<std::size_t>(e)] = 1;
            CHECK_FALSE(fp::is_zero(fp::mod(x.poly, g, p)) );
          }
        }
      }
      fp::trim(f);
      CHECK(prod == f);
    }
  }
}

TEST_CASE("exact division in the Laurent ring") {
  const auto f = parse_laurent("(v - 1)*(v*w + 2)", 0);
  const auto q = divide(f, parse_laurent("v - 1", 0));
  REQUIRE(q);
  CHECK(*q == parse_laurent("v*w + 2", 0));
  CHECK_FALSE(divide(f, parse_laurent("w - 1", 0)));
  const auto shifted = divide(parse_laurent("v^-2*w - v^-1", 0), parse_laurent("v^-1", 0));
  REQUIRE(shifted);
  CHECK(*shifted == parse_laurent("v^-1*w - 1", 0));
}

TEST_CASE("certificates for the catalogue") {
  CHECK(certify(phi_family(2)).verdict == Verdict::IrreduciblePolytope);
  CHECK(certify(parse_laurent("v*w - 1", 0)).verdict == Verdict::IrreduciblePolytope);
  CHECK(certify(phi_family(3)).irreducible());
  CHECK(certify(parse_laurent("-1 + 5*v*w - 3*v^2*w + v^3*w - 2*v*w^2 - v^2*w^2 + v^2*w^3", 0)).irreducible());
  CHECK(certify(parse_laurent("-1 + 5*v*w - 3*v^2*w + v^3*w - 2*v*w^2 - v^2*w^2 + v^2*w^3", 2)).irreducible());

  const auto sq = certify(parse_laurent("(v - 1)^2", 0));
  CHECK(sq.verdict == Verdict::Factored);
  CHECK(sq.factors.size() == 2);
  CHECK_THROWS_AS(certify(parse_laurent("3*v^2", 0)), PreconditionError);
  CHECK_THROWS_AS(certify(LaurentPoly(0)), PreconditionError);
}

TEST_CASE("a dilated simplex is not a polytope certificate") {
  // Newton polygon is twice the unit simplex, which splits as simplex + simplex.
  const auto f = parse_laurent("(1 + v + w)*(2 + v - 3*w)", 0);
  const auto c = certify(f);
  CHECK(c.verdict == Verdict::Factored);
}

TEST_CASE("factorizations mod p reproduce the input", "[property]") {
  std::mt19937_64 rng(62);
  for (std::uint64_t p : {2u, 3u, 5u, 101u}) {
    for (int trial = 0; trial < 25; ++trial) {
      const auto a = random_small(rng, p, 2, 2, 3), b = random_small(rng, p, 2, 1, 3);
      const auto f = a * b;
      if (f.size() < 2) continue;
      const auto m = factor_mod_p(f);
      INFO(to_text(f) << " over F_" << p);
      REQUIRE(m.complete);
      CHECK(rebuild(m) == f);
      CHECK(m.factors.size() >= 2 - (polynomial_form(a).size() < 2) - (polynomial_form(b).size() < 2));
    }
  }
}

TEST_CASE("irreducibility verdicts match brute force over small fields", "[property]") {
  std::mt19937_64 rng(63);
  int irreducible = 0, reducible = 0;
  for (std::uint64_t p : {2u, 3u}) {
    const int X = p == 2 ? 3 : 2, Y = 2;
    for (int trial = 0; trial < 60; ++trial) {
      auto f = random_small(rng, p, X, Y, 4);
      if (trial % 3 == 0) f = random_small(rng, p, 1, 1, 2) * random_small(rng, p, X - 1, 1, 3);
      if (f.size() < 2) continue;
      const auto pf = polynomial_form(f);
      std::int64_t mx = 0, my = 0;
      for (const auto& e : pf.support()) {
        mx = std::max(mx, e.x());
        my = std::max(my, e.y());
      }
      if (mx > X || my > Y) continue;
      const bool brute = reducible_brute(f, p);
      const auto cert = certify(f);
      INFO(to_text(f) << " over F_" << p << " verdict " << to_string(cert.verdict));
      REQUIRE(cert.verdict != Verdict::Inconclusive);
      CHECK(cert.irreducible() == !brute);
      (brute ? reducible : irreducible)++;
    }
  }
  CHECK(irreducible > 10);
  CHECK(reducible > 10);
}

TEST_CASE("products over Q are detected and verified", "[property]") {
  std::mt19937_64 rng(64);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = oracle::random_poly(rng, 0, 3, 2), b = oracle::random_poly(rng, 0, 3, 2);
    if (polynomial_form(a).size() < 2 || polynomial_form(b).size() < 2) continue;
    const auto f = a * b;
    const auto c = certify(f);
    INFO(to_text(f));
    CHECK(c.verdict == Verdict::Factored);
    LaurentPoly prod = LaurentPoly::monomial(c.unit_shift, c.unit_coefficient);
    for (const auto& g : c.factors) prod = prod * g;
    CHECK(prod == f);
  }
}

TEST_CASE("polytope certificates survive extension of scalars") {
  // The verdict comes from the Newton polygon alone, so it is the same over every field.
  for (std::uint64_t p : {0u, 2u, 3u, 7u}) {
    const auto f = parse_laurent("-v^2*w - v*w^2 + 3*v*w - 1", p);
    if (p == 3) continue;  // 3 v w vanishes and changes the polygon
    CHECK(certify(f).verdict == Verdict::IrreduciblePolytope);
  }
}

TEST_CASE("certification primes avoid vanishing coefficients") {
  const auto f = parse_laurent("6*v*w - 35", 0);
  const auto ps = certification_primes(f, 5);
  REQUIRE(ps.size() == 5);
  for (auto p : ps) {
    CHECK(p != 2);
    CHECK(p != 3);
    CHECK(p != 5);
    CHECK(p != 7);
  }
}
