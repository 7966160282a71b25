#include "negcurve/irreducibility.hpp"

#include "negcurve/univariate.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace negcurve {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::IrreduciblePolytope: return "IrreduciblePolytope";
    case Verdict::IrreducibleModP: return "IrreducibleModP";
    case Verdict::Factored: return "Factored";
    case Verdict::Inconclusive: return "Inconclusive";
  }
  return "?";
}

namespace {

struct Box {
  std::int64_t xlo, xhi, ylo, yhi;
};

Box bounding_box(const LaurentPoly& f) {
  const auto s = f.support();
  Box b{s[0].x(), s[0].x(), s[0].y(), s[0].y()};
  for (const auto& p : s) {
    b.xlo = std::min(b.xlo, p.x());
    b.xhi = std::max(b.xhi, p.x());
    b.ylo = std::min(b.ylo, p.y());
    b.yhi = std::max(b.yhi, p.y());
  }
  return b;
}

LatticePoint lexmin(const LaurentPoly& f) { return f.terms().begin()->first; }

Matrix2i inverse(const Matrix2i& m) {
  const std::int64_t d = m(0, 0) * m(1, 1) - m(0, 1) * m(1, 0);
  Matrix2i inv;
  inv << m(1, 1) * d, -m(0, 1) * d, -m(1, 0) * d, m(0, 0) * d;  // d = +-1 so 1/d = d
  return inv;
}

/// Total lattice length per primitive edge direction.
std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> edge_lengths(const IntegralPolygon& p) {
  std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> out;
  if (p.dimension() < 1) return out;
  for (const auto& [e, len] : primitive_edges(p)) out[{e.x(), e.y()}] += len;
  return out;
}

/// Necessary condition for q to be a Minkowski summand of p.
bool fits_summand(const IntegralPolygon& q, const IntegralPolygon& p) {
  const auto eq = edge_lengths(q);
  const auto ep = edge_lengths(p);
  for (const auto& [dir, len] : eq) {
    auto it = ep.find(dir);
    if (it == ep.end() || it->second < len) return false;
  }
  return true;
}

/// Linear part of a unimodular map making the bounding box of the support small.
Matrix2i compact_frame(const LaurentPoly& f) {
  const IntegralPolygon p = newton_polygon(f);
  std::vector<Matrix2i> candidates{Matrix2i::Identity()};
  if (p.dimension() == 2) {
    for (const auto& m : flag_normalizers(p)) candidates.push_back(m.matrix);
  } else if (p.dimension() == 1) {
    const LatticePoint e = primitive(LatticePoint(p.vertices[1] - p.vertices[0]));
    std::int64_t a = 0, b = 0;
    ext_gcd(e.x(), e.y(), a, b);
    Matrix2i m;
    m << a, -e.y(), b, e.x();
    candidates.push_back(m);
  }
  Matrix2i best = candidates[0];
  Integer best_cost = -1;
  for (const auto& m : candidates) {
    std::int64_t xlo = 0, xhi = 0, ylo = 0, yhi = 0;
    bool first = true;
    for (const auto& v : p.vertices) {
      const LatticePoint w = (v.transpose() * m).transpose();
      if (first || w.x() < xlo) xlo = w.x();
      if (first || w.x() > xhi) xhi = w.x();
      if (first || w.y() < ylo) ylo = w.y();
      if (first || w.y() > yhi) yhi = w.y();
      first = false;
    }
    // degree of the Kronecker image
    const Integer cost = Integer(xhi - xlo) + Integer(xhi - xlo + 1) * (yhi - ylo);
    if (best_cost < 0 || cost < best_cost) {
      best_cost = cost;
      best = m;
    }
  }
  return best;
}

/// Kronecker image: (a, b) -> x^(a + m b); exponents must be nonnegative with a < m.
fp::Poly kronecker(const LaurentPoly& f, std::int64_t m) {
  std::size_t deg = 0;
  for (const auto& [e, c] : f.terms()) deg = std::max(deg, static_cast<std::size_t>(e.x() + m * e.y()));
  fp::Poly u(deg + 1, 0);
  for (const auto& [e, c] : f.terms()) u[static_cast<std::size_t>(e.x() + m * e.y())] = c.residue();
  fp::trim(u);
  return u;
}

LaurentPoly unkronecker(const fp::Poly& u, std::int64_t m, std::uint64_t p) {
  LaurentPoly f(p);
  for (std::size_t n = 0; n < u.size(); ++n)
    if (u[n] != 0)
      f.add_term(LatticePoint(static_cast<std::int64_t>(n) % m, static_cast<std::int64_t>(n) / m),
                 Scalar(Rational(u[n]), p));
  return f;
}

/// Finds the unit with f = unit * product and records it.
template <typename Out>
void settle_unit(const LaurentPoly& f, const std::vector<LaurentPoly>& factors, Out& out) {
  LaurentPoly prod = LaurentPoly::constant(Scalar(1, f.characteristic()));
  for (const auto& g : factors) prod = prod * g;
  const LatticePoint lf = lexmin(f), lp = lexmin(prod);
  out.unit_shift = lf - lp;
  out.unit_coefficient = f.coefficient(lf) / prod.coefficient(lp);
  if (unit_multiply(prod, out.unit_coefficient, out.unit_shift) != f)
    throw Error("internal error: factors do not reproduce the input");
}

/// Monic in the lexmin coefficient, polynomial form.
LaurentPoly tidy(const LaurentPoly& g) {
  const LaurentPoly h = polynomial_form(g);
  return h.scaled(h.terms().begin()->second.inverse());
}

LaurentPoly primitive_integer(const LaurentPoly& f) {
  Integer den = 1, num = 0;
  for (const auto& [e, c] : f.terms()) {
    const Integer d = denominator(c.value());
    den = den / gcd(den, d) * d;
  }
  for (const auto& [e, c] : f.terms()) num = gcd(num, Integer(numerator(c.value()) * (den / denominator(c.value()))));
  return polynomial_form(f).scaled(Scalar(Rational(den, num), 0));
}

LaurentPoly product(const std::vector<LaurentPoly>& fs, std::uint64_t characteristic) {
  LaurentPoly prod = LaurentPoly::constant(Scalar(1, characteristic));
  for (const auto& g : fs) prod = prod * g;
  return prod;
}

/// Calls visit(indices) for every k-subset of {0..n-1} in lexicographic
/// order until it returns true or the budget runs out.  Returns true if a
/// visit returned true.
template <typename Visit>
bool for_each_subset(std::size_t n, std::size_t k, std::size_t& budget, bool& exhausted, Visit visit) {
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  if (k > n) return false;
  for (;;) {
    if (budget == 0) {
      exhausted = true;
      return false;
    }
    --budget;
    if (visit(idx)) return true;
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return false;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

}  // namespace

LaurentPoly polynomial_form(const LaurentPoly& f) {
  if (f.is_zero()) return f;
  const Box b = bounding_box(f);
  return unit_multiply(f, Scalar(1, f.characteristic()), LatticePoint(-b.xlo, -b.ylo));
}

std::optional<LaurentPoly> divide(const LaurentPoly& f, const LaurentPoly& g) {
  if (g.is_zero()) throw PreconditionError("division by zero");
  if (f.characteristic() != g.characteristic()) throw CharacteristicMismatch("division across characteristics");
  LaurentPoly q(f.characteristic());
  if (f.is_zero()) return q;
  const Box bf = bounding_box(f), bg = bounding_box(g);
  const Box bq{bf.xlo - bg.xlo, bf.xhi - bg.xhi, bf.ylo - bg.ylo, bf.yhi - bg.yhi};
  if (bq.xlo > bq.xhi || bq.ylo > bq.yhi) return std::nullopt;
  const auto& [gmax, gc] = *g.terms().rbegin();
  const Scalar ginv = gc.inverse();
  LaurentPoly r = f;
  while (!r.is_zero()) {
    const auto& [rmax, rc] = *r.terms().rbegin();
    const LatticePoint e = rmax - gmax;
    if (e.x() < bq.xlo || e.x() > bq.xhi || e.y() < bq.ylo || e.y() > bq.yhi) return std::nullopt;
    const Scalar c = rc * ginv;
    q.add_term(e, c);
    r = r - unit_multiply(g, c, e);
  }
  return q;
}

ModPFactorization factor_mod_p(const LaurentPoly& f, std::size_t subset_budget) {
  const std::uint64_t p = f.characteristic();
  if (p == 0) throw PreconditionError("factor_mod_p needs a polynomial over F_p");
  if (f.is_zero()) throw PreconditionError("factorization of zero");
  ModPFactorization out;
  if (f.size() == 1) {
    settle_unit(f, {}, out);
    return out;
  }

  const Matrix2i frame = compact_frame(f);
  const Matrix2i back = inverse(frame);
  LaurentPoly h = polynomial_form(apply_gl2z(f, frame));
  Box box = bounding_box(h);
  const std::int64_t m = box.xhi + 1;

  fp::Poly cur = kronecker(h, m);
  std::size_t valuation = 0;
  while (cur[valuation] == 0) ++valuation;
  fp::Poly stripped(cur.begin() + static_cast<std::ptrdiff_t>(valuation), cur.end());
  std::vector<fp::Poly> pool;
  for (const auto& fac : fp::factor(stripped, p))
    for (unsigned i = 0; i < fac.multiplicity; ++i) pool.push_back(fac.poly);

  IntegralPolygon shape = newton_polygon(h);
  std::vector<LaurentPoly> found;
  std::size_t budget = subset_budget;
  bool exhausted = false;
  std::size_t k = 1;
  while (2 * k <= pool.size() && !exhausted) {
    fp::Poly quotient;
    std::size_t used_shift = 0;
    LaurentPoly factor_found(p);
    std::vector<std::size_t> used;
    const bool hit = for_each_subset(pool.size(), k, budget, exhausted, [&](const std::vector<std::size_t>& idx) {
      fp::Poly c{1};
      for (auto i : idx) c = fp::mul(c, pool[i], p);
      for (std::size_t shift = 0; shift <= valuation; ++shift) {
        fp::Poly cand(shift, 0);
        cand.insert(cand.end(), c.begin(), c.end());
        const LaurentPoly g = unkronecker(cand, m, p);
        const Box bg = bounding_box(g);
        if (bg.xlo != 0 || bg.ylo != 0 || bg.xhi > box.xhi || bg.yhi > box.yhi) continue;
        if (!fits_summand(newton_polygon(g), shape)) continue;
        fp::Poly q, r;
        fp::divmod(cur, cand, p, q, r);
        if (!r.empty()) continue;
        const LaurentPoly qq = unkronecker(q, m, p);
        if (bounding_box(qq).xhi > box.xhi - bg.xhi) continue;
        quotient = q;
        used_shift = shift;
        factor_found = g;
        used = idx;
        return true;
      }
      return false;
    });
    if (!hit) {
      ++k;
      continue;
    }
    found.push_back(factor_found);
    for (auto it = used.rbegin(); it != used.rend(); ++it) pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(*it));
    cur = quotient;
    valuation -= used_shift;
    h = unkronecker(cur, m, p);
    box = bounding_box(h);
    shape = newton_polygon(h);
  }
  if (h.size() > 1) found.push_back(h);
  out.complete = !exhausted;

  for (const auto& g : found) out.factors.push_back(tidy(apply_gl2z(g, back)));
  std::sort(out.factors.begin(), out.factors.end(),
            [](const LaurentPoly& a, const LaurentPoly& b) { return to_text(a) < to_text(b); });
  settle_unit(f, out.factors, out);
  return out;
}

std::vector<std::uint64_t> certification_primes(const LaurentPoly& f, std::size_t count) {
  const LaurentPoly g = primitive_integer(f);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t p = 2; primes.size() < count; p = next_prime(p + 1)) {
    bool ok = true;
    for (const auto& [e, c] : g.terms())
      if (reduce(numerator(c.value()), p) == 0) ok = false;
    if (ok) primes.push_back(p);
  }
  return primes;
}

namespace {

constexpr std::uint64_t kTrialPrime = 2147483647;  // 2^31 - 1

/// Integer factors of a primitive integer polynomial found by lifting
/// subsets of its factors modulo a large prime.
std::vector<LaurentPoly> trial_factor(const LaurentPoly& f, std::uint64_t big, std::size_t& budget, bool& exhausted) {
  if (f.size() <= 1) return {};
  const auto modp = factor_mod_p(f.reduce_mod(big), budget);
  if (!modp.complete) exhausted = true;
  const auto& pieces = modp.factors;
  const Integer lead = numerator(f.coefficient(lexmin(f)).value());
  const Integer half = Integer(big) / 2;
  for (std::size_t k = 1; 2 * k <= pieces.size(); ++k) {
    std::optional<std::pair<LaurentPoly, LaurentPoly>> split;
    for_each_subset(pieces.size(), k, budget, exhausted, [&](const std::vector<std::size_t>& idx) {
      std::vector<LaurentPoly> chosen;
      for (auto i : idx) chosen.push_back(pieces[i]);
      LaurentPoly g = product(chosen, big);
      g = g.scaled(Scalar(Rational(lead), big) / g.coefficient(lexmin(g)));
      LaurentPoly lifted(0);
      for (const auto& [e, c] : g.terms()) {
        Integer z(c.residue());
        if (z > half) z -= big;
        lifted.add_term(e, Scalar(Rational(z), 0));
      }
      if (lifted.size() <= 1) return false;
      lifted = primitive_integer(lifted);
      auto q = divide(f, lifted);
      if (!q) return false;
      split.emplace(lifted, primitive_integer(*q));
      return true;
    });
    if (split) {
      auto left = trial_factor(split->first, big, budget, exhausted);
      auto right = trial_factor(split->second, big, budget, exhausted);
      left.insert(left.end(), right.begin(), right.end());
      return left;
    }
    if (exhausted) break;
  }
  return {f};
}

}  // namespace

IrreducibilityCertificate certify(const LaurentPoly& input) {
  if (input.is_zero()) throw PreconditionError("zero is not irreducible");
  if (input.size() == 1) throw PreconditionError("units are not irreducible");
  IrreducibilityCertificate cert;
  std::ostringstream trace;
  const std::uint64_t ch = input.characteristic();
  const LaurentPoly f = ch == 0 ? primitive_integer(input) : tidy(input);
  trace << "content stripped; ";

  const IntegralPolygon shape = newton_polygon(f);
  if ((shape.dimension() == 2 && !is_decomposable(shape)) ||
      (shape.dimension() == 1 && lattice_length(LatticePoint(shape.vertices[1] - shape.vertices[0])) == 1)) {
    cert.verdict = Verdict::IrreduciblePolytope;
    trace << "Newton polygon with " << shape.size() << " vertices has no lattice Minkowski decomposition";
    cert.details = trace.str();
    cert.unit_coefficient = Scalar(1, ch);
    return cert;
  }
  trace << "Newton polygon decomposes; ";

  if (ch != 0) {
    const auto fac = factor_mod_p(f);
    if (fac.complete && fac.factors.size() == 1) {
      cert.verdict = Verdict::IrreducibleModP;
      cert.prime = ch;
      trace << "irreducible over F_" << ch;
    } else if (fac.factors.size() > 1) {
      cert.verdict = Verdict::Factored;
      cert.factors = fac.factors;
      trace << fac.factors.size() << " factors over F_" << ch << (fac.complete ? "" : " (recombination budget exhausted)");
    } else {
      trace << "recombination budget exhausted over F_" << ch;
    }
    cert.details = trace.str();
    if (cert.factors.empty()) {
      cert.unit_coefficient = Scalar(1, ch);
    } else {
      settle_unit(input, cert.factors, cert);
    }
    return cert;
  }

  const auto primes = certification_primes(f);
  for (const auto p : primes) {
    const auto fac = factor_mod_p(f.reduce_mod(p));
    trace << "mod " << p << ": " << fac.factors.size() << (fac.complete ? "" : "+") << " factor(s); ";
    if (fac.complete && fac.factors.size() == 1) {
      cert.verdict = Verdict::IrreducibleModP;
      cert.prime = p;
      cert.unit_coefficient = Scalar(1, 0);
      trace << "irreducible mod " << p;
      cert.details = trace.str();
      return cert;
    }
  }

  std::uint64_t big = kTrialPrime;
  const LaurentPoly fz = f;
  for (;;) {
    bool ok = true;
    for (const auto& [e, c] : fz.terms())
      if (reduce(numerator(c.value()), big) == 0) ok = false;
    if (ok) break;
    do {
      big -= 2;
    } while (!is_prime(big));
  }
  std::size_t budget = 1u << 14;
  bool exhausted = false;
  auto factors = trial_factor(fz, big, budget, exhausted);
  if (factors.size() > 1) {
    cert.verdict = Verdict::Factored;
    cert.factors = std::move(factors);
    settle_unit(input, cert.factors, cert);
    trace << "lifted " << cert.factors.size() << " integer factors via p = " << big;
  } else {
    cert.unit_coefficient = Scalar(1, 0);
    trace << "no integer factor found via p = " << big << (exhausted ? " (budget exhausted)" : "");
  }
  cert.details = trace.str();
  return cert;
}

}  // namespace negcurve
