#include "negcurve/univariate.hpp"

#include <algorithm>

namespace negcurve::fp {

void trim(Poly& a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
}

int degree(const Poly& a) { return static_cast<int>(a.size()) - 1; }

bool is_zero(const Poly& a) { return a.empty(); }

Poly add(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = add_mod(c[i], b[i], p);
  trim(c);
  return c;
}

Poly sub(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) c[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) c[i] = sub_mod(c[i], b[i], p);
  trim(c);
  return c;
}

Poly mul(const Poly& a, const Poly& b, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  // accumulate a few products before reducing; p < 2^32 so each product < 2^64
  std::vector<unsigned __int128> acc(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) acc[i + j] += static_cast<unsigned __int128>(a[i]) * b[j];
  }
  Poly c(acc.size());
  for (std::size_t k = 0; k < acc.size(); ++k) c[k] = static_cast<std::uint64_t>(acc[k] % p);
  trim(c);
  return c;
}

Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p) {
  Poly out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = mul_mod(a[i], c, p);
  trim(out);
  return out;
}

void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r) {
  if (b.empty()) throw Error("polynomial division by zero");
  r = a;
  trim(r);
  const int db = degree(b);
  if (degree(r) < db) {
    q.clear();
    return;
  }
  q.assign(static_cast<std::size_t>(degree(r) - db + 1), 0);
  const std::uint64_t inv = inv_mod(b.back(), p);
  for (int k = degree(r); k >= db; --k) {
    const std::uint64_t c = mul_mod(r[static_cast<std::size_t>(k)], inv, p);
    q[static_cast<std::size_t>(k - db)] = c;
    if (c == 0) continue;
    for (int j = 0; j <= db; ++j) {
      auto& x = r[static_cast<std::size_t>(k - db + j)];
      x = sub_mod(x, mul_mod(c, b[static_cast<std::size_t>(j)], p), p);
    }
  }
  r.resize(static_cast<std::size_t>(db));
  trim(r);
  trim(q);
}

Poly mod(const Poly& a, const Poly& b, std::uint64_t p) {
  Poly q, r;
  divmod(a, b, p, q, r);
  return r;
}

Poly monic(const Poly& a, std::uint64_t p) {
  if (a.empty()) return a;
  return scale(a, inv_mod(a.back(), p), p);
}

Poly gcd(Poly a, Poly b, std::uint64_t p) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, p);
}

Poly derivative(const Poly& a, std::uint64_t p) {
  if (a.size() <= 1) return {};
  Poly d(a.size() - 1);
  for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul_mod(a[i], i % p, p);
  trim(d);
  return d;
}

Poly powmod(const Poly& base, const Integer& e, const Poly& modulus, std::uint64_t p) {
  Poly result{1};
  result = mod(result, modulus, p);
  Poly b = mod(base, modulus, p);
  const std::size_t bits = e == 0 ? 0 : msb(e) + 1;
  for (std::size_t i = bits; i-- > 0;) {
    result = mod(mul(result, result, p), modulus, p);
    if (bit_test(e, static_cast<unsigned>(i))) result = mod(mul(result, b, p), modulus, p);
  }
  return result;
}

std::vector<Factor> squarefree(const Poly& input, std::uint64_t p) {
  std::vector<Factor> out;
  Poly f = monic(input, p);
  if (degree(f) <= 0) return out;
  // f = prod g_i^i; standard algorithm for finite fields
  std::vector<std::pair<Poly, unsigned>> stack{{f, 1}};
  while (!stack.empty()) {
    auto [g, m] = stack.back();
    stack.pop_back();
    if (degree(g) <= 0) continue;
    const Poly dg = derivative(g, p);
    if (dg.empty()) {
      // g = h(x^p); in F_p the p-th root of a coefficient is itself
      Poly h;
      for (std::size_t i = 0; i < g.size(); i += p) h.push_back(g[i]);
      stack.emplace_back(h, m * static_cast<unsigned>(p));
      continue;
    }
    Poly c = gcd(g, dg, p);
    Poly w, r;
    divmod(g, c, p, w, r);
    unsigned i = 1;
    while (degree(w) > 0) {
      Poly y = gcd(w, c, p);
      Poly fac, rem;
      divmod(w, y, p, fac, rem);
      if (degree(fac) > 0) out.push_back({monic(fac, p), i * m});
      w = y;
      Poly nc;
      divmod(c, y, p, nc, rem);
      c = nc;
      ++i;
    }
    if (degree(c) > 0) {
      // c = h(x^p)
      Poly h;
      for (std::size_t k = 0; k < c.size(); k += p) h.push_back(c[k]);
      stack.emplace_back(h, m * static_cast<unsigned>(p));
    }
  }
  return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& input, std::uint64_t p) {
  std::vector<std::pair<Poly, unsigned>> out;
  Poly f = monic(input, p);
  const Poly x{0, 1};
  Poly h = mod(x, f, p);
  const Integer pz(p);
  for (unsigned d = 1; 2 * d <= static_cast<unsigned>(degree(f)); ++d) {
    h = powmod(h, pz, f, p);
    const Poly g = gcd(f, sub(h, x, p), p);
    if (degree(g) > 0) {
      out.emplace_back(g, d);
      Poly q, r;
      divmod(f, g, p, q, r);
      f = monic(q, p);
      h = mod(h, f, p);
    }
  }
  if (degree(f) > 0) out.emplace_back(f, static_cast<unsigned>(degree(f)));
  return out;
}

std::vector<Poly> equal_degree(const Poly& input, unsigned d, std::uint64_t p, std::mt19937_64& rng) {
  const Poly f = monic(input, p);
  const int n = degree(f);
  if (n <= 0) return {};
  if (static_cast<unsigned>(n) == d) return {f};
  std::uniform_int_distribution<std::uint64_t> coeff(0, p - 1);
  for (;;) {
    Poly a(static_cast<std::size_t>(n));
    for (auto& c : a) c = coeff(rng);
    trim(a);
    if (degree(a) <= 0) continue;
    Poly t;
    if (p == 2) {
      // trace to F_2: a + a^2 + ... + a^(2^(d-1))
      Poly cur = mod(a, f, p);
      t = cur;
      for (unsigned i = 1; i < d; ++i) {
        cur = mod(mul(cur, cur, p), f, p);
        t = add(t, cur, p);
      }
    } else {
      Integer e = pow(Integer(p), d);
      e = (e - 1) / 2;
      t = sub(powmod(a, e, f, p), Poly{1}, p);
    }
    const Poly g = gcd(f, t, p);
    if (degree(g) <= 0 || degree(g) == n) continue;
    Poly q, r;
    divmod(f, g, p, q, r);
    auto left = equal_degree(g, d, p, rng);
    auto right = equal_degree(q, d, p, rng);
    left.insert(left.end(), right.begin(), right.end());
    return left;
  }
}

std::vector<Factor> factor(const Poly& input, std::uint64_t p, std::uint64_t* leading) {
  Poly f = input;
  trim(f);
  if (f.empty()) throw Error("factorization of the zero polynomial");
  if (leading) *leading = f.back();
  std::mt19937_64 rng(0x5eed);
  std::vector<Factor> out;
  for (const auto& sf : squarefree(f, p)) {
    for (const auto& [g, d] : distinct_degree(sf.poly, p)) {
      for (auto& h : equal_degree(g, d, p, rng)) out.push_back({std::move(h), sf.multiplicity});
    }
  }
  // merge equal factors coming from different squarefree layers
  std::sort(out.begin(), out.end(), [](const Factor& x, const Factor& y) {
    if (x.poly.size() != y.poly.size()) return x.poly.size() < y.poly.size();
    return x.poly < y.poly;
  });
  std::vector<Factor> merged;
  for (auto& fac : out) {
    if (!merged.empty() && merged.back().poly == fac.poly) {
      merged.back().multiplicity += fac.multiplicity;
    } else {
      merged.push_back(std::move(fac));
    }
  }
  return merged;
}

}  // namespace negcurve::fp
