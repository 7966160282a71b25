#include "negcurve/symbolic_power.hpp"

#include <algorithm>
#include <map>

namespace negcurve {

Support make_support(std::vector<LatticePoint> points) {
  std::sort(points.begin(), points.end(), LexLess{});
  points.erase(std::unique(points.begin(), points.end()), points.end());
  return points;
}

IntMatrix jet_matrix(const Support& support, unsigned r) {
  const auto rows = static_cast<Eigen::Index>(r * (r + 1) / 2);
  IntMatrix m(rows, static_cast<Eigen::Index>(support.size()));
  std::map<std::int64_t, std::vector<Integer>> cache;
  const auto row_of = [&](std::int64_t a) -> const std::vector<Integer>& {
    auto [it, inserted] = cache.try_emplace(a);
    if (inserted) {
      it->second.resize(r);
      for (unsigned i = 0; i < r; ++i) it->second[i] = binomial(a, i);
    }
    return it->second;
  };
  for (std::size_t col = 0; col < support.size(); ++col) {
    const auto& ba = row_of(support[col].x());
    const auto& bb = row_of(support[col].y());
    for (unsigned k = 0; k < r; ++k)
      for (unsigned i = 0; i <= k; ++i)
        m(static_cast<Eigen::Index>(jet_index(i, k - i)), static_cast<Eigen::Index>(col)) = ba[i] * bb[k - i];
  }
  return m;
}

Support centred(const Support& support) {
  if (support.empty()) return support;
  std::int64_t xlo = support[0].x(), xhi = xlo, ylo = support[0].y(), yhi = ylo;
  for (const auto& p : support) {
    xlo = std::min(xlo, p.x());
    xhi = std::max(xhi, p.x());
    ylo = std::min(ylo, p.y());
    yhi = std::max(yhi, p.y());
  }
  const LatticePoint shift((xlo + xhi) / 2, (ylo + yhi) / 2);
  Support out;
  out.reserve(support.size());
  for (const auto& p : support) out.push_back(p - shift);
  return out;
}

std::size_t nullity_mod_p(const Support& support, unsigned r, std::uint64_t p) {
  if (r == 0) return support.size();
  return support.size() - rank_mod_p(jet_matrix(centred(support), r), p);
}

std::size_t jet_nullity(const Support& support, unsigned r, std::uint64_t characteristic) {
  check_characteristic(characteristic);
  if (r == 0) return support.size();
  if (characteristic != 0) return nullity_mod_p(support, r, characteristic);
  return support.size() - rank(jet_matrix(centred(support), r));
}

std::vector<LaurentPoly> jet_kernel(const Support& support, unsigned r, std::uint64_t characteristic) {
  check_characteristic(characteristic);
  std::vector<LaurentPoly> out;
  if (r == 0) {
    for (const auto& p : support) out.push_back(LaurentPoly::monomial(p, Scalar(1, characteristic)));
    return out;
  }
  for (const auto& v : nullspace(jet_matrix(centred(support), r), characteristic)) {
    LaurentPoly f(characteristic);
    for (std::size_t j = 0; j < support.size(); ++j) f.add_term(support[j], v[j]);
    out.push_back(std::move(f));
  }
  return out;
}

std::uint64_t random_prime_30(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> dist(1ULL << 29, (1ULL << 30) - 1);
  for (;;) {
    const std::uint64_t n = dist(rng) | 1ULL;
    if (is_prime(n)) return n;
  }
}

Prefilter modular_prefilter(const Support& support, unsigned r, std::mt19937_64& rng) {
  Prefilter f;
  f.primes[0] = random_prime_30(rng);
  do {
    f.primes[1] = random_prime_30(rng);
  } while (f.primes[1] == f.primes[0]);
  if (r == 0) {
    f.nullities[0] = f.nullities[1] = support.size();
    return f;
  }
  const IntMatrix m = jet_matrix(centred(support), r);
  for (int k = 0; k < 2; ++k) f.nullities[k] = support.size() - rank_mod_p(m, f.primes[k]);
  return f;
}

template <typename T>
std::size_t symbolic_dim(const Polygon<T>& p, std::int64_t d, unsigned r, std::uint64_t characteristic) {
  if (d < 1) throw PreconditionError("degree must be positive");
  const Support s = make_support(lattice_points(dilate(p, d)));
  return jet_nullity(s, r, characteristic);
}

template std::size_t symbolic_dim(const IntegralPolygon&, std::int64_t, unsigned, std::uint64_t);
template std::size_t symbolic_dim(const RationalPolygon&, std::int64_t, unsigned, std::uint64_t);

Support lemma_eu_reduce(const Support& support, const LatticePoint& p, const LatticePoint& q, std::size_t n) {
  if (p == q) throw PreconditionError("a line needs two distinct points");
  const LatticePoint dir = q - p;
  Support rest;
  std::size_t on_line = 0;
  for (const auto& x : support) {
    if (cross<std::int64_t>(dir, LatticePoint(x - p)) == 0) {
      ++on_line;
    } else {
      rest.push_back(x);
    }
  }
  if (on_line != n)
    throw PreconditionError("line meets the support in " + std::to_string(on_line) + " points, expected " +
                            std::to_string(n));
  return rest;
}

EhrhartData ehrhart_polynomial(const IntegralPolygon& p) {
  if (p.dimension() < 2) throw GeometryError(GeometryError::Kind::Degenerate, "Ehrhart polynomial of a degenerate polygon");
  const LatticeCounts c = lattice_counts(p);
  return {area2(p) / 2, Rational(c.boundary, 2), Rational(1)};
}

std::vector<Integer> hilbert_numerator(const IntegralPolygon& p, std::int64_t truncation) {
  if (truncation < 3) throw PreconditionError("truncation must be at least 3");
  std::vector<Integer> series(static_cast<std::size_t>(truncation + 1));
  series[0] = 1;
  for (std::int64_t n = 1; n <= truncation; ++n)
    series[static_cast<std::size_t>(n)] = lattice_counts(dilate(p, n)).total;
  // multiply by (1 - s)^3 = 1 - 3s + 3s^2 - s^3
  const Integer c[4] = {1, -3, 3, -1};
  std::vector<Integer> f(series.size());
  for (std::size_t k = 0; k < series.size(); ++k)
    for (std::size_t j = 0; j < 4 && j <= k; ++j) f[k] += c[j] * series[k - j];
  for (std::size_t k = 3; k < f.size(); ++k)
    if (f[k] != 0) throw Error("truncation too small: numerator has a nonzero tail");
  while (f.size() > 1 && f.back() == 0) f.pop_back();
  return f;
}

}  // namespace negcurve
