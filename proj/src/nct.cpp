#include "negcurve/nct.hpp"

#include "negcurve/parallel.hpp"
#include "negcurve/symbolic_power.hpp"

#include <algorithm>
#include <optional>
#include <set>

namespace negcurve {

std::string to_string(NctStatus s) {
  switch (s) {
    case NctStatus::Accepted: return "accepted";
    case NctStatus::ConditionallyAccepted: return "conditionally accepted";
    case NctStatus::Rejected: return "rejected";
  }
  return "?";
}

NctReport is_nct(const LaurentPoly& f, std::int64_t r) {
  if (f.is_zero()) throw PreconditionError("zero polynomial");
  if (r < 1) throw PreconditionError("r must be positive");
  NctReport rep;
  rep.r = r;
  rep.characteristic = f.characteristic();
  rep.polygon = newton_polygon(f);
  rep.area2 = area2(rep.polygon);
  const LatticeCounts counts = lattice_counts(rep.polygon);
  rep.boundary = counts.boundary;
  rep.interior = counts.interior;
  rep.lattice_count = counts.total;
  rep.multiplicity = multiplicity_at_one(f);

  const auto ur = static_cast<unsigned>(r);
  rep.checks.push_back({"multiplicity", rep.multiplicity == ur,
                        "multiplicity at (1,1) is " + std::to_string(rep.multiplicity)});

  bool inconclusive = false;
  if (f.size() <= 1) {
    rep.checks.push_back({"irreducible", false, "a unit"});
  } else {
    rep.certificate = certify(f);
    inconclusive = rep.certificate.verdict == Verdict::Inconclusive;
    rep.checks.push_back({"irreducible", rep.certificate.irreducible(), to_string(rep.certificate.verdict)});
  }

  rep.checks.push_back({"area", rep.area2 < r * r, "area2 = " + to_string(rep.area2)});
  const std::int64_t bound = r * (r + 1) / 2 + 1;
  rep.checks.push_back({"lattice_count", rep.lattice_count <= bound,
                        std::to_string(rep.lattice_count) + " <= " + std::to_string(bound)});
  if (r >= 2) {
    const std::int64_t line = max_collinear(rep.polygon);
    rep.checks.push_back({"collinear", line <= r, "at most " + std::to_string(line) + " on a line"});
  }
  rep.kernel_dimension = jet_nullity(make_support(lattice_points(rep.polygon)), ur, f.characteristic());
  rep.checks.push_back(
      {"kernel_dimension", rep.kernel_dimension == 1, "dimension " + std::to_string(rep.kernel_dimension)});

  bool others = true;
  for (const auto& c : rep.checks)
    if (c.name != "irreducible" && !c.passed) others = false;
  const bool irreducible = rep.certificate.irreducible();
  if (others && irreducible) {
    rep.status = NctStatus::Accepted;
  } else if (others && inconclusive) {
    rep.status = NctStatus::ConditionallyAccepted;
  } else {
    rep.status = NctStatus::Rejected;
  }
  return rep;
}

LaurentPoly phi_family(unsigned r, std::uint64_t characteristic) {
  if (r < 1) throw PreconditionError("r must be positive");
  const Scalar one(1, characteristic);
  const LaurentPoly v = LaurentPoly::monomial(LatticePoint(1, 0), one);
  const LaurentPoly w = LaurentPoly::monomial(LatticePoint(0, 1), one);
  const LaurentPoly c1 = LaurentPoly::constant(one);
  LaurentPoly phi = v * w - c1;
  for (unsigned k = 2; k <= r; ++k) {
    LaurentPoly tail = v * (w - c1).pow(k);
    if (k % 2 == 0) tail = -tail;  // (-1)^(k-1)
    phi = -(phi * (v - c1)) + tail;
  }
  return phi;
}

IntegralPolygon ggk_tetragon(unsigned r) {
  if (r < 3) throw PreconditionError("the tetragon family starts at r = 3");
  const auto q = static_cast<std::int64_t>(r);
  std::vector<LatticePoint> v{LatticePoint(-1, -1), LatticePoint(q - 1, 0)};
  if (r % 2 == 1) {
    v.emplace_back((q - 1) / 2, q - 1);
    v.emplace_back((q - 3) / 2, q - 2);
  } else {
    v.emplace_back(q / 2, q - 2);
    v.emplace_back((q - 2) / 2, q - 1);
  }
  return convex_hull(v);
}

LaurentPoly ggk_prime_family(unsigned r, std::uint64_t characteristic) {
  const IntegralPolygon p = ggk_tetragon(r);
  const auto kernel = jet_kernel(make_support(lattice_points(p)), r, characteristic);
  if (kernel.size() != 1)
    throw Error("jet kernel on the tetragon has dimension " + std::to_string(kernel.size()) + ", expected 1");
  for (const auto& v : p.vertices)
    if (kernel[0].coefficient(v).is_zero()) throw Error("vanishing vertex coefficient in the tetragon family");
  return normalized(kernel[0]);
}

namespace {

using Representation = std::vector<std::pair<LatticePoint, Scalar>>;

Representation representation(const LaurentPoly& f) {
  Representation out;
  for (const auto& [e, c] : f.terms()) out.emplace_back(e, c);
  return out;
}

bool rep_less(const Representation& a, const Representation& b) {
  const std::size_t n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (a[i].first != b[i].first) return lex_less(a[i].first, b[i].first);
    if (a[i].second != b[i].second) return a[i].second < b[i].second;
  }
  return a.size() < b.size();
}

/// Maps with the segment's endpoint at the origin and its direction on the
/// positive x-axis.
std::vector<UnimodularAffineMap> segment_normalizers(const IntegralPolygon& p) {
  std::vector<UnimodularAffineMap> out;
  for (int side = 0; side < 2; ++side) {
    const LatticePoint start = p.vertices[static_cast<std::size_t>(side)];
    const LatticePoint end = p.vertices[static_cast<std::size_t>(1 - side)];
    const LatticePoint e = primitive(LatticePoint(end - start));
    std::int64_t a = 0, b = 0;
    ext_gcd(e.x(), e.y(), a, b);
    UnimodularAffineMap m;
    m.matrix << a, -e.y(), b, e.x();
    m.translation = -(start.transpose() * m.matrix).transpose();
    out.push_back(m);
  }
  return out;
}

}  // namespace

LaurentPoly canonical_form(const LaurentPoly& f, std::int64_t r) {
  if (f.is_zero()) throw PreconditionError("zero polynomial");
  const IntegralPolygon p = newton_polygon(f);
  std::vector<UnimodularAffineMap> maps;
  if (p.dimension() == 2) {
    maps = flag_normalizers(p);
  } else if (p.dimension() == 1 && r <= 1) {
    maps = segment_normalizers(p);
  } else {
    throw GeometryError(GeometryError::Kind::Degenerate, "canonical form needs a two-dimensional Newton polygon");
  }
  std::optional<LaurentPoly> best;
  Representation best_rep;
  for (const auto& m : maps) {
    LaurentPoly g = apply_affine(f, m);
    const Scalar c = g.coefficient(LatticePoint::Zero());
    g = g.scaled(-c.inverse());
    Representation rep = representation(g);
    if (!best || rep_less(rep, best_rep)) {
      best = g;
      best_rep = std::move(rep);
    }
  }
  return *best;
}

std::vector<IntegralPolygon> candidate_polygons(std::int64_t r) {
  if (r < 1) throw PreconditionError("r must be positive");
  if (r == 1) return {convex_hull(std::vector<LatticePoint>{LatticePoint(0, 0), LatticePoint(1, 0)})};
  const std::int64_t r2 = r * r;
  const std::int64_t bound = r * (r + 1) / 2 + 1;
  const auto admissible = [&](const IntegralPolygon& q) {
    if (area2(q) >= r2) return false;
    if (lattice_counts(q).total > bound) return false;
    return max_collinear(q) <= r;
  };

  std::vector<LatticePoint> extra;
  for (std::int64_t y = 1; y < r2; ++y)
    for (std::int64_t x = 0; in_omega(LatticePoint(x, y), r); ++x) extra.emplace_back(x, y);

  std::set<std::vector<std::pair<std::int64_t, std::int64_t>>> seen;
  std::vector<IntegralPolygon> out;
  const auto record = [&](const IntegralPolygon& q) {
    std::vector<std::pair<std::int64_t, std::int64_t>> key;
    for (const auto& v : q.vertices) key.emplace_back(v.x(), v.y());
    if (seen.insert(key).second) out.push_back(q);
  };

  for (std::int64_t len = 1; len + 1 <= r; ++len) {
    for (std::int64_t b2 = 1; len * b2 < r2; ++b2) {
      for (std::int64_t a2 = 0; a2 < b2; ++a2) {
        if (!in_omega(LatticePoint(a2, b2), r)) continue;
        std::vector<LatticePoint> base{LatticePoint(0, 0), LatticePoint(len, 0), LatticePoint(a2, b2)};
        const IntegralPolygon tri = convex_hull(base);
        if (!admissible(tri)) continue;
        // points strictly inside the cone at the origin
        std::vector<LatticePoint> cone;
        for (const auto& q : extra)
          if (b2 * q.x() - a2 * q.y() > 0) cone.push_back(q);
        std::vector<LatticePoint> chosen = base;
        const auto dfs = [&](auto&& self, std::size_t from, const IntegralPolygon& hull) -> void {
          record(hull);
          for (std::size_t j = from; j < cone.size(); ++j) {
            if (contains(hull, cone[j])) continue;
            chosen.push_back(cone[j]);
            const IntegralPolygon next = convex_hull(chosen);
            if (admissible(next)) self(self, j + 1, next);
            chosen.pop_back();
          }
        };
        dfs(dfs, 0, tri);
      }
    }
  }
  std::sort(out.begin(), out.end(), [](const IntegralPolygon& a, const IntegralPolygon& b) {
    return std::lexicographical_compare(a.vertices.begin(), a.vertices.end(), b.vertices.begin(), b.vertices.end(),
                                        [](const LatticePoint& x, const LatticePoint& y) { return lex_less(x, y); });
  });
  return out;
}

Catalog classify(std::int64_t r, std::uint64_t characteristic, bool experimental, unsigned jobs) {
  check_characteristic(characteristic);
  if (r < 1 || r > 3) throw PreconditionError("classification is available for r = 1, 2, 3");
  if (r == 3 && !experimental) throw PreconditionError("r = 3 classification requires the experimental flag");
  Catalog cat;
  cat.r = r;
  cat.characteristic = characteristic;
  const auto polygons = candidate_polygons(r);
  cat.polygons_examined = polygons.size();

  auto found = parallel_map<std::optional<CatalogEntry>>(polygons.size(), jobs, [&](std::size_t i) {
    std::optional<CatalogEntry> entry;
    const IntegralPolygon& q = polygons[i];
    const auto kernel = jet_kernel(make_support(lattice_points(q)), static_cast<unsigned>(r), characteristic);
    if (kernel.size() != 1) return entry;
    if (!(newton_polygon(kernel[0]) == q)) return entry;
    NctReport rep = is_nct(kernel[0], r);
    if (!rep.plausible()) return entry;
    entry.emplace(CatalogEntry{canonical_form(kernel[0], r), std::move(rep)});
    return entry;
  });

  for (auto& e : found) {
    if (!e) continue;
    const bool dup = std::any_of(cat.classes.begin(), cat.classes.end(),
                                 [&](const CatalogEntry& c) { return c.representative == e->representative; });
    if (!dup) cat.classes.push_back(std::move(*e));
  }
  std::sort(cat.classes.begin(), cat.classes.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
    return rep_less(representation(a.representative), representation(b.representative));
  });
  return cat;
}

}  // namespace negcurve
