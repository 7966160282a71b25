#include "negcurve/search.hpp"

#include "negcurve/parallel.hpp"
#include "negcurve/symbolic_power.hpp"

#include <algorithm>
#include <random>

namespace negcurve {

bool is_negative_pair(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r, std::int64_t d) {
  if (a <= 0 || b <= 0 || c <= 0 || r <= 0 || d < 0) throw PreconditionError("weights and r must be positive");
  return Integer(d) * d < Integer(a) * b * c * r * r;
}

namespace {

RationalPolygon dilated_triangle(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t d) {
  return dilate(triangle(herzog_data(a, b, c)), d);
}

std::int64_t interior_of(const RationalPolygon& dp) { return lattice_counts(dp).interior; }

bool touches_every_edge(const RationalPolygon& dp, const LaurentPoly& f) {
  const auto support = f.support();
  for (const auto& h : halfplanes(dp)) {
    const bool hit = std::any_of(support.begin(), support.end(), [&](const LatticePoint& x) {
      return h.normal.x() * x.x() + h.normal.y() * x.y() == h.bound;
    });
    if (!hit) return false;
  }
  return true;
}

std::uint64_t cell_seed(std::uint64_t seed, std::int64_t r, std::int64_t d) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(d)};
  std::uint32_t parts[2];
  seq.generate(parts, parts + 2);
  return (static_cast<std::uint64_t>(parts[0]) << 32) | parts[1];
}

// Interior points of the hull of dP cap Z^2; this is the polygon the curve's
// Newton polygon fills, and it can have one point fewer than dP itself.
std::int64_t hull_interior(const Support& support) {
  if (support.empty()) return 0;
  const auto hull = convex_hull(std::vector<LatticePoint>(support));
  return hull.dimension() < 2 ? 0 : lattice_counts(hull).interior;
}

}  // namespace

std::int64_t genus_payload(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r, std::int64_t d) {
  const auto support = make_support(lattice_points(dilated_triangle(a, b, c, d)));
  const std::int64_t g = hull_interior(support) - r * (r - 1) / 2;
  if (g < 0) throw Error("negative arithmetic genus: no negative curve can live at this (r, d)");
  return g;
}

std::optional<NegativeCurveReport> find(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t characteristic,
                                        std::int64_t r, std::int64_t d, const SearchOptions& options) {
  check_characteristic(characteristic);
  if (r < 1 || d < 1) throw PreconditionError("r and d must be positive");
  if (!is_negative_pair(a, b, c, r, d)) throw PreconditionError("(r, d) is not a negative pair");
  const RationalPolygon dp = dilated_triangle(a, b, c, d);
  const Support support = make_support(lattice_points(dp));
  const auto ur = static_cast<unsigned>(r);
  const auto note = [&](const std::string& s) {
    if (options.progress) options.progress(s);
  };

  NegativeCurveReport base;
  base.a = a;
  base.b = b;
  base.c = c;
  base.characteristic = characteristic;
  base.r = r;
  base.d = d;
  base.support_size = support.size();
  base.area_inequality = true;
  if (support.empty()) return std::nullopt;

  if (characteristic == 0 && options.prefilter) {
    std::mt19937_64 rng(cell_seed(options.seed, r, d));
    base.prefilter = modular_prefilter(support, ur, rng);
    if (!base.prefilter->passes()) return std::nullopt;
    note("r=" + std::to_string(r) + " d=" + std::to_string(d) + ": prefilter passed, exact kernel on " +
         std::to_string(support.size()) + " points");
  }
  const auto kernel = jet_kernel(support, ur, characteristic);
  base.kernel_dimension = kernel.size();
  if (kernel.empty()) return std::nullopt;

  base.interior_dp = interior_of(dp);
  base.interior_hull = hull_interior(support);
  base.genus = base.interior_hull - r * (r - 1) / 2;

  std::optional<NegativeCurveReport> fallback;
  for (const auto& phi : kernel) {
    if (phi.size() <= 1) continue;
    NegativeCurveReport rep = base;
    rep.phi = normalized(phi);
    rep.jet_membership = jet(rep.phi, ur).vanishes();
    rep.edges_touched = touches_every_edge(dp, rep.phi);
    if (!rep.edges_touched) continue;
    note("r=" + std::to_string(r) + " d=" + std::to_string(d) + ": certifying irreducibility");
    rep.certificate = certify(rep.phi);
    rep.irreducible = rep.certificate.irreducible();
    if (rep.accepted() || rep.conditional()) {
      rep.nct = is_nct(rep.phi, r);
      if (rep.accepted()) return rep;
      if (!fallback) fallback = std::move(rep);
    }
  }
  return fallback;
}

std::vector<NegativeCurveReport> scan(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t characteristic,
                                      std::int64_t r_max, const std::vector<std::int64_t>& degrees,
                                      const SearchOptions& options) {
  if (r_max < 1) throw PreconditionError("r_max must be positive");
  herzog_data(a, b, c);  // validates the weights
  std::vector<std::pair<std::int64_t, std::int64_t>> cells;
  for (std::int64_t r = 1; r <= r_max; ++r) {
    if (degrees.empty()) {
      for (std::int64_t d = 1; is_negative_pair(a, b, c, r, d); ++d) cells.emplace_back(r, d);
    } else {
      for (const auto d : degrees)
        if (d >= 1 && is_negative_pair(a, b, c, r, d)) cells.emplace_back(r, d);
    }
  }
  std::sort(cells.begin(), cells.end());
  cells.erase(std::unique(cells.begin(), cells.end()), cells.end());
  auto results = parallel_map<std::optional<NegativeCurveReport>>(cells.size(), options.jobs, [&](std::size_t i) {
    return find(a, b, c, characteristic, cells[i].first, cells[i].second, options);
  });
  std::vector<NegativeCurveReport> out;
  for (auto& r : results)
    if (r) out.push_back(std::move(*r));
  return out;
}

}  // namespace negcurve
