#include "negcurve/toric.hpp"

#include <algorithm>
#include <numeric>

namespace negcurve {

namespace {

int half(const LatticePoint& p) { return (p.y() < 0 || (p.y() == 0 && p.x() < 0)) ? 1 : 0; }

bool angle_less(const LatticePoint& p, const LatticePoint& q) {
  const int hp = half(p), hq = half(q);
  if (hp != hq) return hp < hq;
  return cross<std::int64_t>(p, q) > 0;
}

Rational det_q(const LatticePoint& u, const LatticePoint& v) { return Rational(cross<std::int64_t>(u, v)); }

}  // namespace

bool Fan2D::is_smooth() const {
  for (std::size_t i = 0; i < size(); ++i)
    if (det(i) != 1) return false;
  return true;
}

Fan2D make_fan(const std::vector<LatticePoint>& input) {
  if (input.size() < 3) throw PreconditionError("a complete fan needs at least three rays");
  std::vector<LatticePoint> rays;
  for (const auto& v : input) {
    if (v.isZero()) throw PreconditionError("zero ray");
    rays.push_back(primitive(v));
  }
  const LatticePoint first = rays.front();
  std::sort(rays.begin(), rays.end(), angle_less);
  for (std::size_t i = 0; i + 1 < rays.size(); ++i)
    if (rays[i] == rays[i + 1]) throw PreconditionError("repeated ray");
  std::rotate(rays.begin(), std::find(rays.begin(), rays.end(), first), rays.end());
  Fan2D fan{rays};
  for (std::size_t i = 0; i < fan.size(); ++i)
    if (fan.det(i) <= 0) throw PreconditionError("rays do not span a complete fan");
  return fan;
}

template <typename T>
Fan2D normal_fan(const Polygon<T>& p) {
  if (p.dimension() < 2) throw GeometryError(GeometryError::Kind::Degenerate, "normal fan of a degenerate polygon");
  Fan2D fan;
  for (const auto& h : halfplanes(p)) {
    const Rational x(h.normal.x()), y(h.normal.y());
    fan.rays.emplace_back(to_int64(numerator(x)), to_int64(numerator(y)));
  }
  return fan;
}

template Fan2D normal_fan(const IntegralPolygon&);
template Fan2D normal_fan(const RationalPolygon&);

// ---------------------------------------------------------------------------

ClassGroup class_group(const IntMatrix& rays) {
  const SmithForm snf = smith_normal_form(rays);
  const Eigen::Index n = rays.rows();
  const auto rank = static_cast<Eigen::Index>(snf.factors.size());
  ClassGroup cg;
  cg.free_rank = static_cast<std::size_t>(n - rank);
  std::vector<IntMatrix> rows;
  for (Eigen::Index i = rank; i < n; ++i) rows.push_back(snf.left.row(i));
  for (Eigen::Index i = 0; i < rank; ++i) {
    const Integer& d = snf.factors[static_cast<std::size_t>(i)];
    if (d == 1) continue;
    cg.torsion.push_back(d);
    IntMatrix row = snf.left.row(i);
    for (Eigen::Index j = 0; j < n; ++j) {
      Integer m = row(0, j) % d;
      if (m < 0) m += d;
      row(0, j) = m;
    }
    rows.push_back(row);
  }
  cg.grading = IntMatrix::Zero(static_cast<Eigen::Index>(rows.size()), n);
  for (std::size_t k = 0; k < rows.size(); ++k) cg.grading.row(static_cast<Eigen::Index>(k)) = rows[k];
  return cg;
}

ClassGroup class_group(const Fan2D& fan) {
  IntMatrix m(static_cast<Eigen::Index>(fan.size()), 2);
  for (std::size_t i = 0; i < fan.size(); ++i) {
    m(static_cast<Eigen::Index>(i), 0) = fan.rays[i].x();
    m(static_cast<Eigen::Index>(i), 1) = fan.rays[i].y();
  }
  return class_group(m);
}

// ---------------------------------------------------------------------------

Rational IntersectionTable::pairing(std::size_t i, std::size_t j) const {
  const std::size_t n = self.size();
  i %= n;
  j %= n;
  if (i == j) return self[i];
  if ((i + 1) % n == j) return adjacent[i];
  if ((j + 1) % n == i) return adjacent[j];
  return 0;
}

IntersectionTable intersection_numbers(const Fan2D& fan) {
  const std::size_t n = fan.size();
  IntersectionTable t;
  t.self.resize(n);
  t.adjacent.resize(n);
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint& prev = fan.ray(i + n - 1);
    const LatticePoint& cur = fan.ray(i);
    const LatticePoint& next = fan.ray(i + 1);
    t.adjacent[i] = Rational(1) / det_q(cur, next);
    t.self[i] = -det_q(prev, next) / (det_q(prev, cur) * det_q(cur, next));
  }
  t.canonical_square = 0;
  for (std::size_t i = 0; i < n; ++i) t.canonical_square += t.self[i] + 2 * t.adjacent[i];
  return t;
}

RationalPolygon minus_k_polygon(const Fan2D& fan) {
  std::vector<HalfPlane<Rational>> hs;
  for (const auto& a : fan.rays) hs.push_back({RationalPoint(Rational(a.x()), Rational(a.y())), Rational(-1)});
  return halfplane_polygon(hs);
}

Refinement smooth_refine(const Fan2D& input) {
  Refinement out;
  out.fan = input;
  auto& rays = out.fan.rays;
  const auto product = [&]() {
    Integer p = 1;
    for (std::size_t i = 0; i < out.fan.size(); ++i) p *= out.fan.det(i);
    return p;
  };
  out.det_products.push_back(product());
  for (std::size_t i = 0; i < rays.size();) {
    const LatticePoint a = rays[i];
    const LatticePoint b = rays[(i + 1) % rays.size()];
    const std::int64_t d = cross<std::int64_t>(a, b);
    if (d == 1) {
      ++i;
      continue;
    }
    std::int64_t x = 0, y = 0;
    ext_gcd(a.x(), a.y(), x, y);
    const LatticePoint f(-y, x);  // det(a, f) = 1
    const std::int64_t m = cross<std::int64_t>(f, b);
    // shift f by multiples of a so that det(g, b) lies in [1, d - 1]
    std::int64_t k = 1 - m;
    k = (k >= 0) ? (k + d - 1) / d : -((-k) / d);
    const LatticePoint g = f + k * a;
    rays.insert(rays.begin() + static_cast<std::ptrdiff_t>(i) + 1, g);
    out.det_products.push_back(product());
  }
  return out;
}

Rational smooth_canonical_square(const Fan2D& fan) {
  const std::size_t n = fan.size();
  Rational k2 = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint s = fan.ray(i + n - 1) + fan.ray(i + 1);
    const LatticePoint& a = fan.ray(i);
    // s = k a
    const std::int64_t k = a.x() != 0 ? s.x() / a.x() : s.y() / a.y();
    k2 += Rational(-k) + 2;
  }
  return k2;
}

Rational pullback_canonical_square(const Fan2D& original, const Fan2D& refined) {
  const std::size_t n = refined.size();
  std::vector<Rational> psi(n);
  for (std::size_t j = 0; j < n; ++j) {
    const LatticePoint& rho = refined.ray(j);
    bool found = false;
    for (std::size_t i = 0; i < original.size() && !found; ++i) {
      const LatticePoint& a = original.ray(i);
      const LatticePoint& b = original.ray(i + 1);
      if (cross<std::int64_t>(a, rho) < 0 || cross<std::int64_t>(rho, b) < 0) continue;
      const Rational d = det_q(a, b);
      psi[j] = (det_q(rho, b) + det_q(a, rho)) / d;
      found = true;
    }
    if (!found) throw PreconditionError("refinement ray outside the original fan");
  }
  Rational sq = 0;
  for (std::size_t j = 0; j < n; ++j) {
    const LatticePoint s = refined.ray(j + n - 1) + refined.ray(j + 1);
    const LatticePoint& a = refined.ray(j);
    const std::int64_t k = a.x() != 0 ? s.x() / a.x() : s.y() / a.y();
    sq += psi[j] * psi[j] * Rational(-k) + 2 * psi[j] * psi[(j + 1) % n];
  }
  return sq;
}

// ---------------------------------------------------------------------------

BlowupNumbers blowup_numbers(const IntegralPolygon& p, std::int64_t r) {
  if (r < 1) throw PreconditionError("multiplicity must be positive");
  if (p.dimension() < 2) throw GeometryError(GeometryError::Kind::Degenerate, "blow-up numbers need a 2-dimensional polygon");
  const Rational a2 = area2(p);
  const LatticeCounts counts = lattice_counts(p);
  const Rational rq(r);
  BlowupNumbers b;
  b.c_squared = a2 - rq * rq;
  b.c_dot_e = rq;
  b.e_squared = -1;
  b.c_dot_minus_k = Rational(counts.boundary) - rq;
  b.minus_k_x_squared = intersection_numbers(normal_fan(p)).canonical_square;
  b.minus_k_y_squared = b.minus_k_x_squared - 1;
  b.adjunction = Rational(2 * counts.interior - r * (r - 1));
  return b;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::True:
      return "True";
    case Status::False:
      return "False";
    case Status::ImpliedTrue:
      return "ImpliedTrue";
    case Status::ImpliedFalse:
      return "ImpliedFalse";
    case Status::Unknown:
      return "Unknown";
  }
  return "Unknown";
}

const std::vector<std::pair<int, int>>& implication_edges() {
  static const std::vector<std::pair<int, int>> edges = {
      {1, 2}, {1, 3}, {2, 7}, {3, 4}, {4, 5}, {5, 6}, {5, 8}, {6, 10},
      {7, 8}, {8, 9}, {9, 8}, {8, 10}, {11, 9},
  };
  return edges;
}

namespace {

bool holds(Status s) { return s == Status::True || s == Status::ImpliedTrue; }
bool fails(Status s) { return s == Status::False || s == Status::ImpliedFalse; }

std::string edge_text(int x, int y) { return "(" + std::to_string(x) + ")=>(" + std::to_string(y) + ")"; }

void close_under_diagram(Thm36Report& rep) {
  bool changed = true;
  while (changed) {
    changed = false;
    for (const auto& [x, y] : implication_edges()) {
      auto& cx = rep.conditions[static_cast<std::size_t>(x)];
      auto& cy = rep.conditions[static_cast<std::size_t>(y)];
      if (holds(cx.status)) {
        if (fails(cy.status))
          throw DiagramContradiction("condition (" + std::to_string(x) + ") holds but (" + std::to_string(y) +
                                     ") fails, contradicting " + edge_text(x, y));
        if (cy.status == Status::Unknown) {
          cy = {Status::ImpliedTrue, "implied by " + edge_text(x, y)};
          changed = true;
        }
      }
      if (fails(cy.status) && cx.status == Status::Unknown) {
        cx = {Status::ImpliedFalse, "fails since " + edge_text(x, y) + " and (" + std::to_string(y) + ") fails"};
        changed = true;
      }
    }
  }
}

ConditionStatus computed(bool value, const std::string& why) {
  return {value ? Status::True : Status::False, "computed: " + why};
}

}  // namespace

Thm36Report thm36_report(const IntegralPolygon& p, std::int64_t r, std::uint64_t characteristic) {
  Thm36Report rep;
  rep.characteristic = characteristic;
  rep.r = r;
  rep.numbers = blowup_numbers(p, r);
  rep.area2 = area2(p);
  const LatticeCounts counts = lattice_counts(p);
  rep.boundary = counts.boundary;
  rep.interior = counts.interior;
  const Fan2D fan = normal_fan(p);
  rep.ray_count = fan.size();
  const RationalPolygon pk = minus_k_polygon(fan);
  rep.minus_k_area2 = area2(pk);

  rep.refined_minus_k_x_squared = pullback_canonical_square(fan, smooth_refine(fan).fan);
  if (rep.refined_minus_k_x_squared != rep.numbers.minus_k_x_squared)
    throw Error("anticanonical square disagrees with its smooth-refinement value");

  for (auto& c : rep.conditions) c = {Status::Unknown, "not decided"};
  rep.conditions[0] = {Status::Unknown, "unused"};

  rep.conditions[3] = computed(rep.numbers.minus_k_y_squared > 0, "(-K_Y)^2 = " + to_string(rep.numbers.minus_k_y_squared));
  rep.conditions[4] = computed(rep.minus_k_area2 > 1, "area2(P_-K) = " + to_string(rep.minus_k_area2));
  rep.conditions[7] = computed(counts.boundary >= r, "B = " + std::to_string(counts.boundary));
  rep.conditions[9] = computed(counts.interior == r * (r - 1) / 2, "I = " + std::to_string(counts.interior));
  if (fan.size() == 3) {
    // Picard rank 2: the curve cone is spanned by E and C, E.(-K_Y) = 1 and
    // C.(-K_Y) = B - r.
    const bool nef = rep.numbers.c_dot_minus_k >= 0;
    rep.conditions[2] = computed(nef, "Picard rank 2, C.(-K_Y) = " + to_string(rep.numbers.c_dot_minus_k));
    rep.conditions[1] = computed(nef && rep.numbers.minus_k_y_squared > 0, "nef and (-K_Y)^2 > 0 in Picard rank 2");
  }
  if (characteristic > 0) rep.conditions[10] = {Status::ImpliedTrue, "positive characteristic"};
  close_under_diagram(rep);
  return rep;
}

Thm36Report thm36_report(const LaurentPoly& f, std::int64_t r) {
  return thm36_report(newton_polygon(f), r, f.characteristic());
}

}  // namespace negcurve
