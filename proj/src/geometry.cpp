#include "negcurve/geometry.hpp"

#include <algorithm>
#include <map>
#include <numeric>

namespace negcurve {

namespace {

std::int64_t floor_div64(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

std::int64_t ceil_div64(std::int64_t a, std::int64_t b) { return -floor_div64(-a, b); }

// floor/ceil of a/b for both coordinate kinds
std::int64_t floor_quot(std::int64_t a, std::int64_t b) { return floor_div64(a, b); }
std::int64_t ceil_quot(std::int64_t a, std::int64_t b) { return ceil_div64(a, b); }
std::int64_t floor_quot(const Rational& a, const Rational& b) { return to_int64(floor(Rational(a / b))); }
std::int64_t ceil_quot(const Rational& a, const Rational& b) { return to_int64(ceil(Rational(a / b))); }

std::int64_t floor_value(std::int64_t a) { return a; }
std::int64_t ceil_value(std::int64_t a) { return a; }
std::int64_t floor_value(const Rational& a) { return to_int64(floor(a)); }
std::int64_t ceil_value(const Rational& a) { return to_int64(ceil(a)); }

bool is_integral(std::int64_t) { return true; }
bool is_integral(const Rational& q) { return denominator(q) == 1; }

template <typename T>
Point<T> lift(const LatticePoint& p) {
  return Point<T>(T(p.x()), T(p.y()));
}

Point<std::int64_t> primitive_normal(const Point<std::int64_t>& e) { return primitive(LatticePoint(-e.y(), e.x())); }

Point<Rational> primitive_normal(const Point<Rational>& e) {
  Integer l = 1;
  for (const Rational* c : {&e.x(), &e.y()}) {
    const Integer& d = denominator(*c);
    mpz_lcm(l.backend().data(), l.backend().data(), d.backend().data());
  }
  Integer nx = -numerator(e.y()) * (l / denominator(e.y()));
  Integer ny = numerator(e.x()) * (l / denominator(e.x()));
  Integer g = gcd(nx, ny);
  if (g != 0) {
    nx /= g;
    ny /= g;
  }
  return Point<Rational>(Rational(nx), Rational(ny));
}

template <typename T>
Polygon<T> hull_impl(std::vector<Point<T>> pts) {
  if (pts.empty()) throw GeometryError(GeometryError::Kind::Empty, "convex hull of an empty point set");
  std::sort(pts.begin(), pts.end(), LexLess{});
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  if (pts.size() == 1) return Polygon<T>{pts};
  std::vector<Point<T>> h(2 * pts.size());
  std::size_t k = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    while (k >= 2 && cross<T>(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  for (std::size_t i = pts.size() - 1, t = k + 1; i-- > 0;) {
    while (k >= t && cross<T>(h[k - 1] - h[k - 2], pts[i] - h[k - 2]) <= 0) --k;
    h[k++] = pts[i];
  }
  h.resize(k - 1);
  if (h.size() < 3) return Polygon<T>{{pts.front(), pts.back()}};
  return Polygon<T>{std::move(h)};
}

}  // namespace

LatticePoint primitive(const LatticePoint& v) {
  const std::int64_t g = std::gcd(v.x(), v.y());
  if (g == 0) return v;
  return LatticePoint(v.x() / g, v.y() / g);
}

std::int64_t lattice_length(const LatticePoint& v) { return std::gcd(v.x(), v.y()); }

IntegralPolygon convex_hull(std::vector<LatticePoint> points) { return hull_impl(std::move(points)); }
RationalPolygon convex_hull(std::vector<RationalPoint> points) { return hull_impl(std::move(points)); }

RationalPolygon to_rational(const IntegralPolygon& p) {
  RationalPolygon q;
  for (const auto& v : p.vertices) q.vertices.push_back(lift<Rational>(v));
  return q;
}

IntegralPolygon to_integral(const RationalPolygon& p) {
  IntegralPolygon q;
  for (const auto& v : p.vertices) {
    if (!is_integral(v.x()) || !is_integral(v.y()))
      throw GeometryError(GeometryError::Kind::Degenerate, "polygon has a non-integral vertex");
    q.vertices.emplace_back(to_int64(numerator(v.x())), to_int64(numerator(v.y())));
  }
  return q;
}

template <typename T>
Rational area2(const Polygon<T>& p) {
  if (p.dimension() < 2) return 0;
  T s = 0;
  for (std::size_t i = 0; i < p.size(); ++i) s += cross<T>(p.vertex(i), p.vertex(i + 1));
  return Rational(s);
}

template <typename T>
std::vector<HalfPlane<T>> halfplanes(const Polygon<T>& p) {
  if (p.dimension() < 2) throw GeometryError(GeometryError::Kind::Degenerate, "half-planes of a degenerate polygon");
  std::vector<HalfPlane<T>> out;
  out.reserve(p.size());
  for (std::size_t i = 0; i < p.size(); ++i) {
    const Point<T> n = primitive_normal(Point<T>(p.vertex(i + 1) - p.vertex(i)));
    out.push_back({n, T(n.dot(p.vertex(i)))});
  }
  return out;
}

template <typename T>
bool contains(const Polygon<T>& p, const Point<T>& x) {
  switch (p.dimension()) {
    case 0:
      return p.vertices[0] == x;
    case 1: {
      const Point<T>& a = p.vertices[0];
      const Point<T>& b = p.vertices[1];
      if (cross<T>(b - a, x - a) != 0) return false;
      return !lex_less(x, a) && !lex_less(b, x);
    }
    default:
      for (std::size_t i = 0; i < p.size(); ++i)
        if (cross<T>(p.vertex(i + 1) - p.vertex(i), x - p.vertex(i)) < 0) return false;
      return true;
  }
}

template <typename T>
bool on_boundary(const Polygon<T>& p, const Point<T>& x) {
  if (!contains(p, x)) return false;
  if (p.dimension() < 2) return true;
  for (std::size_t i = 0; i < p.size(); ++i)
    if (cross<T>(p.vertex(i + 1) - p.vertex(i), x - p.vertex(i)) == 0) return true;
  return false;
}

template <typename T>
std::vector<LatticePoint> lattice_points(const Polygon<T>& p) {
  std::vector<LatticePoint> out;
  if (p.dimension() == 0) {
    const auto& v = p.vertices[0];
    if (is_integral(v.x()) && is_integral(v.y())) out.emplace_back(floor_value(v.x()), floor_value(v.y()));
    return out;
  }
  if (p.dimension() == 1) {
    const Point<T>& a = p.vertices[0];
    const Point<T>& b = p.vertices[1];
    const Point<T> d = b - a;
    if (d.x() != 0) {
      for (std::int64_t x = ceil_value(a.x()); x <= floor_value(b.x()); ++x) {
        const Rational y = Rational(a.y()) + (Rational(x) - Rational(a.x())) * Rational(d.y()) / Rational(d.x());
        if (denominator(y) == 1) out.emplace_back(x, to_int64(numerator(y)));
      }
    } else {
      if (!is_integral(a.x())) return out;
      const std::int64_t x = floor_value(a.x());
      for (std::int64_t y = ceil_value(a.y()); y <= floor_value(b.y()); ++y) out.emplace_back(x, y);
    }
    return out;
  }
  const auto hps = halfplanes(p);
  T ylo = p.vertices[0].y(), yhi = p.vertices[0].y();
  for (const auto& v : p.vertices) {
    ylo = std::min(ylo, v.y());
    yhi = std::max(yhi, v.y());
  }
  for (std::int64_t y = ceil_value(ylo); y <= floor_value(yhi); ++y) {
    bool bounded_lo = false, bounded_hi = false, empty = false;
    std::int64_t lo = 0, hi = 0;
    for (const auto& h : hps) {
      const T rhs = h.bound - h.normal.y() * T(y);
      if (h.normal.x() > 0) {
        const std::int64_t v = ceil_quot(rhs, h.normal.x());
        lo = bounded_lo ? std::max(lo, v) : v;
        bounded_lo = true;
      } else if (h.normal.x() < 0) {
        const std::int64_t v = floor_quot(rhs, h.normal.x());
        hi = bounded_hi ? std::min(hi, v) : v;
        bounded_hi = true;
      } else if (rhs > 0) {
        empty = true;
      }
    }
    if (empty || !bounded_lo || !bounded_hi) continue;
    for (std::int64_t x = lo; x <= hi; ++x) out.emplace_back(x, y);
  }
  std::sort(out.begin(), out.end(), LexLess{});
  return out;
}

template <typename T>
LatticeCounts lattice_counts(const Polygon<T>& p) {
  LatticeCounts c;
  const auto pts = lattice_points(p);
  c.total = static_cast<std::int64_t>(pts.size());
  if (p.dimension() < 2) {
    c.boundary = c.total;
    return c;
  }
  for (const auto& x : pts)
    if (on_boundary(p, lift<T>(x))) ++c.boundary;
  c.interior = c.total - c.boundary;
  return c;
}

template <>
LatticeCounts lattice_counts(const IntegralPolygon& p) {
  LatticeCounts c;
  if (p.dimension() < 2) {
    c.total = static_cast<std::int64_t>(lattice_points(p).size());
    c.boundary = c.total;
    return c;
  }
  for (std::size_t i = 0; i < p.size(); ++i) c.boundary += lattice_length(LatticePoint(p.vertex(i + 1) - p.vertex(i)));
  // Pick: area2 = B + 2I - 2
  const std::int64_t a2 = to_int64(numerator(area2(p)));
  c.interior = (a2 - c.boundary + 2) / 2;
  c.total = c.boundary + c.interior;
  return c;
}

template <typename T>
Polygon<T> dilate(const Polygon<T>& p, std::int64_t d) {
  if (d <= 0) throw PreconditionError("dilation factor must be positive");
  Polygon<T> q = p;
  for (auto& v : q.vertices) v *= T(d);
  return q;
}

RationalPolygon halfplane_polygon(const std::vector<HalfPlane<Rational>>& cs) {
  bool any_normal = false;
  for (const auto& h : cs) any_normal = any_normal || !h.normal.isZero();
  if (!any_normal) throw GeometryError(GeometryError::Kind::Unbounded, "half-plane system has no bounding normal");
  for (const auto& h : cs) {
    if (h.normal.isZero()) {
      if (h.bound > 0) throw GeometryError(GeometryError::Kind::Empty, "infeasible constraint 0 >= positive");
      continue;
    }
    for (int sign : {1, -1}) {
      const RationalPoint d(Rational(-sign) * h.normal.y(), Rational(sign) * h.normal.x());
      bool recedes = true;
      for (const auto& g : cs)
        if (g.normal.dot(d) < 0) {
          recedes = false;
          break;
        }
      if (recedes) throw GeometryError(GeometryError::Kind::Unbounded, "half-plane intersection is empty or unbounded");
    }
  }
  const auto feasible = [&](const RationalPoint& x) {
    return std::all_of(cs.begin(), cs.end(), [&](const auto& g) { return g.normal.dot(x) >= g.bound; });
  };
  std::vector<RationalPoint> corners;
  for (std::size_t i = 0; i < cs.size(); ++i) {
    for (std::size_t j = i + 1; j < cs.size(); ++j) {
      const auto& n1 = cs[i].normal;
      const auto& n2 = cs[j].normal;
      const Rational det = cross<Rational>(n1, n2);
      if (det == 0) continue;
      const Rational c1 = cs[i].bound, c2 = cs[j].bound;
      RationalPoint x((c1 * n2.y() - c2 * n1.y()) / det, (n1.x() * c2 - n2.x() * c1) / det);
      if (feasible(x)) corners.push_back(std::move(x));
    }
  }
  if (corners.empty()) throw GeometryError(GeometryError::Kind::Empty, "half-plane intersection is empty");
  return convex_hull(std::move(corners));
}

std::int64_t max_collinear(const IntegralPolygon& p) {
  const auto pts = lattice_points(p);
  const auto n = static_cast<std::int64_t>(pts.size());
  if (n <= 2) return n;
  std::int64_t best = 2;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> dirs;
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      // lexicographic order makes every difference point "forward"
      const LatticePoint d = primitive(LatticePoint(pts[j] - pts[i]));
      best = std::max(best, 1 + ++dirs[{d.x(), d.y()}]);
    }
  }
  return best;
}

// ---------------------------------------------------------------------------

LatticePoint UnimodularAffineMap::operator()(const LatticePoint& x) const {
  return LatticePoint(x.x() * matrix(0, 0) + x.y() * matrix(1, 0) + translation.x(),
                      x.x() * matrix(0, 1) + x.y() * matrix(1, 1) + translation.y());
}

std::int64_t UnimodularAffineMap::det() const { return matrix(0, 0) * matrix(1, 1) - matrix(0, 1) * matrix(1, 0); }

UnimodularAffineMap UnimodularAffineMap::then(const UnimodularAffineMap& other) const {
  UnimodularAffineMap out;
  out.matrix = matrix * other.matrix;
  out.translation = other(translation);
  return out;
}

IntegralPolygon transform(const IntegralPolygon& p, const UnimodularAffineMap& map) {
  std::vector<LatticePoint> img;
  img.reserve(p.size());
  for (const auto& v : p.vertices) img.push_back(map(v));
  return convex_hull(std::move(img));
}

UnimodularAffineMap flag_normalizer(const IntegralPolygon& p, std::size_t i, bool forward) {
  if (p.dimension() < 2) throw GeometryError(GeometryError::Kind::Degenerate, "flag of a degenerate polygon");
  const std::size_t n = p.size();
  const LatticePoint v = p.vertex(i);
  const LatticePoint w = forward ? p.vertex(i + 1) : p.vertex(i + n - 1);
  const LatticePoint o = forward ? p.vertex(i + n - 1) : p.vertex(i + 1);
  const LatticePoint e = primitive(LatticePoint(w - v));
  const std::int64_t s = forward ? 1 : -1;
  std::int64_t gx = 0, gy = 0;
  ext_gcd(e.x(), e.y(), gx, gy);
  const LatticePoint f(-gy * s, gx * s);  // cross(e, f) = s
  // column action A = [e f]^{-1}
  Eigen::Matrix<std::int64_t, 2, 2> a;
  a << f.y() * s, -f.x() * s, -e.y() * s, e.x() * s;
  const LatticePoint oi = a * LatticePoint(o - v);
  const std::int64_t shear = -floor_div64(oi.x(), oi.y());
  Eigen::Matrix<std::int64_t, 2, 2> sh;
  sh << 1, shear, 0, 1;
  const Eigen::Matrix<std::int64_t, 2, 2> col = sh * a;
  UnimodularAffineMap m;
  m.matrix = col.transpose();
  m.translation = -(col * v);
  return m;
}

std::vector<UnimodularAffineMap> flag_normalizers(const IntegralPolygon& p) {
  std::vector<UnimodularAffineMap> out;
  for (std::size_t i = 0; i < p.size(); ++i) {
    out.push_back(flag_normalizer(p, i, true));
    out.push_back(flag_normalizer(p, i, false));
  }
  return out;
}

template <typename T>
bool in_omega(const Point<T>& x, std::int64_t r) {
  const T r2 = T(r) * T(r);
  if (x.y() < 0 || x.y() > r2 || x.x() < 0) return false;
  const T t = x.x() - x.y();
  return t <= 0 || t * t <= T(2) * r2 * r2;
}

std::pair<IntegralPolygon, UnimodularAffineMap> normalize(const IntegralPolygon& p, std::int64_t r) {
  if (p.dimension() < 2) throw GeometryError(GeometryError::Kind::Degenerate, "normalize needs a 2-dimensional polygon");
  if (area2(p) >= Rational(r * r)) throw PreconditionError("normalize needs area2 < r^2");
  const UnimodularAffineMap m = flag_normalizer(p, 0, true);
  IntegralPolygon q = transform(p, m);
  for (const auto& v : q.vertices)
    if (!in_omega(v, r)) throw PreconditionError("normalized polygon leaves the bounding quadrilateral");
  return {std::move(q), m};
}

IntegralPolygon minkowski_sum(const IntegralPolygon& p, const IntegralPolygon& q) {
  std::vector<LatticePoint> pts;
  pts.reserve(p.size() * q.size());
  for (const auto& a : p.vertices)
    for (const auto& b : q.vertices) pts.push_back(a + b);
  return convex_hull(std::move(pts));
}

std::vector<std::pair<LatticePoint, std::int64_t>> primitive_edges(const IntegralPolygon& p) {
  std::vector<std::pair<LatticePoint, std::int64_t>> out;
  if (p.dimension() == 0) return out;
  const std::size_t n = p.dimension() == 1 ? 2 : p.size();
  for (std::size_t i = 0; i < n; ++i) {
    const LatticePoint e = p.vertex(i + 1) - p.vertex(i);
    out.emplace_back(primitive(e), lattice_length(e));
  }
  return out;
}

namespace {

class DecompositionSearch {
 public:
  explicit DecompositionSearch(const IntegralPolygon& p) : edges_(primitive_edges(p)) {
    const std::size_t n = edges_.size();
    lo_.assign(n + 1, LatticePoint::Zero());
    hi_.assign(n + 1, LatticePoint::Zero());
    for (std::size_t i = n; i-- > 0;) {
      const LatticePoint full = edges_[i].first * edges_[i].second;
      lo_[i] = lo_[i + 1] + full.cwiseMin(LatticePoint::Zero());
      hi_[i] = hi_[i + 1] + full.cwiseMax(LatticePoint::Zero());
    }
    choice_.assign(n, 0);
  }

  template <typename Visit>
  void run(Visit&& visit) {
    stop_ = false;
    recurse(0, LatticePoint::Zero(), visit);
  }

  const std::vector<std::pair<LatticePoint, std::int64_t>>& edges() const { return edges_; }

 private:
  template <typename Visit>
  void recurse(std::size_t i, const LatticePoint& sum, Visit& visit) {
    if (stop_) return;
    if (i == edges_.size()) {
      if (!sum.isZero()) return;
      bool all_zero = true, all_full = true, smaller = false, decided = false;
      for (std::size_t j = 0; j < edges_.size(); ++j) {
        all_zero = all_zero && choice_[j] == 0;
        all_full = all_full && choice_[j] == edges_[j].second;
        const std::int64_t comp = edges_[j].second - choice_[j];
        if (!decided && choice_[j] != comp) {
          smaller = choice_[j] < comp;
          decided = true;
        }
      }
      // a split equal to its complement (2Q = Q + Q) is kept once
      if (all_zero || all_full || (decided && !smaller)) return;
      if (visit(choice_)) stop_ = true;
      return;
    }
    for (std::int64_t k = 0; k <= edges_[i].second; ++k) {
      const LatticePoint next = sum + edges_[i].first * k;
      const LatticePoint rest = -next;
      if ((rest.array() < lo_[i + 1].array()).any() || (rest.array() > hi_[i + 1].array()).any()) continue;
      choice_[i] = k;
      recurse(i + 1, next, visit);
      if (stop_) return;
    }
    choice_[i] = 0;
  }

  std::vector<std::pair<LatticePoint, std::int64_t>> edges_;
  std::vector<LatticePoint> lo_, hi_;
  std::vector<std::int64_t> choice_;
  bool stop_ = false;
};

IntegralPolygon walk(const std::vector<std::pair<LatticePoint, std::int64_t>>& edges,
                     const std::vector<std::int64_t>& k) {
  std::vector<LatticePoint> pts{LatticePoint::Zero()};
  LatticePoint cur = LatticePoint::Zero();
  for (std::size_t j = 0; j < edges.size(); ++j) {
    cur += edges[j].first * k[j];
    pts.push_back(cur);
  }
  return convex_hull(std::move(pts));
}

IntegralPolygon translate(IntegralPolygon p, const LatticePoint& t) {
  for (auto& v : p.vertices) v += t;
  return p;
}

LatticePoint lexmin(const IntegralPolygon& p) {
  return *std::min_element(p.vertices.begin(), p.vertices.end(), LexLess{});
}

}  // namespace

std::vector<std::pair<IntegralPolygon, IntegralPolygon>> minkowski_decompositions(const IntegralPolygon& p) {
  if (p.dimension() < 2) throw GeometryError(GeometryError::Kind::Degenerate, "decompositions need dimension 2");
  DecompositionSearch search(p);
  std::vector<std::pair<IntegralPolygon, IntegralPolygon>> out;
  const LatticePoint base = lexmin(p);
  search.run([&](const std::vector<std::int64_t>& k) {
    std::vector<std::int64_t> comp(k.size());
    for (std::size_t j = 0; j < k.size(); ++j) comp[j] = search.edges()[j].second - k[j];
    IntegralPolygon q1 = walk(search.edges(), k);
    IntegralPolygon q2 = walk(search.edges(), comp);
    q1 = translate(q1, base - lexmin(q1));
    q2 = translate(q2, -lexmin(q2));
    out.emplace_back(std::move(q1), std::move(q2));
    return false;
  });
  return out;
}

bool is_decomposable(const IntegralPolygon& p) {
  if (p.dimension() == 0) return false;
  if (p.dimension() == 1) return lattice_length(LatticePoint(p.vertices[1] - p.vertices[0])) > 1;
  DecompositionSearch search(p);
  bool found = false;
  search.run([&](const std::vector<std::int64_t>&) {
    found = true;
    return true;
  });
  return found;
}

template Rational area2(const IntegralPolygon&);
template Rational area2(const RationalPolygon&);
template std::vector<HalfPlane<std::int64_t>> halfplanes(const IntegralPolygon&);
template std::vector<HalfPlane<Rational>> halfplanes(const RationalPolygon&);
template bool contains(const IntegralPolygon&, const LatticePoint&);
template bool contains(const RationalPolygon&, const RationalPoint&);
template bool on_boundary(const IntegralPolygon&, const LatticePoint&);
template bool on_boundary(const RationalPolygon&, const RationalPoint&);
template std::vector<LatticePoint> lattice_points(const IntegralPolygon&);
template std::vector<LatticePoint> lattice_points(const RationalPolygon&);
template LatticeCounts lattice_counts(const RationalPolygon&);
template IntegralPolygon dilate(const IntegralPolygon&, std::int64_t);
template RationalPolygon dilate(const RationalPolygon&, std::int64_t);
template bool in_omega(const LatticePoint&, std::int64_t);
template bool in_omega(const RationalPoint&, std::int64_t);

}  // namespace negcurve
