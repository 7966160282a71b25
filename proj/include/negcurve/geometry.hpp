#pragma once

// Exact plane geometry over Z^2 and Q^2.
//
// Points are Eigen 2-vectors.  A polygon keeps its vertices counterclockwise
// without collinear triples; a hull of collinear input is kept as a segment
// (two endpoints, lexicographically ordered) and a single point as itself.

#include "negcurve/exact.hpp"

#include <array>
#include <cstdint>
#include <utility>
#include <vector>

namespace negcurve {

template <typename T>
using Point = Eigen::Matrix<T, 2, 1>;
using LatticePoint = Point<std::int64_t>;
using RationalPoint = Point<Rational>;

inline LatticePoint lattice_point(std::int64_t a, std::int64_t b) { return LatticePoint(a, b); }

template <typename T>
bool lex_less(const Point<T>& p, const Point<T>& q) {
  return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
}

struct LexLess {
  template <typename T>
  bool operator()(const Point<T>& p, const Point<T>& q) const {
    return lex_less(p, q);
  }
};

template <typename T>
T cross(const Point<T>& u, const Point<T>& v) {
  return u.x() * v.y() - u.y() * v.x();
}

/// Divides by the gcd of the coordinates; the zero vector is returned as is.
LatticePoint primitive(const LatticePoint& v);
std::int64_t lattice_length(const LatticePoint& v);

class GeometryError : public Error {
 public:
  enum class Kind { Empty, Unbounded, Degenerate };
  GeometryError(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

template <typename T>
struct Polygon {
  std::vector<Point<T>> vertices;

  int dimension() const { return vertices.size() >= 3 ? 2 : static_cast<int>(vertices.size()) - 1; }
  std::size_t size() const { return vertices.size(); }
  const Point<T>& vertex(std::size_t i) const { return vertices[i % vertices.size()]; }
  bool operator==(const Polygon& o) const { return vertices == o.vertices; }
};

using IntegralPolygon = Polygon<std::int64_t>;
using RationalPolygon = Polygon<Rational>;

/// Inequality normal . x >= bound.
template <typename T>
struct HalfPlane {
  Point<T> normal;
  T bound;
};

struct LatticeCounts {
  std::int64_t total = 0;
  std::int64_t boundary = 0;
  std::int64_t interior = 0;
};

IntegralPolygon convex_hull(std::vector<LatticePoint> points);
RationalPolygon convex_hull(std::vector<RationalPoint> points);

RationalPolygon to_rational(const IntegralPolygon& p);
/// Throws GeometryError unless every vertex is integral.
IntegralPolygon to_integral(const RationalPolygon& p);

/// Twice the area (shoelace); zero for points and segments.
template <typename T>
Rational area2(const Polygon<T>& p);

/// Edge inequalities of a 2-dimensional polygon, one per edge in vertex order.
/// Normals are primitive integer vectors pointing inward.
template <typename T>
std::vector<HalfPlane<T>> halfplanes(const Polygon<T>& p);

template <typename T>
bool contains(const Polygon<T>& p, const Point<T>& x);
template <typename T>
bool on_boundary(const Polygon<T>& p, const Point<T>& x);

/// All lattice points of p in lexicographic order.
template <typename T>
std::vector<LatticePoint> lattice_points(const Polygon<T>& p);

template <typename T>
LatticeCounts lattice_counts(const Polygon<T>& p);

template <typename T>
Polygon<T> dilate(const Polygon<T>& p, std::int64_t d);

/// Intersection of half-planes.  Lower-dimensional results come back as
/// degenerate polygons; empty and unbounded regions throw GeometryError.
RationalPolygon halfplane_polygon(const std::vector<HalfPlane<Rational>>& constraints);

/// Maximum number of lattice points of p on one affine line.
std::int64_t max_collinear(const IntegralPolygon& p);

/// x -> x * matrix + translation, acting on row vectors.
struct UnimodularAffineMap {
  Eigen::Matrix<std::int64_t, 2, 2> matrix = Eigen::Matrix<std::int64_t, 2, 2>::Identity();
  LatticePoint translation = LatticePoint::Zero();

  LatticePoint operator()(const LatticePoint& x) const;
  std::int64_t det() const;
  /// (this then other)
  UnimodularAffineMap then(const UnimodularAffineMap& other) const;
};

IntegralPolygon transform(const IntegralPolygon& p, const UnimodularAffineMap& map);

/// Lattice-preserving affine maps sending the vertex p.vertex(i) to the
/// origin, its neighbour in direction `forward` (next vertex if true) onto
/// the positive x-axis, the polygon into y >= 0 and the other neighbour to
/// (a2, b2) with 0 <= a2 < b2.  Requires dimension 2.
UnimodularAffineMap flag_normalizer(const IntegralPolygon& p, std::size_t i, bool forward);

/// Every flag normalizer (2n of them).
std::vector<UnimodularAffineMap> flag_normalizers(const IntegralPolygon& p);

/// Membership in the quadrilateral (0,0), (sqrt2 r^2, 0), ((sqrt2+1) r^2, r^2), (0, r^2).
template <typename T>
bool in_omega(const Point<T>& x, std::int64_t r);

/// First flag normalization of a 2-dimensional polygon with area2 < r^2.
/// Throws GeometryError(Degenerate) for points and segments and
/// PreconditionError if the image escapes Omega.
std::pair<IntegralPolygon, UnimodularAffineMap> normalize(const IntegralPolygon& p, std::int64_t r);

IntegralPolygon minkowski_sum(const IntegralPolygon& p, const IntegralPolygon& q);

/// Primitive edge vectors in counterclockwise order with their lattice lengths.
std::vector<std::pair<LatticePoint, std::int64_t>> primitive_edges(const IntegralPolygon& p);

/// All splittings p = q1 + q2 into lattice polygons that are not points,
/// up to swapping and translation.  q1 shares p's lexicographic minimum
/// and q2 has its lexicographic minimum at the origin.
std::vector<std::pair<IntegralPolygon, IntegralPolygon>> minkowski_decompositions(const IntegralPolygon& p);

/// True if some nontrivial decomposition exists (stops at the first one).
bool is_decomposable(const IntegralPolygon& p);

}  // namespace negcurve
