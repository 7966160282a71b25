#pragma once

// Complete fans in the plane and the toric surfaces they define: class
// groups, intersection numbers on the simplicial surface, the anticanonical
// polygon, smooth refinement, and numbers on the blow-up at the point (1,1)
// of the torus.

#include "negcurve/exact.hpp"
#include "negcurve/geometry.hpp"
#include "negcurve/laurent.hpp"

#include <array>
#include <optional>
#include <string>
#include <vector>

namespace negcurve {

struct Fan2D {
  std::vector<LatticePoint> rays;  ///< counterclockwise, primitive

  std::size_t size() const { return rays.size(); }
  const LatticePoint& ray(std::size_t i) const { return rays[i % rays.size()]; }
  /// det(a_i, a_{i+1})
  std::int64_t det(std::size_t i) const { return cross<std::int64_t>(ray(i), ray(i + 1)); }
  bool is_smooth() const;
};

/// Makes the rays primitive, orders them counterclockwise starting from the
/// first input ray and checks completeness.  Throws PreconditionError.
Fan2D make_fan(const std::vector<LatticePoint>& rays);

/// Inward primitive edge normals in counterclockwise order.
template <typename T>
Fan2D normal_fan(const Polygon<T>& p);

struct ClassGroup {
  std::size_t free_rank = 0;
  std::vector<Integer> torsion;  ///< invariant factors > 1
  /// One row per generator of Cl (free part first, then torsion); column j
  /// is the class of the j-th ray divisor.  Torsion rows are reduced mod
  /// the corresponding factor.
  IntMatrix grading;
};

/// Cokernel of Z^d -> Z^n, m -> (<m, a_j>)_j for an n x d ray matrix.
ClassGroup class_group(const IntMatrix& ray_rows);
ClassGroup class_group(const Fan2D& fan);

struct IntersectionTable {
  std::vector<Rational> self;      ///< D_i^2
  std::vector<Rational> adjacent;  ///< D_i . D_{i+1}
  Rational canonical_square;       ///< K^2 = (sum D_i)^2

  Rational pairing(std::size_t i, std::size_t j) const;
};

IntersectionTable intersection_numbers(const Fan2D& fan);

/// {x : <x, a_i> >= -1}
RationalPolygon minus_k_polygon(const Fan2D& fan);

struct Refinement {
  Fan2D fan;
  /// Product of the consecutive determinants before each insertion and at
  /// the end; strictly decreasing.
  std::vector<Integer> det_products;
};

/// Inserts rays until every cone is unimodular.
Refinement smooth_refine(const Fan2D& fan);

/// Self-intersection of the anticanonical divisor computed on a smooth fan
/// by the relation a_{i-1} + a_{i+1} = -(D_i^2) a_i.
Rational smooth_canonical_square(const Fan2D& smooth_fan);

/// Square of the pullback of -K_X to a smooth refinement, computed with the
/// smooth intersection form.  Equals intersection_numbers(original).canonical_square.
Rational pullback_canonical_square(const Fan2D& original, const Fan2D& smooth_refinement);

struct BlowupNumbers {
  Rational c_squared;      ///< C^2 = area2 - r^2
  Rational c_dot_e;        ///< r
  Rational e_squared;      ///< -1
  Rational c_dot_minus_k;  ///< B - r
  Rational minus_k_y_squared;
  Rational minus_k_x_squared;
  Rational adjunction;     ///< C.(K_Y + C) + 2 = 2I - r(r-1)
};

BlowupNumbers blowup_numbers(const IntegralPolygon& p, std::int64_t r);

// ---------------------------------------------------------------------------
// Condition report

enum class Status { True, False, ImpliedTrue, ImpliedFalse, Unknown };

std::string to_string(Status s);

struct ConditionStatus {
  Status status = Status::Unknown;
  std::string provenance;  ///< "computed", "implied by (x)=>(y)", ...
};

class DiagramContradiction : public Error {
 public:
  using Error::Error;
};

struct Thm36Report {
  std::array<ConditionStatus, 12> conditions;  ///< indices 1..11
  std::uint64_t characteristic = 0;
  std::int64_t r = 0;
  std::size_t ray_count = 0;
  Rational area2;
  std::int64_t boundary = 0;
  std::int64_t interior = 0;
  BlowupNumbers numbers;
  Rational minus_k_area2;
  Rational refined_minus_k_x_squared;  ///< same number through a smooth refinement

  const ConditionStatus& condition(int i) const { return conditions[static_cast<std::size_t>(i)]; }
};

/// Evaluates the computable conditions and closes the rest under the
/// implication diagram.  Throws DiagramContradiction if a computed value
/// disagrees with an implied one.
Thm36Report thm36_report(const LaurentPoly& f, std::int64_t r);

/// Same, from polygon data alone.
Thm36Report thm36_report(const IntegralPolygon& p, std::int64_t r, std::uint64_t characteristic);

/// Edges (x, y) meaning condition x implies condition y.
const std::vector<std::pair<int, int>>& implication_edges();

}  // namespace negcurve
