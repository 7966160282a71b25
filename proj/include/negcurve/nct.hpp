#pragma once

// Checks and catalogues for r-ncts: irreducible Laurent polynomials of
// multiplicity r at (1, 1) whose Newton polygon has area2 < r^2.

#include "negcurve/irreducibility.hpp"
#include "negcurve/laurent.hpp"

#include <string>
#include <vector>

namespace negcurve {

enum class NctStatus { Accepted, ConditionallyAccepted, Rejected };

std::string to_string(NctStatus s);

struct NctCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct NctReport {
  std::int64_t r = 0;
  std::uint64_t characteristic = 0;
  Rational area2 = 0;
  std::int64_t boundary = 0;
  std::int64_t interior = 0;
  std::int64_t lattice_count = 0;
  unsigned multiplicity = 0;
  std::size_t kernel_dimension = 0;
  IntegralPolygon polygon;
  IrreducibilityCertificate certificate;
  std::vector<NctCheck> checks;
  NctStatus status = NctStatus::Rejected;

  bool accepted() const { return status == NctStatus::Accepted; }
  /// Accepted or accepted with an inconclusive irreducibility certificate.
  bool plausible() const { return status != NctStatus::Rejected; }
};

NctReport is_nct(const LaurentPoly& f, std::int64_t r);

/// phi_1 = v w - 1, phi_r = -phi_{r-1} (v - 1) + (-1)^{r-1} v (w - 1)^r.
LaurentPoly phi_family(unsigned r, std::uint64_t characteristic = 0);

/// Tetragon carrying the second family: vertices (-1,-1), (r-1,0) and two
/// more depending on the parity of r.
IntegralPolygon ggk_tetragon(unsigned r);

/// Generator of the one-dimensional jet kernel on the tetragon, normalized
/// so the coefficient at (-1,-1) is -1.  Throws Error if the kernel is not
/// one-dimensional or a vertex coefficient vanishes.
LaurentPoly ggk_prime_family(unsigned r, std::uint64_t characteristic = 0);

/// The lexicographically least (support, coefficients) representative over
/// all flag normalizations of the Newton polygon, with the coefficient at the
/// origin scaled to -1.  Points are not allowed; segments are allowed only
/// for r = 1.
LaurentPoly canonical_form(const LaurentPoly& f, std::int64_t r);

struct CatalogEntry {
  LaurentPoly representative;
  NctReport report;
};

struct Catalog {
  std::int64_t r = 0;
  std::uint64_t characteristic = 0;
  std::size_t polygons_examined = 0;
  std::vector<CatalogEntry> classes;
};

/// Normalized lattice polygons inside Omega with area2 < r^2, at most
/// r(r+1)/2 + 1 lattice points and no r + 1 collinear lattice points.
std::vector<IntegralPolygon> candidate_polygons(std::int64_t r);

/// Exhaustive classification for r <= 2; r = 3 requires `experimental`.
Catalog classify(std::int64_t r, std::uint64_t characteristic, bool experimental = false, unsigned jobs = 1);

}  // namespace negcurve
