#pragma once

// Search for negative curves in the degree-d piece of the r-th symbolic
// power of the monomial-curve prime for weights (a, b, c), realized as jet
// kernels on the lattice points of d * P_{a,b,c}.

#include "negcurve/herzog.hpp"
#include "negcurve/nct.hpp"
#include "negcurve/symbolic_power.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace negcurve {

/// d^2 < a b c r^2, exactly.
bool is_negative_pair(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r, std::int64_t d);

/// Interior lattice points of the hull of d P_{a,b,c} cap Z^2 minus r(r-1)/2;
/// throws Error if negative.
std::int64_t genus_payload(std::int64_t a, std::int64_t b, std::int64_t c, std::int64_t r, std::int64_t d);

struct SearchOptions {
  std::uint64_t seed = 1;
  unsigned jobs = 1;
  bool prefilter = true;  ///< characteristic 0 only
  std::function<void(const std::string&)> progress;
};

struct NegativeCurveReport {
  std::int64_t a = 0, b = 0, c = 0;
  std::uint64_t characteristic = 0;
  std::int64_t r = 0, d = 0;
  LaurentPoly phi;
  std::size_t support_size = 0;
  std::size_t kernel_dimension = 0;
  std::optional<Prefilter> prefilter;

  bool irreducible = false;
  bool edges_touched = false;
  bool jet_membership = false;
  bool area_inequality = false;
  IrreducibilityCertificate certificate;
  NctReport nct;

  std::int64_t interior_dp = 0;    ///< interior lattice points of the rational polygon dP
  std::int64_t interior_hull = 0;  ///< interior lattice points of the hull of dP cap Z^2
  std::int64_t genus = 0;          ///< interior_hull - r(r-1)/2

  bool accepted() const { return irreducible && edges_touched && jet_membership && area_inequality; }
  /// All conditions except a definite irreducibility verdict.
  bool conditional() const {
    return !irreducible && certificate.verdict == Verdict::Inconclusive && edges_touched && jet_membership &&
           area_inequality;
  }
};

/// First kernel generator at (r, d) that passes the checks, or the first
/// conditional one if none passes outright.
std::optional<NegativeCurveReport> find(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t characteristic,
                                        std::int64_t r, std::int64_t d, const SearchOptions& options = {});

/// Every negative-pair cell (r, d) with r <= r_max, restricted to the given
/// degrees if any; results sorted by (r, d).
std::vector<NegativeCurveReport> scan(std::int64_t a, std::int64_t b, std::int64_t c, std::uint64_t characteristic,
                                      std::int64_t r_max, const std::vector<std::int64_t>& degrees = {},
                                      const SearchOptions& options = {});

}  // namespace negcurve
