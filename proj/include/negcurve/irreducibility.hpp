#pragma once

// Irreducibility certificates for Laurent polynomials.  Units of the Laurent
// ring are c * v^a w^b, so factorizations are only meaningful up to them.

#include "negcurve/laurent.hpp"

#include <optional>
#include <string>
#include <vector>

namespace negcurve {

enum class Verdict { IrreduciblePolytope, IrreducibleModP, Factored, Inconclusive };

std::string to_string(Verdict v);

struct IrreducibilityCertificate {
  Verdict verdict = Verdict::Inconclusive;
  std::uint64_t prime = 0;           ///< set for IrreducibleModP
  std::vector<LaurentPoly> factors;  ///< set for Factored, repeated by multiplicity
  /// input = unit_coefficient * v^unit_shift * product(factors)
  Scalar unit_coefficient;
  LatticePoint unit_shift = LatticePoint::Zero();
  std::string details;

  bool irreducible() const { return verdict == Verdict::IrreduciblePolytope || verdict == Verdict::IrreducibleModP; }
};

struct ModPFactorization {
  std::vector<LaurentPoly> factors;  ///< repeated by multiplicity, each in polynomial form
  Scalar unit_coefficient;
  LatticePoint unit_shift = LatticePoint::Zero();
  /// False when recombination ran out of budget; the last factor is then
  /// an unsplit remainder.
  bool complete = true;
};

/// Exact quotient f / g in the Laurent ring, if it exists.
std::optional<LaurentPoly> divide(const LaurentPoly& f, const LaurentPoly& g);

/// f shifted so both exponent minima are zero.
LaurentPoly polynomial_form(const LaurentPoly& f);

/// Complete factorization over F_p up to units.  subset_budget bounds the
/// number of recombination candidates.
ModPFactorization factor_mod_p(const LaurentPoly& f, std::size_t subset_budget = 1u << 16);

/// Runs the certificate pipeline; throws PreconditionError on zero or a unit.
IrreducibilityCertificate certify(const LaurentPoly& f);

/// Primes tried in characteristic 0: the first `count` primes at which no
/// coefficient of the primitive integer multiple of f vanishes.
std::vector<std::uint64_t> certification_primes(const LaurentPoly& f, std::size_t count = 10);

}  // namespace negcurve
