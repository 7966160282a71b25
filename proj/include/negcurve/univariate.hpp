#pragma once

// Dense univariate polynomials over F_p (p < 2^32), coefficient i of x^i,
// and their factorization into irreducibles (squarefree decomposition,
// distinct-degree and equal-degree splitting).

#include "negcurve/exact.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace negcurve::fp {

using Poly = std::vector<std::uint64_t>;

void trim(Poly& a);
int degree(const Poly& a);  ///< -1 for the zero polynomial
bool is_zero(const Poly& a);

Poly add(const Poly& a, const Poly& b, std::uint64_t p);
Poly sub(const Poly& a, const Poly& b, std::uint64_t p);
Poly mul(const Poly& a, const Poly& b, std::uint64_t p);
Poly scale(const Poly& a, std::uint64_t c, std::uint64_t p);
/// a = q b + r, deg r < deg b; b must be nonzero.
void divmod(const Poly& a, const Poly& b, std::uint64_t p, Poly& q, Poly& r);
Poly mod(const Poly& a, const Poly& b, std::uint64_t p);
Poly monic(const Poly& a, std::uint64_t p);
Poly gcd(Poly a, Poly b, std::uint64_t p);
Poly derivative(const Poly& a, std::uint64_t p);
Poly powmod(const Poly& base, const Integer& e, const Poly& modulus, std::uint64_t p);

struct Factor {
  Poly poly;  ///< monic irreducible
  unsigned multiplicity = 1;
};

/// Monic squarefree parts with multiplicities.
std::vector<Factor> squarefree(const Poly& f, std::uint64_t p);

/// For squarefree monic f: products of all irreducible factors of each degree.
std::vector<std::pair<Poly, unsigned>> distinct_degree(const Poly& f, std::uint64_t p);

/// Splits a squarefree monic product of irreducibles of degree d.
std::vector<Poly> equal_degree(const Poly& f, unsigned d, std::uint64_t p, std::mt19937_64& rng);

/// Complete factorization of a nonzero polynomial, sorted by degree then
/// coefficients; the leading coefficient is returned separately.
std::vector<Factor> factor(const Poly& f, std::uint64_t p, std::uint64_t* leading = nullptr);

}  // namespace negcurve::fp
