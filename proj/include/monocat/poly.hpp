#pragma once

#include <optional>
#include <vector>

#include "monocat/linalg.hpp"

namespace monocat {

// Polynomials over F_p, coefficients from degree 0 upwards, no trailing zeros.
// The zero polynomial is the empty vector.
using Poly = std::vector<Scalar>;

void poly_trim(Poly& f);
int poly_degree(const Poly& f);  // -1 for zero
Poly poly_add(const Poly& a, const Poly& b, Scalar p);
Poly poly_sub(const Poly& a, const Poly& b, Scalar p);
Poly poly_mul(const Poly& a, const Poly& b, Scalar p);
// Quotient and remainder; divisor must be nonzero.
std::pair<Poly, Poly> poly_divmod(const Poly& a, const Poly& b, Scalar p);
Poly poly_mod(const Poly& a, const Poly& b, Scalar p);
Poly poly_gcd(Poly a, Poly b, Scalar p);  // monic
Poly poly_monic(const Poly& f, Scalar p);
Poly poly_derivative(const Poly& f, Scalar p);
Poly poly_powmod(const Poly& base, unsigned long long e, const Poly& m, Scalar p);

// f(a) for a square matrix a.
Mat poly_eval(const Poly& f, const Mat& a);

// Minimal polynomial of a square matrix (monic).
Poly minimal_polynomial(const Mat& a);

// Number of distinct monic irreducible factors, via the Frobenius-fixed
// subalgebra of F_p[x]/(m). Works for non-squarefree m.
std::size_t distinct_irreducible_factors(const Poly& m, Scalar p);

bool is_irreducible(const Poly& f, Scalar p);

// For a monic m that is a power of a single irreducible g, returns g.
Poly primary_root(const Poly& m, Scalar p);

// For m with at least two distinct irreducible factors, a polynomial h such
// that h is zero modulo one primary component of m and a unit modulo another.
// Evaluated at any matrix with minimal polynomial m, it gives an element that
// is neither nilpotent nor invertible.
std::optional<Poly> splitting_polynomial(const Poly& m, Scalar p);

}  // namespace monocat
