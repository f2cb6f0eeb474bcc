// Painleve-divisor component counting: the anti-triangular determinant cut
// out by the vanishing tau-functions, exact Sturm real-root counts, and the
// cross-check against the Weyl-combinatorial count.
#pragma once

#include <string>
#include <vector>

#include "todatop/poly.hpp"

namespace todatop {

int upoly_degree(const UniPoly& p);  // -1 for zero
UniPoly upoly_derivative(const UniPoly& p);
UniPoly upoly_remainder(UniPoly a, const UniPoly& b);
UniPoly upoly_gcd(UniPoly a, UniPoly b);  // monic

// Distinct real roots of p over the whole line, by exact Sturm chains on the
// squarefree part.  Rejects the zero polynomial.
int sturm_real_roots(const UniPoly& p);

// The l x l determinant with entry (i, j) = pbar_{l+2-i-j} (pbar_0 = 1,
// everything outside 0..2 zero), as a polynomial in u = pbar_1, v = pbar_2.
Poly divisor_determinant(int l);

// Substitutes v = x u^2, strips the forced power of u, and returns the
// polynomial in x; degree floor(l/2).
UniPoly divisor_profile_poly(int l);

struct DivisorSummary {
  int l = 0;
  int degree = 0;
  int real_roots = 0;
  long long components = 0;
};

// components = 2 * (real roots + 1 extra branch when l is odd); verified
// against |W^-_[{alpha_2}]| and aborts on mismatch.
DivisorSummary divisor_summary(int l);

std::string divisor_csv(const std::vector<DivisorSummary>& rows);

}  // namespace todatop
