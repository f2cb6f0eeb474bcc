// Tau functions of the nilpotent Toda flows: Schur-polynomial Wronskians per
// family, the bilinear constants tying them to the Toda variables, and the
// evaluation map back to (a, b) phase-space coordinates.
#pragma once

#include <gmpxx.h>

#include <optional>
#include <string>
#include <vector>

#include "todatop/lie.hpp"
#include "todatop/poly.hpp"

namespace todatop {

// Power-sum Schur polynomial p_k: sum p_k z^k = exp(sum t_i z^i).  With
// odd_only, the even time variables are frozen to zero.
Poly schur_p(int k, int nvars, bool odd_only);

// Signed Wronskian of p_1..p_k (equals the elementary Schur polynomial up to
// the sign (-1)^{k(k-1)/2}); pbar_1 = t1, pbar_2 = t2 - t1^2/2, ...
Poly schur_pbar(int k, int nvars);

struct TauSystem {
  Family family = Family::A;
  int rank = 0;
  int nvars = 0;                    // time variables t1..t_nvars
  std::vector<Poly> taus;           // tau_1 .. tau_rank
  std::vector<mpq_class> bilinear;  // c_j with tau_j tau_j'' - tau_j'^2 =
                                    //   c_j prod_{k!=j} tau_k^{-C_{jk}};
                                    // empty when no such constants exist (G)
  mpq_class dl_scale = 1;           // family B: dl_scale * tau_l^2 = -D_l
  std::optional<Poly> constraint;   // family G: locus tying t5 to (t1, t3)
};

// Families A, B, C, G (rank per the usual diagram constraints, G handled at
// rank 2 only); D and the other exceptional types are not covered by the
// Wronskian construction here and are rejected.
TauSystem tau_system(Family f, int rank);

// Computes the c_j by exact division; throws if a quotient is not an exact
// constant.
std::vector<mpq_class> bilinear_constants(const RootDatum& d, const std::vector<Poly>& taus);

// t1-degree of tau_k(t1, 0, ..., 0) for k = 1..l (family A).
std::vector<long long> multiplicity_profile(int l);

// On the curve t_k = s^k/k the first tau function of A_l becomes s^l and all
// higher ones vanish identically; returns whether that holds.
bool divisor_curve_check(int l);

struct TodaPoint {
  std::vector<double> a, b;
};

// Evaluates a_j = c_j prod_k tau_k^{-C_{jk}} (with the tau_j^{-2} factor) and
// b_j = tau_j'/tau_j at the given time point.  Throws when the point lies on
// the Painleve divisor (some tau vanishes) or for family G.
TodaPoint toda_solution_at(const TauSystem& sys, const std::vector<mpq_class>& point);

std::string tau_text(const TauSystem& sys);
std::string tau_json(const TauSystem& sys);

}  // namespace todatop
