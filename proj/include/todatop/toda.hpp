// Floating-point integration of the Toda flow in (a, b) coordinates,
//   b_j' = a_j,   a_j' = -(sum_k C_{jk} b_k) a_j,
// with blow-up detection and the isospectral invariants used to check drift.
#pragma once

#include <string>
#include <vector>

#include "todatop/lie.hpp"

namespace todatop {

struct TodaState {
  double t = 0;
  std::vector<double> a, b;
};

struct SimResult {
  std::vector<TodaState> samples;  // includes the initial state
  bool blowup = false;
  double blowup_time = 0;  // last completed step before the threshold hit
};

// Classical fixed-step 4th-order integration from init.t to t_end; the step
// count is rounded so the endpoint is hit exactly.  Every `stride`-th state
// is kept (plus the final one).  Integration stops early when any coordinate
// exceeds 1e9 in magnitude or becomes non-finite.
SimResult simulate(const RootDatum& d, const TodaState& init, double t_end, double dt,
                   int stride = 1);

// Coefficients (ascending powers, leading 1) of the characteristic polynomial
// of the tridiagonal Lax matrix of type A_l: diagonal (b_1, b_2 - b_1, ...,
// -b_l), superdiagonal ones, subdiagonal a_j.  Constant along the flow.
std::vector<double> lax_char_coeffs(const std::vector<double>& a, const std::vector<double>& b);

// CSV rows "t,a1,...,al,b1,...,bl,blowup" at %.12g.
std::string trajectory_csv(const SimResult& sim, int rank);

}  // namespace todatop
