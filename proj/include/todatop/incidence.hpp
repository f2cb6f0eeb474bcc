// Incidence numbers [J ; J u {alpha_k}] between adjacent closure strata, the
// weighted stratification graph they define, and the unweighted local graph
// obtained by viewing the rank-l diagram inside the rank-(l+1) ambient one.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "todatop/lie.hpp"

namespace todatop {

// [empty ; {alpha_k}] = (-1)^{k-1} |sum_{w in W^-_[{alpha_k}]} (-1)^{l(w)}|.
// Cached per (family, rank, k); k is 1-based.
long long top_incidence(const RootDatum& d, int k);

// Closed form for the top row in type A (used as an independent check):
//   l odd : ((-1)^{k-1} - 1) * C((l+1)/2, floor(k/2))
//   l even: 2 * (-1)^{k-1} * C(l/2, floor(k/2))
long long a_top_closed_form(int l, int k);

// Number of j < k with j outside J (the sign exponent nu(J, k)).
int nu_exponent(uint32_t Jmask, int k);

// General incidence number for k outside J: reduce to the top row of the
// connected component of the diagram-minus-J containing alpha_k.
long long incidence_number(const RootDatum& d, uint32_t Jmask, int k);

// All incidence numbers of one group, val[Jmask][k-1] (zero when k in J).
struct IncidenceTable {
  int rank = 0;
  std::vector<std::array<long long, kMaxRank>> val;
};
const IncidenceTable& incidence_table(const RootDatum& d);

// True when the alternating sum over the top row vanishes identically, i.e.
// the variety carries a fundamental class over Q.
bool is_orientable(const RootDatum& d);

struct GraphEdge {
  uint32_t from = 0;  // Jmask of the higher-dimensional stratum
  uint32_t to = 0;    // from | (one extra simple root)
  long long weight = 0;
};

// Weighted graph: one edge per nonzero incidence number.
std::vector<GraphEdge> incidence_graph(const RootDatum& d);

// Unweighted local graph: J => J' iff the ambient rank-(l+1) diagram of the
// same family has a nonzero incidence number for the corresponding step.
// Defined for A/B/C/D (any admissible rank) and E6, E7 (ambient E7, E8).
std::vector<GraphEdge> local_graph(const RootDatum& d);

// DOT rendering; vertices "(**0)" in ascending Jmask order, edges sorted by
// (from, to), weight attributes only when weighted.
std::string graph_dot(const RootDatum& d, const std::vector<GraphEdge>& edges, bool weighted);

// CSV of all nonzero incidence numbers: header "J,k,value".
std::string incidence_csv(const RootDatum& d);

}  // namespace todatop
