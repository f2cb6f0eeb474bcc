// Action of the Weyl group on sign vectors (one sign per simple root) over
// F_2, the distinguished subsets W^-_[J] of minimal coset representatives,
// and the signed cell enumeration of the compactified variety.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "todatop/lie.hpp"

namespace todatop {

// Sign vectors are bitmasks: bit i set means epsilon_{i+1} = '-'.
uint32_t all_minus(int rank);
std::string sign_string(int rank, uint32_t eps);  // "(-,+,-)"
uint32_t parse_signs(const std::string& s);       // accepts "-+-" or "(-,+,-)"

// s_i acting on a sign vector: eps_j *= eps_i^{C_{ji}} for every j.
uint32_t act_simple(const RootDatum& d, int i, uint32_t eps);  // 1-based i

// w . eps for w given by a (not necessarily reduced) word; letters apply
// right to left, matching the product convention of WeylElement.
uint32_t act_word(const RootDatum& d, const std::vector<int>& word, uint32_t eps);

// w^{-1} . eps (letters apply left to right).
uint32_t act_word_inverse(const RootDatum& d, const std::vector<int>& word, uint32_t eps);

// The F_2 matrix of the map eps -> w^{-1} . eps, composed incrementally along
// a coset table; rows[j] holds row j as a bitmask.
struct F2Map {
  std::array<uint16_t, kMaxRank> rows{};
  static F2Map identity(int rank);
  uint32_t apply(int rank, uint32_t eps) const;
};

// Aggregates over W^-_[J](eps) = { w in W_[J] : (w^{-1} eps)_j = '-' for all
// j outside J }: element count and the (-1)^{length} signed sum.
struct WMinusStats {
  long long count = 0;
  long long signed_sum = 0;
};
WMinusStats w_minus_stats(const RootDatum& d, uint32_t Jmask, uint32_t eps);

// Materialized W^-_[J](eps) in breadth-first order (use for small ranks).
std::vector<WeylElement> w_minus_set(const RootDatum& d, uint32_t Jmask, uint32_t eps);

// One cell of the compactified variety: a subset J, a minimal coset
// representative w of W/W^J, and the sign pattern sigma_J(w^{-1} eps) with
// zeros at the J positions.  orientation = (-1)^{length(w)}.
struct SignedCell {
  uint32_t Jmask = 0;
  std::vector<int> word;
  std::vector<int> sigma;  // entries -1, 0, +1
  int orientation = 1;
};

// All cells over every J, ordered by (Jmask, breadth-first coset order).
std::vector<SignedCell> enumerate_cells(const RootDatum& d, uint32_t eps);

}  // namespace todatop
