#include "todatop/sign.hpp"

#include <bit>
#include <cassert>
#include <stdexcept>

namespace todatop {
namespace {

// Bitmask over j of the parities C_{ji} mod 2 for a fixed column i (0-based).
// Acting by s_i flips eps_j exactly when C_{ji} is odd and eps_i = '-'.
uint32_t column_parity_mask(const RootDatum& d, int i0) {
  uint32_t m = 0;
  for (int j = 0; j < d.rank; ++j)
    if (d.cartan[j][i0] & 1) m |= 1u << j;
  return m;
}

}  // namespace

uint32_t all_minus(int rank) { return (rank >= 32) ? 0 : ((1u << rank) - 1); }

std::string sign_string(int rank, uint32_t eps) {
  std::string s = "(";
  for (int i = 0; i < rank; ++i) {
    if (i) s += ',';
    s += (eps >> i & 1) ? '-' : '+';
  }
  return s + ")";
}

uint32_t parse_signs(const std::string& s) {
  uint32_t eps = 0;
  int i = 0;
  for (char c : s) {
    if (c == '-') eps |= 1u << i++;
    else if (c == '+') ++i;
    else if (c == '(' || c == ')' || c == ',' || c == ' ') continue;
    else throw std::invalid_argument("bad sign character: " + std::string(1, c));
  }
  return eps;
}

uint32_t act_simple(const RootDatum& d, int i, uint32_t eps) {
  assert(i >= 1 && i <= d.rank);
  if (eps >> (i - 1) & 1) eps ^= column_parity_mask(d, i - 1);
  return eps;
}

uint32_t act_word(const RootDatum& d, const std::vector<int>& word, uint32_t eps) {
  for (auto it = word.rbegin(); it != word.rend(); ++it) eps = act_simple(d, *it, eps);
  return eps;
}

uint32_t act_word_inverse(const RootDatum& d, const std::vector<int>& word, uint32_t eps) {
  for (int i : word) eps = act_simple(d, i, eps);
  return eps;
}

F2Map F2Map::identity(int rank) {
  F2Map f;
  for (int j = 0; j < rank; ++j) f.rows[j] = uint16_t(1u << j);
  return f;
}

uint32_t F2Map::apply(int rank, uint32_t eps) const {
  uint32_t out = 0;
  for (int j = 0; j < rank; ++j)
    out |= uint32_t(std::popcount(uint32_t(rows[j]) & eps) & 1) << j;
  return out;
}

namespace {

// Walk the coset table once, carrying the F_2 matrix of eps -> w^{-1} eps for
// each representative.  Extending w to s_i w post-composes with the matrix of
// s_i, which only changes column i: row_j gains bit i iff <row_j, col_i(s_i)>
// flips parity, where col_i(s_i) = e_i + (C_{.i} mod 2).  The visitor receives
// every representative along with w^{-1} eps and whether every coordinate
// outside J is '-'.
template <typename Visit>
void walk_cosets(const RootDatum& d, uint32_t Jmask, uint32_t eps, Visit&& visit) {
  const CosetTable& tab = minimal_coset_table(d, Jmask);
  uint32_t cmask[kMaxRank];
  for (int i = 0; i < d.rank; ++i) cmask[i] = column_parity_mask(d, i);

  std::vector<F2Map> maps(tab.size());
  maps[0] = F2Map::identity(d.rank);
  const uint32_t outside = all_minus(d.rank) & ~Jmask;
  for (size_t n = 0; n < tab.size(); ++n) {
    if (n > 0) {
      const int i0 = tab.letter[n] - 1;
      F2Map f = maps[tab.parent[n]];
      for (int r = 0; r < d.rank; ++r) {
        if (std::popcount(uint32_t(f.rows[r]) & cmask[i0]) & 1) f.rows[r] ^= uint16_t(1u << i0);
      }
      maps[n] = f;
    }
    const uint32_t x = maps[n].apply(d.rank, eps);
    visit(n, tab.depth[n], x, (x & outside) == outside);
  }
}

}  // namespace

WMinusStats w_minus_stats(const RootDatum& d, uint32_t Jmask, uint32_t eps) {
  WMinusStats st;
  walk_cosets(d, Jmask, eps, [&](size_t, int depth, uint32_t, bool in_minus) {
    if (!in_minus) return;
    ++st.count;
    st.signed_sum += (depth & 1) ? -1 : 1;
  });
  return st;
}

std::vector<WeylElement> w_minus_set(const RootDatum& d, uint32_t Jmask, uint32_t eps) {
  const CosetTable& tab = minimal_coset_table(d, Jmask);
  std::vector<WeylElement> out;
  walk_cosets(d, Jmask, eps, [&](size_t n, int, uint32_t, bool in_minus) {
    if (in_minus) out.push_back(weyl_from_word(d, tab.word_of(n)));
  });
  return out;
}

std::vector<SignedCell> enumerate_cells(const RootDatum& d, uint32_t eps) {
  std::vector<SignedCell> cells;
  const uint32_t full = all_minus(d.rank);
  for (uint32_t J = 0; J <= full; ++J) {
    const CosetTable& tab = minimal_coset_table(d, J);
    walk_cosets(d, J, eps, [&](size_t n, int depth, uint32_t x, bool) {
      SignedCell c;
      c.Jmask = J;
      c.word = tab.word_of(n);
      c.sigma.resize(d.rank);
      for (int j = 0; j < d.rank; ++j)
        c.sigma[j] = (J >> j & 1) ? 0 : ((x >> j & 1) ? -1 : 1);
      c.orientation = (depth & 1) ? -1 : 1;
      cells.push_back(std::move(c));
    });
  }
  return cells;
}

}  // namespace todatop
