#include "todatop/complex.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <stdexcept>

#include <json.hpp>

#include "todatop/incidence.hpp"

namespace todatop {
namespace {

// basis[k] = subsets of size l-k, ascending mask order.
std::vector<std::vector<uint32_t>> subset_basis(int rank) {
  std::vector<std::vector<uint32_t>> basis(rank + 1);
  for (uint32_t J = 0; J < (1u << rank); ++J)
    basis[rank - std::popcount(J)].push_back(J);
  return basis;
}

size_t index_of(const std::vector<uint32_t>& basis, uint32_t J) {
  auto it = std::lower_bound(basis.begin(), basis.end(), J);
  assert(it != basis.end() && *it == J);
  return size_t(it - basis.begin());
}

// Shared assembly for both complexes; `entry(J, k)` gives the coefficient of
// J u {alpha_k} in the boundary of J.
template <typename Entry>
ChainComplexZ assemble(const RootDatum& d, Entry&& entry) {
  ChainComplexZ cx;
  cx.rank = d.rank;
  cx.basis = subset_basis(d.rank);
  cx.boundary.resize(d.rank + 1);
  for (int k = 1; k <= d.rank; ++k) {
    const auto& cols = cx.basis[k];
    const auto& rows = cx.basis[k - 1];
    cx.boundary[k].assign(rows.size(), std::vector<long long>(cols.size(), 0));
    for (size_t c = 0; c < cols.size(); ++c) {
      const uint32_t J = cols[c];
      for (int j = 1; j <= d.rank; ++j) {
        if (J >> (j - 1) & 1) continue;
        const long long v = entry(J, j);
        if (v != 0) cx.boundary[k][index_of(rows, J | (1u << (j - 1)))][c] = v;
      }
    }
  }
  // d o d = 0, checked entry by entry so a violation names its strata.
  for (int k = 2; k <= d.rank; ++k) {
    const auto& B1 = cx.boundary[k - 1];
    const auto& B2 = cx.boundary[k];
    for (size_t r = 0; r < cx.basis[k - 2].size(); ++r)
      for (size_t c = 0; c < cx.basis[k].size(); ++c) {
        long long s = 0;
        for (size_t m = 0; m < cx.basis[k - 1].size(); ++m) s += B1[r][m] * B2[m][c];
        if (s != 0)
          throw std::logic_error("boundary square fails between " +
                                 subset_string(d.rank, cx.basis[k][c]) + " and " +
                                 subset_string(d.rank, cx.basis[k - 2][r]));
      }
  }
  return cx;
}

struct BoundaryInvariants {
  long long rank_q = 0;   // nonzero invariant factors
  long long rank_f2 = 0;  // odd invariant factors
  std::vector<long long> torsion;
};

BoundaryInvariants invariants_of(const std::vector<std::vector<long long>>& B) {
  BoundaryInvariants inv;
  if (B.empty() || B[0].empty()) return inv;
  std::vector<std::vector<mpz_class>> A(B.size(), std::vector<mpz_class>(B[0].size()));
  for (size_t i = 0; i < B.size(); ++i)
    for (size_t j = 0; j < B[0].size(); ++j) A[i][j] = static_cast<long>(B[i][j]);
  for (const mpz_class& v : snf_diagonal(smith_normal_form(std::move(A)))) {
    if (v == 0) continue;
    ++inv.rank_q;
    if (mpz_odd_p(v.get_mpz_t())) ++inv.rank_f2;
    if (v > 1) inv.torsion.push_back(v.get_si());
  }
  return inv;
}

std::vector<AbelianGroup> groups_from_invariants(const ChainComplexZ& cx, Coeff c,
                                                 const std::vector<BoundaryInvariants>& inv,
                                                 bool co) {
  const int l = cx.rank;
  std::vector<AbelianGroup> H(l + 1);
  auto rank_of = [&](int k) -> long long {
    if (k < 1 || k > l) return 0;
    return c == Coeff::Z2 ? inv[k].rank_f2 : inv[k].rank_q;
  };
  for (int k = 0; k <= l; ++k) {
    H[k].free_rank = (long long)cx.basis[k].size() - rank_of(k) - rank_of(k + 1);
    if (c == Coeff::Z) {
      // Torsion of H_k comes from the incoming boundary, of H^k from the
      // outgoing one (the transposed complex shifts the grading by one).
      const int src = co ? k : k + 1;
      if (src >= 1 && src <= l)
        for (long long t : inv[src].torsion) H[k].torsion.push_back(t);
    }
  }
  return H;
}

std::vector<AbelianGroup> compute(const ChainComplexZ& cx, Coeff c, bool co) {
  std::vector<BoundaryInvariants> inv(cx.rank + 1);
  for (int k = 1; k <= cx.rank; ++k) inv[k] = invariants_of(cx.boundary[k]);
  return groups_from_invariants(cx, c, inv, co);
}

}  // namespace

Coeff coeff_from_string(const std::string& s) {
  if (s == "Z") return Coeff::Z;
  if (s == "Q") return Coeff::Q;
  if (s == "Z2") return Coeff::Z2;
  throw std::invalid_argument("unknown coefficient ring: " + s);
}

std::string coeff_string(Coeff c) {
  switch (c) {
    case Coeff::Z: return "Z";
    case Coeff::Q: return "Q";
    case Coeff::Z2: return "Z2";
  }
  return "?";
}

std::string group_string(const AbelianGroup& g) {
  std::string s;
  if (g.free_rank == 1) s = "Z";
  else if (g.free_rank > 1) s = "Z^" + std::to_string(g.free_rank);
  for (long long t : g.torsion) {
    if (!s.empty()) s += "+";
    s += "Z" + std::to_string(t);
  }
  return s.empty() ? "0" : s;
}

ChainComplexZ build_complex(const RootDatum& d) {
  const IncidenceTable& tab = incidence_table(d);
  return assemble(d, [&](uint32_t J, int k) { return tab.val[J][k - 1]; });
}

ChainComplexZ schubert_complex(const RootDatum& d) {
  // Keep the edge set (and signs) of the incidence graph but force every
  // nonzero magnitude to 2.
  const IncidenceTable& tab = incidence_table(d);
  return assemble(d, [&](uint32_t J, int k) -> long long {
    if (tab.val[J][k - 1] == 0) return 0;
    return (nu_exponent(J, k) & 1) ? -2 : 2;
  });
}

std::vector<AbelianGroup> homology(const ChainComplexZ& cx, Coeff c) {
  return compute(cx, c, false);
}

std::vector<AbelianGroup> cohomology(const ChainComplexZ& cx, Coeff c) {
  return compute(cx, c, true);
}

std::vector<long long> local_betti_Q(const RootDatum& d) {
  if (d.family != Family::A)
    throw std::invalid_argument("local complex is defined for family A only");
  const auto basis = subset_basis(d.rank);
  const auto edges = local_graph(d);
  // The localized complex is the sub-complex of the rank l+1 chain complex
  // spanned by the strata whose subset omits the appended node, so each
  // boundary entry is the corresponding incidence number of that larger
  // diagram (the edge set alone, with unit weights, would not square to zero).
  const IncidenceTable& amb = incidence_table(root_datum(d.family, d.rank + 1));
  std::vector<std::vector<std::vector<long long>>> B(d.rank + 1);
  for (int k = 1; k <= d.rank; ++k)
    B[k].assign(basis[k - 1].size(), std::vector<long long>(basis[k].size(), 0));
  for (const GraphEdge& e : edges) {
    const int k = d.rank - std::popcount(e.from);
    const int added = std::countr_zero(e.from ^ e.to) + 1;
    B[k][index_of(basis[k - 1], e.to)][index_of(basis[k], e.from)] =
        amb.val[e.from][added - 1];
  }
  std::vector<long long> rank_q(d.rank + 2, 0);
  for (int k = 1; k <= d.rank; ++k) rank_q[k] = invariants_of(B[k]).rank_q;
  std::vector<long long> betti(d.rank + 1);
  for (int k = 0; k <= d.rank; ++k)
    betti[k] = (long long)basis[k].size() - rank_q[k] - rank_q[k + 1];
  return betti;
}

SNFResult smith_normal_form(std::vector<std::vector<mpz_class>> A) {
  SNFResult r;
  const size_t m = A.size();
  const size_t n = m ? A[0].size() : 0;
  r.U.assign(m, std::vector<mpz_class>(m, 0));
  r.V.assign(n, std::vector<mpz_class>(n, 0));
  for (size_t i = 0; i < m; ++i) r.U[i][i] = 1;
  for (size_t j = 0; j < n; ++j) r.V[j][j] = 1;

  auto swap_rows = [&](size_t a, size_t b) {
    if (a == b) return;
    std::swap(A[a], A[b]);
    std::swap(r.U[a], r.U[b]);
  };
  auto swap_cols = [&](size_t a, size_t b) {
    if (a == b) return;
    for (size_t i = 0; i < m; ++i) std::swap(A[i][a], A[i][b]);
    for (size_t i = 0; i < n; ++i) std::swap(r.V[i][a], r.V[i][b]);
  };
  auto add_row = [&](size_t dst, size_t src, const mpz_class& q) {  // row_dst += q*row_src
    for (size_t j = 0; j < n; ++j) A[dst][j] += q * A[src][j];
    for (size_t j = 0; j < m; ++j) r.U[dst][j] += q * r.U[src][j];
  };
  auto add_col = [&](size_t dst, size_t src, const mpz_class& q) {
    for (size_t i = 0; i < m; ++i) A[i][dst] += q * A[i][src];
    for (size_t i = 0; i < n; ++i) r.V[i][dst] += q * r.V[i][src];
  };

  for (size_t t = 0; t < std::min(m, n); ++t) {
    for (;;) {
      // Smallest nonzero entry of the trailing block becomes the pivot.
      size_t pi = m, pj = n;
      for (size_t i = t; i < m; ++i)
        for (size_t j = t; j < n; ++j) {
          if (A[i][j] == 0) continue;
          if (pi == m || cmp(abs(A[i][j]), abs(A[pi][pj])) < 0) { pi = i; pj = j; }
        }
      if (pi == m) { t = std::min(m, n); break; }
      swap_rows(t, pi);
      swap_cols(t, pj);
      bool dirty = false;
      for (size_t i = t + 1; i < m; ++i) {
        if (A[i][t] == 0) continue;
        mpz_class q = A[i][t] / A[t][t];  // truncated
        if (q != 0) add_row(i, t, -q);
        if (A[i][t] != 0) dirty = true;
      }
      for (size_t j = t + 1; j < n; ++j) {
        if (A[t][j] == 0) continue;
        mpz_class q = A[t][j] / A[t][t];
        if (q != 0) add_col(j, t, -q);
        if (A[t][j] != 0) dirty = true;
      }
      if (dirty) continue;
      // Divisibility fixup: fold a non-multiple into row t and reduce again.
      bool fixed = true;
      for (size_t i = t + 1; i < m && fixed; ++i)
        for (size_t j = t + 1; j < n && fixed; ++j)
          if (A[i][j] % A[t][t] != 0) {
            add_row(t, i, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (t >= std::min(m, n)) break;
    if (A[t][t] < 0) {
      for (size_t j = 0; j < n; ++j) A[t][j] = -A[t][j];
      for (size_t j = 0; j < m; ++j) r.U[t][j] = -r.U[t][j];
    }
  }
  r.D = std::move(A);
  return r;
}

std::vector<mpz_class> snf_diagonal(const SNFResult& r) {
  std::vector<mpz_class> d;
  const size_t m = r.D.size(), n = m ? r.D[0].size() : 0;
  for (size_t i = 0; i < std::min(m, n); ++i) d.push_back(r.D[i][i]);
  return d;
}

std::string homology_json(const std::vector<AbelianGroup>& groups) {
  nlohmann::json arr = nlohmann::json::array();
  for (const AbelianGroup& g : groups)
    arr.push_back({{"free", g.free_rank}, {"torsion", g.torsion}});
  nlohmann::json j;
  j["H"] = arr;
  return j.dump() + "\n";
}

std::string homology_csv(const RootDatum& d, Coeff c, const std::vector<AbelianGroup>& groups) {
  std::string out = "family,rank,coeff,k,free,torsion\n";
  for (size_t k = 0; k < groups.size(); ++k) {
    out += std::string(1, family_char(d.family)) + "," + std::to_string(d.rank) + "," +
           coeff_string(c) + "," + std::to_string(k) + "," +
           std::to_string(groups[k].free_rank) + ",";
    for (size_t i = 0; i < groups[k].torsion.size(); ++i) {
      if (i) out += ";";
      out += std::to_string(groups[k].torsion[i]);
    }
    out += "\n";
  }
  return out;
}

}  // namespace todatop
