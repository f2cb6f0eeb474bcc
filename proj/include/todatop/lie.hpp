// Root data for the finite crystallographic families, Weyl group machinery on
// root/weight coordinates, parabolic quotients W/W^J with minimal-length
// representatives, and Dynkin sub-diagram classification.
#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace todatop {

enum class Family : char {
  A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G'
};

Family family_from_char(char c);
inline char family_char(Family f) { return static_cast<char>(f); }

constexpr int kMaxRank = 10;

// Small dense integer matrix, rank x rank with rank <= kMaxRank.  Entries of
// Weyl-group elements in root coordinates stay tiny (bounded by the highest
// root), so int16 is plenty.
struct SqMat {
  int n = 0;
  std::array<int16_t, kMaxRank * kMaxRank> a{};

  static SqMat identity(int n);
  int16_t& at(int i, int j) { return a[i * n + j]; }
  int16_t at(int i, int j) const { return a[i * n + j]; }
  friend SqMat operator*(const SqMat& x, const SqMat& y);
  friend bool operator==(const SqMat& x, const SqMat& y);
  friend bool operator<(const SqMat& x, const SqMat& y);  // lexicographic, for ordered sets
};

struct SqMatHash {
  size_t operator()(const SqMat& m) const;
};

// Immutable description of a simple root system.  Simple roots are indexed
// 1..rank externally and 0..rank-1 internally; all public masks use bit i for
// simple root alpha_{i+1}.
struct RootDatum {
  Family family;
  int rank;
  // cartan[i][j] = <alpha_i, alpha_j^vee>, so row i expresses alpha_i in the
  // fundamental-weight basis.
  std::array<std::array<int8_t, kMaxRank>, kMaxRank> cartan{};
  int n_pos = 0;               // number of positive roots = length of w0
  std::vector<SqMat> refl;     // refl[i]: s_{i+1} acting on root coordinates

  int cart(int i, int j) const { return cartan[i][j]; }
  bool adjacent(int i, int j) const { return i != j && cartan[i][j] != 0; }
  uint32_t full_mask() const { return (1u << rank) - 1; }
};

// Validates the family/rank combination (A: 1..10, B/C: 2..10, D: 4..10,
// E: 6..8, F: 4, G: 2) and builds the datum; throws std::invalid_argument
// otherwise.
RootDatum root_datum(Family f, int rank);

struct WeylElement {
  std::vector<int> word;  // 1-based letters; w = s_{word[0]} s_{word[1]} ...
  SqMat mat;              // action on root coordinates
  int length() const { return static_cast<int>(word.size()); }
};

WeylElement weyl_from_word(const RootDatum& d, const std::vector<int>& word);

// Longest element of the standard parabolic subgroup generated by
// { s_i : i in subset_mask }.  Deterministic reduced word.
WeylElement longest_in_parabolic(const RootDatum& d, uint32_t subset_mask);

// Order of the parabolic subgroup W_S, S = subset_mask (product over the
// connected components of the sub-diagram).
long long weyl_order(const RootDatum& d, uint32_t subset_mask);

// Number of positive roots of the parabolic subsystem spanned by subset_mask.
int parabolic_n_pos(const RootDatum& d, uint32_t subset_mask);

// Breadth-first table of the orbit W * lambda_J (lambda_J = sum of the
// fundamental weights indexed by Jmask).  Node 0 is the identity coset; node
// k>0 arises as s_{letter[k]} * (node parent[k]), so depth[k] is the length
// of the minimal-length coset representative and its reduced word is read off
// by walking parents.  The stabilizer of lambda_J is W^J = < s_i : i not in J >,
// hence nodes enumerate W/W^J.
struct CosetTable {
  std::vector<int32_t> parent;
  std::vector<int8_t> letter;   // 1-based generator
  std::vector<int32_t> depth;
  size_t size() const { return parent.size(); }
  std::vector<int> word_of(size_t node) const;
};

// Cached per (family, rank, Jmask); the returned reference stays valid for
// the lifetime of the process.  Thread-safe, write-once.
const CosetTable& minimal_coset_table(const RootDatum& d, uint32_t Jmask);

// Materialized minimal-length representatives in breadth-first order.
std::vector<WeylElement> minimal_coset_reps(const RootDatum& d, uint32_t Jmask);

// All roots in root coordinates (positive ones have all coordinates >= 0).
std::vector<std::array<int16_t, kMaxRank>> all_roots(const RootDatum& d);

// Length computed as the number of positive roots sent to negative ones;
// used to cross-check reduced words.
int length_by_inversions(const RootDatum& d, const SqMat& w);

// Classification of a connected full sub-diagram.  to_canonical[i] is the
// 0-based node of root_datum(family, rank) that nodes[i] maps to under a
// bond-direction-preserving isomorphism.
struct DiagramClass {
  Family family;
  int rank;
  std::vector<int> to_canonical;
};

// nodes: 0-based, must form a connected full sub-diagram of d.
DiagramClass classify_component(const RootDatum& d, const std::vector<int>& nodes);

// Connected component (0-based, sorted) of node k0 in the sub-diagram spanned
// by keep_mask.
std::vector<int> component_of(const RootDatum& d, uint32_t keep_mask, int k0);

std::string subset_string(int rank, uint32_t Jmask);  // "(*0*)" style: 0 marks members

}  // namespace todatop
