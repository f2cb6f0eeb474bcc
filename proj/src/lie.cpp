#include "todatop/lie.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>
#include <memory>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace todatop {

Family family_from_char(char c) {
  switch (c) {
    case 'A': return Family::A;
    case 'B': return Family::B;
    case 'C': return Family::C;
    case 'D': return Family::D;
    case 'E': return Family::E;
    case 'F': return Family::F;
    case 'G': return Family::G;
    default:
      throw std::invalid_argument(std::string("unknown family '") + c +
                                  "' (expected one of A B C D E F G)");
  }
}

SqMat SqMat::identity(int n) {
  SqMat m;
  m.n = n;
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

SqMat operator*(const SqMat& x, const SqMat& y) {
  assert(x.n == y.n);
  SqMat r;
  r.n = x.n;
  for (int i = 0; i < x.n; ++i)
    for (int k = 0; k < x.n; ++k) {
      int16_t v = x.at(i, k);
      if (v == 0) continue;
      for (int j = 0; j < x.n; ++j) r.at(i, j) += v * y.at(k, j);
    }
  return r;
}

bool operator==(const SqMat& x, const SqMat& y) {
  return x.n == y.n && x.a == y.a;
}

bool operator<(const SqMat& x, const SqMat& y) {
  if (x.n != y.n) return x.n < y.n;
  return x.a < y.a;
}

size_t SqMatHash::operator()(const SqMat& m) const {
  uint64_t h = 1469598103934665603ull;
  for (int i = 0; i < m.n * m.n; ++i) {
    h ^= static_cast<uint64_t>(static_cast<uint16_t>(m.a[i]));
    h *= 1099511628211ull;
  }
  return static_cast<size_t>(h ^ static_cast<uint64_t>(m.n));
}

namespace {

void check_rank(Family f, int rank) {
  auto bad = [&] {
    throw std::invalid_argument("family " + std::string(1, family_char(f)) +
                                " does not support rank " + std::to_string(rank));
  };
  switch (f) {
    case Family::A: if (rank < 1 || rank > kMaxRank) bad(); break;
    case Family::B:
    case Family::C: if (rank < 2 || rank > kMaxRank) bad(); break;
    case Family::D: if (rank < 4 || rank > kMaxRank) bad(); break;
    case Family::E: if (rank < 6 || rank > 8) bad(); break;
    case Family::F: if (rank != 4) bad(); break;
    case Family::G: if (rank != 2) bad(); break;
  }
}

int family_n_pos(Family f, int l) {
  switch (f) {
    case Family::A: return l * (l + 1) / 2;
    case Family::B:
    case Family::C: return l * l;
    case Family::D: return l * (l - 1);
    case Family::E: return l == 6 ? 36 : l == 7 ? 63 : 120;
    case Family::F: return 24;
    case Family::G: return 6;
  }
  return 0;
}

long long family_order(Family f, int l) {
  auto fact = [](int n) {
    long long r = 1;
    for (int i = 2; i <= n; ++i) r *= i;
    return r;
  };
  switch (f) {
    case Family::A: return fact(l + 1);
    case Family::B:
    case Family::C: return fact(l) << l;
    case Family::D: return fact(l) << (l - 1);
    case Family::E: return l == 6 ? 51840ll : l == 7 ? 2903040ll : 696729600ll;
    case Family::F: return 1152;
    case Family::G: return 12;
  }
  return 0;
}

}  // namespace

RootDatum root_datum(Family f, int rank) {
  check_rank(f, rank);
  RootDatum d;
  d.family = f;
  d.rank = rank;
  auto& C = d.cartan;
  for (int i = 0; i < rank; ++i) C[i][i] = 2;
  auto bond = [&](int i, int j, int cij = -1, int cji = -1) {
    C[i - 1][j - 1] = static_cast<int8_t>(cij);  // 1-based helpers
    C[j - 1][i - 1] = static_cast<int8_t>(cji);
  };
  auto path = [&](int from, int to) {
    for (int i = from; i < to; ++i) bond(i, i + 1);
  };
  switch (f) {
    case Family::A:
      path(1, rank);
      break;
    case Family::B:  // alpha_rank short
      path(1, rank - 1);
      bond(rank - 1, rank, -2, -1);
      break;
    case Family::C:  // alpha_rank long
      path(1, rank - 1);
      bond(rank - 1, rank, -1, -2);
      break;
    case Family::D:
      path(1, rank - 2);
      bond(rank - 2, rank - 1);
      bond(rank - 2, rank);
      break;
    case Family::E:  // path 1..rank-1 with the last node attached at alpha_3
      path(1, rank - 1);
      bond(3, rank);
      break;
    case Family::F:
      bond(1, 2);
      bond(2, 3, -2, -1);
      bond(3, 4);
      break;
    case Family::G:
      bond(1, 2, -1, -3);
      break;
  }
  d.n_pos = family_n_pos(f, rank);
  d.refl.resize(rank);
  for (int i = 0; i < rank; ++i) {
    SqMat m = SqMat::identity(rank);
    // s_i(alpha_j) = alpha_j - <alpha_j, alpha_i^vee> alpha_i = alpha_j - C_{ji} alpha_i
    for (int j = 0; j < rank; ++j) m.at(i, j) = static_cast<int16_t>((i == j ? 1 : 0) - C[j][i]);
    d.refl[i] = m;
  }
  return d;
}

WeylElement weyl_from_word(const RootDatum& d, const std::vector<int>& word) {
  WeylElement w;
  w.word = word;
  w.mat = SqMat::identity(d.rank);
  for (int letter : word) {
    if (letter < 1 || letter > d.rank)
      throw std::invalid_argument("word letter out of range: " + std::to_string(letter));
    w.mat = w.mat * d.refl[letter - 1];
  }
  return w;
}

namespace {

// Weight-coordinate reflection: (s_i v)_j = v_j - v_i * C_{ij}.
inline void reflect_weight(const RootDatum& d, int i, int* v) {
  int vi = v[i];
  if (vi == 0) return;
  for (int j = 0; j < d.rank; ++j) v[j] -= vi * d.cartan[i][j];
}

// Six bits per coordinate: orbit weights of a 0/1 indicator stay within the
// highest coroot height (at most 29 for the supported diagrams), and ten
// six-bit fields fit a single 64-bit key.
inline uint64_t pack_weight(const int* v, int rank) {
  uint64_t key = 0;
  for (int j = 0; j < rank; ++j) {
    assert(v[j] >= -32 && v[j] <= 31);
    key |= (static_cast<uint64_t>(v[j]) & 0x3f) << (6 * j);
  }
  return key;
}

inline void unpack_weight(uint64_t key, int rank, int* v) {
  for (int j = 0; j < rank; ++j) {
    const int x = static_cast<int>((key >> (6 * j)) & 0x3f);
    v[j] = x >= 32 ? x - 64 : x;
  }
}

struct U64Hash {
  size_t operator()(uint64_t x) const {
    x ^= x >> 33; x *= 0xff51afd7ed558ccdull;
    x ^= x >> 33; x *= 0xc4ceb9fe1a85ec53ull;
    x ^= x >> 33;
    return static_cast<size_t>(x);
  }
};

CosetTable build_coset_table(const RootDatum& d, uint32_t Jmask) {
  CosetTable t;
  int v[kMaxRank] = {0};
  for (int i = 0; i < d.rank; ++i)
    if (Jmask & (1u << i)) v[i] = 1;
  std::vector<uint64_t> weights;
  std::unordered_map<uint64_t, int32_t, U64Hash> seen;
  weights.push_back(pack_weight(v, d.rank));
  seen.emplace(weights[0], 0);
  t.parent.push_back(-1);
  t.letter.push_back(0);
  t.depth.push_back(0);
  for (size_t head = 0; head < weights.size(); ++head) {
    int base[kMaxRank];
    unpack_weight(weights[head], d.rank, base);
    for (int i = 0; i < d.rank; ++i) {
      if (base[i] == 0) continue;  // s_i fixes this weight
      int w[kMaxRank];
      std::copy(base, base + d.rank, w);
      reflect_weight(d, i, w);
      uint64_t key = pack_weight(w, d.rank);
      auto [it, fresh] = seen.emplace(key, static_cast<int32_t>(weights.size()));
      if (fresh) {
        weights.push_back(key);
        t.parent.push_back(static_cast<int32_t>(head));
        t.letter.push_back(static_cast<int8_t>(i + 1));
        t.depth.push_back(t.depth[head] + 1);
      }
    }
  }
  return t;
}

std::mutex g_coset_mutex;
std::map<std::tuple<char, int, uint32_t>, std::unique_ptr<CosetTable>> g_coset_cache;

}  // namespace

std::vector<int> CosetTable::word_of(size_t node) const {
  std::vector<int> w;
  for (int32_t n = static_cast<int32_t>(node); parent[n] >= 0; n = parent[n])
    w.push_back(letter[n]);
  return w;  // already in product order: node = s_{w[0]} s_{w[1]} ... * identity coset
}

const CosetTable& minimal_coset_table(const RootDatum& d, uint32_t Jmask) {
  if (Jmask >= (1u << d.rank))
    throw std::invalid_argument("subset mask out of range for rank " + std::to_string(d.rank));
  auto key = std::make_tuple(family_char(d.family), d.rank, Jmask);
  {
    std::lock_guard<std::mutex> lock(g_coset_mutex);
    auto it = g_coset_cache.find(key);
    if (it != g_coset_cache.end()) return *it->second;
  }
  auto table = std::make_unique<CosetTable>(build_coset_table(d, Jmask));
  std::lock_guard<std::mutex> lock(g_coset_mutex);
  auto [it, fresh] = g_coset_cache.emplace(key, std::move(table));
  return *it->second;
}

std::vector<WeylElement> minimal_coset_reps(const RootDatum& d, uint32_t Jmask) {
  const CosetTable& t = minimal_coset_table(d, Jmask);
  std::vector<WeylElement> reps(t.size());
  for (size_t n = 0; n < t.size(); ++n) {
    reps[n].word = t.word_of(n);
    reps[n].mat = n == 0 ? SqMat::identity(d.rank)
                         : d.refl[t.letter[n] - 1] * reps[t.parent[n]].mat;
  }
  return reps;
}

WeylElement longest_in_parabolic(const RootDatum& d, uint32_t subset_mask) {
  if (subset_mask >= (1u << d.rank))
    throw std::invalid_argument("subset mask out of range for rank " + std::to_string(d.rank));
  int v[kMaxRank] = {0};
  for (int i = 0; i < d.rank; ++i)
    if (subset_mask & (1u << i)) v[i] = 1;
  std::vector<int> applied;
  for (;;) {
    int pick = -1;
    for (int i = 0; i < d.rank; ++i)
      if ((subset_mask & (1u << i)) && v[i] > 0) { pick = i; break; }
    if (pick < 0) break;
    reflect_weight(d, pick, v);
    applied.push_back(pick + 1);
  }
  std::reverse(applied.begin(), applied.end());  // applications compose on the left
  WeylElement w = weyl_from_word(d, applied);
  assert(w.length() == parabolic_n_pos(d, subset_mask));
  return w;
}

int parabolic_n_pos(const RootDatum& d, uint32_t subset_mask) {
  int total = 0;
  uint32_t rest = subset_mask;
  while (rest) {
    int k0 = __builtin_ctz(rest);
    std::vector<int> comp = component_of(d, subset_mask, k0);
    DiagramClass cls = classify_component(d, comp);
    total += family_n_pos(cls.family, cls.rank);
    for (int n : comp) rest &= ~(1u << n);
  }
  return total;
}

long long weyl_order(const RootDatum& d, uint32_t subset_mask) {
  if (subset_mask >= (1u << d.rank))
    throw std::invalid_argument("subset mask out of range for rank " + std::to_string(d.rank));
  long long total = 1;
  uint32_t rest = subset_mask;
  while (rest) {
    int k0 = __builtin_ctz(rest);
    std::vector<int> comp = component_of(d, subset_mask, k0);
    DiagramClass cls = classify_component(d, comp);
    total *= family_order(cls.family, cls.rank);
    for (int n : comp) rest &= ~(1u << n);
  }
  return total;
}

std::vector<std::array<int16_t, kMaxRank>> all_roots(const RootDatum& d) {
  std::vector<std::array<int16_t, kMaxRank>> roots;
  std::unordered_map<uint64_t, char, U64Hash> seen;
  auto push = [&](const std::array<int16_t, kMaxRank>& r) {
    int v[kMaxRank];
    for (int j = 0; j < d.rank; ++j) v[j] = r[j];
    uint64_t key = pack_weight(v, d.rank);
    if (seen.emplace(key, 1).second) roots.push_back(r);
  };
  for (int i = 0; i < d.rank; ++i) {
    std::array<int16_t, kMaxRank> simple{};
    simple[i] = 1;
    push(simple);
  }
  for (size_t head = 0; head < roots.size(); ++head) {
    for (int i = 0; i < d.rank; ++i) {
      std::array<int16_t, kMaxRank> img{};
      const auto& r = roots[head];
      for (int row = 0; row < d.rank; ++row) {
        int acc = 0;
        for (int j = 0; j < d.rank; ++j) acc += d.refl[i].at(row, j) * r[j];
        img[row] = static_cast<int16_t>(acc);
      }
      push(img);
    }
  }
  return roots;
}

int length_by_inversions(const RootDatum& d, const SqMat& w) {
  auto roots = all_roots(d);
  int inversions = 0;
  for (const auto& r : roots) {
    bool positive = true;
    for (int j = 0; j < d.rank; ++j)
      if (r[j] < 0) { positive = false; break; }
    if (!positive) continue;
    int first_nonzero = 0;
    for (int row = 0; row < d.rank; ++row) {
      int acc = 0;
      for (int j = 0; j < d.rank; ++j) acc += w.at(row, j) * r[j];
      if (acc != 0) { first_nonzero = acc; break; }
    }
    if (first_nonzero < 0) ++inversions;
  }
  return inversions;
}

std::vector<int> component_of(const RootDatum& d, uint32_t keep_mask, int k0) {
  assert(keep_mask & (1u << k0));
  std::vector<int> comp{k0};
  uint32_t in_comp = 1u << k0;
  for (size_t head = 0; head < comp.size(); ++head) {
    for (int j = 0; j < d.rank; ++j) {
      if ((keep_mask & (1u << j)) && !(in_comp & (1u << j)) && d.adjacent(comp[head], j)) {
        comp.push_back(j);
        in_comp |= 1u << j;
      }
    }
  }
  std::sort(comp.begin(), comp.end());
  return comp;
}

namespace {

// Walk a simple path inside `nodes` starting at `from` (whose canonical index
// is already assigned), stepping away from `avoid`, assigning canonical
// indices step (descending or ascending) per hop.
void assign_path(const RootDatum& d, const std::vector<int>& nodes,
                 std::vector<int>& canon_of, int from, int avoid, int step) {
  int prev = avoid, cur = from;
  for (;;) {
    int next = -1;
    for (int j : nodes)
      if (j != prev && d.adjacent(cur, j)) { next = j; break; }
    if (next < 0) break;
    canon_of[next] = canon_of[cur] + step;
    prev = cur;
    cur = next;
  }
}

}  // namespace

DiagramClass classify_component(const RootDatum& d, const std::vector<int>& nodes) {
  const int r = static_cast<int>(nodes.size());
  DiagramClass cls;
  cls.rank = r;
  // canon_of is indexed by ambient node id; -1 = unassigned.
  std::vector<int> canon_of(d.rank, -1);

  auto degree = [&](int x) {
    int deg = 0;
    for (int j : nodes) deg += d.adjacent(x, j) ? 1 : 0;
    return deg;
  };

  if (r == 1) {
    cls.family = Family::A;
    canon_of[nodes[0]] = 0;
  } else {
    // Locate multiple bonds.
    int u = -1, v = -1, mult = 1;  // C[u][v] in {-2,-3}
    for (int x : nodes)
      for (int y : nodes)
        if (d.cart(x, y) <= -2) { u = x; v = y; mult = -d.cart(x, y); }
    if (mult == 3) {
      if (r != 2) throw std::logic_error("triple bond in a component of rank != 2");
      cls.family = Family::G;
      // The canonical datum carries its -3 at cart(1, 0), so u maps to node 1.
      canon_of[u] = 1;
      canon_of[v] = 0;
    } else if (mult == 2) {
      if (r == 2) {
        cls.family = Family::B;  // B2 and C2 coincide as labeled diagrams up to swap
        canon_of[u] = 0;
        canon_of[v] = 1;
      } else if (degree(v) == 1) {
        cls.family = Family::B;  // arrow points into the short end node
        canon_of[v] = r - 1;
        canon_of[u] = r - 2;
        assign_path(d, nodes, canon_of, u, v, -1);
      } else if (degree(u) == 1) {
        cls.family = Family::C;
        canon_of[u] = r - 1;
        canon_of[v] = r - 2;
        assign_path(d, nodes, canon_of, v, u, -1);
      } else {
        if (r != 4) throw std::logic_error("interior double bond in a component of rank != 4");
        cls.family = Family::F;
        canon_of[u] = 1;
        canon_of[v] = 2;
        assign_path(d, nodes, canon_of, u, v, -1);
        assign_path(d, nodes, canon_of, v, u, +1);
      }
    } else {
      // Simply laced: path or a single degree-3 branch node.
      int branch = -1;
      for (int x : nodes)
        if (degree(x) == 3) { branch = x; break; }
      if (branch < 0) {
        cls.family = Family::A;
        int end = -1;
        for (int x : nodes)
          if (degree(x) == 1) { end = x; break; }
        canon_of[end] = 0;
        assign_path(d, nodes, canon_of, end, -1, +1);
      } else {
        // Arms from the branch node, each a list of nodes walking outward.
        std::vector<std::vector<int>> arms;
        for (int j : nodes) {
          if (!d.adjacent(branch, j)) continue;
          std::vector<int> arm{j};
          int prev = branch, cur = j;
          for (;;) {
            int next = -1;
            for (int x : nodes)
              if (x != prev && d.adjacent(cur, x)) { next = x; break; }
            if (next < 0) break;
            arm.push_back(next);
            prev = cur;
            cur = next;
          }
          arms.push_back(std::move(arm));
        }
        if (arms.size() != 3) throw std::logic_error("branch node without three arms");
        std::sort(arms.begin(), arms.end(), [&](const auto& x, const auto& y) {
          if (x.size() != y.size()) return x.size() < y.size();
          return x[0] < y[0];  // deterministic tie-break
        });
        size_t a = arms[0].size(), b = arms[1].size(), c = arms[2].size();
        if (a == 1 && b == 1) {
          cls.family = Family::D;  // arms (1,1,m)
          canon_of[branch] = r - 3;
          canon_of[arms[0][0]] = r - 2;
          canon_of[arms[1][0]] = r - 1;
          for (size_t s = 0; s < c; ++s) canon_of[arms[2][s]] = r - 4 - static_cast<int>(s);
        } else if (a == 1 && b == 2 && c >= 2 && c <= 4) {
          cls.family = Family::E;  // arms (1,2,c) with rank c+4 in {6,7,8}
          canon_of[branch] = 2;
          canon_of[arms[0][0]] = r - 1;
          canon_of[arms[1][0]] = 1;
          canon_of[arms[1][1]] = 0;
          for (size_t s = 0; s < c; ++s) canon_of[arms[2][s]] = 3 + static_cast<int>(s);
        } else {
          throw std::logic_error("unrecognized simply-laced branch shape");
        }
      }
    }
  }

  cls.to_canonical.resize(r);
  for (int i = 0; i < r; ++i) {
    cls.to_canonical[i] = canon_of[nodes[i]];
    if (cls.to_canonical[i] < 0) throw std::logic_error("sub-diagram node left unassigned");
  }
  // Verify the map really is a bond-direction-preserving isomorphism.
  RootDatum canon = root_datum(cls.family, cls.rank);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      if (d.cart(nodes[i], nodes[j]) !=
          canon.cart(cls.to_canonical[i], cls.to_canonical[j]))
        throw std::logic_error("sub-diagram classification failed verification");
  return cls;
}

std::string subset_string(int rank, uint32_t Jmask) {
  std::string s = "(";
  for (int i = 0; i < rank; ++i) s += (Jmask & (1u << i)) ? '0' : '*';
  s += ")";
  return s;
}

}  // namespace todatop
