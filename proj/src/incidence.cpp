#include "todatop/incidence.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cstdlib>
#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "todatop/sign.hpp"

namespace todatop {
namespace {

std::mutex g_top_mutex;
std::map<std::tuple<char, int, int>, long long> g_top_cache;

std::mutex g_table_mutex;
std::map<std::pair<char, int>, std::unique_ptr<IncidenceTable>> g_table_cache;

long long binom(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

long long top_incidence(const RootDatum& d, int k) {
  if (k < 1 || k > d.rank) throw std::invalid_argument("top_incidence: k out of range");
  const auto key = std::make_tuple(family_char(d.family), d.rank, k);
  {
    std::lock_guard<std::mutex> lock(g_top_mutex);
    auto it = g_top_cache.find(key);
    if (it != g_top_cache.end()) return it->second;
  }
  const WMinusStats st = w_minus_stats(d, 1u << (k - 1), all_minus(d.rank));
  long long mag = std::llabs(st.signed_sum);
  long long value = ((k - 1) & 1) ? -mag : mag;
  std::lock_guard<std::mutex> lock(g_top_mutex);
  g_top_cache.emplace(key, value);
  return value;
}

long long a_top_closed_form(int l, int k) {
  const long long sgn = ((k - 1) & 1) ? -1 : 1;
  if (l & 1) return (sgn - 1) * binom((l + 1) / 2, k / 2);
  return 2 * sgn * binom(l / 2, k / 2);
}

int nu_exponent(uint32_t Jmask, int k) {
  const uint32_t below = (1u << (k - 1)) - 1;
  return std::popcount(below & ~Jmask);
}

long long incidence_number(const RootDatum& d, uint32_t Jmask, int k) {
  if (k < 1 || k > d.rank) throw std::invalid_argument("incidence_number: k out of range");
  if (Jmask >> (k - 1) & 1) throw std::invalid_argument("incidence_number: k already in J");
  const uint32_t keep = d.full_mask() & ~Jmask;
  const std::vector<int> comp = component_of(d, keep, k - 1);
  const DiagramClass cls = classify_component(d, comp);
  int pos = -1;
  for (size_t i = 0; i < comp.size(); ++i)
    if (comp[i] == k - 1) pos = cls.to_canonical[i];
  assert(pos >= 0);
  const RootDatum& cd = root_datum(cls.family, cls.rank);
  const long long mag = std::llabs(top_incidence(cd, pos + 1));
  return (nu_exponent(Jmask, k) & 1) ? -mag : mag;
}

const IncidenceTable& incidence_table(const RootDatum& d) {
  const auto key = std::make_pair(family_char(d.family), d.rank);
  {
    std::lock_guard<std::mutex> lock(g_table_mutex);
    auto it = g_table_cache.find(key);
    if (it != g_table_cache.end()) return *it->second;
  }
  auto tab = std::make_unique<IncidenceTable>();
  tab->rank = d.rank;
  tab->val.assign(size_t(1) << d.rank, {});
  for (uint32_t J = 0; J < (1u << d.rank); ++J)
    for (int k = 1; k <= d.rank; ++k)
      if (!(J >> (k - 1) & 1)) tab->val[J][k - 1] = incidence_number(d, J, k);
  std::lock_guard<std::mutex> lock(g_table_mutex);
  auto [it, inserted] = g_table_cache.emplace(key, std::move(tab));
  (void)inserted;
  return *it->second;
}

bool is_orientable(const RootDatum& d) {
  for (int k = 1; k <= d.rank; ++k)
    if (top_incidence(d, k) != 0) return false;
  return true;
}

std::vector<GraphEdge> incidence_graph(const RootDatum& d) {
  const IncidenceTable& tab = incidence_table(d);
  std::vector<GraphEdge> edges;
  for (uint32_t J = 0; J < (1u << d.rank); ++J)
    for (int k = 1; k <= d.rank; ++k) {
      if (J >> (k - 1) & 1) continue;
      const long long v = tab.val[J][k - 1];
      if (v != 0) edges.push_back({J, J | (1u << (k - 1)), v});
    }
  return edges;
}

std::vector<GraphEdge> local_graph(const RootDatum& d) {
  Family af = d.family;
  int arank = d.rank + 1;
  switch (d.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::D:
      break;
    case Family::E:
      if (d.rank >= 8)
        throw std::invalid_argument("local graph: no ambient diagram one rank up");
      break;
    case Family::F:
    case Family::G:
      throw std::invalid_argument("local graph: no ambient diagram one rank up");
  }
  if (arank > kMaxRank)
    throw std::invalid_argument("local graph: ambient rank exceeds supported maximum");
  const RootDatum& ad = root_datum(af, arank);
  const IncidenceTable& tab = incidence_table(ad);
  std::vector<GraphEdge> edges;
  // J in the small diagram corresponds to the ambient subset J (same mask):
  // the extra node alpha_{l+1} stays outside J.
  for (uint32_t J = 0; J < (1u << d.rank); ++J)
    for (int k = 1; k <= d.rank; ++k) {
      if (J >> (k - 1) & 1) continue;
      if (tab.val[J][k - 1] != 0) edges.push_back({J, J | (1u << (k - 1)), 0});
    }
  return edges;
}

std::string graph_dot(const RootDatum& d, const std::vector<GraphEdge>& edges, bool weighted) {
  std::vector<GraphEdge> sorted = edges;
  std::sort(sorted.begin(), sorted.end(), [](const GraphEdge& a, const GraphEdge& b) {
    return a.from != b.from ? a.from < b.from : a.to < b.to;
  });
  std::string out = "digraph G {\n";
  for (uint32_t J = 0; J < (1u << d.rank); ++J)
    out += "  \"" + subset_string(d.rank, J) + "\";\n";
  for (const GraphEdge& e : sorted) {
    out += "  \"" + subset_string(d.rank, e.from) + "\" -> \"" + subset_string(d.rank, e.to) + "\"";
    if (weighted) out += " [weight=" + std::to_string(e.weight) + "]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

std::string incidence_csv(const RootDatum& d) {
  std::string out = "J,k,value\n";
  const IncidenceTable& tab = incidence_table(d);
  for (uint32_t J = 0; J < (1u << d.rank); ++J)
    for (int k = 1; k <= d.rank; ++k) {
      if (J >> (k - 1) & 1) continue;
      const long long v = tab.val[J][k - 1];
      if (v != 0)
        out += subset_string(d.rank, J) + "," + std::to_string(k) + "," + std::to_string(v) + "\n";
    }
  return out;
}

}  // namespace todatop
