#include "todatop/divisor.hpp"

#include <cassert>
#include <stdexcept>

#include "todatop/sign.hpp"

namespace todatop {
namespace {

void normalize(UniPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

UniPoly make_monic(UniPoly p) {
  normalize(p);
  if (p.empty()) return p;
  const mpq_class lead = p.back();
  for (mpq_class& c : p) c /= lead;
  return p;
}

int sign_at_plus_inf(const UniPoly& p) { return sgn(p.back()); }
int sign_at_minus_inf(const UniPoly& p) {
  return (upoly_degree(p) % 2 == 0) ? sgn(p.back()) : -sgn(p.back());
}

int variations(const std::vector<int>& signs) {
  int v = 0, prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++v;
    prev = s;
  }
  return v;
}

}  // namespace

int upoly_degree(const UniPoly& p) {
  for (int i = (int)p.size() - 1; i >= 0; --i)
    if (p[i] != 0) return i;
  return -1;
}

UniPoly upoly_derivative(const UniPoly& p) {
  UniPoly d;
  for (size_t i = 1; i < p.size(); ++i) d.push_back(p[i] * (long)i);
  normalize(d);
  return d;
}

UniPoly upoly_remainder(UniPoly a, const UniPoly& b) {
  normalize(a);
  const int db = upoly_degree(b);
  assert(db >= 0);
  while (upoly_degree(a) >= db) {
    const int da = upoly_degree(a);
    const mpq_class q = a[da] / b[db];
    for (int i = 0; i <= db; ++i) a[da - db + i] -= q * b[i];
    a[da] = 0;  // clear rounding-free leading slot explicitly
    normalize(a);
    if (a.empty()) break;
  }
  return a;
}

UniPoly upoly_gcd(UniPoly a, UniPoly b) {
  a = make_monic(std::move(a));
  b = make_monic(std::move(b));
  while (!b.empty()) {
    UniPoly r = make_monic(upoly_remainder(a, b));
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

int sturm_real_roots(const UniPoly& p_in) {
  UniPoly p = p_in;
  normalize(p);
  if (p.empty()) throw std::invalid_argument("sturm_real_roots: zero polynomial");
  if (upoly_degree(p) == 0) return 0;
  // Squarefree part.
  const UniPoly g = upoly_gcd(p, upoly_derivative(p));
  if (upoly_degree(g) > 0) {
    // Exact division p / g.
    UniPoly q(upoly_degree(p) - upoly_degree(g) + 1, mpq_class(0));
    UniPoly r = p;
    const int dg = upoly_degree(g);
    while (upoly_degree(r) >= dg) {
      const int dr = upoly_degree(r);
      const mpq_class c = r[dr] / g[dg];
      q[dr - dg] = c;
      for (int i = 0; i <= dg; ++i) r[dr - dg + i] -= c * g[i];
      normalize(r);
      if (r.empty()) break;
    }
    assert(r.empty());
    p = std::move(q);
  }
  if (upoly_degree(p) == 0) return 0;

  std::vector<UniPoly> chain{p, upoly_derivative(p)};
  while (upoly_degree(chain.back()) > 0) {
    UniPoly r = upoly_remainder(chain[chain.size() - 2], chain.back());
    if (r.empty()) break;
    for (mpq_class& c : r) c = -c;
    // Positive rescale keeps the sign pattern and the coefficients small.
    const mpq_class scale = abs(r[upoly_degree(r)]);
    for (mpq_class& c : r) c /= scale;
    chain.push_back(std::move(r));
  }
  std::vector<int> lo, hi;
  for (const UniPoly& f : chain) {
    if (f.empty()) continue;
    lo.push_back(sign_at_minus_inf(f));
    hi.push_back(sign_at_plus_inf(f));
  }
  return variations(lo) - variations(hi);
}

Poly divisor_determinant(int l) {
  assert(l >= 2);
  const int nvars = 2;  // u = pbar_1 (weight 1), v = pbar_2 (weight 2)
  std::vector<std::vector<Poly>> M(l, std::vector<Poly>(l, Poly(nvars)));
  for (int i = 1; i <= l; ++i)
    for (int j = 1; j <= l; ++j) {
      const int idx = l + 2 - i - j;
      if (idx == 0) M[i - 1][j - 1] = Poly::constant(nvars, 1);
      else if (idx == 1) M[i - 1][j - 1] = Poly::variable(nvars, 0);
      else if (idx == 2) M[i - 1][j - 1] = Poly::variable(nvars, 1);
    }
  Poly det = poly_det(M);
  long long deg = -1;
  if (!det.is_weighted_homogeneous(&deg) || deg != l)
    throw std::logic_error("divisor determinant is not homogeneous of the expected weight");
  return det;
}

UniPoly divisor_profile_poly(int l) {
  const Poly det = divisor_determinant(l);
  // Each term u^a v^b has a + 2b = l; under v = x u^2 it contributes to x^b.
  UniPoly q;
  for (const auto& [e, c] : det.terms()) {
    const int b = e[1];
    if ((int)q.size() <= b) q.resize(b + 1, mpq_class(0));
    q[b] += c;
  }
  normalize(q);
  return q;
}

DivisorSummary divisor_summary(int l) {
  DivisorSummary s;
  s.l = l;
  const UniPoly q = divisor_profile_poly(l);
  s.degree = upoly_degree(q);
  s.real_roots = sturm_real_roots(q);
  s.components = 2LL * (s.real_roots + (l % 2 ? 1 : 0));
  const RootDatum& d = root_datum(Family::A, l);
  const long long weyl = w_minus_stats(d, 1u << 1, all_minus(l)).count;
  if (s.components != weyl)
    throw std::logic_error("divisor component count disagrees with the Weyl count for l=" +
                           std::to_string(l));
  return s;
}

std::string divisor_csv(const std::vector<DivisorSummary>& rows) {
  std::string out = "l,degree,real_roots,components\n";
  for (const DivisorSummary& s : rows)
    out += std::to_string(s.l) + "," + std::to_string(s.degree) + "," +
           std::to_string(s.real_roots) + "," + std::to_string(s.components) + "\n";
  return out;
}

}  // namespace todatop
