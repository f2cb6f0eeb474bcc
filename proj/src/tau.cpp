#include "todatop/tau.hpp"

#include <cassert>
#include <stdexcept>

#include <json.hpp>

namespace todatop {
namespace {

std::vector<Poly> schur_p_list(int kmax, int nvars, bool odd_only) {
  std::vector<Poly> p;
  p.reserve(kmax + 1);
  p.push_back(Poly::constant(nvars, 1));
  for (int k = 1; k <= kmax; ++k) {
    Poly s(nvars);
    for (int i = 1; i <= std::min(k, nvars); ++i) {
      if (odd_only && i % 2 == 0) continue;
      s = s + Poly::variable(nvars, i - 1) * p[k - i] * mpq_class(i);
    }
    p.push_back(s * mpq_class(1, k));
  }
  return p;
}

// Wronskian determinant of (f_1, ..., f_k) with respect to t1, where the
// derivative just shifts the p-index down: row r, column c holds p_{idx(c)-r}.
Poly p_wronskian(const std::vector<Poly>& p, const std::vector<int>& indices, int nvars) {
  const int k = (int)indices.size();
  auto entry = [&](int r, int c) -> Poly {
    const int m = indices[c] - r;
    if (m < 0) return Poly(nvars);
    return p[m];
  };
  std::vector<std::vector<Poly>> M(k, std::vector<Poly>(k, Poly(nvars)));
  for (int r = 0; r < k; ++r)
    for (int c = 0; c < k; ++c) M[r][c] = entry(r, c);
  return poly_det(M);
}

// D_k = || p_{N-1}, p_{N-2}, ..., p_{N-k} ||.
Poly corner_minor(const std::vector<Poly>& p, int N, int k, int nvars) {
  std::vector<int> idx(k);
  for (int c = 0; c < k; ++c) idx[c] = N - 1 - c;
  return p_wronskian(p, idx, nvars);
}

// Splits off the largest factor that makes the remainder an exact square:
// S = scale * R^2 with R sign-normalized so its lowest monomial is positive.
// Prefers scale = 1 when S itself is a square.
std::pair<mpq_class, Poly> square_with_scale(const Poly& S) {
  auto normalized = [](Poly q) {
    if (!q.is_zero() && q.terms().begin()->second < 0) q = -q;
    return q;
  };
  if (auto direct = Poly::sqrt_exact(S)) return {1, normalized(*direct)};
  const mpq_class lead = S.terms().rbegin()->second;
  auto root = Poly::sqrt_exact(S * (1 / lead));
  if (!root) throw std::logic_error("tau square extraction: not a square up to scale");
  return {lead, normalized(*root)};
}

}  // namespace

Poly schur_p(int k, int nvars, bool odd_only) {
  assert(k >= 0);
  return schur_p_list(k, nvars, odd_only)[k];
}

Poly schur_pbar(int k, int nvars) {
  assert(k >= 1);
  const auto p = schur_p_list(k, nvars, false);
  std::vector<int> idx(k);
  for (int c = 0; c < k; ++c) idx[c] = c + 1;
  const Poly w = p_wronskian(p, idx, nvars);
  return (k * (k - 1) / 2) % 2 ? -w : w;
}

TauSystem tau_system(Family f, int rank) {
  TauSystem sys;
  sys.family = f;
  sys.rank = rank;
  int N = 0;
  bool odd_only = false;
  switch (f) {
    case Family::A:
      if (rank < 1 || rank > kMaxRank) throw std::invalid_argument("tau_system: bad rank");
      N = rank + 1;
      sys.nvars = rank;
      break;
    case Family::C:
      if (rank < 2 || rank > kMaxRank) throw std::invalid_argument("tau_system: bad rank");
      N = 2 * rank;
      sys.nvars = 2 * rank - 1;
      odd_only = true;
      break;
    case Family::B:
      if (rank < 2 || rank > kMaxRank) throw std::invalid_argument("tau_system: bad rank");
      N = 2 * rank + 1;
      sys.nvars = 2 * rank - 1;
      odd_only = true;
      break;
    case Family::G:
      if (rank != 2) throw std::invalid_argument("tau_system: bad rank");
      N = 7;
      sys.nvars = 5;
      odd_only = true;
      break;
    default:
      throw std::invalid_argument("tau_system: no Wronskian construction for this family");
  }
  const auto p = schur_p_list(N - 1, sys.nvars, odd_only);
  for (int k = 1; k <= rank; ++k) {
    Poly Dk = corner_minor(p, N, k, sys.nvars);
    if (f == Family::B && k == rank) {
      auto [scale, root] = square_with_scale(-Dk);
      sys.dl_scale = scale;
      sys.taus.push_back(root);
    } else {
      sys.taus.push_back(Dk);
    }
  }
  if (f == Family::G) {
    const Poly D1 = corner_minor(p, N, 1, sys.nvars);
    const Poly D3 = corner_minor(p, N, 3, sys.nvars);
    sys.constraint = D3 + D1 * D1;
  } else {
    sys.bilinear = bilinear_constants(root_datum(f, rank), sys.taus);
  }
  return sys;
}

std::vector<mpq_class> bilinear_constants(const RootDatum& d, const std::vector<Poly>& taus) {
  assert((int)taus.size() == d.rank);
  std::vector<mpq_class> c;
  for (int j = 0; j < d.rank; ++j) {
    const Poly dt = taus[j].derivative(0);
    const Poly lhs = taus[j] * dt.derivative(0) - dt * dt;
    Poly rhs = Poly::constant(taus[j].nvars(), 1);
    for (int k = 0; k < d.rank; ++k) {
      if (k == j) continue;
      const int e = -d.cartan[j][k];
      assert(e >= 0);
      rhs = rhs * taus[k].pow(e);
    }
    const auto q = Poly::divide_exact(lhs, rhs);
    if (!q) throw std::logic_error("bilinear constant: division not exact");
    if (q->is_zero()) {
      c.push_back(0);
      continue;
    }
    if (q->terms().size() != 1 || q->degree() != 0)
      throw std::logic_error("bilinear constant: quotient is not constant");
    c.push_back(q->terms().begin()->second);
  }
  return c;
}

std::vector<long long> multiplicity_profile(int l) {
  const TauSystem sys = tau_system(Family::A, l);
  std::vector<long long> deg;
  for (const Poly& tau : sys.taus) {
    Poly r = tau;
    for (int v = 1; v < sys.nvars; ++v) r = r.without_var(v);
    deg.push_back(r.degree());
  }
  return deg;
}

bool divisor_curve_check(int l) {
  const TauSystem sys = tau_system(Family::A, l);
  const UniPoly first = substitute_power_curve(sys.taus[0]);
  UniPoly expect(l + 1, mpq_class(0));
  expect[l] = 1;
  if (first != expect) return false;
  for (int k = 2; k <= l; ++k)
    if (!substitute_power_curve(sys.taus[k - 1]).empty()) return false;
  return true;
}

TodaPoint toda_solution_at(const TauSystem& sys, const std::vector<mpq_class>& point) {
  if (sys.family == Family::G)
    throw std::invalid_argument("toda_solution_at: not available for family G");
  if ((int)point.size() != sys.nvars)
    throw std::invalid_argument("toda_solution_at: point has wrong dimension");
  const RootDatum& d = root_datum(sys.family, sys.rank);
  std::vector<mpq_class> tv(sys.rank), tv1(sys.rank);
  for (int k = 0; k < sys.rank; ++k) {
    tv[k] = sys.taus[k].eval(point);
    if (tv[k] == 0)
      throw std::invalid_argument("toda_solution_at: point lies on the Painleve divisor");
    tv1[k] = sys.taus[k].derivative(0).eval(point);
  }
  TodaPoint out;
  for (int j = 0; j < sys.rank; ++j) {
    mpq_class a = sys.bilinear[j];
    for (int k = 0; k < sys.rank; ++k) {
      if (k == j) continue;
      for (int e = 0; e < -d.cartan[j][k]; ++e) a *= tv[k];
    }
    a /= tv[j] * tv[j];
    out.a.push_back(a.get_d());
    out.b.push_back(mpq_class(tv1[j] / tv[j]).get_d());
  }
  return out;
}

std::string tau_text(const TauSystem& sys) {
  std::string out;
  for (int k = 1; k <= sys.rank; ++k)
    out += "tau[" + std::to_string(k) + "] = " + sys.taus[k - 1].str() + "\n";
  if (sys.constraint) {
    // Group by powers of t5; the coefficients only involve t1 and t3.
    for (int e = 2; e >= 0; --e) {
      Poly coeff(sys.nvars);
      for (const auto& [exps, c] : sys.constraint->terms()) {
        if (exps[4] != e) continue;
        Exps base = exps;
        base[4] = 0;
        coeff.add_term(base, c);
      }
      out += "t5_constraint[" + std::to_string(e) + "] = " + coeff.str() + "\n";
    }
  }
  return out;
}

std::string tau_json(const TauSystem& sys) {
  nlohmann::json j;
  j["family"] = std::string(1, family_char(sys.family));
  j["rank"] = sys.rank;
  j["nvars"] = sys.nvars;
  nlohmann::json taus = nlohmann::json::array();
  for (const Poly& t : sys.taus) taus.push_back(t.str());
  j["taus"] = taus;
  if (!sys.bilinear.empty()) {
    nlohmann::json c = nlohmann::json::array();
    for (const mpq_class& v : sys.bilinear) c.push_back(v.get_str());
    j["bilinear"] = c;
  }
  if (sys.dl_scale != 1) j["dl_scale"] = sys.dl_scale.get_str();
  if (sys.constraint) j["constraint"] = sys.constraint->str();
  return j.dump() + "\n";
}

}  // namespace todatop
