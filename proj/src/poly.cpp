#include "todatop/poly.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace todatop {

long long weighted_degree(const Exps& e) {
  long long d = 0;
  for (size_t i = 0; i < e.size(); ++i) d += (long long)(i + 1) * e[i];
  return d;
}

bool MonoLess::operator()(const Exps& a, const Exps& b) const {
  const long long da = weighted_degree(a), db = weighted_degree(b);
  if (da != db) return da < db;
  return a < b;
}

Poly Poly::constant(int nvars, const mpq_class& c) {
  Poly p(nvars);
  if (c != 0) p.terms_.emplace(Exps(nvars, 0), c);
  return p;
}

Poly Poly::variable(int nvars, int var) {
  assert(var >= 0 && var < nvars);
  Poly p(nvars);
  Exps e(nvars, 0);
  e[var] = 1;
  p.terms_.emplace(std::move(e), 1);
  return p;
}

mpq_class Poly::coeff(const Exps& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? mpq_class(0) : it->second;
}

void Poly::add_term(const Exps& e, const mpq_class& c) {
  assert((int)e.size() == nvars_);
  auto [it, inserted] = terms_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  } else if (c == 0) {
    terms_.erase(it);
  }
}

Poly Poly::operator+(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

Poly Poly::operator-(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, -c);
  return r;
}

Poly Poly::operator-() const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
  return r;
}

Poly Poly::operator*(const Poly& o) const {
  assert(nvars_ == o.nvars_);
  Poly r(nvars_);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      Exps e(nvars_);
      for (int i = 0; i < nvars_; ++i) e[i] = uint16_t(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

Poly Poly::operator*(const mpq_class& c) const {
  Poly r(nvars_);
  if (c == 0) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

bool Poly::operator==(const Poly& o) const {
  return nvars_ == o.nvars_ && terms_ == o.terms_;
}

Poly Poly::pow(int e) const {
  assert(e >= 0);
  Poly r = constant(nvars_, 1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) r = r * base;
    base = base * base;
    e >>= 1;
  }
  return r;
}

Poly Poly::derivative(int var) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    if (e[var] == 0) continue;
    Exps d = e;
    --d[var];
    r.terms_.emplace(std::move(d), c * e[var]);
  }
  return r;
}

mpq_class Poly::eval(const std::vector<mpq_class>& point) const {
  assert((int)point.size() == nvars_);
  mpq_class total = 0;
  for (const auto& [e, c] : terms_) {
    mpq_class t = c;
    for (int i = 0; i < nvars_; ++i)
      for (int k = 0; k < e[i]; ++k) t *= point[i];
    total += t;
  }
  return total;
}

long long Poly::degree() const {
  if (terms_.empty()) return -1;
  return weighted_degree(terms_.rbegin()->first);
}

bool Poly::is_weighted_homogeneous(long long* deg_out) const {
  if (terms_.empty()) {
    if (deg_out) *deg_out = -1;
    return true;
  }
  const long long d = weighted_degree(terms_.begin()->first);
  for (const auto& [e, c] : terms_)
    if (weighted_degree(e) != d) return false;
  if (deg_out) *deg_out = d;
  return true;
}

Poly Poly::without_var(int var) const {
  Poly r(nvars_);
  for (const auto& [e, c] : terms_)
    if (e[var] == 0) r.terms_.emplace(e, c);
  return r;
}

Poly Poly::substitute(int var, const Poly& value) const {
  assert(value.nvars_ == nvars_);
  Poly r(nvars_);
  for (const auto& [e, c] : terms_) {
    Exps base = e;
    const int k = base[var];
    base[var] = 0;
    Poly term(nvars_);
    term.terms_.emplace(std::move(base), c);
    r = r + term * value.pow(k);
  }
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& num, const Poly& den) {
  assert(num.nvars_ == den.nvars_);
  if (den.is_zero()) return std::nullopt;
  Poly q(num.nvars_);
  Poly r = num;
  const auto& dlt = *den.terms_.rbegin();
  while (!r.is_zero()) {
    const auto& rlt = *r.terms_.rbegin();
    Exps e(num.nvars_);
    for (int i = 0; i < num.nvars_; ++i) {
      if (rlt.first[i] < dlt.first[i]) return std::nullopt;
      e[i] = uint16_t(rlt.first[i] - dlt.first[i]);
    }
    Poly t(num.nvars_);
    t.terms_.emplace(std::move(e), rlt.second / dlt.second);
    q = q + t;
    r = r - t * den;
  }
  return q;
}

std::optional<Poly> Poly::sqrt_exact(const Poly& s) {
  if (s.is_zero()) return Poly(s.nvars_);
  const auto& lt = *s.terms_.rbegin();
  Exps he(s.nvars_);
  for (int i = 0; i < s.nvars_; ++i) {
    if (lt.first[i] & 1) return std::nullopt;
    he[i] = uint16_t(lt.first[i] / 2);
  }
  if (lt.second < 0) return std::nullopt;
  mpz_class num = lt.second.get_num(), den = lt.second.get_den();
  if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
    return std::nullopt;
  mpz_class rn, rd;
  mpz_sqrt(rn.get_mpz_t(), num.get_mpz_t());
  mpz_sqrt(rd.get_mpz_t(), den.get_mpz_t());
  Poly q(s.nvars_);
  q.terms_.emplace(he, mpq_class(rn) / mpq_class(rd));
  const mpq_class lead2_coeff = 2 * q.terms_.rbegin()->second;
  Poly rem = s - q * q;
  // Peel the leading residual term: next term of the root is LT(rem)/(2 q0).
  // LT(rem) strictly decreases in the monomial order, so this terminates for
  // genuine squares; the guard only stops runaway inputs.
  size_t guard = 1000000;
  while (!rem.is_zero()) {
    if (guard-- == 0) return std::nullopt;
    const auto& rlt = *rem.terms_.rbegin();
    Exps e(s.nvars_);
    for (int i = 0; i < s.nvars_; ++i) {
      if (rlt.first[i] < he[i]) return std::nullopt;
      e[i] = uint16_t(rlt.first[i] - he[i]);
    }
    Poly t(s.nvars_);
    t.terms_.emplace(std::move(e), rlt.second / lead2_coeff);
    q = q + t;
    rem = s - q * q;
  }
  return q;
}

std::string Poly::str(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto var_name = [&](int i) {
    if (i < (int)names.size()) return names[i];
    return "t" + std::to_string(i + 1);
  };
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    mpq_class a = c;
    if (first) {
      if (a < 0) { out += "-"; a = -a; }
    } else {
      out += (a < 0) ? " - " : " + ";
      if (a < 0) a = -a;
    }
    first = false;
    std::string mono;
    for (int i = 0; i < nvars_; ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += var_name(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    if (mono.empty()) {
      out += a.get_str();
    } else {
      if (a != 1) out += a.get_str() + "*";
      out += mono;
    }
  }
  return out;
}

namespace {

Poly det_rec(const std::vector<std::vector<Poly>>& M, uint32_t cols, int row,
             std::map<uint32_t, Poly>& memo, int nvars) {
  if (cols == 0) return Poly::constant(nvars, 1);
  auto it = memo.find(cols);
  if (it != memo.end()) return it->second;
  Poly det(nvars);
  int sign = 1;
  for (int j = 0; j < (int)M.size(); ++j) {
    if (!(cols >> j & 1)) continue;
    if (!M[row][j].is_zero())
      det = det + det_rec(M, cols & ~(1u << j), row + 1, memo, nvars) * M[row][j] *
                      mpq_class(sign);
    sign = -sign;
  }
  memo.emplace(cols, det);
  return det;
}

}  // namespace

Poly poly_det(const std::vector<std::vector<Poly>>& M) {
  assert(!M.empty());
  const int n = (int)M.size();
  const int nvars = M[0][0].nvars();
  assert(n <= 31);
  std::map<uint32_t, Poly> memo;
  return det_rec(M, (1u << n) - 1, 0, memo, nvars);
}

UniPoly substitute_power_curve(const Poly& p) {
  UniPoly out;
  for (const auto& [e, c] : p.terms()) {
    const long long deg = weighted_degree(e);
    if ((long long)out.size() <= deg) out.resize(deg + 1, mpq_class(0));
    mpq_class v = c;
    for (size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) v /= mpq_class((long)(i + 1));
    out[deg] += v;
  }
  while (!out.empty() && out.back() == 0) out.pop_back();
  return out;
}

}  // namespace todatop
