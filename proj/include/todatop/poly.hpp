// Sparse multivariate polynomials over Q with exact arithmetic.  Variable i
// (0-based) prints as t_{i+1} and carries weight i+1, so the monomial order
// (weighted degree, then lexicographic on exponents) matches the natural
// grading of the time variables.
#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace todatop {

using Exps = std::vector<uint16_t>;

long long weighted_degree(const Exps& e);

struct MonoLess {
  bool operator()(const Exps& a, const Exps& b) const;
};

class Poly {
 public:
  Poly() = default;
  explicit Poly(int nvars) : nvars_(nvars) {}
  static Poly constant(int nvars, const mpq_class& c);
  static Poly variable(int nvars, int var);

  int nvars() const { return nvars_; }
  bool is_zero() const { return terms_.empty(); }
  const std::map<Exps, mpq_class, MonoLess>& terms() const { return terms_; }
  mpq_class coeff(const Exps& e) const;
  void add_term(const Exps& e, const mpq_class& c);

  Poly operator+(const Poly& o) const;
  Poly operator-(const Poly& o) const;
  Poly operator-() const;
  Poly operator*(const Poly& o) const;
  Poly operator*(const mpq_class& c) const;
  bool operator==(const Poly& o) const;
  Poly pow(int e) const;

  Poly derivative(int var) const;
  mpq_class eval(const std::vector<mpq_class>& point) const;
  long long degree() const;  // max weighted degree, -1 for zero
  bool is_weighted_homogeneous(long long* deg_out = nullptr) const;

  // Sets the given variable to zero (drops every term containing it).
  Poly without_var(int var) const;
  // Substitutes variable `var` by the polynomial `value` (same nvars).
  Poly substitute(int var, const Poly& value) const;

  // Exact quotient, or nullopt when the division leaves a remainder.
  static std::optional<Poly> divide_exact(const Poly& num, const Poly& den);
  // Exact square root with positive leading coefficient, if one exists.
  static std::optional<Poly> sqrt_exact(const Poly& s);

  // Canonical text: terms in ascending monomial order, " + "/" - "
  // separators, rationals as num/den, powers as t1^3.  Optional custom
  // variable names.
  std::string str(const std::vector<std::string>& names = {}) const;

 private:
  int nvars_ = 0;
  std::map<Exps, mpq_class, MonoLess> terms_;
};

// Determinant of a square polynomial matrix (Laplace expansion with a shared
// column-subset memo; fine for the sizes that arise here).
Poly poly_det(const std::vector<std::vector<Poly>>& M);

// Dense univariate polynomial, coefficient of x^i at index i.
using UniPoly = std::vector<mpq_class>;

// Restriction to the rational normal curve t_k = s^k / k; returns the
// resulting univariate polynomial in s.
UniPoly substitute_power_curve(const Poly& p);

}  // namespace todatop
