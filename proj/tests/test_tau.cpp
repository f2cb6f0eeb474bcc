#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "todatop/tau.hpp"

using namespace todatop;

namespace {

// Independent oracle for the power-sum generating polynomials: multiply the
// truncated series exp(t_i z^i) = sum_m t_i^m z^{im} / m! directly instead of
// using the recurrence k p_k = sum i t_i p_{k-i}.
std::vector<Poly> p_series_oracle(int deg, int nvars, bool odd_only) {
  std::vector<Poly> series(deg + 1, Poly(nvars));
  series[0] = Poly::constant(nvars, 1);
  for (int i = 1; i <= nvars; ++i) {
    if (odd_only && i % 2 == 0) continue;
    std::vector<Poly> next(deg + 1, Poly(nvars));
    mpq_class inv_fact = 1;
    for (int m = 0; m * i <= deg; ++m) {
      if (m > 0) inv_fact /= m;
      const Poly tim = Poly::variable(nvars, i - 1).pow(m) * inv_fact;
      for (int s = 0; s + m * i <= deg; ++s)
        next[s + m * i] = next[s + m * i] + series[s] * tim;
    }
    series = std::move(next);
  }
  return series;
}

mpq_class q(long num, long den) { return mpq_class(num) / den; }

}  // namespace

TEST_CASE("power-sum polynomials match the series oracle") {
  for (bool odd_only : {false, true}) {
    const int nvars = odd_only ? 5 : 6;
    const auto oracle = p_series_oracle(6, nvars, odd_only);
    for (int k = 0; k <= 6; ++k) {
      CAPTURE(k);
      CAPTURE(odd_only);
      CHECK(schur_p(k, nvars, odd_only) == oracle[k]);
    }
  }
}

TEST_CASE("first power-sum polynomials, frozen") {
  CHECK(schur_p(0, 3, false).str() == "1");
  CHECK(schur_p(1, 3, false).str() == "t1");
  CHECK(schur_p(2, 3, false).str() == "t2 + 1/2*t1^2");
  CHECK(schur_p(3, 3, false).str() == "t3 + t1*t2 + 1/6*t1^3");
  // Odd restriction kills t2.
  CHECK(schur_p(2, 3, true).str() == "1/2*t1^2");
  CHECK(schur_p(3, 3, true).str() == "t3 + 1/6*t1^3");
  CHECK(schur_p(4, 3, true).str() == "t1*t3 + 1/24*t1^4");
  // Every p_k is homogeneous for the weights wt(t_i) = i.
  for (int k = 0; k <= 6; ++k) {
    long long deg = -2;
    CHECK(schur_p(k, 6, false).is_weighted_homogeneous(&deg));
    if (k > 0) CHECK(deg == k);
  }
}

TEST_CASE("wronskian-normalized polynomials") {
  CHECK(schur_pbar(1, 3).str() == "t1");
  CHECK(schur_pbar(2, 3).str() == "t2 - 1/2*t1^2");
}

TEST_CASE("tau functions, frozen goldens") {
  const TauSystem a2 = tau_system(Family::A, 2);
  REQUIRE(a2.taus.size() == 2);
  CHECK(a2.nvars == 2);
  CHECK(a2.taus[0].str() == "t2 + 1/2*t1^2");
  CHECK(a2.taus[1].str() == "t2 - 1/2*t1^2");
  CHECK(tau_text(a2) == "tau[1] = t2 + 1/2*t1^2\ntau[2] = t2 - 1/2*t1^2\n");

  const TauSystem c2 = tau_system(Family::C, 2);
  CHECK(c2.nvars == 3);
  CHECK(c2.taus[0].str() == "t3 + 1/6*t1^3");
  CHECK(c2.taus[1].str() == "t1*t3 - 1/12*t1^4");

  const TauSystem b2 = tau_system(Family::B, 2);
  CHECK(b2.taus[0].str() == "t1*t3 + 1/24*t1^4");
  CHECK(b2.taus[1].str() == "t3 - 1/12*t1^3");
  CHECK(b2.dl_scale == 1);

  const TauSystem a1 = tau_system(Family::A, 1);
  CHECK(a1.taus[0].str() == "t1");

  CHECK_THROWS_AS(tau_system(Family::D, 4), std::invalid_argument);
  CHECK_THROWS_AS(tau_system(Family::E, 6), std::invalid_argument);
  CHECK_THROWS_AS(tau_system(Family::F, 4), std::invalid_argument);
}

TEST_CASE("bilinear constants, frozen") {
  CHECK(tau_system(Family::A, 1).bilinear == std::vector<mpq_class>{-1});
  CHECK(tau_system(Family::A, 2).bilinear == std::vector<mpq_class>{1, -1});
  CHECK(tau_system(Family::C, 2).bilinear == std::vector<mpq_class>{1, -1});
  CHECK(tau_system(Family::B, 2).bilinear == std::vector<mpq_class>{-1, q(-1, 2)});
  // Every constant is nonzero through rank 4 (the tau functions really do
  // solve the bilinear form of the flow).
  for (Family f : {Family::A, Family::B, Family::C}) {
    const int lo = f == Family::A ? 1 : 2;
    for (int l = lo; l <= 4; ++l) {
      const TauSystem sys = tau_system(f, l);
      REQUIRE((int)sys.bilinear.size() == l);
      for (const mpq_class& c : sys.bilinear) CHECK(c != 0);
    }
  }
}

TEST_CASE("bilinear identity holds literally") {
  // tau_j tau_j'' - tau_j'^2 = c_j prod_{k != j} tau_k^{-C_{jk}} as
  // polynomials, for the frozen A2 system.
  const TauSystem sys = tau_system(Family::A, 2);
  const RootDatum& d = root_datum(Family::A, 2);
  for (int j = 0; j < 2; ++j) {
    const Poly& tj = sys.taus[j];
    Poly lhs = tj * tj.derivative(0).derivative(0) - tj.derivative(0) * tj.derivative(0);
    Poly rhs = Poly::constant(sys.nvars, sys.bilinear[j]);
    for (int k = 0; k < 2; ++k) {
      if (k == j) continue;
      rhs = rhs * sys.taus[k].pow(-d.cart(j, k));
    }
    CHECK(lhs == rhs);
  }
}

TEST_CASE("vanishing-order profile in type A") {
  CHECK(multiplicity_profile(2) == std::vector<long long>{2, 2});
  CHECK(multiplicity_profile(4) == std::vector<long long>{4, 6, 6, 4});
  for (int l = 2; l <= 6; ++l) {
    const auto prof = multiplicity_profile(l);
    for (int k = 1; k <= l; ++k) CHECK(prof[k - 1] == (long long)k * (l - k + 1));
  }
}

TEST_CASE("rational curve through the divisor") {
  for (int l = 2; l <= 5; ++l) CHECK(divisor_curve_check(l));
}

TEST_CASE("the G2 system carries a quadratic constraint instead of constants") {
  const TauSystem g2 = tau_system(Family::G, 2);
  CHECK(g2.nvars == 5);
  CHECK(g2.bilinear.empty());
  REQUIRE(g2.constraint.has_value());
  int max_t5 = 0;
  for (const auto& [e, c] : g2.constraint->terms()) max_t5 = std::max<int>(max_t5, e[4]);
  CHECK(max_t5 == 2);
  const std::string text = tau_text(g2);
  CHECK(text.find("t5_constraint[2] = ") != std::string::npos);
  CHECK(text.find("t5_constraint[0] = ") != std::string::npos);
}

TEST_CASE("phase-space evaluation and the known rank-1 orbit") {
  const TauSystem a1 = tau_system(Family::A, 1);
  // tau = t1 gives b = 1/t, a = -1/t^2.
  const TodaPoint p = toda_solution_at(a1, {2});
  CHECK(p.b[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(p.a[0] == doctest::Approx(-0.25).epsilon(1e-12));
  // On the divisor (tau = 0) the evaluation must refuse.
  CHECK_THROWS_AS(toda_solution_at(a1, {0}), std::invalid_argument);
  CHECK_THROWS_AS(toda_solution_at(tau_system(Family::G, 2), {1, 0, 0, 0, 0}),
                  std::invalid_argument);
}

TEST_CASE("json rendering carries the whole system") {
  const std::string j = tau_json(tau_system(Family::B, 2));
  CHECK(j.find("\"family\":\"B\"") != std::string::npos);
  CHECK(j.find("\"taus\":[\"t1*t3 + 1/24*t1^4\",\"t3 - 1/12*t1^3\"]") != std::string::npos);
  CHECK(j.find("\"bilinear\":[\"-1\",\"-1/2\"]") != std::string::npos);
  CHECK(j.back() == '\n');
}
