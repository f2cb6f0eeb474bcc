#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "todatop/complex.hpp"
#include "todatop/incidence.hpp"

using namespace todatop;

namespace {

// Independent determinant (Bareiss, fraction-free) to certify unimodularity.
mpz_class det_bareiss(std::vector<std::vector<mpz_class>> m) {
  const size_t n = m.size();
  mpz_class prev = 1;
  int sign = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t p = k + 1;
      while (p < n && m[p][k] == 0) ++p;
      if (p == n) return 0;
      std::swap(m[k], m[p]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j)
        m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev;
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

AbelianGroup grp(long long free_rank, std::vector<long long> torsion = {}) {
  return AbelianGroup{free_rank, std::move(torsion)};
}

}  // namespace

TEST_CASE("chain complex shape") {
  const RootDatum& d = root_datum(Family::A, 3);
  const ChainComplexZ cx = build_complex(d);
  REQUIRE(cx.basis.size() == 4);
  // C_k is spanned by the subsets of size l - k.
  CHECK(cx.basis[0].size() == 1);  // J = everything
  CHECK(cx.basis[1].size() == 3);
  CHECK(cx.basis[2].size() == 3);
  CHECK(cx.basis[3].size() == 1);  // J = empty
  CHECK(cx.basis[3][0] == 0u);
  REQUIRE(cx.boundary.size() == 4);
  CHECK(cx.boundary[0].empty());
  // The lone generator of C_3 maps by the top incidence row.
  REQUIRE(cx.boundary[3].size() == 3);
  CHECK(cx.boundary[3][0][0] == 0);   // toward (0**): k=1 entry
  CHECK(cx.boundary[3][1][0] == -4);  // toward (*0*): k=2 entry
  CHECK(cx.boundary[3][2][0] == 0);   // toward (**0): k=3 entry
}

TEST_CASE("integral homology of the smallest flows, frozen by hand") {
  const ChainComplexZ a2 = build_complex(root_datum(Family::A, 2));
  CHECK(homology(a2, Coeff::Z) ==
        std::vector<AbelianGroup>{grp(1), grp(1, {2}), grp(0)});

  const ChainComplexZ a3 = build_complex(root_datum(Family::A, 3));
  CHECK(homology(a3, Coeff::Z) ==
        std::vector<AbelianGroup>{grp(1), grp(1, {2, 2}), grp(0, {4}), grp(0)});
}

TEST_CASE("rational and mod-2 coefficients") {
  const ChainComplexZ a3 = build_complex(root_datum(Family::A, 3));
  CHECK(homology(a3, Coeff::Q) ==
        std::vector<AbelianGroup>{grp(1), grp(1), grp(0), grp(0)});
  // With Z/2 coefficients every boundary map dies (all entries even), so the
  // dimensions are the binomial coefficients.
  CHECK(homology(a3, Coeff::Z2) ==
        std::vector<AbelianGroup>{grp(1), grp(3), grp(3), grp(1)});
  const ChainComplexZ b3 = build_complex(root_datum(Family::B, 3));
  CHECK(homology(b3, Coeff::Z2) ==
        std::vector<AbelianGroup>{grp(1), grp(3), grp(3), grp(1)});
}

TEST_CASE("integral cohomology shifts the torsion up one degree") {
  const ChainComplexZ a2 = build_complex(root_datum(Family::A, 2));
  CHECK(cohomology(a2, Coeff::Z) ==
        std::vector<AbelianGroup>{grp(1), grp(1), grp(0, {2})});
  const ChainComplexZ a3 = build_complex(root_datum(Family::A, 3));
  CHECK(cohomology(a3, Coeff::Z) ==
        std::vector<AbelianGroup>{grp(1), grp(1), grp(0, {2, 2}), grp(0, {4})});
  // Over Q homology and cohomology coincide.
  CHECK(cohomology(a3, Coeff::Q) == homology(a3, Coeff::Q));
}

TEST_CASE("flag-quotient variant: doubled edge entries") {
  // Rank 2: the doubled complex equals the standard one (entries already +-2),
  // and its cohomology is that of the Klein bottle.
  const RootDatum& a2 = root_datum(Family::A, 2);
  CHECK(cohomology(schubert_complex(a2), Coeff::Z) ==
        std::vector<AbelianGroup>{grp(1), grp(1), grp(0, {2})});

  // Rank 3: H^0 = H^1 = Z and H^k = (l-1 choose k-1) summands Z/2 above.
  const RootDatum& a3 = root_datum(Family::A, 3);
  CHECK(cohomology(schubert_complex(a3), Coeff::Z) ==
        std::vector<AbelianGroup>{grp(1), grp(1), grp(0, {2, 2}), grp(0, {2})});
  // Zero incidence entries must stay zero (only graph edges are doubled).
  const ChainComplexZ sc = schubert_complex(a3);
  CHECK(sc.boundary[3][0][0] == 0);
  CHECK(sc.boundary[3][1][0] == -2);
  CHECK(sc.boundary[3][2][0] == 0);
}

TEST_CASE("local complex over Q is acyclic in type A") {
  for (int l = 2; l <= 5; ++l) {
    const auto betti = local_betti_Q(root_datum(Family::A, l));
    for (long long b : betti) CHECK(b == 0);
  }
  CHECK_THROWS_AS(local_betti_Q(root_datum(Family::B, 3)), std::invalid_argument);
}

TEST_CASE("smith normal form: frozen example") {
  // [[2,4,4],[-6,6,12],[10,-4,-16]] has invariant factors 2, 6, 12.
  std::vector<std::vector<mpz_class>> A = {
      {2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const SNFResult r = smith_normal_form(A);
  const auto diag = snf_diagonal(r);
  REQUIRE(diag.size() == 3);
  CHECK(diag[0] == 2);
  CHECK(diag[1] == 6);
  CHECK(diag[2] == 12);
}

TEST_CASE("smith normal form: randomized structural properties") {
  std::mt19937 rng(20240915);
  std::uniform_int_distribution<int> dim(1, 6), val(-9, 9);
  for (int trial = 0; trial < 60; ++trial) {
    const size_t m = dim(rng), n = dim(rng);
    std::vector<std::vector<mpz_class>> A(m, std::vector<mpz_class>(n));
    for (auto& row : A)
      for (auto& x : row) x = val(rng);
    const SNFResult r = smith_normal_form(A);

    REQUIRE(r.U.size() == m);
    REQUIRE(r.V.size() == n);
    CHECK(abs(det_bareiss(r.U)) == 1);
    CHECK(abs(det_bareiss(r.V)) == 1);

    // D = U * A * V entry by entry.
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < n; ++j) {
        mpz_class s = 0;
        for (size_t p = 0; p < m; ++p)
          for (size_t q = 0; q < n; ++q) s += r.U[i][p] * A[p][q] * r.V[q][j];
        CHECK(s == r.D[i][j]);
        if (i != j) CHECK(r.D[i][j] == 0);
      }

    const auto diag = snf_diagonal(r);
    for (size_t i = 0; i + 1 < diag.size(); ++i) {
      CHECK(diag[i] >= 0);
      if (diag[i] == 0) CHECK(diag[i + 1] == 0);
      if (diag[i] != 0 && diag[i + 1] != 0) CHECK(diag[i + 1] % diag[i] == 0);
    }
  }
}

TEST_CASE("json and csv serialization") {
  const std::vector<AbelianGroup> h = {grp(1), grp(1, {2, 2}), grp(0, {4}), grp(0)};
  CHECK(homology_json(h) ==
        "{\"H\":[{\"free\":1,\"torsion\":[]},{\"free\":1,\"torsion\":[2,2]},"
        "{\"free\":0,\"torsion\":[4]},{\"free\":0,\"torsion\":[]}]}\n");
  const RootDatum& d = root_datum(Family::A, 3);
  CHECK(homology_csv(d, Coeff::Z, h) ==
        "family,rank,coeff,k,free,torsion\n"
        "A,3,Z,0,1,\n"
        "A,3,Z,1,1,2;2\n"
        "A,3,Z,2,0,4\n"
        "A,3,Z,3,0,\n");
}

TEST_CASE("group pretty printing") {
  CHECK(group_string(grp(0)) == "0");
  CHECK(group_string(grp(2)) == "Z^2");
  CHECK(group_string(grp(1, {2})) == "Z+Z2");
  CHECK(group_string(grp(0, {2, 4})) == "Z2+Z4");
  CHECK(coeff_from_string("Z2") == Coeff::Z2);
  CHECK(coeff_string(Coeff::Q) == "Q");
  CHECK_THROWS_AS(coeff_from_string("Z3"), std::invalid_argument);
}
