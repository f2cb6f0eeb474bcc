#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "todatop/lie.hpp"

using namespace todatop;

TEST_CASE("group orders and positive root counts") {
  struct Row {
    Family f;
    int rank;
    long long order;
    int n_pos;
  };
  const Row rows[] = {
      {Family::A, 1, 2, 1},       {Family::A, 2, 6, 3},
      {Family::A, 3, 24, 6},      {Family::A, 5, 720, 15},
      {Family::B, 2, 8, 4},       {Family::B, 3, 48, 9},
      {Family::C, 3, 48, 9},      {Family::C, 4, 384, 16},
      {Family::D, 4, 192, 12},    {Family::D, 5, 1920, 20},
      {Family::E, 6, 51840, 36},  {Family::E, 7, 2903040, 63},
      {Family::F, 4, 1152, 24},   {Family::G, 2, 12, 6},
  };
  for (const Row& r : rows) {
    CAPTURE(family_char(r.f));
    CAPTURE(r.rank);
    const RootDatum& d = root_datum(r.f, r.rank);
    CHECK(weyl_order(d, d.full_mask()) == r.order);
    CHECK(d.n_pos == r.n_pos);
    CHECK((int)all_roots(d).size() == 2 * r.n_pos);
  }
}

TEST_CASE("invalid family/rank combinations are rejected") {
  CHECK_THROWS_AS(root_datum(Family::A, 0), std::invalid_argument);
  CHECK_THROWS_AS(root_datum(Family::A, 11), std::invalid_argument);
  CHECK_THROWS_AS(root_datum(Family::B, 1), std::invalid_argument);
  CHECK_THROWS_AS(root_datum(Family::D, 3), std::invalid_argument);
  CHECK_THROWS_AS(root_datum(Family::E, 5), std::invalid_argument);
  CHECK_THROWS_AS(root_datum(Family::E, 9), std::invalid_argument);
  CHECK_THROWS_AS(root_datum(Family::F, 3), std::invalid_argument);
  CHECK_THROWS_AS(root_datum(Family::G, 3), std::invalid_argument);
  CHECK_THROWS_AS(family_from_char('H'), std::invalid_argument);
}

TEST_CASE("simple reflections satisfy the defining relations") {
  for (auto [f, rank] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::C, 3},
                         {Family::D, 4}, {Family::F, 4}, {Family::G, 2}}) {
    const RootDatum& d = root_datum(f, rank);
    const SqMat id = SqMat::identity(rank);
    for (int i = 0; i < rank; ++i) {
      CHECK(d.refl[i] * d.refl[i] == id);
      for (int j = i + 1; j < rank; ++j) {
        const int m = [&] {
          const int p = d.cart(i, j) * d.cart(j, i);
          return p == 0 ? 2 : p == 1 ? 3 : p == 2 ? 4 : 6;
        }();
        SqMat prod = SqMat::identity(rank);
        for (int r = 0; r < m; ++r) prod = prod * (d.refl[i] * d.refl[j]);
        CHECK(prod == id);
      }
    }
  }
}

TEST_CASE("longest element") {
  const RootDatum& d = root_datum(Family::A, 3);
  const WeylElement w0 = longest_in_parabolic(d, d.full_mask());
  CHECK(w0.length() == d.n_pos);
  CHECK(length_by_inversions(d, w0.mat) == d.n_pos);
  CHECK(w0.mat * w0.mat == SqMat::identity(3));
  // In type A the longest element maps alpha_i to -alpha_{l+1-i}.
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(w0.mat.at(j, i) == (j == 2 - i ? -1 : 0));

  // B2, G2, F4: w0 acts as -1 on the root lattice.
  for (auto [f, rank] : {std::pair{Family::B, 2}, {Family::G, 2}, {Family::F, 4}}) {
    const RootDatum& dd = root_datum(f, rank);
    const WeylElement v0 = longest_in_parabolic(dd, dd.full_mask());
    CHECK(v0.length() == dd.n_pos);
    for (int i = 0; i < rank; ++i)
      for (int j = 0; j < rank; ++j) CHECK(v0.mat.at(i, j) == (i == j ? -1 : 0));
  }

  // Parabolic sub-case: inside B3, <s1, s2> is an A2 with 3 positive roots.
  const RootDatum& b3 = root_datum(Family::B, 3);
  CHECK(longest_in_parabolic(b3, 0b011).length() == 3);
  CHECK(longest_in_parabolic(b3, 0b110).length() == 4);  // <s2, s3> is a B2
  CHECK(longest_in_parabolic(b3, 0).length() == 0);
}

TEST_CASE("coset tables enumerate W / W^J with reduced representative words") {
  for (auto [f, rank] : {std::pair{Family::A, 3}, {Family::B, 3}, {Family::D, 4}}) {
    const RootDatum& d = root_datum(f, rank);
    const long long order = weyl_order(d, d.full_mask());
    for (uint32_t J = 0; J < (1u << rank); ++J) {
      CAPTURE(family_char(f));
      CAPTURE(J);
      const CosetTable& t = minimal_coset_table(d, J);
      // Index = |W| / |W^J| with W^J generated by the letters outside J.
      CHECK((long long)t.size() == order / weyl_order(d, d.full_mask() & ~J));
      std::set<SqMat> seen;
      for (size_t n = 0; n < t.size(); ++n) {
        const WeylElement w = weyl_from_word(d, t.word_of(n));
        CHECK(w.length() == t.depth[n]);
        CHECK(length_by_inversions(d, w.mat) == t.depth[n]);  // word is reduced
        seen.insert(w.mat);
      }
      CHECK(seen.size() == t.size());  // representatives are distinct
    }
  }
}

TEST_CASE("minimal representatives have minimal length in their coset") {
  // Brute force over all of W(A3) x W^J for one nontrivial J.
  const RootDatum& d = root_datum(Family::A, 3);
  const uint32_t J = 0b011;  // stabilizer generated by s3
  const std::vector<WeylElement> reps = minimal_coset_reps(d, J);
  CHECK(reps.size() == 12);
  for (const WeylElement& w : reps) {
    const SqMat ws3 = w.mat * d.refl[2];
    CHECK(length_by_inversions(d, ws3) == w.length() + 1);
  }
}

TEST_CASE("diagram component extraction and classification") {
  const RootDatum& d5 = root_datum(Family::D, 5);
  // Dropping the branch node leaves a chain of two plus two isolated tips.
  const uint32_t keep = d5.full_mask() & ~(1u << 2);
  CHECK(component_of(d5, keep, 0) == std::vector<int>{0, 1});
  CHECK(component_of(d5, keep, 3) == std::vector<int>{3});
  CHECK(component_of(d5, keep, 4) == std::vector<int>{4});
  const DiagramClass a2 = classify_component(d5, {0, 1});
  CHECK(a2.family == Family::A);
  CHECK(a2.rank == 2);

  // The last three nodes of B4 form a B3 (double bond at the far end).
  const RootDatum& b4 = root_datum(Family::B, 4);
  const DiagramClass b3 = classify_component(b4, {1, 2, 3});
  CHECK(b3.family == Family::B);
  CHECK(b3.rank == 3);
  CHECK(b3.to_canonical == std::vector<int>{0, 1, 2});

  // The first three nodes of C4 are an A3.
  const RootDatum& c4 = root_datum(Family::C, 4);
  const DiagramClass a3 = classify_component(c4, {0, 1, 2});
  CHECK(a3.family == Family::A);
  CHECK(a3.rank == 3);

  // Inside E6 the nodes off one end form a D5.
  const RootDatum& e6 = root_datum(Family::E, 6);
  bool found_d5 = false;
  for (int drop = 0; drop < 6; ++drop) {
    const uint32_t mask = e6.full_mask() & ~(1u << drop);
    const int start = drop == 0 ? 1 : 0;
    const std::vector<int> comp = component_of(e6, mask, start);
    if (comp.size() == 5) {
      const DiagramClass c = classify_component(e6, comp);
      if (c.family == Family::D && c.rank == 5) found_d5 = true;
    }
  }
  CHECK(found_d5);
}

TEST_CASE("subset strings") {
  CHECK(subset_string(3, 0b000) == "(***)");
  CHECK(subset_string(3, 0b010) == "(*0*)");
  CHECK(subset_string(3, 0b111) == "(000)");
  CHECK(subset_string(2, 0b01) == "(0*)");
}

TEST_CASE("weyl order multiplies over diagram components") {
  const RootDatum& d = root_datum(Family::D, 5);
  // {s1, s2} x {s4, s5}: A2 x A1 x A1 after removing the branch node.
  CHECK(weyl_order(d, 0b11011) == 6 * 2 * 2);
  CHECK(parabolic_n_pos(d, 0b11011) == 3 + 1 + 1);
}
