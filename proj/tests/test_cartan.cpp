#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "qcartan/verify.hpp"
#include "qcartan/weyl.hpp"

using namespace qcartan;

TEST_CASE("published Cartan data") {
  CartanDatum b3 = build_datum("B3");
  CHECK(b3.C == Mat{{2, -1, 0}, {-1, 2, -1}, {0, -2, 2}});
  CHECK(b3.d == Vec{2, 2, 1});
  CHECK(b3.h == 6);

  CartanDatum g2 = build_datum("G2");
  CHECK(g2.d == Vec{1, 3});
  CHECK(g2.Bsym == Mat{{2, -3}, {-3, 6}});

  CartanDatum a1 = build_datum("A1");
  CHECK(a1.C == Mat{{2}});
  CHECK(a1.d == Vec{1});
  CHECK(a1.h == 2);
}

TEST_CASE("rank validation") {
  CHECK_THROWS_WITH_AS(build_datum("E9"), doctest::Contains("n in {6,7,8}"),
                       std::invalid_argument);
  CHECK_THROWS_AS(build_datum("D3"), std::invalid_argument);
  CHECK_THROWS_AS(build_datum("F5"), std::invalid_argument);
  CHECK_THROWS_AS(build_datum("G3"), std::invalid_argument);
  CHECK_THROWS_AS(build_datum("B1"), std::invalid_argument);
  CHECK_THROWS_AS(build_datum("Z9"), std::invalid_argument);
  CHECK_NOTHROW(build_datum("b2"));  // case-insensitive
}

TEST_CASE("B2 and C2 differ only by relabeling") {
  CartanDatum b2 = build_datum("B2");
  CartanDatum c2 = build_datum("C2");
  int swap[2] = {1, 0};
  for (int i = 0; i < 2; ++i) {
    CHECK(b2.d[i] == c2.d[swap[i]]);
    for (int j = 0; j < 2; ++j) CHECK(b2.C[i][j] == c2.C[swap[i]][swap[j]]);
  }
}

TEST_CASE("bilinear form values") {
  CartanDatum b3 = build_datum("B3");
  CHECK(bilinear_int(b3, root_vec({0, 1, 0}), root_vec({0, 0, 1})) == -2);
  CHECK(bilinear_int(b3, weight_vec({1, 0, 0}), root_vec({1, 0, 0})) == 2);
  // (alpha_1, alpha_1 + alpha_2), expanded with Bsym rows (4,-2,0),(-2,4,-2)
  CHECK(bilinear_int(b3, root_vec({1, 0, 0}), root_vec({1, 1, 0})) == 2);
  CHECK_THROWS_AS(bilinear(b3, root_vec({1, 0}), root_vec({1, 0, 0})), std::invalid_argument);
}

TEST_CASE("Bsym matches the distance table") {
  for (CartanType t : types_up_to_rank(8)) {
    CartanDatum dt = build_datum(t);
    for (int i = 0; i < dt.n; ++i)
      for (int j = 0; j < dt.n; ++j) {
        CHECK(dt.Bsym[i][j] == dt.Bsym[j][i]);
        if (i == j)
          CHECK(dt.Bsym[i][j] == 2 * dt.d[i]);
        else if (dt.dist[i][j] == 1)
          CHECK(dt.Bsym[i][j] == -std::max(dt.d[i], dt.d[j]));
        else
          CHECK(dt.Bsym[i][j] == 0);
      }
  }
}

TEST_CASE("change of basis") {
  CartanDatum b3 = build_datum("B3");
  LatticeVec w1 = weight_vec({1, 0, 0});
  LatticeVec diff = w1;
  LatticeVec s1w1 = simple_reflection(b3, 0, w1);
  for (int k = 0; k < 3; ++k) diff.coords[k] -= s1w1.coords[k];
  CHECK(to_root_basis(b3, diff) == root_vec({1, 0, 0}));

  CHECK(to_root_basis(b3, weight_vec({0, 0, 0})) == root_vec({0, 0, 0}));

  for (CartanType t : {parse_type("A4"), parse_type("F4"), parse_type("D5")}) {
    CartanDatum dt = build_datum(t);
    for (int i = 0; i < dt.n; ++i) {
      Vec col(dt.n);
      for (int j = 0; j < dt.n; ++j) col[j] = dt.C[j][i];
      Vec ei(dt.n, 0);
      ei[i] = 1;
      CHECK(to_root_basis(dt, weight_vec(col)) == root_vec(ei));
    }
  }

  // the spin weight varpi_3 of B3 lies outside the root lattice
  CHECK_THROWS_WITH_AS(to_root_basis(b3, weight_vec({0, 0, 1})),
                       doctest::Contains("not in root lattice"), std::domain_error);
  CHECK(to_root_basis(b3, weight_vec({1, 0, 0})) == root_vec({1, 1, 1}));
}

TEST_CASE("simple reflections") {
  CartanDatum b3 = build_datum("B3");
  CHECK(simple_reflection(b3, 2, root_vec({0, 1, 0})) == root_vec({0, 1, 2}));
  for (int j = 0; j < 3; ++j) {
    Vec w(3, 0);
    w[j] = 1;
    for (int i = 0; i < 3; ++i)
      if (i != j) CHECK(simple_reflection(b3, i, weight_vec(w)) == weight_vec(w));
  }
}

TEST_CASE("reflections preserve the form") {
  std::mt19937_64 rng(7);
  for (CartanType t : types_up_to_rank(8)) {
    CartanDatum dt = build_datum(t);
    for (int trial = 0; trial < 1000; ++trial) {
      Vec a(dt.n), b(dt.n);
      for (int k = 0; k < dt.n; ++k) {
        a[k] = static_cast<long long>(rng() % 9) - 4;
        b[k] = static_cast<long long>(rng() % 9) - 4;
      }
      LatticeVec x = root_vec(a), y = weight_vec(b);
      Rat before = bilinear(dt, x, y);
      CHECK(bilinear(dt, y, x) == before);
      int i = static_cast<int>(rng() % dt.n);
      CHECK(bilinear(dt, simple_reflection(dt, i, x), simple_reflection(dt, i, y)) == before);
      CHECK(simple_reflection(dt, i, simple_reflection(dt, i, x)) == x);
    }
  }
}
