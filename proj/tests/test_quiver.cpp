#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <map>
#include <set>

#include "qcartan/verify.hpp"

using namespace qcartan;

namespace {

// Solve sum_k c_k alpha_k = target where the alpha_k are given in an ambient
// orthogonal basis (doubled coordinates so half-integers stay integral).
Vec solve_root_coords(const std::vector<Vec>& alphas, const Vec& target) {
  size_t dim = target.size(), n = alphas.size();
  std::vector<std::vector<Rat>> m(dim, std::vector<Rat>(n + 1));
  for (size_t r = 0; r < dim; ++r) {
    for (size_t c = 0; c < n; ++c) m[r][c] = Rat(alphas[c][r]);
    m[r][n] = Rat(target[r]);
  }
  size_t row = 0;
  std::vector<int> pivot_of_col(n, -1);
  for (size_t col = 0; col < n && row < dim; ++col) {
    size_t piv = row;
    while (piv < dim && m[piv][col] == Rat(0)) ++piv;
    if (piv == dim) continue;
    std::swap(m[piv], m[row]);
    Rat lead = m[row][col];
    for (size_t c = 0; c <= n; ++c) m[row][c] /= lead;
    for (size_t r = 0; r < dim; ++r) {
      if (r == row || m[r][col] == Rat(0)) continue;
      Rat f = m[r][col];
      for (size_t c = 0; c <= n; ++c) m[r][c] -= f * m[row][c];
    }
    pivot_of_col[col] = static_cast<int>(row);
    ++row;
  }
  Vec out(n, 0);
  for (size_t c = 0; c < n; ++c)
    if (pivot_of_col[c] >= 0) out[c] = m[pivot_of_col[c]][n].as_integer();
  return out;
}

}  // namespace

TEST_CASE("height function validation, sources and sinks") {
  CartanDatum b3 = build_datum("B3");
  CHECK_THROWS_AS(DynkinQuiver(b3, {3, 1, 2}), std::invalid_argument);
  DynkinQuiver q(b3, {3, 2, 1});
  CHECK(q.sources() == std::vector<int>{0});
  CHECK(q.sinks() == std::vector<int>{2});

  DynkinQuiver alt(b3, {1, 0, 1});
  CHECK(alt.sources() == std::vector<int>{0, 2});
  CHECK(alt.sinks() == std::vector<int>{1});

  CartanDatum a1 = build_datum("A1");
  DynkinQuiver one(a1, {0});
  CHECK(one.sources() == std::vector<int>{0});
  CHECK(one.sinks() == std::vector<int>{0});
}

TEST_CASE("source reflection") {
  CartanDatum b3 = build_datum("B3");
  DynkinQuiver q(b3, {3, 2, 1});
  CHECK(q.reflect(0).xi() == Vec{1, 2, 1});
  CHECK_THROWS_WITH_AS(q.reflect(1), doctest::Contains("not a source"), std::invalid_argument);
  // a full Coxeter sweep drops every height by 2
  DynkinQuiver cur = q;
  for (int i : q.coxeter_word()) cur = cur.reflect(i);
  for (int i = 0; i < 3; ++i) CHECK(cur.xi(i) == q.xi(i) - 2);
}

TEST_CASE("Coxeter words and the order of tau") {
  CartanDatum b3 = build_datum("B3");
  DynkinQuiver q(b3, {3, 2, 1});
  CHECK(q.coxeter_word() == Word{0, 1, 2});
  for (const char* name : {"B3", "C4", "F4", "G2", "A5", "D4", "E6"}) {
    CartanDatum dt = build_datum(name);
    DynkinQuiver lin(dt, parse_heights(dt, "linear"));
    WeylElement id = WeylElement::identity(dt);
    WeylElement p = lin.tau();
    int order = 1;
    while (p != id) {
      p = p * lin.tau();
      ++order;
    }
    CHECK(order == dt.h);
    // for B/C/F/G, tau^{h/2} = w_0 = -1
    if (dt.type.family == Family::B || dt.type.family == Family::C ||
        dt.type.family == Family::F || dt.type.family == Family::G) {
      WeylElement half = lin.tau().pow(dt.h / 2);
      LatticeVec rho = weight_vec(Vec(dt.n, 1));
      LatticeVec img = half.apply(rho);
      for (int k = 0; k < dt.n; ++k) CHECK(img.coords[k] == -1);
    }
  }
  // sink-source orientation: all sources first, then the rest
  CartanDatum a4 = build_datum("A4");
  DynkinQuiver ss(a4, parse_heights(a4, "sink-source"));
  Word cw = ss.coxeter_word();
  std::set<int> srcs(ss.sources().begin(), ss.sources().end());
  for (size_t k = 0; k < cw.size(); ++k)
    CHECK((k < srcs.size()) == (srcs.count(cw[k]) > 0));
}

TEST_CASE("gamma roots") {
  CartanDatum b3 = build_datum("B3");
  DynkinQuiver q(b3, {3, 2, 1});
  CHECK(q.gamma(0) == root_vec({1, 0, 0}));
  CHECK(q.gamma(1) == root_vec({1, 1, 0}));
  CHECK(q.gamma(2) == root_vec({1, 1, 1}));
  // a source i has gamma_i = alpha_i, and (gamma_i, gamma_i) = (alpha_i, alpha_i)
  std::mt19937_64 rng(3);
  for (const char* name : {"A4", "B4", "D5", "F4", "G2"}) {
    CartanDatum dt = build_datum(name);
    for (int k = 0; k < 4; ++k) {
      DynkinQuiver rq = random_quiver(dt, rng);
      for (int i : rq.sources()) {
        Vec e(dt.n, 0);
        e[i] = 1;
        CHECK(rq.gamma(i) == root_vec(e));
      }
      for (int i = 0; i < dt.n; ++i)
        CHECK(bilinear_int(dt, rq.gamma(i), rq.gamma(i)) == 2 * dt.d[i]);
    }
  }
  // G2 with xi=(2,1): gamma_2 = s_1(alpha_2) = 3 alpha_1 + alpha_2
  CartanDatum g2 = build_datum("G2");
  DynkinQuiver qg(g2, {2, 1});
  CHECK(qg.gamma(1) == root_vec({3, 1}));
}

TEST_CASE("phi on the B3 example") {
  CartanDatum b3 = build_datum("B3");
  DynkinQuiver q(b3, {3, 2, 1});
  PhiHatElt x = q.phi({1, 0});
  CHECK(x.root == root_vec({1, 2, 2}));
  CHECK(x.level == 0);
  CHECK(q.phi({0, 3}).root == root_vec({1, 0, 0}));
  CHECK(q.phi({0, 3}).level == 0);
  CHECK_THROWS_WITH_AS(q.phi({0, 2}), doctest::Contains("parity"), std::invalid_argument);
  CHECK(q.phi_inverse(PhiHatElt{root_vec({1, 2, 2}), 0}) == RepVertex{1, 0});
  CHECK(q.phi_inverse(PhiHatElt{root_vec({1, 2, 2}), 2}) == RepVertex{1, 12});
}

TEST_CASE("B3 AR-quiver matches the published figure") {
  CartanDatum b3 = build_datum("B3");
  DynkinQuiver q(b3, {3, 2, 1});
  ARQuiver ar = ar_quiver(q);
  REQUIRE(ar.vertices.size() == 9);
  std::map<RepVertex, Vec> got;
  for (size_t k = 0; k < ar.vertices.size(); ++k) got[ar.vertices[k]] = ar.labels[k].coords;
  std::map<RepVertex, Vec> want = {
      {{0, -1}, {1, 1, 2}}, {{0, 1}, {0, 1, 0}}, {{0, 3}, {1, 0, 0}},
      {{1, -2}, {0, 1, 2}}, {{1, 0}, {1, 2, 2}}, {{1, 2}, {1, 1, 0}},
      {{2, -3}, {0, 0, 1}}, {{2, -1}, {0, 1, 1}}, {{2, 1}, {1, 1, 1}},
  };
  CHECK(got == want);
  // double arrows leave layer 3 (to layer 2), single arrows elsewhere
  for (const auto& [e, m] : ar.arrows) {
    const RepVertex& from = ar.vertices[e.first];
    const RepVertex& to = ar.vertices[e.second];
    CHECK(to.p == from.p + 1);
    CHECK(m == (from.i == 2 ? 2 : 1));
  }
  CHECK(ar.arrows.size() == 10);
}

TEST_CASE("F4 AR-quiver matches the published figure") {
  CartanDatum f4 = build_datum("F4");
  DynkinQuiver q(f4, {4, 3, 2, 1});
  // simple roots in doubled orthogonal coordinates (see docs/labeling.md)
  std::vector<Vec> alphas = {{0, 2, -2, 0}, {0, 0, 2, -2}, {0, 0, 0, 2}, {1, -1, -1, -1}};
  struct E { int i; long long p; Vec label2; };  // label in doubled eps coords
  std::vector<E> fig = {
      {0, -6, {2, 0, -2, 0}},  {0, -4, {0, 0, 2, 2}},   {0, -2, {2, 0, 0, -2}},
      {0, 0, {0, 2, 0, 2}},    {0, 2, {0, 0, 2, -2}},   {0, 4, {0, 2, -2, 0}},
      {1, -7, {2, -2, 0, 0}},  {1, -5, {2, 0, 0, 2}},   {1, -3, {2, 0, 2, 0}},
      {1, -1, {2, 2, 0, 0}},   {1, 1, {0, 2, 2, 0}},    {1, 3, {0, 2, 0, -2}},
      {2, -8, {1, -1, -1, 1}}, {2, -6, {1, -1, 1, 1}},  {2, -4, {2, 0, 0, 0}},
      {2, -2, {1, 1, 1, 1}},   {2, 0, {1, 1, 1, -1}},   {2, 2, {0, 2, 0, 0}},
      {3, -9, {1, -1, -1, -1}}, {3, -7, {0, 0, 0, 2}},  {3, -5, {1, -1, 1, -1}},
      {3, -3, {1, 1, -1, 1}},  {3, -1, {0, 0, 2, 0}},   {3, 1, {1, 1, -1, -1}},
  };
  REQUIRE(q.gamma_q_vertices().size() == 24);
  for (const E& e : fig) {
    PhiHatElt x = q.phi({e.i, e.p});
    CHECK(x.level == 0);
    CHECK(x.root.coords == solve_root_coords(alphas, e.label2));
  }
}

TEST_CASE("G2 AR-quiver matches the published figure") {
  CartanDatum g2 = build_datum("G2");
  DynkinQuiver q(g2, {1, 2});
  std::vector<Vec> alphas = {{0, 1, -1}, {1, -2, 1}};
  struct E { int i; long long p; Vec label; };
  std::vector<E> fig = {
      {0, -3, {0, 1, -1}}, {0, -1, {1, 0, -1}}, {0, 1, {1, -1, 0}},
      {1, -2, {1, 1, -2}}, {1, 0, {2, -1, -1}}, {1, 2, {1, -2, 1}},
  };
  REQUIRE(q.gamma_q_vertices().size() == 6);
  for (const E& e : fig) {
    PhiHatElt x = q.phi({e.i, e.p});
    CHECK(x.level == 0);
    CHECK(x.root.coords == solve_root_coords(alphas, e.label));
  }
}

TEST_CASE("adapted sequences and positions") {
  CartanDatum b3 = build_datum("B3");
  DynkinQuiver q(b3, {3, 2, 1});
  Word w = {0, 1, 2, 0, 1, 2, 0, 1, 2};
  AdaptedCheck ad = adapted_positions(q, w);
  CHECK(ad.adapted);
  std::vector<RepVertex> want = {{0, 3}, {1, 2}, {2, 1}, {0, 1}, {1, 0},
                                 {2, -1}, {0, -1}, {1, -2}, {2, -3}};
  CHECK(ad.positions == want);
  // phi(i_k, p_k) = hat(s_{i_1}) ... hat(s_{i_{k-1}}) (alpha_{i_k}, 0)
  for (size_t k = 0; k < w.size(); ++k) {
    Vec alpha(3, 0);
    alpha[w[k]] = 1;
    Word prefix(w.begin(), w.begin() + k);
    CHECK(q.phi(ad.positions[k]) == hat_action(b3, prefix, {root_vec(alpha), 0}));
  }

  AdaptedCheck bad = adapted_positions(q, {1});
  CHECK_FALSE(bad.adapted);
  CHECK(bad.failing_index == 0);

  // a full double sweep drops all heights by 2 x occurrences
  Word dbl;
  for (int rep = 0; rep < 2; ++rep)
    for (int i : longest_word(b3, q)) dbl.push_back(i);
  CHECK(dbl.size() == 18);
  DynkinQuiver cur = q;
  std::vector<int> count(3, 0);
  for (int i : dbl) {
    CHECK(cur.is_source(i));
    cur = cur.reflect(i);
    ++count[i];
  }
  for (int i = 0; i < 3; ++i) CHECK(cur.xi(i) == q.xi(i) - 2 * count[i]);
}

TEST_CASE("compatible reading reproduces the published order") {
  CartanDatum b3 = build_datum("B3");
  DynkinQuiver q(b3, {3, 2, 1});
  CHECK(longest_word(b3, q) == Word{0, 1, 2, 0, 1, 2, 0, 1, 2});
  CartanDatum a1 = build_datum("A1");
  DynkinQuiver q1(a1, {5});
  CHECK(compatible_reading(q1) == std::vector<RepVertex>{{0, 5}});
}

TEST_CASE("Gamma_Q is isomorphic to Upsilon_[Q] as labeled quivers") {
  std::mt19937_64 rng(17);
  for (const char* name : {"A4", "B3", "C3", "D4", "F4", "G2", "E6"}) {
    CartanDatum dt = build_datum(name);
    for (int k = 0; k < 3; ++k) {
      DynkinQuiver q = random_quiver(dt, rng);
      CHECK(ar_quiver(q).key() == hasse_quiver(dt, longest_word(dt, q)).key());
    }
  }
}

TEST_CASE("additive property") {
  std::mt19937_64 rng(23);
  for (CartanType t : types_up_to_rank(8)) {
    CartanDatum dt = build_datum(t);
    for (int k = 0; k < 3; ++k) {
      AdditiveCheck c = check_additive(random_quiver(dt, rng));
      CHECK(c.holds);
    }
  }
  // degenerate rank-1 case
  CartanDatum a1 = build_datum("A1");
  CHECK(check_additive(DynkinQuiver(a1, {0})).holds);
}

TEST_CASE("class census") {
  CHECK(class_census(build_datum("A3")) == 4);
  CHECK(class_census(build_datum("B3")) == 4);
  CHECK(class_census(build_datum("G2")) == 2);
  CHECK(class_census(build_datum("A1")) == 1);
  CHECK(class_census(build_datum("D4")) == 8);
  CHECK_THROWS_AS(class_census(build_datum("A7")), std::invalid_argument);
}

TEST_CASE("phi window and shifts across types") {
  std::mt19937_64 rng(29);
  for (CartanType t : types_up_to_rank(8)) {
    CartanDatum dt = build_datum(t);
    auto star = star_involution(dt);
    DynkinQuiver q = random_quiver(dt, rng);
    CHECK(q.gamma_q_vertices().size() == positive_roots(dt).size());
    for (int i = 0; i < dt.n; ++i) {
      CHECK((dt.h + q.xi(star[i]) - q.xi(i)) % 2 == 0);
      for (long long p = q.xi(i) - 2 * dt.h; p <= q.xi(i) + 2 * dt.h; p += 2) {
        PhiHatElt x = q.phi({i, p});
        PhiHatElt up = q.phi({star[i], p + dt.h});
        CHECK(up.root == x.root);
        CHECK(up.level == x.level + 1);
        CHECK(q.phi_inverse(x) == RepVertex{i, p});
      }
    }
  }
}

TEST_CASE("the Coxeter element is independent of the adapted order") {
  std::mt19937_64 rng(61);
  for (const char* name : {"A4", "B4", "D5", "E6", "F4"}) {
    CartanDatum dt = build_datum(name);
    for (int trial = 0; trial < 5; ++trial) {
      DynkinQuiver q = random_quiver(dt, rng);
      // a random Q-adapted order visiting every vertex once
      Word order;
      DynkinQuiver cur = q;
      std::vector<char> used(dt.n, 0);
      while (static_cast<int>(order.size()) < dt.n) {
        std::vector<int> fresh;
        for (int i : cur.sources())
          if (!used[i]) fresh.push_back(i);
        REQUIRE(!fresh.empty());
        int i = fresh[rng() % fresh.size()];
        used[i] = 1;
        order.push_back(i);
        cur = cur.reflect(i);
      }
      CHECK(WeylElement::from_word(dt, order) == q.tau());
    }
  }
}

TEST_CASE("a full adapted sweep shifts heights by the Coxeter number") {
  std::mt19937_64 rng(67);
  for (const char* name : {"A4", "B3", "C4", "D4", "E6", "F4", "G2"}) {
    CartanDatum dt = build_datum(name);
    auto star = star_involution(dt);
    for (int trial = 0; trial < 3; ++trial) {
      DynkinQuiver q = random_quiver(dt, rng);
      Word w = longest_word(dt, q);
      DynkinQuiver cur = q;
      for (int i : w) cur = cur.reflect(i);
      for (int i = 0; i < dt.n; ++i) CHECK(cur.xi(i) == q.xi(star[i]) - dt.h);
      // rotating the word by its starred first letter stays adapted to s_{i_1}Q
      Word rotated(w.begin() + 1, w.end());
      rotated.push_back(star[w[0]]);
      CHECK(is_adapted(q.reflect(w[0]), rotated));
      CHECK(beta_sequence(dt, rotated).reduced);
    }
  }
}
