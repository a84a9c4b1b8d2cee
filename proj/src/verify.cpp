#include "qcartan/verify.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace qcartan {

namespace {
std::string fmt(const char* pre, long long a, long long b, long long c = 0, long long d = 0) {
  std::ostringstream os;
  os << pre << " (" << a << "," << b << "," << c << "," << d << ")";
  return os.str();
}
}  // namespace

DynkinQuiver random_quiver(const CartanDatum& dt, Rng& rng) {
  auto all = all_orientation_heights(dt, 0);
  Vec xi = all[rng() % all.size()];
  long long offset = static_cast<long long>(rng() % 7) - 3;
  for (auto& v : xi) v += 2 * offset;  // even offsets keep the published parities
  if (rng() % 2) for (auto& v : xi) v += 1;
  return DynkinQuiver(dt, xi);
}

Word random_adapted_sequence(const DynkinQuiver& q, int len, Rng& rng) {
  Word out;
  DynkinQuiver cur = q;
  for (int k = 0; k < len; ++k) {
    auto src = cur.sources();
    int i = src[rng() % src.size()];
    out.push_back(i);
    cur = cur.reflect(i);
  }
  return out;
}

std::vector<RepVertex> random_compatible_reading(const DynkinQuiver& q, Rng& rng) {
  std::vector<RepVertex> pool = q.gamma_q_vertices();
  std::vector<RepVertex> out;
  while (!pool.empty()) {
    std::vector<size_t> ready;
    for (size_t k = 0; k < pool.size(); ++k) {
      bool blocked = false;
      for (size_t m = 0; m < pool.size(); ++m)
        if (m != k && q.datum().dist[pool[k].i][pool[m].i] <= 1 && pool[m].p > pool[k].p) {
          blocked = true;
          break;
        }
      if (!blocked) ready.push_back(k);
    }
    size_t pick = ready[rng() % ready.size()];
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + pick);
  }
  return out;
}

Word random_adapted_w0_word(const DynkinQuiver& q, Rng& rng) {
  auto star = star_involution(q.datum());
  Vec quota(q.n());
  long long total = 0;
  for (int i = 0; i < q.n(); ++i) {
    quota[i] = (q.h() + q.xi(i) - q.xi(star[i])) / 2;
    total += quota[i];
  }
  // random source choices, retrying on the rare dead end
  for (int attempt = 0; attempt < 100; ++attempt) {
    Word out;
    Vec left = quota;
    DynkinQuiver cur = q;
    while (static_cast<long long>(out.size()) < total) {
      std::vector<int> candidates;
      for (int i : cur.sources())
        if (left[i] > 0) candidates.push_back(i);
      if (candidates.empty()) break;
      int i = candidates[rng() % candidates.size()];
      out.push_back(i);
      --left[i];
      cur = cur.reflect(i);
    }
    if (static_cast<long long>(out.size()) == total) return out;
  }
  throw std::logic_error("random_adapted_w0_word: no completion found");
}

std::vector<CartanType> types_up_to_rank(int max_rank) {
  std::vector<CartanType> out;
  for (int n = 1; n <= max_rank; ++n) out.push_back({Family::A, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::B, n});
  for (int n = 2; n <= max_rank; ++n) out.push_back({Family::C, n});
  for (int n = 4; n <= max_rank; ++n) out.push_back({Family::D, n});
  for (int n = 6; n <= std::min(8, max_rank); ++n) out.push_back({Family::E, n});
  if (max_rank >= 4) out.push_back({Family::F, 4});
  if (max_rank >= 2) out.push_back({Family::G, 2});
  return out;
}

std::vector<CartanType> small_rank_types() {
  std::vector<CartanType> out;
  for (CartanType t : types_up_to_rank(5))
    if (t.family != Family::F && t.family != Family::G) out.push_back(t);
  out.push_back({Family::F, 4});
  out.push_back({Family::G, 2});
  return out;
}

SuiteResult suite_tables(const std::string& type) {
  SuiteResult r{"tables", type, true, ""};
  for (const GoldenTable& g : paper_tables()) {
    if (!type.empty() && g.type.str() != type) continue;
    CartanDatum dt = build_datum(g.type);
    TildeBTable computed = inverse_via_eta(dt);
    for (const auto& [ij, poly] : g.entries) {
      auto [i, j] = ij;
      for (int u = 0; u < g.h; ++u) {
        if (computed.delta_coeff(i, j, u) != poly[u] || computed.delta_coeff(j, i, u) != poly[u]) {
          r.pass = false;
          r.detail = g.type.str() + fmt(": delta~ mismatch at", i + 1, j + 1, u);
          return r;
        }
      }
    }
    r.detail += g.type.str() + " ";
  }
  if (r.detail.empty()) {
    r.pass = false;
    r.detail = "no published table for type " + type;
  }
  return r;
}

SuiteResult suite_closed_formulas(CartanType t) {
  SuiteResult r{"closed-formulas", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  TildeBTable tab = inverse_via_eta(dt);
  for (int i = 0; i < dt.n; ++i)
    for (int j = 0; j < dt.n; ++j) {
      Vec formula = closed_formula(t, i, j);
      for (int u = 0; u < dt.h; ++u)
        if (formula[u] != tab.delta_coeff(i, j, u)) {
          r.pass = false;
          r.detail = fmt("formula mismatch at", i + 1, j + 1, u);
          return r;
        }
    }
  return r;
}

SuiteResult suite_two_method(CartanType t) {
  SuiteResult r{"two-method", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  TildeBTable tab = inverse_via_eta(dt);
  int top = 4 * dt.h;
  auto series = inverse_via_series(dt, top);
  for (int i = 0; i < dt.n; ++i)
    for (int j = 0; j < dt.n; ++j)
      for (int u = 0; u <= top; ++u)
        if (series[i][j][u] != tab.tfb(i, j, u)) {
          r.pass = false;
          r.detail = fmt("series vs eta at", i + 1, j + 1, u);
          return r;
        }
  return r;
}

SuiteResult suite_quiver_independence(CartanType t, uint64_t seed, int count) {
  SuiteResult r{"quiver-independence", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  Rng rng(seed);
  TildeBTable ref = inverse_via_eta(dt);
  for (int k = 0; k < count; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    if (inverse_via_eta(q) != ref) {
      r.pass = false;
      std::string xi;
      for (long long x : q.xi()) xi += std::to_string(x) + ",";
      r.detail = "table differs for heights " + xi;
      return r;
    }
  }
  return r;
}

SuiteResult suite_structural(CartanType t, uint64_t seed) {
  SuiteResult r{"structural", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  TildeBTable tab = inverse_via_eta(dt);
  auto star = star_involution(dt);
  int h = dt.h;
  auto fail = [&](const std::string& what, int i, int j, long long u) {
    r.pass = false;
    r.detail = what + fmt("", i + 1, j + 1, u);
    return r;
  };
  for (int i = 0; i < dt.n; ++i)
    for (int j = 0; j < dt.n; ++j) {
      // Lemma "basic tfb"
      if (tab.tfb(i, j, 0) != 0 || tab.tfb(i, j, -5) != 0) return fail("tfb(u<1) != 0", i, j, 0);
      if (tab.tfb(i, j, 1) != (i == j ? dt.d[i] : 0)) return fail("tfb(1) != d_i delta", i, j, 1);
      for (long long u = 0; u <= 2 * h; ++u) {
        long long b = tab.tfb(i, j, u);
        // (i) parity vanishing
        if ((u - dt.dist[i][j] - 1) % 2 != 0 && b != 0) return fail("parity", i, j, u);
        // (ii) b(u+h) = -b_{i,j*}(u)
        if (tab.tfb(i, j, u + h) != -tab.tfb(i, star[j], u)) return fail("shift by h", i, j, u);
        // (iii) 2h-periodicity
        if (tab.tfb(i, j, u + 2 * h) != b) return fail("2h-periodicity", i, j, u);
        // (iv) b(h-u) = b_{i,j*}(u) for 0 <= u <= h
        if (u <= h && tab.tfb(i, j, h - u) != tab.tfb(i, star[j], u))
          return fail("reflection at h", i, j, u);
        // (v) b(2h-u) = -b(u)
        if (tab.tfb(i, j, 2 * h - u) != -b) return fail("reflection at 2h", i, j, u);
        // (vi)/(vii) sign ranges
        if (u <= h && b < 0) return fail("positivity on [0,h]", i, j, u);
        if (u >= h && b > 0) return fail("nonpositivity on [h,2h]", i, j, u);
        // Prop "Xi"
        if (u <= dt.dist[i][j] && b != 0) return fail("vanishing below d(i,j)", i, j, u);
      }
      // b(h) = 0
      if (tab.tfb(i, j, h) != 0) return fail("tfb(h) != 0", i, j, h);
      // teta recurrence (Cor. "additive application")
      for (long long u = -2 * h; u <= 2 * h; ++u) {
        if (tab.teta(i, j, u) != tab.teta(i, j, -u)) return fail("teta evenness", i, j, u);
        long long lhs = tab.teta(i, j, u - 1) + tab.teta(i, j, u + 1);
        for (int k : dt.neighbors(j)) lhs += dt.C[k][j] * tab.teta(i, k, u);
        long long rhs = (u == 0 && i == j) ? 2 * dt.d[i] : 0;
        if (lhs != rhs) return fail("teta recurrence", i, j, u);
      }
    }
  // (viii) b(u) - b(-u) against 3 random quivers
  Rng rng(seed);
  for (int k = 0; k < 3; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    for (int i = 0; i < dt.n; ++i)
      for (int j = 0; j < dt.n; ++j)
        for (long long u = -2 * h; u <= 2 * h; ++u) {
          long long diff = tab.tfb(i, j, u) - tab.tfb(i, j, -u);
          if (diff != eta(q, i, j, u)) return fail("general-u identity", i, j, u);
        }
  }
  return r;
}

SuiteResult suite_caln(CartanType t, uint64_t seed, int quivers) {
  SuiteResult r{"calN", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  NForm nf(inverse_via_eta(dt));
  Rng rng(seed);
  for (int k = 0; k < quivers; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    long long lo = -4 * dt.h, hi = 4 * dt.h;
    std::vector<RepVertex> verts;
    for (int i = 0; i < dt.n; ++i)
      for (long long p = lo; p <= hi; ++p)
        if (q.valid_vertex({i, p})) verts.push_back({i, p});
    for (const RepVertex& a : verts)
      for (const RepVertex& b : verts)
        if (nf.pairing(a, b) != n_via_roots(q, a, b)) {
          r.pass = false;
          r.detail = fmt("calN mismatch at", a.i + 1, a.p, b.i + 1, b.p);
          return r;
        }
  }
  return r;
}

SuiteResult suite_nnkr(CartanType t, uint64_t seed, int quivers) {
  SuiteResult r{"nnkr", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  NForm nf(inverse_via_eta(dt));
  Rng rng(seed);
  for (int k = 0; k < quivers; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    for (int i = 0; i < dt.n; ++i)
      for (int j = 0; j < dt.n; ++j) {
        long long dij = dt.dist[i][j];
        for (long long p = q.xi(i) - 2 * dt.h; p <= q.xi(i); p += 2)
          for (long long p2 = p; p2 <= q.xi(i); p2 += 2)
            for (long long s = q.xi(j) - 2 * dt.h; s <= q.xi(j); s += 2)
              for (long long s2 = s; s2 <= q.xi(j); s2 += 2) {
                if (p - s > dij || s2 - p2 > dij) continue;
                if (!check_nnkr(q, nf, i, p, p2, j, s, s2)) {
                  r.pass = false;
                  r.detail = fmt("NnKR fails at", i + 1, p, j + 1, s);
                  return r;
                }
              }
      }
  }
  return r;
}

SuiteResult suite_ya(CartanType t, uint64_t seed, int quivers) {
  SuiteResult r{"ya", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  NForm nf(inverse_via_eta(dt));
  Rng rng(seed);
  for (int k = 0; k < quivers; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    if (!check_ya(q, nf, -2 * dt.h, 2 * dt.h)) {
      r.pass = false;
      r.detail = "YA commutation case formula fails";
      return r;
    }
  }
  return r;
}

SuiteResult suite_additive(CartanType t, uint64_t seed, int quivers) {
  SuiteResult r{"additive", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  Rng rng(seed);
  for (const Vec& xi : all_orientation_heights(dt)) {
    if (dt.n > 6) break;  // enumeration is for small ranks; random below covers the rest
    AdditiveCheck c = check_additive(DynkinQuiver(dt, xi));
    if (!c.holds) {
      r.pass = false;
      r.detail = fmt("additive fails at", c.i + 1, c.l);
      return r;
    }
  }
  for (int k = 0; k < quivers; ++k) {
    AdditiveCheck c = check_additive(random_quiver(dt, rng));
    if (!c.holds) {
      r.pass = false;
      r.detail = fmt("additive fails at", c.i + 1, c.l);
      return r;
    }
  }
  return r;
}

SuiteResult suite_bijection(CartanType t, uint64_t seed, int quivers) {
  SuiteResult r{"bijection", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  auto star = star_involution(dt);
  auto phi_plus = positive_roots(dt);
  Rng rng(seed);
  for (int k = 0; k < quivers; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    // h + xi_{i*} - xi_i is even
    for (int i = 0; i < dt.n; ++i)
      if ((dt.h + q.xi(star[i]) - q.xi(i)) % 2 != 0) {
        r.pass = false;
        r.detail = "h + xi_{i*} - xi_i odd at i=" + std::to_string(i + 1);
        return r;
      }
    // window maps bijectively onto Phi^+ x {0}, and the level-0 range is
    // exactly the window
    std::set<Vec> seen;
    for (const RepVertex& v : q.gamma_q_vertices()) {
      PhiHatElt x = q.phi(v);
      if (x.level != 0 || !seen.insert(x.root.coords).second) {
        r.pass = false;
        r.detail = fmt("window not level-0/injective at", v.i + 1, v.p);
        return r;
      }
      if (q.phi_inverse(x) != v) {
        r.pass = false;
        r.detail = fmt("phi_inverse round trip at", v.i + 1, v.p);
        return r;
      }
    }
    if (seen.size() != phi_plus.size()) {
      r.pass = false;
      r.detail = "window misses roots";
      return r;
    }
    // injectivity with level windows over p in [xi_i - 2h, xi_i + 2h]
    std::set<std::pair<Vec, long long>> hat_seen;
    for (int i = 0; i < dt.n; ++i)
      for (long long p = q.xi(i) - 2 * dt.h; p <= q.xi(i) + 2 * dt.h; p += 2) {
        PhiHatElt x = q.phi({i, p});
        if (!hat_seen.insert({x.root.coords, x.level}).second) {
          r.pass = false;
          r.detail = fmt("phi not injective at", i + 1, p);
          return r;
        }
        // level-0 iff xi_{i*} - h < p <= xi_i
        bool expect0 = p <= q.xi(i) && p > q.xi(star[i]) - dt.h;
        if ((x.level == 0) != expect0) {
          r.pass = false;
          r.detail = fmt("range formula at", i + 1, p);
          return r;
        }
        // Lemma refl
        PhiHatElt up = q.phi({star[i], p + dt.h});
        PhiHatElt down = q.phi({star[i], p - dt.h});
        if (up.root != x.root || up.level != x.level + 1 || down.root != x.root ||
            down.level != x.level - 1) {
          r.pass = false;
          r.detail = fmt("h-shift rule at", i + 1, p);
          return r;
        }
      }
    // phi_{s_iQ} = hat(s_i)^{-1} o phi_Q for sources
    for (int i : q.sources()) {
      DynkinQuiver qi = q.reflect(i);
      for (int j = 0; j < dt.n; ++j)
        for (long long p = q.xi(j) - 2 * dt.h; p <= q.xi(j) + 2 * dt.h; p += 2) {
          if (!qi.valid_vertex({j, p})) continue;
          PhiHatElt lhs = qi.phi({j, p});
          PhiHatElt rhs = hat_action_inverse(dt, {i}, q.phi({j, p}));
          if (lhs != rhs) {
            r.pass = false;
            r.detail = fmt("source functoriality at", i + 1, j + 1, p);
            return r;
          }
        }
    }
  }
  return r;
}

SuiteResult suite_b3_worked() {
  SuiteResult r{"b3-worked", "B3", true, ""};
  CartanDatum dt = build_datum("B3");
  DynkinQuiver q(dt, {3, 2, 1});
  NForm nf(inverse_via_eta(q));
  // the nine labels of the published AR-quiver, (i,p) -> root coordinates
  struct Entry { int i; long long p; Vec root; };
  const std::vector<Entry> labels = {
      {0, -1, {1, 1, 2}}, {0, 1, {0, 1, 0}}, {0, 3, {1, 0, 0}},
      {1, -2, {0, 1, 2}}, {1, 0, {1, 2, 2}}, {1, 2, {1, 1, 0}},
      {2, -3, {0, 0, 1}}, {2, -1, {0, 1, 1}}, {2, 1, {1, 1, 1}},
  };
  if (q.gamma_q_vertices().size() != 9) {
    r.pass = false;
    r.detail = "Gamma_Q should have 9 vertices";
    return r;
  }
  for (const auto& e : labels) {
    PhiHatElt x = q.phi({e.i, e.p});
    if (x.level != 0 || x.root.coords != e.root) {
      r.pass = false;
      r.detail = fmt("AR label mismatch at", e.i + 1, e.p);
      return r;
    }
  }
  // the four listed Q-weights
  auto wt_of = [&](int i, long long p) {
    TorusMonomial m;
    m.exps[{i, p}] = 1;
    return wtQ(q, m).coords;
  };
  if (wt_of(0, 1) != Vec{0, 1, 0} || wt_of(1, 2) != Vec{1, 1, 0} || wt_of(1, 0) != Vec{1, 2, 2} ||
      wt_of(2, 1) != Vec{1, 1, 1}) {
    r.pass = false;
    r.detail = "listed Q-weights differ";
    return r;
  }
  // wt_Q(B~_{2,1}) = 0 with the published support
  TorusMonomial b21 = b_monomial(q, nf, 1, 1);
  std::map<RepVertex, long long> want{{{1, 0}, 1}, {{1, 2}, 1}, {{0, 1}, -1}, {{2, 1}, -2}};
  if (b21.exps != want) {
    r.pass = false;
    r.detail = "B~_{2,1} support differs";
    return r;
  }
  if (wtQ(q, b21).coords != Vec(3, 0)) {
    r.pass = false;
    r.detail = "wt_Q(B~_{2,1}) != 0";
    return r;
  }
  // the seven-term element: all monomials share weight alpha_2
  TorusElement elt = parse_element(
      q, nf,
      "q^1*X[1,1] + q^1*X[2,2]*X[1,3]^-1 + q^2*X[3,3]^2*X[2,4]^-1 + q^-1*X[3,3]*X[3,5]^-1 + "
      "q^1*X[3,3]*X[3,5]^-1 + q^2*X[2,4]*X[3,5]^-2 + q^1*X[1,5]*X[2,6]^-1 + q^-1*X[1,7]^-1");
  int monomials = 0;
  for (const auto& [m, c] : elt.terms()) {
    (void)c;
    ++monomials;
    if (wtQ(q, m).coords != Vec{0, 1, 0}) {
      r.pass = false;
      r.detail = "a monomial of the seven-term element has wrong Q-weight";
      return r;
    }
  }
  if (monomials != 8) {  // the (q^-1+q) coefficient contributes two q-terms
    r.pass = false;
    r.detail = "element should normalize to 8 q-monomial terms";
    return r;
  }
  return r;
}

SuiteResult suite_compatible_word(const CartanDatum& dt, const Word& w) {
  SuiteResult r{"compatible", dt.type.str(), true, ""};
  PairMatrices pm = build_pair(dt, w);
  if (!check_compatible(pm)) {
    r.pass = false;
    std::string ws;
    for (int i : w) ws += std::to_string(i + 1) + ",";
    r.detail = "Lambda B != -2 diag(d) for word " + ws;
  }
  return r;
}

SuiteResult suite_compatible(CartanType t, uint64_t seed, int random_sequences, int max_len) {
  SuiteResult r{"compatible", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  Rng rng(seed);
  // every orientation's compatible-reading word and every prefix
  auto heights = all_orientation_heights(dt);
  for (const Vec& xi : heights) {
    DynkinQuiver q(dt, xi);
    Word w = longest_word(dt, q);
    for (size_t len = 1; len <= w.size(); ++len) {
      Word prefix(w.begin(), w.begin() + len);
      SuiteResult sub = suite_compatible_word(dt, prefix);
      if (!sub.pass) return sub;
    }
    // source-cycled extension to 3 l(w_0)
    DynkinQuiver cur = q;
    for (int i : w) cur = cur.reflect(i);
    Word extended = w;
    while (extended.size() < 3 * w.size()) {
      int i = cur.sources()[0];
      extended.push_back(i);
      cur = cur.reflect(i);
    }
    SuiteResult sub = suite_compatible_word(dt, extended);
    if (!sub.pass) return sub;
  }
  for (int k = 0; k < random_sequences; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    int len = 1 + static_cast<int>(rng() % max_len);
    Word w = random_adapted_sequence(q, len, rng);
    SuiteResult sub = suite_compatible_word(dt, w);
    if (!sub.pass) return sub;
  }
  return r;
}

SuiteResult suite_torus_iso(CartanType t, uint64_t seed, int quivers) {
  SuiteResult r{"torus-iso", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  NForm nf(inverse_via_eta(dt));
  Rng rng(seed);
  for (int k = 0; k < quivers; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    if (!check_torus_iso(q, nf)) {
      r.pass = false;
      r.detail = "kappa != Lambda^[Q]";
      return r;
    }
  }
  return r;
}

SuiteResult suite_census(CartanType t) {
  SuiteResult r{"census", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  int classes = class_census(dt);
  int expected = 1 << (dt.n - 1);
  if (classes != expected) {
    r.pass = false;
    r.detail = "census " + std::to_string(classes) + " != " + std::to_string(expected);
  } else {
    r.detail = std::to_string(classes) + " classes";
  }
  return r;
}

SuiteResult suite_gaup(CartanType t, uint64_t seed, int quivers) {
  SuiteResult r{"gaup", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  Rng rng(seed);
  for (int k = 0; k < quivers; ++k) {
    DynkinQuiver q = random_quiver(dt, rng);
    Word w = longest_word(dt, q);
    auto bs = beta_sequence(dt, w);
    if (!bs.reduced || w.size() != positive_roots(dt).size()) {
      r.pass = false;
      r.detail = "compatible reading is not a reduced word of w_0";
      return r;
    }
    AdaptedCheck ad = adapted_positions(q, w);
    if (!ad.adapted) {
      r.pass = false;
      r.detail = "compatible reading is not Q-adapted";
      return r;
    }
    auto reading = compatible_reading(q);
    for (size_t idx = 0; idx < reading.size(); ++idx) {
      if (ad.positions[idx] != reading[idx]) {
        r.pass = false;
        r.detail = "adapted positions differ from the reading";
        return r;
      }
      PhiHatElt x = q.phi(reading[idx]);
      if (x.level != 0 || x.root != bs.beta[idx]) {
        r.pass = false;
        r.detail = "phi(i_k,p_k) != (beta_k, 0) at k=" + std::to_string(idx + 1);
        return r;
      }
    }
    // Gamma_Q equals Upsilon_[Q] as labeled quivers
    if (ar_quiver(q).key() != hasse_quiver(dt, w).key()) {
      r.pass = false;
      r.detail = "Gamma_Q and Upsilon_[Q] differ";
      return r;
    }
  }
  return r;
}

SuiteResult suite_readings(CartanType t, uint64_t seed, int count) {
  SuiteResult r{"readings", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  size_t ell = positive_roots(dt).size();
  Rng rng(seed);
  DynkinQuiver q = random_quiver(dt, rng);
  auto canonical = hasse_quiver(dt, longest_word(dt, q)).key();
  for (int trial = 0; trial < count; ++trial) {
    std::vector<RepVertex> reading =
        trial % 2 == 0 ? random_compatible_reading(q, rng)
                       : adapted_positions(q, random_adapted_w0_word(q, rng)).positions;
    Word w;
    for (const RepVertex& v : reading) w.push_back(v.i);
    auto bs = beta_sequence(dt, w);
    if (!bs.reduced || w.size() != ell) {
      r.pass = false;
      r.detail = "reading word is not reduced of length l(w_0)";
      return r;
    }
    for (size_t k = 0; k < reading.size(); ++k) {
      PhiHatElt x = q.phi(reading[k]);
      if (x.level != 0 || x.root != bs.beta[k]) {
        r.pass = false;
        r.detail = "phi(i_k,p_k) != (beta_k,0) on a random reading";
        return r;
      }
    }
    if (hasse_quiver(dt, w).key() != canonical) {
      r.pass = false;
      r.detail = "a compatible reading left the class [Q]";
      return r;
    }
  }
  return r;
}

SuiteResult suite_conjecture(CartanType t, uint64_t seed, int count, int max_len) {
  SuiteResult r{"conjecture", t.str(), true, ""};
  CartanDatum dt = build_datum(t);
  Rng rng(seed);
  int produced = 0;
  while (produced < count) {
    // random walk that keeps the subword condition alive
    Word w;
    int target = 1 + static_cast<int>(rng() % max_len);
    int stall = 0;
    while (static_cast<int>(w.size()) < target && stall < 50) {
      w.push_back(static_cast<int>(rng() % dt.n));
      if (!cond_din(dt, w)) {
        w.pop_back();
        ++stall;
      }
    }
    if (w.empty()) continue;
    ++produced;
    PairMatrices pm = build_pair(dt, w);
    if (!check_compatible(pm)) {
      r.pass = false;
      std::string ws;
      for (int i : w) ws += std::to_string(i + 1) + ",";
      r.detail = "conjecture counterexample: " + ws;
      return r;
    }
  }
  return r;
}

std::vector<std::string> suite_names() {
  return {"tables",   "closed-formulas", "two-method", "quiver-independence",
          "structural", "calN",          "nnkr",       "ya",
          "additive", "bijection",       "b3-worked",  "compatible",
          "torus-iso", "census",         "gaup",       "readings",
          "conjecture"};
}

std::vector<SuiteResult> run_suite(const std::string& suite, const std::string& type,
                                   uint64_t seed, const std::string& word_spec) {
  std::vector<SuiteResult> out;
  CartanType t = parse_type(type);
  if (suite == "tables") {
    out.push_back(suite_tables(type));
  } else if (suite == "closed-formulas") {
    out.push_back(suite_closed_formulas(t));
  } else if (suite == "two-method") {
    out.push_back(suite_two_method(t));
  } else if (suite == "quiver-independence") {
    out.push_back(suite_quiver_independence(t, seed));
  } else if (suite == "structural") {
    out.push_back(suite_structural(t, seed));
  } else if (suite == "calN") {
    out.push_back(suite_caln(t, seed));
  } else if (suite == "nnkr") {
    out.push_back(suite_nnkr(t, seed));
  } else if (suite == "ya") {
    out.push_back(suite_ya(t, seed));
  } else if (suite == "additive") {
    out.push_back(suite_additive(t, seed));
  } else if (suite == "bijection") {
    out.push_back(suite_bijection(t, seed));
  } else if (suite == "b3-worked") {
    out.push_back(suite_b3_worked());
  } else if (suite == "compatible") {
    CartanDatum dt = build_datum(t);
    if (!word_spec.empty())
      out.push_back(suite_compatible_word(dt, parse_word(dt, word_spec)));
    else
      out.push_back(suite_compatible(t, seed));
  } else if (suite == "torus-iso") {
    out.push_back(suite_torus_iso(t, seed));
  } else if (suite == "census") {
    out.push_back(suite_census(t));
  } else if (suite == "gaup") {
    out.push_back(suite_gaup(t, seed));
  } else if (suite == "readings") {
    out.push_back(suite_readings(t, seed));
  } else if (suite == "conjecture") {
    out.push_back(suite_conjecture(t, seed));
  } else {
    throw std::invalid_argument("unknown suite: " + suite);
  }
  return out;
}

}  // namespace qcartan
