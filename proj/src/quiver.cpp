#include "qcartan/quiver.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qcartan {

DynkinQuiver::DynkinQuiver(CartanDatum datum, Vec xi)
    : datum_(std::move(datum)), xi_(std::move(xi)), tau_(WeylElement::identity(datum_)) {
  int n = datum_.n;
  if (static_cast<int>(xi_.size()) != n)
    throw std::invalid_argument("height function has wrong size");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (datum_.dist[i][j] == 1 && std::abs(xi_[i] - xi_[j]) != 1)
        throw std::invalid_argument("not a height function: |xi_i - xi_j| != 1 on an edge");

  star_ = star_involution(datum_);

  // Q-adapted order: decreasing height, ties (always non-adjacent) by index
  tau_word_.resize(n);
  std::iota(tau_word_.begin(), tau_word_.end(), 0);
  std::sort(tau_word_.begin(), tau_word_.end(), [&](int a, int b) {
    if (xi_[a] != xi_[b]) return xi_[a] > xi_[b];
    return a < b;
  });
  tau_ = WeylElement::from_word(datum_, tau_word_);

  int h = datum_.h;
  tau_pow_.reserve(h);
  tau_pow_.push_back(WeylElement::identity(datum_));
  for (int k = 1; k < h; ++k) tau_pow_.push_back(tau_pow_.back() * tau_);
  assert(tau_pow_.back() * tau_ == WeylElement::identity(datum_) && "tau has order h");

  gamma_.reserve(n);
  for (int i = 0; i < n; ++i) {
    Vec w(n, 0);
    w[i] = 1;
    LatticeVec vi = weight_vec(w);
    LatticeVec diff = vi;
    LatticeVec img = tau_.apply(vi);
    for (int k = 0; k < n; ++k) diff.coords[k] -= img.coords[k];
    gamma_.push_back(to_root_basis(datum_, diff));
    assert(is_positive(gamma_.back()));
  }

  tau_gamma_.assign(h, {});
  for (int k = 0; k < h; ++k) {
    tau_gamma_[k].reserve(n);
    for (int i = 0; i < n; ++i) tau_gamma_[k].push_back(tau_pow_[k].apply(gamma_[i]));
  }

  for (int i = 0; i < n; ++i) {
    assert((h + xi_[i] - xi_[star_[i]]) % 2 == 0);
    for (long long p = xi_[star_[i]] - h + 2; p <= xi_[i]; p += 2) window_.push_back({i, p});
  }
  std::sort(window_.begin(), window_.end(), [](const RepVertex& a, const RepVertex& b) {
    if (a.i != b.i) return a.i < b.i;
    return a.p < b.p;
  });
  for (const RepVertex& v : window_) {
    long long k = (xi_[v.i] - v.p) / 2;
    const LatticeVec& root = tau_gamma_[k % h][v.i];
    assert(is_positive(root));
    bool fresh = root_to_vertex_.emplace(root.coords, v).second;
    assert(fresh && "phi restricted to the window is injective");
    (void)fresh;
  }
  assert(root_to_vertex_.size() == positive_roots(datum_).size());
}

const WeylElement& DynkinQuiver::tau_power(long long k) const {
  long long m = k % h();
  if (m < 0) m += h();
  return tau_pow_[m];
}

const LatticeVec& DynkinQuiver::tau_gamma(long long k, int i) const {
  long long m = k % h();
  if (m < 0) m += h();
  return tau_gamma_[m][i];
}

bool DynkinQuiver::is_source(int i) const {
  for (int j : datum_.neighbors(i))
    if (xi_[i] < xi_[j]) return false;
  return true;
}

bool DynkinQuiver::is_sink(int i) const {
  for (int j : datum_.neighbors(i))
    if (xi_[i] > xi_[j]) return false;
  return true;
}

std::vector<int> DynkinQuiver::sources() const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i)
    if (is_source(i)) out.push_back(i);
  return out;
}

std::vector<int> DynkinQuiver::sinks() const {
  std::vector<int> out;
  for (int i = 0; i < n(); ++i)
    if (is_sink(i)) out.push_back(i);
  return out;
}

DynkinQuiver DynkinQuiver::reflect(int i) const {
  if (i < 0 || i >= n()) throw std::invalid_argument("reflect: index out of range");
  if (!is_source(i))
    throw std::invalid_argument("reflect: vertex " + std::to_string(i + 1) + " is not a source");
  Vec nxi = xi_;
  nxi[i] -= 2;
  return DynkinQuiver(datum_, std::move(nxi));
}

bool DynkinQuiver::in_window(const RepVertex& v) const {
  return valid_vertex(v) && v.p <= xi_[v.i] && v.p > xi_[star_[v.i]] - h();
}

PhiHatElt DynkinQuiver::phi(const RepVertex& v) const {
  if (!valid_vertex(v))
    throw std::invalid_argument("phi: parity violation at (" + std::to_string(v.i + 1) + "," +
                                std::to_string(v.p) + ")");
  // shift by h-steps into the level-0 window (Lemma on (i*, p +- h))
  int i = v.i;
  long long p = v.p;
  long long level = 0;
  while (p > xi_[i]) {
    i = star_[i];
    p -= h();
    ++level;
  }
  while (p <= xi_[star_[i]] - h()) {
    i = star_[i];
    p += h();
    --level;
  }
  long long k = (xi_[i] - p) / 2;
  assert(k >= 0 && k < h());
  return PhiHatElt{tau_gamma_[k][i], level};
}

RepVertex DynkinQuiver::phi_inverse(const PhiHatElt& x) const {
  if (x.root.basis != Basis::Root || !is_positive(x.root))
    throw std::invalid_argument("phi_inverse: not a positive root");
  auto it = root_to_vertex_.find(x.root.coords);
  if (it == root_to_vertex_.end()) throw std::invalid_argument("phi_inverse: unknown root");
  RepVertex v = it->second;
  for (long long k = 0; k < x.level; ++k) {
    v.i = star_[v.i];
    v.p += h();
  }
  for (long long k = 0; k > x.level; --k) {
    v.i = star_[v.i];
    v.p -= h();
  }
  return v;
}

HasseQuiver::Key ARQuiver::key() const {
  HasseQuiver::Key k;
  for (size_t v = 0; v < vertices.size(); ++v) k.first[labels[v].coords] = vertices[v].i;
  for (const auto& [e, m] : arrows)
    k.second[{labels[e.first].coords, labels[e.second].coords}] = m;
  return k;
}

ARQuiver ar_quiver(const DynkinQuiver& q) {
  ARQuiver out;
  out.vertices = q.gamma_q_vertices();
  std::map<RepVertex, int> index;
  for (size_t k = 0; k < out.vertices.size(); ++k) {
    index[out.vertices[k]] = static_cast<int>(k);
    out.labels.push_back(q.phi(out.vertices[k]).root);
  }
  const CartanDatum& dt = q.datum();
  for (size_t k = 0; k < out.vertices.size(); ++k) {
    RepVertex v = out.vertices[k];
    for (int j : dt.neighbors(v.i)) {
      RepVertex w{j, v.p + 1};
      auto it = index.find(w);
      if (it != index.end())
        out.arrows[{static_cast<int>(k), it->second}] = -static_cast<int>(dt.C[v.i][j]);
    }
  }
  return out;
}

std::vector<RepVertex> compatible_reading(const DynkinQuiver& q) {
  // ties (only possible at diagram distance >= 2) broken by descending i,
  // which reproduces the published B3 reading (1,2,3)^3
  std::vector<RepVertex> order = q.gamma_q_vertices();
  std::sort(order.begin(), order.end(), [](const RepVertex& a, const RepVertex& b) {
    if (a.p != b.p) return a.p > b.p;
    return a.i > b.i;
  });
  return order;
}

Word longest_word(const CartanDatum& dt, const DynkinQuiver& q) {
  (void)dt;
  Word w;
  for (const RepVertex& v : compatible_reading(q)) w.push_back(v.i);
  return w;
}

AdaptedCheck adapted_positions(const DynkinQuiver& q, const Word& seq) {
  AdaptedCheck out{true, -1, {}};
  DynkinQuiver cur = q;
  std::vector<long long> seen(q.n(), 0);
  for (size_t k = 0; k < seq.size(); ++k) {
    int i = seq[k];
    if (i < 0 || i >= q.n()) throw std::invalid_argument("sequence letter out of range");
    if (!cur.is_source(i)) {
      out.adapted = false;
      out.failing_index = static_cast<int>(k);
      return out;
    }
    out.positions.push_back({i, q.xi(i) - 2 * seen[i]});
    ++seen[i];
    cur = cur.reflect(i);
  }
  return out;
}

bool is_adapted(const DynkinQuiver& q, const Word& seq) { return adapted_positions(q, seq).adapted; }

AdditiveCheck check_additive(const DynkinQuiver& q) {
  const CartanDatum& dt = q.datum();
  for (int i = 0; i < q.n(); ++i) {
    for (int l = 0; l <= q.h(); ++l) {
      Vec lhs(q.n(), 0);
      {
        const Vec& a = q.tau_gamma(l, i).coords;
        const Vec& b = q.tau_gamma(l + 1, i).coords;
        for (int k = 0; k < q.n(); ++k) lhs[k] = a[k] + b[k];
      }
      Vec rhs(q.n(), 0);
      for (int j : dt.neighbors(i)) {
        long long mult = -dt.C[j][i];
        long long shift = l + (q.xi(j) - q.xi(i) + 1) / 2;
        const Vec& g = q.tau_gamma(shift, j).coords;
        for (int k = 0; k < q.n(); ++k) rhs[k] += mult * g[k];
      }
      if (lhs != rhs) return {false, i, l};
    }
  }
  return {true, -1, -1};
}

std::vector<Vec> all_orientation_heights(const CartanDatum& dt, long long base) {
  // orient each diagram edge both ways; build heights by BFS from vertex 0
  std::vector<std::pair<int, int>> edges;
  for (int i = 0; i < dt.n; ++i)
    for (int j = i + 1; j < dt.n; ++j)
      if (dt.dist[i][j] == 1) edges.push_back({i, j});
  assert(static_cast<int>(edges.size()) == dt.n - 1);

  std::vector<Vec> out;
  for (unsigned mask = 0; mask < (1u << edges.size()); ++mask) {
    Vec xi(dt.n, 0);
    std::vector<char> known(dt.n, 0);
    xi[0] = base;
    known[0] = 1;
    bool progress = true;
    while (progress) {
      progress = false;
      for (size_t e = 0; e < edges.size(); ++e) {
        auto [a, b] = edges[e];
        // bit set: a -> b (xi_a = xi_b + 1), else b -> a
        int hi = (mask >> e) & 1 ? a : b;
        int lo = (mask >> e) & 1 ? b : a;
        if (known[hi] && !known[lo]) { xi[lo] = xi[hi] - 1; known[lo] = 1; progress = true; }
        if (known[lo] && !known[hi]) { xi[hi] = xi[lo] + 1; known[hi] = 1; progress = true; }
      }
    }
    assert(std::all_of(known.begin(), known.end(), [](char c) { return c == 1; }));
    out.push_back(std::move(xi));
  }
  return out;
}

int class_census(const CartanDatum& dt) {
  if (dt.n > 6) throw std::invalid_argument("class_census: rank too large (max 6)");
  std::set<HasseQuiver::Key> classes;
  std::vector<std::pair<HasseQuiver::Key, Vec>> samples;
  for (const Vec& xi : all_orientation_heights(dt)) {
    DynkinQuiver q(dt, xi);
    auto k = hasse_quiver(dt, longest_word(dt, q)).key();
    classes.insert(k);
    samples.push_back({k, xi});
    // a uniform shift keeps the class
    Vec shifted = xi;
    for (auto& v : shifted) v += 2;
    DynkinQuiver q2(dt, shifted);
    auto k2 = hasse_quiver(dt, longest_word(dt, q2)).key();
    classes.insert(k2);
    samples.push_back({k2, shifted});
  }
  // equal classes force a constant height difference
  for (size_t a = 0; a < samples.size(); ++a)
    for (size_t b = a + 1; b < samples.size(); ++b) {
      if (samples[a].first != samples[b].first) continue;
      long long delta = samples[a].second[0] - samples[b].second[0];
      for (int i = 0; i < dt.n; ++i)
        if (samples[a].second[i] - samples[b].second[i] != delta)
          throw std::logic_error("class_census: equal classes with non-constant height shift");
    }
  return static_cast<int>(classes.size());
}

}  // namespace qcartan
