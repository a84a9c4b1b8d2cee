#include "qcartan/weyl.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <set>
#include <stdexcept>

namespace qcartan {

namespace {

Mat identity_mat(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  int n = static_cast<int>(a.size());
  Mat c(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long long aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

Vec mat_apply(const Mat& m, const Vec& v) {
  int n = static_cast<int>(m.size());
  Vec out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += m[i][j] * v[j];
  return out;
}

}  // namespace

WeylElement WeylElement::identity(const CartanDatum& dt) {
  return WeylElement(identity_mat(dt.n), identity_mat(dt.n));
}

WeylElement WeylElement::reflection(const CartanDatum& dt, int i) {
  if (i < 0 || i >= dt.n) throw std::invalid_argument("reflection: index out of range");
  int n = dt.n;
  // weight coords: lambda_j -> lambda_j - lambda_i c_{j,i}
  Mat w = identity_mat(n);
  for (int j = 0; j < n; ++j) w[j][i] -= dt.C[j][i];
  // root coords: c -> c - e_i (row_i(C) . c)
  Mat r = identity_mat(n);
  for (int k = 0; k < n; ++k) r[i][k] -= dt.C[i][k];
  return WeylElement(std::move(w), std::move(r));
}

WeylElement WeylElement::from_word(const CartanDatum& dt, const Word& w) {
  WeylElement e = identity(dt);
  for (int i : w) e = e * reflection(dt, i);
  return e;
}

WeylElement WeylElement::operator*(const WeylElement& o) const {
  return WeylElement(mat_mul(wmat_, o.wmat_), mat_mul(rmat_, o.rmat_));
}

WeylElement WeylElement::inverse() const {
  // the action matrices are unimodular, so exact elimination over Rat lands
  // back in integers
  int n = static_cast<int>(wmat_.size());
  auto invert_unimodular = [n](const Mat& m) {
    std::vector<std::vector<Rat>> a(n, std::vector<Rat>(2 * n));
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
      a[i][n + i] = Rat(1);
    }
    for (int col = 0; col < n; ++col) {
      int piv = col;
      while (piv < n && a[piv][col] == Rat(0)) ++piv;
      assert(piv < n);
      std::swap(a[piv], a[col]);
      Rat lead = a[col][col];
      for (int j = 0; j < 2 * n; ++j) a[col][j] /= lead;
      for (int i = 0; i < n; ++i) {
        if (i == col || a[i][col] == Rat(0)) continue;
        Rat f = a[i][col];
        for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
      }
    }
    Mat inv(n, Vec(n));
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j].as_integer();
    return inv;
  };
  return WeylElement(invert_unimodular(wmat_), invert_unimodular(rmat_));
}

WeylElement WeylElement::pow(long long k) const {
  int n = static_cast<int>(wmat_.size());
  WeylElement base = k >= 0 ? *this : inverse();
  long long e = k >= 0 ? k : -k;
  WeylElement acc(identity_mat(n), identity_mat(n));
  while (e > 0) {
    if (e & 1) acc = acc * base;
    base = base * base;
    e >>= 1;
  }
  return acc;
}

LatticeVec WeylElement::apply(const LatticeVec& v) const {
  const Mat& m = v.basis == Basis::Weight ? wmat_ : rmat_;
  if (v.coords.size() != m.size()) throw std::invalid_argument("dimension mismatch");
  return LatticeVec{v.basis, mat_apply(m, v.coords)};
}

bool is_positive(const LatticeVec& root) {
  assert(root.basis == Basis::Root);
  bool nonzero = false;
  for (long long c : root.coords) {
    if (c < 0) return false;
    if (c > 0) nonzero = true;
  }
  return nonzero;
}

std::vector<LatticeVec> positive_roots(const CartanDatum& dt) {
  std::set<Vec> seen;
  std::vector<Vec> queue;
  for (int i = 0; i < dt.n; ++i) {
    Vec e(dt.n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  // closure of the simple roots under simple reflections, keeping positives
  for (size_t head = 0; head < queue.size(); ++head) {
    Vec cur = queue[head];
    for (int i = 0; i < dt.n; ++i) {
      long long pair = 0;
      for (int k = 0; k < dt.n; ++k) pair += dt.C[i][k] * cur[k];
      Vec img = cur;
      img[i] -= pair;
      if (std::all_of(img.begin(), img.end(), [](long long c) { return c >= 0; }) &&
          seen.insert(img).second)
        queue.push_back(img);
    }
  }
  std::vector<LatticeVec> out;
  out.reserve(seen.size());
  for (const Vec& v : seen) out.push_back(root_vec(v));
  std::sort(out.begin(), out.end(), [](const LatticeVec& a, const LatticeVec& b) {
    long long ha = std::accumulate(a.coords.begin(), a.coords.end(), 0LL);
    long long hb = std::accumulate(b.coords.begin(), b.coords.end(), 0LL);
    if (ha != hb) return ha < hb;
    return a.coords < b.coords;
  });
  return out;
}

BetaSequence beta_sequence(const CartanDatum& dt, const Word& w) {
  BetaSequence out;
  out.reduced = true;
  WeylElement prefix = WeylElement::identity(dt);
  std::set<Vec> distinct;
  for (int letter : w) {
    if (letter < 0 || letter >= dt.n) throw std::invalid_argument("word letter out of range");
    Vec alpha(dt.n, 0);
    alpha[letter] = 1;
    LatticeVec beta = prefix.apply(root_vec(alpha));
    if (!is_positive(beta) || !distinct.insert(beta.coords).second) out.reduced = false;
    out.beta.push_back(std::move(beta));
    prefix = prefix * WeylElement::reflection(dt, letter);
  }
  return out;
}

WeylElement longest_element(const CartanDatum& dt) {
  // drive rho antidominant; the reflections used form a reduced word of w_0
  Vec rho(dt.n, 1);
  WeylElement w = WeylElement::identity(dt);
  bool moved = true;
  while (moved) {
    moved = false;
    for (int i = 0; i < dt.n; ++i) {
      if (rho[i] > 0) {
        long long ri = rho[i];
        for (int j = 0; j < dt.n; ++j) rho[j] -= ri * dt.C[j][i];
        w = WeylElement::reflection(dt, i) * w;
        moved = true;
      }
    }
  }
  return w;
}

std::vector<int> star_involution(const CartanDatum& dt) {
  WeylElement w0 = longest_element(dt);
  std::vector<int> star(dt.n, -1);
  for (int i = 0; i < dt.n; ++i) {
    Vec alpha(dt.n, 0);
    alpha[i] = 1;
    Vec img = w0.apply(root_vec(alpha)).coords;
    int j = -1;
    for (int k = 0; k < dt.n; ++k) {
      if (img[k] == -1) {
        assert(j < 0);
        j = k;
      } else {
        assert(img[k] == 0);
      }
    }
    assert(j >= 0);
    star[i] = j;
  }
  for (int i = 0; i < dt.n; ++i) assert(star[star[i]] == i);
  return star;
}

int HasseQuiver::index_of(const LatticeVec& root) const {
  for (size_t k = 0; k < roots.size(); ++k)
    if (roots[k] == root) return static_cast<int>(k);
  throw std::invalid_argument("unknown root");
}

HasseQuiver::Key HasseQuiver::key() const {
  Key k;
  for (size_t v = 0; v < roots.size(); ++v) k.first[roots[v].coords] = residue[v];
  for (const auto& [e, m] : arrows)
    k.second[{roots[e.first].coords, roots[e.second].coords}] = m;
  return k;
}

HasseQuiver hasse_quiver(const CartanDatum& dt, const Word& w0) {
  auto bs = beta_sequence(dt, w0);
  size_t ell = positive_roots(dt).size();
  if (!bs.reduced || w0.size() != ell)
    throw std::invalid_argument("hasse_quiver: expected a reduced word of w_0 (length " +
                                std::to_string(ell) + ")");
  HasseQuiver q;
  q.roots = bs.beta;
  q.residue.assign(w0.begin(), w0.end());
  int l = static_cast<int>(ell);
  for (int k = 0; k < l; ++k) {
    for (int j = k - 1; j >= 0; --j) {
      if (w0[j] == w0[k]) break;  // an intermediate i_k blocks everything before it
      if (dt.dist[w0[k]][w0[j]] != 1) continue;
      bool blocked = false;
      for (int m = j + 1; m < k; ++m)
        if (w0[m] == w0[j]) { blocked = true; break; }
      if (!blocked) q.arrows[{k, j}] = -static_cast<int>(dt.C[w0[k]][w0[j]]);
    }
  }
  return q;
}

bool same_commutation_class(const CartanDatum& dt, const Word& a, const Word& b) {
  return hasse_quiver(dt, a).key() == hasse_quiver(dt, b).key();
}

bool convex_leq(const HasseQuiver& h, const LatticeVec& alpha, const LatticeVec& beta) {
  int from = h.index_of(beta), to = h.index_of(alpha);
  if (from == to) return true;
  std::vector<char> visited(h.roots.size(), 0);
  std::vector<int> stack{from};
  visited[from] = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (const auto& [e, m] : h.arrows) {
      (void)m;
      if (e.first != v || visited[e.second]) continue;
      if (e.second == to) return true;
      visited[e.second] = 1;
      stack.push_back(e.second);
    }
  }
  return false;
}

namespace {
PhiHatElt hat_reflect(const CartanDatum& dt, int i, const PhiHatElt& x, bool inverse) {
  PhiHatElt out{simple_reflection(dt, i, x.root), x.level};
  if (!is_positive(out.root)) {
    for (auto& c : out.root.coords) c = -c;
    out.level += inverse ? 1 : -1;
  }
  return out;
}
}  // namespace

PhiHatElt hat_action(const CartanDatum& dt, const Word& w, const PhiHatElt& x) {
  PhiHatElt cur = x;
  for (auto it = w.rbegin(); it != w.rend(); ++it) cur = hat_reflect(dt, *it, cur, false);
  return cur;
}

PhiHatElt hat_action_inverse(const CartanDatum& dt, const Word& w, const PhiHatElt& x) {
  PhiHatElt cur = x;
  for (int i : w) cur = hat_reflect(dt, i, cur, true);
  return cur;
}

}  // namespace qcartan
