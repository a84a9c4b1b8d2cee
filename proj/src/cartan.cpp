#include "qcartan/cartan.hpp"

#include <algorithm>
#include <cassert>
#include <cctype>
#include <queue>
#include <stdexcept>

namespace qcartan {

bool valid_rank(CartanType t) {
  switch (t.family) {
    case Family::A: return t.rank >= 1;
    case Family::B: return t.rank >= 2;
    case Family::C: return t.rank >= 2;
    case Family::D: return t.rank >= 4;
    case Family::E: return t.rank >= 6 && t.rank <= 8;
    case Family::F: return t.rank == 4;
    case Family::G: return t.rank == 2;
  }
  return false;
}

LatticeVec weight_vec(Vec coords) { return LatticeVec{Basis::Weight, std::move(coords)}; }
LatticeVec root_vec(Vec coords) { return LatticeVec{Basis::Root, std::move(coords)}; }

CartanType parse_type(const std::string& s) {
  if (s.size() < 2) throw std::invalid_argument("Cartan type: expected e.g. \"A5\", got \"" + s + "\"");
  char f = static_cast<char>(std::toupper(static_cast<unsigned char>(s[0])));
  if (f < 'A' || f > 'G')
    throw std::invalid_argument("Cartan type: unknown family in \"" + s + "\"");
  int rank = 0;
  for (size_t k = 1; k < s.size(); ++k) {
    if (!std::isdigit(static_cast<unsigned char>(s[k])))
      throw std::invalid_argument("Cartan type: bad rank in \"" + s + "\"");
    rank = rank * 10 + (s[k] - '0');
  }
  return CartanType{static_cast<Family>(f), rank};
}

namespace {

// Edges of the Dynkin diagram, 0-based, following the labeling fixed in the
// docs: straight chains for ABCFG, a fork at n-3 for D, branch node 2 (index
// 1) hanging off node 4 (index 3 for E7/E8, index 3 of the chain for E6).
std::vector<std::pair<int, int>> diagram_edges(CartanType t) {
  std::vector<std::pair<int, int>> e;
  int n = t.rank;
  switch (t.family) {
    case Family::A:
    case Family::B:
    case Family::C:
    case Family::F:
    case Family::G:
      for (int i = 0; i + 1 < n; ++i) e.push_back({i, i + 1});
      break;
    case Family::D:
      for (int i = 0; i + 2 < n; ++i) e.push_back({i, i + 1});
      e.push_back({n - 3, n - 1});
      break;
    case Family::E:
      // chain 1-3-4-5-...-n with 2 attached to 4
      e.push_back({0, 2});
      for (int i = 2; i + 1 < n; ++i) e.push_back({i, i + 1});
      e.push_back({1, 3});
      break;
  }
  return e;
}

Vec symmetrizer(CartanType t) {
  int n = t.rank;
  Vec d(n, 1);
  switch (t.family) {
    case Family::B:
      for (int i = 0; i + 1 < n; ++i) d[i] = 2;  // node n short
      break;
    case Family::C:
      d[n - 1] = 2;  // node n long
      break;
    case Family::F:
      d[0] = d[1] = 2;  // nodes 1,2 long
      break;
    case Family::G:
      d[1] = 3;  // node 2 long
      break;
    default:
      break;
  }
  return d;
}

int coxeter_number(CartanType t) {
  switch (t.family) {
    case Family::A: return t.rank + 1;
    case Family::B:
    case Family::C: return 2 * t.rank;
    case Family::D: return 2 * t.rank - 2;
    case Family::E: return t.rank == 6 ? 12 : (t.rank == 7 ? 18 : 30);
    case Family::F: return 12;
    case Family::G: return 6;
  }
  return 0;
}

RatMat invert(const Mat& m) {
  int n = static_cast<int>(m.size());
  RatMat a(n, std::vector<Rat>(2 * n));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) a[i][j] = Rat(m[i][j]);
    a[i][n + i] = Rat(1);
  }
  for (int col = 0; col < n; ++col) {
    int piv = col;
    while (piv < n && a[piv][col] == Rat(0)) ++piv;
    assert(piv < n && "Cartan matrix is invertible");
    std::swap(a[piv], a[col]);
    Rat lead = a[col][col];
    for (int j = 0; j < 2 * n; ++j) a[col][j] /= lead;
    for (int i = 0; i < n; ++i) {
      if (i == col || a[i][col] == Rat(0)) continue;
      Rat f = a[i][col];
      for (int j = 0; j < 2 * n; ++j) a[i][j] -= f * a[col][j];
    }
  }
  RatMat inv(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) inv[i][j] = a[i][n + j];
  return inv;
}

}  // namespace

CartanDatum build_datum(CartanType type) {
  if (!valid_rank(type)) {
    std::string allowed;
    switch (type.family) {
      case Family::A: allowed = "n >= 1"; break;
      case Family::B: allowed = "n >= 2"; break;
      case Family::C: allowed = "n >= 2"; break;
      case Family::D: allowed = "n >= 4"; break;
      case Family::E: allowed = "n in {6,7,8}"; break;
      case Family::F: allowed = "n = 4"; break;
      case Family::G: allowed = "n = 2"; break;
    }
    throw std::invalid_argument("invalid rank for type " + type.str() + " (allowed: " + allowed + ")");
  }

  CartanDatum dt;
  dt.type = type;
  dt.n = type.rank;
  int n = dt.n;
  dt.d = symmetrizer(type);

  // graph distances by BFS over the diagram edges
  auto edges = diagram_edges(type);
  std::vector<std::vector<int>> adj(n);
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  dt.dist.assign(n, Vec(n, -1));
  for (int s = 0; s < n; ++s) {
    std::queue<int> q;
    dt.dist[s][s] = 0;
    q.push(s);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : adj[v])
        if (dt.dist[s][w] < 0) {
          dt.dist[s][w] = dt.dist[s][v] + 1;
          q.push(w);
        }
    }
  }

  // <h_i, alpha_j> = 2 if i=j, -max(d_j/d_i, 1) on edges, 0 otherwise
  dt.C.assign(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j)
        dt.C[i][j] = 2;
      else if (dt.dist[i][j] == 1)
        dt.C[i][j] = dt.d[j] > dt.d[i] ? -(dt.d[j] / dt.d[i]) : -1;
    }

  dt.Bsym.assign(n, Vec(n, 0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) dt.Bsym[i][j] = dt.d[i] * dt.C[i][j];
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) assert(dt.Bsym[i][j] == dt.Bsym[j][i]);

  dt.h = coxeter_number(type);
  dt.Cinv = invert(dt.C);
  return dt;
}

CartanDatum build_datum(const std::string& type_str) { return build_datum(parse_type(type_str)); }

namespace {
void check_dim(const CartanDatum& dt, const LatticeVec& v) {
  if (static_cast<int>(v.coords.size()) != dt.n)
    throw std::invalid_argument("dimension mismatch: vector of size " +
                                std::to_string(v.coords.size()) + " over rank " +
                                std::to_string(dt.n));
}
}  // namespace

Rat bilinear(const CartanDatum& dt, const LatticeVec& x, const LatticeVec& y) {
  check_dim(dt, x);
  check_dim(dt, y);
  int n = dt.n;
  if (x.basis == Basis::Root && y.basis == Basis::Root) {
    long long s = 0;
    for (int i = 0; i < n; ++i) {
      if (x.coords[i] == 0) continue;
      for (int j = 0; j < n; ++j) s += x.coords[i] * dt.Bsym[i][j] * y.coords[j];
    }
    return Rat(s);
  }
  if (x.basis == Basis::Root) {
    // (sum c_i alpha_i, mu) = sum c_i d_i <h_i, mu>
    long long s = 0;
    for (int i = 0; i < n; ++i) s += x.coords[i] * dt.d[i] * y.coords[i];
    return Rat(s);
  }
  if (y.basis == Basis::Root) return bilinear(dt, y, x);
  // both weight-basis: (lambda, mu) = sum_j r_j d_j lambda_j with r = Cinv mu
  Rat s(0);
  for (int j = 0; j < n; ++j) {
    Rat rj(0);
    for (int k = 0; k < n; ++k) rj += dt.Cinv[j][k] * Rat(y.coords[k]);
    s += rj * Rat(dt.d[j] * x.coords[j]);
  }
  return s;
}

long long bilinear_int(const CartanDatum& dt, const LatticeVec& x, const LatticeVec& y) {
  return bilinear(dt, x, y).as_integer();
}

LatticeVec to_root_basis(const CartanDatum& dt, const LatticeVec& v) {
  check_dim(dt, v);
  if (v.basis == Basis::Root) return v;
  int n = dt.n;
  Vec out(n);
  for (int i = 0; i < n; ++i) {
    Rat ci(0);
    for (int j = 0; j < n; ++j) ci += dt.Cinv[i][j] * Rat(v.coords[j]);
    if (!ci.is_integer()) throw std::domain_error("not in root lattice");
    out[i] = ci.as_integer();
  }
  return root_vec(std::move(out));
}

LatticeVec to_weight_basis(const CartanDatum& dt, const LatticeVec& v) {
  check_dim(dt, v);
  if (v.basis == Basis::Weight) return v;
  int n = dt.n;
  Vec out(n, 0);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k) out[j] += dt.C[j][k] * v.coords[k];
  return weight_vec(std::move(out));
}

LatticeVec simple_reflection(const CartanDatum& dt, int i, const LatticeVec& v) {
  check_dim(dt, v);
  if (i < 0 || i >= dt.n) throw std::invalid_argument("simple_reflection: index out of range");
  LatticeVec out = v;
  if (v.basis == Basis::Weight) {
    // lambda_j -> lambda_j - lambda_i c_{j,i}
    long long li = v.coords[i];
    for (int j = 0; j < dt.n; ++j) out.coords[j] -= li * dt.C[j][i];
  } else {
    // c -> c - <h_i, beta> e_i
    long long pair = 0;
    for (int k = 0; k < dt.n; ++k) pair += dt.C[i][k] * v.coords[k];
    out.coords[i] -= pair;
  }
  return out;
}

}  // namespace qcartan
