#pragma once

#include <string>
#include <vector>

#include "qcartan/rational.hpp"

namespace qcartan {

using Vec = std::vector<long long>;     // integer coordinate vector
using Mat = std::vector<Vec>;           // small dense integer matrix
using RatMat = std::vector<std::vector<Rat>>;

enum class Family : char { A = 'A', B = 'B', C = 'C', D = 'D', E = 'E', F = 'F', G = 'G' };

struct CartanType {
  Family family;
  int rank;

  std::string str() const { return std::string(1, static_cast<char>(family)) + std::to_string(rank); }
  friend bool operator==(const CartanType& a, const CartanType& b) {
    return a.family == b.family && a.rank == b.rank;
  }
};

// Valid ranks: A n>=1, B n>=2, C n>=2, D n>=4, E n in {6,7,8}, F n=4, G n=2.
bool valid_rank(CartanType t);

enum class Basis : char { Weight = 'w', Root = 'r' };

// Exact lattice vector, either in the fundamental-weight basis
// (coords[i] = <h_i, lambda>) or the simple-root basis.
struct LatticeVec {
  Basis basis;
  Vec coords;

  friend bool operator==(const LatticeVec& a, const LatticeVec& b) {
    return a.basis == b.basis && a.coords == b.coords;
  }
  friend bool operator!=(const LatticeVec& a, const LatticeVec& b) { return !(a == b); }
  friend bool operator<(const LatticeVec& a, const LatticeVec& b) {
    if (a.basis != b.basis) return a.basis < b.basis;
    return a.coords < b.coords;
  }
};

LatticeVec weight_vec(Vec coords);
LatticeVec root_vec(Vec coords);

// Finite Cartan datum with the labeling of the classical diagrams:
// for B_n node n is the short node, for C_n node n is the long node,
// for F_4 nodes {1,2} are long, for G_2 node 2 is long, and the E-series
// branch node is labeled 2.  All indices are 0-based in code (node k of the
// diagram is index k-1 here).
struct CartanDatum {
  CartanType type;
  int n = 0;                 // rank
  Mat C;                     // Cartan matrix, C[i][j] = <h_i, alpha_j>
  Vec d;                     // symmetrizer, d_i = (alpha_i, alpha_i)/2
  Mat Bsym;                  // diag(d) * C = ((alpha_i, alpha_j))
  Mat dist;                  // graph distance in the Dynkin diagram
  int h = 0;                 // Coxeter number
  RatMat Cinv;               // exact inverse of C

  bool adjacent(int i, int j) const { return dist[i][j] == 1; }
  std::vector<int> neighbors(int i) const {
    std::vector<int> out;
    for (int j = 0; j < n; ++j)
      if (dist[i][j] == 1) out.push_back(j);
    return out;
  }
};

// Throws std::invalid_argument (with the allowed range) on a bad rank.
CartanDatum build_datum(CartanType type);
CartanDatum build_datum(const std::string& type_str);  // "B3", "e8", ...

CartanType parse_type(const std::string& s);

// Symmetric bilinear form, exact.  Integer whenever one argument lies in the
// root lattice.
Rat bilinear(const CartanDatum& dt, const LatticeVec& x, const LatticeVec& y);
long long bilinear_int(const CartanDatum& dt, const LatticeVec& x, const LatticeVec& y);

// Change of basis. to_root_basis throws std::domain_error("not in root
// lattice") when the weight-basis vector has non-integral root coordinates.
LatticeVec to_root_basis(const CartanDatum& dt, const LatticeVec& v);
LatticeVec to_weight_basis(const CartanDatum& dt, const LatticeVec& v);

// s_i lambda = lambda - <h_i, lambda> alpha_i, applied in the vector's own basis.
LatticeVec simple_reflection(const CartanDatum& dt, int i, const LatticeVec& v);

}  // namespace qcartan
