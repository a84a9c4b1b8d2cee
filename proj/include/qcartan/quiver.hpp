#pragma once

#include <map>
#include <vector>

#include "qcartan/weyl.hpp"

namespace qcartan {

// Vertex (i,p) of the repetition quiver; the parity p = xi_i (mod 2) is a
// class invariant of the ambient quiver, checked at use sites.
struct RepVertex {
  int i;
  long long p;

  friend bool operator==(const RepVertex& a, const RepVertex& b) { return a.i == b.i && a.p == b.p; }
  friend bool operator!=(const RepVertex& a, const RepVertex& b) { return !(a == b); }
  friend bool operator<(const RepVertex& a, const RepVertex& b) {
    if (a.p != b.p) return a.p < b.p;
    return a.i < b.i;
  }
};

// A Dynkin quiver (diagram + height function).  Immutable; the Coxeter
// element, gamma-roots, star involution and the first h powers of tau applied
// to each gamma are cached at construction so that phi and eta evaluations
// are table lookups.
class DynkinQuiver {
public:
  DynkinQuiver(CartanDatum datum, Vec xi);  // validates |xi_i - xi_j| = 1 on edges

  const CartanDatum& datum() const { return datum_; }
  const Vec& xi() const { return xi_; }
  long long xi(int i) const { return xi_[i]; }
  int n() const { return datum_.n; }
  int h() const { return datum_.h; }
  int star(int i) const { return star_[i]; }

  const Word& coxeter_word() const { return tau_word_; }
  const WeylElement& tau() const { return tau_; }
  const WeylElement& tau_power(long long k) const;  // k taken mod h

  // gamma_i = (1 - tau) varpi_i, a positive root (root basis)
  const LatticeVec& gamma(int i) const { return gamma_[i]; }
  // tau^k(gamma_i), k taken mod h
  const LatticeVec& tau_gamma(long long k, int i) const;

  bool is_source(int i) const;
  bool is_sink(int i) const;
  std::vector<int> sources() const;
  std::vector<int> sinks() const;

  // height function of s_i Q; throws std::invalid_argument if i is not a source
  DynkinQuiver reflect(int i) const;

  bool valid_vertex(const RepVertex& v) const {
    return v.i >= 0 && v.i < n() && ((v.p - xi_[v.i]) % 2 == 0);
  }

  // the bijection RepQuiver_0 -> Phi^+ x Z and its inverse
  PhiHatElt phi(const RepVertex& v) const;
  RepVertex phi_inverse(const PhiHatElt& x) const;

  // vertices of Gamma_Q: xi_{i*} - h < p <= xi_i, sorted by (i,p)
  const std::vector<RepVertex>& gamma_q_vertices() const { return window_; }
  bool in_window(const RepVertex& v) const;

private:
  CartanDatum datum_;
  Vec xi_;
  std::vector<int> star_;
  Word tau_word_;
  WeylElement tau_;
  std::vector<WeylElement> tau_pow_;             // tau^0 .. tau^{h-1}
  std::vector<LatticeVec> gamma_;                // gamma_i, root basis
  std::vector<std::vector<LatticeVec>> tau_gamma_;  // [k][i] = tau^k(gamma_i)
  std::vector<RepVertex> window_;
  std::map<Vec, RepVertex> root_to_vertex_;      // level-0 lookup
};

// Combinatorial AR-quiver Gamma_Q: window vertices with their root labels and
// the repetition-quiver arrows between them.
struct ARQuiver {
  std::vector<RepVertex> vertices;
  std::vector<LatticeVec> labels;                     // level-0 root of vertex k
  std::map<std::pair<int, int>, int> arrows;          // (from,to) vertex index -> multiplicity

  HasseQuiver::Key key() const;
};

ARQuiver ar_quiver(const DynkinQuiver& q);

// A Q-adapted reduced word of w_0 read off Gamma_Q (descending p, ties by
// ascending i); its beta-sequence enumerates Phi^+.
std::vector<RepVertex> compatible_reading(const DynkinQuiver& q);
Word longest_word(const CartanDatum& dt, const DynkinQuiver& q);

struct AdaptedCheck {
  bool adapted;
  int failing_index;                  // -1 when adapted
  std::vector<RepVertex> positions;   // p_k = xi_{i_k} - 2 #{s<k : i_s = i_k}
};
AdaptedCheck adapted_positions(const DynkinQuiver& q, const Word& seq);
bool is_adapted(const DynkinQuiver& q, const Word& seq);

// tau^l(gamma_i) + tau^{l+1}(gamma_i) = sum_{j: d(i,j)=1} (-c_{j,i}) tau^{l+(xi_j-xi_i+1)/2}(gamma_j)
// for all i and 0 <= l <= h; returns the first failing (i,l) if any.
struct AdditiveCheck {
  bool holds;
  int i;
  int l;
};
AdditiveCheck check_additive(const DynkinQuiver& q);

// Number of distinct commutation classes [Q] over all 2^(n-1) orientations;
// verifies along the way that equal classes force a constant height shift.
// Throws for rank > 6.
int class_census(const CartanDatum& dt);

// All 2^(n-1) orientations of the diagram as height functions with xi of
// vertex 0 fixed to the given base value.
std::vector<Vec> all_orientation_heights(const CartanDatum& dt, long long base = 0);

}  // namespace qcartan
