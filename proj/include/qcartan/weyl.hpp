#pragma once

#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "qcartan/cartan.hpp"

namespace qcartan {

// A word in the generators s_i, stored as 0-based indices.
using Word = std::vector<int>;

// Weyl group element as its integer action on weight-basis coordinates,
// together with the induced (also integral) action on root coordinates.
class WeylElement {
public:
  static WeylElement identity(const CartanDatum& dt);
  static WeylElement reflection(const CartanDatum& dt, int i);
  static WeylElement from_word(const CartanDatum& dt, const Word& w);

  // group product: (a*b)(v) = a(b(v))
  WeylElement operator*(const WeylElement& o) const;
  WeylElement inverse() const;
  WeylElement pow(long long k) const;

  LatticeVec apply(const LatticeVec& v) const;

  const Mat& weight_action() const { return wmat_; }
  const Mat& root_action() const { return rmat_; }

  friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.wmat_ == b.wmat_; }
  friend bool operator!=(const WeylElement& a, const WeylElement& b) { return !(a == b); }

private:
  WeylElement(Mat w, Mat r) : wmat_(std::move(w)), rmat_(std::move(r)) {}
  Mat wmat_;  // weight-basis action
  Mat rmat_;  // root-basis action
};

// The full set Phi^+ as root-basis vectors, sorted by (height, coords).
std::vector<LatticeVec> positive_roots(const CartanDatum& dt);

struct BetaSequence {
  std::vector<LatticeVec> beta;  // beta_k = s_{i_1}...s_{i_{k-1}}(alpha_{i_k}), root basis
  bool reduced;                  // all beta_k positive and pairwise distinct
};
BetaSequence beta_sequence(const CartanDatum& dt, const Word& w);

bool is_positive(const LatticeVec& root);

// i -> i* with w_0(alpha_i) = -alpha_{i*}
std::vector<int> star_involution(const CartanDatum& dt);
WeylElement longest_element(const CartanDatum& dt);

// Hasse quiver of the convex partial order attached to a commutation class of
// w_0: vertices are the positive roots with residues, arrows carry
// multiplicities -<h_{i_k}, alpha_{i_l}>.
struct HasseQuiver {
  std::vector<LatticeVec> roots;            // vertex k = beta_k (root basis)
  std::vector<int> residue;                 // residue of vertex k
  std::map<std::pair<int, int>, int> arrows;  // (from,to) vertex indices -> multiplicity

  int index_of(const LatticeVec& root) const;  // throws on unknown root

  // label-level canonical form: per-root residues plus root-labeled arrows
  using Key = std::pair<std::map<Vec, int>, std::map<std::pair<Vec, Vec>, int>>;
  Key key() const;
};

// Requires a reduced word of w_0 (throws std::invalid_argument otherwise).
HasseQuiver hasse_quiver(const CartanDatum& dt, const Word& w0);

// Labeled-quiver equality of the two Hasse quivers.
bool same_commutation_class(const CartanDatum& dt, const Word& a, const Word& b);

// alpha <= beta in the convex order iff a directed path runs beta -> alpha.
bool convex_leq(const HasseQuiver& h, const LatticeVec& alpha, const LatticeVec& beta);

// Element of Phi^+ x Z.
struct PhiHatElt {
  LatticeVec root;  // positive root, root basis
  long long level;

  friend bool operator==(const PhiHatElt& a, const PhiHatElt& b) {
    return a.level == b.level && a.root == b.root;
  }
  friend bool operator!=(const PhiHatElt& a, const PhiHatElt& b) { return !(a == b); }
};

// hat(w)(beta,k) = (w beta, k) if w beta > 0, else (-w beta, k-1), applied
// letter by letter; for a non-reduced word the composite depends on the
// letters, not just on the group element.
PhiHatElt hat_action(const CartanDatum& dt, const Word& w, const PhiHatElt& x);
PhiHatElt hat_action_inverse(const CartanDatum& dt, const Word& w, const PhiHatElt& x);

}  // namespace qcartan
