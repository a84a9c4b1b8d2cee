#pragma once

#include <vector>

#include "qcartan/torus.hpp"

namespace qcartan {

// Successor/predecessor bookkeeping for an index sequence w~ = (i_1..i_r),
// 0-based positions in code.  k+ = min{j > k : i_j = i_k} or r (one past the
// end); J_f = {k : k+ = r}, J_e = J \ J_f.
struct SequenceIndex {
  Word seq;
  std::vector<int> kplus;   // value r means "none"
  std::vector<int> kminus;  // value -1 means "none"
  std::vector<int> Je;      // exchangeable positions, increasing
  std::vector<int> Jf;      // frozen positions, increasing

  explicit SequenceIndex(Word w);
  int r() const { return static_cast<int>(seq.size()); }
};

struct PairMatrices {
  SequenceIndex idx;
  Mat lambda;        // r x r, skew-symmetric
  Mat b;             // r x |J_e|
  Vec d_col;         // d_{i_t} for t in J_e

  PairMatrices(SequenceIndex i, Mat l, Mat bm, Vec dc)
      : idx(std::move(i)), lambda(std::move(l)), b(std::move(bm)), d_col(std::move(dc)) {}
};

// The J x J_e exchange matrix of the sequence (five-case rule).
Mat exchange_matrix(const CartanDatum& dt, const SequenceIndex& idx);

// Lambda_{s,t} = (varpi_{i_s} - w_{<=s} varpi_{i_s}, varpi_{i_t} + w_{<=t} varpi_{i_t})
// for s < t, skew-extended; always integral.
Mat lambda_matrix(const CartanDatum& dt, const SequenceIndex& idx);

PairMatrices build_pair(const CartanDatum& dt, const Word& seq);

// true iff (Lambda B)_{s,t} = -2 d_{i_t} delta(s=t) on J x J_e.
bool check_compatible(const PairMatrices& pm);
// the actual diagonal of Lambda B at the exchangeable columns
Vec product_diagonal(const PairMatrices& pm);

// Gamma-coordinate forms of an adapted sequence: B' by the (i,p) case rule,
// Lambda' = N(m^{(i)}[p,xi_i], m^{(j)}[s,xi_j]); both must equal the
// sequence-indexed matrices under k <-> (i_k, p_k).
struct GammaForms {
  std::vector<RepVertex> vertices;  // Gamma^[w~]_0 in sequence order
  Mat lambda;
  Mat b;  // columns restricted to the exchangeable vertices, sequence order
};
GammaForms gamma_forms(const DynkinQuiver& q, const NForm& nf, const Word& seq);

// Lambda^[Q] over Phi^+ with lambda_alpha = tau^{(xi_i - p)/2 + 1} varpi_i.
struct LambdaQ {
  std::vector<LatticeVec> roots;     // Phi^+ in compatible-reading order
  std::vector<int> residues;
  std::vector<LatticeVec> lambda_wt; // lambda_alpha, weight basis
  Mat lambda;                        // Lambda_{alpha beta}
};
LambdaQ lambda_Q(const DynkinQuiver& q);

// Theorem "tori iso": N(m^{(i)}[p,xi_i], m^{(j)}[s,xi_j]) = Lambda^[Q]_{alpha beta}.
bool check_torus_iso(const DynkinQuiver& q, const NForm& nf);

// Hypothesis of the general compatibility conjecture: every contiguous
// subword of length <= l(w_0) is reduced.
bool cond_din(const CartanDatum& dt, const Word& seq);

}  // namespace qcartan
