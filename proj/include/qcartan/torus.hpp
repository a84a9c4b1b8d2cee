#pragma once

#include <map>
#include <memory>
#include <vector>

#include "qcartan/tcartan.hpp"

namespace qcartan {

// Exponent form of the quantum torus: X_{i,p} X_{j,s} = q^N X_{j,s} X_{i,p}
// with N(i,p;j,s) = teta_{i,j}(p-s-1) - teta_{i,j}(p-s+1).
class NForm {
public:
  explicit NForm(TildeBTable table) : table_(std::make_shared<TildeBTable>(std::move(table))) {}

  const TildeBTable& table() const { return *table_; }
  const CartanDatum& datum() const { return table_->datum(); }

  long long pairing(const RepVertex& a, const RepVertex& b) const {
    if (a.i < 0 || a.i >= datum().n || b.i < 0 || b.i >= datum().n)
      throw std::invalid_argument("N: index out of range");
    return table_->teta(a.i, b.i, a.p - b.p - 1) - table_->teta(a.i, b.i, a.p - b.p + 1);
  }

private:
  std::shared_ptr<const TildeBTable> table_;
};

// N computed through the AR-quiver labels: (-1)^{k+l+d(p>=s)} (alpha,beta);
// agrees with NForm::pairing for every quiver.
long long n_via_roots(const DynkinQuiver& q, const RepVertex& a, const RepVertex& b);

// Normally ordered monomial q^{qpow2/2} prod X_{i,p}^{e}, exponents keyed by
// (p,i) ascending; no zero exponents stored.
struct TorusMonomial {
  long long qpow2 = 0;                // doubled power of q (exact half-integers)
  std::map<RepVertex, long long> exps;

  friend bool operator==(const TorusMonomial& a, const TorusMonomial& b) {
    return a.qpow2 == b.qpow2 && a.exps == b.exps;
  }
  friend bool operator<(const TorusMonomial& a, const TorusMonomial& b) {
    if (a.exps != b.exps) return a.exps < b.exps;
    return a.qpow2 < b.qpow2;
  }
};

long long exponent_of(const TorusMonomial& m, const RepVertex& v);

// Finite Z-linear combination of monomials, kept canonical (terms merged on
// equal (qpow, exps), zero terms dropped).
class TorusElement {
public:
  TorusElement() = default;
  explicit TorusElement(NForm nf) : nf_(std::make_shared<NForm>(std::move(nf))) {}

  static TorusElement generator(const NForm& nf, const RepVertex& v, long long exp = 1,
                                long long qpow2 = 0);
  static TorusElement q_power(const NForm& nf, long long qpow2);
  static TorusElement from_monomial(const NForm& nf, TorusMonomial m, long long coeff = 1);

  const NForm& nform() const;
  const std::vector<std::pair<TorusMonomial, long long>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  TorusElement operator+(const TorusElement& o) const;
  TorusElement operator-(const TorusElement& o) const;
  TorusElement operator*(const TorusElement& o) const;
  friend bool operator==(const TorusElement& a, const TorusElement& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const TorusElement& a, const TorusElement& b) { return !(a == b); }

  TorusElement inverse_monomial() const;  // defined for a single +-q^c X^e term

  std::string str() const;

private:
  void add_term(TorusMonomial m, long long coeff);
  std::shared_ptr<const NForm> nf_;
  std::vector<std::pair<TorusMonomial, long long>> terms_;  // sorted by monomial
};

// N extended bilinearly over exponent maps.
long long n_monomials(const NForm& nf, const TorusMonomial& a, const TorusMonomial& b);

// bar: q^{1/2} -> q^{-1/2}, X_{i,p} -> q^{d_i} X_{i,p}, anti-multiplicative.
TorusMonomial bar_monomial(const NForm& nf, const TorusMonomial& m);
TorusElement bar(const TorusElement& e);
// the unique q^r m fixed by bar
TorusMonomial bar_normalize(const NForm& nf, const TorusMonomial& m);
bool is_bar_invariant(const NForm& nf, const TorusMonomial& m);

// m^{(i)}[a,b]: bar-invariant product of X_{i,p} over a <= p <= b with the
// parity of the quiver.
TorusMonomial interval_monomial(const DynkinQuiver& q, const NForm& nf, int i, long long a,
                                long long b);

// B~_{i,p} = q^{n_{i,p}} X_{i,p-1} X_{i,p+1} prod_{j ~ i} X_{j,p}^{c_{j,i}},
// bar-invariant; requires (i,p+1) in the repetition quiver.
TorusMonomial b_monomial(const DynkinQuiver& q, const NForm& nf, int i, long long p);

// Q-weight: sum u_{i,p}(m) (-1)^k beta over phi(i,p) = (beta,k).
LatticeVec wtQ(const DynkinQuiver& q, const TorusMonomial& m);

// X_{i,l} (1 + q^{-d_i} B~_{i,l+1}^{-1}) in normal form.
TorusElement kq_generator(const DynkinQuiver& q, const NForm& nf, int i, long long l);

// Prop NnKR: N(m^{(i)}[p,p'], m^{(j)}[s,s']) equals the stated pairing of
// tau-shifted fundamental weights.  Preconditions are checked.
bool check_nnkr(const DynkinQuiver& q, const NForm& nf, int i, long long p, long long p2, int j,
                long long s, long long s2);

// Prop YA com: beta(i,p;j,s) and alpha(i,t;j,u) case formulas over a window.
bool check_ya(const DynkinQuiver& q, const NForm& nf, long long lo, long long hi);

}  // namespace qcartan
