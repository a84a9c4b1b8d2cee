#pragma once

#include <map>
#include <string>
#include <utility>

#include "qcartan/rational.hpp"

namespace qcartan {

// Sparse Laurent polynomial in one variable with exact rational coefficients.
class LaurentPoly {
public:
  LaurentPoly() = default;
  static LaurentPoly term(int exp, Rat coeff) {
    LaurentPoly p;
    p.set(exp, coeff);
    return p;
  }

  Rat coeff(int exp) const {
    auto it = c_.find(exp);
    return it == c_.end() ? Rat(0) : it->second;
  }
  void set(int exp, Rat v) {
    if (v == Rat(0))
      c_.erase(exp);
    else
      c_[exp] = v;
  }
  const std::map<int, Rat>& terms() const { return c_; }
  bool is_zero() const { return c_.empty(); }

  friend LaurentPoly operator+(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, v] : b.c_) out.set(e, out.coeff(e) + v);
    return out;
  }
  friend LaurentPoly operator-(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out = a;
    for (const auto& [e, v] : b.c_) out.set(e, out.coeff(e) - v);
    return out;
  }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly out;
    for (const auto& [ea, va] : a.c_)
      for (const auto& [eb, vb] : b.c_) out.set(ea + eb, out.coeff(ea + eb) + va * vb);
    return out;
  }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) { return a.c_ == b.c_; }
  friend bool operator!=(const LaurentPoly& a, const LaurentPoly& b) { return !(a == b); }

  std::string str(const std::string& var = "t") const;

private:
  std::map<int, Rat> c_;  // exponent -> coefficient, no zeros stored
};

// [k]_x = (x^k - x^-k)/(x - x^-1) = x^{k-1} + x^{k-3} + ... + x^{1-k}
LaurentPoly quantum_integer(int k);

// Two-variable Laurent polynomial (integer coefficients), used only for the
// (q,t)-Cartan matrix.
class LaurentPoly2 {
public:
  void add(int qexp, int texp, long long v) {
    auto key = std::make_pair(qexp, texp);
    long long nv = coeff(qexp, texp) + v;
    if (nv == 0)
      c_.erase(key);
    else
      c_[key] = nv;
  }
  long long coeff(int qexp, int texp) const {
    auto it = c_.find({qexp, texp});
    return it == c_.end() ? 0 : it->second;
  }
  const std::map<std::pair<int, int>, long long>& terms() const { return c_; }

  // specialize q = 1 (resp. t = 1)
  LaurentPoly at_q1() const;
  LaurentPoly at_t1() const;

  friend bool operator==(const LaurentPoly2& a, const LaurentPoly2& b) { return a.c_ == b.c_; }

  std::string str() const;

private:
  std::map<std::pair<int, int>, long long> c_;
};

}  // namespace qcartan
