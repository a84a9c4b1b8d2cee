#pragma once

#include <cstdint>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <string>

namespace qcartan {

// Exact rational over 64-bit integers. Every quantity in this library is a
// small integer or rational (root coordinates, symmetrizer entries, Laurent
// coefficients), so 64 bits leaves orders of magnitude of headroom; the
// 128-bit intermediates plus the range check below turn any overflow into a
// hard error instead of a wrong answer.
class Rat {
public:
  Rat() : num_(0), den_(1) {}
  Rat(long long n) : num_(n), den_(1) {}
  Rat(long long n, long long d) : num_(n), den_(d) { reduce128(num_, den_); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_integer() const { return den_ == 1; }
  long long as_integer() const {
    if (den_ != 1) throw std::domain_error("Rat: not an integer: " + str());
    return num_;
  }

  friend Rat operator+(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ + i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator-(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.den_ - i128(b.num_) * a.den_,
                i128(a.den_) * b.den_);
  }
  friend Rat operator*(const Rat& a, const Rat& b) {
    return make(i128(a.num_) * b.num_, i128(a.den_) * b.den_);
  }
  friend Rat operator/(const Rat& a, const Rat& b) {
    if (b.num_ == 0) throw std::domain_error("Rat: division by zero");
    return make(i128(a.num_) * b.den_, i128(a.den_) * b.num_);
  }
  Rat operator-() const { return Rat(-num_, den_); }
  Rat& operator+=(const Rat& o) { return *this = *this + o; }
  Rat& operator-=(const Rat& o) { return *this = *this - o; }
  Rat& operator*=(const Rat& o) { return *this = *this * o; }
  Rat& operator/=(const Rat& o) { return *this = *this / o; }

  friend bool operator==(const Rat& a, const Rat& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rat& a, const Rat& b) { return !(a == b); }
  friend bool operator<(const Rat& a, const Rat& b) {
    return i128(a.num_) * b.den_ < i128(b.num_) * a.den_;
  }

  std::string str() const {
    return den_ == 1 ? std::to_string(num_)
                     : std::to_string(num_) + "/" + std::to_string(den_);
  }
  friend std::ostream& operator<<(std::ostream& os, const Rat& r) {
    return os << r.str();
  }

private:
  using i128 = __int128;

  static Rat make(i128 n, i128 d) {
    Rat r;
    reduce128(n, d);
    r.num_ = narrow(n);
    r.den_ = narrow(d);
    return r;
  }

  template <typename T>
  static void reduce128(T& n, T& d) {
    if (d == 0) throw std::domain_error("Rat: zero denominator");
    if (d < 0) { n = -n; d = -d; }
    T a = n < 0 ? -n : n, b = d;
    while (b) { T t = a % b; a = b; b = t; }
    if (a > 1) { n /= a; d /= a; }
  }

  static long long narrow(i128 v) {
    if (v > INT64_MAX || v < INT64_MIN)
      throw std::overflow_error("Rat: 64-bit overflow");
    return static_cast<long long>(v);
  }

  long long num_;
  long long den_;
};

}  // namespace qcartan
