#include "qcartan/laurent.hpp"

namespace qcartan {

std::string LaurentPoly::str(const std::string& var) const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [e, v] : c_) {
    if (!out.empty()) out += " + ";
    if (e == 0) {
      out += v.str();
    } else {
      if (v != Rat(1)) out += v.str() + "*";
      out += var;
      if (e != 1) out += "^" + std::to_string(e);
    }
  }
  return out;
}

LaurentPoly quantum_integer(int k) {
  LaurentPoly p;
  int sign = 1;
  if (k < 0) {
    k = -k;
    sign = -1;
  }
  for (int e = k - 1; e >= 1 - k; e -= 2) p.set(e, Rat(sign));
  return p;
}

LaurentPoly LaurentPoly2::at_q1() const {
  LaurentPoly out;
  for (const auto& [qt, v] : c_) out.set(qt.second, out.coeff(qt.second) + Rat(v));
  return out;
}

LaurentPoly LaurentPoly2::at_t1() const {
  LaurentPoly out;
  for (const auto& [qt, v] : c_) out.set(qt.first, out.coeff(qt.first) + Rat(v));
  return out;
}

std::string LaurentPoly2::str() const {
  if (c_.empty()) return "0";
  std::string out;
  for (const auto& [qt, v] : c_) {
    if (!out.empty()) out += " + ";
    std::string mono;
    if (qt.first != 0) mono += "q^" + std::to_string(qt.first);
    if (qt.second != 0) {
      if (!mono.empty()) mono += "*";
      mono += "t^" + std::to_string(qt.second);
    }
    if (mono.empty())
      out += std::to_string(v);
    else if (v == 1)
      out += mono;
    else if (v == -1)
      out += "-" + mono;
    else
      out += std::to_string(v) + "*" + mono;
  }
  return out;
}

}  // namespace qcartan
