#include "qcartan/torus.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace qcartan {

long long n_via_roots(const DynkinQuiver& q, const RepVertex& a, const RepVertex& b) {
  if (a == b) return 0;
  PhiHatElt x = q.phi(a), y = q.phi(b);
  long long pair = bilinear_int(q.datum(), x.root, y.root);
  long long sign = ((x.level + y.level + (a.p >= b.p ? 1 : 0)) % 2 == 0) ? 1 : -1;
  return sign * pair;
}

long long exponent_of(const TorusMonomial& m, const RepVertex& v) {
  auto it = m.exps.find(v);
  return it == m.exps.end() ? 0 : it->second;
}

long long n_monomials(const NForm& nf, const TorusMonomial& a, const TorusMonomial& b) {
  long long total = 0;
  for (const auto& [va, ea] : a.exps)
    for (const auto& [vb, eb] : b.exps) total += ea * eb * nf.pairing(va, vb);
  return total;
}

const NForm& TorusElement::nform() const {
  if (!nf_) throw std::logic_error("TorusElement: missing N-form");
  return *nf_;
}

void TorusElement::add_term(TorusMonomial m, long long coeff) {
  if (coeff == 0) return;
  for (auto it = m.exps.begin(); it != m.exps.end();)
    it = it->second == 0 ? m.exps.erase(it) : std::next(it);
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const auto& t, const TorusMonomial& key) { return t.first < key; });
  if (it != terms_.end() && it->first == m) {
    it->second += coeff;
    if (it->second == 0) terms_.erase(it);
  } else {
    terms_.insert(it, {std::move(m), coeff});
  }
}

TorusElement TorusElement::generator(const NForm& nf, const RepVertex& v, long long exp,
                                     long long qpow2) {
  TorusElement e(nf);
  TorusMonomial m;
  m.qpow2 = qpow2;
  if (exp != 0) m.exps[v] = exp;
  e.add_term(std::move(m), 1);
  return e;
}

TorusElement TorusElement::q_power(const NForm& nf, long long qpow2) {
  TorusElement e(nf);
  TorusMonomial m;
  m.qpow2 = qpow2;
  e.add_term(std::move(m), 1);
  return e;
}

TorusElement TorusElement::from_monomial(const NForm& nf, TorusMonomial m, long long coeff) {
  TorusElement e(nf);
  e.add_term(std::move(m), coeff);
  return e;
}

TorusElement TorusElement::operator+(const TorusElement& o) const {
  TorusElement out = *this;
  if (!out.nf_) out.nf_ = o.nf_;
  for (const auto& [m, c] : o.terms_) out.add_term(m, c);
  return out;
}

TorusElement TorusElement::operator-(const TorusElement& o) const {
  TorusElement out = *this;
  if (!out.nf_) out.nf_ = o.nf_;
  for (const auto& [m, c] : o.terms_) out.add_term(m, -c);
  return out;
}

TorusElement TorusElement::operator*(const TorusElement& o) const {
  const NForm& nf = nf_ ? *nf_ : o.nform();
  TorusElement out;
  out.nf_ = nf_ ? nf_ : o.nf_;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : o.terms_) {
      // reorder X-factors of mb past those of ma into canonical order; each
      // swap of X_a^{ea} (from ma) with X_b^{eb} (from mb), a > b, costs
      // q^{ea eb N(a,b)}
      long long cross = 0;
      for (const auto& [va, ea] : ma.exps)
        for (const auto& [vb, eb] : mb.exps)
          if (vb < va) cross += ea * eb * nf.pairing(va, vb);
      TorusMonomial m;
      m.qpow2 = ma.qpow2 + mb.qpow2 + 2 * cross;
      m.exps = ma.exps;
      for (const auto& [vb, eb] : mb.exps) {
        m.exps[vb] += eb;
        if (m.exps[vb] == 0) m.exps.erase(vb);
      }
      out.add_term(std::move(m), ca * cb);
    }
  }
  return out;
}

TorusElement TorusElement::inverse_monomial() const {
  if (terms_.size() != 1 || (terms_[0].second != 1 && terms_[0].second != -1))
    throw std::domain_error("inverse: not a unit monomial");
  const NForm& nf = nform();
  const TorusMonomial& m = terms_[0].first;
  // (q^c P)^{-1} = q^{-c} P^{-1}; re-sorting the reversed inverse factors
  // back into canonical order contributes q^{sum_{a<b} e_a e_b N(b,a)}
  long long cross = 0;
  for (auto a = m.exps.begin(); a != m.exps.end(); ++a)
    for (auto b = std::next(a); b != m.exps.end(); ++b)
      cross += a->second * b->second * nf.pairing(b->first, a->first);
  TorusMonomial inv;
  inv.qpow2 = -m.qpow2 + 2 * cross;
  for (const auto& [v, e] : m.exps) inv.exps[v] = -e;
  TorusElement out;
  out.nf_ = nf_;
  out.add_term(std::move(inv), terms_[0].second);
  return out;
}

std::string TorusElement::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    if (!out.empty()) out += " + ";
    std::string s;
    if (c != 1) s += std::to_string(c) + "*";
    if (m.qpow2 != 0) {
      s += "q^" + (m.qpow2 % 2 == 0 ? std::to_string(m.qpow2 / 2)
                                    : std::to_string(m.qpow2) + "/2");
      if (!m.exps.empty()) s += "*";
    }
    if (m.exps.empty() && m.qpow2 == 0 && c == 1) s += "1";
    bool first = true;
    for (const auto& [v, e] : m.exps) {
      if (!first) s += "*";
      first = false;
      s += "X[" + std::to_string(v.i + 1) + "," + std::to_string(v.p) + "]";
      if (e != 1) s += "^" + std::to_string(e);
    }
    out += s;
  }
  return out;
}

TorusMonomial bar_monomial(const NForm& nf, const TorusMonomial& m) {
  // bar(q^c X_{v1}^{e1}...X_{vm}^{em}) = q^{-c + sum d_i e} X_{vm}...X_{v1},
  // and re-sorting the reversed product costs q^{-S} with
  // S = sum_{a<b} e_a e_b N(a,b)
  long long dsum = 0;
  for (const auto& [v, e] : m.exps) dsum += nf.datum().d[v.i] * e;
  long long s = 0;
  for (auto a = m.exps.begin(); a != m.exps.end(); ++a)
    for (auto b = std::next(a); b != m.exps.end(); ++b)
      s += a->second * b->second * nf.pairing(a->first, b->first);
  TorusMonomial out = m;
  out.qpow2 = -m.qpow2 + 2 * dsum - 2 * s;
  return out;
}

TorusElement bar(const TorusElement& e) {
  TorusElement out(e.nform());
  for (const auto& [m, c] : e.terms()) out = out + TorusElement::from_monomial(e.nform(), bar_monomial(e.nform(), m), c);
  return out;
}

TorusMonomial bar_normalize(const NForm& nf, const TorusMonomial& m) {
  TorusMonomial b = bar_monomial(nf, m);
  // bar(q^c X) = q^{2r - c} X with r the bar-fixed power: c' = (c + bar_c)/2
  TorusMonomial out = m;
  out.qpow2 = (m.qpow2 + b.qpow2) / 2;
  assert((m.qpow2 + b.qpow2) % 2 == 0);
  return out;
}

bool is_bar_invariant(const NForm& nf, const TorusMonomial& m) {
  return bar_monomial(nf, m) == m;
}

TorusMonomial interval_monomial(const DynkinQuiver& q, const NForm& nf, int i, long long a,
                                long long b) {
  if (a > b) throw std::invalid_argument("interval_monomial: a > b");
  TorusMonomial m;
  long long start = a;
  while ((start - q.xi(i)) % 2 != 0) ++start;
  for (long long p = start; p <= b; p += 2) m.exps[{i, p}] = 1;
  return bar_normalize(nf, m);
}

TorusMonomial b_monomial(const DynkinQuiver& q, const NForm& nf, int i, long long p) {
  RepVertex up{i, p + 1};
  if (!q.valid_vertex(up))
    throw std::invalid_argument("b_monomial: parity violation at (i,p+1)");
  TorusMonomial m;
  m.exps[{i, p - 1}] = 1;
  m.exps[{i, p + 1}] = 1;
  for (int j : q.datum().neighbors(i)) m.exps[{j, p}] = q.datum().C[j][i];
  return bar_normalize(nf, m);
}

LatticeVec wtQ(const DynkinQuiver& q, const TorusMonomial& m) {
  Vec acc(q.n(), 0);
  for (const auto& [v, e] : m.exps) {
    PhiHatElt x = q.phi(v);
    long long sign = (x.level % 2 == 0) ? 1 : -1;
    for (int k = 0; k < q.n(); ++k) acc[k] += e * sign * x.root.coords[k];
  }
  return root_vec(std::move(acc));
}

TorusElement kq_generator(const DynkinQuiver& q, const NForm& nf, int i, long long l) {
  RepVertex v{i, l};
  if (!q.valid_vertex(v)) throw std::invalid_argument("kq_generator: parity violation");
  TorusElement x = TorusElement::generator(nf, v);
  TorusElement binv = TorusElement::from_monomial(nf, b_monomial(q, nf, i, l + 1)).inverse_monomial();
  TorusElement one = TorusElement::q_power(nf, 0);
  TorusElement qfac = TorusElement::q_power(nf, -2 * q.datum().d[i]);
  return x * (one + qfac * binv);
}

bool check_nnkr(const DynkinQuiver& q, const NForm& nf, int i, long long p, long long p2, int j,
                long long s, long long s2) {
  if (p > p2 || s > s2) throw std::invalid_argument("check_nnkr: needs p <= p', s <= s'");
  long long dij = q.datum().dist[i][j];
  if (p - s > dij || s2 - p2 > dij)
    throw std::invalid_argument("check_nnkr: needs p - s <= d(i,j) and s' - p' <= d(i,j)");
  TorusMonomial mi = interval_monomial(q, nf, i, p, p2);
  TorusMonomial mj = interval_monomial(q, nf, j, s, s2);
  long long lhs = n_monomials(nf, mi, mj);

  auto weight = [&](int idx) {
    Vec w(q.n(), 0);
    w[idx] = 1;
    return weight_vec(std::move(w));
  };
  auto tau_w = [&](long long k, int idx) { return q.tau_power(k).apply(weight(idx)); };
  LatticeVec a1 = tau_w((q.xi(i) - p) / 2 + 1, i);
  LatticeVec a2 = tau_w((q.xi(i) - p2) / 2, i);
  LatticeVec b1 = tau_w((q.xi(j) - s) / 2 + 1, j);
  LatticeVec b2 = tau_w((q.xi(j) - s2) / 2, j);
  Vec left(q.n()), right(q.n());
  for (int k = 0; k < q.n(); ++k) {
    left[k] = a1.coords[k] + a2.coords[k];
    right[k] = b1.coords[k] - b2.coords[k];
  }
  // (lambda + mu root-lattice side): the difference side lies in the root
  // lattice, so the pairing is exact and integral
  LatticeVec diff = to_root_basis(q.datum(), weight_vec(right));
  long long rhs = bilinear_int(q.datum(), diff, weight_vec(left));
  return lhs == rhs;
}

bool check_ya(const DynkinQuiver& q, const NForm& nf, long long lo, long long hi) {
  const CartanDatum& dt = q.datum();
  for (int i = 0; i < q.n(); ++i) {
    for (int j = 0; j < q.n(); ++j) {
      for (long long p = lo; p <= hi; ++p) {
        if ((p - q.xi(i)) % 2 != 0) continue;
        TorusMonomial xi_m;
        xi_m.exps[{i, p}] = 1;
        for (long long s = lo; s <= hi; ++s) {
          if ((s + 1 - q.xi(j)) % 2 != 0) continue;
          // beta(i,p;j,s): N(X_{i,p}, B~_{j,s}^{-1})
          TorusMonomial bj = b_monomial(q, nf, j, s);
          TorusMonomial bj_inv;
          for (const auto& [v, e] : bj.exps) bj_inv.exps[v] = -e;
          long long lhs = n_monomials(nf, xi_m, bj_inv);
          long long expect = 0;
          if (i == j && p - s == 1) expect = -2 * dt.d[i];
          if (i == j && p - s == -1) expect = 2 * dt.d[i];
          if (lhs != expect) return false;
        }
        // alpha(i,t;j,u): N(B~_{i,t}^{-1}, B~_{j,u}^{-1}) with t = p-1
        long long t = p - 1;
        if (!q.valid_vertex({i, t + 1})) continue;
        TorusMonomial bi = b_monomial(q, nf, i, t);
        TorusMonomial bi_inv;
        for (const auto& [v, e] : bi.exps) bi_inv.exps[v] = -e;
        for (long long u = lo; u <= hi; ++u) {
          if ((u + 1 - q.xi(j)) % 2 != 0) continue;
          TorusMonomial bju = b_monomial(q, nf, j, u);
          TorusMonomial bju_inv;
          for (const auto& [v, e] : bju.exps) bju_inv.exps[v] = -e;
          long long lhs = n_monomials(nf, bi_inv, bju_inv);
          long long expect = 0;
          if (i == j && t == u + 2) expect = 2 * dt.d[i];
          if (i == j && t == u - 2) expect = -2 * dt.d[i];
          if (dt.dist[i][j] == 1 && t == u + 1) expect = 2 * dt.Bsym[i][j];
          if (dt.dist[i][j] == 1 && t == u - 1) expect = -2 * dt.Bsym[i][j];
          if (lhs != expect) return false;
        }
      }
    }
  }
  return true;
}

}  // namespace qcartan
