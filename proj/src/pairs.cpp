#include "qcartan/pairs.hpp"

#include <cassert>
#include <stdexcept>

namespace qcartan {

SequenceIndex::SequenceIndex(Word w) : seq(std::move(w)) {
  int n = r();
  kplus.assign(n, n);
  kminus.assign(n, -1);
  for (int k = 0; k < n; ++k) {
    for (int j = k + 1; j < n; ++j)
      if (seq[j] == seq[k]) {
        kplus[k] = j;
        break;
      }
    for (int j = k - 1; j >= 0; --j)
      if (seq[j] == seq[k]) {
        kminus[k] = j;
        break;
      }
    if (kplus[k] == n)
      Jf.push_back(k);
  }
  for (int k = 0; k < n; ++k)
    if (kplus[k] < n) Je.push_back(k);
}

Mat exchange_matrix(const CartanDatum& dt, const SequenceIndex& idx) {
  int r = idx.r();
  Mat b(r, Vec(idx.Je.size(), 0));
  for (size_t col = 0; col < idx.Je.size(); ++col) {
    int t = idx.Je[col];
    for (int s = 0; s < r; ++s) {
      long long v = 0;
      if (t == idx.kplus[s])
        v = 1;
      else if (s == idx.kplus[t])
        v = -1;
      else if (s < t && t < idx.kplus[s] && idx.kplus[s] < idx.kplus[t])
        v = dt.C[idx.seq[s]][idx.seq[t]];
      else if (t < s && s < idx.kplus[t] && idx.kplus[t] < idx.kplus[s])
        v = -dt.C[idx.seq[s]][idx.seq[t]];
      b[s][col] = v;
    }
  }
  return b;
}

Mat lambda_matrix(const CartanDatum& dt, const SequenceIndex& idx) {
  int r = idx.r();
  int n = dt.n;
  // prefix images w_{<=k} varpi_{i_k} in weight coordinates
  WeylElement prefix = WeylElement::identity(dt);
  std::vector<Vec> minus_part(r), plus_part(r);  // varpi -+ w varpi
  for (int k = 0; k < r; ++k) {
    prefix = prefix * WeylElement::reflection(dt, idx.seq[k]);
    Vec w(n, 0);
    w[idx.seq[k]] = 1;
    Vec img = prefix.apply(weight_vec(w)).coords;
    Vec mi(n), pl(n);
    for (int m = 0; m < n; ++m) {
      mi[m] = (m == idx.seq[k] ? 1 : 0) - img[m];
      pl[m] = (m == idx.seq[k] ? 1 : 0) + img[m];
    }
    minus_part[k] = std::move(mi);
    plus_part[k] = std::move(pl);
  }
  // varpi - w varpi lies in the root lattice, so each entry is an integer
  std::vector<Vec> minus_root(r);
  for (int k = 0; k < r; ++k)
    minus_root[k] = to_root_basis(dt, weight_vec(minus_part[k])).coords;

  Mat lam(r, Vec(r, 0));
  for (int s = 0; s < r; ++s)
    for (int t = s + 1; t < r; ++t) {
      long long v = 0;
      for (int m = 0; m < n; ++m) v += minus_root[s][m] * dt.d[m] * plus_part[t][m];
      lam[s][t] = v;
      lam[t][s] = -v;
    }
  return lam;
}

PairMatrices build_pair(const CartanDatum& dt, const Word& seq) {
  SequenceIndex idx(seq);
  Mat lam = lambda_matrix(dt, idx);
  Mat b = exchange_matrix(dt, idx);
  Vec dc;
  for (int t : idx.Je) dc.push_back(dt.d[idx.seq[t]]);
  return PairMatrices(std::move(idx), std::move(lam), std::move(b), std::move(dc));
}

Vec product_diagonal(const PairMatrices& pm) {
  Vec diag;
  for (size_t col = 0; col < pm.idx.Je.size(); ++col) {
    int t = pm.idx.Je[col];
    long long v = 0;
    for (int g = 0; g < pm.idx.r(); ++g) v += pm.lambda[t][g] * pm.b[g][col];
    diag.push_back(v);
  }
  return diag;
}

bool check_compatible(const PairMatrices& pm) {
  int r = pm.idx.r();
  for (int s = 0; s < r; ++s)
    for (size_t col = 0; col < pm.idx.Je.size(); ++col) {
      int t = pm.idx.Je[col];
      long long v = 0;
      for (int g = 0; g < r; ++g) v += pm.lambda[s][g] * pm.b[g][col];
      long long want = (s == t) ? -2 * pm.d_col[col] : 0;
      if (v != want) return false;
    }
  return true;
}

GammaForms gamma_forms(const DynkinQuiver& q, const NForm& nf, const Word& seq) {
  AdaptedCheck ad = adapted_positions(q, seq);
  if (!ad.adapted)
    throw std::invalid_argument("gamma_forms: sequence is not Q-adapted (index " +
                                std::to_string(ad.failing_index + 1) + ")");
  int r = static_cast<int>(seq.size());
  const CartanDatum& dt = q.datum();

  GammaForms out;
  out.vertices = ad.positions;

  // counts n_j of each letter fix the exchangeable vertices:
  // xi_j - 2 n_j - 2 < p <= xi_j minus the frozen boundary layer
  SequenceIndex idx(seq);

  out.lambda.assign(r, Vec(r, 0));
  std::vector<TorusMonomial> intervals(r);
  for (int k = 0; k < r; ++k)
    intervals[k] = interval_monomial(q, nf, ad.positions[k].i, ad.positions[k].p,
                                     q.xi(ad.positions[k].i));
  for (int s = 0; s < r; ++s)
    for (int t = 0; t < r; ++t)
      if (s != t) out.lambda[s][t] = n_monomials(nf, intervals[s], intervals[t]);

  out.b.assign(r, Vec(idx.Je.size(), 0));
  for (size_t col = 0; col < idx.Je.size(); ++col) {
    RepVertex vt = ad.positions[idx.Je[col]];
    for (int s = 0; s < r; ++s) {
      RepVertex vs = ad.positions[s];
      long long v = 0;
      long long diff = vs.p - vt.p;
      if (dt.dist[vs.i][vt.i] == 1 && (diff == 1 || diff == -1))
        v = (vt.p > vs.p ? -1 : 1) * dt.C[vs.i][vt.i];
      else if (vs.i == vt.i && (diff == 2 || diff == -2))
        v = (vt.p > vs.p ? -1 : 1);
      out.b[s][col] = v;
    }
  }
  return out;
}

LambdaQ lambda_Q(const DynkinQuiver& q) {
  LambdaQ out;
  const CartanDatum& dt = q.datum();
  std::vector<RepVertex> reading = compatible_reading(q);
  int ell = static_cast<int>(reading.size());
  out.roots.reserve(ell);
  for (const RepVertex& v : reading) {
    out.roots.push_back(q.phi(v).root);
    out.residues.push_back(v.i);
    Vec w(dt.n, 0);
    w[v.i] = 1;
    out.lambda_wt.push_back(q.tau_power((q.xi(v.i) - v.p) / 2 + 1).apply(weight_vec(w)));
  }
  out.lambda.assign(ell, Vec(ell, 0));
  // reading order realizes the convex order: for s < t, beta_t is not below
  // beta_s, so the defining formula applies with (alpha, beta) = (s, t)
  for (int s = 0; s < ell; ++s)
    for (int t = s + 1; t < ell; ++t) {
      Vec first(dt.n), second(dt.n);
      for (int m = 0; m < dt.n; ++m) {
        first[m] = (m == out.residues[s] ? 1 : 0) - out.lambda_wt[s].coords[m];
        second[m] = (m == out.residues[t] ? 1 : 0) + out.lambda_wt[t].coords[m];
      }
      LatticeVec fr = to_root_basis(dt, weight_vec(first));
      long long v = 0;
      for (int m = 0; m < dt.n; ++m) v += fr.coords[m] * dt.d[m] * second[m];
      out.lambda[s][t] = v;
      out.lambda[t][s] = -v;
    }
  return out;
}

bool cond_din(const CartanDatum& dt, const Word& seq) {
  long long ell = static_cast<long long>(positive_roots(dt).size());
  int r = static_cast<int>(seq.size());
  for (int a = 0; a < r; ++a) {
    WeylElement prefix = WeylElement::identity(dt);
    for (int b = a; b < r && b - a < ell; ++b) {
      Vec alpha(dt.n, 0);
      alpha[seq[b]] = 1;
      LatticeVec beta = prefix.apply(root_vec(alpha));
      if (!is_positive(beta)) return false;
      prefix = prefix * WeylElement::reflection(dt, seq[b]);
    }
  }
  return true;
}

bool check_torus_iso(const DynkinQuiver& q, const NForm& nf) {
  LambdaQ lq = lambda_Q(q);
  std::vector<RepVertex> reading = compatible_reading(q);
  int ell = static_cast<int>(reading.size());
  std::vector<TorusMonomial> intervals(ell);
  for (int k = 0; k < ell; ++k)
    intervals[k] = interval_monomial(q, nf, reading[k].i, reading[k].p, q.xi(reading[k].i));
  for (int s = 0; s < ell; ++s)
    for (int t = 0; t < ell; ++t) {
      long long kappa = s == t ? 0 : n_monomials(nf, intervals[s], intervals[t]);
      if (kappa != lq.lambda[s][t]) return false;
    }
  return true;
}

}  // namespace qcartan
