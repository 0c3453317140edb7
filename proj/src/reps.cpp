#include "taft/reps.hpp"

#include <sstream>
#include <stdexcept>

namespace taft {
namespace {

long modp(long v, long d) {
  long r = v % d;
  return r < 0 ? r + d : r;
}

// Quotient of a module by the span of the given columns (an invariant
// subspace).  Row-reduces the span, keeps the standard coordinates away from
// the pivots as a basis of the quotient, and pushes the generator matrices
// through.  Diagonal K and Z stay diagonal because each surviving basis
// vector is a standard coordinate vector.
Module quotient_by_columns(const Algebra& alg, const Module& m,
                           const CycMatrix& span_cols) {
  const long n = m.dim;
  Rref rr = row_reduce(span_cols.transposed());
  const long rank = rr.rank;

  std::vector<bool> is_pivot(static_cast<size_t>(n), false);
  for (long c : rr.pivot_cols) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<long> keep;
  for (long cidx = 0; cidx < n; ++cidx)
    if (!is_pivot[static_cast<size_t>(cidx)]) keep.push_back(cidx);
  const long q = static_cast<long>(keep.size());
  if (q != n - rank)
    throw std::logic_error("quotient_by_columns: rank bookkeeping failed");

  // Reduce a vector modulo the subspace: clear its pivot coordinates.
  auto reduce_vec = [&](std::vector<CycNum>& v) {
    for (long t = 0; t < rank; ++t) {
      long pc = rr.pivot_cols[static_cast<size_t>(t)];
      if (v[static_cast<size_t>(pc)].is_zero()) continue;
      CycNum f = v[static_cast<size_t>(pc)];
      for (long j = 0; j < n; ++j) {
        const CycNum& rj = rr.mat.at(t, j);
        if (!rj.raw_is_zero()) v[static_cast<size_t>(j)] -= f * rj;
      }
    }
  };

  auto push = [&](const CycMatrix& g) {
    CycMatrix out(q, q, alg.conductor());
    std::vector<CycNum> v(static_cast<size_t>(n));
    for (long c = 0; c < q; ++c) {
      for (long r = 0; r < n; ++r) v[static_cast<size_t>(r)] = g.at(r, keep[static_cast<size_t>(c)]);
      reduce_vec(v);
      for (long r = 0; r < q; ++r)
        out.at(r, c) = v[static_cast<size_t>(keep[static_cast<size_t>(r)])].reduced();
    }
    return out;
  };

  Module out;
  out.dim = q;
  out.E = push(m.E);
  out.F = push(m.F);
  out.K = push(m.K);
  out.Z = push(m.Z);
  return out;
}

}  // namespace

std::string weight_to_string(Weight w) {
  std::ostringstream os;
  os << "(" << w.l << "," << w.p << ")";
  return os.str();
}

std::vector<Weight> all_weights(long d) {
  std::vector<Weight> out;
  out.reserve(static_cast<size_t>(d * d));
  for (long l = 1; l <= d; ++l)
    for (long p = 0; p < d; ++p) out.push_back(Weight{l, p});
  return out;
}

long weight_index(long d, Weight w) { return (w.l - 1) * d + modp(w.p, d); }

bool is_stable_weight(long d, Weight w) { return modp(w.l, d) != 0; }

Weight iota(long d, Weight w) {
  if (!is_stable_weight(d, w))
    throw std::invalid_argument("iota: label with l divisible by d");
  return Weight{d - modp(w.l, d), modp(w.p + w.l, d)};
}

bool is_canonical_weight(long d, Weight w) {
  if (!is_stable_weight(d, w)) return false;
  long l = modp(w.l, d);
  long other = d - l;
  if (l < other) return true;
  if (l > other) return false;
  return modp(w.p, d) < d / 2;  // l = d/2: smaller p in the orbit {p, p + d/2}
}

std::vector<Weight> canonical_weights(long d) {
  std::vector<Weight> out;
  for (Weight w : all_weights(d))
    if (is_canonical_weight(d, w)) out.push_back(w);
  return out;
}

Module simple_module(const Algebra& alg, Weight w) {
  const long d = alg.d(), N = alg.conductor();
  const long l = w.l, p = modp(w.p, d);
  if (l < 1 || l > d)
    throw std::invalid_argument("simple_module: dimension out of range");
  Module m;
  m.dim = l;
  m.E = CycMatrix(l, l, N);
  m.F = CycMatrix(l, l, N);
  m.K = CycMatrix(l, l, N);
  m.Z = CycMatrix(l, l, N);
  for (long t = 0; t < l; ++t) {
    m.K.at(t, t) = alg.zeta_pow(p + l - 1 - t);
    m.Z.at(t, t) = alg.zeta_pow(2 * p + l - 1);
  }
  const CycNum one(N, 1);
  for (long i = 1; i < l; ++i) {
    m.E.at(i - 1, i) = alg.zeta_pow(p) * q_int(i, alg.zeta()) *
                       (alg.zeta_pow(l - i) - one);
    m.F.at(i, i - 1) = one;
  }
  return m;
}

Module tensor_module(const Algebra& alg, const Module& a, const Module& b) {
  const long N = alg.conductor();
  Module m;
  m.dim = a.dim * b.dim;
  CycMatrix ia = CycMatrix::identity(a.dim, N);
  CycMatrix ib = CycMatrix::identity(b.dim, N);
  m.K = a.K.kron(b.K);
  m.Z = a.Z.kron(b.Z);
  m.E = ia.kron(b.E) + a.E.kron(b.K);
  m.F = a.F.kron(ib) + (a.Z * a.K.power(alg.d() - 1)).kron(b.F);
  return m;
}

CheckReport verify_module(const Algebra& alg, const Module& m) {
  CheckReport rep;
  rep.name = "module-relations";
  const long d = alg.d(), N = alg.conductor();
  const CycMatrix id = CycMatrix::identity(m.dim, N);
  auto check = [&](bool ok, const char* what) {
    if (!ok) rep.fail(what);
    ++rep.checked;
  };
  check(m.K * m.E == m.E.scaled(alg.zeta()) * m.K, "K E != zeta E K");
  check(m.K * m.F == m.F.scaled(alg.zeta_pow(-1)) * m.K, "K F != zeta^{-1} F K");
  check(m.E * m.F - m.F * m.E == m.K - m.Z * m.K.power(d - 1),
        "[E, F] != K - z K^{-1}");
  check(m.K.power(d) == id, "K^d != 1");
  check(m.Z.power(d) == id, "z^d != 1");
  check(m.E.power(d).is_zero(), "E^d != 0");
  check(m.F.power(d).is_zero(), "F^d != 0");
  check(m.Z * m.E == m.E * m.Z && m.Z * m.F == m.F * m.Z && m.Z * m.K == m.K * m.Z,
        "z is not central");
  return rep;
}

ActionContext::ActionContext(const Algebra& alg, Module m)
    : alg_(&alg), mod_(std::move(m)) {
  const long d = alg.d(), N = alg.conductor();
  auto powers = [&](const CycMatrix& g) {
    std::vector<CycMatrix> p;
    p.reserve(static_cast<size_t>(d));
    p.push_back(CycMatrix::identity(mod_.dim, N));
    for (long t = 1; t < d; ++t) p.push_back(p.back() * g);
    return p;
  };
  pe_ = powers(mod_.E);
  pf_ = powers(mod_.F);
  pk_ = powers(mod_.K);
  pz_ = powers(mod_.Z);
}

const CycMatrix& ActionContext::mono_action(const Mono& m) {
  auto it = mono_.find(m);
  if (it != mono_.end()) return it->second;
  auto fe_key = std::make_pair(m[2], m[3]);
  auto fit = fe_.find(fe_key);
  if (fit == fe_.end())
    fit = fe_.emplace(fe_key, pf_[static_cast<size_t>(m[2])] *
                                  pe_[static_cast<size_t>(m[3])])
              .first;
  CycMatrix zk = pz_[static_cast<size_t>(m[0])] * pk_[static_cast<size_t>(m[1])];
  return mono_.emplace(m, zk * fit->second).first->second;
}

CycMatrix ActionContext::act(const DoubleElt& x) {
  CycMatrix out(mod_.dim, mod_.dim, alg_->conductor());
  for (const auto& [m, c] : x.terms()) {
    if (c.raw_is_zero()) continue;
    out.add_scaled(mono_action(m), c);
  }
  return out;
}

CycMatrix act(const Algebra& alg, const DoubleElt& x, const Module& m) {
  ActionContext ctx(alg, m);
  return ctx.act(x);
}

CycNum theta_scalar(const Algebra& alg, Weight w) {
  CycMatrix th = act(alg, alg.twist(), simple_module(alg, w));
  auto s = th.scalar_value();
  if (!s)
    throw std::logic_error("theta_scalar: twist does not act by a scalar on " +
                           weight_to_string(w));
  return *s;
}

std::vector<CycMatrix> hom_space(const Algebra& alg, const Module& s,
                                 const Module& m) {
  const long N = alg.conductor();
  const long dm = m.dim, ds = s.dim;

  // Unknown entries X[r][c] of an intertwiner X: s -> m.  The identities
  // X K_s = K_m X and X Z_s = Z_m X with diagonal K, Z force X[r][c] = 0
  // unless the eigenvalues match.
  std::vector<long> unk_index(static_cast<size_t>(dm * ds), -1);
  std::vector<std::pair<long, long>> unknowns;
  for (long r = 0; r < dm; ++r) {
    for (long c = 0; c < ds; ++c) {
      if (m.K.at(r, r) == s.K.at(c, c) && m.Z.at(r, r) == s.Z.at(c, c)) {
        unk_index[static_cast<size_t>(r * ds + c)] =
            static_cast<long>(unknowns.size());
        unknowns.emplace_back(r, c);
      }
    }
  }
  if (unknowns.empty()) return {};

  // Remaining constraints: X E_s = E_m X and X F_s = F_m X.
  std::vector<std::vector<std::pair<long, CycNum>>> rows;
  for (const CycMatrix* gs : {&s.E, &s.F}) {
    const CycMatrix& gm = (gs == &s.E) ? m.E : m.F;
    for (long r = 0; r < dm; ++r) {
      for (long c = 0; c < ds; ++c) {
        std::vector<std::pair<long, CycNum>> row;
        for (long t = 0; t < ds; ++t) {
          long u = unk_index[static_cast<size_t>(r * ds + t)];
          if (u >= 0 && !gs->at(t, c).raw_is_zero())
            row.emplace_back(u, gs->at(t, c));
        }
        for (long t = 0; t < dm; ++t) {
          long u = unk_index[static_cast<size_t>(t * ds + c)];
          if (u >= 0 && !gm.at(r, t).raw_is_zero())
            row.emplace_back(u, -gm.at(r, t));
        }
        if (!row.empty()) rows.push_back(std::move(row));
      }
    }
  }

  CycMatrix sys(static_cast<long>(rows.size()), static_cast<long>(unknowns.size()), N);
  for (size_t i = 0; i < rows.size(); ++i)
    for (const auto& [u, coeff] : rows[i])
      sys.at(static_cast<long>(i), u) += coeff;

  std::vector<CycMatrix> basis;
  for (const auto& v : nullspace(sys)) {
    CycMatrix X(dm, ds, N);
    for (size_t u = 0; u < unknowns.size(); ++u) {
      auto [r, c] = unknowns[u];
      X.at(r, c) = v[u].reduced();
    }
    basis.push_back(std::move(X));
  }
  return basis;
}

std::map<Weight, long> composition_factors(const Algebra& alg, const Module& m) {
  const long d = alg.d(), N = alg.conductor();
  std::map<Weight, long> out;
  Module cur = m;
  while (cur.dim > 0) {
    auto zs = cur.Z.scalar_value();
    if (!zs)
      throw std::logic_error(
          "composition_factors: z does not act by a scalar");

    // Simples sharing the z-scalar are the only possible factors.
    std::vector<std::pair<Weight, std::vector<CycMatrix>>> socle_parts;
    long socle_cols = 0;
    for (Weight w : all_weights(d)) {
      if (!(alg.zeta_pow(2 * w.p + w.l - 1) == *zs)) continue;
      auto homs = hom_space(alg, simple_module(alg, w), cur);
      if (homs.empty()) continue;
      out[w] += static_cast<long>(homs.size());
      socle_cols += static_cast<long>(homs.size()) * w.l;
      socle_parts.emplace_back(w, std::move(homs));
    }
    if (socle_parts.empty())
      throw std::logic_error("composition_factors: nonzero module with empty socle");

    CycMatrix span(cur.dim, socle_cols, N);
    long col = 0;
    for (const auto& [w, homs] : socle_parts) {
      for (const CycMatrix& X : homs) {
        for (long j = 0; j < X.cols(); ++j, ++col)
          for (long r = 0; r < cur.dim; ++r) span.at(r, col) = X.at(r, j);
      }
    }
    cur = quotient_by_columns(alg, cur, span);
  }
  return out;
}

}  // namespace taft
