#include "taft/fusion.hpp"

#include <map>
#include <sstream>
#include <stdexcept>

#include "taft/double_algebra.hpp"

namespace taft {
namespace {

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(" << w.l << "," << w.p << ")";
  return os.str();
}

// Diagonal action of the pivot z^{-i}K on a module (Z and K act diagonally
// on every module built here).
CycMatrix pivot_matrix(const Module& m, long d, long pivot_i) {
  const long a = ((-pivot_i) % d + d) % d;
  return m.Z.power(a) * m.K;
}

CycMatrix pivot_inverse_matrix(const Module& m, long d, long pivot_i) {
  const long a = (pivot_i % d + d) % d;
  return m.K.power(d - 1) * m.Z.power(a);
}

// Tr(y * w) for diagonal w.
CycNum diag_contract(const CycMatrix& y, const CycMatrix& w) {
  CycNum sum;
  for (long t = 0; t < y.rows(); ++t) {
    if (y.at(t, t).raw_is_zero() || w.at(t, t).raw_is_zero()) continue;
    sum += y.at(t, t) * w.at(t, t);
  }
  if (sum.conductor() == 0) return CycNum(y.conductor());
  return sum;
}

// Elements u(mu), v(mu) of the double with
//   partial_plus_trace(monodromy on M_lambda (x) M_mu)  = rho_lambda(u(mu)),
//   partial_minus_trace(monodromy on M_mu (x) M_lambda) = rho_lambda(v(mu)):
// contract the closed strand of each monodromy term against the diagonal
// pivot (resp. inverse pivot) weight matrix.
struct StrandTraces {
  DoubleElt u_plus;
  DoubleElt u_minus;
};

StrandTraces strand_traces(const Algebra& alg, Weight mu) {
  const Module m = simple_module(alg, mu);
  ActionContext ctx(alg, m);
  const CycMatrix wp = pivot_matrix(m, alg.d(), 1);
  const CycMatrix wm = pivot_inverse_matrix(m, alg.d(), 1);
  StrandTraces out{alg.zero(), alg.zero()};
  for (const auto& [key, c] : alg.monodromy().terms()) {
    const CycNum tp = diag_contract(ctx.mono_action(key[1]), wp);
    if (!tp.raw_is_zero()) out.u_plus.add_term(key[0], c * tp);
    const CycNum tm = diag_contract(ctx.mono_action(key[0]), wm);
    if (!tm.raw_is_zero()) out.u_minus.add_term(key[1], c * tm);
  }
  return out;
}

CycNum scalar_of(const CycMatrix& b, const char* what) {
  const auto s = b.scalar_value();
  if (!s)
    throw std::logic_error(std::string(what) +
                           ": partial trace of the double braiding is not "
                           "scalar on a simple module");
  return *s;
}

CycNum closed_s_plus(const Algebra& alg, const Weight& a, const Weight& b) {
  // (zeta/(1-zeta)) zeta^{-ll'-lp'-pl'-2pp'} (1 - zeta^{ll'})
  const CycNum one(alg.conductor(), 1);
  const CycNum pref = alg.zeta() * (one - alg.zeta()).inverse();
  const long exo = -(a.l * b.l + a.l * b.p + a.p * b.l + 2 * a.p * b.p);
  return pref * alg.zeta_pow(exo) * (one - alg.zeta_pow(a.l * b.l));
}

CycNum closed_s_minus(const Algebra& alg, const Weight& a, const Weight& b) {
  // (zeta^{2p+l+2p'+l'-1}/(1-zeta)) zeta^{-ll'-lp'-pl'-2pp'} (1 - zeta^{ll'})
  const CycNum one(alg.conductor(), 1);
  const CycNum pref =
      alg.zeta_pow(2 * a.p + a.l + 2 * b.p + b.l - 1) * (one - alg.zeta()).inverse();
  const long exo = -(a.l * b.l + a.l * b.p + a.p * b.l + 2 * a.p * b.p);
  return pref * alg.zeta_pow(exo) * (one - alg.zeta_pow(a.l * b.l));
}

}  // namespace

long FusionDatum::index_of(Weight w) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == w) return static_cast<long>(i);
  return -1;
}

CycNum qtrace_plus(const Module& m, const CycMatrix& f, long pivot_i) {
  if (f.rows() != m.dim || f.cols() != m.dim)
    throw std::invalid_argument("qtrace_plus: endomorphism shape mismatch");
  return (pivot_matrix(m, m.Z.conductor() / 12, pivot_i) * f).trace();
}

CycNum qtrace_minus(const Module& m, const CycMatrix& f, long pivot_i) {
  if (f.rows() != m.dim || f.cols() != m.dim)
    throw std::invalid_argument("qtrace_minus: endomorphism shape mismatch");
  return (f * pivot_inverse_matrix(m, m.Z.conductor() / 12, pivot_i)).trace();
}

CycNum dim_plus(const Algebra& alg, Weight w) {
  return alg.zeta_pow(1 - w.l - w.p) * q_int(w.l, alg.zeta());
}

CycNum dim_minus(const Algebra& alg, Weight w) {
  return alg.zeta_pow(w.p) * q_int(w.l, alg.zeta());
}

CycNum s_plus_categorical(const Algebra& alg, Weight lambda, Weight mu) {
  const DoubleElt u = strand_traces(alg, mu).u_plus;
  return scalar_of(act(alg, u, simple_module(alg, lambda)),
                   "s_plus_categorical");
}

CycNum s_minus_categorical(const Algebra& alg, Weight lambda, Weight mu) {
  const DoubleElt u = strand_traces(alg, mu).u_minus;
  return scalar_of(act(alg, u, simple_module(alg, lambda)),
                   "s_minus_categorical");
}

CategoricalST categorical_s(const Algebra& alg) {
  const long d = alg.d();
  const long n = d * d;
  CategoricalST out;
  out.labels = all_weights(d);
  out.s_plus = CycMatrix(n, n, alg.conductor());
  out.s_minus = CycMatrix(n, n, alg.conductor());
  std::vector<StrandTraces> traces;
  traces.reserve(n);
  for (const Weight& mu : out.labels) traces.push_back(strand_traces(alg, mu));
  for (long a = 0; a < n; ++a) {
    ActionContext ctx(alg, simple_module(alg, out.labels[a]));
    for (long b = 0; b < n; ++b) {
      out.s_plus.at(a, b) =
          scalar_of(ctx.act(traces[b].u_plus), "categorical_s(+)");
      out.s_minus.at(a, b) =
          scalar_of(ctx.act(traces[b].u_minus), "categorical_s(-)");
    }
  }
  return out;
}

ClosedST s_t_closed(const Algebra& alg) {
  const long d = alg.d();
  const long n = d * d;
  ClosedST out;
  out.labels = all_weights(d);
  out.s_plus = CycMatrix(n, n, alg.conductor());
  out.s_minus = CycMatrix(n, n, alg.conductor());
  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b) {
      out.s_plus.at(a, b) = closed_s_plus(alg, out.labels[a], out.labels[b]);
      out.s_minus.at(a, b) = closed_s_minus(alg, out.labels[a], out.labels[b]);
    }
  out.t_plus.reserve(n);
  out.t_minus.reserve(n);
  for (const Weight& w : out.labels) {
    out.t_plus.push_back(alg.zeta_pow(-w.p * (w.p + w.l)));
    out.t_minus.push_back(alg.zeta_pow(w.p * (w.p + w.l)));
  }
  return out;
}

GlobalDims global_dims(const Algebra& alg) {
  const long d = alg.d();
  const CycNum one(alg.conductor(), 1);
  CycNum full(alg.conductor());
  for (const Weight& w : all_weights(d)) full += dim_minus(alg, w) * dim_plus(alg, w);
  CycNum stable(alg.conductor());
  for (const Weight& w : canonical_weights(d))
    stable += dim_minus(alg, w) * dim_plus(alg, w);

  const CycNum denom_inv =
      ((one - alg.zeta()) * (one - alg.zeta_pow(-1))).inverse();
  const CycNum closed_full = CycNum(alg.conductor(), 2 * d * d) * denom_inv;
  const CycNum closed_stable = CycNum(alg.conductor(), d * d) * denom_inv;
  if (!(full == closed_full))
    throw std::logic_error("global_dims: sum over simples disagrees with the closed form");
  if (!(stable == closed_stable))
    throw std::logic_error("global_dims: stable sum disagrees with the closed form");
  if (!(full == stable + stable))
    throw std::logic_error("global_dims: stable dimension is not half the full one");
  return {full, stable};
}

FusionDatum stable_datum(const Algebra& alg) {
  return stable_datum(alg, canonical_weights(alg.d()));
}

FusionDatum stable_datum(const Algebra& alg, const std::vector<Weight>& reps) {
  const long d = alg.d();
  // each iota-orbit of the stable labels must appear exactly once
  std::vector<int> seen(d * d, 0);
  long unit = -1;
  for (size_t r = 0; r < reps.size(); ++r) {
    const Weight w = reps[r];
    if (!is_stable_weight(d, w))
      throw std::invalid_argument("stable_datum: representative " +
                                  weight_str(w) + " is not a stable label");
    const Weight wi = iota(d, w);
    const long a = weight_index(d, w), b = weight_index(d, wi);
    if (seen[a] || seen[b])
      throw std::invalid_argument("stable_datum: orbit of " + weight_str(w) +
                                  " covered twice");
    seen[a] = seen[b] = 1;
    if (w == Weight{1, 0} || wi == Weight{1, 0}) unit = static_cast<long>(r);
  }
  for (long l = 1; l < d; ++l)
    for (long p = 0; p < d; ++p)
      if (!seen[weight_index(d, {l, p})])
        throw std::invalid_argument("stable_datum: representatives miss an orbit");
  if (unit < 0)
    throw std::invalid_argument("stable_datum: no representative for the unit orbit");

  const long m = static_cast<long>(reps.size());
  const CycNum one(alg.conductor(), 1);
  const CycNum pref =
      sqrt_minus_zeta(d, alg.e()) * CycNum(alg.conductor(), d).inverse();
  FusionDatum fd;
  fd.d = d;
  fd.labels = reps;
  fd.unit = unit;
  fd.S = CycMatrix(m, m, alg.conductor());
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const Weight& x = reps[a];
      const Weight& y = reps[b];
      const long exo = -(x.l * y.l + x.l * y.p + x.p * y.l + 2 * x.p * y.p);
      fd.S.at(a, b) =
          pref * alg.zeta_pow(exo) * (alg.zeta_pow(x.l * y.l) - one);
    }
  fd.T.reserve(m);
  for (const Weight& w : reps) fd.T.push_back(alg.zeta_pow(-w.p * (w.l + w.p)));
  return fd;
}

CheckReport verify_stable_datum(const Algebra& alg, const FusionDatum& fd) {
  CheckReport rep;
  rep.name = "stable datum";
  const long m = static_cast<long>(fd.labels.size());
  const CycNum one(alg.conductor(), 1);

  if (fd.S != fd.S.transposed()) rep.fail("S is not symmetric");
  ++rep.checked;

  if (fd.S * fd.S.conjugated() != CycMatrix::identity(m, alg.conductor()))
    rep.fail("S conj(S) is not the identity");
  ++rep.checked;

  for (long a = 0; a < m; ++a) {
    CycNum tp = one;
    for (long k = 0; k < alg.d(); ++k) tp = tp * fd.T[a];
    if (!(tp == one))
      rep.fail("T entry at " + weight_str(fd.labels[a]) +
               " is not a d-th root of unity");
    if (fd.S.at(a, fd.unit).is_zero())
      rep.fail("unit column vanishes at " + weight_str(fd.labels[a]));
  }
  ++rep.checked;

  // closed-form entries at involution partners: row sign flip, T invariant
  auto entry = [&](const Weight& x, const Weight& y) {
    const CycNum pref =
        sqrt_minus_zeta(alg.d(), alg.e()) * CycNum(alg.conductor(), alg.d()).inverse();
    const long exo = -(x.l * y.l + x.l * y.p + x.p * y.l + 2 * x.p * y.p);
    return pref * alg.zeta_pow(exo) * (alg.zeta_pow(x.l * y.l) - one);
  };
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const Weight ia = iota(alg.d(), fd.labels[a]);
      const Weight ib = iota(alg.d(), fd.labels[b]);
      if (!(entry(ia, fd.labels[b]) == -fd.S.at(a, b)))
        rep.fail("row sign law fails at (" + weight_str(fd.labels[a]) + "," +
                 weight_str(fd.labels[b]) + ")");
      if (!(entry(fd.labels[a], ib) == -fd.S.at(a, b)))
        rep.fail("column sign law fails at (" + weight_str(fd.labels[a]) + "," +
                 weight_str(fd.labels[b]) + ")");
      if (!(entry(ia, ib) == fd.S.at(a, b)))
        rep.fail("double sign law fails at (" + weight_str(fd.labels[a]) + "," +
                 weight_str(fd.labels[b]) + ")");
    }
  ++rep.checked;
  for (long a = 0; a < m; ++a) {
    const Weight ia = iota(alg.d(), fd.labels[a]);
    if (!(alg.zeta_pow(-ia.p * (ia.l + ia.p)) == fd.T[a]))
      rep.fail("T is not involution-invariant at " + weight_str(fd.labels[a]));
  }
  ++rep.checked;
  return rep;
}

std::vector<std::vector<std::vector<long long>>> verlinde(const CycMatrix& S,
                                                          long unit) {
  const long m = S.rows();
  if (m == 0 || S.cols() != m || unit < 0 || unit >= m)
    throw std::invalid_argument("verlinde: need a square S and a valid unit");
  std::vector<CycNum> unit_inv(m);
  for (long i = 0; i < m; ++i) {
    if (S.at(i, unit).is_zero())
      throw std::invalid_argument("verlinde: zero entry in the unit column");
    unit_inv[i] = S.at(i, unit).inverse();
  }
  const CycMatrix sc = S.conjugated();
  std::vector<std::vector<std::vector<long long>>> N(
      m, std::vector<std::vector<long long>>(m, std::vector<long long>(m, 0)));
  for (long f = 0; f < m; ++f)
    for (long g = 0; g < m; ++g) {
      std::vector<CycNum> row(m);
      for (long i = 0; i < m; ++i) {
        const CycNum w = S.at(i, f) * S.at(i, g) * unit_inv[i];
        if (w.raw_is_zero()) continue;
        for (long h = 0; h < m; ++h) row[h] += w * sc.at(i, h);
      }
      for (long h = 0; h < m; ++h) {
        CycNum v = row[h];
        if (v.conductor() == 0) v = CycNum(S.conductor());
        if (!v.is_integer())
          throw std::logic_error(
              "verlinde: non-integer structure constant at (" +
              std::to_string(f) + "," + std::to_string(g) + "," +
              std::to_string(h) + ")");
        N[f][g][h] = v.integer_value();
      }
    }
  return N;
}

std::vector<std::vector<std::vector<long long>>> verlinde(const FusionDatum& fd) {
  return verlinde(fd.S, fd.unit);
}

}  // namespace taft
