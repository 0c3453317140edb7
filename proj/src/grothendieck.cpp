#include "taft/grothendieck.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace taft {
namespace {

using IMat = std::vector<std::vector<long long>>;

IMat izero(long n) { return IMat(n, std::vector<long long>(n, 0)); }

IMat imul(const IMat& a, const IMat& b) {
  const long n = static_cast<long>(a.size());
  IMat out = izero(n);
  for (long i = 0; i < n; ++i)
    for (long k = 0; k < n; ++k) {
      const long long v = a[i][k];
      if (v == 0) continue;
      for (long j = 0; j < n; ++j) out[i][j] += v * b[k][j];
    }
  return out;
}

IMat isub(const IMat& a, const IMat& b) {
  IMat out = a;
  for (size_t i = 0; i < out.size(); ++i)
    for (size_t j = 0; j < out[i].size(); ++j) out[i][j] -= b[i][j];
  return out;
}

std::string weight_str(const Weight& w) {
  std::ostringstream os;
  os << "(" << w.l << "," << w.p << ")";
  return os.str();
}

}  // namespace

long FusionRing::index_of(Weight w) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == w) return static_cast<long>(i);
  return -1;
}

long StableRing::index_of(Weight w) const {
  for (size_t i = 0; i < reps.size(); ++i)
    if (reps[i] == w) return static_cast<long>(i);
  return -1;
}

FusionRing full_ring(long d) {
  if (d < 2) throw std::invalid_argument("full_ring: d must be >= 2");
  const long n = d * d;
  auto idx = [d](long l, long p) {
    return (l - 1) * d + ((p % d) + d) % d;
  };

  // Permutation operator for multiplication by the invertible class m_{1,1}.
  IMat v1 = izero(n);
  for (long l = 1; l <= d; ++l)
    for (long p = 0; p < d; ++p) v1[idx(l, p + 1)][idx(l, p)] = 1;

  // Multiplication by the two-dimensional class m_{2,0}.  For l < d the
  // product is m_{l+1,p} + m_{l-1,p+1}; the top-dimensional column follows
  // from the central character (z acts by zeta^{2p+l-1}, which forces the
  // p-shifts below) together with the trace of every group-like element.
  IMat t2 = izero(n);
  for (long l = 1; l <= d; ++l)
    for (long p = 0; p < d; ++p) {
      if (l < d) {
        t2[idx(l + 1, p)][idx(l, p)] += 1;
        if (l >= 2) t2[idx(l - 1, p + 1)][idx(l, p)] += 1;
      } else {
        t2[idx(d - 1, p + 1)][idx(d, p)] += 2;
        t2[idx(1, p)][idx(d, p)] += 2;
      }
    }

  // A[l] = multiplication by m_{l,0}, via m_{l+1,0} = m_{2,0} m_{l,0} - m_{l-1,1}.
  std::vector<IMat> a0(d + 1);
  a0[1] = izero(n);
  for (long i = 0; i < n; ++i) a0[1][i][i] = 1;
  if (d >= 2) a0[2] = t2;
  for (long l = 3; l <= d; ++l)
    a0[l] = isub(imul(t2, a0[l - 1]), imul(v1, a0[l - 2]));

  std::vector<IMat> vp(d);
  vp[0] = a0[1];
  for (long p = 1; p < d; ++p) vp[p] = imul(v1, vp[p - 1]);

  FusionRing r;
  r.d = d;
  r.labels = all_weights(d);
  r.unit = idx(1, 0);
  r.tensor.assign(n, std::vector<std::vector<long long>>(
                         n, std::vector<long long>(n, 0)));
  for (long l = 1; l <= d; ++l)
    for (long p = 0; p < d; ++p) {
      const IMat alp = (p == 0) ? a0[l] : imul(vp[p], a0[l]);
      const long a = idx(l, p);
      for (long mu = 0; mu < n; ++mu)
        for (long nu = 0; nu < n; ++nu) r.tensor[a][mu][nu] = alp[nu][mu];
    }
  return r;
}

std::vector<CycNum> character(const Algebra& alg, long i, long j) {
  const long d = alg.d();
  std::vector<CycNum> out;
  out.reserve(d * d);
  for (const Weight& w : all_weights(d)) {
    // zeta^{p i + (2p + l - 1) j} * (l)_{zeta^i}
    out.push_back(alg.zeta_pow(w.p * i + (2 * w.p + w.l - 1) * j) *
                  q_int(w.l, alg.zeta_pow(i)));
  }
  return out;
}

std::vector<std::pair<long, long>> factoring_characters(const Algebra& alg) {
  const long d = alg.d();
  const auto labels = all_weights(d);
  auto idx = [&](Weight w) { return weight_index(d, w); };
  std::vector<std::pair<long, long>> out;
  for (long i = 0; i < d; ++i)
    for (long j = 0; j < d; ++j) {
      const auto chi = character(alg, i, j);
      bool kills = true;
      for (long p = 0; p < d && kills; ++p)
        if (!chi[idx({d, p})].is_zero()) kills = false;
      for (const Weight& w : labels) {
        if (!kills) break;
        if (!is_stable_weight(d, w)) continue;
        if (!(chi[idx(w)] + chi[idx(iota(d, w))]).is_zero()) kills = false;
      }
      if (kills) out.emplace_back(i, j);
    }
  return out;
}

StableRing stable_ring(long d) { return stable_ring(d, canonical_weights(d)); }

StableRing stable_ring(long d, const std::vector<Weight>& reps) {
  const FusionRing full = full_ring(d);
  const long n = d * d;

  StableRing s;
  s.d = d;
  s.reps = reps;
  s.reduction.assign(n, {-1, 0});

  std::vector<int> seen(n, 0);
  for (size_t r = 0; r < reps.size(); ++r) {
    const Weight w = reps[r];
    if (!is_stable_weight(d, w))
      throw std::invalid_argument("stable_ring: representative " +
                                  weight_str(w) + " is not a stable label");
    const Weight wi = iota(d, w);
    const long a = weight_index(d, w), b = weight_index(d, wi);
    if (seen[a] || seen[b])
      throw std::invalid_argument("stable_ring: orbit of " + weight_str(w) +
                                  " covered twice");
    seen[a] = seen[b] = 1;
    s.reduction[a] = {static_cast<long>(r), +1};
    s.reduction[b] = {static_cast<long>(r), -1};
    if (w == Weight{1, 0} || wi == Weight{1, 0}) s.unit = static_cast<long>(r);
  }
  for (long l = 1; l < d; ++l)
    for (long p = 0; p < d; ++p)
      if (!seen[weight_index(d, {l, p})])
        throw std::invalid_argument(
            "stable_ring: representatives miss an orbit");
  if (s.unit < 0)
    throw std::invalid_argument("stable_ring: no representative for the unit");

  const long m = static_cast<long>(reps.size());
  s.tensor.assign(m, std::vector<std::vector<long long>>(
                        m, std::vector<long long>(m, 0)));
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const auto& row =
          full.tensor[weight_index(d, reps[a])][weight_index(d, reps[b])];
      for (long c = 0; c < n; ++c) {
        if (row[c] == 0) continue;
        const auto [rc, sign] = s.reduction[c];
        if (sign != 0) s.tensor[a][b][rc] += sign * row[c];
      }
    }
  return s;
}

namespace {

CheckReport check_tensor_axioms(const std::string& name, long n, long unit,
                                const std::vector<std::vector<std::vector<long long>>>& N,
                                bool require_nonnegative) {
  CheckReport rep;
  rep.name = name;
  auto note = [&rep](const std::string& msg) { rep.fail(msg); };

  for (long a = 0; a < n; ++a)
    for (long b = 0; b < n; ++b)
      for (long c = 0; c < n; ++c) {
        if (N[a][b][c] != N[b][a][c])
          note("commutativity fails at (" + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(c) + ")");
        if (require_nonnegative && N[a][b][c] < 0)
          note("negative constant at (" + std::to_string(a) + "," +
               std::to_string(b) + "," + std::to_string(c) + ")");
      }
  ++rep.checked;

  for (long b = 0; b < n; ++b)
    for (long c = 0; c < n; ++c)
      if (N[unit][b][c] != (b == c ? 1 : 0))
        note("unit law fails at (" + std::to_string(b) + "," +
             std::to_string(c) + ")");
  ++rep.checked;

  // Associativity via multiplication operators: M_a M_b = sum_c N[a][b][c] M_c.
  std::vector<IMat> ops(n, izero(n));
  for (long a = 0; a < n; ++a)
    for (long mu = 0; mu < n; ++mu)
      for (long nu = 0; nu < n; ++nu) ops[a][nu][mu] = N[a][mu][nu];
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      IMat lhs = imul(ops[a], ops[b]);
      IMat rhs = izero(n);
      for (long c = 0; c < n; ++c) {
        if (N[a][b][c] == 0) continue;
        for (long i = 0; i < n; ++i)
          for (long j = 0; j < n; ++j) rhs[i][j] += N[a][b][c] * ops[c][i][j];
      }
      if (lhs != rhs)
        note("associativity fails for pair (" + std::to_string(a) + "," +
             std::to_string(b) + ")");
    }
  }
  ++rep.checked;
  return rep;
}

}  // namespace

CheckReport verify_ring_axioms(const FusionRing& r, bool require_nonnegative) {
  return check_tensor_axioms("ring axioms", static_cast<long>(r.labels.size()),
                             r.unit, r.tensor, require_nonnegative);
}

CheckReport verify_stable_ring(const StableRing& s) {
  CheckReport rep = check_tensor_axioms(
      "stable ring axioms", static_cast<long>(s.reps.size()), s.unit, s.tensor,
      /*require_nonnegative=*/false);
  rep.name = "stable ring";

  // The reduction map must kill the top-dimensional classes and negate under
  // the involution; products must not depend on which lift is multiplied.
  const long d = s.d;
  const FusionRing full = full_ring(d);
  const long n = d * d;
  const long m = static_cast<long>(s.reps.size());
  auto reduce_row = [&](const std::vector<long long>& row) {
    std::vector<long long> out(m, 0);
    for (long c = 0; c < n; ++c) {
      if (row[c] == 0) continue;
      const auto [rc, sign] = s.reduction[c];
      if (sign != 0) out[rc] += sign * row[c];
    }
    return out;
  };
  for (long p = 0; p < d; ++p)
    if (s.reduction[weight_index(d, {d, p})].second != 0)
      rep.fail("top-dimensional class survives reduction at p=" +
               std::to_string(p));
  ++rep.checked;
  for (long l = 1; l < d; ++l)
    for (long p = 0; p < d; ++p) {
      const Weight w{l, p};
      const auto ra = s.reduction[weight_index(d, w)];
      const auto rb = s.reduction[weight_index(d, iota(d, w))];
      if (ra.first != rb.first || ra.second != -rb.second)
        rep.fail("reduction not odd under the involution at " + weight_str(w));
    }
  ++rep.checked;
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      const long la = weight_index(d, s.reps[a]);
      const long lb = weight_index(d, s.reps[b]);
      const long lai = weight_index(d, iota(d, s.reps[a]));
      auto direct = reduce_row(full.tensor[la][lb]);
      auto alt = reduce_row(full.tensor[lai][lb]);
      bool ok = true;
      for (long c = 0; c < m; ++c)
        if (alt[c] != -direct[c]) ok = false;
      if (!ok)
        rep.fail("product depends on the lift at pair (" + std::to_string(a) +
                 "," + std::to_string(b) + ")");
      for (long c = 0; c < m; ++c)
        if (direct[c] != s.tensor[a][b][c]) {
          rep.fail("stored tensor disagrees with reduction at (" +
                   std::to_string(a) + "," + std::to_string(b) + ")");
          break;
        }
    }
  ++rep.checked;
  return rep;
}

}  // namespace taft
