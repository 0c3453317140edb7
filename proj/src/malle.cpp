#include "taft/malle.hpp"

#include <sstream>
#include <stdexcept>

namespace taft {
namespace {

std::string label_str(const MalleLabel& f) {
  std::ostringstream os;
  os << "(" << f.i << "," << f.j << "," << f.k << ")";
  return os.str();
}

// Character-table matrix (zeta^{ab})_{0 <= a,b < d}.
CycMatrix char_table(const Algebra& alg) {
  const long d = alg.d();
  CycMatrix s(d, d, alg.conductor());
  for (long a = 0; a < d; ++a)
    for (long b = 0; b < d; ++b) s.at(a, b) = alg.zeta_pow(a * b);
  return s;
}

CycMatrix delete_row_col(const CycMatrix& m, long row, long col) {
  CycMatrix out(m.rows() - 1, m.cols() - 1, m.conductor());
  for (long r = 0, ro = 0; r < m.rows(); ++r) {
    if (r == row) continue;
    for (long c = 0, co = 0; c < m.cols(); ++c) {
      if (c == col) continue;
      out.at(ro, co) = m.at(r, c);
      ++co;
    }
    ++ro;
  }
  return out;
}

}  // namespace

std::vector<MalleLabel> enumerate_psi_sharp(long d) {
  if (d < 2) throw std::invalid_argument("enumerate_psi_sharp: d must be >= 2");
  std::vector<MalleLabel> out;
  out.reserve(d * (d - 1) / 2);
  for (long i = 0; i < d; ++i)
    for (long j = i + 1; j < d; ++j) out.push_back({i, j, (i + j) % d});
  return out;
}

std::vector<long> full_map(const MalleLabel& f, long d) {
  std::vector<long> values;
  values.reserve(d + 1);
  values.push_back(f.i);
  values.push_back(f.j);
  for (long v = 0; v < d; ++v)
    if (v != f.k) values.push_back(v);  // increasing on {2, ..., d}
  return values;
}

int eps_sign(const MalleLabel& f, long d) {
  const std::vector<long> v = full_map(f, d);
  long count = 0;
  for (size_t y = 0; y < v.size(); ++y)
    for (size_t y2 = y + 1; y2 < v.size(); ++y2)
      if (v[y] < v[y2]) ++count;
  return (count % 2 == 0) ? 1 : -1;
}

CycNum delta_det(const Algebra& alg) {
  const long d = alg.d();
  CycNum out(alg.conductor(), 1);
  for (long i = 0; i < d; ++i)
    for (long j = i + 1; j < d; ++j)
      out = out * (alg.zeta_pow(j) - alg.zeta_pow(i));
  return out;
}

CycNum frobenius(const Algebra& alg, const MalleLabel& f, long skip) {
  const long d = alg.d();
  const long N = alg.conductor();
  const long star = zeta_star_exponent(d, alg.e(), skip);
  long exo = d * (1 - d * d);
  for (long value : full_map(f, d)) exo -= 6 * (value * value + d * value);
  const long reduced = ((star % N) * (exo % N)) % N;
  return CycNum::root_of_unity(N, ((reduced % N) + N) % N);
}

CycNum s_bold(const Algebra& alg, const MalleLabel& f, const MalleLabel& g) {
  const long d = alg.d();
  const int sign = ((f.k + g.k) % 2 == 0) ? 1 : -1;
  const CycNum pref =
      delta_det(alg) * CycNum(alg.conductor(), d).inverse();
  const CycNum bracket =
      alg.zeta_pow(f.i * g.i + f.j * g.j) - alg.zeta_pow(f.i * g.j + f.j * g.i);
  CycNum out = pref * alg.zeta_pow(-f.k * g.k) * bracket;
  return sign > 0 ? out : -out;
}

CycNum s_bold_minors(const Algebra& alg, const MalleLabel& f,
                     const MalleLabel& g) {
  const CycMatrix sc = char_table(alg);
  const CycNum minor2 = sc.at(f.i, g.i) * sc.at(f.j, g.j) -
                        sc.at(f.i, g.j) * sc.at(f.j, g.i);
  return minor2 * determinant(delete_row_col(sc, f.k, g.k));
}

long MalleDatum::index_of(const MalleLabel& f) const {
  for (size_t i = 0; i < labels.size(); ++i)
    if (labels[i] == f) return static_cast<long>(i);
  return -1;
}

MalleDatum malle_datum(const Algebra& alg) {
  const long d = alg.d();
  MalleDatum md;
  md.d = d;
  md.labels = enumerate_psi_sharp(d);
  const long m = static_cast<long>(md.labels.size());
  md.unit = md.index_of({0, 1, 1 % d});

  std::vector<int> eps(m);
  for (long a = 0; a < m; ++a) eps[a] = eps_sign(md.labels[a], d);

  const CycNum delta_inv = delta_det(alg).inverse();
  const int dsign = (d % 2 == 1) ? 1 : -1;  // (-1)^{d-1}
  md.S = CycMatrix(m, m, alg.conductor());
  for (long a = 0; a < m; ++a)
    for (long b = 0; b < m; ++b) {
      CycNum v = delta_inv * s_bold(alg, md.labels[a], md.labels[b]).conj();
      if (dsign * eps[a] * eps[b] < 0) v = -v;
      md.S.at(a, b) = v.reduced();
    }
  md.T.reserve(m);
  for (long a = 0; a < m; ++a) md.T.push_back(frobenius(alg, md.labels[a]));
  return md;
}

MalleAxiomReport verify_malle_axioms(const MalleDatum& md) {
  MalleAxiomReport out;
  CheckReport& rep = out.axioms;
  rep.name = "fusion datum axioms";
  const long m = static_cast<long>(md.labels.size());
  const long N = md.S.conductor();
  const CycMatrix id = CycMatrix::identity(m, N);
  const CycNum one(N, 1);

  if (md.S.transposed() != md.S) rep.fail("S is not symmetric");
  ++rep.checked;

  if (md.S.conjugated().transposed() * md.S != id)
    rep.fail("conj-transpose of S is not inverse to S");
  ++rep.checked;

  const CycMatrix s2 = md.S * md.S;
  if (s2 * s2 != id) rep.fail("S^4 is not the identity");
  ++rep.checked;

  CycMatrix t(m, m, N);
  for (long a = 0; a < m; ++a) t.at(a, a) = md.T[a];
  if (s2 * t != t * s2) rep.fail("S^2 does not commute with T");
  ++rep.checked;

  const CycMatrix st = md.S * t;
  const CycMatrix st3 = st * st * st;
  out.st_cubed_scalar = st3.scalar_value();
  if (!out.st_cubed_scalar) {
    rep.fail("(ST)^3 is not scalar");
  } else if (!(*out.st_cubed_scalar == one) &&
             !(*out.st_cubed_scalar == -one)) {
    rep.fail("(ST)^3 is a scalar other than +1 or -1");
  }
  ++rep.checked;

  for (long a = 0; a < m; ++a) {
    if (md.S.at(a, md.unit).is_zero())
      rep.fail("unit column vanishes at " + label_str(md.labels[a]));
    CycNum power = one;
    for (long k = 0; k < N; ++k) power = power * md.T[a];
    if (!(power == one))
      rep.fail("T entry at " + label_str(md.labels[a]) +
               " is not a root of unity");
  }
  ++rep.checked;

  try {
    const auto n = verlinde(md.S, md.unit);
    for (long b = 0; b < m; ++b)
      for (long c = 0; c < m; ++c)
        if (n[md.unit][b][c] != (b == c ? 1 : 0)) {
          rep.fail("unit slice of the Verlinde tensor is not the identity");
          b = c = m;
        }
  } catch (const std::exception& ex) {
    rep.fail(std::string("Verlinde integrality fails: ") + ex.what());
  }
  ++rep.checked;
  return out;
}

}  // namespace taft
