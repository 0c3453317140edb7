#include "taft/compare.hpp"

#include <numeric>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "taft/reps.hpp"

namespace taft {

Weight phi(long d, long i, long j) {
  if (!(0 <= i && i < j && j <= d - 1))
    throw std::invalid_argument("phi: need 0 <= i < j <= d-1");
  return Weight{j - i, i};
}

Reindexing phi_tilde(long d) {
  Reindexing re;
  re.d = d;
  re.labels = enumerate_psi_sharp(d);
  re.image.reserve(re.labels.size());
  re.sign.reserve(re.labels.size());
  for (const auto& f : re.labels) {
    const Weight w = phi(d, f.i, f.j);
    const int parity = ((f.i + f.j) % d) % 2 == 0 ? 1 : -1;
    const int s = parity * eps_sign(f, d);
    re.image.push_back(s == 1 ? w : iota(d, w));
    re.sign.push_back(s);
  }
  return re;
}

namespace {

// Scan for a constant c with conj(M)[a][b] == c * S[a][b]: zeros must line up
// and every nonzero ratio must agree.  Returns the constant if one exists.
std::optional<CycNum> constant_ratio(const CycMatrix& malle_s,
                                     const CycMatrix& stable_s,
                                     std::vector<std::string>* discrepancies) {
  const long n = malle_s.rows();
  std::optional<CycNum> c;
  bool ok = true;
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      const CycNum lhs = malle_s.at(a, b).conj();
      const CycNum rhs = stable_s.at(a, b);
      if (rhs.is_zero()) {
        if (!lhs.is_zero()) {
          ok = false;
          if (discrepancies) {
            std::ostringstream os;
            os << "entry (" << a << "," << b
               << "): stable side vanishes, cyclic side does not";
            discrepancies->push_back(os.str());
          }
        }
        continue;
      }
      const CycNum ratio = lhs * rhs.inverse();
      if (!c) {
        c = ratio;
      } else if (!(ratio == *c)) {
        ok = false;
        if (discrepancies) {
          std::ostringstream os;
          os << "entry (" << a << "," << b << "): ratio " << ratio.to_string()
             << " differs from " << c->to_string();
          discrepancies->push_back(os.str());
        }
      }
    }
  }
  if (!ok || !c) return std::nullopt;
  return c;
}

}  // namespace

CompareReport certify_main(long d, long e) {
  CompareReport rep;
  rep.d = d;
  rep.e = ((e % d) + d) % d;
  if (d < 2 || std::gcd(rep.e, d) != 1)
    throw std::invalid_argument("certify_main: need d >= 2, gcd(e, d) = 1");

  const Algebra& alg = Algebra::get(d, rep.e);
  const MalleDatum md = malle_datum(alg);
  const Reindexing re = phi_tilde(d);
  const FusionDatum st = stable_datum(alg, re.image);

  // c = sign / sqrt(-zeta), sign = (-1)^{d(d-1)/2}; 1/sqrt(-zeta) equals
  // -zeta^{-1} sqrt(-zeta).
  const CycNum root = sqrt_minus_zeta(d, rep.e);
  CycNum expected = (root * alg.zeta_pow(-1)).reduced();
  if ((d * (d - 1) / 2) % 2 == 0) expected = -expected;
  rep.s_constant = expected;

  const long n = static_cast<long>(md.labels.size());
  rep.t_matches = true;
  for (long a = 0; a < n; ++a) {
    rep.entries_checked += 1;
    if (md.T[a].conj() == st.T[a]) continue;
    rep.t_matches = false;
    std::ostringstream os;
    os << "T entry " << a << ": conj " << md.T[a].conj().to_string()
       << " != " << st.T[a].to_string();
    rep.discrepancies.push_back(os.str());
  }

  rep.s_matches = true;
  for (long a = 0; a < n; ++a) {
    for (long b = 0; b < n; ++b) {
      rep.entries_checked += 1;
      const CycNum lhs = md.S.at(a, b).conj();
      const CycNum rhs = (expected * st.S.at(a, b)).reduced();
      if (lhs == rhs) continue;
      rep.s_matches = false;
      std::ostringstream os;
      os << "S entry (" << a << "," << b << "): conj " << lhs.to_string()
         << " != " << rhs.to_string();
      rep.discrepancies.push_back(os.str());
    }
  }

  // Opposite orientation: rebuild the stable side with zeta replaced by its
  // inverse and look for any constant entry ratio at all.
  const long e_opp = (d - rep.e) % d;
  if (e_opp == rep.e) {
    // Only happens for d = 2, where zeta = -1 is self-conjugate.
    rep.opposite_constant_exists = rep.s_matches;
    rep.matched_orientation =
        rep.s_matches && rep.t_matches ? "both (self-conjugate)" : "none";
    return rep;
  }
  const Algebra& alg_opp = Algebra::get(d, e_opp);
  const FusionDatum st_opp = stable_datum(alg_opp, re.image);
  rep.opposite_constant_exists =
      constant_ratio(md.S, st_opp.S, nullptr).has_value();

  if (rep.s_matches && rep.t_matches)
    rep.matched_orientation = "same";
  else if (rep.opposite_constant_exists)
    rep.matched_orientation = "opposite";
  else
    rep.matched_orientation = "none";
  return rep;
}

}  // namespace taft
