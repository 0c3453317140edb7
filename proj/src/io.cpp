#include "taft/io.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace taft {

using nlohmann::json;

namespace {

json mpz_to_json(const mpz_class& z) {
  if (z.fits_slong_p()) return static_cast<std::int64_t>(z.get_si());
  return z.get_str();
}

mpz_class mpz_from_json(const json& j) {
  if (j.is_number_integer()) return mpz_class(std::to_string(j.get<std::int64_t>()));
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw std::invalid_argument("expected integer or decimal string");
}

json weight_to_json(const Weight& w) { return json::array({w.l, w.p}); }

Weight weight_from_json(const json& j) {
  return Weight{j.at(0).get<long>(), j.at(1).get<long>()};
}

json label_to_json(const MalleLabel& f) { return json::array({f.i, f.j, f.k}); }

MalleLabel label_from_json(const json& j) {
  return MalleLabel{j.at(0).get<long>(), j.at(1).get<long>(),
                    j.at(2).get<long>()};
}

json tensor_to_json(const std::vector<std::vector<std::vector<long long>>>& t) {
  json out = json::array();
  for (const auto& plane : t) {
    json rows = json::array();
    for (const auto& row : plane) rows.push_back(row);
    out.push_back(std::move(rows));
  }
  return out;
}

std::vector<std::vector<std::vector<long long>>> tensor_from_json(
    const json& j) {
  std::vector<std::vector<std::vector<long long>>> t;
  for (const auto& plane : j) {
    t.emplace_back();
    for (const auto& row : plane)
      t.back().push_back(row.get<std::vector<long long>>());
  }
  return t;
}

std::vector<CycNum> cyc_list_from_json(const json& j) {
  std::vector<CycNum> out;
  out.reserve(j.size());
  for (const auto& e : j) out.push_back(cyc_from_json(e));
  return out;
}

json cyc_list_to_json(const std::vector<CycNum>& v) {
  json out = json::array();
  for (const auto& x : v) out.push_back(to_json(x));
  return out;
}

// Rational coefficient in LaTeX, sign stripped by the caller.
std::string latex_rational(const mpq_class& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return "\\frac{" + q.get_num().get_str() + "}{" + q.get_den().get_str() +
         "}";
}

std::string weight_label_tex(const Weight& w) {
  return "m_{" + std::to_string(w.l) + "," + std::to_string(w.p) + "}";
}

std::string malle_label_tex(const MalleLabel& f) {
  return "f_{" + std::to_string(f.i) + "," + std::to_string(f.j) + "}";
}

std::string weight_label_text(const Weight& w) {
  return "m[" + std::to_string(w.l) + "," + std::to_string(w.p) + "]";
}

std::string malle_label_text(const MalleLabel& f) {
  return "f[" + std::to_string(f.i) + "," + std::to_string(f.j) + "," +
         std::to_string(f.k) + "]";
}

// Shared body of the multiplication-table emitters.
template <typename Label>
std::string latex_table_impl(
    const std::vector<Label>& labels,
    const std::vector<std::vector<std::vector<long long>>>& tensor,
    std::string (*tex)(const Label&)) {
  const size_t n = labels.size();
  std::ostringstream os;
  os << "\\begin{array}{c|";
  for (size_t b = 0; b < n; ++b) os << 'c';
  os << "}\n\\cdot";
  for (size_t b = 0; b < n; ++b) os << " & " << tex(labels[b]);
  os << " \\\\\n\\hline\n";
  for (size_t a = 0; a < n; ++a) {
    os << tex(labels[a]);
    for (size_t b = 0; b < n; ++b) {
      os << " & ";
      bool first = true;
      for (size_t c = 0; c < n; ++c) {
        const long long m = tensor[a][b][c];
        if (m == 0) continue;
        if (!first) os << (m > 0 ? " + " : " - ");
        else if (m < 0)
          os << '-';
        const long long a_m = m > 0 ? m : -m;
        if (a_m != 1) os << a_m << ' ';
        os << tex(labels[c]);
        first = false;
      }
      if (first) os << '0';
    }
    os << " \\\\\n";
  }
  os << "\\end{array}\n";
  return os.str();
}

template <typename Label>
std::string text_table_impl(
    const std::vector<Label>& labels,
    const std::vector<std::vector<std::vector<long long>>>& tensor,
    std::string (*txt)(const Label&)) {
  const size_t n = labels.size();
  std::ostringstream os;
  for (size_t a = 0; a < n; ++a) {
    for (size_t b = 0; b < n; ++b) {
      os << txt(labels[a]) << " * " << txt(labels[b]) << " =";
      bool any = false;
      for (size_t c = 0; c < n; ++c) {
        const long long m = tensor[a][b][c];
        if (m == 0) continue;
        os << ' ' << (m >= 0 && any ? "+ " : m < 0 ? "- " : "")
           << (std::abs(m) != 1 ? std::to_string(std::abs(m)) + " " : "")
           << txt(labels[c]);
        any = true;
      }
      if (!any) os << " 0";
      os << '\n';
    }
  }
  return os.str();
}

}  // namespace

// ---- JSON emitters ---------------------------------------------------------

json to_json(const CycNum& x) {
  const CycNum r = x.reduced();
  json coeffs = json::array();
  for (const mpq_class& q : r.canonical_coeffs())
    coeffs.push_back(
        json::array({mpz_to_json(q.get_num()), mpz_to_json(q.get_den())}));
  return json{{"conductor", r.conductor()}, {"coeffs", std::move(coeffs)}};
}

json to_json(const DoubleElt& x) {
  json out = json::array();
  for (const auto& [m, c] : x.terms()) {
    if (c.is_zero()) continue;
    out.push_back(json{{"index", json::array({m[0], m[1], m[2], m[3]})},
                       {"coeff", to_json(c)}});
  }
  return out;
}

json to_json(const CycMatrix& m) {
  json out = json::array();
  for (long r = 0; r < m.rows(); ++r) {
    json row = json::array();
    for (long c = 0; c < m.cols(); ++c) row.push_back(to_json(m.at(r, c)));
    out.push_back(std::move(row));
  }
  return out;
}

json to_json(const FusionRing& r) {
  json labels = json::array();
  for (const auto& w : r.labels) labels.push_back(weight_to_json(w));
  return json{{"d", r.d},
              {"labels", std::move(labels)},
              {"unit", r.unit},
              {"tensor", tensor_to_json(r.tensor)}};
}

json to_json(const StableRing& r) {
  json labels = json::array();
  for (const auto& w : r.reps) labels.push_back(weight_to_json(w));
  return json{{"d", r.d},
              {"labels", std::move(labels)},
              {"unit", r.unit},
              {"tensor", tensor_to_json(r.tensor)}};
}

json to_json(const FusionDatum& fd) {
  json labels = json::array();
  for (const auto& w : fd.labels) labels.push_back(weight_to_json(w));
  return json{{"d", fd.d},
              {"labels", std::move(labels)},
              {"unit", fd.unit},
              {"S", to_json(fd.S)},
              {"T", cyc_list_to_json(fd.T)}};
}

json to_json(const MalleDatum& md) {
  json labels = json::array();
  for (const auto& f : md.labels) labels.push_back(label_to_json(f));
  return json{{"d", md.d},
              {"labels", std::move(labels)},
              {"unit", md.unit},
              {"S", to_json(md.S)},
              {"T", cyc_list_to_json(md.T)}};
}

json to_json(const CompareReport& rep) {
  return json{{"d", rep.d},
              {"e", rep.e},
              {"t_matches", rep.t_matches},
              {"s_matches", rep.s_matches},
              {"s_constant", to_json(rep.s_constant)},
              {"matched_orientation", rep.matched_orientation},
              {"opposite_constant_exists", rep.opposite_constant_exists},
              {"max_entry_checked", rep.entries_checked},
              {"discrepancies", rep.discrepancies}};
}

json to_json(const CheckReport& rep) {
  return json{{"name", rep.name},
              {"ok", rep.ok},
              {"checked", rep.checked},
              {"failures", rep.failures}};
}

json decomposition_to_json(const std::map<Weight, long>& mult) {
  json out = json::array();
  for (const auto& [w, m] : mult)
    out.push_back(json{{"l", w.l}, {"p", w.p}, {"mult", m}});
  return out;
}

// ---- JSON parsers ----------------------------------------------------------

CycNum cyc_from_json(const json& j) {
  const long n = j.at("conductor").get<long>();
  if (n == 0) return CycNum();
  CycNum x(n);
  long k = 0;
  for (const auto& pair : j.at("coeffs")) {
    mpq_class q(mpz_from_json(pair.at(0)), mpz_from_json(pair.at(1)));
    q.canonicalize();
    if (q != 0) x += CycNum(n, q) * CycNum::root_of_unity(n, k);
    ++k;
  }
  return x;
}

DoubleElt double_elt_from_json(const Algebra& alg, const json& j) {
  DoubleElt x(alg);
  for (const auto& term : j) {
    const auto& idx = term.at("index");
    Mono m{idx.at(0).get<int>(), idx.at(1).get<int>(), idx.at(2).get<int>(),
           idx.at(3).get<int>()};
    x.add_term(m, cyc_from_json(term.at("coeff")));
  }
  return x;
}

CycMatrix matrix_from_json(const json& j) {
  const long rows = static_cast<long>(j.size());
  if (rows == 0) return CycMatrix();
  const long cols = static_cast<long>(j.at(0).size());
  CycNum first = cyc_from_json(j.at(0).at(0));
  CycMatrix m(rows, cols, first.conductor());
  for (long r = 0; r < rows; ++r)
    for (long c = 0; c < cols; ++c) m.at(r, c) = cyc_from_json(j.at(r).at(c));
  return m;
}

FusionRing ring_from_json(const json& j) {
  FusionRing r;
  r.d = j.at("d").get<long>();
  for (const auto& w : j.at("labels")) r.labels.push_back(weight_from_json(w));
  r.unit = j.at("unit").get<long>();
  r.tensor = tensor_from_json(j.at("tensor"));
  return r;
}

FusionDatum datum_from_json(const json& j) {
  FusionDatum fd;
  fd.d = j.at("d").get<long>();
  for (const auto& w : j.at("labels")) fd.labels.push_back(weight_from_json(w));
  fd.unit = j.at("unit").get<long>();
  fd.S = matrix_from_json(j.at("S"));
  fd.T = cyc_list_from_json(j.at("T"));
  return fd;
}

MalleDatum malle_from_json(const json& j) {
  MalleDatum md;
  md.d = j.at("d").get<long>();
  for (const auto& f : j.at("labels")) md.labels.push_back(label_from_json(f));
  md.unit = j.at("unit").get<long>();
  md.S = matrix_from_json(j.at("S"));
  md.T = cyc_list_from_json(j.at("T"));
  return md;
}

CompareReport compare_from_json(const json& j) {
  CompareReport rep;
  rep.d = j.at("d").get<long>();
  rep.e = j.at("e").get<long>();
  rep.t_matches = j.at("t_matches").get<bool>();
  rep.s_matches = j.at("s_matches").get<bool>();
  rep.s_constant = cyc_from_json(j.at("s_constant"));
  rep.matched_orientation = j.at("matched_orientation").get<std::string>();
  rep.opposite_constant_exists = j.at("opposite_constant_exists").get<bool>();
  rep.entries_checked = j.at("max_entry_checked").get<long>();
  rep.discrepancies =
      j.at("discrepancies").get<std::vector<std::string>>();
  return rep;
}

CheckReport check_from_json(const json& j) {
  CheckReport rep;
  rep.name = j.at("name").get<std::string>();
  rep.ok = j.at("ok").get<bool>();
  rep.checked = j.at("checked").get<long>();
  rep.failures = j.at("failures").get<std::vector<std::string>>();
  return rep;
}

std::map<Weight, long> decomposition_from_json(const json& j) {
  std::map<Weight, long> mult;
  for (const auto& e : j)
    mult[Weight{e.at("l").get<long>(), e.at("p").get<long>()}] =
        e.at("mult").get<long>();
  return mult;
}

// ---- LaTeX emitters --------------------------------------------------------

std::string latex(const CycNum& x) {
  const CycNum r = x.reduced();
  const auto coeffs = r.canonical_coeffs();
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coeffs.size(); ++k) {
    const mpq_class& q = coeffs[k];
    if (q == 0) continue;
    const bool neg = q < 0;
    if (first) {
      if (neg) os << '-';
    } else {
      os << (neg ? " - " : " + ");
    }
    const mpq_class a = neg ? mpq_class(-q) : q;
    if (k == 0) {
      os << latex_rational(a);
    } else {
      if (a != 1) os << latex_rational(a) << ' ';
      os << "\\zeta";
      if (k > 1) os << "^{" << k << "}";
    }
    first = false;
  }
  if (first) os << '0';
  return os.str();
}

std::string latex_matrix(const CycMatrix& m) {
  std::ostringstream os;
  os << "\\begin{pmatrix}\n";
  for (long r = 0; r < m.rows(); ++r) {
    for (long c = 0; c < m.cols(); ++c) {
      if (c) os << " & ";
      os << latex(m.at(r, c));
    }
    os << " \\\\\n";
  }
  os << "\\end{pmatrix}";
  return os.str();
}

std::string latex_table(const FusionRing& r) {
  return latex_table_impl(r.labels, r.tensor, &weight_label_tex);
}

std::string latex_table(const StableRing& r) {
  return latex_table_impl(r.reps, r.tensor, &weight_label_tex);
}

namespace {

template <typename Label>
std::string latex_datum_impl(const std::vector<Label>& labels,
                             const CycMatrix& S, const std::vector<CycNum>& T,
                             std::string (*tex)(const Label&)) {
  std::ostringstream os;
  os << "\\text{labels: } ";
  for (size_t a = 0; a < labels.size(); ++a)
    os << (a ? ",\\ " : "") << tex(labels[a]);
  os << "\n\nS = " << latex_matrix(S) << "\n\nT = \\mathrm{diag}(";
  for (size_t a = 0; a < T.size(); ++a) os << (a ? ",\\ " : "") << latex(T[a]);
  os << ")\n";
  return os.str();
}

}  // namespace

std::string latex_datum(const FusionDatum& fd) {
  return latex_datum_impl(fd.labels, fd.S, fd.T, &weight_label_tex);
}

std::string latex_datum(const MalleDatum& md) {
  return latex_datum_impl(md.labels, md.S, md.T, &malle_label_tex);
}

// ---- Plain-text emitters ---------------------------------------------------

std::string text(const FusionRing& r) {
  return text_table_impl(r.labels, r.tensor, &weight_label_text);
}

std::string text(const StableRing& r) {
  return text_table_impl(r.reps, r.tensor, &weight_label_text);
}

namespace {

template <typename Label>
std::string text_datum_impl(const std::vector<Label>& labels,
                            const CycMatrix& S, const std::vector<CycNum>& T,
                            std::string (*txt)(const Label&)) {
  std::ostringstream os;
  os << "labels:";
  for (const auto& f : labels) os << ' ' << txt(f);
  os << '\n';
  for (long a = 0; a < S.rows(); ++a)
    for (long b = 0; b < S.cols(); ++b)
      os << "S[" << a << "][" << b << "] = " << S.at(a, b).to_string() << '\n';
  for (size_t a = 0; a < T.size(); ++a)
    os << "T[" << a << "] = " << T[a].to_string() << '\n';
  return os.str();
}

}  // namespace

std::string text(const FusionDatum& fd) {
  return text_datum_impl(fd.labels, fd.S, fd.T, &weight_label_text);
}

std::string text(const MalleDatum& md) {
  return text_datum_impl(md.labels, md.S, md.T, &malle_label_text);
}

std::string text(const CompareReport& rep) {
  std::ostringstream os;
  os << "d = " << rep.d << ", e = " << rep.e << '\n'
     << "T identity: " << (rep.t_matches ? "holds" : "FAILS") << '\n'
     << "S identity: " << (rep.s_matches ? "holds" : "FAILS")
     << " with constant " << rep.s_constant.to_string() << '\n'
     << "matched orientation: " << rep.matched_orientation << '\n'
     << "opposite orientation constant ratio: "
     << (rep.opposite_constant_exists ? "exists" : "none") << '\n'
     << "entries checked: " << rep.entries_checked << '\n';
  for (const auto& s : rep.discrepancies) os << "discrepancy: " << s << '\n';
  return os.str();
}

std::string text(const CheckReport& rep) {
  std::ostringstream os;
  os << rep.name << ": " << (rep.ok ? "pass" : "FAIL") << " (" << rep.checked
     << " checks)\n";
  for (const auto& s : rep.failures) os << "  " << s << '\n';
  return os.str();
}

std::string text(const std::map<Weight, long>& mult) {
  std::ostringstream os;
  for (const auto& [w, m] : mult)
    os << weight_label_text(w) << " x " << m << '\n';
  return os.str();
}

}  // namespace taft
