#include "taft/cli.hpp"

#include <CLI11.hpp>
#include <cctype>
#include <fstream>
#include <numeric>
#include <ostream>
#include <sstream>

#include "taft/io.hpp"
#include "taft/reps.hpp"

namespace taft {
namespace {

constexpr long kHopfGuard = 5;    // exhaustive basis-level verification
constexpr long kMatrixGuard = 10;  // matrix-sized computations

struct Common {
  long d = 0;
  long e = 1;
  std::string format = "json";
  std::string out_path;
  bool force = false;
};

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--d", c.d, "dimension parameter (d >= 2)")->required();
  cmd->add_option("--e", c.e, "quantum-parameter exponent, gcd(e, d) = 1");
  cmd->add_option("--format", c.format, "output format")
      ->check(CLI::IsMember({"json", "latex", "text"}));
  cmd->add_option("--out", c.out_path, "write the output to FILE");
  cmd->add_flag("--force", c.force, "override the d guard");
}

int usage_error(std::ostream& err, const std::string& msg) {
  err << "error: " << msg << '\n';
  return 2;
}

// Validates d/e and the size guard; normalizes e into {0, ..., d-1}.
// Returns 0 if OK, otherwise the exit status.
int validate(Common& c, std::ostream& err, long guard) {
  if (c.d < 2) return usage_error(err, "d must be an integer >= 2");
  c.e = ((c.e % c.d) + c.d) % c.d;
  if (std::gcd(c.e, c.d) != 1)
    return usage_error(err, "e must be coprime to d");
  if (c.d > guard && !c.force) {
    std::ostringstream os;
    os << "d = " << c.d << " exceeds the guard (" << guard
       << "); pass --force to override";
    return usage_error(err, os.str());
  }
  return 0;
}

int deliver(const Common& c, const std::string& payload, std::ostream& out,
            std::ostream& err) {
  if (c.out_path.empty()) {
    out << payload;
    return 0;
  }
  std::ofstream f(c.out_path);
  if (!f) return usage_error(err, "cannot open output file: " + c.out_path);
  f << payload;
  return 0;
}

// "l,p x l,p x ..." -> weights; the 'x' separator may be surrounded by
// spaces.  Throws std::invalid_argument naming the offending position.
std::vector<Weight> parse_module_expr(const std::string& s) {
  std::vector<Weight> factors;
  size_t pos = 0;
  auto skip_spaces = [&] {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos])))
      ++pos;
  };
  auto fail = [&](const std::string& what) {
    throw std::invalid_argument("module expression: " + what +
                                " at position " + std::to_string(pos));
  };
  auto read_number = [&]() -> long {
    skip_spaces();
    size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
      ++pos;
    if (pos == start) fail("expected a number");
    return std::stol(s.substr(start, pos - start));
  };
  while (true) {
    const long l = read_number();
    skip_spaces();
    if (pos >= s.size() || s[pos] != ',') fail("expected ','");
    ++pos;
    const long p = read_number();
    factors.push_back(Weight{l, p});
    skip_spaces();
    if (pos == s.size()) break;
    if (s[pos] != 'x' && s[pos] != 'X') fail("expected 'x'");
    ++pos;
  }
  return factors;
}

int cmd_verify(Common& c, const std::vector<std::string>& checks,
               std::ostream& out, std::ostream& err) {
  if (int rc = validate(c, err, kHopfGuard)) return rc;
  const Algebra& alg = Algebra::get(c.d, c.e);
  if (c.format == "latex")
    return usage_error(err, "latex format is not available for verify");
  bool all_ok = true;
  std::ostringstream payload;
  for (const auto& name : checks) {
    CheckReport rep;
    if (name == "hopf")
      rep = verify_hopf(alg);
    else if (name == "rmatrix")
      rep = verify_rmatrix(alg);
    else if (name == "twist")
      rep = verify_twist(alg);
    else if (name == "characters")
      rep = verify_one_dim_characters(alg);
    else
      return usage_error(err, "unknown check: " + name +
                                  " (expected hopf, rmatrix, twist, "
                                  "characters)");
    all_ok = all_ok && rep.ok;
    if (c.format == "json")
      payload << to_json(rep).dump() << '\n';
    else
      payload << text(rep);
  }
  if (int rc = deliver(c, payload.str(), out, err)) return rc;
  return all_ok ? 0 : 1;
}

int cmd_fusion(Common& c, const std::string& variant, std::ostream& out,
               std::ostream& err) {
  if (int rc = validate(c, err, kMatrixGuard)) return rc;
  std::string payload;
  if (variant == "full") {
    const FusionRing r = full_ring(c.d);
    payload = c.format == "json"    ? to_json(r).dump(2) + "\n"
              : c.format == "latex" ? latex_table(r)
                                    : text(r);
  } else if (variant == "stable") {
    const StableRing r = stable_ring(c.d);
    payload = c.format == "json"    ? to_json(r).dump(2) + "\n"
              : c.format == "latex" ? latex_table(r)
                                    : text(r);
  } else {
    return usage_error(err,
                       "unknown variant: " + variant + " (full or stable)");
  }
  return deliver(c, payload, out, err);
}

int cmd_smatrix(Common& c, const std::string& variant, std::ostream& out,
                std::ostream& err) {
  if (int rc = validate(c, err, kMatrixGuard)) return rc;
  const Algebra& alg = Algebra::get(c.d, c.e);
  FusionDatum fd;
  if (variant == "stabB") {
    fd = stable_datum(alg);
  } else if (variant == "plus" || variant == "minus") {
    const ClosedST cl = s_t_closed(alg);
    fd.d = c.d;
    fd.labels = cl.labels;
    fd.unit = 0;  // (1, 0) comes first in the weight enumeration
    fd.S = variant == "plus" ? cl.s_plus : cl.s_minus;
    fd.T = variant == "plus" ? cl.t_plus : cl.t_minus;
  } else {
    return usage_error(
        err, "unknown variant: " + variant + " (stabB, plus, or minus)");
  }
  const std::string payload = c.format == "json" ? to_json(fd).dump(2) + "\n"
                              : c.format == "latex" ? latex_datum(fd)
                                                    : text(fd);
  return deliver(c, payload, out, err);
}

int cmd_malle(Common& c, bool axioms, std::ostream& out, std::ostream& err) {
  if (int rc = validate(c, err, kMatrixGuard)) return rc;
  const Algebra& alg = Algebra::get(c.d, c.e);
  const MalleDatum md = malle_datum(alg);
  std::ostringstream payload;
  bool ok = true;
  if (c.format == "json")
    payload << to_json(md).dump(2) << '\n';
  else if (c.format == "latex")
    payload << latex_datum(md);
  else
    payload << text(md);
  if (axioms) {
    const MalleAxiomReport rep = verify_malle_axioms(md);
    ok = rep.axioms.ok;
    if (c.format == "json") {
      nlohmann::json j = to_json(rep.axioms);
      if (rep.st_cubed_scalar)
        j["st_cubed_scalar"] = to_json(*rep.st_cubed_scalar);
      payload << j.dump(2) << '\n';
    } else {
      payload << text(rep.axioms);
      if (rep.st_cubed_scalar)
        payload << "(ST)^3 scalar: " << rep.st_cubed_scalar->to_string()
                << '\n';
    }
  }
  if (int rc = deliver(c, payload.str(), out, err)) return rc;
  return ok ? 0 : 1;
}

int cmd_compare(Common& c, std::ostream& out, std::ostream& err) {
  if (int rc = validate(c, err, kMatrixGuard)) return rc;
  if (c.format == "latex")
    return usage_error(err, "latex format is not available for compare");
  const CompareReport rep = certify_main(c.d, c.e);
  const std::string payload =
      c.format == "json" ? to_json(rep).dump(2) + "\n" : text(rep);
  if (int rc = deliver(c, payload, out, err)) return rc;
  return rep.t_matches && rep.s_matches && rep.discrepancies.empty() ? 0 : 1;
}

int cmd_decompose(Common& c, const std::string& expr, std::ostream& out,
                  std::ostream& err) {
  if (int rc = validate(c, err, kMatrixGuard)) return rc;
  const Algebra& alg = Algebra::get(c.d, c.e);
  std::vector<Weight> factors;
  try {
    factors = parse_module_expr(expr);
  } catch (const std::invalid_argument& ex) {
    return usage_error(err, ex.what());
  }
  for (const Weight& w : factors) {
    if (w.l < 1 || w.l > c.d || w.p < 0 || w.p >= c.d) {
      std::ostringstream os;
      os << "invalid label (" << w.l << "," << w.p << "): need 1 <= l <= d, 0 <= p < d";
      return usage_error(err, os.str());
    }
  }
  Module m = simple_module(alg, factors.front());
  for (size_t i = 1; i < factors.size(); ++i)
    m = tensor_module(alg, m, simple_module(alg, factors[i]));
  const std::map<Weight, long> mult = composition_factors(alg, m);
  std::string payload;
  if (c.format == "json") {
    payload = decomposition_to_json(mult).dump(2) + "\n";
  } else if (c.format == "latex") {
    std::ostringstream os;
    bool first = true;
    for (size_t i = 0; i < factors.size(); ++i)
      os << (i ? " \\otimes " : "") << "m_{" << factors[i].l << ","
         << factors[i].p << "}";
    os << " = ";
    for (const auto& [w, mu] : mult) {
      if (!first) os << " + ";
      if (mu != 1) os << mu << "\\, ";
      os << "m_{" << w.l << "," << w.p << "}";
      first = false;
    }
    if (first) os << "0";
    os << '\n';
    payload = os.str();
  } else {
    payload = text(mult);
  }
  return deliver(c, payload, out, err);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out,
            std::ostream& err) {
  CLI::App app{
      "Exact fusion data for the Drinfeld double of a Taft algebra and for "
      "the cyclic-group Z-fusion datum"};
  app.require_subcommand(1);

  Common c_verify, c_fusion, c_smatrix, c_malle, c_compare, c_decompose;
  std::vector<std::string> checks{"hopf", "rmatrix", "twist", "characters"};
  std::string fusion_variant = "full";
  std::string smatrix_variant = "stabB";
  bool malle_axioms = false;
  std::string module_expr;

  CLI::App* verify =
      app.add_subcommand("verify", "structural identities on the basis");
  add_common(verify, c_verify);
  verify->add_option("--checks", checks,
                     "comma-separated: hopf, rmatrix, twist, characters")
      ->delimiter(',');

  CLI::App* fusion =
      app.add_subcommand("fusion", "tensor-product structure constants");
  add_common(fusion, c_fusion);
  fusion->add_option("--variant", fusion_variant, "full or stable");

  CLI::App* smatrix = app.add_subcommand("smatrix", "S and T matrices");
  add_common(smatrix, c_smatrix);
  smatrix->add_option("--variant", smatrix_variant,
                      "stabB (stable quotient), plus, or minus");

  CLI::App* malle =
      app.add_subcommand("malle", "cyclic-group Z-fusion datum");
  add_common(malle, c_malle);
  malle->add_flag("--axioms", malle_axioms,
                  "also verify the fusion-datum axioms");

  CLI::App* compare =
      app.add_subcommand("compare", "certify the two data coincide");
  add_common(compare, c_compare);

  CLI::App* decompose =
      app.add_subcommand("decompose", "composition factors of a tensor");
  add_common(decompose, c_decompose);
  decompose
      ->add_option("--module", module_expr,
                   "tensor expression, e.g. \"2,0x4,0\"")
      ->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  try {
    if (verify->parsed()) return cmd_verify(c_verify, checks, out, err);
    if (fusion->parsed()) return cmd_fusion(c_fusion, fusion_variant, out, err);
    if (smatrix->parsed())
      return cmd_smatrix(c_smatrix, smatrix_variant, out, err);
    if (malle->parsed()) return cmd_malle(c_malle, malle_axioms, out, err);
    if (compare->parsed()) return cmd_compare(c_compare, out, err);
    if (decompose->parsed())
      return cmd_decompose(c_decompose, module_expr, out, err);
  } catch (const std::invalid_argument& ex) {
    return usage_error(err, ex.what());
  } catch (const std::exception& ex) {
    err << "check failure: " << ex.what() << '\n';
    return 1;
  }
  return usage_error(err, "no command given");
}

int run_cli(const std::vector<std::string>& args, std::ostream& out,
            std::ostream& err) {
  std::vector<std::string> full;
  full.reserve(args.size() + 1);
  full.push_back("taftdouble");
  full.insert(full.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  argv.reserve(full.size());
  for (const auto& s : full) argv.push_back(s.c_str());
  return run_cli(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace taft
