#include <CLI11.hpp>
#include <json.hpp>

#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "dunkl/algebra.hpp"
#include "dunkl/hermite.hpp"
#include "dunkl/intertwiner.hpp"
#include "dunkl/ops.hpp"
#include "dunkl/quadrature.hpp"
#include "verify.hpp"

namespace {

using dunkl::MuParam;
using dunkl::Poly;
using dunkl::Rational;
using nlohmann::json;

constexpr int kExitOk = 0;
constexpr int kExitVerifyFailed = 1;
constexpr int kExitBadArgs = 2;

std::vector<Rational> parse_rational_list(const std::string& csv) {
  std::vector<Rational> out;
  size_t pos = 0;
  while (true) {
    const size_t comma = csv.find(',', pos);
    const std::string tok =
        comma == std::string::npos ? csv.substr(pos) : csv.substr(pos, comma - pos);
    out.push_back(Rational::from_string(tok));
    if (comma == std::string::npos) break;
    pos = comma + 1;
  }
  return out;
}

std::vector<std::string> poly_strings(const Poly& p) {
  std::vector<std::string> out;
  if (p.is_zero()) {
    out.push_back("0");
    return out;
  }
  for (const Rational& c : p.coeffs()) out.push_back(c.str());
  return out;
}

dunkl::Realization parse_method(const std::string& m) {
  if (m == "monomial") return dunkl::Realization::Monomial;
  if (m == "hermite") return dunkl::Realization::Hermite;
  if (m == "boson") return dunkl::Realization::Boson;
  throw std::invalid_argument("unknown method '" + m + "' (expected monomial|hermite|boson)");
}

int cmd_hermite(int n, const std::optional<std::string>& mu_str) {
  if (n < 0) throw std::invalid_argument("--n must be >= 0");
  Poly p;
  if (mu_str) {
    const MuParam mu(Rational::from_string(*mu_str));
    p = dunkl::generalized_hermite(mu, static_cast<unsigned>(n));
  } else {
    p = dunkl::hermite(static_cast<unsigned>(n));
  }
  std::cout << p.str() << "\n";
  return kExitOk;
}

int cmd_intertwine(const std::string& mu_str, const std::string& method_str,
                   const std::string& poly_str, bool as_json) {
  const MuParam mu(Rational::from_string(mu_str));
  const dunkl::Realization method = parse_method(method_str);
  const Poly p = Poly::from_string(poly_str);
  const Poly image = dunkl::v_mu_apply(mu, p, method);
  if (as_json) {
    json j;
    j["schema_version"] = 1;
    j["mu"] = mu.value().str();
    j["method"] = method_str;
    j["input"] = poly_strings(p);
    j["output"] = poly_strings(image);
    std::cout << j.dump() << "\n";
  } else {
    std::cout << image.str() << "\n";
  }
  return kExitOk;
}

int cmd_apply(const std::string& op_name, const std::optional<std::string>& mu_str,
              const std::string& poly_str) {
  std::optional<MuParam> mu;
  if (mu_str) mu.emplace(Rational::from_string(*mu_str));
  const dunkl::OperatorTag tag = dunkl::OperatorTag::from_name(op_name, std::move(mu));
  std::cout << dunkl::apply(tag, Poly::from_string(poly_str)).str() << "\n";
  return kExitOk;
}

int cmd_verify(const std::string& suite, int max_degree, const std::optional<std::string>& mus) {
  std::vector<Rational> samples;
  if (mus) samples = parse_rational_list(*mus);
  const dunkl::cli::VerifyReport report = dunkl::cli::run_verify(suite, max_degree, samples);

  json j;
  j["schema_version"] = 1;
  j["suite"] = report.suite;
  j["cases_run"] = report.cases_run;
  j["failures"] = json::array();
  for (const auto& f : report.failures)
    j["failures"].push_back({{"case_id", f.case_id},
                             {"inputs", f.inputs},
                             {"expected", f.expected},
                             {"actual", f.actual}});
  j["wall_time"] = report.wall_time;
  std::cout << j.dump(2) << "\n";
  return report.failures.empty() ? kExitOk : kExitVerifyFailed;
}

int cmd_quadrature(double mu, int nodes) {
  const dunkl::QuadRule rule = dunkl::build_rule(mu, nodes);
  char buf[64];
  for (size_t i = 0; i < rule.nodes.size(); ++i) {
    std::snprintf(buf, sizeof buf, "%.17g,%.17g", rule.nodes[i], rule.weights[i]);
    std::cout << buf << "\n";
  }
  return kExitOk;
}

int cmd_compare(const std::string& mu_str, int max_degree, const std::string& grid_csv) {
  const MuParam mu(Rational::from_string(mu_str));
  std::vector<double> grid;
  for (const Rational& g : parse_rational_list(grid_csv)) grid.push_back(g.to_double());
  const dunkl::CompareReport report = dunkl::compare_realizations(mu, max_degree, grid);

  json j;
  j["schema_version"] = 1;
  j["mu"] = report.mu;
  j["max_degree"] = report.degree_cap;
  j["nodes"] = report.nodes;
  j["grid"] = report.grid;
  j["worst"] = {{"rel_error", report.worst.rel_error},
                {"degree", report.worst.degree},
                {"basis", report.worst.hermite_basis ? "hermite" : "monomial"},
                {"x0", report.worst.x0}};
  j["per_degree"] = json::array();
  for (const auto& row : report.per_degree)
    j["per_degree"].push_back(
        {{"degree", row.degree}, {"monomial", row.monomial}, {"hermite", row.hermite}});
  std::cout << j.dump(2) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact one-dimensional Dunkl calculus: operators, Hermite families,\n"
               "and the intertwining operator in four cross-checked realizations"};
  app.require_subcommand(1);

  // hermite / genhermite
  int h_n = 0;
  std::optional<std::string> h_mu;
  auto* sc_hermite =
      app.add_subcommand("hermite", "print H_n (or the generalized H^mu_n with --mu)");
  sc_hermite->alias("genhermite");
  sc_hermite->add_option("--n", h_n, "polynomial index n >= 0")->required();
  sc_hermite->add_option("--mu", h_mu, "deformation parameter as a rational p/q");

  // intertwine
  std::string i_mu, i_method, i_poly;
  bool i_json = false;
  auto* sc_inter = app.add_subcommand("intertwine", "apply the intertwining operator V_mu");
  sc_inter->add_option("--mu", i_mu, "rational mu")->required();
  sc_inter->add_option("--method", i_method, "monomial|hermite|boson")->required();
  sc_inter->add_option("--poly", i_poly, "comma-separated coefficients, low to high degree")
      ->required();
  sc_inter->add_flag("--json", i_json, "emit a JSON object instead of the coefficient list");

  // apply
  std::string a_op, a_poly;
  std::optional<std::string> a_mu;
  auto* sc_apply = app.add_subcommand("apply", "apply a named operator to a polynomial");
  sc_apply
      ->add_option("--op", a_op,
                   "derivative|mulx|reflection|projector|dunkl|number|asquared|bop|hamiltonian")
      ->required();
  sc_apply->add_option("--mu", a_mu, "rational mu (required by dunkl and hamiltonian)");
  sc_apply->add_option("--poly", a_poly, "comma-separated coefficients")->required();

  // verify
  std::string v_suite = "all";
  int v_max_degree = 20;
  std::optional<std::string> v_mus;
  auto* sc_verify = app.add_subcommand("verify", "run an identity suite and print a JSON report");
  sc_verify->add_option("--suite", v_suite, "lemmas|basis|intertwine|oscillator|quadrature|all");
  sc_verify->add_option("--max-degree", v_max_degree, "degree/index sweep bound (default 20)");
  sc_verify->add_option("--mu-samples", v_mus,
                        "comma-separated rational mu values (default: certification set "
                        "sized to max-degree; quadrature sweeps cap the degree at 20)");

  // quadrature
  double q_mu = 0;
  int q_nodes = 0;
  bool q_emit = false;
  auto* sc_quad =
      app.add_subcommand("quadrature", "emit a Gauss-Jacobi rule as node,weight CSV lines");
  sc_quad->add_option("--mu", q_mu, "mu > 0")->required();
  sc_quad->add_option("--nodes", q_nodes, "number of nodes >= 1")->required();
  sc_quad->add_flag("--emit-rule", q_emit, "emit the rule (the default and only output)");

  // compare
  std::string c_mu, c_grid = "0,1/2,-1/2,1,-1";
  int c_max_degree = 0;
  auto* sc_cmp = app.add_subcommand(
      "compare", "compare the integral realization against the exact one, as JSON");
  sc_cmp->add_option("--mu", c_mu, "rational mu > 0")->required();
  sc_cmp->add_option("--max-degree", c_max_degree, "basis degree cap")->required();
  sc_cmp->add_option("--grid", c_grid, "comma-separated rational evaluation points");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitBadArgs;
  }

  try {
    if (app.got_subcommand(sc_hermite)) return cmd_hermite(h_n, h_mu);
    if (app.got_subcommand(sc_inter)) return cmd_intertwine(i_mu, i_method, i_poly, i_json);
    if (app.got_subcommand(sc_apply)) return cmd_apply(a_op, a_mu, a_poly);
    if (app.got_subcommand(sc_verify)) return cmd_verify(v_suite, v_max_degree, v_mus);
    if (app.got_subcommand(sc_quad)) return cmd_quadrature(q_mu, q_nodes);
    if (app.got_subcommand(sc_cmp)) return cmd_compare(c_mu, c_max_degree, c_grid);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitBadArgs;
  }
  return kExitBadArgs;
}
