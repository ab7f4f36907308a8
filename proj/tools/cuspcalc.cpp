#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <unistd.h>

#include "cuspcalc/json_io.hpp"
#include "cuspcalc/verifier.hpp"

using namespace cuspcalc;

namespace {

bool use_color() {
  const char* env = std::getenv("CUSPCALC_COLOR");
  if (env && std::string(env) == "never") return false;
  return isatty(STDOUT_FILENO);
}

std::string paint(const std::string& text, const char* code) {
  static const bool color = use_color();
  if (!color) return text;
  return std::string("\033[") + code + "m" + text + "\033[0m";
}

std::string verdict_str(const TheoremVerdict& v) {
  if (v.status == TheoremVerdict::Status::pass) return paint("pass", "32");
  if (v.status == TheoremVerdict::Status::fail) return paint("fail", "31");
  return "n/a";
}

CuspSpec parse_cusp(const std::string& arg) {
  CuspSpec cusp;
  std::string entry;
  for (std::size_t i = 0; i <= arg.size(); ++i) {
    if (i == arg.size() || arg[i] == ',') {
      if (entry.empty()) throw std::invalid_argument("bad cusp '" + arg + "'; expected e.g. 2,2,3");
      cusp.multiplicities.emplace_back(Int(entry));
      entry.clear();
    } else if (std::isdigit(static_cast<unsigned char>(arg[i]))) {
      entry += arg[i];
    } else {
      throw std::invalid_argument("bad cusp '" + arg + "'; expected e.g. 2,2,3");
    }
  }
  return cusp;
}

CurveSpec spec_from_options(const std::string& input, long long degree, const std::vector<std::string>& cusps) {
  if (!input.empty()) {
    if (degree >= 0 || !cusps.empty()) {
      throw std::invalid_argument("--input excludes --degree/--cusp");
    }
    std::ifstream in(input);
    if (!in) throw std::invalid_argument("cannot open " + input);
    nlohmann::json j;
    try {
      in >> j;
    } catch (const nlohmann::json::exception& e) {
      throw std::invalid_argument(input + ": " + e.what());
    }
    return curve_from_json(j);
  }
  if (degree < 0) throw std::invalid_argument("--degree is required without --input");
  CurveSpec spec;
  spec.degree = degree;
  for (const std::string& c : cusps) spec.cusps.push_back(parse_cusp(c));
  return spec;
}

void print_report_text(const Report& r) {
  std::cout << "curve: " << (r.spec.name.empty() ? "(unnamed)" : r.spec.name) << "  degree " << r.spec.degree
            << "  cusps";
  for (const CuspSpec& c : r.spec.cusps) std::cout << " " << c.to_string();
  std::cout << "\n";
  std::cout << "(C')^2 = " << r.c_prime_sq << "   D^2 = " << r.d_sq << "   K(K+D) = " << r.kkd_value << "\n";
  for (std::size_t k = 0; k < r.cusps.size(); ++k) {
    const CuspSummary& c = r.cusps[k];
    std::cout << "cusp " << k + 1 << ": h = " << c.h << ", eta = " << c.eta << ", omega = " << c.omega
              << ", delta = " << c.delta << ", stages";
    for (int e : c.eta_per_stage) std::cout << " " << e;
    std::cout << (c.cres.pass ? "" : "  [stage identities FAIL: " + c.cres.detail + "]") << "\n";
  }
  if (r.zariski.applicable) {
    std::cout << "N =";
    for (const auto& [id, q] : r.zariski.negative_part) std::cout << " " << rat_to_string(q) + " " + id;
    std::cout << "\nH^2 = " << rat_to_string(r.zariski.h_squared) << "\n";
  } else {
    std::cout << "Zariski decomposition: not applicable (" << r.zariski.reason << ")\n";
  }
  std::cout << "Theorem 1 (bound 7-3n = " << r.bound_rhs << "): " << verdict_str(r.theorem1) << "  "
            << r.theorem1.detail << "\n";
  std::cout << "Prop. (double entry): " << verdict_str(r.prop_n) << "  " << r.prop_n.detail << "\n";
  std::cout << "Theorem 2 (quartic rigidity): " << verdict_str(r.theorem2) << "  " << r.theorem2.detail << "\n";
  std::cout << (r.all_pass() ? paint("all checks pass", "32") : paint("checks FAILED", "31")) << "\n";
}

int run_analyze(const CurveSpec& spec, const std::string& format) {
  Report r = analyze(spec);
  if (format == "json") {
    std::cout << report_to_json(r).dump(2) << "\n";
  } else {
    print_report_text(r);
  }
  return r.all_pass() ? 0 : 2;
}

int run_catalog(const std::string& format) {
  auto curves = catalog();
  if (format == "json") {
    nlohmann::json j = nlohmann::json::array();
    for (const CurveSpec& c : curves) j.push_back(curve_to_json(c));
    std::cout << j.dump(2) << "\n";
    return 0;
  }
  for (const CurveSpec& c : curves) {
    std::cout << c.name << ": degree " << c.degree;
    for (const CuspSpec& cusp : c.cusps) std::cout << " " << cusp.to_string();
    std::cout << "\n";
  }
  return 0;
}

// Random spot checks of the chain and stage identities, rerun on every
// verify invocation on top of the catalog table.
std::string property_suite() {
  std::mt19937 rng(20240915);
  std::uniform_int_distribution<int> len(1, 8), entry(2, 6);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<Int> w;
    int r = len(rng);
    for (int i = 0; i < r; ++i) w.emplace_back(entry(rng));
    LinearChain a{std::move(w)};
    if (discriminant(a) != discriminant(transpose(a))) return "d(A) != d(tA) on " + a.to_string();
    if (inverse_inductance(inductance(a)) != a) return "e-roundtrip failed on " + a.to_string();
    if (adjoint(adjoint(a)) != a) return "A** != A on " + a.to_string();
    if (discriminant(adjoint(a)) != discriminant(a)) return "d(A*) != d(A) on " + a.to_string();
  }
  return "";
}

int run_verify(const std::string& format) {
  auto curves = catalog();
  std::string first_failure = property_suite();
  nlohmann::json rows = nlohmann::json::array();
  bool all = first_failure.empty();

  for (const CurveSpec& spec : curves) {
    Report r = analyze(spec);
    if (!r.all_pass() && first_failure.empty()) {
      std::string why = !r.theorem1.ok()   ? "Theorem 1"
                        : !r.prop_n.ok()   ? "double-entry identity"
                        : !r.theorem2.ok() ? "Theorem 2"
                                           : "structure checks";
      first_failure = spec.name + ": " + why;
    }
    all = all && r.all_pass();
    if (format == "json") {
      rows.push_back(report_to_json(r));
    } else {
      std::string verdict = r.all_pass() ? paint("pass", "32") : paint("FAIL", "31");
      std::cout << spec.name << "\t(C')^2 = " << r.c_prime_sq << "\tK(K+D) = " << r.kkd_value
                << "\tbound = " << r.bound_rhs << "\t" << verdict << "\n";
    }
  }

  if (format == "json") {
    nlohmann::json out;
    out["curves"] = std::move(rows);
    out["first_failure"] = first_failure;
    out["all_pass"] = all;
    std::cout << out.dump(2) << "\n";
  } else if (all) {
    std::cout << curves.size() << " curves, all checks pass\n";
  } else {
    std::cout << "FAILED: " << first_failure << "\n";
  }
  return all ? 0 : 1;
}

int run_chain(const std::string& subop, const std::vector<std::string>& args) {
  auto need = [&](std::size_t n) {
    if (args.size() != n) {
      throw std::invalid_argument("chain " + subop + " takes " + std::to_string(n) + " argument(s)");
    }
  };
  if (subop == "disc") {
    need(1);
    std::cout << discriminant(LinearChain::parse(args[0])) << "\n";
  } else if (subop == "ind") {
    need(1);
    std::cout << rat_to_string(inductance(LinearChain::parse(args[0]))) << "\n";
  } else if (subop == "inv") {
    need(1);
    std::cout << inverse_inductance(rat_from_string(args[0])).to_string() << "\n";
  } else if (subop == "adjoint") {
    need(1);
    std::cout << adjoint(LinearChain::parse(args[0])).to_string() << "\n";
  } else if (subop == "star") {
    need(2);
    std::cout << star(LinearChain::parse(args[0]), LinearChain::parse(args[1])).to_string() << "\n";
  } else {
    throw std::invalid_argument("unknown chain operation '" + subop + "'; expected disc|ind|inv|adjoint|star");
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact invariants of rational cuspidal plane curves"};
  app.require_subcommand(1);
  std::string format = "text";
  app.add_option("--format", format, "output format")->check(CLI::IsMember({"text", "json"}));

  auto* chain_cmd = app.add_subcommand("chain", "linear-chain algebra");
  std::string subop;
  chain_cmd->add_option("op", subop, "disc|ind|inv|adjoint|star")->required();
  // chain arguments stay raw: CLI11 would otherwise unpack [2,2,3]
  chain_cmd->allow_extras();

  auto* analyze_cmd = app.add_subcommand("analyze", "full report for one curve");
  long long degree = -1;
  std::vector<std::string> cusps;
  std::string input;
  analyze_cmd->add_option("--degree", degree, "curve degree");
  analyze_cmd->add_option("--cusp", cusps, "multiplicity sequence, e.g. 2,2,3 (repeatable)");
  analyze_cmd->add_option("--input", input, "JSON curve spec file");

  auto* catalog_cmd = app.add_subcommand("catalog", "list the built-in curves");
  auto* verify_cmd = app.add_subcommand("verify", "check every catalog curve and the property suites");

  CLI11_PARSE(app, argc, argv);

  try {
    if (chain_cmd->parsed()) return run_chain(subop, chain_cmd->remaining());
    if (analyze_cmd->parsed()) return run_analyze(spec_from_options(input, degree, cusps), format);
    if (catalog_cmd->parsed()) return run_catalog(format);
    if (verify_cmd->parsed()) return run_verify(format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 0;
}
