#include "dendra/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <json.hpp>
#include <sstream>

#include "dendra/errors.hpp"
#include "dendra/lyndon.hpp"

namespace dendra {

namespace {

using Json = nlohmann::ordered_json;

Json report_object(const SuiteReport& report) {
  Json params = Json::object();
  for (const auto& [k, v] : report.params) params[k] = v;
  Json out;
  out["suite"] = report.suite;
  out["structure"] = report.structure;
  out["params"] = params;
  out["status"] = report.verdict.passed() ? "pass" : "fail";
  out["checks"] = report.verdict.checks;
  if (report.verdict.failure) {
    const auto& f = *report.verdict.failure;
    out["counterexample"] = Json{{"label", f.label}, {"lhs", f.lhs}, {"rhs", f.rhs}, {"diff", f.diff}};
  } else {
    out["counterexample"] = nullptr;
  }
  out["elapsed_ms"] = report.elapsed_ms;
  return out;
}

std::optional<Scalar> parse_theta(const std::string& text) {
  if (text.empty()) return std::nullopt;
  try {
    return parse_scalar(text);
  } catch (const std::invalid_argument& e) {
    throw UsageError(std::string("--theta: ") + e.what());
  }
}

int exit_code(const Verdict& v) { return v.passed() ? kExitPass : kExitFail; }

}  // namespace

std::string report_json(const SuiteReport& report) { return report_object(report).dump(); }

std::string report_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite: " << report.suite << "\n";
  os << "structure: " << report.structure << "\n";
  os << "params:";
  for (const auto& [k, v] : report.params) os << " " << k << "=" << v;
  os << "\n";
  os << "status: " << (report.verdict.passed() ? "pass" : "fail") << "\n";
  os << "checks: " << report.verdict.checks << "\n";
  if (report.verdict.failure) {
    const auto& f = *report.verdict.failure;
    os << "counterexample: " << f.label << "\n";
    os << "  lhs:  " << f.lhs << "\n";
    os << "  rhs:  " << f.rhs << "\n";
    os << "  diff: " << f.diff << "\n";
  }
  os << "elapsed_ms: " << report.elapsed_ms << "\n";
  return os.str();
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app("Exact verification of dendriform identities", "dendra");
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list-suites", "list the verification suites");

  std::string suite;
  std::string structure_text = "shuffle";
  std::string theta_text;
  std::string format = "text";
  SuiteParams params;
  int n = 0;
  bool no_timing = false;
  auto* verify = app.add_subcommand("verify", "run one suite on one structure");
  verify->add_option("--suite", suite, "suite name (see list-suites)")->required();
  verify->add_option("--structure", structure_text, "structure selection string")->capture_default_str();
  verify->add_option("--n", n, "size parameter of the S_n and word suites");
  verify->add_option("--degree", params.degree, "degree bound")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--cap", params.cap, "series cap")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--theta", theta_text, "Rota-Baxter weight, overrides the structure string");
  verify->add_option("--format", format, "report format")->check(CLI::IsMember({"text", "json"}))->capture_default_str();
  verify->add_option("--jobs", params.jobs, "worker threads for S_n sweeps")->capture_default_str()->check(CLI::PositiveNumber);
  verify->add_option("--seed", params.seed, "seed of the random elements")->capture_default_str();
  verify->add_flag("--no-timing", no_timing, "report elapsed_ms as 0");

  int census_n = 8;
  int census_jobs = 1;
  std::string census_format = "text";
  auto* census = app.add_subcommand("census", "count permutations by Lyndon sequence");
  census->add_option("--n", census_n, "permutation size")->capture_default_str()->check(CLI::PositiveNumber);
  census->add_option("--jobs", census_jobs, "worker threads")->capture_default_str()->check(CLI::PositiveNumber);
  census->add_option("--format", census_format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  std::string beta_text;
  auto* pbw = app.add_subcommand("pbw", "expand x1...xn over Lyn(beta)");
  pbw->add_option("--beta", beta_text, "one-line permutation")->required();

  std::string magnus_structure = "shuffle";
  int magnus_cap = 6;
  bool emit_omega = false;
  std::uint64_t magnus_seed = 42;
  std::string magnus_theta;
  auto* magnus = app.add_subcommand("magnus", "Magnus expansion of the power-sum series");
  magnus->add_option("--structure", magnus_structure)->capture_default_str();
  magnus->add_option("--cap", magnus_cap)->capture_default_str()->check(CLI::PositiveNumber);
  magnus->add_option("--seed", magnus_seed)->capture_default_str();
  magnus->add_option("--theta", magnus_theta);
  magnus->add_flag("--emit-omega", emit_omega, "print Omega^(1..cap)");

  std::string expand_structure = "shuffle";
  std::string op;
  int expand_n = 3;
  std::string element;
  std::uint64_t expand_seed = 42;
  std::string expand_theta;
  auto* expand_cmd = app.add_subcommand("expand", "print one power sum or expansion");
  expand_cmd->add_option("--structure", expand_structure)->capture_default_str();
  expand_cmd->add_option("--op", op)->required()->check(CLI::IsMember(expand_operations()));
  expand_cmd->add_option("--n", expand_n)->capture_default_str()->check(CLI::PositiveNumber);
  expand_cmd->add_option("--element", element, "element a, e.g. \"x1 + 2·x2.x1\"");
  expand_cmd->add_option("--seed", expand_seed)->capture_default_str();
  expand_cmd->add_option("--theta", expand_theta);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitPass : kExitUsage;
  }

  try {
    if (*list) {
      for (const auto& info : suite_catalogue()) out << info.name << "\t" << info.description << "\n";
      return kExitPass;
    }
    if (*verify) {
      if (verify->count("--n")) params.n = n;
      const AnyStructure s = parse_structure(structure_text, parse_theta(theta_text));
      SuiteReport report = run_suite(suite, s, params);
      if (no_timing) report.elapsed_ms = 0;
      out << (format == "json" ? report_json(report) + "\n" : report_text(report));
      return exit_code(report.verdict);
    }
    if (*census) {
      const Census c = lyndon_census(census_n, 8, census_jobs);
      if (census_format == "json") {
        Json rows = Json::array();
        for (const auto& row : c.rows) {
          rows.push_back(Json{{"composition", row.composition}, {"count", row.count}, {"expected", to_string(row.expected)}});
        }
        out << Json{{"n", c.n}, {"rows", rows}, {"total", c.total}, {"status", c.consistent() ? "pass" : "fail"}}.dump()
            << "\n";
      } else {
        out << "composition\tcount\tn!/(i1(i1+i2)...)\n";
        for (const auto& row : c.rows) {
          std::string comp;
          for (int part : row.composition) comp += (comp.empty() ? "(" : ",") + std::to_string(part);
          out << comp << ")\t" << row.count << "\t" << to_string(row.expected) << "\n";
        }
        out << "total\t" << c.total << "\n";
        out << "status: " << (c.consistent() ? "pass" : "fail") << "\n";
      }
      return c.consistent() ? kExitPass : kExitFail;
    }
    if (*pbw) {
      Permutation beta;
      try {
        beta = parse_permutation(beta_text);
      } catch (const std::invalid_argument& e) {
        throw UsageError(std::string("--beta: ") + e.what());
      }
      const int m = beta.size();
      std::string lhs;
      for (int i = 1; i <= m; ++i) lhs += (i > 1 ? "." : "") + std::string("x") + std::to_string(i);
      std::vector<std::string> terms;
      for (const auto& sigma : lyn_set(beta)) terms.push_back(render_bracket_product(pbw_blocks(beta, sigma)));
      out << lhs << " =";
      for (std::size_t i = 0; i < terms.size(); ++i) out << (i ? " + " : " ") << terms[i];
      out << "\n";
      std::vector<Letter> letters(static_cast<std::size_t>(m));
      for (int i = 0; i < m; ++i) letters[static_cast<std::size_t>(i)] = i + 1;
      const bool ok = pbw_expansion(beta) == word_elem(Word(letters));
      out << "terms: " << terms.size() << "\n";
      out << "status: " << (ok ? "pass" : "fail") << "\n";
      return ok ? kExitPass : kExitFail;
    }
    if (*magnus) {
      const AnyStructure s = parse_structure(magnus_structure, parse_theta(magnus_theta));
      SuiteParams mp;
      mp.cap = magnus_cap;
      mp.seed = magnus_seed;
      const SuiteReport report = run_suite("magnus", s, mp);
      if (emit_omega) {
        const auto omega = omega_coefficients(s, magnus_cap, magnus_seed);
        for (std::size_t i = 0; i < omega.size(); ++i) out << "Ω^(" << i + 1 << ") = " << omega[i] << "\n";
      }
      out << report_text(report);
      return exit_code(report.verdict);
    }
    if (*expand_cmd) {
      const AnyStructure s = parse_structure(expand_structure, parse_theta(expand_theta));
      const std::optional<std::string> given = expand_cmd->count("--element") ? std::optional(element) : std::nullopt;
      out << expand(s, op, expand_n, given, expand_seed) << "\n";
      return kExitPass;
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BoundExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const RBWeightCheckFailure& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace dendra
