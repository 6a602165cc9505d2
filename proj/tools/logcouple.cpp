// logcouple: command-line front end for the Γ_log engine.
//
//   logcouple eval "psi(x)" --at "[0,0,5]"
//   logcouple normalize "p(s(x))" --format json
//   logcouple solve "s(x) < [1,1,1]" --psi-names
//   logcouple eventual "d2(x) + [0,1]"
//   logcouple check --suite all --seed 42 --samples 10000
//   logcouple closure 50
//
//   logcouple normalize -- "-(x) + s(x)"     input starting with '-' goes after --
//
// Exit status: 0 success, 1 a suite reported failures, 2 usage or input error.

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <variant>

#include <CLI11.hpp>

#include "logcouple/logcouple.hpp"
#include "logcouple/oracle/closure.hpp"
#include "logcouple/oracle/suites.hpp"

namespace {

using namespace logcouple;

constexpr int kOk = 0;
constexpr int kSuiteFailure = 1;
constexpr int kUsage = 2;

struct Options {
  std::string input;
  std::string at;
  std::string format = "text";
  bool psi_names = false;
  std::uint64_t seed = 0;
  std::size_t samples = 10000;
  std::string suite = "all";
  std::size_t max_level = 40;
  bool timing = false;
  std::size_t n_max = 50;
};

bool json_output(const Options& o) { return o.format == "json"; }
TextStyle style(const Options& o) { return TextStyle{o.psi_names}; }

void print_json(const nlohmann::json& j) { std::cout << j.dump(2) << '\n'; }

int run_eval(const Options& o) {
  const Parsed parsed = parse(o.input);
  std::optional<ExtValue> at;
  if (!o.at.empty()) at = parse_ext_value(o.at);
  const bool needs_x = std::holds_alternative<Term>(parsed)
                           ? std::get<Term>(parsed).has_var()
                           : [&] {
                               for (const auto& [l, r] : std::get<Condition>(parsed).atoms()) {
                                 if (l.has_var() || r.has_var()) return true;
                               }
                               return false;
                             }();
  if (needs_x && !at) {
    std::cerr << "error: the input mentions x; give its value with --at\n";
    return kUsage;
  }
  const ExtValue x = at.value_or(ExtValue{});
  if (const auto* t = std::get_if<Term>(&parsed)) {
    const ExtValue v = eval(*t, x);
    if (json_output(o)) {
      print_json({{"term", to_string(*t)}, {"value", to_json(v)}});
    } else {
      std::cout << render(v, style(o)) << '\n';
    }
  } else {
    const auto& c = std::get<Condition>(parsed);
    const bool v = eval_condition(c, x);
    if (json_output(o)) {
      print_json({{"condition", to_string(c)}, {"value", v}});
    } else {
      std::cout << (v ? "true" : "false") << '\n';
    }
  }
  return kOk;
}

int run_normalize(const Options& o) {
  const PiecewiseSFunction f = term_to_piecewise(parse_term(o.input));
  if (json_output(o)) {
    print_json(to_json(f));
  } else {
    std::cout << render(f, style(o));
  }
  return kOk;
}

int run_solve(const Options& o) {
  const PsiSubset set = solve(parse_condition(o.input));
  if (json_output(o)) {
    print_json(to_json(set));
  } else {
    std::cout << render(set, style(o)) << '\n';
  }
  return kOk;
}

int run_eventual(const Options& o) {
  const EventualForm f = eventual_form(parse_term(o.input));
  if (json_output(o)) {
    print_json(to_json(f));
    return kOk;
  }
  if (f.is_constant()) {
    std::cout << "constant " << render(f.constant().value, style(o));
  } else {
    std::cout << "affine " << to_string(f.affine().q) << "*x + " << to_string(f.affine().beta);
  }
  std::cout << " for x > " << to_string(f.threshold) << '\n';
  return kOk;
}

int run_check(const Options& o) {
  oracle::GenConfig cfg;
  cfg.seed = o.seed;
  cfg.samples = o.samples;
  cfg.max_level = o.max_level;
  if (o.suite != "all") (void)oracle::find_suite(o.suite);  // unknown names are usage errors
  const auto reports = oracle::run_suites(o.suite, cfg);
  bool ok = true;
  for (const auto& r : reports) ok = ok && r.ok();
  if (json_output(o)) {
    nlohmann::json list = nlohmann::json::array();
    for (const auto& r : reports) list.push_back(oracle::to_json(r, o.timing));
    print_json({{"seed", o.seed}, {"samples", o.samples}, {"max_level", o.max_level}, {"ok", ok}, {"reports", list}});
  } else {
    for (const auto& r : reports) {
      std::cout << (r.ok() ? "pass  " : "FAIL  ") << r.suite << "  " << r.cases << " cases, " << r.failures.size()
                << " failures";
      if (o.timing) std::cout << ", " << static_cast<long long>(r.elapsed_ms) << " ms";
      std::cout << '\n';
      for (const auto& f : r.failures) {
        std::cout << "    " << f.message << '\n';
        for (const auto& [k, v] : f.inputs) std::cout << "      " << k << " = " << v << '\n';
      }
    }
  }
  return ok ? kOk : kSuiteFailure;
}

int run_closure(const Options& o) {
  const auto chain = oracle::closure_chain(o.n_max);
  if (json_output(o)) {
    nlohmann::json steps = nlohmann::json::array();
    for (std::size_t k = 0; k < chain.steps.size(); ++k) {
      const auto& s = chain.steps[k];
      steps.push_back({{"k", s.k},
                       {"beta", to_json(chain.beta[k])},
                       {"alpha_next", to_json(chain.alpha[k])},
                       {"succ", s.succ_ok},
                       {"integral", s.integral_ok},
                       {"psi", s.psi_ok},
                       {"chi", s.chi_ok},
                       {"expected", s.expected_ok}});
    }
    print_json({{"n_max", o.n_max}, {"ok", chain.all()}, {"steps", steps}});
  } else {
    const TextStyle st = style(o);
    for (std::size_t k = 0; k < chain.steps.size(); ++k) {
      const auto& s = chain.steps[k];
      std::cout << "k=" << s.k << "  beta=" << render(ExtValue(chain.beta[k]), st)
                << "  alpha=" << to_string(chain.alpha[k]) << "  " << (s.all() ? "ok" : "MISMATCH") << '\n';
    }
    std::cout << (chain.all() ? "all relations hold" : "relation failure") << '\n';
  }
  return chain.all() ? kOk : kSuiteFailure;
}

void add_output_flags(CLI::App* cmd, Options& o) {
  cmd->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  cmd->add_flag("--psi-names", o.psi_names, "Print Psi-elements as psi_n");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact computation in the asymptotic couple Gamma_log over Q"};
  app.require_subcommand(1);
  Options o;

  auto* eval_cmd = app.add_subcommand("eval", "Evaluate a term or condition at one point");
  eval_cmd->add_option("input", o.input, "Term or condition in x")->required();
  eval_cmd->add_option("--at", o.at, "Value of x: a vector literal such as [1,-1/2] or inf");
  add_output_flags(eval_cmd, o);

  auto* normalize_cmd = app.add_subcommand("normalize", "Piecewise s-function of a term on Psi");
  normalize_cmd->add_option("input", o.input, "Term in x")->required();
  add_output_flags(normalize_cmd, o);

  auto* solve_cmd = app.add_subcommand("solve", "Subset of Psi where a condition holds");
  solve_cmd->add_option("input", o.input, "Condition in x")->required();
  add_output_flags(solve_cmd, o);

  auto* eventual_cmd = app.add_subcommand("eventual", "Form of a term for large x in Gamma");
  eventual_cmd->add_option("input", o.input, "Term in x")->required();
  add_output_flags(eventual_cmd, o);

  auto* check_cmd = app.add_subcommand("check", "Run property suites");
  check_cmd->add_option("--suite", o.suite, "Suite name, or all");
  check_cmd->add_option("--seed", o.seed, "Random seed");
  check_cmd->add_option("--samples", o.samples, "Cases per suite (heavy suites run a tenth)")
      ->check(CLI::PositiveNumber);
  check_cmd->add_option("--max-level", o.max_level, "Highest Psi-level scanned by pointwise oracles");
  check_cmd->add_flag("--timing", o.timing, "Report elapsed time per suite (output is then not reproducible)");
  add_output_flags(check_cmd, o);

  auto* closure_cmd = app.add_subcommand("closure", "Integration closure chain from e_0");
  closure_cmd->add_option("n_max", o.n_max, "Number of steps")->check(CLI::PositiveNumber);
  add_output_flags(closure_cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    (void)app.exit(e);
    return kUsage;
  }

  try {
    if (eval_cmd->parsed()) return run_eval(o);
    if (normalize_cmd->parsed()) return run_normalize(o);
    if (solve_cmd->parsed()) return run_solve(o);
    if (eventual_cmd->parsed()) return run_eventual(o);
    if (check_cmd->parsed()) return run_check(o);
    if (closure_cmd->parsed()) return run_closure(o);
  } catch (const logcouple::error& e) {
    // malformed terms or vectors, unknown suites
    std::cerr << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}
