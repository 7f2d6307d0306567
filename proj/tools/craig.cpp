// craig: check derivations, compute interpolants, verify results.
//
// Exit status: 0 success, 1 contract failure, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "craig/calculus.hpp"
#include "craig/interpolation.hpp"
#include "craig/syntax.hpp"

namespace {

using namespace craig;

constexpr int kOk = 0;
constexpr int kContractFailure = 1;
constexpr int kUsageError = 2;

struct InputError {
  std::string message;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError{path + ": cannot open file"};
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* mark(bool ok) { return ok ? "PASS" : "FAIL"; }

void check_node(const Derivation& d, const std::string& path, bool& all_ok) {
  auto r = resolve_rule(d);
  std::cout << path << ' ' << rule_name(d.rule());
  if (r) {
    if (r->analysed) std::cout << " principal=" << print_formula(*r->analysed);
    if (r->eigen) std::cout << " eigen=x" << *r->eigen;
    if (r->term) std::cout << " term=x" << *r->term;
  } else {
    all_ok = false;
  }
  std::cout << ' ' << mark(r.has_value()) << '\n';
  for (std::size_t i = 0; i < d.premises().size(); ++i) {
    check_node(d.premises()[i], path == "ε" ? std::to_string(i) : path + "." + std::to_string(i), all_ok);
  }
}

int cmd_check(const std::string& file) {
  auto d = parse_derivation(read_file(file));
  bool ok = true;
  check_node(d, "ε", ok);
  std::cout << "wellformed: " << (ok ? "yes" : "no") << '\n';
  return ok ? kOk : kContractFailure;
}

void print_report(const VerifyReport& report) {
  for (const auto& c : report.conjuncts) std::cout << c.name << ": " << mark(c.passed) << '\n';
  std::cout << "verified: " << mark(report.passed()) << '\n';
}

nlohmann::ordered_json report_json(const VerifyReport& report) {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& c : report.conjuncts) j[c.name] = c.passed;
  return j;
}

bool starts_with_paren(const std::string& text) {
  auto pos = text.find_first_not_of(" \t\r\n");
  return pos != std::string::npos && text[pos] == '(';
}

int cmd_interpolate(const std::string& file, bool weak, bool simplify, bool json) {
  const auto text = read_file(file);
  std::optional<Derivation> d;
  SplitSequent split;
  if (weak && starts_with_paren(text)) {
    d = parse_derivation(text);
    split = weak_split(d->root());
  } else {
    auto problem = parse_problem(text);
    d = problem.derivation;
    split = weak ? weak_split(d->root()) : problem.split();
  }
  auto result = interpolate_strong(*d, split);
  auto report = verify(split, result);
  const Formula shown = simplify ? simplify_bool(result.interpolant) : result.interpolant;
  if (json) {
    nlohmann::ordered_json j;
    j["interpolant"] = print_formula(shown);
    j["left"] = print_derivation(result.left_witness);
    j["right"] = print_derivation(result.right_witness);
    j["report"] = report_json(report);
    std::cout << j.dump(2) << '\n';
  } else {
    std::cout << print_result({shown, result.left_witness, result.right_witness});
    print_report(report);
  }
  return report.passed() ? kOk : kContractFailure;
}

int cmd_verify(const std::string& problem_file, const std::string& result_file, bool json) {
  auto problem = parse_problem(read_file(problem_file));
  auto result = parse_result(read_file(result_file));
  auto report = verify(problem.split(), result);
  if (json) {
    std::cout << report_json(report).dump(2) << '\n';
  } else {
    print_report(report);
  }
  return report.passed() ? kOk : kContractFailure;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Craig interpolation for a multiple-conclusion sequent calculus"};
  app.require_subcommand(1);

  std::string check_file;
  auto* check = app.add_subcommand("check", "Check that a derivation is wellformed");
  check->add_option("FILE", check_file, "Derivation file")->required()->check(CLI::ExistingFile);

  std::string interp_file;
  bool weak = false;
  bool simplify = false;
  bool interp_json = false;
  auto* interp = app.add_subcommand("interpolate", "Compute an interpolant and its witnesses");
  interp->add_option("FILE", interp_file, "Problem file, or a bare derivation with --weak")
      ->required()
      ->check(CLI::ExistingFile);
  interp->add_flag("--weak", weak, "Use the split (antecedent, {}, {}, succedent)");
  interp->add_flag("--simplify", simplify, "Print the interpolant after removing bot/top");
  interp->add_flag("--json", interp_json, "Emit one JSON object");

  std::string problem_file;
  std::string result_file;
  bool verify_json = false;
  auto* ver = app.add_subcommand("verify", "Re-check an interpolation result against a problem");
  ver->add_option("PROBLEM", problem_file, "Problem file")->required()->check(CLI::ExistingFile);
  ver->add_option("RESULT", result_file, "Result file")->required()->check(CLI::ExistingFile);
  ver->add_flag("--json", verify_json, "Emit one JSON object");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kUsageError;
  }

  try {
    if (check->parsed()) return cmd_check(check_file);
    if (interp->parsed()) return cmd_interpolate(interp_file, weak, simplify, interp_json);
    return cmd_verify(problem_file, result_file, verify_json);
  } catch (const InputError& e) {
    std::cerr << "error: " << e.message << '\n';
    return kUsageError;
  } catch (const SyntaxError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kUsageError;
  } catch (const RootMismatchError& e) {
    std::cerr << "root mismatch:\n  split:      " << e.split_root() << "\n  derivation: " << e.derivation_root()
              << '\n';
    return kContractFailure;
  } catch (const InterpolationError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kContractFailure;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kContractFailure;
  }
}
