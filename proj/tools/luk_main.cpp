#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "luk/axiomatizer.hpp"
#include "luk/formula.hpp"
#include "luk/proofs.hpp"
#include "luk/pwl.hpp"
#include "luk/semantics.hpp"
#include "luk/theories.hpp"

namespace {

using nlohmann::json;

// Exit codes: 0 success / affirmative verdict, 1 negative verdict,
// 2 usage or evaluation error.
constexpr int kTrue = 0;
constexpr int kFalse = 1;
constexpr int kError = 2;

luk::Assignment parse_assignment(const std::vector<std::string>& args) {
  luk::Assignment a;
  for (const auto& arg : args) {
    auto eq = arg.find('=');
    if (eq == std::string::npos || arg.size() < 4 || arg[0] != 'X') {
      throw std::invalid_argument("expected assignment \"X<i>=<p/q>\", got \"" + arg + "\"");
    }
    unsigned long index = std::stoul(arg.substr(1, eq - 1));
    if (index == 0) throw std::invalid_argument("variable index must be >= 1");
    a[static_cast<unsigned>(index)] = luk::parse_rational(arg.substr(eq + 1));
  }
  return a;
}

std::vector<luk::Formula> read_premises(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open premises file: " + path);
  std::vector<luk::Formula> premises;
  std::string line;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    premises.push_back(luk::parse_formula(line));
  }
  return premises;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

json assignment_json(const luk::Assignment& a) {
  json obj = json::object();
  for (const auto& [index, value] : a) obj["X" + std::to_string(index)] = luk::to_string(value);
  return obj;
}

// A rational point of T not covered by S, when T is not contained in S.
// Candidates: interval endpoints of both sets plus midpoints between
// consecutive candidates; some candidate lies in every uncovered piece.
std::optional<luk::Rational> point_in_difference(const luk::TruthSet& T,
                                                 const luk::TruthSet& S) {
  std::vector<luk::Rational> candidates;
  for (const auto& iv : T.intervals()) {
    candidates.push_back(iv.lo);
    candidates.push_back(iv.hi);
  }
  for (const auto& iv : S.intervals()) {
    candidates.push_back(iv.lo);
    candidates.push_back(iv.hi);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()), candidates.end());
  std::vector<luk::Rational> probes = candidates;
  for (std::size_t i = 0; i + 1 < candidates.size(); ++i) {
    probes.emplace_back((candidates[i] + candidates[i + 1]) / 2);
  }
  for (const auto& x : probes) {
    if (T.contains_point(x) && !S.contains_point(x)) return x;
  }
  return std::nullopt;
}

int run_taut1(const std::string& text) {
  luk::PwlFunction g = luk::from_formula(luk::parse_formula(text));
  luk::PwlPoint low = luk::minimum_point(g);
  json out;
  out["tautology"] = low.y == 1;
  out["minimum"] = luk::to_string(low.y);
  if (low.y != 1) out["witness"] = luk::to_string(low.x);
  std::cout << out.dump() << '\n';
  return low.y == 1 ? kTrue : kFalse;
}

int run_equiv1(const std::string& left_text, const std::string& right_text) {
  luk::PwlFunction g = luk::from_formula(luk::parse_formula(left_text));
  luk::PwlFunction h = luk::from_formula(luk::parse_formula(right_text));
  json out;
  out["equivalent"] = g == h;
  if (g != h) {
    // Functions differing somewhere differ at a breakpoint of one of them.
    for (const auto& p : g.points()) {
      if (luk::eval_at(h, p.x) != p.y) {
        out["witness"] = luk::to_string(p.x);
        break;
      }
    }
    if (!out.contains("witness")) {
      for (const auto& p : h.points()) {
        if (luk::eval_at(g, p.x) != p.y) {
          out["witness"] = luk::to_string(p.x);
          break;
        }
      }
    }
  }
  std::cout << out.dump() << '\n';
  return g == h ? kTrue : kFalse;
}

int run_check_proof(const std::string& path) {
  luk::Proof proof = luk::parse_proof(read_file(path));
  luk::CheckResult result = luk::check_proof(proof);
  json out;
  out["accepted"] = result.accepted;
  out["steps"] = proof.steps.size();
  if (result.accepted) {
    out["conclusion"] = luk::print_formula(proof.conclusion());
  } else {
    out["step"] = result.step;
    std::cerr << "reject at step " << result.step << ": " << result.reason << '\n';
  }
  std::cout << out.dump() << '\n';
  return result.accepted ? kTrue : kFalse;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact workbench for Lukasiewicz infinite-valued propositional logic"};
  app.require_subcommand(1);

  std::string formula_text, second_text, rational_text, truthset_text, file_path;
  std::vector<std::string> assignment_args;
  unsigned max_den = 0;
  unsigned long guard = luk::kDefaultDenominatorGuard;
  bool csv = false, serial = false;

  auto* cmd_parse = app.add_subcommand("parse", "Parse a formula and echo its core form");
  cmd_parse->add_option("formula", formula_text)->required();

  auto* cmd_eval = app.add_subcommand("eval", "Evaluate a formula under an assignment");
  cmd_eval->add_option("formula", formula_text)->required();
  cmd_eval->add_option("assignment", assignment_args, "values as X<i>=<p/q>");

  auto* cmd_fn = app.add_subcommand("fn", "Breakpoints of a one-variable formula's function");
  cmd_fn->add_option("formula", formula_text)->required();
  cmd_fn->add_flag("--csv", csv, "emit x,y rows instead of JSON");

  auto* cmd_taut = app.add_subcommand("taut1", "Exact one-variable tautology check");
  cmd_taut->add_option("formula", formula_text)->required();

  auto* cmd_equiv = app.add_subcommand("equiv1", "Exact one-variable equivalence check");
  cmd_equiv->add_option("left", formula_text)->required();
  cmd_equiv->add_option("right", second_text)->required();

  auto* cmd_oneset = app.add_subcommand("oneset", "Worlds where a one-variable formula is 1");
  cmd_oneset->add_option("formula", formula_text)->required();

  auto* cmd_member = app.add_subcommand("member", "Membership of a formula in Theta_r");
  cmd_member->add_option("formula", formula_text)->required();
  cmd_member->add_option("r", rational_text)->required();

  auto* cmd_theoryT = app.add_subcommand("theoryT", "Membership of a formula in Theta_T");
  cmd_theoryT->add_option("formula", formula_text)->required();
  cmd_theoryT->add_option("truthset", truthset_text, "e.g. \"[0,1/3]+[1/2,1/2]\"")->required();

  auto* cmd_cons = app.add_subcommand("consequence", "Semantic consequence from a premises file");
  cmd_cons->add_option("premises", file_path, "file with one formula per line")->required();
  cmd_cons->add_option("formula", formula_text)->required();

  auto* cmd_ax = app.add_subcommand("axiomatize", "Single axiom of Theta_r for rational r");
  cmd_ax->add_option("r", rational_text)->required();
  cmd_ax->add_option("--guard", guard, "denominator guard");

  auto* cmd_falsify = app.add_subcommand("falsify", "Grid search for a counterexample");
  cmd_falsify->add_option("formula", formula_text)->required();
  cmd_falsify->add_option("max-denominator", max_den)->required();
  cmd_falsify->add_flag("--serial", serial, "use the serial reference kernel");

  auto* cmd_check = app.add_subcommand("check-proof", "Check a Hilbert-style proof file");
  cmd_check->add_option("path", file_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : kError;
  }

  try {
    if (cmd_parse->parsed()) {
      std::cout << luk::print_formula(luk::parse_formula(formula_text)) << '\n';
      return kTrue;
    }
    if (cmd_eval->parsed()) {
      luk::Rational v =
          luk::eval(luk::parse_formula(formula_text), parse_assignment(assignment_args));
      std::cout << luk::to_string(v) << '\n';
      return kTrue;
    }
    if (cmd_fn->parsed()) {
      luk::PwlFunction g = luk::from_formula(luk::parse_formula(formula_text));
      if (csv) {
        std::cout << g.to_csv();
      } else {
        std::cout << g.to_json() << '\n';
      }
      return kTrue;
    }
    if (cmd_taut->parsed()) return run_taut1(formula_text);
    if (cmd_equiv->parsed()) return run_equiv1(formula_text, second_text);
    if (cmd_oneset->parsed()) {
      luk::TruthSet s = luk::one_set(luk::from_formula(luk::parse_formula(formula_text)));
      std::cout << "{\"one_set\":" << s.to_json() << "}\n";
      return kTrue;
    }
    if (cmd_member->parsed()) {
      luk::Formula f = luk::parse_formula(formula_text);
      luk::Rational r = luk::parse_rational(rational_text);
      bool verdict = luk::member_theta_r(f, r);
      json out;
      out["member"] = verdict;
      out["value"] = luk::to_string(luk::eval_at(luk::from_formula(f), r));
      std::cout << out.dump() << '\n';
      return verdict ? kTrue : kFalse;
    }
    if (cmd_theoryT->parsed()) {
      bool verdict = luk::member_theta_T(luk::parse_formula(formula_text),
                                         luk::TruthSet::parse(truthset_text));
      std::cout << json{{"member", verdict}}.dump() << '\n';
      return verdict ? kTrue : kFalse;
    }
    if (cmd_cons->parsed()) {
      std::vector<luk::Formula> premises = read_premises(file_path);
      luk::Formula f = luk::parse_formula(formula_text);
      luk::TruthSet worlds = luk::admissible_worlds(premises);
      bool verdict = luk::consequence_1(premises, f);
      json out;
      out["consequence"] = verdict;
      out["admissible_worlds"] = json::parse(worlds.to_json());
      if (!verdict) {
        auto witness = point_in_difference(worlds, luk::one_set(luk::from_formula(f)));
        if (witness) out["witness"] = luk::to_string(*witness);
      }
      std::cout << out.dump() << '\n';
      return verdict ? kTrue : kFalse;
    }
    if (cmd_ax->parsed()) {
      luk::AxiomatizeRecord record =
          luk::axiomatize_record(luk::parse_rational(rational_text), guard);
      // The axiom is built as a DAG; its printed tree can be astronomically
      // larger when r has a long continued-fraction expansion.
      constexpr std::size_t kPrintNodeLimit = 64'000'000;
      if (luk::tree_size(record.formula, kPrintNodeLimit) >= kPrintNodeLimit) {
        throw std::invalid_argument(
            "the axiom for r = " + luk::to_string(record.r) +
            " expands to more than " + std::to_string(kPrintNodeLimit) +
            " nodes and cannot reasonably be printed, though it verifies: one_set=" +
            record.one_set.to_text());
      }
      json out;
      out["r"] = luk::to_string(record.r);
      out["q"] = record.r.get_den().get_str();
      out["path"] = luk::path_string(record.path);
      out["one_set"] = json::parse(record.one_set.to_json());
      std::cout << luk::print_formula(record.formula) << '\n' << out.dump() << '\n';
      return kTrue;
    }
    if (cmd_falsify->parsed()) {
      luk::Formula f = luk::parse_formula(formula_text);
      auto result = serial ? luk::falsify_serial(f, max_den) : luk::falsify(f, max_den);
      json out;
      out["found"] = result.has_value();
      if (result) {
        out["assignment"] = assignment_json(result->assignment);
        out["value"] = luk::to_string(result->value);
      }
      std::cout << out.dump() << '\n';
      return result ? kTrue : kFalse;
    }
    if (cmd_check->parsed()) return run_check_proof(file_path);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kError;
  }
  return kError;
}
