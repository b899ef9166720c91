#include "luk/proofs.hpp"

#include <cctype>
#include <charconv>
#include <sstream>

namespace luk {

std::optional<Binding> match_schema(const Formula& f, AxiomId id) {
  Binding binding;
  if (match(axiom_schema(id), f, binding)) return binding;
  return std::nullopt;
}

namespace {

CheckResult reject(std::size_t step, std::string reason) {
  return {false, step, std::move(reason)};
}

}  // namespace

CheckResult check_proof(const Proof& proof) {
  if (proof.steps.empty()) return reject(0, "proof has no steps");
  for (std::size_t n = 1; n <= proof.steps.size(); ++n) {
    const ProofStep& step = proof.steps[n - 1];
    if (const auto* ax = std::get_if<AxiomJust>(&step.justification)) {
      if (!match_schema(step.formula, ax->id)) {
        return reject(n, std::string("not an instance of ") + std::string(axiom_name(ax->id)));
      }
    } else if (const auto* mp = std::get_if<MpJust>(&step.justification)) {
      if (mp->premise == 0 || mp->premise >= n) {
        return reject(n, "MP premise index must name a strictly earlier step");
      }
      if (mp->implication == 0 || mp->implication >= n) {
        return reject(n, "MP implication index must name a strictly earlier step");
      }
      const Formula& premise = proof.steps[mp->premise - 1].formula;
      const Formula& implication = proof.steps[mp->implication - 1].formula;
      if (implication.kind() != FormulaKind::Implies || implication.lhs() != premise ||
          implication.rhs() != step.formula) {
        return reject(n, "MP shape mismatch: step " + std::to_string(mp->implication) +
                             " is not (step " + std::to_string(mp->premise) +
                             " -> this formula)");
      }
    } else if (const auto* hyp = std::get_if<HypJust>(&step.justification)) {
      if (hyp->index == 0 || hyp->index > proof.hypotheses.size()) {
        return reject(n, "hypothesis index out of range");
      }
      if (proof.hypotheses[hyp->index - 1] != step.formula) {
        return reject(n, "formula differs from hypothesis " + std::to_string(hyp->index));
      }
    }
  }
  return {true, 0, ""};
}

ProofParseError::ProofParseError(const std::string& message, std::size_t line)
    : std::runtime_error(message + " (line " + std::to_string(line) + ")"), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

std::size_t parse_index(std::string_view token, std::size_t line, const char* what) {
  std::size_t value = 0;
  auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
  if (ec != std::errc() || ptr != token.data() + token.size()) {
    throw ProofParseError(std::string("malformed ") + what + " \"" + std::string(token) + "\"",
                          line);
  }
  return value;
}

Justification parse_justification(std::string_view text, std::size_t line) {
  text = trim(text);
  if (auto id = axiom_by_name(text)) return AxiomJust{*id};
  std::istringstream in{std::string(text)};
  std::string head;
  in >> head;
  if (head == "MP") {
    std::string i, j, extra;
    in >> i >> j;
    if (i.empty() || j.empty() || (in >> extra)) {
      throw ProofParseError("expected \"MP i j\"", line);
    }
    return MpJust{parse_index(i, line, "step index"), parse_index(j, line, "step index")};
  }
  if (head == "HYP") {
    std::string k, extra;
    in >> k;
    if (k.empty() || (in >> extra)) throw ProofParseError("expected \"HYP k\"", line);
    return HypJust{parse_index(k, line, "hypothesis index")};
  }
  throw ProofParseError("unknown justification \"" + std::string(text) + "\"", line);
}

}  // namespace

Proof parse_proof(std::string_view text) {
  Proof proof;
  std::size_t line_no = 0;
  std::size_t next_step = 1;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    std::size_t eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    std::string_view line = trim(text.substr(pos, eol - pos));
    pos = eol + 1;
    ++line_no;
    if (line.empty() || line.front() == '#') continue;

    if (line.starts_with("hyp:")) {
      if (!proof.steps.empty()) {
        throw ProofParseError("hypotheses must precede all steps", line_no);
      }
      try {
        proof.hypotheses.push_back(parse_formula(line.substr(4)));
      } catch (const ParseError& e) {
        throw ProofParseError(e.what(), line_no);
      }
      continue;
    }

    std::size_t dot = line.find('.');
    if (dot == std::string_view::npos) {
      throw ProofParseError("expected \"n. <formula> ; <justification>\"", line_no);
    }
    std::size_t number = parse_index(trim(line.substr(0, dot)), line_no, "step number");
    if (number != next_step) {
      throw ProofParseError("steps must be numbered consecutively from 1 (expected " +
                                std::to_string(next_step) + ")",
                            line_no);
    }
    ++next_step;
    std::string_view rest = line.substr(dot + 1);
    std::size_t semi = rest.rfind(';');
    if (semi == std::string_view::npos) {
      throw ProofParseError("missing \";\" before the justification", line_no);
    }
    Formula formula;
    try {
      formula = parse_formula(rest.substr(0, semi));
    } catch (const ParseError& e) {
      throw ProofParseError(e.what(), line_no);
    }
    // Parse before aggregating; GCC leaks partially constructed aggregates
    // if a later member initializer throws.
    Justification justification = parse_justification(rest.substr(semi + 1), line_no);
    proof.steps.push_back({std::move(formula), std::move(justification)});
  }
  if (proof.steps.empty()) throw ProofParseError("proof has no steps", line_no);
  return proof;
}

std::string format_proof(const Proof& proof) {
  std::ostringstream out;
  for (const Formula& h : proof.hypotheses) out << "hyp: " << print_formula(h) << '\n';
  for (std::size_t n = 1; n <= proof.steps.size(); ++n) {
    const ProofStep& step = proof.steps[n - 1];
    out << n << ". " << print_formula(step.formula) << " ; ";
    if (const auto* ax = std::get_if<AxiomJust>(&step.justification)) {
      out << axiom_name(ax->id);
    } else if (const auto* mp = std::get_if<MpJust>(&step.justification)) {
      out << "MP " << mp->premise << ' ' << mp->implication;
    } else if (const auto* hyp = std::get_if<HypJust>(&step.justification)) {
      out << "HYP " << hyp->index;
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace luk
