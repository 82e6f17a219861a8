#include "puzzle/app/dot.h"

#include <sstream>

#include "puzzle/fol/printer.h"

namespace puzzle::app {

namespace {

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

std::string step_text(const fol::Clause& c) {
  return "{" + std::to_string(c.id) + "} " + fol::print_clause(c) + " [" + c.provenance.rule + "]";
}

}  // namespace

std::string export_proof_dot(const infer::Proof& p, const fol::ClauseSet& axioms) {
  std::string why;
  if (!infer::check_proof(p, axioms, &why)) throw InvalidProof("proof does not check: " + why);
  std::ostringstream os;
  os << "digraph proof {\n";
  os << "  rankdir=TB;\n";
  os << "  node [shape=box, fontname=\"Helvetica\"];\n";
  for (const auto& s : p.steps) {
    os << "  n" << s.id << " [label=" << quoted(step_text(s));
    if (s.empty()) os << ", shape=doubleoctagon, style=filled, fillcolor=\"#f4cccc\"";
    else if (s.provenance.origin == fol::Origin::kNegatedGoal) os << ", style=dashed";
    os << "];\n";
  }
  for (const auto& s : p.steps)
    for (int q : s.provenance.parents) os << "  n" << q << " -> n" << s.id << ";\n";
  os << "}\n";
  return os.str();
}

std::string format_proof(const infer::Proof& p) {
  std::ostringstream os;
  for (const auto& s : p.steps) {
    os << "{" << s.id << "} " << fol::print_clause(s) << " [" << s.provenance.rule;
    for (size_t i = 0; i < s.provenance.parents.size(); ++i) os << (i ? "," : " ") << s.provenance.parents[i];
    os << "]\n";
  }
  return os.str();
}

}  // namespace puzzle::app
