#include "puzzle/app/report.h"

#include "puzzle/fol/printer.h"

namespace puzzle::app {

Json to_json(const Diagnostic& d) {
  Json j;
  j["stage"] = to_string(d.stage);
  if (d.sentence >= 0) j["sentence"] = d.sentence + 1;
  j["message"] = d.message;
  return j;
}

Json to_json(const infer::Proof& p) {
  Json steps = Json::array();
  for (const auto& s : p.steps) {
    Json j;
    j["id"] = s.id;
    j["clause"] = fol::print_clause(s);
    j["rule"] = s.provenance.rule;
    j["parents"] = s.provenance.parents;
    steps.push_back(std::move(j));
  }
  Json j;
  j["goal"] = fol::print_formula(p.goal);
  j["steps"] = std::move(steps);
  return j;
}

Json to_json(const SolveReport& r, bool timings) {
  Json j;
  if (r.assignment) {
    Json a = Json::object();
    for (const auto& p : *r.assignment) a[p.name] = p.roles.empty() ? "none" : p.roles.front();
    j["verdict"] = "solved";
    j["assignment"] = std::move(a);
  } else {
    j["verdict"] = r.model_count == 0 ? "inconsistent" : "ambiguous";
    j["assignment"] = nullptr;
  }
  j["model_count"] = r.model_count;
  j["truncated"] = r.truncated;
  Json d = Json::array();
  for (const auto& x : r.diagnostics) d.push_back(to_json(x));
  j["diagnostics"] = std::move(d);
  if (timings) j["timings"] = {{"solve_seconds", r.seconds}};
  return j;
}

Json to_json(const Answer& a) {
  Json j;
  j["question"] = a.question;
  j["goal"] = fol::print_formula(a.goal);
  j["verdict"] = to_string(a.verdict);
  j["proof"] = a.proof ? to_json(*a.proof) : Json(nullptr);
  j["diagnostics"] = a.diagnostics;
  return j;
}

Json to_json(const WhResult& w) {
  Json j;
  j["persons"] = w.persons;
  j["ambiguous"] = w.ambiguous;
  j["diagnostics"] = w.diagnostics;
  return j;
}

Json to_json(const infer::Interpretation& m, const PuzzleTheory& t) {
  Json preds = Json::object();
  for (const auto& [p, arity] : m.arities) {
    Json tuples = Json::array();
    auto it = m.extensions.find(p);
    if (it != m.extensions.end())
      for (const auto& tuple : it->second) {
        Json names = Json::array();
        for (int e : tuple) names.push_back(t.persons.persons.at(static_cast<size_t>(e)));
        tuples.push_back(arity == 1 ? names[0] : names);
      }
    preds[p] = std::move(tuples);
  }
  return preds;
}

Json to_json(const CorpusReport& r, bool timings) {
  Json puzzles = Json::array();
  for (const auto& p : r.puzzles) {
    Json j;
    j["name"] = p.name;
    j["passed"] = p.passed();
    j["persons"] = p.persons;
    j["model_count"] = p.models;
    j["assignment"] = p.assignment;
    j["entities"] = p.entities_ok;
    j["parsing"] = p.parsing_ok;
    j["reasoning"] = p.reasoning_ok;
    j["failures"] = p.failures;
    if (timings) j["seconds"] = p.seconds;
    puzzles.push_back(std::move(j));
  }
  Json j;
  j["total"] = r.puzzles.size();
  j["passed"] = r.passed();
  j["failed"] = {{"entities", r.failed(Stage::kEntities)},
                 {"parsing", r.failed(Stage::kParsing)},
                 {"reasoning", r.failed(Stage::kReasoning)}};
  j["puzzles"] = std::move(puzzles);
  return j;
}

}  // namespace puzzle::app
