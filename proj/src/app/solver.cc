#include "puzzle/app/solver.h"

#include <algorithm>
#include <chrono>
#include <set>
#include <sstream>

#include "puzzle/chart/parser.h"
#include "puzzle/fol/printer.h"
#include "puzzle/grammar/lexicon.h"
#include "puzzle/lambda/lambda_term.h"
#include "puzzle/text/lexical.h"

namespace puzzle::app {

namespace {

using fol::Formula;

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

std::string accepted_forms(Domain d) {
  if (d == Domain::kComparatives) return "Is X taller than Y? / Is X shorter than Y?";
  return "Is X a knight? / Is X a knave? / Are X and Y both knights? / Does X lie? / Does X tell the truth? / "
         "Are X and Y the same? / Are X and Y different? / Is X a knave and Y a knight?";
}

std::vector<std::string> question_words(const text::Document& d) {
  std::vector<std::string> out;
  for (const auto& s : d.sentences)
    for (auto& w : s.words(true)) out.push_back(std::move(w));
  return out;
}

// The theory extended with synonymy axioms for new words in the question.
PuzzleTheory with_question_words(const PuzzleTheory& theory, const text::Document& d) {
  PuzzleTheory t = theory;
  auto ext = grammar::extend_lexicon(t.grammar, t.synonyms, text::tagged_words(d, t.persons), text::lemmatize);
  if (ext.pairs.empty()) return t;
  t.grammar = std::move(ext.grammar);
  std::map<std::string, size_t> arity;
  for (const auto& a : t.axioms)
    for (const auto& [p, n] : fol::predicates(a.formula)) arity.emplace(p, n);
  for (const auto& [fresh, known] : ext.pairs) {
    auto n = arity.find(known);
    if (n == arity.end() || arity.count(fresh)) continue;
    std::vector<fol::Term> args;
    static const std::vector<std::string> kVars = {"x", "y", "z"};
    for (size_t i = 0; i < n->second; ++i) args.push_back(fol::Term::variable(kVars.at(i)));
    Formula body = Formula::equivalence(Formula::atom(fresh, args), Formula::atom(known, args));
    for (size_t i = n->second; i-- > 0;) body = Formula::forall(kVars[i], body);
    t.axioms.push_back({AxiomKind::kSynonymy, body, -1});
    arity.emplace(fresh, n->second);
  }
  return t;
}

std::set<std::string> theory_predicates(const PuzzleTheory& t) {
  std::set<std::string> out;
  for (const auto& a : t.axioms)
    for (const auto& [p, n] : fol::predicates(a.formula)) out.insert(p);
  return out;
}

Formula goal_in(const PuzzleTheory& t, std::string_view question) {
  text::Document d = prepare_question(t, question);
  std::vector<std::string> words = question_words(d);
  std::vector<Formula> ms;
  try {
    ms = meanings(words, t.grammar, "Q");
  } catch (const chart::UnknownWords& e) {
    throw QuestionError("unknown words in question: " + join(e.words(), ", ") +
                        "; accepted forms: " + accepted_forms(t.domain));
  }
  if (ms.empty()) throw QuestionError("cannot parse question; accepted forms: " + accepted_forms(t.domain));
  return ms.front();
}

constexpr size_t kCountermodelLimit = 1000;

std::string describe(const char* what, const infer::ProveResult& r) {
  std::ostringstream os;
  os << what << ": " << infer::to_string(r.status) << " after " << r.generated << " clauses";
  return os.str();
}

}  // namespace

std::vector<std::string> role_predicates(Domain d) {
  if (d == Domain::kComparatives) return {"tallest", "shortest"};
  return {"knight", "knave"};
}

std::vector<infer::Interpretation> models(const PuzzleTheory& theory, size_t limit) {
  return infer::find_models(theory.clauses(), theory.domain_size, limit, theory.constant_map());
}

SolveReport solve(const PuzzleTheory& theory, const SolveOptions& options) {
  auto start = std::chrono::steady_clock::now();
  SolveReport r;
  r.persons = theory.persons.persons;
  r.predicates = role_predicates(theory.domain);
  r.diagnostics = theory.diagnostics;
  auto ms = models(theory, options.max_models);
  r.model_count = ms.size();
  r.truncated = ms.size() >= options.max_models;
  std::vector<std::string> constants = theory.constants();
  if (ms.empty()) {
    r.diagnostics.push_back({Stage::kReasoning, -1, "no models: the statements are inconsistent"});
  } else {
    r.consensus = infer::consensus_assignment(ms, constants, r.predicates);
    if (r.truncated) {
      r.diagnostics.push_back(
          {Stage::kReasoning, -1, "model limit of " + std::to_string(options.max_models) + " reached"});
    } else if (r.consensus.ambiguous()) {
      std::vector<std::string> open;
      for (const auto& c : constants)
        for (const auto& p : r.predicates)
          if (!r.consensus.cells[c][p]) open.push_back(p + "(" + c + ")");
      r.diagnostics.push_back(
          {Stage::kReasoning, -1, std::to_string(ms.size()) + " models disagree on " + join(open, ", ")});
    } else {
      std::vector<PersonRole> roles;
      for (size_t i = 0; i < constants.size(); ++i) {
        PersonRole pr{r.persons[i], {}};
        for (const auto& p : r.predicates)
          if (*r.consensus.cells[constants[i]][p]) pr.roles.push_back(p);
        roles.push_back(std::move(pr));
      }
      r.assignment = std::move(roles);
    }
  }
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::string format_assignment(const SolveReport& r) {
  if (!r.assignment) return r.model_count == 0 ? "no models" : "ambiguous";
  std::vector<std::string> parts;
  for (const auto& p : *r.assignment) parts.push_back(p.name + ": " + (p.roles.empty() ? "none" : join(p.roles, "/")));
  return join(parts, ", ");
}

const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::kYes:
      return "Yes";
    case Verdict::kNo:
      return "No";
    case Verdict::kUnknown:
      return "Unknown";
  }
  return "?";
}

fol::Formula question_goal(const PuzzleTheory& theory, std::string_view question) {
  return goal_in(with_question_words(theory, prepare_question(theory, question)), question);
}

Answer answer_goal(const PuzzleTheory& theory, const Formula& goal, const infer::ProverLimits& limits) {
  Answer a;
  a.goal = goal;
  a.question = fol::print_formula(goal);
  a.axioms = theory.clauses();
  auto checked = [&](infer::ProveResult& r) {
    std::string why;
    if (!infer::check_proof(*r.proof, a.axioms, &why)) throw std::logic_error("prover emitted a bad proof: " + why);
    a.proof = std::move(r.proof);
  };
  // A model where the goal fails refutes it outright, which spares the prover
  // a search that may never saturate (transitivity chains grow without end).
  bool false_somewhere = false, true_somewhere = false;
  try {
    for (const auto& m : infer::find_models(a.axioms, theory.domain_size, kCountermodelLimit, theory.constant_map())) {
      (m.eval(goal) ? true_somewhere : false_somewhere) = true;
      if (true_somewhere && false_somewhere) break;
    }
  } catch (const std::exception&) {
    false_somewhere = true_somewhere = false;
  }
  std::vector<std::string> notes;
  if (!false_somewhere) {
    auto yes = infer::prove(a.axioms, goal, limits);
    if (yes.status == infer::ProveStatus::kProved) {
      a.verdict = Verdict::kYes;
      checked(yes);
      return a;
    }
    notes.push_back(describe("goal", yes));
  } else {
    notes.push_back("goal: false in a model");
  }
  if (!true_somewhere) {
    auto no = infer::prove(a.axioms, Formula::negation(goal), limits);
    if (no.status == infer::ProveStatus::kProved) {
      a.verdict = Verdict::kNo;
      checked(no);
      return a;
    }
    notes.push_back(describe("negated goal", no));
  } else {
    notes.push_back("negated goal: false in a model");
  }
  a.diagnostics = std::move(notes);
  return a;
}

Answer answer_question(const PuzzleTheory& theory, std::string_view question, const infer::ProverLimits& limits) {
  PuzzleTheory t = with_question_words(theory, prepare_question(theory, question));
  Answer a = answer_goal(t, goal_in(t, question), limits);
  a.question = std::string(question);
  return a;
}

WhResult query_wh(const PuzzleTheory& theory, std::string_view query, size_t max_models) {
  lambda::LambdaTerm property;
  std::set<std::string> known = theory_predicates(theory);
  bool question = query.find_first_of(" ?") != std::string_view::npos;
  if (question) {
    text::Document d = prepare_question(theory, query);
    std::vector<chart::ParseTree> trees;
    try {
      trees = chart::parse(question_words(d), theory.grammar, chart::ParseOptions{"WH"});
    } catch (const chart::UnknownWords& e) {
      throw QuestionError("unknown words in question: " + join(e.words(), ", "));
    }
    auto it = std::find_if(trees.begin(), trees.end(), [](const chart::ParseTree& t) { return t.sem.has_value(); });
    if (it == trees.end()) throw QuestionError("cannot parse who-question: " + std::string(query));
    property = *it->sem;
  } else {
    property = lambda::parse_lambda("\\x." + std::string(query) + "(x)");
  }
  for (const auto& p : lambda::predicate_names(property))
    if (!known.count(p)) throw UnknownPredicate("unknown predicate: " + p);

  WhResult r;
  auto ms = models(theory, max_models);
  if (ms.empty()) {
    r.diagnostics.push_back("no models");
    return r;
  }
  for (const auto& c : theory.constants()) {
    Formula g = lambda::to_formula(lambda::beta_reduce(lambda::apply(property, lambda::LambdaTerm::constant(c))));
    size_t count = std::count_if(ms.begin(), ms.end(), [&](const infer::Interpretation& m) { return m.eval(g); });
    if (count == ms.size()) {
      r.persons.push_back(theory.display_name(c));
    } else if (count > 0) {
      r.ambiguous = true;
      r.diagnostics.push_back("ambiguous: " + fol::print_formula(g) + " differs between models");
    }
  }
  if (r.ambiguous) r.persons.clear();
  return r;
}

}  // namespace puzzle::app
