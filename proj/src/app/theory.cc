#include "puzzle/app/theory.h"

#include <algorithm>
#include <functional>
#include <set>

#include "puzzle/chart/parser.h"
#include "puzzle/fol/clausify.h"
#include "puzzle/fol/parser.h"
#include "puzzle/grammar/lexicon.h"
#include "puzzle/lambda/lambda_term.h"
#include "puzzle/text/lexical.h"

namespace puzzle::app {

namespace {

using fol::Formula;
using fol::Term;

Formula f(const std::string& text) { return fol::parse_formula(text); }

Formula atom(const std::string& p, const std::string& c) { return Formula::atom(p, {Term::constant(c)}); }

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : sep) + p;
  return out;
}

bool is_distinctness(const Formula& g) {
  return g.kind == Formula::Kind::kNot && g.body().kind == Formula::Kind::kEquality;
}

// Predicates heading the meanings of speech verbs.
std::set<std::string> speech_predicates(const grammar::Grammar& g) {
  std::set<std::string> out;
  for (size_t i : g.rules_for("SV")) {
    const auto* sem = g.rule(i).lhs.feature(grammar::kSem);
    if (!sem || sem->kind != grammar::FeatureValue::Kind::kSem) continue;
    auto names = lambda::predicate_names(sem->sem);
    if (!names.empty()) out.insert(names.front());
  }
  return out;
}

// The speaker constant of `say(marge) <-> ...`, if `g` has that shape.
std::optional<std::string> utterance_speaker(const Formula& g, const std::set<std::string>& speech) {
  if (g.kind != Formula::Kind::kIff) return std::nullopt;
  const Formula& head = g.lhs();
  if (head.kind != Formula::Kind::kAtom || head.args.size() != 1 || !head.args[0].is_constant()) return std::nullopt;
  if (!speech.count(head.name)) return std::nullopt;
  return head.args[0].name;
}

Formula equivalence_axiom(const std::string& a, const std::string& b, size_t arity) {
  static const std::vector<std::string> kVars = {"x", "y", "z", "u", "v", "w"};
  std::vector<Term> args;
  for (size_t i = 0; i < arity; ++i) args.push_back(Term::variable(kVars.at(i)));
  Formula body = Formula::equivalence(Formula::atom(a, args), Formula::atom(b, args));
  for (size_t i = arity; i-- > 0;) body = Formula::forall(kVars[i], body);
  return body;
}

std::string find(std::map<std::string, std::string>& parent, const std::string& x) {
  auto it = parent.find(x);
  if (it == parent.end() || it->second == x) return x;
  return it->second = find(parent, it->second);
}

}  // namespace

const char* to_string(Domain d) { return d == Domain::kComparatives ? "comparatives" : "knights-knaves"; }

std::optional<Domain> parse_domain(std::string_view name) {
  if (name == "knights-knaves") return Domain::kKnightsKnaves;
  if (name == "comparatives") return Domain::kComparatives;
  return std::nullopt;
}

ResourcePaths default_paths(const std::string& data_dir, Domain d) {
  return {data_dir + "/grammars/" + to_string(d) + ".fcfg", data_dir + "/lexicon/synonyms.txt",
          data_dir + "/lexicon/gazetteer.txt"};
}

Resources load_resources(Domain d, const ResourcePaths& paths) {
  Resources r;
  r.domain = d;
  r.grammar = grammar::load_grammar(paths.grammar);
  if (!paths.synonyms.empty()) r.synonyms = grammar::load_synonyms(paths.synonyms);
  if (!paths.gazetteer.empty()) r.gazetteer = text::load_gazetteer(paths.gazetteer);
  return r;
}

const char* to_string(AxiomKind k) {
  switch (k) {
    case AxiomKind::kBackground:
      return "background";
    case AxiomKind::kText:
      return "text";
    case AxiomKind::kSynonymy:
      return "synonymy";
    case AxiomKind::kDistinctness:
      return "distinctness";
  }
  return "?";
}

const char* to_string(Stage s) {
  switch (s) {
    case Stage::kEntities:
      return "entities";
    case Stage::kParsing:
      return "parsing";
    case Stage::kReasoning:
      return "reasoning";
  }
  return "?";
}

std::vector<std::string> PuzzleTheory::constants() const {
  std::vector<std::string> out;
  for (const auto& p : persons.persons) out.push_back(grammar::person_constant(p));
  return out;
}

std::map<std::string, int> PuzzleTheory::constant_map() const {
  std::map<std::string, int> out;
  int i = 0;
  for (const auto& c : constants()) out.emplace(c, i++);
  return out;
}

fol::ClauseSet PuzzleTheory::clauses() const {
  fol::Clausifier c;
  fol::ClauseSet out;
  for (const auto& a : axioms) {
    fol::Provenance prov{a.kind == AxiomKind::kSynonymy ? fol::Origin::kSynonymy : fol::Origin::kInputAxiom,
                         "assumption", {}};
    auto cs = c.clausify(a.formula, prov);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

std::string PuzzleTheory::display_name(const std::string& constant) const {
  for (const auto& p : persons.persons)
    if (grammar::person_constant(p) == constant) return p;
  return constant;
}

std::vector<Formula> distinctness_axioms(const std::vector<std::string>& constants) {
  std::vector<Formula> out;
  for (size_t i = 0; i < constants.size(); ++i)
    for (size_t j = i + 1; j < constants.size(); ++j)
      out.push_back(Formula::negation(Formula::equality(Term::constant(constants[i]), Term::constant(constants[j]))));
  return out;
}

std::vector<Formula> knights_knaves_background(const std::vector<std::string>& constants,
                                               const std::vector<Utterance>& utterances) {
  std::vector<Formula> out = {
      f("all x (inhabitant(x) -> knight(x) | knave(x))."),
      f("all x ((knight(x) -> -knave(x)) & (knave(x) -> -knight(x)))."),
      f("all x (knave(x) | knight(x))."),
      f("all x (knight(x) -> truth(x))."),
      f("all x (knave(x) -> lie(x))."),
      f("all x (truth(x) <-> -lie(x))."),
      f("all x all y (same(x,y) <-> (knight(x) & knight(y)) | (knave(x) & knave(y)))."),
      f("all x all y (different(x,y) <-> -same(x,y))."),
  };
  for (const auto& c : constants) out.push_back(atom("inhabitant", c));
  for (const auto& u : utterances) {
    out.push_back(Formula::implication(atom("knight", u.speaker), atom(u.predicate, u.speaker)));
    out.push_back(Formula::implication(atom("knave", u.speaker), Formula::negation(atom(u.predicate, u.speaker))));
  }
  for (auto& d : distinctness_axioms(constants)) out.push_back(std::move(d));
  return out;
}

std::vector<Formula> comparatives_background(const std::vector<std::string>& constants) {
  std::vector<Formula> out = {
      f("all x all y all z (taller(x,y) & taller(y,z) -> taller(x,z))."),
      f("all x all y (taller(x,y) -> -taller(y,x))."),
  };
  // Extremes spelled out over the named persons, who make up the domain.
  for (const auto& c : constants) {
    std::vector<Formula> above, below;
    for (const auto& d : constants) {
      if (d == c) continue;
      above.push_back(Formula::atom("taller", {Term::constant(c), Term::constant(d)}));
      below.push_back(Formula::atom("taller", {Term::constant(d), Term::constant(c)}));
    }
    if (above.empty()) {
      out.push_back(atom("tallest", c));
      out.push_back(atom("shortest", c));
      continue;
    }
    out.push_back(Formula::equivalence(atom("tallest", c), Formula::conjunction(above)));
    out.push_back(Formula::equivalence(atom("shortest", c), Formula::conjunction(below)));
  }
  for (auto& d : distinctness_axioms(constants)) out.push_back(std::move(d));
  return out;
}

std::vector<Formula> meanings(const std::vector<std::string>& words, const grammar::Grammar& g,
                              const std::string& start) {
  std::vector<Formula> out;
  for (const auto& t : chart::parse(words, g, chart::ParseOptions{start})) {
    try {
      Formula m = chart::sentence_semantics(t);
      if (fol::is_closed(m) && std::find(out.begin(), out.end(), m) == out.end()) out.push_back(std::move(m));
    } catch (const lambda::IncompleteSemantics&) {
    }
  }
  return out;
}

PuzzleTheory build_theory(std::string_view source, const Resources& r) {
  PuzzleTheory t;
  t.domain = r.domain;
  t.source = std::string(source);
  t.synonyms = r.synonyms;

  text::Document d = text::split_and_tokenize(source);
  text::EntitySet e = text::recognize_persons(d, r.gazetteer);
  bool named = !e.persons.empty();
  d = text::introduce_anonymous_persons(d, e);
  if (e.persons.empty()) throw NoPersons();
  t.anonymous = !named;
  d = text::resolve_coreference(d, e);
  t.document = d;
  t.persons = e;
  t.domain_size = static_cast<int>(e.persons.size());
  for (size_t i = 0; i < d.sentences.size(); ++i)
    for (const auto& w : d.sentences[i].warnings) t.diagnostics.push_back({Stage::kEntities, static_cast<int>(i), w});

  grammar::Grammar g = grammar::add_proper_nouns(r.grammar, e.persons);
  auto ext = grammar::extend_lexicon(g, r.synonyms, text::tagged_words(d, e), text::lemmatize);
  t.grammar = std::move(ext.grammar);
  std::set<std::pair<std::string, std::string>> pairs;
  for (const auto& [a, b] : ext.pairs) pairs.insert(std::minmax(a, b));
  for (const auto& p : text::detect_synonym_pairs(d, t.grammar, r.synonyms)) pairs.insert(p);
  t.synonym_pairs.assign(pairs.begin(), pairs.end());

  // Sentences to formulas.
  const std::set<std::string> speech = speech_predicates(t.grammar);
  std::map<std::pair<std::string, std::string>, int> said;
  std::vector<Axiom> text_axioms;
  for (size_t i = 0; i < d.sentences.size(); ++i) {
    const auto& s = d.sentences[i];
    if (s.is_question()) continue;
    std::vector<std::string> words = s.words(true);
    if (words.empty()) continue;
    int index = static_cast<int>(i);
    std::vector<Formula> ms;
    try {
      ms = meanings(words, t.grammar, t.grammar.start());
    } catch (const chart::UnknownWords& ex) {
      t.diagnostics.push_back({Stage::kParsing, index, "unknown words: " + join(ex.words(), ", ")});
      continue;
    } catch (const chart::ChartOverflow& ex) {
      t.diagnostics.push_back({Stage::kParsing, index, ex.what()});
      continue;
    }
    if (ms.empty()) {
      t.diagnostics.push_back({Stage::kParsing, index, "no parse: " + s.str()});
      continue;
    }
    Formula m = ms.front();
    if (auto speaker = t.domain == Domain::kKnightsKnaves ? utterance_speaker(m, speech) : std::nullopt) {
      std::string p = m.lhs().name;
      int k = ++said[{p, *speaker}];
      if (k > 1) {
        p += "_" + std::to_string(k);
        m = Formula::equivalence(atom(p, *speaker), m.rhs());
      }
      t.utterances.push_back({p, *speaker, index});
    }
    text_axioms.push_back({AxiomKind::kText, std::move(m), index});
  }

  std::vector<std::string> constants = t.constants();
  std::vector<Formula> background = t.domain == Domain::kKnightsKnaves
                                        ? knights_knaves_background(constants, t.utterances)
                                        : comparatives_background(constants);

  // Synonymy equivalences, for predicates the theory uses.
  std::map<std::string, size_t> arity;
  for (const auto& a : text_axioms)
    for (const auto& [p, n] : fol::predicates(a.formula)) arity.emplace(p, n);
  for (const auto& b : background)
    for (const auto& [p, n] : fol::predicates(b)) arity.emplace(p, n);
  std::vector<Axiom> synonymy;
  std::map<std::string, std::string> parent;
  for (const auto& [a, b] : t.synonym_pairs) {
    auto n = arity.count(a) ? arity.find(a) : arity.find(b);
    if (n == arity.end()) continue;
    synonymy.push_back({AxiomKind::kSynonymy, equivalence_axiom(a, b, n->second), -1});
    parent.emplace(a, a);
    parent.emplace(b, b);
    parent[find(parent, a)] = find(parent, b);
  }

  for (auto& b : background)
    t.axioms.push_back({is_distinctness(b) ? AxiomKind::kDistinctness : AxiomKind::kBackground, std::move(b), -1});

  // Nobody says anything beyond what the text reports: a speech predicate
  // (with its synonyms) is false of every person who does not use it.
  std::map<std::string, std::set<std::string>> speakers;  // class -> constants
  std::map<std::string, std::vector<std::string>> members;
  for (const auto& u : t.utterances) {
    std::string cls = find(parent, u.predicate);
    speakers[cls].insert(u.speaker);
    auto& m = members[cls];
    if (std::find(m.begin(), m.end(), u.predicate) == m.end()) m.push_back(u.predicate);
  }
  for (const auto& [cls, preds] : members)
    for (const auto& c : constants)
      if (!speakers[cls].count(c))
        for (const auto& p : preds) t.axioms.push_back({AxiomKind::kBackground, Formula::negation(atom(p, c)), -1});

  for (auto& a : text_axioms) t.axioms.push_back(std::move(a));
  for (auto& a : synonymy) t.axioms.push_back(std::move(a));
  if (text_axioms.empty()) t.diagnostics.push_back({Stage::kParsing, -1, "no sentence could be parsed"});
  return t;
}

text::Document prepare_question(const PuzzleTheory& theory, std::string_view question) {
  text::Document d = text::split_and_tokenize(question);
  if (theory.anonymous) d = text::rewrite_ordinal_references(d, theory.persons.persons);
  return d;
}

}  // namespace puzzle::app
