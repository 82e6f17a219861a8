#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "dot_check.h"
#include "oracle.h"
#include "puzzle/app/corpus.h"
#include "puzzle/app/dot.h"
#include "puzzle/app/report.h"
#include "puzzle/app/solver.h"
#include "puzzle/fol/clausify.h"
#include "puzzle/fol/parser.h"
#include "puzzle/fol/printer.h"
#include "puzzle/grammar/lexicon.h"
#include "test_util.h"

using namespace puzzle;
using app::Domain;
using app::Verdict;

namespace {

const app::Resources& resources(Domain d = Domain::kKnightsKnaves) {
  static const app::Resources kk =
      app::load_resources(Domain::kKnightsKnaves, app::default_paths(PUZZLE_DATA_DIR, Domain::kKnightsKnaves));
  static const app::Resources cmp =
      app::load_resources(Domain::kComparatives, app::default_paths(PUZZLE_DATA_DIR, Domain::kComparatives));
  return d == Domain::kKnightsKnaves ? kk : cmp;
}

app::PuzzleTheory puzzle_theory(const std::string& rel, Domain d = Domain::kKnightsKnaves) {
  return app::build_theory(testutil::read_file(testutil::corpus_path(rel)), resources(d));
}

std::set<std::string> printed(const app::PuzzleTheory& t, app::AxiomKind kind) {
  std::set<std::string> out;
  for (const auto& a : t.axioms)
    if (a.kind == kind) out.insert(fol::print_formula(a.formula));
  return out;
}

std::map<std::string, std::string> roles(const app::SolveReport& r) {
  std::map<std::string, std::string> out;
  if (r.assignment)
    for (const auto& p : *r.assignment) out[p.name] = p.roles.empty() ? "none" : p.roles.front();
  return out;
}

fol::Formula formula(const std::string& text) { return fol::parse_formula(text + "."); }

bool entails(const fol::ClauseSet& axioms, const std::string& goal) {
  return infer::prove(axioms, formula(goal)).status == infer::ProveStatus::kProved;
}

}  // namespace

TEST_CASE("domain names round-trip") {
  for (Domain d : {Domain::kKnightsKnaves, Domain::kComparatives}) CHECK(app::parse_domain(app::to_string(d)) == d);
  CHECK_FALSE(app::parse_domain("chess"));
}

TEST_CASE("knights and knaves background") {
  fol::Clausifier c;
  fol::ClauseSet bg;
  for (const auto& f : app::knights_knaves_background({"a", "b"}, {{"say", "a", 0}, {"say", "b", 1}}))
    for (auto& cl : c.clausify(f)) bg.push_back(cl);

  CHECK(entails(bg, "knight(a) | knave(a)"));
  CHECK(entails(bg, "-(knight(b) & knave(b))"));
  CHECK(entails(bg, "knight(a) -> say(a)"));
  CHECK(entails(bg, "knave(a) -> -say(a)"));
  CHECK(entails(bg, "knight(a) -> -lie(a)"));
  CHECK(entails(bg, "same(a,b) <-> (knight(a) & knight(b) | knave(a) & knave(b))"));
  CHECK(entails(bg, "different(a,b) <-> -same(a,b)"));
  CHECK(entails(bg, "-(a = b)"));
  CHECK_FALSE(entails(bg, "knight(a)"));

  auto ms = infer::find_models(bg, 2, 100, infer::default_constant_map(bg, 2));
  CHECK(ms.size() == 4);
}

TEST_CASE("comparatives background") {
  fol::Clausifier c;
  fol::ClauseSet bg;
  for (const auto& f : app::comparatives_background({"ann", "bob", "cal"}))
    for (auto& cl : c.clausify(f)) bg.push_back(cl);
  for (auto& cl : c.clausify(formula("taller(ann,bob) & taller(bob,cal)"))) bg.push_back(cl);

  CHECK(entails(bg, "taller(ann,cal)"));
  CHECK(entails(bg, "-taller(cal,ann)"));
  CHECK(entails(bg, "tallest(ann)"));
  CHECK(entails(bg, "shortest(cal)"));
  CHECK(entails(bg, "-tallest(bob) & -shortest(bob)"));
}

TEST_CASE("build_theory on the first puzzle") {
  app::PuzzleTheory t = puzzle_theory("puzzles/p1-marge-homer.txt");
  CHECK(t.persons.persons == std::vector<std::string>{"Marge", "Homer"});
  CHECK(t.domain_size == 2);
  CHECK_FALSE(t.anonymous);
  CHECK(t.diagnostics.empty());

  auto text = printed(t, app::AxiomKind::kText);
  CHECK(text.count("say(marge) <-> knight(homer) & knight(marge) | knave(homer) & knave(marge)"));
  CHECK(text.count("claim(homer) <-> same(homer,marge)"));
  CHECK(printed(t, app::AxiomKind::kSynonymy) == std::set<std::string>{"all x (claim(x) <-> say(x))"});

  REQUIRE(t.utterances.size() == 2);
  CHECK(t.utterances[0].predicate == "say");
  CHECK(t.utterances[0].speaker == "marge");
  CHECK(t.constant_map() == std::map<std::string, int>{{"marge", 0}, {"homer", 1}});
  CHECK(t.display_name("homer") == "Homer");
}

TEST_CASE("synonymy axioms keep their origin in clauses") {
  app::PuzzleTheory t = puzzle_theory("puzzles/p2-sue-alice.txt");
  int synonymy = 0;
  for (const auto& c : t.clauses()) {
    CHECK(c.provenance.rule == infer::kAssumption);
    if (c.provenance.origin == fol::Origin::kSynonymy) ++synonymy;
  }
  CHECK(synonymy == 2);
}

TEST_CASE("a repeated speaker gets a fresh speech predicate") {
  app::PuzzleTheory t = app::build_theory(
      "Knights always tell the truth and knaves always lie. You meet two inhabitants: Sue and Bob. "
      "Sue says that Bob is a knave. Sue says that Bob is a knight.",
      resources());
  REQUIRE(t.utterances.size() == 2);
  CHECK(t.utterances[0].predicate == "say");
  CHECK(t.utterances[1].predicate == "say_2");
  CHECK(app::solve(t).model_count == 0);
}

TEST_CASE("no persons is an error") {
  CHECK_THROWS_AS(app::build_theory("Knights always tell the truth.", resources()), app::NoPersons);
}

TEST_CASE("unparsed sentences become diagnostics") {
  app::PuzzleTheory t =
      app::build_theory("You meet two inhabitants: Sue and Bob. Sue says that Bob is a knave. Bob juggles flaming torches.", resources());
  REQUIRE(t.diagnostics.size() == 1);
  CHECK(t.diagnostics[0].stage == app::Stage::kParsing);
  CHECK(t.diagnostics[0].sentence == 2);
  CHECK(t.diagnostics[0].message.find("juggles") != std::string::npos);
}

TEST_CASE("solving the corpus puzzles") {
  auto r1 = app::solve(puzzle_theory("puzzles/p1-marge-homer.txt"));
  CHECK(r1.model_count == 1);
  CHECK(app::format_assignment(r1) == "Marge: knight, Homer: knight");

  auto r3 = app::solve(puzzle_theory("puzzles/p3-two-people.txt"));
  CHECK(roles(r3) == std::map<std::string, std::string>{{"A", "knave"}, {"B", "knight"}});

  auto r4 = app::solve(puzzle_theory("puzzles/p4-nine.txt"));
  CHECK(r4.model_count == 1);
  CHECK(roles(r4) == app::load_expected(testutil::corpus_path("puzzles/p4-nine.txt"))->assignment);
}

TEST_CASE("ambiguous and inconsistent puzzles have no assignment") {
  auto open = app::solve(app::build_theory("You meet two inhabitants: Sue and Bob. Sue says that Bob is a knight.", resources()));
  CHECK(open.model_count == 2);
  CHECK_FALSE(open.assignment);
  CHECK(app::format_assignment(open) == "ambiguous");

  auto liar = app::solve(app::build_theory("Sue says that Sue is a knave.", resources()));
  CHECK(liar.model_count == 0);
  CHECK(app::format_assignment(liar) == "no models");

  app::SolveOptions capped;
  capped.max_models = 1;
  CHECK(app::solve(app::build_theory("You meet two inhabitants: Sue and Bob.", resources()), capped).truncated);
}

TEST_CASE("answers carry checked proofs") {
  app::PuzzleTheory t = puzzle_theory("puzzles/p2-sue-alice.txt");
  auto expected = app::load_expected(testutil::corpus_path("puzzles/p2-sue-alice.txt"));
  REQUIRE(expected);
  for (const auto& [q, want] : expected->questions) {
    CAPTURE(q);
    app::Answer a = app::answer_question(t, q);
    CHECK(app::to_string(a.verdict) == want);
    REQUIRE(a.proof);
    CHECK(infer::check_proof(*a.proof, a.axioms));
  }
}

TEST_CASE("verdicts agree with the models") {
  app::PuzzleTheory t = puzzle_theory("puzzles/p4-nine.txt");
  auto ms = app::models(t);
  REQUIRE(ms.size() == 1);
  for (const auto& p : t.persons.persons) {
    for (const char* role : {"knight", "knave"}) {
      std::string q = std::string("Is ") + p + " a " + role + "?";
      CAPTURE(q);
      app::Answer a = app::answer_question(t, q);
      bool holds = ms[0].holds(role, std::vector<int>{t.constant_map().at(grammar::person_constant(p))});
      CHECK(a.verdict == (holds ? Verdict::kYes : Verdict::kNo));
    }
  }
}

TEST_CASE("property: a goal and its negation never both get Yes") {
  std::mt19937 rng(5);
  for (const char* file : {"puzzles/p2-sue-alice.txt", "puzzles/g06-4.txt", "puzzles/g02-2-anon.txt"}) {
    app::PuzzleTheory t = puzzle_theory(file);
    std::vector<fol::Formula> atoms;
    for (const auto& c : t.constants())
      for (const char* p : {"knight", "knave", "lie"}) atoms.push_back(fol::Formula::atom(p, {fol::Term::constant(c)}));
    for (int k = 0; k < 8; ++k) {
      fol::Formula g = oracle::random_ground_formula(rng, atoms, 2);
      CAPTURE(fol::print_formula(g));
      Verdict pos = app::answer_goal(t, g).verdict;
      Verdict neg = app::answer_goal(t, fol::Formula::negation(g)).verdict;
      CHECK_FALSE((pos == Verdict::kYes && neg == Verdict::kYes));
      CHECK((pos == Verdict::kYes) == (neg == Verdict::kNo));
      CHECK((pos == Verdict::kUnknown) == (neg == Verdict::kUnknown));
    }
  }
}

TEST_CASE("a No that needs a countermodel to avoid an endless search") {
  app::PuzzleTheory t = puzzle_theory("comparatives/taller.txt", Domain::kComparatives);
  app::Answer a = app::answer_question(t, "Is Diana shorter than Maria?", {200000, 5.0});
  CHECK(a.verdict == Verdict::kNo);
  REQUIRE(a.proof);
  CHECK(infer::check_proof(*a.proof, a.axioms));
}

TEST_CASE("an open question is unknown") {
  app::PuzzleTheory t = app::build_theory("You meet two inhabitants: Sue and Bob. Sue says that Bob is a knight.", resources());
  app::Answer a = app::answer_question(t, "Is Sue a knight?", {2000, 5.0});
  CHECK(a.verdict == Verdict::kUnknown);
  CHECK_FALSE(a.proof);
}

TEST_CASE("questions that do not parse") {
  app::PuzzleTheory t = puzzle_theory("puzzles/p1-marge-homer.txt");
  CHECK_THROWS_AS(app::answer_question(t, "Why is Marge here?"), app::QuestionError);
}

TEST_CASE("ordinal references in questions") {
  app::PuzzleTheory t = puzzle_theory("puzzles/p3-two-people.txt");
  CHECK(t.anonymous);
  CHECK(app::answer_question(t, "Is the first one a knave?").verdict == Verdict::kYes);
  CHECK(app::answer_question(t, "Is the other one a knave?").verdict == Verdict::kNo);
}

TEST_CASE("who-questions") {
  app::PuzzleTheory t = puzzle_theory("comparatives/taller.txt", Domain::kComparatives);
  CHECK(app::query_wh(t, "Who is the shortest?").persons == std::vector<std::string>{"Maria"});
  CHECK(app::query_wh(t, "tallest").persons == std::vector<std::string>{"Ana"});
  CHECK_THROWS_AS(app::query_wh(t, "wizard"), app::UnknownPredicate);

  app::PuzzleTheory open = app::build_theory("You meet two inhabitants: Sue and Bob. Sue says that Bob is a knight.", resources());
  CHECK(app::query_wh(open, "knight").ambiguous);
}

TEST_CASE("DOT export of a trivial proof") {
  fol::Clausifier c;
  fol::ClauseSet axioms = c.clausify(formula("p(a)"));
  auto r = infer::prove(axioms, formula("p(a)"));
  REQUIRE(r.proof);
  std::string dot = app::export_proof_dot(*r.proof, axioms);
  dotcheck::Graph g = dotcheck::parse(dot);
  REQUIRE_MESSAGE(g.ok, g.error);
  CHECK(g.directed);
  CHECK(g.nodes.size() == 3);
  CHECK(g.edges.size() == 2);
  int filled = 0;
  for (const auto& [id, attrs] : g.nodes) {
    auto it = attrs.find("style");
    if (it != attrs.end() && it->second == "filled") ++filled;
  }
  CHECK(filled == 1);
}

TEST_CASE("DOT export refuses a tampered proof") {
  app::PuzzleTheory t = puzzle_theory("puzzles/p3-two-people.txt");
  app::Answer a = app::answer_question(t, "Is the first one a knave?");
  REQUIRE(a.proof);
  dotcheck::Graph g = dotcheck::parse(app::export_proof_dot(*a.proof, a.axioms));
  REQUIRE(g.ok);
  CHECK(g.nodes.size() == a.proof->steps.size());
  for (const auto& [from, to] : g.edges) {
    CHECK(g.nodes.count(from));
    CHECK(g.nodes.count(to));
  }

  infer::Proof bad = *a.proof;
  bad.steps[bad.steps.size() - 2] = fol::clausify(formula("knight(a)"))[0];
  bad.steps[bad.steps.size() - 2].id = a.proof->steps[a.proof->steps.size() - 2].id;
  bad.steps[bad.steps.size() - 2].provenance = a.proof->steps[a.proof->steps.size() - 2].provenance;
  CHECK_THROWS_AS(app::export_proof_dot(bad, a.axioms), app::InvalidProof);
}

TEST_CASE("the DOT checker rejects malformed graphs") {
  CHECK(dotcheck::parse("digraph { a -> b; b [label=\"x\"]; }").ok);
  CHECK_FALSE(dotcheck::parse("digraph { a -> ; }").ok);
  CHECK_FALSE(dotcheck::parse("digraph { a -- b }").ok);
  CHECK_FALSE(dotcheck::parse("digraph { a [label=\"x] }").ok);
  CHECK_FALSE(dotcheck::parse("digraph { a }}").ok);
}

TEST_CASE("format_proof lists every step") {
  fol::Clausifier c;
  fol::ClauseSet axioms = c.clausify(formula("all x (p(x) -> q(x)) & p(a)"));
  auto r = infer::prove(axioms, formula("q(a)"));
  REQUIRE(r.proof);
  std::string text = app::format_proof(*r.proof);
  CHECK(std::count(text.begin(), text.end(), '\n') == static_cast<long>(r.proof->steps.size()));
  CHECK(text.find("$F") != std::string::npos);
}

TEST_CASE("solving is deterministic") {
  std::string a = app::to_json(app::solve(puzzle_theory("puzzles/p4-nine.txt"))).dump();
  std::string b = app::to_json(app::solve(puzzle_theory("puzzles/p4-nine.txt"))).dump();
  CHECK(a == b);
  auto q1 = app::answer_question(puzzle_theory("puzzles/p2-sue-alice.txt"), "Is Sue a knight?");
  auto q2 = app::answer_question(puzzle_theory("puzzles/p2-sue-alice.txt"), "Is Sue a knight?");
  CHECK(app::to_json(q1).dump() == app::to_json(q2).dump());
}

TEST_CASE("JSON reports") {
  auto r = app::solve(puzzle_theory("puzzles/p2-sue-alice.txt"));
  app::Json j = app::to_json(r);
  CHECK(j["verdict"] == "solved");
  CHECK(j["assignment"]["Alice"] == "knave");
  CHECK(j["model_count"] == 1);
  CHECK_FALSE(j.contains("timings"));
  CHECK(app::to_json(r, true).contains("timings"));

  app::Json a = app::to_json(app::answer_question(puzzle_theory("puzzles/p2-sue-alice.txt"), "Is Alice a knave?"));
  CHECK(a["verdict"] == "Yes");
  CHECK(a["proof"]["steps"].back()["clause"] == "$F");
}

TEST_CASE("sidecars") {
  auto e = app::parse_expected(R"({"domain": "comparatives", "persons": ["A"],
    "questions": [{"question": "Is A tall?", "answer": "No"}], "wh": [{"question": "Who?", "answer": []}]})");
  CHECK(e.domain == Domain::kComparatives);
  CHECK(e.persons == std::vector<std::string>{"A"});
  CHECK_FALSE(e.assignment);
  REQUIRE(e.questions.size() == 1);
  CHECK(e.questions[0].second == "No");
  CHECK(e.wh.size() == 1);
  CHECK_THROWS(app::parse_expected("{"));
  CHECK_THROWS(app::parse_expected(R"({"domain": "chess"})"));
}

TEST_CASE("check_puzzle attributes failures to stages") {
  auto load = [](Domain d) -> const app::Resources& { return resources(d); };
  app::Expected none;
  CHECK(app::check_puzzle("x", "Knights lie.", none, load).entities_ok == false);

  app::Expected wrong;
  wrong.assignment = std::map<std::string, std::string>{{"Sue", "knave"}};
  auto out = app::check_puzzle("y", "Sue says that Sue is a knight or Sue is a knave.", wrong, load);
  CHECK(out.entities_ok);
  CHECK(out.parsing_ok);
  CHECK_FALSE(out.reasoning_ok);

  app::Expected q;
  q.questions.emplace_back("Whence Sue?", "Yes");
  auto bad_q = app::check_puzzle("z", "Sue says that Sue is a knight.", q, load);
  CHECK_FALSE(bad_q.parsing_ok);
}

TEST_CASE("the whole corpus checks") {
  auto load = [](Domain d) -> const app::Resources& { return resources(d); };
  for (const char* dir : {"puzzles", "comparatives"}) {
    app::CorpusReport r = app::check_corpus(testutil::corpus_path(dir), load, Domain::kKnightsKnaves);
    for (const auto& p : r.puzzles) {
      CAPTURE(p.name);
      CHECK_MESSAGE(p.passed(), (p.failures.empty() ? std::string() : p.failures.front()));
    }
    CHECK(r.passed() == r.puzzles.size());
  }
}
