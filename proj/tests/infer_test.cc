#include <random>
#include <sstream>

#include "doctest.h"
#include "oracle.h"
#include "puzzle/fol/clausify.h"
#include "puzzle/fol/parser.h"
#include "puzzle/fol/printer.h"
#include "puzzle/infer/model.h"
#include "puzzle/infer/prover.h"

using namespace puzzle;
using fol::Clause;
using fol::ClauseSet;
using fol::Formula;
using fol::parse_formula;
using infer::Interpretation;

namespace {

ClauseSet clauses_of(const std::string& text) {
  ClauseSet out;
  fol::Clausifier c;
  for (const auto& f : fol::parse_formulas(text)) {
    auto cs = c.clausify(f);
    out.insert(out.end(), cs.begin(), cs.end());
  }
  return out;
}

Clause clause(const std::string& text, int id, const std::string& rule = infer::kAssumption,
              std::vector<int> parents = {}) {
  ClauseSet cs = clauses_of(text);
  REQUIRE(cs.size() == 1);
  Clause c = cs[0];
  c.id = id;
  c.provenance.origin = parents.empty() ? fol::Origin::kInputAxiom : fol::Origin::kDerived;
  c.provenance.rule = rule;
  c.provenance.parents = std::move(parents);
  return c;
}

Clause empty_clause(int id, const std::string& rule, std::vector<int> parents) {
  Clause c;
  c.id = id;
  c.provenance = {fol::Origin::kDerived, rule, std::move(parents)};
  return c;
}

// Marge and Homer, as the pipeline encodes them.
const char* kFirstPuzzle = R"(
  all x (inhabitant(x) -> knave(x) | knight(x)).
  all x (knight(x) -> truth(x)).  all x (knave(x) -> lie(x)).
  all x (truth(x) <-> -lie(x)).
  all x (knight(x) -> -knave(x)).  all x (knave(x) -> -knight(x)).
  all x (knave(x) | knight(x)).
  all x all y (same(x,y) <-> (knight(x) & knight(y)) | (knave(x) & knave(y))).
  all x all y (different(x,y) <-> -same(x,y)).
  inhabitant(marge) & inhabitant(homer).
  say(marge) <-> (knight(homer) & knight(marge)) | (knave(homer) & knave(marge)).
  claim(homer) <-> same(homer,marge).
  all x (claim(x) <-> say(x)).
  knight(marge) -> say(marge).  knave(marge) -> -say(marge).
  knight(homer) -> claim(homer).  knave(homer) -> -claim(homer).
  marge != homer.
)";

// "We are both knaves" said by the first of two people.
const char* kTwoPeople = R"(
  all x (inhabitant(x) -> knave(x) | knight(x)).
  all x (knight(x) -> -knave(x)).  all x (knave(x) -> -knight(x)).
  inhabitant(a).  inhabitant(b).
  all x (knight(x) -> m(x)).  all x (knave(x) -> -m(x)).
  m(a) <-> knave(a) & knave(b).
  a != b.
)";

const char* kSueAlice = R"(
  all x (inhabitant(x) -> knave(x) | knight(x)).
  all x (knight(x) -> truth(x)).  all x (knave(x) -> lie(x)).
  all x (truth(x) <-> -lie(x)).
  all x (knight(x) -> -knave(x)).  all x (knave(x) -> -knight(x)).
  all x all y (same(x,y) <-> (knight(x) & knight(y)) | (knave(x) & knave(y))).
  all x all y (different(x,y) <-> -same(x,y)).
  inhabitant(sue) & inhabitant(alice).
  claim(sue) <-> knave(alice).
  say(alice) <-> knight(alice) & knight(sue).
  all x (claim(x) <-> say(x)).
  knight(sue) -> claim(sue).  knave(sue) -> -claim(sue).
  knight(alice) -> say(alice).  knave(alice) -> -say(alice).
  sue != alice.
)";

bool true_in_all(const std::vector<Interpretation>& models, const Formula& g) {
  for (const auto& m : models)
    if (!m.eval(g)) return false;
  return true;
}

std::string show(const infer::Proof& p) {
  std::ostringstream os;
  for (const auto& s : p.steps) {
    os << s.id << " " << fol::print_clause(s) << " [" << s.provenance.rule;
    for (int q : s.provenance.parents) os << " " << q;
    os << "]\n";
  }
  return os.str();
}

}  // namespace

TEST_CASE("ground") {
  auto g = infer::ground(clauses_of("-knight(x) | -knave(x)."), 2, {});
  CHECK(g.atoms.size() == 4);
  CHECK(g.clauses.size() == 2);
  CHECK(g.clauses[0].size() == 2);
  auto fixed = infer::ground(clauses_of("knight(a)."), 2, {{"a", 1}});
  REQUIRE(fixed.clauses.size() == 1);
  CHECK(fixed.atoms[static_cast<size_t>(fixed.clauses[0][0] - 1)] == infer::GroundAtom{"knight", {1}});
  auto distinct = infer::ground(clauses_of("alice != sam."), 2, {{"alice", 0}, {"sam", 1}});
  CHECK(distinct.clauses.empty());
  CHECK_FALSE(distinct.contradiction);
  CHECK(infer::ground(clauses_of("alice != sam."), 2, {{"alice", 0}, {"sam", 0}}).contradiction);
  CHECK_THROWS_AS(infer::ground(clauses_of("all x exists y loves(x,y)."), 2, {}), infer::UnsupportedTheory);
}

TEST_CASE("find_models: puzzles") {
  auto first = infer::find_models(clauses_of(kFirstPuzzle), 2);
  REQUIRE(first.size() == 1);
  CHECK(first[0].eval(parse_formula("knight(marge) & knight(homer).")));
  CHECK(infer::find_models(clauses_of("knight(a). -knight(a)."), 2).empty());
  auto two = infer::find_models(clauses_of(kTwoPeople), 2);
  REQUIRE(two.size() == 1);
  CHECK(two[0].eval(parse_formula("knave(a) & knight(b).")));
  auto sue = infer::find_models(clauses_of(kSueAlice), 2);
  REQUIRE(sue.size() == 1);
  CHECK(sue[0].eval(parse_formula("knight(sue) & knave(alice).")));

  // Unconstrained atoms multiply models; limits cut the list.
  CHECK(infer::find_models(clauses_of("p(a) | q(a)."), 1).size() == 3);
  CHECK(infer::find_models(clauses_of("p(a) | q(a)."), 1, 2).size() == 2);
  // Skolem constants range over the domain.
  auto sk = infer::find_models(clauses_of("exists x knave(x). knight(a). all x (knight(x) -> -knave(x))."), 2);
  CHECK(sk.size() == 1);

  auto c = infer::consensus_assignment(first, {"marge", "homer"}, {"knight", "knave"});
  CHECK(c.cells["marge"]["knight"] == true);
  CHECK(c.cells["homer"]["knave"] == false);
  CHECK_FALSE(c.ambiguous());
  auto open = infer::find_models(clauses_of("knight(a) | knight(b)."), 2);
  auto amb = infer::consensus_assignment(open, {"a", "b"}, {"knight"});
  CHECK(amb.ambiguous());
  CHECK(infer::consensus_assignment(open, {"a"}, {}).cells["a"].empty());
  CHECK_FALSE(infer::consensus_assignment(open, {"a"}, {}).ambiguous());
}

TEST_CASE("property: find_models agrees with brute-force enumeration") {
  std::mt19937 rng(1234);
  const std::vector<std::string> names = {"a", "b", "c", "d"};
  int compared = 0;
  for (int round = 0; round < 150; ++round) {
    int n = 1 + static_cast<int>(rng() % 4);
    std::vector<Formula> persons;
    for (int i = 0; i < n; ++i) persons.push_back(Formula::atom("knight", {fol::Term::constant(names[i])}));
    // Background plus random speech biconditionals over knight/knave atoms.
    std::vector<Formula> theory = {parse_formula("all x (knight(x) | knave(x))."),
                                   parse_formula("all x (knight(x) -> -knave(x)).")};
    std::vector<Formula> atoms;
    for (int i = 0; i < n; ++i) {
      atoms.push_back(Formula::atom("knight", {fol::Term::constant(names[i])}));
      atoms.push_back(Formula::atom("knave", {fol::Term::constant(names[i])}));
    }
    int speeches = n == 4 ? 1 : 1 + static_cast<int>(rng() % 2);
    for (int s = 0; s < speeches; ++s) {
      std::string verb = "say" + std::to_string(s);
      fol::Term speaker = fol::Term::constant(names[rng() % n]);
      theory.push_back(
          Formula::equivalence(Formula::atom(verb, {speaker}), oracle::random_ground_formula(rng, atoms, 3)));
      theory.push_back(Formula::implication(Formula::atom("knight", {speaker}), Formula::atom(verb, {speaker})));
    }
    if (n <= 2 && rng() % 2) {
      theory.push_back(parse_formula("all x all y (same(x,y) <-> (knight(x) & knight(y)) | (knave(x) & knave(y)))."));
      theory.push_back(parse_formula("exists x knave(x)."));
    }
    for (int i = 0; i + 1 < n; ++i)
      theory.push_back(Formula::negation(Formula::equality(fol::Term::constant(names[i]), fol::Term::constant(names[i + 1]))));

    ClauseSet clauses;
    fol::Clausifier clausifier;
    std::map<std::string, size_t> arities;
    for (const auto& f : theory) {
      for (auto& c : clausifier.clausify(f)) clauses.push_back(c);
      for (const auto& [p, a] : fol::predicates(f)) arities[p] = a;
    }
    std::map<std::string, int> constants;
    for (int i = 0; i < n; ++i) constants[names[i]] = i;
    // Mention every constant so the default map covers them all.
    auto models = infer::find_models(clauses, n, 1u << 20, constants);

    // Brute force over all tuples of every predicate.
    std::vector<std::pair<std::string, std::vector<int>>> tuples;
    for (const auto& [p, arity] : arities) {
      int count = 1;
      for (size_t k = 0; k < arity; ++k) count *= n;
      for (int code = 0; code < count; ++code) {
        std::vector<int> t;
        for (size_t k = 0, c = static_cast<size_t>(code); k < arity; ++k, c /= static_cast<size_t>(n))
          t.insert(t.begin(), static_cast<int>(c % static_cast<size_t>(n)));
        tuples.push_back({p, t});
      }
    }
    REQUIRE(tuples.size() <= 18);
    std::set<std::set<std::pair<std::string, std::vector<int>>>> expected;
    for (uint64_t mask = 0; mask < (uint64_t{1} << tuples.size()); ++mask) {
      std::set<std::pair<std::string, std::vector<int>>> truth;
      for (size_t i = 0; i < tuples.size(); ++i)
        if ((mask >> i) & 1) truth.insert(tuples[i]);
      oracle::FiniteStructure m{n, constants, [&](const std::string& p, const std::vector<int>& t) {
                                  return truth.count({p, t}) > 0;
                                }};
      bool ok = true;
      for (const auto& f : theory) ok = ok && oracle::eval(f, m);
      if (ok) expected.insert(truth);
    }
    std::set<std::set<std::pair<std::string, std::vector<int>>>> got;
    for (const auto& m : models) {
      std::set<std::pair<std::string, std::vector<int>>> truth;
      for (const auto& [p, ext] : m.extensions)
        for (const auto& t : ext) truth.insert({p, t});
      got.insert(truth);
    }
    CHECK(got.size() == models.size());  // duplicate-free
    CHECK(got == expected);
    ++compared;
  }
  CHECK(compared >= 100);
}

TEST_CASE("find_models is deterministic") {
  auto a = infer::find_models(clauses_of("knight(a) | knight(b) | knave(c)."), 3);
  auto b = infer::find_models(clauses_of("knight(a) | knight(b) | knave(c)."), 3);
  CHECK(a == b);
}

TEST_CASE("prove: trivial and saturated") {
  ClauseSet axioms = clauses_of("knight(a).");
  auto r = infer::prove(axioms, parse_formula("knight(a)."));
  REQUIRE(r.status == infer::ProveStatus::kProved);
  REQUIRE(r.proof);
  CHECK(r.proof->steps.size() == 3);
  CHECK(infer::check_proof(*r.proof, axioms));
  auto no = infer::prove(axioms, parse_formula("knight(b)."));
  CHECK(no.status == infer::ProveStatus::kSaturated);
  CHECK_FALSE(no.proof);
  // An endless supply of new clauses runs into the limit.
  ClauseSet growing = clauses_of("p(zero). all x (p(x) -> p(s(x))).");
  auto out = infer::prove(growing, parse_formula("q(zero)."), {200, 10.0});
  CHECK(out.status == infer::ProveStatus::kResourceOut);
}

TEST_CASE("prove: puzzles") {
  ClauseSet two = clauses_of(kTwoPeople);
  auto r = infer::prove(two, parse_formula("knave(a) & knight(b)."));
  REQUIRE(r.proof);
  std::string why;
  CHECK_MESSAGE(infer::check_proof(*r.proof, two, &why), why << "\n" << show(*r.proof));
  CHECK(r.proof->steps.back().empty());
  bool derives_knave_a = false;
  for (const auto& s : r.proof->steps)
    derives_knave_a = derives_knave_a || (s.provenance.parents.size() > 0 && fol::print_clause(s) == "knave(a)");
  CHECK_MESSAGE(derives_knave_a, show(*r.proof));

  ClauseSet sue = clauses_of(kSueAlice);
  for (const char* g : {"knight(sue).", "lie(alice).", "knave(alice).", "different(sue,alice).",
                        "-same(sue,alice).", "-(knight(alice) & knight(sue))."}) {
    auto p = infer::prove(sue, parse_formula(g));
    REQUIRE_MESSAGE(p.proof, g);
    CHECK_MESSAGE(infer::check_proof(*p.proof, sue, &why), g << ": " << why);
  }
  CHECK(infer::prove(sue, parse_formula("knight(alice).")).status == infer::ProveStatus::kSaturated);

  // Equality: distinct names cannot be equal.
  ClauseSet names = clauses_of("a != b. knight(a).");
  auto ne = infer::prove(names, parse_formula("a != b."));
  REQUIRE(ne.proof);
  CHECK(infer::check_proof(*ne.proof, names));
  auto eq = infer::prove(clauses_of("a = b. knight(a)."), parse_formula("knight(b)."));
  REQUIRE(eq.proof);
  CHECK(infer::check_proof(*eq.proof, clauses_of("a = b. knight(a).")));
}

TEST_CASE("check_proof rejects tampering") {
  ClauseSet two = clauses_of(kTwoPeople);
  auto r = infer::prove(two, parse_formula("knave(a) & knight(b)."));
  REQUIRE(r.proof);
  infer::Proof bad = *r.proof;
  // Flip the sign of a literal in the first derived step.
  for (auto& s : bad.steps)
    if (!s.provenance.parents.empty() && !s.empty()) {
      s.literals[0].positive = !s.literals[0].positive;
      break;
    }
  CHECK_FALSE(infer::check_proof(bad, two));
  infer::Proof wrong_goal = *r.proof;
  wrong_goal.goal = parse_formula("knight(a).");
  CHECK_FALSE(infer::check_proof(wrong_goal, two));
  infer::Proof cut = *r.proof;
  cut.steps.pop_back();
  CHECK_FALSE(infer::check_proof(cut, two));
}

// The proof of "a is a knave and b is a knight" for the two-people puzzle, as
// written out by hand with m(x) the message of x and a final hyper step.
TEST_CASE("check_proof: hand-transcribed proof") {
  ClauseSet axioms = {clause("m(a) | -knave(a) | -knave(b).", 3), clause("-knight(x) | m(x).", 4),
                      clause("-knave(x) | -m(x).", 5),            clause("inhabitant(a).", 7),
                      clause("inhabitant(b).", 8),                clause("-inhabitant(x) | knight(x) | knave(x).", 13),
                      clause("-m(a) | knave(a).", 15)};
  infer::Proof p;
  p.goal = parse_formula("knave(a) & knight(b).");
  p.steps = {axioms[0], axioms[1], axioms[2], axioms[3], axioms[4],
             clause("-knave(a) | -knight(b).", 12, infer::kGoal),
             axioms[5],
             clause("knight(b) | knave(b).", 14, infer::kResolve, {13, 8}),
             axioms[6],
             clause("knight(a) | knave(a).", 16, infer::kResolve, {13, 7}),
             clause("knave(a) | m(a).", 17, infer::kResolve, {16, 4}),
             clause("knave(b) | -knave(a).", 18, infer::kResolve, {14, 12}),
             clause("-knave(a) | -knave(b).", 20, infer::kResolve, {3, 5}),
             clause("knave(a).", 22, infer::kResolve, {17, 15}),
             clause("-knave(b).", 23, infer::kResolve, {20, 22}),
             empty_clause(24, infer::kHyper, {18, 22, 23})};
  std::string why;
  CHECK_MESSAGE(infer::check_proof(p, axioms, &why), why);

  infer::Proof wrong = p;
  wrong.steps[13] = clause("knave(b).", 22, infer::kResolve, {17, 15});
  CHECK_FALSE(infer::check_proof(wrong, axioms));

  // The prover refutes the same clauses.
  auto r = infer::prove(axioms, p.goal);
  REQUIRE(r.proof);
  CHECK(infer::check_proof(*r.proof, axioms));
}

TEST_CASE("prove: hyper steps") {
  // Resolving a three-literal nucleus against two units in sequence.
  ClauseSet axioms = clauses_of("-p(a) | -q(a) | r(a). p(a). q(a).");
  auto r = infer::prove(axioms, parse_formula("r(a)."));
  REQUIRE(r.proof);
  CHECK(infer::check_proof(*r.proof, axioms));
  bool hyper = false;
  for (const auto& s : r.proof->steps) hyper = hyper || s.provenance.rule == infer::kHyper;
  CHECK_MESSAGE(hyper, show(*r.proof));
}

// Universal theories whose only constants are the persons: a ground goal is
// provable exactly when it holds in every model over those persons.
TEST_CASE("property: prover agrees with the model finder") {
  std::mt19937 rng(77);
  const std::vector<std::string> names = {"a", "b", "c"};
  for (int round = 0; round < 60; ++round) {
    int n = 2 + static_cast<int>(rng() % 2);
    std::vector<Formula> atoms;
    for (int i = 0; i < n; ++i) {
      atoms.push_back(Formula::atom("knight", {fol::Term::constant(names[i])}));
      atoms.push_back(Formula::atom("knave", {fol::Term::constant(names[i])}));
    }
    std::string text =
        "all x (knight(x) | knave(x)). all x (knight(x) -> -knave(x)). all x (knight(x) -> say(x)). "
        "all x (knave(x) -> -say(x)). ";
    ClauseSet axioms = clauses_of(text);
    fol::Clausifier more(100);
    for (int i = 0; i < n; ++i) {
      Formula claim = Formula::equivalence(Formula::atom("say", {fol::Term::constant(names[i])}),
                                           oracle::random_ground_formula(rng, atoms, 2));
      for (auto& c : more.clausify(claim)) axioms.push_back(c);
    }
    for (int i = 0; i + 1 < n; ++i)
      for (int j = i + 1; j < n; ++j)
        axioms.push_back(more.clausify(parse_formula(names[i] + " != " + names[j] + "."))[0]);
    std::map<std::string, int> constants;
    for (int i = 0; i < n; ++i) constants[names[i]] = i;
    auto models = infer::find_models(axioms, n, 1000, constants);
    for (int k = 0; k < 3; ++k) {
      Formula goal = oracle::random_ground_formula(rng, atoms, 2);
      auto r = infer::prove(axioms, goal, {20000, 10.0});
      REQUIRE(r.status != infer::ProveStatus::kResourceOut);
      bool entailed = true_in_all(models, goal);
      CHECK_MESSAGE((r.status == infer::ProveStatus::kProved) == entailed, fol::print_formula(goal));
      if (r.proof) {
        CHECK(infer::check_proof(*r.proof, axioms));
        // Soundness: axioms plus the negated goal have no model.
        ClauseSet refuted = infer::refutation_input(axioms, goal);
        CHECK(infer::find_models(refuted, n, 1, constants).empty());
      }
    }
  }
}
