#include <random>

#include "doctest.h"
#include "oracle.h"
#include "puzzle/fol/clausify.h"
#include "puzzle/fol/parser.h"
#include "puzzle/fol/printer.h"
#include "puzzle/fol/substitution.h"

using namespace puzzle::fol;

namespace {

Term var(const char* n) { return Term::variable(n); }
Term con(const char* n) { return Term::constant(n); }
Formula atom(const char* p, std::vector<Term> args = {}) { return Formula::atom(p, std::move(args)); }
Literal lit(bool sign, const char* p, std::vector<Term> args) { return Literal{sign, p, std::move(args)}; }

bool same_clause_sets(const ClauseSet& got, const std::vector<std::vector<Literal>>& want) {
  if (got.size() != want.size()) return false;
  for (const auto& w : want) {
    Clause c(w);
    bool found = false;
    for (const auto& g : got) found = found || g.same_literals(c);
    if (!found) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("parse_formula: inhabitants are knights or knaves") {
  Formula f = parse_formula("all x (inhabitant(x) -> knight(x) | knave(x)).");
  Formula want = Formula::forall(
      "x", Formula::implication(atom("inhabitant", {var("x")}),
                                Formula::disjunction(atom("knight", {var("x")}), atom("knave", {var("x")}))));
  CHECK(f == want);
}

TEST_CASE("parse_formula: atoms, distinctness and free variables") {
  CHECK(parse_formula("knight(a).") == atom("knight", {con("a")}));
  CHECK(parse_formula("alice != sam.") == Formula::negation(Formula::equality(con("alice"), con("sam"))));
  // Free one-letter u..z names are implicitly universal variables.
  CHECK(parse_formula("knave(x) -> -m(x).") ==
        Formula::implication(atom("knave", {var("x")}), Formula::negation(atom("m", {var("x")}))));
  // Bound names are variables whatever they look like.
  Formula g = parse_formula("exists person knave(person).");
  CHECK(g.body().args[0].is_variable());
  CHECK(parse_formula("p.") == atom("p"));
}

TEST_CASE("parse_formula: precedence and associativity") {
  Formula f = parse_formula("a & b | c -> d <-> e.");
  REQUIRE(f.kind == Formula::Kind::kIff);
  CHECK(f.lhs().kind == Formula::Kind::kImplies);
  CHECK(f.lhs().lhs().kind == Formula::Kind::kOr);
  CHECK(f.lhs().lhs().lhs().kind == Formula::Kind::kAnd);
  Formula g = parse_formula("a -> b -> c.");
  CHECK(g.rhs().kind == Formula::Kind::kImplies);
}

TEST_CASE("parse_formula: errors carry positions") {
  try {
    parse_formula("knight(a) &\n  & knave(b).");
    FAIL("expected a syntax error");
  } catch (const SyntaxError& e) {
    CHECK(e.line() == 2);
    CHECK(e.column() == 3);
  }
  CHECK_THROWS_AS(parse_formula("knight(a)"), SyntaxError);
  CHECK_THROWS_AS(parse_formula("knight(a)) ."), SyntaxError);
  SymbolTable symbols;
  parse_formula("knight(a).", &symbols);
  CHECK_THROWS_AS(parse_formula("knight(a, b).", &symbols), ArityError);
}

TEST_CASE("parse_theory: sections and comments") {
  Theory t = parse_theory(
      "% background\n"
      "formulas(assumptions).\n"
      "  knight(x) -> m(x).   % knights tell the truth\n"
      "  inhabitant(a).\n"
      "end_of_list.\n"
      "formulas(goals).\n"
      "  knave(a) & knight(b).\n"
      "end_of_list.\n");
  CHECK(t.assumptions.size() == 2);
  CHECK(t.goals.size() == 1);
  CHECK_THROWS_AS(parse_theory("formulas(goals). p."), SyntaxError);
}

TEST_CASE("print_formula renders the surface syntax") {
  CHECK(print_formula(parse_formula("all x (inhabitant(x) -> knight(x) | knave(x)).")) ==
        "all x (inhabitant(x) -> knight(x) | knave(x))");
  CHECK(print_formula(parse_formula("-(a = b).")) == "a != b");
  CHECK(print_formula(parse_formula("(a | b) & c.")) == "(a | b) & c");
  CHECK(print_formula(parse_formula("a & (b & c).")) == "a & (b & c)");
  CHECK(print_formula(parse_formula("(a -> b) -> c.")) == "(a -> b) -> c");
  CHECK(print_formula(parse_formula("say(marge) <-> knight(homer) & knight(marge) | knave(homer) & knave(marge).")) ==
        "say(marge) <-> knight(homer) & knight(marge) | knave(homer) & knave(marge)");
}

TEST_CASE("substitute") {
  CHECK(substitute(atom("knight", {var("x")}), {{"x", con("homer")}}) == atom("knight", {con("homer")}));
  CHECK(substitute(atom("same", {var("x"), var("y")}), {{"x", con("marge")}, {"y", con("homer")}}) ==
        atom("same", {con("marge"), con("homer")}));

  SUBCASE("capture avoidance renames the binder") {
    Formula f = Formula::forall("x", atom("p", {var("x"), var("y")}));
    Formula g = substitute(f, {{"y", var("x")}});
    REQUIRE(g.kind == Formula::Kind::kForAll);
    CHECK(g.name != "x");
    CHECK(g.body() == atom("p", {var(g.name.c_str()), var("x")}));
  }
  SUBCASE("bound occurrences are untouched") {
    Formula f = Formula::forall("x", atom("p", {var("x")}));
    CHECK(substitute(f, {{"x", con("a")}}) == f);
  }
}

TEST_CASE("unify") {
  auto s = unify(lit(true, "knave", {var("x")}), lit(true, "knave", {con("b")}));
  REQUIRE(s);
  CHECK(s->size() == 1);
  CHECK(s->at("x") == con("b"));
  CHECK_FALSE(unify(lit(true, "p", {var("x"), var("x")}), lit(true, "p", {con("a"), con("b")})));
  CHECK_FALSE(unify(var("x"), Term::application("f", {var("x")})));
  CHECK_FALSE(unify(lit(true, "p", {con("a")}), lit(true, "q", {con("a")})));
  auto t = unify(Term::application("f", {var("x"), var("y")}), Term::application("f", {var("y"), con("a")}));
  REQUIRE(t);
  CHECK(instantiate(var("x"), *t) == con("a"));
  CHECK(instantiate(var("y"), *t) == con("a"));
}

namespace {

Term random_term(std::mt19937& rng, int depth) {
  static const char* kVars[] = {"x", "y", "z"};
  static const char* kConsts[] = {"a", "b"};
  std::uniform_int_distribution<int> pick(0, depth > 0 ? 5 : 4);
  int c = pick(rng);
  if (c < 3) return Term::variable(kVars[c]);
  if (c < 5) return Term::constant(kConsts[c - 3]);
  return Term::application("f", {random_term(rng, depth - 1)});
}

std::vector<Term> ground_terms() {
  return {con("a"), con("b"), Term::application("f", {con("a")}), Term::application("f", {con("b")}),
          Term::application("f", {Term::application("f", {con("a")})})};
}

}  // namespace

TEST_CASE("property: unify returns a most general unifier") {
  std::mt19937 rng(7);
  const auto grounds = ground_terms();
  int unifiable = 0;
  for (int trial = 0; trial < 300; ++trial) {
    Term a = random_term(rng, 2), b = random_term(rng, 2);
    auto mgu = unify(a, b);
    bool any_ground_unifier = false;
    for (const auto& gx : grounds)
      for (const auto& gy : grounds)
        for (const auto& gz : grounds) {
          Substitution sigma{{"x", gx}, {"y", gy}, {"z", gz}};
          if (!(instantiate(a, sigma) == instantiate(b, sigma))) continue;
          any_ground_unifier = true;
          REQUIRE(mgu);
          // sigma factors through the mgu: sigma = mgu ; sigma.
          Substitution factored = compose(*mgu, sigma);
          for (const char* v : {"x", "y", "z"}) CHECK(instantiate(Term::variable(v), factored) == instantiate(Term::variable(v), sigma));
        }
    if (mgu) {
      ++unifiable;
      CHECK(instantiate(a, *mgu) == instantiate(b, *mgu));
      // Idempotence.
      CHECK(compose(*mgu, *mgu) == *mgu);
    }
    if (any_ground_unifier) CHECK(mgu.has_value());
  }
  CHECK(unifiable > 20);
}

TEST_CASE("property: substitutions with disjoint domains and ground ranges commute") {
  std::mt19937 rng(11);
  std::vector<Formula> atoms = {atom("p", {var("x")}), atom("q", {var("x"), var("y")}), atom("r", {var("y")}),
                                Formula::forall("x", atom("q", {var("x"), var("y")}))};
  for (int trial = 0; trial < 100; ++trial) {
    Formula f = oracle::random_ground_formula(rng, atoms, 3);
    Substitution s1{{"x", con("a")}}, s2{{"y", Term::application("f", {con("b")})}};
    CHECK(substitute(substitute(f, s1), s2) == substitute(substitute(f, s2), s1));
  }
}

namespace {

Formula random_formula(std::mt19937& rng, int depth, std::vector<std::string>& bound) {
  std::uniform_int_distribution<int> pick(0, depth <= 0 ? 1 : 9);
  int c = pick(rng);
  auto random_arg = [&]() {
    std::uniform_int_distribution<int> k(0, 3 + static_cast<int>(bound.size()));
    int i = k(rng);
    if (i == 0) return con("marge");
    if (i == 1) return con("sk1");
    if (i == 2) return var("x");  // free variable
    if (i == 3) return Term::application("g", {con("homer")});
    return Term::variable(bound[i - 4]);
  };
  auto sub = [&] { return random_formula(rng, depth - 1, bound); };
  switch (c) {
    case 0: return atom("knight", {random_arg()});
    case 1: return Formula::equality(random_arg(), random_arg());
    case 2: return Formula::negation(sub());
    case 3: return Formula::conjunction(sub(), sub());
    case 4: return Formula::disjunction(sub(), sub());
    case 5: return Formula::implication(sub(), sub());
    case 6: return Formula::equivalence(sub(), sub());
    case 7: return atom("same", {random_arg(), random_arg()});
    default: {
      std::string v = "person" + std::to_string(bound.size());
      bound.push_back(v);
      Formula body = sub();
      bound.pop_back();
      return c == 8 ? Formula::forall(v, body) : Formula::exists(v, body);
    }
  }
}

}  // namespace

TEST_CASE("property: parse_formula inverts print_formula") {
  std::mt19937 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    std::vector<std::string> bound;
    Formula f = random_formula(rng, 4, bound);
    std::string text = print_formula(f) + ".";
    INFO(text);
    CHECK(parse_formula(text) == f);
  }
}

TEST_CASE("clausify: puzzle-shaped examples") {
  CHECK(same_clause_sets(clausify(parse_formula("all x (inhabitant(x) -> knight(x) | knave(x)).")),
                         {{lit(false, "inhabitant", {var("x")}), lit(true, "knight", {var("x")}),
                           lit(true, "knave", {var("x")})}}));
  CHECK(same_clause_sets(clausify(parse_formula("knight(a).")), {{lit(true, "knight", {con("a")})}}));
  CHECK(same_clause_sets(clausify(parse_formula("exists x knave(x).")), {{lit(true, "knave", {con("sk1")})}}));

  Formula message = parse_formula("m(a) <-> knave(a) & knave(b).");
  ClauseSet clauses = clausify(message);
  CHECK(same_clause_sets(clauses, {{lit(false, "m", {con("a")}), lit(true, "knave", {con("a")})},
                                   {lit(false, "m", {con("a")}), lit(true, "knave", {con("b")})},
                                   {lit(true, "m", {con("a")}), lit(false, "knave", {con("a")}),
                                    lit(false, "knave", {con("b")})}}));
  // Truth-table oracle: ground and Skolem-free, so the clause set is equivalent.
  std::set<std::string> keys;
  oracle::ground_atoms(message, keys);
  oracle::for_each_assignment(keys, [&](const auto& v) {
    bool all = true;
    for (const auto& c : clauses) all = all && oracle::eval_clause(c, v);
    CHECK(oracle::eval_ground(message, v) == all);
    return true;
  });
}

TEST_CASE("clausify: Skolem naming, tautologies and provenance") {
  Clausifier cl;
  auto first = cl.clausify(parse_formula("exists x knave(x)."));
  auto second = cl.clausify(parse_formula("all y exists z same(y, z)."), Provenance{Origin::kSynonymy, "", {}});
  CHECK(print_clause(first.at(0)) == "knave(sk1)");
  CHECK(print_clause(second.at(0)) == "same(x,sk2(x))");
  CHECK(second.at(0).provenance.origin == Origin::kSynonymy);
  CHECK(next_free_skolem_index(second) == 3);
  CHECK(clausify(parse_formula("p | -p.")).empty());
  CHECK(clausify(parse_formula("a = a | q.")).empty());
  // Skolem functions only depend on universals the witness can see.
  auto third = clausify(parse_formula("(all x knight(x)) & (exists y knave(y))."));
  CHECK(functions(third).empty());
}

TEST_CASE("clausify: quantifiers under equivalence are renamed apart") {
  Formula f = parse_formula("p <-> (all x q(x)).");
  ClauseSet clauses = clausify(f);
  // p -> all x q(x)  gives  -p | q(x);  (all x q(x)) -> p  gives  -q(sk1) | p.
  CHECK(same_clause_sets(clauses, {{lit(false, "p", {}), lit(true, "q", {var("x")})},
                                   {lit(false, "q", {con("sk1")}), lit(true, "p", {})}}));
}

TEST_CASE("property: clausify preserves satisfiability of ground formulas") {
  std::mt19937 rng(2024);
  std::vector<Formula> atoms = {atom("p"), atom("q"), atom("knight", {con("a")}), atom("knave", {con("a")}),
                                atom("knight", {con("b")}), atom("say", {con("b")})};
  int discrepancies = 0;
  for (int trial = 0; trial < 250; ++trial) {
    Formula f = oracle::random_ground_formula(rng, atoms, 4);
    ClauseSet clauses = clausify(f);
    if (oracle::satisfiable(f) != oracle::satisfiable(clauses)) ++discrepancies;
    // Skolem-free ground input: the clause set is equivalent, not just equisatisfiable.
    std::set<std::string> keys;
    oracle::ground_atoms(f, keys);
    oracle::for_each_assignment(keys, [&](const auto& v) {
      bool all = true;
      for (const auto& c : clauses) {
        for (const auto& l : c.literals)
          if (!l.is_equality() && !v.count(oracle::atom_key(l.predicate, l.args))) return true;
        all = all && oracle::eval_clause(c, v);
      }
      if (oracle::eval_ground(f, v) != all) ++discrepancies;
      return true;
    });
  }
  CHECK(discrepancies == 0);
}
