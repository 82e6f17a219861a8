#include "puzzle/fol/clausify.h"

#include <algorithm>
#include <cctype>

#include "puzzle/fol/substitution.h"

namespace puzzle::fol {

namespace {

using Kind = Formula::Kind;

Formula nnf(const Formula& f, bool negated) {
  switch (f.kind) {
    case Kind::kAtom:
    case Kind::kEquality:
      return negated ? Formula::negation(f) : f;
    case Kind::kNot:
      return nnf(f.body(), !negated);
    case Kind::kAnd:
      return negated ? Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Kind::kOr:
      return negated ? Formula::conjunction(nnf(f.lhs(), true), nnf(f.rhs(), true))
                     : Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), false));
    case Kind::kImplies:
      return negated ? Formula::conjunction(nnf(f.lhs(), false), nnf(f.rhs(), true))
                     : Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), false));
    case Kind::kIff:
      if (negated)
        return Formula::conjunction(Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), false)),
                                    Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), true)));
      return Formula::conjunction(Formula::disjunction(nnf(f.lhs(), true), nnf(f.rhs(), false)),
                                  Formula::disjunction(nnf(f.lhs(), false), nnf(f.rhs(), true)));
    case Kind::kForAll:
      return negated ? Formula::exists(f.name, nnf(f.body(), true)) : Formula::forall(f.name, nnf(f.body(), false));
    case Kind::kExists:
      return negated ? Formula::forall(f.name, nnf(f.body(), true)) : Formula::exists(f.name, nnf(f.body(), false));
  }
  return f;
}

void all_names(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.args) collect_variables(t, out);
  if (f.is_quantifier()) out.insert(f.name);
  for (const auto& c : f.children) all_names(c, out);
}

Formula rectify_with(const Formula& f, std::set<std::string>& taken) {
  if (f.is_atomic()) return f;
  if (f.is_quantifier()) {
    std::string var = fresh_name(f.name, taken);
    taken.insert(var);
    Formula body = var == f.name ? f.body() : substitute(f.body(), Substitution{{f.name, Term::variable(var)}});
    Formula out = f;
    out.name = var;
    out.children[0] = rectify_with(body, taken);
    return out;
  }
  Formula out = f;
  for (auto& c : out.children) c = rectify_with(c, taken);
  return out;
}

class Skolemizer {
 public:
  explicit Skolemizer(int& next) : next_(next) {}

  // Input is rectified NNF. Output is quantifier-free; universal variables are
  // left as free variables.
  Formula run(const Formula& f, std::vector<std::string>& universals) {
    switch (f.kind) {
      case Kind::kForAll: {
        universals.push_back(f.name);
        Formula body = run(f.body(), universals);
        universals.pop_back();
        return body;
      }
      case Kind::kExists: {
        std::set<std::string> body_free = free_variables(f.body());
        std::vector<Term> args;
        for (const auto& u : universals)
          if (body_free.count(u)) args.push_back(Term::variable(u));
        Term witness = Term::application("sk" + std::to_string(next_++), std::move(args));
        return run(substitute(f.body(), Substitution{{f.name, witness}}), universals);
      }
      case Kind::kAnd:
      case Kind::kOr: {
        Formula out = f;
        for (auto& c : out.children) c = run(c, universals);
        return out;
      }
      default:
        return f;
    }
  }

 private:
  int& next_;
};

using Cnf = std::vector<std::vector<Literal>>;

Literal to_literal(const Formula& f) {
  bool positive = f.kind != Kind::kNot;
  const Formula& atom = positive ? f : f.body();
  if (atom.kind == Kind::kEquality) return Literal{positive, Literal::kEquality, atom.args};
  return Literal{positive, atom.name, atom.args};
}

Cnf to_cnf(const Formula& f) {
  if (f.kind == Kind::kAnd) {
    Cnf out = to_cnf(f.lhs());
    Cnf rhs = to_cnf(f.rhs());
    out.insert(out.end(), rhs.begin(), rhs.end());
    return out;
  }
  if (f.kind == Kind::kOr) {
    Cnf lhs = to_cnf(f.lhs());
    Cnf rhs = to_cnf(f.rhs());
    Cnf out;
    out.reserve(lhs.size() * rhs.size());
    for (const auto& a : lhs)
      for (const auto& b : rhs) {
        std::vector<Literal> merged = a;
        merged.insert(merged.end(), b.begin(), b.end());
        out.push_back(std::move(merged));
      }
    return out;
  }
  return {{to_literal(f)}};
}

std::string normal_variable_name(size_t i) {
  static const char* kNames[] = {"x", "y", "z", "u", "v", "w"};
  if (i < 6) return kNames[i];
  return "v" + std::to_string(i);
}

void rename_term_vars(Term& t, std::map<std::string, std::string>& names) {
  if (t.is_variable()) {
    auto it = names.find(t.name);
    if (it == names.end()) it = names.emplace(t.name, normal_variable_name(names.size())).first;
    t.name = it->second;
    return;
  }
  for (auto& a : t.args) rename_term_vars(a, names);
}

}  // namespace

Formula to_nnf(const Formula& f) { return nnf(f, false); }

Formula rectify(const Formula& f) {
  std::set<std::string> taken = free_variables(f);
  return rectify_with(f, taken);
}

Clause normalize_variables(const Clause& c) {
  std::map<std::string, std::string> names;
  Clause out = c;
  for (auto& l : out.literals)
    for (auto& t : l.args) rename_term_vars(t, names);
  return out;
}

ClauseSet Clausifier::clausify(const Formula& f, Provenance provenance) {
  // Implications and equivalences are expanded first; expanding an
  // equivalence duplicates its operands, so binders are renamed afterwards.
  Formula g = rectify(to_nnf(f));
  std::vector<std::string> universals;
  g = Skolemizer(next_skolem_).run(g, universals);

  ClauseSet out;
  for (auto& lits : to_cnf(g)) {
    Clause c(std::move(lits), provenance);
    if (c.is_tautology()) continue;
    c = normalize_variables(c);
    bool duplicate = std::any_of(out.begin(), out.end(), [&](const Clause& d) { return d.same_literals(c); });
    if (!duplicate) out.push_back(std::move(c));
  }
  return out;
}

ClauseSet clausify(const Formula& f, Provenance provenance) { return Clausifier().clausify(f, std::move(provenance)); }

namespace {

void skolem_indices(const Term& t, int& max_index) {
  if (!t.is_variable() && t.name.size() > 2 && t.name.compare(0, 2, "sk") == 0 &&
      std::all_of(t.name.begin() + 2, t.name.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
    max_index = std::max(max_index, std::stoi(t.name.substr(2)));
  for (const auto& a : t.args) skolem_indices(a, max_index);
}

}  // namespace

int next_free_skolem_index(const ClauseSet& clauses) {
  int max_index = 0;
  for (const auto& c : clauses)
    for (const auto& l : c.literals)
      for (const auto& t : l.args) skolem_indices(t, max_index);
  return max_index + 1;
}

}  // namespace puzzle::fol
