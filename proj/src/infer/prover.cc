#include "puzzle/infer/prover.h"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>
#include <tuple>

#include "puzzle/fol/clausify.h"
#include "puzzle/fol/substitution.h"

namespace puzzle::infer {

namespace {

using fol::Clause;
using fol::ClauseSet;
using fol::Formula;
using fol::Literal;
using fol::Origin;
using fol::Provenance;
using fol::Substitution;
using fol::Term;

Clause rename_apart(const Clause& c, const std::string& suffix) {
  Substitution s;
  for (const auto& v : c.variables()) s[v] = Term::variable(v + suffix);
  Clause out = c;
  for (auto& l : out.literals) l = fol::instantiate(l, s);
  return out;
}

Clause apply(const std::vector<Literal>& lits, const Substitution& s, Provenance prov) {
  std::vector<Literal> out;
  out.reserve(lits.size());
  for (const auto& l : lits) out.push_back(fol::instantiate(l, s));
  return fol::normalize_variables(Clause(std::move(out), std::move(prov)));
}

bool has_positive_equality(const ClauseSet& clauses) {
  for (const auto& c : clauses)
    for (const auto& l : c.literals)
      if (l.is_equality() && l.positive) return true;
  return false;
}

Literal eq(const Term& a, const Term& b, bool positive) { return Literal{positive, Literal::kEquality, {a, b}}; }

// Atom ordering for ordered resolution: predicate precedence first, then, for
// ground atoms of one predicate, argument size and lexicographic order. Any
// other pair is incomparable. The ordering is total on ground atoms and
// stable under substitution.
class AtomOrder {
 public:
  AtomOrder() = default;
  // Predicates occurring in fewer clauses rank higher, so the widespread
  // ones (knight, knave) are resolved on last.
  explicit AtomOrder(const ClauseSet& clauses) {
    std::map<std::string, int> count;
    for (const auto& c : clauses) {
      std::set<std::string> seen;
      for (const auto& l : c.literals) seen.insert(l.predicate);
      for (const auto& p : seen) ++count[p];
    }
    std::vector<std::pair<int, std::string>> ranked;
    for (const auto& [p, n] : count) ranked.push_back({p == Literal::kEquality ? 1 << 30 : n, p});
    std::sort(ranked.begin(), ranked.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first > b.first : a.second > b.second;
    });
    for (size_t i = 0; i < ranked.size(); ++i) rank_[ranked[i].second] = static_cast<int>(i);
  }

  bool greater(const Literal& a, const Literal& b) const {
    int ra = rank(a.predicate), rb = rank(b.predicate);
    if (ra != rb) return ra > rb;
    if (a.predicate != b.predicate || !ground(a) || !ground(b)) return false;
    return key(a) > key(b);
  }

 private:
  int rank(const std::string& p) const {
    auto it = rank_.find(p);
    return it == rank_.end() ? -1 : it->second;
  }
  static bool ground(const Literal& l) {
    return std::all_of(l.args.begin(), l.args.end(), [](const Term& t) { return t.is_ground(); });
  }
  static size_t size(const Term& t) {
    size_t n = 1;
    for (const auto& a : t.args) n += size(a);
    return n;
  }
  static void flatten(const Term& t, std::vector<std::string>& out) {
    out.push_back(t.name);
    for (const auto& a : t.args) flatten(a, out);
  }
  static std::pair<size_t, std::vector<std::string>> key(const Literal& l) {
    size_t n = 0;
    std::vector<std::string> symbols;
    for (const auto& t : l.args) {
      n += size(t);
      flatten(t, symbols);
    }
    return {n, symbols};
  }

  std::map<std::string, int> rank_;
};

// True when no other literal of the instantiated clause is greater than the
// one at index i.
bool eligible(const std::vector<Literal>& lits, size_t i, const Substitution& s, const AtomOrder& order) {
  Literal l = fol::instantiate(lits[i], s);
  for (size_t k = 0; k < lits.size(); ++k)
    if (k != i && order.greater(fol::instantiate(lits[k], s), l)) return false;
  return true;
}

// Resolvents on eligible literals only; `order` null means unrestricted.
std::vector<Clause> resolve_pair(const Clause& a, const Clause& b, const AtomOrder* order) {
  Clause c = rename_apart(b, "'");
  std::vector<Clause> out;
  for (size_t i = 0; i < a.literals.size(); ++i)
    for (size_t j = 0; j < c.literals.size(); ++j) {
      const Literal& l = a.literals[i];
      const Literal& m = c.literals[j];
      if (l.positive == m.positive || l.predicate != m.predicate || l.args.size() != m.args.size()) continue;
      auto s = fol::unify(l, m);
      if (!s) continue;
      if (order && (!eligible(a.literals, i, *s, *order) || !eligible(c.literals, j, *s, *order))) continue;
      std::vector<Literal> lits;
      for (size_t k = 0; k < a.literals.size(); ++k)
        if (k != i) lits.push_back(a.literals[k]);
      for (size_t k = 0; k < c.literals.size(); ++k)
        if (k != j) lits.push_back(c.literals[k]);
      out.push_back(apply(lits, *s, {Origin::kDerived, kResolve, {a.id, b.id}}));
    }
  return out;
}

size_t symbols(const Term& t) {
  size_t n = 1;
  for (const auto& a : t.args) n += symbols(a);
  return n;
}

size_t weight(const Clause& c) {
  size_t n = 0;
  for (const auto& l : c.literals)
    for (const auto& t : l.args) n += symbols(t);
  return n;
}

// Subsumption search: literals of `g` from index i onward map into `s`.
bool subsumes_from(const Clause& g, const Clause& s, size_t i, const Substitution& sigma) {
  if (i == g.literals.size()) return true;
  const Literal& l = g.literals[i];
  for (const auto& m : s.literals) {
    if (m.positive != l.positive || m.predicate != l.predicate || m.args.size() != l.args.size()) continue;
    if (auto next = fol::match(l, m, sigma); next && subsumes_from(g, s, i + 1, *next)) return true;
  }
  return false;
}

// Sequential resolution of `current` against every remaining satellite, in
// any order, ending in a variant of `target`.
bool hyper_chain(const Clause& current, std::vector<const Clause*> satellites, const Clause& target) {
  if (satellites.empty()) return variant(current, target);
  for (size_t i = 0; i < satellites.size(); ++i) {
    std::vector<const Clause*> rest = satellites;
    rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
    for (const auto& r : resolvents(current, *satellites[i]))
      if (hyper_chain(r, rest, target)) return true;
  }
  return false;
}

class Saturation {
 public:
  Saturation(const ClauseSet& input, const ProverLimits& limits) : limits_(limits), order_(input) {
    start_ = std::chrono::steady_clock::now();
    for (const auto& c : input) {
      if (c.is_tautology() || forward_subsumed(c)) continue;
      if (keep(c)) return;
    }
  }

  ProveResult run(const Formula& goal) {
    ProveResult result;
    while (!empty_id_) {
      if (sos_.empty()) {
        result.status = ProveStatus::kSaturated;
        break;
      }
      if (out_of_resources()) {
        result.status = ProveStatus::kResourceOut;
        break;
      }
      auto first = sos_.begin();
      int given = std::get<2>(*first);
      sos_.erase(first);
      if (deleted_.count(given)) continue;
      ++result.given;
      usable_.push_back(given);
      infer(given);
    }
    result.generated = generated_;
    result.seconds = elapsed();
    if (empty_id_) {
      result.status = ProveStatus::kProved;
      result.proof = extract(goal);
    }
    return result;
  }

 private:
  double elapsed() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

  bool out_of_resources() const { return generated_ >= limits_.max_clauses || elapsed() > limits_.max_seconds; }

  const Clause& clause(int id) const { return all_[static_cast<size_t>(id - 1)]; }

  bool forward_subsumed(const Clause& c) const {
    for (int id : kept_)
      if (!deleted_.count(id) && clause(id).size() <= c.size() && subsumes(clause(id), c)) return true;
    return false;
  }

  // Stores a new clause; returns true when it is empty.
  bool keep(Clause c) {
    c.id = static_cast<int>(all_.size()) + 1;
    all_.push_back(c);
    if (c.empty()) {
      empty_id_ = c.id;
      return true;
    }
    for (int id : kept_)
      if (!deleted_.count(id) && clause(id).size() >= c.size() && subsumes(c, clause(id))) deleted_.insert(id);
    kept_.push_back(c.id);
    sos_.insert({c.size(), weight(c), c.id});
    return false;
  }

  void consider(Clause c) {
    ++generated_;
    if (empty_id_ || c.is_tautology() || forward_subsumed(c)) return;
    keep(std::move(c));
  }

  void infer(int given) {
    Clause g = clause(given);
    for (auto& f : factors(g)) {
      f.provenance = {Origin::kDerived, kFactor, {given}};
      consider(std::move(f));
      if (empty_id_) return;
    }
    std::vector<int> partners = usable_;
    for (int other : partners) {
      if (out_of_resources()) return;
      if (deleted_.count(other) && other != given) continue;
      for (auto& r : resolve_pair(g, clause(other), &order_)) {
        r.provenance = {Origin::kDerived, kResolve, {given, other}};
        consider(std::move(r));
        if (empty_id_) return;
      }
    }
  }

  Proof extract(const Formula& goal) const {
    std::set<int> needed;
    std::vector<int> stack = {empty_id_};
    while (!stack.empty()) {
      int id = stack.back();
      stack.pop_back();
      if (!needed.insert(id).second) continue;
      for (int p : clause(id).provenance.parents) stack.push_back(p);
    }
    Proof p;
    p.goal = goal;
    for (int id : needed) p.steps.push_back(clause(id));
    collapse_hyper(p);
    return p;
  }

  // Rewrites chains of resolutions against unit clauses, whose intermediate
  // results are used once, into single hyper steps.
  static void collapse_hyper(Proof& p) {
    std::map<int, size_t> index;
    std::map<int, int> uses;
    for (size_t i = 0; i < p.steps.size(); ++i) index[p.steps[i].id] = i;
    for (const auto& s : p.steps)
      for (int parent : s.provenance.parents) ++uses[parent];
    std::set<int> removed;
    auto step = [&](int id) -> const Clause& { return p.steps[index.at(id)]; };
    auto intermediate = [&](int id) {
      const Clause& c = step(id);
      return c.provenance.rule == kResolve && uses[id] == 1 && !removed.count(id);
    };
    for (size_t k = p.steps.size(); k-- > 0;) {
      Clause& last = p.steps[k];
      if (removed.count(last.id) || last.provenance.rule != kResolve) continue;
      std::vector<int> satellites, chain;
      int cur = last.id;
      int nucleus = 0;
      while (true) {
        const auto& parents = step(cur).provenance.parents;
        if (parents.size() != 2 || parents[0] == parents[1]) break;
        int a = parents[0], b = parents[1];
        bool b_unit = step(b).size() == 1, a_unit = step(a).size() == 1;
        if (!a_unit && !b_unit) break;
        // Orient so the satellite is a unit, preferring a nucleus side that
        // continues the chain.
        if (!b_unit || (a_unit && intermediate(b) && !intermediate(a))) std::swap(a, b);
        satellites.insert(satellites.begin(), b);
        if (intermediate(a) && step(a).size() > 1) {
          chain.push_back(a);
          cur = a;
          continue;
        }
        nucleus = a;
        break;
      }
      if (!nucleus || satellites.size() < 2) continue;
      for (int id : chain) removed.insert(id);
      std::vector<int> parents = {nucleus};
      parents.insert(parents.end(), satellites.begin(), satellites.end());
      last.provenance = {Origin::kDerived, kHyper, parents};
    }
    ClauseSet kept;
    for (auto& s : p.steps)
      if (!removed.count(s.id)) kept.push_back(std::move(s));
    p.steps = std::move(kept);
  }

  ProverLimits limits_;
  AtomOrder order_;
  std::chrono::steady_clock::time_point start_;
  std::vector<Clause> all_;  // id = index + 1
  std::vector<int> kept_;
  std::set<int> deleted_;
  std::vector<int> usable_;
  std::set<std::tuple<size_t, size_t, int>> sos_;  // (literal count, symbol count, id)
  int empty_id_ = 0;
  size_t generated_ = 0;  // every inferred clause, kept or not
};

}  // namespace

const Clause* Proof::step(int id) const {
  for (const auto& s : steps)
    if (s.id == id) return &s;
  return nullptr;
}

const char* to_string(ProveStatus s) {
  switch (s) {
    case ProveStatus::kProved: return "proved";
    case ProveStatus::kSaturated: return "saturated";
    case ProveStatus::kResourceOut: return "resource";
  }
  return "?";
}

bool subsumes(const Clause& general, const Clause& specific) {
  if (general.size() > specific.size()) return false;
  for (const auto& l : general.literals)
    if (std::none_of(specific.literals.begin(), specific.literals.end(), [&](const Literal& m) {
          return m.positive == l.positive && m.predicate == l.predicate && m.args.size() == l.args.size();
        }))
      return false;
  // Specific clause variables act as constants; keep the two apart.
  Clause g = rename_apart(general, "'");
  return subsumes_from(g, specific, 0, {});
}

bool variant(const Clause& a, const Clause& b) {
  return a.size() == b.size() && subsumes(a, b) && subsumes(b, a);
}

std::vector<Clause> resolvents(const Clause& a, const Clause& b) { return resolve_pair(a, b, nullptr); }

std::vector<Clause> factors(const Clause& c) {
  std::vector<Clause> out;
  for (size_t i = 0; i < c.literals.size(); ++i)
    for (size_t j = i + 1; j < c.literals.size(); ++j) {
      const Literal& l = c.literals[i];
      const Literal& m = c.literals[j];
      if (l.positive != m.positive || l.predicate != m.predicate || l.args.size() != m.args.size()) continue;
      if (auto s = fol::unify(l, m)) out.push_back(apply(c.literals, *s, {Origin::kDerived, kFactor, {c.id}}));
    }
  return out;
}

ClauseSet equality_axioms(const ClauseSet& clauses) {
  Term x = Term::variable("x"), y = Term::variable("y"), z = Term::variable("z");
  Provenance prov{Origin::kInputAxiom, kEqualityAxiom, {}};
  ClauseSet out;
  out.emplace_back(std::vector<Literal>{eq(x, x, true)}, prov);
  out.emplace_back(std::vector<Literal>{eq(x, y, false), eq(y, x, true)}, prov);
  out.emplace_back(std::vector<Literal>{eq(x, y, false), eq(y, z, false), eq(x, z, true)}, prov);
  std::map<std::string, size_t> predicates, functions;
  std::function<void(const Term&)> note = [&](const Term& t) {
    if (t.kind == Term::Kind::kApplication) functions.emplace(t.name, t.args.size());
    for (const auto& a : t.args) note(a);
  };
  for (const auto& c : clauses)
    for (const auto& l : c.literals) {
      if (!l.is_equality()) predicates.emplace(l.predicate, l.args.size());
      for (const auto& t : l.args) note(t);
    }
  // Substitutivity, one argument position at a time.
  auto args_with = [](size_t arity, size_t pos, const Term& t) {
    std::vector<Term> args;
    for (size_t i = 0; i < arity; ++i) args.push_back(i == pos ? t : Term::variable("v" + std::to_string(i + 10)));
    return args;
  };
  for (const auto& [p, arity] : predicates)
    for (size_t i = 0; i < arity; ++i)
      out.emplace_back(std::vector<Literal>{eq(x, y, false), Literal{false, p, args_with(arity, i, x)},
                                            Literal{true, p, args_with(arity, i, y)}},
                       prov);
  for (const auto& [f, arity] : functions)
    for (size_t i = 0; i < arity; ++i)
      out.emplace_back(std::vector<Literal>{eq(x, y, false), eq(Term::application(f, args_with(arity, i, x)),
                                                                Term::application(f, args_with(arity, i, y)), true)},
                       prov);
  for (auto& c : out) c = fol::normalize_variables(c);
  return out;
}

ClauseSet refutation_input(const ClauseSet& axioms, const Formula& goal) {
  ClauseSet out;
  for (auto c : axioms) {
    c.id = 0;
    if (c.provenance.rule.empty()) c.provenance.rule = kAssumption;
    out.push_back(std::move(c));
  }
  fol::Clausifier clausifier(fol::next_free_skolem_index(axioms));
  for (auto c : clausifier.clausify(Formula::negation(goal), {Origin::kNegatedGoal, kGoal, {}})) out.push_back(c);
  if (has_positive_equality(out)) {
    ClauseSet eqs = equality_axioms(out);
    out.insert(out.end(), eqs.begin(), eqs.end());
  }
  return out;
}

ProveResult prove(const ClauseSet& axioms, const Formula& goal, const ProverLimits& limits) {
  Saturation s(refutation_input(axioms, goal), limits);
  return s.run(goal);
}

bool check_proof(const Proof& p, const ClauseSet& axioms, std::string* why) {
  auto fail = [&](const std::string& message) {
    if (why) *why = message;
    return false;
  };
  if (p.steps.empty() || !p.steps.back().empty()) return fail("proof does not end in the empty clause");
  ClauseSet input = refutation_input(axioms, p.goal);
  std::map<int, const Clause*> seen;
  for (const auto& s : p.steps) {
    std::string where = "step " + std::to_string(s.id);
    if (seen.count(s.id)) return fail(where + ": duplicate id");
    std::vector<const Clause*> parents;
    for (int id : s.provenance.parents) {
      auto it = seen.find(id);
      if (it == seen.end()) return fail(where + ": parent " + std::to_string(id) + " does not precede it");
      parents.push_back(it->second);
    }
    const std::string& rule = s.provenance.rule;
    bool ok = false;
    if (parents.empty()) {
      ok = std::any_of(input.begin(), input.end(), [&](const Clause& c) { return variant(c, s); });
      if (!ok) return fail(where + ": not an input clause");
    } else if (rule == kResolve && parents.size() == 2) {
      for (const auto& r : resolvents(*parents[0], *parents[1])) ok = ok || variant(r, s);
    } else if (rule == kFactor && parents.size() == 1) {
      for (const auto& f : factors(*parents[0])) ok = ok || variant(f, s);
    } else if (rule == kHyper && parents.size() >= 2) {
      ok = hyper_chain(*parents[0], {parents.begin() + 1, parents.end()}, s);
    }
    if (!ok) return fail(where + ": " + rule + " does not derive the clause");
    seen[s.id] = &s;
  }
  return true;
}

}  // namespace puzzle::infer
