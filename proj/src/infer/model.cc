#include "puzzle/infer/model.h"

#include <algorithm>
#include <cctype>
#include <functional>
#include <ostream>

namespace puzzle::infer {

namespace {

using fol::Clause;
using fol::ClauseSet;
using fol::Formula;
using fol::Literal;
using fol::Term;

using Env = std::map<std::string, int>;

int eval_term(const Term& t, const std::map<std::string, int>& constants, const Env& env) {
  switch (t.kind) {
    case Term::Kind::kVariable: {
      auto it = env.find(t.name);
      if (it == env.end()) throw std::invalid_argument("unbound variable " + t.name);
      return it->second;
    }
    case Term::Kind::kConstant: {
      // Bound variables can reach here when a quantifier binds a
      // constant-looking name.
      if (auto it = env.find(t.name); it != env.end()) return it->second;
      auto it = constants.find(t.name);
      if (it == constants.end()) throw std::invalid_argument("unmapped constant " + t.name);
      return it->second;
    }
    case Term::Kind::kApplication:
      break;
  }
  throw UnsupportedTheory("function symbol " + t.name + " of arity " + std::to_string(t.args.size()));
}

Tuple eval_args(const std::vector<Term>& args, const std::map<std::string, int>& constants, const Env& env) {
  Tuple out;
  out.reserve(args.size());
  for (const auto& a : args) out.push_back(eval_term(a, constants, env));
  return out;
}

bool eval_formula(const Interpretation& m, const Formula& f, Env& env) {
  using K = Formula::Kind;
  switch (f.kind) {
    case K::kAtom: return m.holds(f.name, eval_args(f.args, m.constants, env));
    case K::kEquality: return eval_term(f.args[0], m.constants, env) == eval_term(f.args[1], m.constants, env);
    case K::kNot: return !eval_formula(m, f.children[0], env);
    case K::kAnd: return eval_formula(m, f.children[0], env) && eval_formula(m, f.children[1], env);
    case K::kOr: return eval_formula(m, f.children[0], env) || eval_formula(m, f.children[1], env);
    case K::kImplies: return !eval_formula(m, f.children[0], env) || eval_formula(m, f.children[1], env);
    case K::kIff: return eval_formula(m, f.children[0], env) == eval_formula(m, f.children[1], env);
    case K::kForAll:
    case K::kExists: {
      std::optional<int> saved;
      if (auto it = env.find(f.name); it != env.end()) saved = it->second;
      bool universal = f.kind == K::kForAll;
      bool result = universal;
      for (int e = 0; e < m.domain_size; ++e) {
        env[f.name] = e;
        if (eval_formula(m, f.children[0], env) != universal) {
          result = !universal;
          break;
        }
      }
      if (saved) env[f.name] = *saved;
      else env.erase(f.name);
      return result;
    }
  }
  return false;
}

// Calls visit for every assignment of `vars` over 0..n-1.
void for_each_env(const std::vector<std::string>& vars, int n, const std::function<void(const Env&)>& visit) {
  Env env;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == vars.size()) {
      visit(env);
      return;
    }
    for (int e = 0; e < n; ++e) {
      env[vars[i]] = e;
      rec(i + 1);
    }
  };
  rec(0);
}

void collect_arities(const ClauseSet& clauses, std::map<std::string, size_t>& arities) {
  for (const auto& c : clauses)
    for (const auto& l : c.literals)
      if (!l.is_equality()) arities.emplace(l.predicate, l.args.size());
}

// DPLL over a ground theory, enumerating complete assignments.
class Enumerator {
 public:
  Enumerator(const GroundTheory& g, size_t limit) : g_(g), limit_(limit), value_(g.atoms.size() + 1, 0) {}

  std::vector<std::vector<bool>> run() {
    if (!g_.contradiction) search();
    return models_;
  }

 private:
  // 1 satisfied, 0 undetermined, -1 falsified; sets `unit` to the only open
  // literal of an undetermined clause with one open literal, else 0.
  int status(const std::vector<int>& clause, int& unit) const {
    int open = 0;
    unit = 0;
    for (int lit : clause) {
      int v = value_[static_cast<size_t>(std::abs(lit))];
      if (v == 0) {
        ++open;
        unit = lit;
      } else if ((v > 0) == (lit > 0)) {
        return 1;
      }
    }
    if (open == 0) return -1;
    if (open > 1) unit = 0;
    return 0;
  }

  // Returns false on conflict; assigned atoms are pushed on `trail`.
  bool propagate(std::vector<int>& trail) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (const auto& c : g_.clauses) {
        int unit;
        int s = status(c, unit);
        if (s < 0) return false;
        if (s == 0 && unit != 0) {
          value_[static_cast<size_t>(std::abs(unit))] = unit > 0 ? 1 : -1;
          trail.push_back(std::abs(unit));
          changed = true;
        }
      }
    }
    return true;
  }

  bool all_satisfied() const {
    for (const auto& c : g_.clauses) {
      int unit;
      if (status(c, unit) != 1) return false;
    }
    return true;
  }

  void search() {
    if (models_.size() >= limit_) return;
    std::vector<int> trail;
    if (propagate(trail)) {
      size_t next = 1;
      while (next < value_.size() && value_[next] != 0) ++next;
      if (all_satisfied()) {
        complete(next);
      } else if (next < value_.size()) {
        for (int v : {-1, 1}) {
          value_[next] = v;
          search();
          value_[next] = 0;
          if (models_.size() >= limit_) break;
        }
      }
    }
    for (int a : trail) value_[static_cast<size_t>(a)] = 0;
  }

  // Every extension of the current partial assignment is a model.
  void complete(size_t from) {
    if (models_.size() >= limit_) return;
    while (from < value_.size() && value_[from] != 0) ++from;
    if (from >= value_.size()) {
      std::vector<bool> m(value_.size(), false);
      for (size_t i = 1; i < value_.size(); ++i) m[i] = value_[i] > 0;
      models_.push_back(std::move(m));
      return;
    }
    for (int v : {-1, 1}) {
      value_[from] = v;
      complete(from + 1);
      value_[from] = 0;
    }
  }

  const GroundTheory& g_;
  size_t limit_;
  std::vector<int> value_;  // index = atom, 0 unassigned, 1 true, -1 false
  std::vector<std::vector<bool>> models_;
};

}  // namespace

bool Interpretation::holds(const std::string& predicate, const Tuple& args) const {
  auto it = extensions.find(predicate);
  return it != extensions.end() && it->second.count(args) > 0;
}

bool Interpretation::eval(const Formula& f) const {
  Env env;
  return eval_formula(*this, f, env);
}

bool Interpretation::eval(const Clause& c) const {
  std::set<std::string> vars = c.variables();
  bool ok = true;
  for_each_env({vars.begin(), vars.end()}, domain_size, [&](const Env& env) {
    if (!ok) return;
    bool sat = false;
    for (const auto& l : c.literals) {
      bool v = l.is_equality() ? eval_term(l.args[0], constants, env) == eval_term(l.args[1], constants, env)
                               : holds(l.predicate, eval_args(l.args, constants, env));
      if (v == l.positive) {
        sat = true;
        break;
      }
    }
    ok = sat;
  });
  return ok;
}

bool operator==(const Interpretation& a, const Interpretation& b) {
  if (a.domain_size != b.domain_size || a.constants != b.constants) return false;
  // Predicates with empty extensions compare equal to absent ones.
  auto nonempty = [](const Interpretation& m) {
    std::map<std::string, std::set<Tuple>> out;
    for (const auto& [p, ext] : m.extensions)
      if (!ext.empty()) out[p] = ext;
    return out;
  };
  return nonempty(a) == nonempty(b);
}

std::ostream& operator<<(std::ostream& os, const Interpretation& m) {
  os << "interpretation(" << m.domain_size << ", [";
  bool first = true;
  for (const auto& [c, e] : m.constants) {
    os << (first ? "" : ", ") << c << "=" << e;
    first = false;
  }
  os << "]";
  for (const auto& [p, arity] : m.arities) {
    os << ", " << p << "={";
    bool f = true;
    auto it = m.extensions.find(p);
    if (it != m.extensions.end())
      for (const auto& t : it->second) {
        os << (f ? "" : " ") << "(";
        for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
        os << ")";
        f = false;
      }
    os << "}";
  }
  return os << ")";
}

std::map<std::string, int> default_constant_map(const ClauseSet& clauses, int n) {
  std::map<std::string, int> out;
  for (const auto& c : fol::constants(clauses)) {
    if (static_cast<int>(out.size()) >= n) break;
    out.emplace(c, static_cast<int>(out.size()));
  }
  return out;
}

int GroundTheory::atom_index(const GroundAtom& a) const {
  auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
  return it != atoms.end() && *it == a ? static_cast<int>(it - atoms.begin()) + 1 : 0;
}

GroundTheory ground(const ClauseSet& clauses, int n, const std::map<std::string, int>& constant_map) {
  if (n < 1) throw std::invalid_argument("domain size must be positive");
  if (auto f = fol::functions(clauses); !f.empty())
    throw UnsupportedTheory("function symbol " + *f.begin() + " of nonzero arity");
  GroundTheory g;
  g.domain_size = n;
  g.constants = constant_map;
  collect_arities(clauses, g.arities);
  for (const auto& [p, arity] : g.arities) {
    std::vector<std::string> vars;
    for (size_t i = 0; i < arity; ++i) vars.push_back("#" + std::to_string(i));
    for_each_env(vars, n, [&](const Env& env) {
      GroundAtom a{p, {}};
      for (const auto& v : vars) a.args.push_back(env.at(v));
      g.atoms.push_back(std::move(a));
    });
  }
  std::sort(g.atoms.begin(), g.atoms.end());

  std::set<std::vector<int>> seen;
  for (const auto& c : clauses) {
    std::set<std::string> vars = c.variables();
    for_each_env({vars.begin(), vars.end()}, n, [&](const Env& env) {
      std::vector<int> lits;
      for (const auto& l : c.literals) {
        if (l.is_equality()) {
          bool eq = eval_term(l.args[0], constant_map, env) == eval_term(l.args[1], constant_map, env);
          if (eq == l.positive) return;  // satisfied
          continue;
        }
        int atom = g.atom_index({l.predicate, eval_args(l.args, constant_map, env)});
        lits.push_back(l.positive ? atom : -atom);
      }
      std::sort(lits.begin(), lits.end());
      lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
      for (size_t i = 0; i + 1 < lits.size(); ++i)
        for (size_t j = i + 1; j < lits.size(); ++j)
          if (lits[i] == -lits[j]) return;  // tautology
      if (lits.empty()) g.contradiction = true;
      if (seen.insert(lits).second) g.clauses.push_back(std::move(lits));
    });
  }
  return g;
}

std::vector<Interpretation> find_models(const ClauseSet& clauses, int n, size_t limit,
                                        std::map<std::string, int> constant_map) {
  if (n < 1) throw std::invalid_argument("domain size must be positive");
  if (constant_map.empty()) constant_map = default_constant_map(clauses, n);
  for (const auto& [c, e] : constant_map)
    if (e < 0 || e >= n) throw std::invalid_argument("constant " + c + " outside the domain");
  std::vector<std::string> free;
  for (const auto& c : fol::constants(clauses))
    if (!constant_map.count(c)) free.push_back(c);

  std::vector<Interpretation> out;
  // Skolem constants are witnesses, not names: they are left out of the
  // interpretations, and models differing only in them are merged.
  auto is_skolem = [](const std::string& c) {
    return c.size() > 2 && c.compare(0, 2, "sk") == 0 &&
           std::all_of(c.begin() + 2, c.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); });
  };
  std::set<std::pair<std::map<std::string, int>, std::map<std::string, std::set<Tuple>>>> seen;
  // Free constants take every value, in lexicographic order.
  std::vector<int> values(free.size(), 0);
  while (out.size() < limit) {
    std::map<std::string, int> map = constant_map;
    for (size_t i = 0; i < free.size(); ++i) map[free[i]] = values[i];
    GroundTheory g = ground(clauses, n, map);
    for (const auto& assignment : Enumerator(g, limit - out.size()).run()) {
      Interpretation m;
      m.domain_size = n;
      for (const auto& [c, e] : map)
        if (!is_skolem(c)) m.constants[c] = e;
      m.arities = g.arities;
      for (const auto& [p, arity] : g.arities) m.extensions[p];
      for (size_t i = 0; i < g.atoms.size(); ++i)
        if (assignment[i + 1]) m.extensions[g.atoms[i].predicate].insert(g.atoms[i].args);
      if (seen.insert({m.constants, m.extensions}).second) out.push_back(std::move(m));
    }
    size_t k = free.size();
    while (k > 0 && ++values[k - 1] == n) values[--k] = 0;
    if (k == 0) break;
  }
  return out;
}

bool Consensus::ambiguous() const {
  for (const auto& [c, row] : cells)
    for (const auto& [p, v] : row)
      if (!v) return true;
  return false;
}

Consensus consensus_assignment(const std::vector<Interpretation>& models, const std::vector<std::string>& constants,
                               const std::vector<std::string>& predicates) {
  if (models.empty()) throw std::invalid_argument("consensus of no models");
  Consensus out;
  for (const auto& c : constants) {
    auto& row = out.cells[c];
    for (const auto& p : predicates) {
      std::optional<bool> value;
      bool first = true;
      for (const auto& m : models) {
        auto it = m.constants.find(c);
        if (it == m.constants.end()) throw std::invalid_argument("unknown constant " + c);
        bool v = m.holds(p, {it->second});
        if (first) value = v;
        else if (value && *value != v) value.reset();
        first = false;
      }
      row[p] = value;
    }
  }
  return out;
}

}  // namespace puzzle::infer
