#include "puzzle/fol/substitution.h"

#include <cctype>

namespace puzzle::fol {

Term instantiate(const Term& t, const Substitution& s) {
  if (t.is_variable()) {
    auto it = s.find(t.name);
    return it == s.end() ? t : it->second;
  }
  if (t.args.empty()) return t;
  Term out = t;
  for (auto& a : out.args) a = instantiate(a, s);
  return out;
}

Literal instantiate(const Literal& l, const Substitution& s) {
  Literal out = l;
  for (auto& a : out.args) a = instantiate(a, s);
  return out;
}

std::string fresh_name(const std::string& base, const std::set<std::string>& taken) {
  if (!taken.count(base)) return base;
  // Strip trailing digits so that renaming x1 yields x2 rather than x11.
  std::string stem = base;
  while (stem.size() > 1 && std::isdigit(static_cast<unsigned char>(stem.back()))) stem.pop_back();
  for (int i = 1;; ++i) {
    std::string candidate = stem + std::to_string(i);
    if (!taken.count(candidate)) return candidate;
  }
}

namespace {

void all_variables(const Formula& f, std::set<std::string>& out) {
  for (const auto& t : f.args) collect_variables(t, out);
  if (f.is_quantifier()) out.insert(f.name);
  for (const auto& c : f.children) all_variables(c, out);
}

}  // namespace

Formula substitute(const Formula& f, const Substitution& s) {
  if (s.empty()) return f;
  if (f.is_atomic()) {
    Formula out = f;
    for (auto& a : out.args) a = instantiate(a, s);
    return out;
  }
  if (!f.is_quantifier()) {
    Formula out = f;
    for (auto& c : out.children) c = substitute(c, s);
    return out;
  }

  // Only bindings for variables free in the body matter below the binder.
  std::set<std::string> body_free = free_variables(f.body());
  Substitution inner;
  for (const auto& [var, value] : s)
    if (var != f.name && body_free.count(var)) inner.emplace(var, value);
  if (inner.empty()) return f;

  bool captures = false;
  for (const auto& [var, value] : inner)
    if (value.occurs(f.name)) captures = true;

  std::string var = f.name;
  Formula body = f.body();
  if (captures) {
    std::set<std::string> taken = body_free;
    all_variables(f.body(), taken);
    for (const auto& [v, value] : inner) {
      taken.insert(v);
      collect_variables(value, taken);
    }
    var = fresh_name(f.name, taken);
    body = substitute(body, Substitution{{f.name, Term::variable(var)}});
  }
  Formula out = f;
  out.name = var;
  out.children[0] = substitute(body, inner);
  return out;
}

Substitution compose(const Substitution& s1, const Substitution& s2) {
  Substitution out;
  for (const auto& [var, value] : s1) {
    Term t = instantiate(value, s2);
    if (!(t.is_variable() && t.name == var)) out.emplace(var, std::move(t));
  }
  for (const auto& [var, value] : s2)
    if (!s1.count(var)) out.emplace(var, value);
  return out;
}

namespace {

bool unify_into(const Term& a, const Term& b, Substitution& s) {
  Term x = instantiate(a, s);
  Term y = instantiate(b, s);
  if (x == y) return true;
  if (!x.is_variable() && y.is_variable()) std::swap(x, y);
  if (x.is_variable()) {
    if (y.occurs(x.name)) return false;
    s = compose(s, Substitution{{x.name, y}});
    return true;
  }
  if (x.name != y.name || x.args.size() != y.args.size() || x.kind != y.kind) return false;
  for (size_t i = 0; i < x.args.size(); ++i)
    if (!unify_into(x.args[i], y.args[i], s)) return false;
  return true;
}

bool unify_lists(const std::vector<Term>& a, const std::vector<Term>& b, Substitution& s) {
  if (a.size() != b.size()) return false;
  for (size_t i = 0; i < a.size(); ++i)
    if (!unify_into(a[i], b[i], s)) return false;
  return true;
}

bool match_into(const Term& pattern, const Term& target, Substitution& s) {
  if (pattern.is_variable()) {
    auto [it, inserted] = s.emplace(pattern.name, target);
    return inserted || it->second == target;
  }
  if (pattern.kind != target.kind || pattern.name != target.name || pattern.args.size() != target.args.size())
    return false;
  for (size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_into(pattern.args[i], target.args[i], s)) return false;
  return true;
}

}  // namespace

std::optional<Substitution> unify(const Term& a, const Term& b, Substitution seed) {
  if (!unify_into(a, b, seed)) return std::nullopt;
  return seed;
}

std::optional<Substitution> unify(const Literal& a, const Literal& b, Substitution seed) {
  if (a.predicate != b.predicate) return std::nullopt;
  if (!unify_lists(a.args, b.args, seed)) return std::nullopt;
  return seed;
}

std::optional<Substitution> unify_atoms(const Formula& a, const Formula& b) {
  if (!a.is_atomic() || !b.is_atomic() || a.kind != b.kind || a.name != b.name) return std::nullopt;
  Substitution s;
  if (!unify_lists(a.args, b.args, s)) return std::nullopt;
  return s;
}

std::optional<Substitution> match(const Literal& pattern, const Literal& target, Substitution seed) {
  if (pattern.positive != target.positive || pattern.predicate != target.predicate ||
      pattern.args.size() != target.args.size())
    return std::nullopt;
  for (size_t i = 0; i < pattern.args.size(); ++i)
    if (!match_into(pattern.args[i], target.args[i], seed)) return std::nullopt;
  return seed;
}

}  // namespace puzzle::fol
