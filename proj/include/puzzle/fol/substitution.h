#ifndef PUZZLE_FOL_SUBSTITUTION_H_
#define PUZZLE_FOL_SUBSTITUTION_H_

#include <optional>
#include <set>
#include <string>

#include "puzzle/fol/syntax.h"

namespace puzzle::fol {

Term instantiate(const Term& t, const Substitution& s);
Literal instantiate(const Literal& l, const Substitution& s);

// Capture-avoiding substitution of free variables. A bound variable that would
// capture a variable of an inserted term is renamed to a fresh name.
Formula substitute(const Formula& f, const Substitution& s);

// s1 followed by s2: instantiate(t, compose(s1, s2)) == instantiate(instantiate(t, s1), s2).
Substitution compose(const Substitution& s1, const Substitution& s2);

// Most general unifier with occurs check; std::nullopt on clash or occurs
// failure. `seed` is extended, not replaced.
std::optional<Substitution> unify(const Term& a, const Term& b, Substitution seed = {});
// Atoms unify when predicate symbol and arity agree and arguments unify.
// Signs are ignored.
std::optional<Substitution> unify(const Literal& a, const Literal& b, Substitution seed = {});
std::optional<Substitution> unify_atoms(const Formula& a, const Formula& b);

// One-way matching: finds s with instantiate(pattern, s) == target, binding only
// variables of the pattern.
std::optional<Substitution> match(const Literal& pattern, const Literal& target, Substitution seed = {});

// Returns `base` or `base` followed by the smallest number making it absent
// from `taken`.
std::string fresh_name(const std::string& base, const std::set<std::string>& taken);

}  // namespace puzzle::fol

#endif  // PUZZLE_FOL_SUBSTITUTION_H_
