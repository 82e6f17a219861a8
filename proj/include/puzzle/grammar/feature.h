#ifndef PUZZLE_GRAMMAR_FEATURE_H_
#define PUZZLE_GRAMMAR_FEATURE_H_

#include <map>
#include <optional>
#include <string>

#include "puzzle/lambda/lambda_term.h"

namespace puzzle::grammar {

inline constexpr const char* kSem = "SEM";

// Atomic value (`sg`), rule-scoped variable (`?n`) or, for SEM only, a lambda
// expression. SEM=?x is stored as a lambda variable named `?x`.
struct FeatureValue {
  enum class Kind { kAtom, kVar, kSem };

  Kind kind = Kind::kAtom;
  std::string text;  // atom or variable name (with the leading `?`)
  lambda::LambdaTerm sem;

  static FeatureValue atom(std::string a) { return FeatureValue{Kind::kAtom, std::move(a), {}}; }
  static FeatureValue var(std::string v) { return FeatureValue{Kind::kVar, std::move(v), {}}; }
  static FeatureValue semantics(lambda::LambdaTerm t) { return FeatureValue{Kind::kSem, "", std::move(t)}; }

  friend bool operator==(const FeatureValue& a, const FeatureValue& b) {
    return a.kind == b.kind && a.text == b.text && a.sem == b.sem;
  }
};

using FeatureStructure = std::map<std::string, FeatureValue>;

// Variable -> atom or other variable (`?m`). Chains are followed by resolve.
using Bindings = std::map<std::string, std::string>;

// Follows variable links; returns an atom, or the last unbound variable.
std::string resolve(const std::string& value, const Bindings& bindings);

// Unifies the non-SEM features of a and b. A feature missing on one side is
// unconstrained. SEM is never compared.
std::optional<Bindings> unify_features(const FeatureStructure& a, const FeatureStructure& b, Bindings bindings = {});

// Replaces bound variables by their values; unbound ones are dropped. SEM is
// left as is.
FeatureStructure resolve_features(const FeatureStructure& fs, const Bindings& bindings);

std::string print_features(const FeatureStructure& fs);

}  // namespace puzzle::grammar

#endif  // PUZZLE_GRAMMAR_FEATURE_H_
