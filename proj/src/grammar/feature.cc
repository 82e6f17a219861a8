#include "puzzle/grammar/feature.h"

namespace puzzle::grammar {

namespace {

bool is_var(const std::string& v) { return !v.empty() && v[0] == '?'; }

}  // namespace

std::string resolve(const std::string& value, const Bindings& bindings) {
  std::string v = value;
  // Links only ever point from an unbound root, so chains are acyclic.
  for (auto it = bindings.find(v); is_var(v) && it != bindings.end(); it = bindings.find(v)) v = it->second;
  return v;
}

std::optional<Bindings> unify_features(const FeatureStructure& a, const FeatureStructure& b, Bindings bindings) {
  for (const auto& [name, va] : a) {
    if (name == kSem) continue;
    auto it = b.find(name);
    if (it == b.end()) continue;
    const FeatureValue& vb = it->second;
    if (va.kind == FeatureValue::Kind::kSem || vb.kind == FeatureValue::Kind::kSem) continue;
    std::string x = resolve(va.text, bindings);
    std::string y = resolve(vb.text, bindings);
    if (x == y) continue;
    if (is_var(x)) {
      bindings[x] = y;
    } else if (is_var(y)) {
      bindings[y] = x;
    } else {
      return std::nullopt;
    }
  }
  return bindings;
}

FeatureStructure resolve_features(const FeatureStructure& fs, const Bindings& bindings) {
  FeatureStructure out;
  for (const auto& [name, v] : fs) {
    if (v.kind != FeatureValue::Kind::kVar) {
      out.emplace(name, v);
      continue;
    }
    std::string r = resolve(v.text, bindings);
    if (!is_var(r)) out.emplace(name, FeatureValue::atom(r));
  }
  return out;
}

std::string print_features(const FeatureStructure& fs) {
  if (fs.empty()) return "";
  std::string out = "[";
  bool first = true;
  auto emit = [&](const std::string& name, const FeatureValue& v) {
    if (!first) out += ", ";
    first = false;
    out += name + "=";
    if (v.kind == FeatureValue::Kind::kSem) {
      // A bare rule variable prints without brackets, as it is written.
      if (v.sem.kind == lambda::LambdaTerm::Kind::kVar && is_var(v.sem.name))
        out += v.sem.name;
      else
        out += "<" + lambda::print_lambda(v.sem) + ">";
    } else {
      out += v.text;
    }
  };
  for (const auto& [name, v] : fs)
    if (name != kSem) emit(name, v);
  if (auto it = fs.find(kSem); it != fs.end()) emit(kSem, it->second);
  return out + "]";
}

}  // namespace puzzle::grammar
