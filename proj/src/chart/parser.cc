#include "puzzle/chart/parser.h"

#include <algorithm>
#include <cctype>
#include <map>
#include <set>

namespace puzzle::chart {

using grammar::Bindings;
using grammar::Category;
using grammar::FeatureValue;
using grammar::Grammar;
using grammar::ProductionRule;

size_t ParseTree::node_count() const {
  size_t n = 1;
  for (const auto& c : children) n += c.node_count();
  return n;
}

size_t ParseTree::leaf_count() const {
  if (leaf) return 1;
  size_t n = 0;
  for (const auto& c : children) n += c.leaf_count();
  return n;
}

std::vector<int> ParseTree::rule_sequence() const {
  std::vector<int> out;
  std::vector<const ParseTree*> stack{this};
  while (!stack.empty()) {
    const ParseTree* t = stack.back();
    stack.pop_back();
    if (t->leaf) continue;
    out.push_back(t->rule);
    for (auto it = t->children.rbegin(); it != t->children.rend(); ++it) stack.push_back(&*it);
  }
  return out;
}

namespace {

std::string join(const std::vector<std::string>& words) {
  std::string out;
  for (const auto& w : words) out += (out.empty() ? "" : ", ") + w;
  return out;
}

std::string lower(std::string s) {
  for (char& c : s) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
  return s;
}

struct Edge {
  size_t rule;
  size_t dot;
  size_t start;
  size_t end;
  Bindings bindings;
  // Per completed rhs item: child edge id, or -1 for a terminal.
  std::vector<int> children;
};

class Earley {
 public:
  Earley(const std::vector<std::string>& tokens, const Grammar& g, const ParseOptions& options)
      : tokens_(tokens), g_(g), options_(options), by_end_(tokens.size() + 1) {
    for (const auto& t : tokens) lowered_.push_back(lower(t));
  }

  std::vector<ParseTree> run() {
    const std::string& start = options_.start.empty() ? g_.start() : options_.start;
    predict(start, 0);
    for (size_t k = 0; k <= tokens_.size(); ++k) {
      for (size_t i = 0; i < by_end_[k].size(); ++i) {
        int id = by_end_[k][i];
        const ProductionRule& r = g_.rule(edges_[id].rule);
        if (edges_[id].dot == r.rhs.size()) {
          complete(id);
        } else if (r.rhs[edges_[id].dot].terminal) {
          scan(id);
        } else {
          predict(r.rhs[edges_[id].dot].category.symbol, k);
        }
      }
    }
    std::vector<ParseTree> out;
    for (int id : by_end_[tokens_.size()]) {
      const Edge& e = edges_[id];
      const ProductionRule& r = g_.rule(e.rule);
      if (e.start == 0 && e.dot == r.rhs.size() && r.lhs.symbol == start) out.push_back(build(id));
    }
    std::stable_sort(out.begin(), out.end(), [](const ParseTree& a, const ParseTree& b) {
      size_t na = a.node_count(), nb = b.node_count();
      if (na != nb) return na < nb;
      return a.rule_sequence() < b.rule_sequence();
    });
    return out;
  }

 private:
  void add(Edge e) {
    if (edges_.size() >= options_.max_edges)
      throw ChartOverflow("chart exceeded " + std::to_string(options_.max_edges) + " edges");
    size_t end = e.end;
    edges_.push_back(std::move(e));
    by_end_[end].push_back(static_cast<int>(edges_.size() - 1));
  }

  void predict(const std::string& symbol, size_t k) {
    if (!predicted_.insert({symbol, k}).second) return;
    for (size_t r : g_.rules_for(symbol)) add(Edge{r, 0, k, k, {}, {}});
  }

  void scan(int id) {
    const Edge& e = edges_[id];
    if (e.end >= tokens_.size()) return;
    const auto& sym = g_.rule(e.rule).rhs[e.dot];
    if (sym.word != lowered_[e.end]) return;
    Edge next = e;
    next.dot++;
    next.end++;
    next.children.push_back(-1);
    add(std::move(next));
  }

  void complete(int id) {
    const Edge done = edges_[id];
    const ProductionRule& r = g_.rule(done.rule);
    grammar::FeatureStructure produced = grammar::resolve_features(r.lhs.features, done.bindings);
    // No empty rules, so done.start < done.end and this list is final.
    const size_t n = by_end_[done.start].size();
    for (size_t i = 0; i < n; ++i) {
      int wid = by_end_[done.start][i];
      const Edge& w = edges_[wid];
      const ProductionRule& wr = g_.rule(w.rule);
      if (w.dot == wr.rhs.size() || wr.rhs[w.dot].terminal || wr.rhs[w.dot].category.symbol != r.lhs.symbol) continue;
      auto b = grammar::unify_features(wr.rhs[w.dot].category.features, produced, w.bindings);
      if (!b) continue;
      Edge next = w;
      next.dot++;
      next.end = done.end;
      next.bindings = std::move(*b);
      next.children.push_back(id);
      add(std::move(next));
    }
  }

  ParseTree build(int id) {
    const Edge& e = edges_[id];
    const ProductionRule& r = g_.rule(e.rule);
    ParseTree t;
    t.rule = static_cast<int>(e.rule);
    t.category = Category{r.lhs.symbol, grammar::resolve_features(r.lhs.features, e.bindings)};
    std::map<std::string, lambda::LambdaTerm> sem_args;
    size_t pos = e.start;
    for (size_t i = 0; i < e.children.size(); ++i) {
      if (e.children[i] < 0) {
        ParseTree leaf;
        leaf.leaf = true;
        leaf.word = tokens_[pos++];
        t.children.push_back(std::move(leaf));
        continue;
      }
      ParseTree child = build(e.children[i]);
      pos += child.leaf_count();
      const FeatureValue* v = r.rhs[i].category.feature(grammar::kSem);
      if (v && v->kind == FeatureValue::Kind::kSem && v->sem.kind == lambda::LambdaTerm::Kind::kVar && child.sem)
        sem_args.emplace(v->sem.name, *child.sem);
      t.children.push_back(std::move(child));
    }
    if (const FeatureValue* v = r.lhs.feature(grammar::kSem); v && v->kind == FeatureValue::Kind::kSem)
      t.sem = lambda::beta_reduce(lambda::substitute(v->sem, sem_args));
    return t;
  }

  const std::vector<std::string>& tokens_;
  std::vector<std::string> lowered_;
  const Grammar& g_;
  const ParseOptions& options_;
  std::vector<Edge> edges_;
  std::vector<std::vector<int>> by_end_;
  std::set<std::pair<std::string, size_t>> predicted_;
};

bool check_node(const ParseTree& t, const Grammar& g) {
  if (t.leaf) return true;
  if (t.rule < 0 || static_cast<size_t>(t.rule) >= g.rules().size()) return false;
  const ProductionRule& r = g.rule(t.rule);
  if (r.lhs.symbol != t.category.symbol || r.rhs.size() != t.children.size()) return false;
  auto b = grammar::unify_features(r.lhs.features, t.category.features);
  for (size_t i = 0; b && i < r.rhs.size(); ++i) {
    const ParseTree& c = t.children[i];
    if (r.rhs[i].terminal) {
      if (!c.leaf || lower(c.word) != r.rhs[i].word) return false;
    } else {
      if (c.leaf || c.category.symbol != r.rhs[i].category.symbol) return false;
      b = grammar::unify_features(r.rhs[i].category.features, c.category.features, *b);
    }
  }
  if (!b) return false;
  for (const auto& c : t.children)
    if (!check_node(c, g)) return false;
  return true;
}

void print(const ParseTree& t, std::string& out) {
  if (t.leaf) {
    out += t.word;
    return;
  }
  grammar::FeatureStructure shown = t.category.features;
  shown.erase(grammar::kSem);
  out += "(" + t.category.symbol + grammar::print_features(shown);
  for (const auto& c : t.children) {
    out += ' ';
    print(c, out);
  }
  out += ')';
}

}  // namespace

UnknownWords::UnknownWords(std::vector<std::string> words)
    : std::runtime_error("unknown words: " + join(words)), words_(std::move(words)) {}

std::vector<ParseTree> parse(const std::vector<std::string>& tokens, const Grammar& g, const ParseOptions& options) {
  std::vector<std::string> unknown;
  for (const auto& t : tokens)
    if (!g.is_terminal(t) && std::find(unknown.begin(), unknown.end(), t) == unknown.end()) unknown.push_back(t);
  if (!unknown.empty()) throw UnknownWords(unknown);
  if (tokens.empty()) return {};
  return Earley(tokens, g, options).run();
}

fol::Formula sentence_semantics(const ParseTree& t) {
  if (!t.sem) throw lambda::IncompleteSemantics("parse tree root has no SEM");
  return lambda::to_formula(lambda::beta_reduce(*t.sem));
}

bool check_tree(const ParseTree& t, const Grammar& g) { return check_node(t, g); }

std::string print_tree(const ParseTree& t) {
  std::string out;
  print(t, out);
  return out;
}

}  // namespace puzzle::chart
