// puzzle: solve logic puzzles stated in English.
//
//   puzzle solve corpus/puzzles/p1-marge-homer.txt
//   puzzle ask corpus/puzzles/p3-two-people.txt "Is the first one a knave?" --emit-proof p.dot
//   puzzle who --domain comparatives corpus/comparatives/taller.txt "Who is the shortest?"
//   puzzle models | parse | check | prove ...

#include <filesystem>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <sstream>

#include "CLI11.hpp"
#include "puzzle/app/corpus.h"
#include "puzzle/app/dot.h"
#include "puzzle/app/report.h"
#include "puzzle/app/solver.h"
#include "puzzle/chart/parser.h"
#include "puzzle/fol/clausify.h"
#include "puzzle/fol/parser.h"
#include "puzzle/fol/printer.h"

#ifndef PUZZLE_DATA_DIR
#define PUZZLE_DATA_DIR "data"
#endif

namespace {

using namespace puzzle;

struct Options {
  std::string data_dir = PUZZLE_DATA_DIR;
  std::string grammar, synonyms, gazetteer;
  std::string domain;
  size_t max_models = 1000;
  double max_seconds = 20.0;
  size_t max_clauses = infer::ProverLimits{}.max_clauses;
  bool json = false;
  bool timings = false;
};

class Failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Failure("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw Failure("cannot write " + path);
  out << text;
}

class Session {
 public:
  explicit Session(const Options& o) : o_(o) {}

  app::Domain domain_for(const std::string& puzzle) const {
    if (!o_.domain.empty()) {
      auto d = app::parse_domain(o_.domain);
      if (!d) throw Failure("unknown domain " + o_.domain + " (knights-knaves or comparatives)");
      return *d;
    }
    if (!puzzle.empty())
      if (auto e = app::load_expected(puzzle); e && e->domain) return *e->domain;
    return app::Domain::kKnightsKnaves;
  }

  const app::Resources& resources(app::Domain d) {
    auto it = cache_.find(d);
    if (it != cache_.end()) return *it->second;
    app::ResourcePaths p = app::default_paths(o_.data_dir, d);
    if (!o_.grammar.empty()) p.grammar = o_.grammar;
    if (!o_.synonyms.empty()) p.synonyms = o_.synonyms;
    if (!o_.gazetteer.empty()) p.gazetteer = o_.gazetteer;
    auto r = std::make_unique<app::Resources>(app::load_resources(d, p));
    return *cache_.emplace(d, std::move(r)).first->second;
  }

  app::PuzzleTheory theory(const std::string& puzzle) {
    return app::build_theory(read_file(puzzle), resources(domain_for(puzzle)));
  }

  app::SolveOptions solve_options() const {
    app::SolveOptions s;
    s.max_models = o_.max_models;
    s.limits = limits();
    return s;
  }

  infer::ProverLimits limits() const { return {o_.max_clauses, o_.max_seconds}; }

  const Options& options() const { return o_; }

 private:
  Options o_;
  std::map<app::Domain, std::unique_ptr<app::Resources>> cache_;
};

void print_diagnostics(const std::vector<app::Diagnostic>& ds) {
  for (const auto& d : ds) {
    std::cout << "  " << app::to_string(d.stage);
    if (d.sentence >= 0) std::cout << " (sentence " << d.sentence + 1 << ")";
    std::cout << ": " << d.message << "\n";
  }
}

std::string clause_listing(const fol::ClauseSet& clauses) {
  std::string out = "formulas(assumptions).\n";
  for (const auto& c : clauses) out += fol::print_clause(c) + ".\n";
  return out + "end_of_list.\n";
}

int run_solve(Session& s, const std::string& file, bool dump_clauses) {
  app::PuzzleTheory t = s.theory(file);
  if (dump_clauses) {
    std::cout << clause_listing(t.clauses());
    return 0;
  }
  app::SolveReport r = app::solve(t, s.solve_options());
  if (s.options().json) {
    std::cout << app::to_json(r, s.options().timings).dump(2) << "\n";
  } else {
    std::cout << app::format_assignment(r) << "\n";
    std::cout << "models: " << r.model_count << (r.truncated ? " (limit reached)" : "") << "\n";
    if (!r.diagnostics.empty()) {
      std::cout << "diagnostics:\n";
      print_diagnostics(r.diagnostics);
    }
    if (s.options().timings) std::cout << "seconds: " << r.seconds << "\n";
  }
  return r.assignment ? 0 : 1;
}

int run_ask(Session& s, const std::string& file, const std::string& question, const std::string& dot,
            bool show_proof) {
  app::PuzzleTheory t = s.theory(file);
  app::Answer a = app::answer_question(t, question, s.limits());
  if (!dot.empty()) {
    if (!a.proof) throw Failure("no proof to export: the answer is " + std::string(app::to_string(a.verdict)));
    write_file(dot, app::export_proof_dot(*a.proof, a.axioms));
  }
  int status = a.verdict == app::Verdict::kUnknown ? 1 : 0;
  if (s.options().json) {
    std::cout << app::to_json(a).dump(2) << "\n";
    return status;
  }
  std::cout << app::to_string(a.verdict) << "\n";
  if (show_proof && a.proof) std::cout << app::format_proof(*a.proof);
  for (const auto& d : a.diagnostics) std::cout << "  " << d << "\n";
  return status;
}

int run_who(Session& s, const std::string& file, const std::string& query) {
  app::PuzzleTheory t = s.theory(file);
  app::WhResult w = app::query_wh(t, query, s.options().max_models);
  if (s.options().json) {
    std::cout << app::to_json(w).dump(2) << "\n";
  } else {
    std::string line;
    for (const auto& p : w.persons) line += (line.empty() ? "" : ", ") + p;
    std::cout << (w.ambiguous ? "ambiguous" : line.empty() ? "nobody" : line) << "\n";
    for (const auto& d : w.diagnostics) std::cout << "  " << d << "\n";
  }
  return w.ambiguous ? 1 : 0;
}

int run_models(Session& s, const std::string& file) {
  app::PuzzleTheory t = s.theory(file);
  auto ms = app::models(t, s.options().max_models);
  if (s.options().json) {
    app::Json all = app::Json::array();
    for (const auto& m : ms) all.push_back(app::to_json(m, t));
    std::cout << app::Json{{"model_count", ms.size()}, {"models", all}}.dump(2) << "\n";
    return ms.empty() ? 1 : 0;
  }
  for (size_t i = 0; i < ms.size(); ++i) {
    std::cout << "model " << i + 1 << ":\n";
    app::Json m = app::to_json(ms[i], t);
    for (const auto& [p, tuples] : m.items()) {
      std::cout << "  " << p << ":";
      for (const auto& x : tuples) std::cout << " " << (x.is_string() ? x.get<std::string>() : x.dump());
      std::cout << "\n";
    }
  }
  std::cout << ms.size() << " model" << (ms.size() == 1 ? "" : "s") << "\n";
  return ms.empty() ? 1 : 0;
}

int run_parse(Session& s, const std::string& file, bool dump_tree) {
  app::PuzzleTheory t = s.theory(file);
  std::cout << "persons: ";
  for (size_t i = 0; i < t.persons.persons.size(); ++i) std::cout << (i ? ", " : "") << t.persons.persons[i];
  std::cout << "\n";
  for (size_t i = 0; i < t.document.sentences.size(); ++i) {
    const auto& sent = t.document.sentences[i];
    std::cout << i + 1 << ". " << sent.str() << "\n";
    for (const auto& a : t.axioms)
      if (a.sentence == static_cast<int>(i)) std::cout << "   " << fol::print_formula(a.formula) << "\n";
    if (dump_tree && !sent.is_question()) {
      try {
        auto trees = chart::parse(sent.words(true), t.grammar);
        if (!trees.empty()) std::cout << "   " << chart::print_tree(trees.front()) << "\n";
      } catch (const chart::UnknownWords&) {
      }
    }
  }
  for (const auto& a : t.axioms)
    if (a.kind == app::AxiomKind::kSynonymy) std::cout << "synonymy: " << fol::print_formula(a.formula) << "\n";
  print_diagnostics(t.diagnostics);
  return t.diagnostics.empty() ? 0 : 1;
}

int run_check(Session& s, const std::string& dir) {
  app::Domain fallback = s.domain_for("");
  auto loader = [&s](app::Domain d) -> const app::Resources& { return s.resources(d); };
  app::CorpusReport r = app::check_corpus(dir, loader, fallback, s.solve_options());
  if (s.options().json) {
    std::cout << app::to_json(r, s.options().timings).dump(2) << "\n";
  } else {
    for (const auto& p : r.puzzles) {
      std::cout << (p.passed() ? "pass " : "FAIL ") << p.name << " (" << p.persons << " persons): " << p.assignment
                << "\n";
      for (const auto& f : p.failures) std::cout << "     " << f << "\n";
    }
    size_t n = r.puzzles.size();
    std::cout << "passed " << r.passed() << "/" << n;
    if (n) std::cout << " (" << 100.0 * static_cast<double>(r.passed()) / static_cast<double>(n) << "%)";
    std::cout << "\nfailures by stage: entities " << r.failed(app::Stage::kEntities) << ", parsing "
              << r.failed(app::Stage::kParsing) << ", reasoning " << r.failed(app::Stage::kReasoning) << "\n";
  }
  return r.passed() == r.puzzles.size() ? 0 : 1;
}

int run_prove(Session& s, const std::string& file, const std::string& dot, bool show_proof) {
  fol::Theory th = fol::parse_theory(read_file(file));
  if (th.goals.empty()) throw Failure(file + " has no goals");
  fol::Clausifier c;
  fol::ClauseSet axioms;
  for (const auto& f : th.assumptions)
    for (auto& cl : c.clausify(f)) axioms.push_back(std::move(cl));
  app::Json out = app::Json::array();
  int status = 0;
  for (size_t i = 0; i < th.goals.size(); ++i) {
    auto r = infer::prove(axioms, th.goals[i], s.limits());
    bool proved = r.status == infer::ProveStatus::kProved;
    if (proved && !dot.empty()) {
      std::string path = th.goals.size() == 1 ? dot : dot + "." + std::to_string(i + 1);
      write_file(path, app::export_proof_dot(*r.proof, axioms));
    }
    if (!proved) status = 1;
    if (s.options().json) {
      app::Json j;
      j["goal"] = fol::print_formula(th.goals[i]);
      j["status"] = infer::to_string(r.status);
      j["proof"] = proved ? app::to_json(*r.proof) : app::Json(nullptr);
      out.push_back(std::move(j));
      continue;
    }
    std::cout << fol::print_formula(th.goals[i]) << ": " << infer::to_string(r.status) << "\n";
    if (proved && show_proof) std::cout << app::format_proof(*r.proof);
  }
  if (s.options().json) std::cout << out.dump(2) << "\n";
  return status;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"Solve knights-and-knaves and other logic puzzles stated in English."};
  cli.require_subcommand(1);
  cli.fallthrough();
  cli.set_config("--config", "", "Read options from a key = value file");
  Options o;
  cli.add_option("--data-dir", o.data_dir, "Directory with grammars/ and lexicon/")->capture_default_str();
  cli.add_option("--grammar", o.grammar, "Feature grammar file (default: by domain)");
  cli.add_option("--synonyms", o.synonyms, "Synonym lexicon file");
  cli.add_option("--gazetteer", o.gazetteer, "Person-name list");
  cli.add_option("--domain", o.domain, "knights-knaves or comparatives (default: sidecar, else knights-knaves)");
  cli.add_option("--max-models", o.max_models, "Stop enumerating after this many models")->capture_default_str();
  cli.add_option("--max-seconds", o.max_seconds, "Prover time limit per goal")->capture_default_str();
  cli.add_option("--max-clauses", o.max_clauses, "Prover clause limit per goal")->capture_default_str();
  cli.add_flag("--json", o.json, "Machine-readable output");
  cli.add_flag("--timings", o.timings, "Include timings in reports");

  std::string file, question, dot;
  bool dump_clauses = false, dump_tree = false, show_proof = false;

  auto* solve = cli.add_subcommand("solve", "Print who is what");
  solve->add_option("puzzle", file, "Puzzle text file")->required()->check(CLI::ExistingFile);
  solve->add_flag("--dump-clauses", dump_clauses, "Print the theory's clauses instead");

  auto* ask = cli.add_subcommand("ask", "Answer a yes/no question");
  ask->add_option("puzzle", file, "Puzzle text file")->required()->check(CLI::ExistingFile);
  ask->add_option("question", question, "Question, e.g. \"Is Sue a knight?\"")->required();
  ask->add_option("--emit-proof", dot, "Write the proof as a DOT graph");
  ask->add_flag("--show-proof", show_proof, "Print the proof steps");

  auto* who = cli.add_subcommand("who", "Answer a who-question or list persons with a property");
  who->add_option("puzzle", file, "Puzzle text file")->required()->check(CLI::ExistingFile);
  who->add_option("query", question, "\"Who is the shortest?\" or a predicate name")->required();

  auto* models = cli.add_subcommand("models", "List all models");
  models->add_option("puzzle", file, "Puzzle text file")->required()->check(CLI::ExistingFile);

  auto* parse = cli.add_subcommand("parse", "Show each sentence's logical form");
  parse->add_option("puzzle", file, "Puzzle text file")->required()->check(CLI::ExistingFile);
  parse->add_flag("--dump-tree", dump_tree, "Also print parse trees");

  auto* check = cli.add_subcommand("check", "Run a corpus directory against its sidecars");
  check->add_option("corpus", file, "Directory of puzzles")->required()->check(CLI::ExistingDirectory);

  auto* prove = cli.add_subcommand("prove", "Prove the goals of a theory file");
  prove->add_option("theory", file, "Theory file with assumptions and goals")->required()->check(CLI::ExistingFile);
  prove->add_option("--emit-proof", dot, "Write proofs as DOT graphs");
  prove->add_flag("--show-proof", show_proof, "Print the proof steps");

  CLI11_PARSE(cli, argc, argv);

  try {
    Session s(o);
    if (*solve) return run_solve(s, file, dump_clauses);
    if (*ask) return run_ask(s, file, question, dot, show_proof);
    if (*who) return run_who(s, file, question);
    if (*models) return run_models(s, file);
    if (*parse) return run_parse(s, file, dump_tree);
    if (*check) return run_check(s, file);
    if (*prove) return run_prove(s, file, dot, show_proof);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
