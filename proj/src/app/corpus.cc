#include "puzzle/app/corpus.h"

#include <algorithm>
#include <chrono>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace puzzle::app {

namespace {

using json = nlohmann::json;

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string join(const std::vector<std::string>& parts) {
  std::string out;
  for (const auto& p : parts) out += (out.empty() ? "" : ", ") + p;
  return out;
}

}  // namespace

Expected parse_expected(const std::string& json_text) {
  Expected e;
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception& ex) {
    throw std::runtime_error(std::string("bad sidecar: ") + ex.what());
  }
  if (j.contains("domain")) {
    e.domain = parse_domain(j["domain"].get<std::string>());
    if (!e.domain) throw std::runtime_error("bad sidecar: unknown domain " + j["domain"].dump());
  }
  if (j.contains("persons")) e.persons = j["persons"].get<std::vector<std::string>>();
  if (j.contains("assignment")) e.assignment = j["assignment"].get<std::map<std::string, std::string>>();
  for (const auto& q : j.value("questions", json::array()))
    e.questions.emplace_back(q.at("question").get<std::string>(), q.at("answer").get<std::string>());
  for (const auto& q : j.value("wh", json::array()))
    e.wh.emplace_back(q.at("question").get<std::string>(), q.at("answer").get<std::vector<std::string>>());
  return e;
}

std::optional<Expected> load_expected(const std::string& puzzle_path) {
  std::filesystem::path side = std::filesystem::path(puzzle_path).replace_extension(".json");
  if (!std::filesystem::exists(side)) return std::nullopt;
  return parse_expected(read_file(side));
}

size_t CorpusReport::passed() const {
  return std::count_if(puzzles.begin(), puzzles.end(), [](const PuzzleOutcome& p) { return p.passed(); });
}

size_t CorpusReport::failed(Stage s) const {
  return std::count_if(puzzles.begin(), puzzles.end(), [s](const PuzzleOutcome& p) {
    return s == Stage::kEntities ? !p.entities_ok : s == Stage::kParsing ? !p.parsing_ok : !p.reasoning_ok;
  });
}

PuzzleOutcome check_puzzle(const std::string& name, const std::string& text, const Expected& expected,
                           const ResourceLoader& load, const SolveOptions& options) {
  auto start = std::chrono::steady_clock::now();
  PuzzleOutcome out;
  out.name = name;
  auto fail = [&](bool& stage, std::string why) {
    stage = false;
    out.failures.push_back(std::move(why));
  };
  auto finish = [&] {
    out.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return out;
  };

  PuzzleTheory t;
  try {
    t = build_theory(text, load(expected.domain.value_or(Domain::kKnightsKnaves)));
  } catch (const NoPersons& e) {
    fail(out.entities_ok, e.what());
    return finish();
  } catch (const std::exception& e) {
    fail(out.parsing_ok, e.what());
    return finish();
  }
  out.persons = t.domain_size;
  if (expected.persons && *expected.persons != t.persons.persons)
    fail(out.entities_ok, "persons: " + join(t.persons.persons));
  for (const auto& d : t.diagnostics) {
    std::string where = d.sentence >= 0 ? "sentence " + std::to_string(d.sentence + 1) + ": " : "";
    fail(d.stage == Stage::kEntities ? out.entities_ok : out.parsing_ok, where + d.message);
  }

  SolveReport r = solve(t, options);
  out.models = r.model_count;
  out.assignment = format_assignment(r);
  if (!r.assignment) {
    fail(out.reasoning_ok, "no unique assignment: " + out.assignment);
  } else if (expected.assignment) {
    std::map<std::string, std::string> got;
    for (const auto& p : *r.assignment) got[p.name] = p.roles.empty() ? "none" : p.roles.front();
    if (got != *expected.assignment) fail(out.reasoning_ok, "assignment: " + out.assignment);
  }
  for (const auto& [q, want] : expected.questions) {
    try {
      Answer a = answer_question(t, q, options.limits);
      if (to_string(a.verdict) != want) fail(out.reasoning_ok, q + " -> " + to_string(a.verdict));
    } catch (const QuestionError& e) {
      fail(out.parsing_ok, q + ": " + e.what());
    }
  }
  for (const auto& [q, want] : expected.wh) {
    try {
      WhResult w = query_wh(t, q, options.max_models);
      if (w.persons != want) fail(out.reasoning_ok, q + " -> " + join(w.persons));
    } catch (const std::exception& e) {
      fail(out.parsing_ok, q + ": " + e.what());
    }
  }
  return finish();
}

CorpusReport check_corpus(const std::string& dir, const ResourceLoader& load, Domain fallback,
                          const SolveOptions& options) {
  std::vector<std::filesystem::path> files;
  for (const auto& entry : std::filesystem::directory_iterator(dir))
    if (entry.is_regular_file() && entry.path().extension() == ".txt") files.push_back(entry.path());
  std::sort(files.begin(), files.end());
  CorpusReport report;
  for (const auto& f : files) {
    Expected e = load_expected(f.string()).value_or(Expected{});
    if (!e.domain) e.domain = fallback;
    report.puzzles.push_back(check_puzzle(f.filename().string(), read_file(f), e, load, options));
  }
  return report;
}

}  // namespace puzzle::app
