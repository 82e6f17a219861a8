// JSON forms of solver results, as printed by `puzzle --json`.

#ifndef PUZZLE_APP_REPORT_H_
#define PUZZLE_APP_REPORT_H_

#include <vector>

#include "json.hpp"
#include "puzzle/app/corpus.h"
#include "puzzle/app/solver.h"

namespace puzzle::app {

using Json = nlohmann::ordered_json;

Json to_json(const Diagnostic& d);
Json to_json(const infer::Proof& p);
// Timings are left out unless asked for, so reports compare byte for byte.
Json to_json(const SolveReport& r, bool timings = false);
Json to_json(const Answer& a);
Json to_json(const WhResult& w);
Json to_json(const infer::Interpretation& m, const PuzzleTheory& t);
Json to_json(const CorpusReport& r, bool timings = false);

}  // namespace puzzle::app

#endif  // PUZZLE_APP_REPORT_H_
