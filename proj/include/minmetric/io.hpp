#pragma once

#include "minmetric/biortho.hpp"
#include "minmetric/elsolve.hpp"
#include "minmetric/robin.hpp"
#include "minmetric/types.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace minmetric {

using Json = nlohmann::ordered_json;

// Complex matrices travel as {"shape": [rows, cols], "data": [[[re, im], ...], ...]}.
Json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const Json& j);  // ParseError on malformed input

ComplexMatrix read_matrix_file(const std::string& path);
void write_matrix_file(const std::string& path, const ComplexMatrix& m);

// Canonical analysis report document. `input` describes where the operator
// came from (file path or model parameters). The metric matrix is embedded
// only on request and only when it exists.
Json report_json(const Json& input, const ComplexMatrix& H, const BiorthogonalSystem& sys,
                 const ElReport& report, bool emit_metric = false);

// Report for a truncated Robin analysis (no finite operator to embed; carries
// the truncation ladder instead).
Json robin_report_json(const RobinModel& model, const RobinAnalysis& analysis);

struct SweepRow {
  double param;
  Verdict verdict;
  double min_alpha_el;
};

std::string sweep_csv(const std::vector<SweepRow>& rows);

std::string convergence_csv(const std::vector<TruncationStage>& stages);

// Shortest-round-trip decimal form (%.17g trimmed), shared by the CSV writers.
std::string format_double(double v);

}  // namespace minmetric
