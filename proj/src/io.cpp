#include "minmetric/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>

namespace minmetric {

namespace {

Json vector_to_json(const RealVector& v) {
  Json arr = Json::array();
  for (Index i = 0; i < v.size(); ++i) arr.push_back(v[i]);
  return arr;
}

Json candidate_to_json(const MetricCandidate& cand) {
  return Json{{"alpha", vector_to_json(cand.alpha)},
              {"classification", to_string(cand.classification)},
              {"hs_distance", cand.hs_distance}};
}

Json oracle_to_json(const OracleResult& oracle, bool agrees) {
  Json active = Json::array();
  for (Index i : oracle.active_set) active.push_back(i);
  return Json{{"alpha_star", vector_to_json(oracle.alpha_star)},
              {"objective", oracle.objective_value},
              {"iterations", oracle.iterations},
              {"converged", oracle.converged},
              {"active_set", active},
              {"kkt_residual", oracle.kkt_residual},
              {"agrees", agrees}};
}

double number_at(const Json& j, const char* what) {
  if (!j.is_number()) throw ParseError(std::string("matrix: ") + what + " is not a number");
  const double v = j.get<double>();
  if (!std::isfinite(v)) throw ParseError(std::string("matrix: ") + what + " is not finite");
  return v;
}

}  // namespace

Json matrix_to_json(const ComplexMatrix& m) {
  Json rows = Json::array();
  for (Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Index j = 0; j < m.cols(); ++j)
      row.push_back(Json::array({m(i, j).real(), m(i, j).imag()}));
    rows.push_back(std::move(row));
  }
  return Json{{"shape", Json::array({m.rows(), m.cols()})}, {"data", std::move(rows)}};
}

ComplexMatrix matrix_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("shape") || !j.contains("data"))
    throw ParseError("matrix: expected an object with 'shape' and 'data'");
  const Json& shape = j["shape"];
  if (!shape.is_array() || shape.size() != 2 || !shape[0].is_number_integer() ||
      !shape[1].is_number_integer())
    throw ParseError("matrix: 'shape' must be two integers");
  const auto rows = shape[0].get<Index>();
  const auto cols = shape[1].get<Index>();
  if (rows < 1 || cols < 1) throw ParseError("matrix: dimensions must be positive");

  const Json& data = j["data"];
  if (!data.is_array() || static_cast<Index>(data.size()) != rows)
    throw ParseError("matrix: 'data' row count does not match shape");
  ComplexMatrix m(rows, cols);
  for (Index i = 0; i < rows; ++i) {
    const Json& row = data[static_cast<size_t>(i)];
    if (!row.is_array() || static_cast<Index>(row.size()) != cols)
      throw ParseError("matrix: row length does not match shape");
    for (Index jj = 0; jj < cols; ++jj) {
      const Json& entry = row[static_cast<size_t>(jj)];
      if (!entry.is_array() || entry.size() != 2)
        throw ParseError("matrix: entries must be [re, im] pairs");
      m(i, jj) = Complex(number_at(entry[0], "real part"), number_at(entry[1], "imaginary part"));
    }
  }
  return m;
}

ComplexMatrix read_matrix_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open matrix file: " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return matrix_from_json(j);
}

void write_matrix_file(const std::string& path, const ComplexMatrix& m) {
  std::ofstream out(path);
  if (!out) throw Error("cannot open for writing: " + path);
  out << matrix_to_json(m).dump(2) << "\n";
}

Json report_json(const Json& input, const ComplexMatrix& H, const BiorthogonalSystem& sys,
                 const ElReport& report, bool emit_metric) {
  Json residuals{{"eigen", eigen_residual(H, sys)},
                 {"biortho", biorthogonality_residual(sys)},
                 {"resolution_of_identity", resolution_of_identity_residual(sys)},
                 {"el", report.el_residual},
                 {"intertwining",
                  report.intertwining ? Json(*report.intertwining) : Json(nullptr)}};

  Json doc{{"input", input},
           {"dimension", sys.size()},
           {"eigenvalues", vector_to_json(sys.eigenvalues)},
           {"verdict", to_string(report.verdict)},
           {"marginal", report.marginal},
           {"alpha_el", vector_to_json(report.alpha_el)},
           {"minimizer", candidate_to_json(report.minimizer)},
           {"sufficiency", Json{{"sum", report.sufficiency_sum}, {"holds", report.sufficiency_holds}}},
           {"residuals", std::move(residuals)},
           {"oracle", oracle_to_json(report.oracle, report.oracle_agrees)},
           {"metric_min_eigenvalue", report.metric_min_eigenvalue
                                         ? Json(*report.metric_min_eigenvalue)
                                         : Json(nullptr)}};
  if (emit_metric && report.metric) doc["metric"] = matrix_to_json(*report.metric);
  return doc;
}

Json robin_report_json(const RobinModel& model, const RobinAnalysis& analysis) {
  Json eigenvalues = Json::array();
  for (int n = 0; n <= model.truncation; ++n) eigenvalues.push_back(eigenvalue(model, n));

  Json stages = Json::array();
  for (const TruncationStage& stage : analysis.stages) {
    stages.push_back(Json{{"truncation", stage.truncation},
                          {"verdict", to_string(stage.verdict)},
                          {"min_alpha_el", stage.alpha_el.minCoeff()},
                          {"max_delta_vs_prev", std::isnan(stage.max_delta_vs_prev)
                                                    ? Json(nullptr)
                                                    : Json(stage.max_delta_vs_prev)}});
  }

  const ElReport& report = analysis.report;
  Json doc{{"input", Json{{"model", "robin"},
                          {"beta", model.beta},
                          {"truncation", model.truncation},
                          {"quad_order", model.quad_order}}},
           {"dimension", model.truncation + 1},
           {"eigenvalues", std::move(eigenvalues)},
           {"sufficiency_bound", (model.beta > 0.0 && model.beta < 0.5)
                                     ? Json(sufficiency_bound(model.beta))
                                     : Json(nullptr)},
           {"verdict", to_string(report.verdict)},
           {"marginal", report.marginal},
           {"alpha_el", vector_to_json(report.alpha_el)},
           {"minimizer", candidate_to_json(report.minimizer)},
           {"sufficiency", Json{{"sum", report.sufficiency_sum}, {"holds", report.sufficiency_holds}}},
           {"el_residual", report.el_residual},
           {"oracle", oracle_to_json(report.oracle, report.oracle_agrees)},
           {"stages", std::move(stages)}};
  return doc;
}

std::string format_double(double v) {
  // shortest decimal form that parses back to the same double
  for (int precision = 15; precision <= 17; ++precision) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.*g", precision, v);
    if (std::strtod(buf, nullptr) == v) return buf;
  }
  return "nan";  // unreachable for finite v; strtod(%.17g) is exact
}

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out << "param,verdict,min_alpha_el\n";
  for (const SweepRow& row : rows)
    out << format_double(row.param) << "," << to_string(row.verdict) << ","
        << format_double(row.min_alpha_el) << "\n";
  return out.str();
}

std::string convergence_csv(const std::vector<TruncationStage>& stages) {
  std::ostringstream out;
  out << "N,n,alpha_n,delta_vs_prev\n";
  const TruncationStage* prev = nullptr;
  for (const TruncationStage& stage : stages) {
    for (Index n = 0; n < stage.alpha_el.size(); ++n) {
      out << stage.truncation << "," << n << "," << format_double(stage.alpha_el[n]) << ",";
      if (prev && n < prev->alpha_el.size())
        out << format_double(std::abs(stage.alpha_el[n] - prev->alpha_el[n]));
      out << "\n";
    }
    prev = &stage;
  }
  return out.str();
}

}  // namespace minmetric
