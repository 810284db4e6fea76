/// @file report.hpp
/// @brief Full model reports (scalars, invariants, class decomposition,
/// checks), deterministic JSON/CSV serialization, and model file round-trip.

#pragma once

#include "gstruct/verify.hpp"

namespace gstruct {

struct ModelReport {
  std::string model;
  std::vector<std::pair<std::string, double>> params;
  std::vector<std::pair<std::string, std::string>> conventions;
  std::vector<std::pair<std::string, double>> scalars;
  std::vector<std::pair<std::string, double>> torsion_scalars;
  std::vector<double> alpha_flat;  // row-major alpha(i,j,k)
  std::vector<std::pair<std::string, double>> class_norms;
  std::vector<std::string> classes;  // active class labels
  std::vector<PatternMatch> patterns;
  std::vector<CheckReport> checks;

  bool all_pass() const;
};

/// Builds the report for a built-in model name ("flag", "stiefel",
/// "heisenberg", "sasaki", "kenmotsu"), including the closed-form regressions
/// for that model.
ModelReport run_model_report(const std::string& name, double t, int n, double tol);

/// Report for an already-built homogeneous bundle; includes the closed-form
/// regressions when the model name is recognized.
ModelReport bundle_report(const ModelBundle& bundle, double tol);
ModelReport pointwise_report(const PointwiseModel& pm, double tol);

std::string report_to_json(const ModelReport& report);
std::string report_to_pretty(const ModelReport& report);

/// CSV sweep over t for the t-parametrized models ("flag", "stiefel").
/// Columns: t,s,s_star,s_gperp,s_alt_gperp,chi2,alt2,sym2,div_residual.
std::string sweep_csv(const std::string& model_name, double t_from, double t_to, int steps);

std::string fuzz_summary_to_json(const FuzzSummary& summary);
std::string fuzz_summary_to_pretty(const FuzzSummary& summary);

/// Model (de)serialization. Homogeneous models carry the full tables;
/// pointwise models carry the torsion components instead of lambda.
std::string model_to_json(const ModelBundle& bundle);
std::string pointwise_to_json(const PointwiseModel& pm);

struct LoadedModel {
  std::optional<ModelBundle> bundle;
  std::optional<PointwiseModel> pointwise;
};

/// Parses and validates a model file; throws std::invalid_argument with a
/// field-level diagnostic on malformed input.
LoadedModel load_model_json(const std::string& text);

ModelReport report_for_loaded(const LoadedModel& loaded, double tol);

namespace jsonw {
/// Doubles are printed with 17 significant digits, enough to round-trip.
std::string number(double v);
std::string quoted(const std::string& s);
}  // namespace jsonw

}  // namespace gstruct
