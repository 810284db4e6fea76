/// @file gstruct_cli.cpp
/// @brief Command-line surface: model reports, identity verification, t-sweeps,
/// fuzz campaigns, and model JSON dump/load.
///
/// Exit codes: 0 all checks pass, 1 check or fuzz failure, 2 usage/input error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "gstruct/report.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailure = 1;
constexpr int kExitUsage = 2;

double default_tolerance() {
  if (const char* env = std::getenv("GSTRUCT_TOL")) {
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    if (end != env && v > 0.0) return v;
    std::cerr << "warning: ignoring invalid GSTRUCT_TOL '" << env << "'\n";
  }
  return gstruct::kIdentityTol;
}

void emit(const std::string& text, const std::string& output_path) {
  if (output_path.empty()) {
    std::cout << text;
    if (!text.empty() && text.back() != '\n') std::cout << "\n";
    return;
  }
  std::ofstream out(output_path, std::ios::binary);
  if (!out) throw std::invalid_argument("cannot open output file '" + output_path + "'");
  out << text;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

bool is_builtin(const std::string& name) {
  return name == "flag" || name == "stiefel" || name == "heisenberg" || name == "sasaki" ||
         name == "kenmotsu";
}

struct CliOptions {
  std::string model;
  double t = 1.0;
  int n = 2;
  double tol = gstruct::kIdentityTol;
  std::string format = "pretty";
  std::string output;
  // sweep
  double t_from = 0.25;
  double t_to = 4.0;
  int steps = 16;
  // fuzz
  std::string space = "hermitian";
  int dim = 6;
  int iters = 1000;
  uint64_t seed = 1;
  // load
  std::string path;
};

int run_report(const CliOptions& opt) {
  gstruct::ModelReport rep;
  if (is_builtin(opt.model)) {
    rep = gstruct::run_model_report(opt.model, opt.t, opt.n, opt.tol);
  } else {
    rep = gstruct::report_for_loaded(gstruct::load_model_json(read_file(opt.model)), opt.tol);
  }
  if (opt.format == "json")
    emit(gstruct::report_to_json(rep), opt.output);
  else
    emit(gstruct::report_to_pretty(rep), opt.output);
  return rep.all_pass() ? kExitOk : kExitCheckFailure;
}

int run_sweep(const CliOptions& opt) {
  const std::string csv = gstruct::sweep_csv(opt.model, opt.t_from, opt.t_to, opt.steps);
  emit(csv, opt.output);
  return kExitOk;
}

int run_fuzz(const CliOptions& opt) {
  const gstruct::FuzzSummary summary = gstruct::fuzz_campaign(
      gstruct::fuzz_space_from_string(opt.space), opt.dim, opt.iters, opt.seed);
  if (opt.format == "json")
    emit(gstruct::fuzz_summary_to_json(summary), opt.output);
  else
    emit(gstruct::fuzz_summary_to_pretty(summary), opt.output);
  return summary.failures == 0 ? kExitOk : kExitCheckFailure;
}

int run_dump(const CliOptions& opt) {
  std::string text;
  if (opt.model == "flag")
    text = gstruct::model_to_json(gstruct::build_flag(opt.t));
  else if (opt.model == "stiefel")
    text = gstruct::model_to_json(gstruct::build_stiefel(opt.t));
  else if (opt.model == "heisenberg")
    text = gstruct::model_to_json(gstruct::build_heisenberg(opt.n));
  else if (opt.model == "sasaki")
    text = gstruct::pointwise_to_json(gstruct::build_sasaki(opt.n));
  else if (opt.model == "kenmotsu")
    text = gstruct::pointwise_to_json(gstruct::build_kenmotsu(opt.n));
  else
    throw std::invalid_argument("dump-model: unknown model '" + opt.model + "'");
  emit(text, opt.output);
  return kExitOk;
}

int run_load(const CliOptions& opt) {
  const gstruct::LoadedModel loaded = gstruct::load_model_json(read_file(opt.path));
  if (loaded.bundle)
    emit(gstruct::model_to_json(*loaded.bundle), opt.output);
  else
    emit(gstruct::pointwise_to_json(*loaded.pointwise), opt.output);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"intrinsic-torsion and curvature invariants of Riemannian G-structures"};
  app.require_subcommand(1);

  CliOptions opt;
  opt.tol = default_tolerance();

  auto add_model_options = [&](CLI::App* cmd, bool file_ok) {
    std::string desc = file_ok ? "built-in model name or model JSON file"
                               : "built-in model name";
    cmd->add_option("model", opt.model, desc)->required();
    cmd->add_option("--t", opt.t, "metric parameter t for flag/stiefel (t > 0)");
    cmd->add_option("--n", opt.n, "size parameter n for heisenberg/sasaki/kenmotsu");
  };

  CLI::App* report = app.add_subcommand("report", "full scalar/invariant/check report");
  add_model_options(report, true);
  report->add_option("--tol", opt.tol, "identity tolerance (default 1e-9 or GSTRUCT_TOL)");
  report->add_option("--format", opt.format, "pretty|json")
      ->check(CLI::IsMember({"pretty", "json"}));
  report->add_option("--output,-o", opt.output, "write to file instead of stdout");

  CLI::App* sweep = app.add_subcommand("sweep", "CSV sweep over t (flag/stiefel)");
  sweep->add_option("model", opt.model, "flag or stiefel")->required();
  sweep->add_option("--from", opt.t_from, "start of the t range (> 0)");
  sweep->add_option("--to", opt.t_to, "end of the t range");
  sweep->add_option("--steps", opt.steps, "number of samples (>= 2)");
  sweep->add_option("--output,-o", opt.output, "CSV output path (default stdout)");

  CLI::App* fuzz = app.add_subcommand("fuzz", "random property campaign");
  fuzz->add_option("--space", opt.space, "hermitian|contact|product|su")
      ->check(CLI::IsMember({"hermitian", "contact", "product", "su"}));
  fuzz->add_option("--dim", opt.dim, "frame dimension");
  fuzz->add_option("--iters", opt.iters, "iterations (>= 1)");
  fuzz->add_option("--seed", opt.seed, "campaign seed");
  fuzz->add_option("--format", opt.format, "pretty|json")
      ->check(CLI::IsMember({"pretty", "json"}));
  fuzz->add_option("--output,-o", opt.output, "write to file instead of stdout");

  CLI::App* dump = app.add_subcommand("dump-model", "write a built-in model as JSON");
  add_model_options(dump, false);
  dump->add_option("--output,-o", opt.output, "output path (default stdout)");

  CLI::App* load = app.add_subcommand("load-model", "validate a model file and re-emit it");
  load->add_option("path", opt.path, "model JSON file")->required();
  load->add_option("--output,-o", opt.output, "output path (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (report->parsed()) return run_report(opt);
    if (sweep->parsed()) return run_sweep(opt);
    if (fuzz->parsed()) return run_fuzz(opt);
    if (dump->parsed()) return run_dump(opt);
    if (load->parsed()) return run_load(opt);
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
  return kExitUsage;
}
