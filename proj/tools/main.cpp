// fitts3d command-line front end.
//
// Exit codes: 0 success, 1 runtime failure, 2 usage error.

#include <fstream>
#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "fitts3d/commands.hpp"

namespace {

using namespace fitts3d;

const std::vector<std::string> kExperiments = {"e1", "e2", "e3", "e4"};
const std::vector<std::string> kInteractions = {"pointing", "manipulation"};
const std::vector<std::string> kBools = {"true", "false"};
const std::vector<std::string> kFormats = {"table", "json-like", "json"};

void emit(const std::string& text, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot write " + out_path);
  }
  out << text;
}

struct ReportArgs {
  std::string in;
  std::string models;
  std::string aggregate = "true";
  std::string rotation = "true";
  std::string format = "table";
  std::string out;
  bool points = false;
};

CLI::App* add_report_command(CLI::App& app, const char* name, const char* description,
                             ReportArgs& args, bool models_required) {
  auto* cmd = app.add_subcommand(name, description);
  cmd->add_option("--in", args.in, "Trial CSV to read")->required()->check(CLI::ExistingFile);
  auto* models = cmd->add_option("--models", args.models,
                                 "Comma list of models: fitts,hoffmann,welford,shannon,"
                                 "murata-iwase,cha-myung,final or all");
  if (models_required) {
    models->required();
  }
  cmd->add_option("--aggregate", args.aggregate, "Fit per-condition means (true) or trials")
      ->check(CLI::IsMember(kBools));
  cmd->add_option("--rotation-adaptation", args.rotation,
                  "Give prior models their adapted rotation ID")
      ->check(CLI::IsMember(kBools));
  cmd->add_option("--format", args.format, "table or json-like")->check(CLI::IsMember(kFormats));
  cmd->add_option("--out", args.out, "Write the report here instead of stdout");
  cmd->add_flag("--points", args.points, "Include per-observation predictor/MT pairs (json)");
  return cmd;
}

ReportFormat format_of(const std::string& text) {
  return text == "table" ? ReportFormat::Table : ReportFormat::Json;
}

int run_report(const ReportArgs& args, bool with_stepwise) {
  FitCommandOptions opts;
  opts.in = args.in;
  opts.models = parse_model_list(args.models.empty() ? "all" : args.models);
  opts.fit.aggregate = args.aggregate == "true";
  opts.fit.rotation =
      args.rotation == "true" ? RotationHandling::Adapted : RotationHandling::TranslationOnly;
  opts.points = args.points;
  opts.with_stepwise = with_stepwise;
  const ComparisonReport report = cmd_fit(opts);
  emit(format_of(args.format) == ReportFormat::Table ? render_table(report) : render_json(report),
       args.out);
  if (report.all_failed()) {
    std::cerr << "error: every requested model failed to fit\n";
    return kExitFailure;
  }
  return kExitOk;
}

} // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fit and compare 3D pointing/manipulation movement-time models"};
  app.require_subcommand(1);

  // generate
  std::string gen_experiment;
  std::string gen_interaction = "pointing";
  std::uint64_t gen_seed = 0;
  std::string gen_model;
  std::string gen_coefficients;
  std::optional<double> gen_noise;
  std::optional<double> gen_error_rate;
  std::string gen_out;
  auto* generate = app.add_subcommand("generate", "Write a synthetic trial CSV for one experiment");
  generate->add_option("--experiment", gen_experiment, "e1..e4")
      ->required()
      ->check(CLI::IsMember(kExperiments));
  generate->add_option("--interaction", gen_interaction)->check(CLI::IsMember(kInteractions));
  generate->add_option("--seed", gen_seed, "Generator seed");
  generate->add_option("--model", gen_model, "Planted model (default: final at reported scale)");
  generate->add_option("--coefficients", gen_coefficients, "name=value list, e.g. a=0.4,id_fitts=0.3");
  generate->add_option("--noise-sd", gen_noise, "Gaussian MT noise, seconds")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--error-rate", gen_error_rate, "Probability of an error trial")
      ->check(CLI::Range(0.0, 0.999999));
  generate->add_option("--out", gen_out, "Output CSV (stdout when omitted)");

  // classify
  std::string cls_object;
  std::string cls_target;
  double cls_width = 0.0;
  double cls_tolerance = 0.0;
  std::string cls_mode = "combined";
  auto* classify = app.add_subcommand("classify", "Success (1) or error (0) for a final pose");
  classify->add_option("--object", cls_object, "x,y,z,rx,ry,rz (cm, deg)")->required();
  classify->add_option("--target", cls_target, "x,y,z,rx,ry,rz (cm, deg)")->required();
  classify->add_option("--width", cls_width, "Target width W, cm")->check(CLI::PositiveNumber);
  classify->add_option("--tolerance", cls_tolerance, "Rotation tolerance omega, deg")
      ->check(CLI::NonNegativeNumber);
  classify->add_option("--mode", cls_mode)
      ->check(CLI::IsMember({"translation", "rotation", "combined"}));

  ReportArgs fit_args;
  auto* fit = add_report_command(app, "fit", "Fit the listed models", fit_args, true);
  ReportArgs compare_args;
  auto* compare =
      add_report_command(app, "compare", "Rank models by r² (all seven by default)", compare_args,
                         false);
  ReportArgs report_args;
  report_args.format = "json-like";
  auto* report = add_report_command(app, "report",
                                    "Model comparison plus stepwise contributions", report_args,
                                    false);

  // stepwise
  std::string sw_in;
  std::string sw_candidates;
  std::string sw_aggregate = "true";
  std::string sw_format = "table";
  std::string sw_out;
  auto* step = app.add_subcommand("stepwise", "Stepwise selection over task variables");
  step->add_option("--in", sw_in)->required()->check(CLI::ExistingFile);
  step->add_option("--candidates", sw_candidates, "Subset of F,W,A,phi,theta,alpha,omega");
  step->add_option("--aggregate", sw_aggregate)->check(CLI::IsMember(kBools));
  step->add_option("--format", sw_format)->check(CLI::IsMember(kFormats));
  step->add_option("--out", sw_out);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (generate->parsed()) {
      GenerateOptions opts;
      opts.experiment = *parse_experiment(gen_experiment);
      opts.interaction = *parse_interaction(gen_interaction);
      opts.seed = gen_seed;
      if (!gen_model.empty()) {
        const auto kind = parse_model(gen_model);
        if (!kind) {
          throw UsageError("unknown model '" + gen_model + "'");
        }
        opts.model = kind;
      }
      if (!gen_coefficients.empty()) {
        opts.coefficients = gen_coefficients;
      }
      opts.noise_sd = gen_noise;
      opts.error_rate = gen_error_rate;
      opts.out = gen_out;
      const auto rows = cmd_generate(opts);
      if (gen_out.empty()) {
        std::cout << format_trials(rows);
      }
      return kExitOk;
    }
    if (classify->parsed()) {
      ClassifyOptions opts;
      opts.object = parse_pose(cls_object);
      opts.target = parse_pose(cls_target);
      opts.width = cls_width;
      opts.tolerance = cls_tolerance;
      opts.mode = cls_mode == "translation" ? ClassifyMode::Translation
                  : cls_mode == "rotation"  ? ClassifyMode::Rotation
                                            : ClassifyMode::Combined;
      if (opts.mode != ClassifyMode::Rotation && !(opts.width > 0.0)) {
        throw UsageError("--width is required for translation and combined checks");
      }
      std::cout << (cmd_classify(opts) ? 1 : 0) << "\n";
      return kExitOk;
    }
    if (fit->parsed()) {
      return run_report(fit_args, false);
    }
    if (compare->parsed()) {
      return run_report(compare_args, false);
    }
    if (report->parsed()) {
      return run_report(report_args, true);
    }
    if (step->parsed()) {
      StepwiseCommandOptions opts;
      opts.in = sw_in;
      opts.candidates = split_list(sw_candidates);
      opts.aggregate = sw_aggregate == "true";
      const auto result = cmd_stepwise(opts);
      emit(format_of(sw_format) == ReportFormat::Table ? render_table(result)
                                                       : render_json(result),
           sw_out);
      return kExitOk;
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFailure;
  }
  return kExitUsage;
}
