#include "stabur_cli/cli.hpp"

#include <algorithm>
#include <ostream>

#include <CLI11.hpp>

#include "stabur/errors.hpp"

namespace stabur::cli {

namespace {

void add_common(CLI::App& sub, RunConfig& config) {
  sub.add_option("--seed", config.seed, "Seed for every random draw")->capture_default_str();
  sub.add_option("--max-n", config.max_n, "Largest qubit count checked with the dense oracle")
      ->capture_default_str()
      ->check(CLI::Range(1, 10));
}

void add_entropy(CLI::App& sub, RunConfig& config) {
  sub.add_option("--entropy", config.entropy, "Entropy kind")
      ->capture_default_str()
      ->check(CLI::IsMember({"shannon", "min", "tsallis"}));
  sub.add_option_function<double>(
      "--q",
      [&config](double q) {
        config.q = q;
        config.q_given = true;
      },
      "Tsallis parameter, required with --entropy tsallis");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  RunConfig config;
  CLI::App app{"Entropic uncertainty relations for stabilizer and graph-state bases", "stabur"};
  app.require_subcommand(1);

  auto* bound = app.add_subcommand("bound", "Maassen-Uffink bound for two group or graph files");
  bound->add_option("inputs", config.inputs, "Two generator-list or graph files")->required()->expected(2);
  add_common(*bound, config);

  auto* tightness = app.add_subcommand("tightness", "Evaluate the bound on every basis state");
  tightness->add_option("inputs", config.inputs)->required()->expected(2);
  add_common(*tightness, config);
  add_entropy(*tightness, config);

  auto* matching = app.add_subcommand("matching", "Anticommuting matching of a symmetric difference");
  matching->add_option("inputs", config.inputs)->required()->expected(2);
  matching->add_option("--samples", config.samples, "Random states checked (default 1000)");
  matching->add_option("--out", config.out, "Write matched pairs as CSV");
  add_common(*matching, config);
  add_entropy(*matching, config);

  auto* boundary = app.add_subcommand("boundary", "Expectation-value boundary curve as CSV");
  boundary->add_option("--samples", config.samples, "Points on the first-quadrant arc (default 101)");
  boundary->add_option("--out", config.out, "Write the CSV here instead of stdout");
  add_entropy(*boundary, config);

  auto* verify = app.add_subcommand("verify", "Run a property suite");
  verify->add_option("suite", config.suite, "pauli, overlap, tightness, anticommuting, matching, "
                                            "recurrence or all")
      ->required();
  verify->add_option("--samples", config.samples, "Instances per check (suite-specific default)");
  verify->add_option("--restarts", config.restarts, "Local-search restarts")->capture_default_str();
  verify->add_option("--jobs", config.jobs, "Parallel search restarts")->capture_default_str()->check(CLI::PositiveNumber);
  add_common(*verify, config);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }

  try {
    Json report;
    if (bound->parsed()) {
      report = cmd_bound(config);
    } else if (tightness->parsed()) {
      report = cmd_tightness(config);
    } else if (matching->parsed()) {
      report = cmd_matching(config);
    } else if (boundary->parsed()) {
      std::string csv;
      report = cmd_boundary(config, csv);
      if (config.out.empty()) {
        out << csv;
        return kOk;
      }
    } else {
      report = cmd_verify(config);
    }
    out << report.dump(2) << "\n";
    return report.value("ok", false) ? kOk : kFailure;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    err << Json{{"error", e.what()}}.dump() << "\n";
    return kFailure;
  }
}

}  // namespace stabur::cli
