// loctrig: run one experiment and emit a JSON report.
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "loctrig/experiments.hpp"
#include "loctrig/parallel.hpp"

namespace {

constexpr int kUsageError = 2;
constexpr int kRunError = 1;

std::optional<unsigned> threads_from_env() {
  const char* raw = std::getenv("LOCTRIG_THREADS");
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  try {
    const long v = std::stol(raw);
    if (v >= 1) {
      return static_cast<unsigned>(v);
    }
  } catch (const std::exception&) {
  }
  std::cerr << "loctrig: ignoring LOCTRIG_THREADS='" << raw << "'\n";
  return std::nullopt;
}

nlohmann::json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) {
    throw loctrig::InvalidArgument("cannot open config " + path);
  }
  try {
    return nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw loctrig::InvalidArgument("config " + path + ": " + e.what());
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Localized kernel experiments: point sources, sphere regression, MASC, transfer"};
  std::string experiment;
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string csv_path;
  std::string dump_path;
  unsigned threads = 0;

  std::string names;
  for (const auto& n : loctrig::experiment_names()) {
    names += (names.empty() ? "" : ", ") + n;
  }
  app.add_option("experiment", experiment, "One of: " + names)->required();
  app.add_option("--config", config_path, "JSON config; keys mirror the config fields")
      ->check(CLI::ExistingFile);
  app.add_option("--seed", seed, "Overrides the config seed");
  app.add_option("--out", out_path, "Write the report here instead of stdout");
  app.add_option("--threads", threads, "Worker cap (default: LOCTRIG_THREADS, then all cores)")
      ->check(CLI::PositiveNumber);
  app.add_option("--csv", csv_path, "Also write the report curve as CSV");
  app.add_option("--dump-data", dump_path, "Write the generated training data as CSV and exit");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kUsageError;
  }

  if (threads == 0) {
    threads = threads_from_env().value_or(0);
  }
  if (threads > 0) {
    loctrig::set_max_threads(threads);
  }

  loctrig::ExperimentConfig cfg;
  try {
    cfg = loctrig::default_config(experiment);
    if (!config_path.empty()) {
      const auto j = read_json(config_path);
      if (auto it = j.find("experiment"); it != j.end() && *it != experiment) {
        throw loctrig::InvalidArgument("config is for experiment '" + it->get<std::string>() +
                                       "', not '" + experiment + "'");
      }
      cfg = loctrig::config_from_json(j, cfg);
    }
    if (seed) {
      cfg.seed = *seed;
    }
    if (!out_path.empty()) {
      cfg.output = out_path;
    }
    loctrig::validate(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "loctrig: " << e.what() << "\n";
    return kUsageError;
  }

  try {
    if (!dump_path.empty()) {
      loctrig::dump_training_data(cfg, dump_path);
      return 0;
    }
    const auto report = loctrig::run_experiment(cfg);
    const auto text = report.to_json().dump(2);
    if (cfg.output.empty()) {
      std::cout << text << "\n";
    } else {
      std::ofstream out(cfg.output);
      out << text << "\n";
      if (!out) {
        throw std::runtime_error("cannot write " + cfg.output);
      }
    }
    if (!csv_path.empty()) {
      loctrig::write_curve_csv(report, csv_path);
    }
  } catch (const std::exception& e) {
    std::cerr << "loctrig: " << experiment << " failed: " << e.what() << "\n";
    return kRunError;
  }
  return 0;
}
