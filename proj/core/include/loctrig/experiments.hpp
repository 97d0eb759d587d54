#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "loctrig/errors.hpp"

namespace loctrig {

/// Raised for an experiment name outside the supported set.
class UnknownExperiment : public InvalidArgument {
 public:
  using InvalidArgument::InvalidArgument;
};

/// Flat parameter set shared by every experiment; each experiment reads the
/// fields that apply to it. JSON keys are the field names.
struct ExperimentConfig {
  std::string experiment;
  std::uint64_t seed = 0;

  // regression (ellipse, biexp, darcy)
  int degree = 32;
  int q = 1;
  std::size_t train_size = 8192;
  std::size_t test_size = 2048;
  double snr_db = std::numeric_limits<double>::infinity();  // inf: noiseless
  bool exact_density = false;                                // ellipse only

  // pointsource
  std::vector<double> locations;
  std::vector<double> amplitudes;
  double peak_threshold = 0.08;
  int oversampling = 8;

  // masc
  std::string dataset = "circle_ellipse";  // circle_ellipse | two_moons | two_arcs | csv
  std::size_t per_class = 1000;
  double noise_sd = 0.05;
  double ellipse_semi_minor = 1.0;  // circle_ellipse: the circle has radius 1
  double background_fraction = 0.01;
  double theta = 0.12;
  double eta_start = 0.006;
  double eta_step = 0.005;
  double eta_max = 0.036;
  std::size_t min_component = 15;
  std::size_t neighbors = 5;

  // transfer
  double alpha1 = 1.5;
  double beta1 = -0.5;
  double alpha2 = -0.5;
  double beta2 = -0.5;
  double center = 1.5707963267948966;
  double radius = 0.7853981633974483;
  std::vector<int> degrees{16, 32, 64, 128};
  std::size_t quadrature_intervals = 32768;

  // io
  std::string input_csv;  // replaces the generated training data when set
  std::string output;
};

/// Names accepted by run_experiment.
const std::vector<std::string>& experiment_names();

/// Defaults for the named experiment; throws UnknownExperiment.
ExperimentConfig default_config(std::string_view experiment);

/// Overlays the keys of `j` on `base`. Unknown keys and type mismatches throw
/// InvalidArgument; "snr_db": null or "inf" means noiseless.
ExperimentConfig config_from_json(const nlohmann::json& j, ExperimentConfig base);
nlohmann::json config_to_json(const ExperimentConfig& cfg);

/// Throws InvalidArgument for out-of-range parameters.
void validate(const ExperimentConfig& cfg);

struct RunReport {
  nlohmann::json config;
  nlohmann::json metrics;  // fixed keys per experiment; "curve" holds parallel arrays
  double wall_clock_seconds = 0.0;
  std::string gaussian_sampler;

  nlohmann::json to_json() const;
};

RunReport run_experiment(const ExperimentConfig& cfg);

/// Training data the experiment would generate (raw features and targets or
/// labels), in the CSV layout accepted through input_csv.
void dump_training_data(const ExperimentConfig& cfg, const std::filesystem::path& path);

/// Writes metrics["curve"] (metrics["per_eta"] for masc) as CSV columns.
void write_curve_csv(const RunReport& report, const std::filesystem::path& path);

}  // namespace loctrig
