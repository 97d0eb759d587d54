#include "loctrig/experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <map>
#include <numbers>
#include <numeric>

#include "loctrig/datasets.hpp"
#include "loctrig/masc.hpp"
#include "loctrig/rng.hpp"
#include "loctrig/sphere_regress.hpp"
#include "loctrig/transfer.hpp"
#include "loctrig/trig_kernel.hpp"

namespace loctrig {

using nlohmann::json;
using std::numbers::pi;

const std::vector<std::string>& experiment_names() {
  static const std::vector<std::string> names{"pointsource", "ellipse", "biexp",
                                              "darcy",       "masc",    "transfer"};
  return names;
}

ExperimentConfig default_config(std::string_view experiment) {
  const auto& names = experiment_names();
  if (std::find(names.begin(), names.end(), experiment) == names.end()) {
    throw UnknownExperiment("unknown experiment '" + std::string(experiment) + "'");
  }
  ExperimentConfig cfg;
  cfg.experiment = std::string(experiment);
  if (experiment == "pointsource") {
    cfg.degree = 256;
    cfg.locations = {-1.0, 2.0, 2.05};
    cfg.amplitudes = {5.0, 30.0, 20.0};
  } else if (experiment == "biexp") {
    cfg.q = 2;
  } else if (experiment == "darcy") {
    cfg.degree = 64;
    cfg.q = 2;
  } else if (experiment == "masc") {
    cfg.degree = 64;
  }
  return cfg;
}

namespace {

double snr_from_json(const json& v) {
  if (v.is_null()) {
    return std::numeric_limits<double>::infinity();
  }
  if (v.is_string()) {
    const auto s = v.get<std::string>();
    if (s == "inf" || s == "Infinity" || s == "noiseless") {
      return std::numeric_limits<double>::infinity();
    }
    throw InvalidArgument("snr_db: expected a number, null or \"inf\", got \"" + s + "\"");
  }
  return v.get<double>();
}

using Setter = std::function<void(ExperimentConfig&, const json&)>;

template <typename T, typename Field>
Setter field(Field ExperimentConfig::*member) {
  return [member](ExperimentConfig& cfg, const json& v) { cfg.*member = v.get<T>(); };
}

const std::map<std::string, Setter>& setters() {
  static const std::map<std::string, Setter> table{
      {"experiment", field<std::string>(&ExperimentConfig::experiment)},
      {"seed", field<std::uint64_t>(&ExperimentConfig::seed)},
      {"degree", field<int>(&ExperimentConfig::degree)},
      {"q", field<int>(&ExperimentConfig::q)},
      {"train_size", field<std::size_t>(&ExperimentConfig::train_size)},
      {"test_size", field<std::size_t>(&ExperimentConfig::test_size)},
      {"snr_db", [](ExperimentConfig& c, const json& v) { c.snr_db = snr_from_json(v); }},
      {"exact_density", field<bool>(&ExperimentConfig::exact_density)},
      {"locations", field<std::vector<double>>(&ExperimentConfig::locations)},
      {"amplitudes", field<std::vector<double>>(&ExperimentConfig::amplitudes)},
      {"peak_threshold", field<double>(&ExperimentConfig::peak_threshold)},
      {"oversampling", field<int>(&ExperimentConfig::oversampling)},
      {"dataset", field<std::string>(&ExperimentConfig::dataset)},
      {"per_class", field<std::size_t>(&ExperimentConfig::per_class)},
      {"noise_sd", field<double>(&ExperimentConfig::noise_sd)},
      {"ellipse_semi_minor", field<double>(&ExperimentConfig::ellipse_semi_minor)},
      {"background_fraction", field<double>(&ExperimentConfig::background_fraction)},
      {"theta", field<double>(&ExperimentConfig::theta)},
      {"eta_start", field<double>(&ExperimentConfig::eta_start)},
      {"eta_step", field<double>(&ExperimentConfig::eta_step)},
      {"eta_max", [](ExperimentConfig& c, const json& v) {
         c.eta_max = v.is_null() ? std::numeric_limits<double>::infinity() : v.get<double>();
       }},
      {"min_component", field<std::size_t>(&ExperimentConfig::min_component)},
      {"neighbors", field<std::size_t>(&ExperimentConfig::neighbors)},
      {"alpha1", field<double>(&ExperimentConfig::alpha1)},
      {"beta1", field<double>(&ExperimentConfig::beta1)},
      {"alpha2", field<double>(&ExperimentConfig::alpha2)},
      {"beta2", field<double>(&ExperimentConfig::beta2)},
      {"center", field<double>(&ExperimentConfig::center)},
      {"radius", field<double>(&ExperimentConfig::radius)},
      {"degrees", field<std::vector<int>>(&ExperimentConfig::degrees)},
      {"quadrature_intervals", field<std::size_t>(&ExperimentConfig::quadrature_intervals)},
      {"input_csv", field<std::string>(&ExperimentConfig::input_csv)},
      {"output", field<std::string>(&ExperimentConfig::output)},
  };
  return table;
}

json finite_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

}  // namespace

ExperimentConfig config_from_json(const json& j, ExperimentConfig base) {
  if (!j.is_object()) {
    throw InvalidArgument("config: expected a JSON object");
  }
  const auto& table = setters();
  for (const auto& [key, value] : j.items()) {
    const auto it = table.find(key);
    if (it == table.end()) {
      throw InvalidArgument("config: unknown key '" + key + "'");
    }
    try {
      it->second(base, value);
    } catch (const json::exception& e) {
      throw InvalidArgument("config: bad value for '" + key + "': " + e.what());
    }
  }
  return base;
}

json config_to_json(const ExperimentConfig& c) {
  return json{
      {"experiment", c.experiment},
      {"seed", c.seed},
      {"degree", c.degree},
      {"q", c.q},
      {"train_size", c.train_size},
      {"test_size", c.test_size},
      {"snr_db", finite_or_null(c.snr_db)},
      {"exact_density", c.exact_density},
      {"locations", c.locations},
      {"amplitudes", c.amplitudes},
      {"peak_threshold", c.peak_threshold},
      {"oversampling", c.oversampling},
      {"dataset", c.dataset},
      {"per_class", c.per_class},
      {"noise_sd", c.noise_sd},
      {"ellipse_semi_minor", c.ellipse_semi_minor},
      {"background_fraction", c.background_fraction},
      {"theta", c.theta},
      {"eta_start", c.eta_start},
      {"eta_step", c.eta_step},
      {"eta_max", finite_or_null(c.eta_max)},
      {"min_component", c.min_component},
      {"neighbors", c.neighbors},
      {"alpha1", c.alpha1},
      {"beta1", c.beta1},
      {"alpha2", c.alpha2},
      {"beta2", c.beta2},
      {"center", c.center},
      {"radius", c.radius},
      {"degrees", c.degrees},
      {"quadrature_intervals", c.quadrature_intervals},
      {"input_csv", c.input_csv},
      {"output", c.output},
  };
}

void validate(const ExperimentConfig& c) {
  (void)default_config(c.experiment);
  auto require = [](bool ok, const char* what) {
    if (!ok) {
      throw InvalidArgument(std::string("config: ") + what);
    }
  };
  require(c.degree >= 1, "degree must be >= 1");
  require(c.q >= 1, "q must be >= 1");
  require(!std::isnan(c.snr_db), "snr_db must not be NaN");
  if (c.experiment == "pointsource") {
    require(!c.locations.empty(), "locations must be nonempty");
    require(c.locations.size() == c.amplitudes.size(),
            "locations and amplitudes must have equal length");
    require(c.peak_threshold > 0.0 && c.peak_threshold < 1.0, "peak_threshold must lie in (0, 1)");
    require(c.oversampling >= 8, "oversampling must be >= 8");
  } else if (c.experiment == "ellipse" || c.experiment == "biexp" || c.experiment == "darcy") {
    require(c.train_size >= 1 || !c.input_csv.empty(), "train_size must be >= 1");
    require(c.test_size >= 1, "test_size must be >= 1");
  } else if (c.experiment == "masc") {
    require(c.dataset == "circle_ellipse" || c.dataset == "two_moons" || c.dataset == "two_arcs" ||
                c.dataset == "csv",
            "dataset must be circle_ellipse, two_moons, two_arcs or csv");
    require(c.dataset != "csv" || !c.input_csv.empty(), "dataset csv needs input_csv");
    require(c.per_class >= 1, "per_class must be >= 1");
    require(c.ellipse_semi_minor > 0.0, "ellipse_semi_minor must be positive");
  } else if (c.experiment == "transfer") {
    require(!c.degrees.empty(), "degrees must be nonempty");
    for (int d : c.degrees) {
      require(d >= 1, "degrees must be >= 1");
    }
    require(c.radius > 0.0, "radius must be positive");
    require(c.quadrature_intervals >= 2, "quadrature_intervals must be >= 2");
  }
}

json RunReport::to_json() const {
  return json{{"config", config},
              {"metrics", metrics},
              {"wall_clock_seconds", wall_clock_seconds},
              {"gaussian_sampler", gaussian_sampler}};
}

namespace {

double median(std::vector<double> v) {
  if (v.empty()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  std::sort(v.begin(), v.end());
  const std::size_t m = v.size() / 2;
  return v.size() % 2 ? v[m] : 0.5 * (v[m - 1] + v[m]);
}

double mean(const std::vector<double>& v) {
  if (v.empty()) {
    return std::numeric_limits<double>::quiet_NaN();
  }
  return std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
}

// Error summary plus the percent-point curve. Exact zeros are floored at the
// smallest normal double so the log stays finite.
json summarize_errors(const std::vector<double>& errors) {
  json out{{"count", errors.size()},
           {"median_error", finite_or_null(median(errors))},
           {"mean_error", finite_or_null(mean(errors))},
           {"max_error", errors.empty() ? json(nullptr)
                                        : json(*std::max_element(errors.begin(), errors.end()))}};
  std::vector<double> floored(errors);
  for (auto& e : floored) {
    e = std::max(e, std::numeric_limits<double>::min());
  }
  json percent = json::array();
  json log_error = json::array();
  if (!floored.empty()) {
    for (const auto& p : percent_point_curve(floored)) {
      percent.push_back(p.percent);
      log_error.push_back(p.log10_error);
    }
  }
  out["curve"] = json{{"percent", percent}, {"log10_error", log_error}};
  return out;
}

// null when nothing was generated here (CSV input) or every sample is noiseless
json snr_summary(const std::vector<double>& achieved) {
  if (std::none_of(achieved.begin(), achieved.end(), [](double v) { return std::isfinite(v); })) {
    return nullptr;
  }
  const auto [lo, hi] = std::minmax_element(achieved.begin(), achieved.end());
  return json{{"min", finite_or_null(*lo)}, {"max", finite_or_null(*hi)}};
}

RegressionData load_training(const ExperimentConfig& cfg, std::size_t feature_columns,
                             const std::function<RegressionData()>& generate) {
  if (cfg.input_csv.empty()) {
    return generate();
  }
  auto data = regression_from_table(read_csv(cfg.input_csv), feature_columns);
  if (data.raw.rows() == 0) {
    throw DataFormatError(cfg.input_csv + ": no data rows");
  }
  return data;
}

// --- pointsource ----------------------------------------------------------

json run_pointsource(const ExperimentConfig& cfg) {
  AtomicMeasure measure;
  for (std::size_t k = 0; k < cfg.locations.size(); ++k) {
    measure.add(wrap_angle(cfg.locations[k]), cfg.amplitudes[k]);
  }
  const TrigKernel kernel(cfg.degree);
  const auto samples = sample_power_spectrum(measure, kernel, cfg.oversampling);
  const auto peaks = detect_peaks(kernel, samples, cfg.peak_threshold);
  json locations = json::array();
  json amplitudes = json::array();
  for (const auto& p : peaks) {
    locations.push_back(p.location);
    amplitudes.push_back(p.amplitude);
  }
  return json{{"peak_count", peaks.size()},
              {"grid_size", samples.size()},
              {"curve", json{{"location", locations}, {"amplitude", amplitudes}}}};
}

// --- ellipse --------------------------------------------------------------

RegressionData ellipse_training(const ExperimentConfig& cfg) {
  return load_training(cfg, 2, [&] { return gen_ellipse(cfg.seed, cfg.train_size, cfg.snr_db, Split::Train); });
}

json run_ellipse(const ExperimentConfig& cfg) {
  const auto train = ellipse_training(cfg);
  const auto test = gen_ellipse(cfg.seed, cfg.test_size, cfg.snr_db, Split::Test);
  const EstimatorConfig ecfg{cfg.degree, cfg.q, !cfg.exact_density};
  const ManifoldEstimator est(SphericalDataset(ellipse_embed(train.raw), train.targets), ecfg);
  const auto batch = est.estimate_batch(ellipse_embed(test.raw));

  std::vector<double> errors;
  std::vector<double> near;
  std::vector<double> smooth;
  std::size_t undefined = 0;
  for (std::size_t i = 0; i < test.raw.rows(); ++i) {
    const double theta = ellipse_theta(test.raw.row(i));
    double value = batch.values(i, 0);
    if (cfg.exact_density) {
      value /= ellipse_exact_density(theta);
    } else if (!batch.defined[i]) {
      ++undefined;
      continue;
    }
    const double err = std::fabs(value - test.targets(i, 0));
    errors.push_back(err);
    const double gap = std::min(std::fabs(theta - pi / 2), std::fabs(theta + pi / 2));
    if (gap <= 0.05) {
      near.push_back(err);
    } else if (gap >= 0.3) {
      smooth.push_back(err);
    }
  }
  json out = summarize_errors(errors);
  out["undefined_points"] = undefined;
  out["near_singularity_mean_error"] = finite_or_null(mean(near));
  out["smooth_region_mean_error"] = finite_or_null(mean(smooth));
  out["localization_ratio"] = finite_or_null(mean(near) / mean(smooth));
  out["achieved_snr_db"] = snr_summary(train.achieved_snr_db);
  return out;
}

// --- biexp / darcy -------------------------------------------------------

json parameter_metrics(const ManifoldEstimator& est, const RowMatrix& probes,
                       const RowMatrix& truth, const std::vector<double>& achieved) {
  const auto batch = est.estimate_batch(probes);
  std::vector<double> combined;
  std::vector<double> sq(truth.cols(), 0.0);
  std::size_t undefined = 0;
  for (std::size_t i = 0; i < probes.rows(); ++i) {
    if (!batch.defined[i]) {
      ++undefined;
      continue;
    }
    combined.push_back(combined_error(truth.row(i), batch.values.row(i)));
    for (std::size_t k = 0; k < truth.cols(); ++k) {
      const double d = truth(i, k) - batch.values(i, k);
      sq[k] += d * d;
    }
  }
  json rms = json::array();
  for (double s : sq) {
    rms.push_back(combined.empty() ? json(nullptr) : json(std::sqrt(s / combined.size())));
  }
  json out = summarize_errors(combined);
  out["rms_error"] = rms;
  out["undefined_points"] = undefined;
  out["achieved_snr_db"] = snr_summary(achieved);
  return out;
}

RegressionData biexp_training(const ExperimentConfig& cfg) {
  return load_training(cfg, 100, [&] { return gen_biexp(cfg.seed, cfg.train_size, cfg.snr_db, Split::Train); });
}

json run_biexp(const ExperimentConfig& cfg) {
  const auto train = biexp_training(cfg);
  const auto test = gen_biexp(cfg.seed, cfg.test_size, cfg.snr_db, Split::Test);
  const ManifoldEstimator est(SphericalDataset(biexp_embed(train.raw), train.targets),
                              EstimatorConfig{cfg.degree, cfg.q, true});
  auto achieved = train.achieved_snr_db;
  achieved.insert(achieved.end(), test.achieved_snr_db.begin(), test.achieved_snr_db.end());
  return parameter_metrics(est, biexp_embed(test.raw), test.targets, achieved);
}

RegressionData darcy_training(const ExperimentConfig& cfg, const std::vector<double>& times) {
  return load_training(cfg, times.size(), [&] {
    return gen_darcy(cfg.seed, cfg.train_size, cfg.snr_db, Split::Train, times);
  });
}

json run_darcy(const ExperimentConfig& cfg) {
  const auto times = darcy_design(cfg.seed);
  const auto train = darcy_training(cfg, times);
  const auto test = gen_darcy(cfg.seed, cfg.test_size, cfg.snr_db, Split::Test, times);
  auto embed = affine_sphere_embed(train.raw);
  const ManifoldEstimator est(SphericalDataset(std::move(embed.embedded), train.targets),
                              EstimatorConfig{cfg.degree, cfg.q, true});
  auto achieved = train.achieved_snr_db;
  achieved.insert(achieved.end(), test.achieved_snr_db.begin(), test.achieved_snr_db.end());
  auto out = parameter_metrics(est, embed.map.apply(test.raw), test.targets, achieved);
  out["embedding_scale"] = embed.map.scale;
  return out;
}

// --- masc -----------------------------------------------------------------

struct MascData {
  LabeledDataset data;
  std::vector<char> on_support;  // two_arcs only
};

MascData masc_data(const ExperimentConfig& cfg) {
  if (!cfg.input_csv.empty()) {
    return {labeled_from_table(read_csv(cfg.input_csv)), {}};
  }
  if (cfg.dataset == "two_moons") {
    return {gen_two_moons(cfg.seed, cfg.per_class, cfg.noise_sd), {}};
  }
  if (cfg.dataset == "two_arcs") {
    auto arcs = gen_two_arcs(cfg.seed, cfg.per_class, cfg.background_fraction);
    return {std::move(arcs.data), std::move(arcs.on_support)};
  }
  CircleEllipseShape shape;
  shape.semi_minor = cfg.ellipse_semi_minor;
  return {gen_circle_ellipse(cfg.seed, cfg.per_class, cfg.noise_sd, shape), {}};
}

json run_masc(const ExperimentConfig& cfg) {
  const auto input = masc_data(cfg);
  const auto& labels = input.data.labels;
  const auto cloud = MetricCloud::euclidean(input.data.features);
  Oracle oracle([&labels](std::size_t i) { return labels.at(i); });
  MascConfig mcfg;
  mcfg.degree = cfg.degree;
  mcfg.theta = cfg.theta;
  mcfg.eta_start = cfg.eta_start;
  mcfg.eta_step = cfg.eta_step;
  mcfg.eta_max = cfg.eta_max;
  mcfg.min_component = cfg.min_component;
  mcfg.neighbors = cfg.neighbors;
  mcfg.seed = cfg.seed;
  const auto result = masc_run(cloud, oracle, mcfg);

  json q_eta = json::array();
  json q_index = json::array();
  json q_label = json::array();
  for (const auto& q : result.queries) {
    q_eta.push_back(q.eta);
    q_index.push_back(q.index);
    q_label.push_back(q.label);
  }
  json h_eta = json::array();
  json h_components = json::array();
  json h_queries = json::array();
  json h_accuracy = json::array();
  for (const auto& level : result.history) {
    h_eta.push_back(level.eta);
    h_components.push_back(level.components);
    h_queries.push_back(level.queries);
    h_accuracy.push_back(accuracy(level.snapshot, labels));
  }
  const auto cautious = static_cast<std::size_t>(std::count_if(
      result.cautious_labels.begin(), result.cautious_labels.end(),
      [](int l) { return l != kNoLabel; }));
  json out{{"points", labels.size()},
           {"accuracy", accuracy(result.labels, labels)},
           {"f_score", f_score(result.labels, labels)},
           {"query_count", result.queries.size()},
           {"oracle_calls", oracle.calls()},
           {"support_size", result.support.size()},
           {"labeled_before_knn", cautious},
           {"distance_scale", cloud.scale()},
           {"queries", json{{"eta", q_eta}, {"index", q_index}, {"label", q_label}}},
           {"per_eta", json{{"eta", h_eta},
                            {"components", h_components},
                            {"queries", h_queries},
                            {"snapshot_accuracy", h_accuracy}}}};
  if (!input.on_support.empty()) {
    std::vector<char> kept(labels.size(), 0);
    for (auto i : result.support) {
      kept[i] = 1;
    }
    std::size_t on = 0, on_kept = 0, off = 0, off_pruned = 0;
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (input.on_support[i]) {
        ++on;
        on_kept += kept[i];
      } else {
        ++off;
        off_pruned += !kept[i];
      }
    }
    out["support_retention"] = on ? static_cast<double>(on_kept) / on : 1.0;
    out["background_pruned"] = off ? static_cast<double>(off_pruned) / off : 1.0;
  }
  return out;
}

// --- transfer -------------------------------------------------------------

json run_transfer(const ExperimentConfig& cfg) {
  const int top = *std::max_element(cfg.degrees.begin(), cfg.degrees.end());
  const JacobiDataSpace first(cfg.alpha1, cfg.beta1);
  const JacobiDataSpace second(cfg.alpha2, cfg.beta2);
  const JointJacobiSpace space(first, second, top + 2);

  // f = 2 + cos 3 theta on B(center, radius), 0 outside, mean value on the
  // boundary nodes so the trapezoid rule stays second order across the jump.
  const std::size_t k = cfg.quadrature_intervals;
  const auto grid = trapezoid_grid(k);
  const double h = pi / static_cast<double>(k);
  auto f = [&](double t) { return 2.0 + std::cos(3.0 * t); };
  std::vector<double> samples(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    const double gap = std::fabs(grid[i] - cfg.center);
    if (std::fabs(gap - cfg.radius) < 1e-9 * h) {
      samples[i] = 0.5 * f(grid[i]);
    } else {
      samples[i] = gap < cfg.radius ? f(grid[i]) : 0.0;
    }
  }

  constexpr int kProbes = 201;
  const bool identity = space.a() == 0 && space.b() == 0;
  json inner_error = json::array();
  json identity_dev = json::array();
  for (int n : cfg.degrees) {
    const auto lifted = space.lift_series(samples, n);
    double worst = 0.0;
    for (int p = 0; p < kProbes; ++p) {
      const double t = cfg.center - 0.75 * cfg.radius + 1.5 * cfg.radius * p / (kProbes - 1);
      if (t < 0.0 || t > pi) {
        continue;
      }
      worst = std::max(worst, std::fabs(lifted(t) - space.omega(t) * f(t)));
    }
    inner_error.push_back(worst);
    if (identity) {
      // l_{m,m} = sqrt(2) lambda_m, so the lift is single-space smoothing at n / sqrt(2).
      const auto smooth = smooth_series(second, samples, n / std::numbers::sqrt2, top + 2);
      double dev = 0.0;
      for (int p = 0; p < kProbes; ++p) {
        const double t = pi * p / (kProbes - 1);
        dev = std::max(dev, std::fabs(lifted(t) - smooth(t)));
      }
      identity_dev.push_back(dev);
    }
  }
  json out{{"a", space.a()},
           {"b", space.b()},
           {"bandwidth", space.bandwidth()},
           {"connection_intervals", space.connection().intervals},
           {"connection_last_change", space.connection().last_change},
           {"curve", json{{"degree", cfg.degrees}, {"inner_max_error", inner_error}}}};
  if (identity) {
    out["curve"]["identity_deviation"] = identity_dev;
    double worst = 0.0;
    for (const auto& v : identity_dev) {
      worst = std::max(worst, v.get<double>());
    }
    out["max_identity_deviation"] = worst;
  }
  return out;
}

}  // namespace

RunReport run_experiment(const ExperimentConfig& cfg) {
  validate(cfg);
  const auto start = std::chrono::steady_clock::now();
  json metrics;
  if (cfg.experiment == "pointsource") {
    metrics = run_pointsource(cfg);
  } else if (cfg.experiment == "ellipse") {
    metrics = run_ellipse(cfg);
  } else if (cfg.experiment == "biexp") {
    metrics = run_biexp(cfg);
  } else if (cfg.experiment == "darcy") {
    metrics = run_darcy(cfg);
  } else if (cfg.experiment == "masc") {
    metrics = run_masc(cfg);
  } else {
    metrics = run_transfer(cfg);
  }
  const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
  return {config_to_json(cfg), std::move(metrics), elapsed.count(), kGaussianSampler};
}

void dump_training_data(const ExperimentConfig& cfg, const std::filesystem::path& path) {
  validate(cfg);
  if (cfg.experiment == "ellipse") {
    write_csv(path, to_table(ellipse_training(cfg)));
  } else if (cfg.experiment == "biexp") {
    write_csv(path, to_table(biexp_training(cfg)));
  } else if (cfg.experiment == "darcy") {
    write_csv(path, to_table(darcy_training(cfg, darcy_design(cfg.seed))));
  } else if (cfg.experiment == "masc") {
    write_csv(path, to_table(masc_data(cfg).data));
  } else {
    throw InvalidArgument("experiment '" + cfg.experiment + "' has no training data to dump");
  }
}

void write_curve_csv(const RunReport& report, const std::filesystem::path& path) {
  auto it = report.metrics.find("curve");
  if (it == report.metrics.end()) {
    it = report.metrics.find("per_eta");
  }
  if (it == report.metrics.end() || !it->is_object()) {
    throw InvalidArgument("report has no curve to export");
  }
  CsvTable table;
  std::size_t rows = 0;
  std::vector<const json*> columns;
  for (const auto& [name, values] : it->items()) {
    table.header.push_back(name);
    columns.push_back(&values);
    rows = std::max(rows, values.size());
  }
  table.values = RowMatrix(rows, columns.size(), std::numeric_limits<double>::quiet_NaN());
  for (std::size_t c = 0; c < columns.size(); ++c) {
    for (std::size_t r = 0; r < columns[c]->size(); ++r) {
      const auto& v = (*columns[c])[r];
      if (v.is_number()) {
        table.values(r, c) = v.get<double>();
      }
    }
  }
  write_csv(path, table);
}

}  // namespace loctrig
