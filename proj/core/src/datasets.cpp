#include "loctrig/datasets.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <numbers>
#include <sstream>

#include "loctrig/errors.hpp"
#include "loctrig/sphere_regress.hpp"

namespace loctrig {

using std::numbers::pi;

namespace {

void check_noise_sd(double noise_sd) {
  if (!(noise_sd >= 0.0)) {
    throw InvalidArgument("noise_sd must be >= 0");
  }
}

void push_noisy(RowMatrix& out, std::mt19937_64& rng, double x, double y, double sd) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  const double nx = sd > 0.0 ? sd * gauss(rng) : 0.0;
  const double ny = sd > 0.0 ? sd * gauss(rng) : 0.0;
  const double row[2] = {x + nx, y + ny};
  out.push_row(row);
}

}  // namespace

std::vector<double> ellipse_arclength_parameters(std::mt19937_64& rng, double a, double b,
                                                 std::size_t count) {
  if (!(a > 0.0) || !(b > 0.0)) {
    throw InvalidArgument("ellipse axes must be positive");
  }
  // Cumulative arclength on a fine grid, inverted piecewise linearly.
  constexpr std::size_t kNodes = 1 << 14;
  std::vector<double> cum(kNodes + 1, 0.0);
  const double dt = 2.0 * pi / kNodes;
  auto speed = [&](double t) { return std::hypot(a * std::sin(t), b * std::cos(t)); };
  for (std::size_t i = 0; i < kNodes; ++i) {
    const double t0 = i * dt;
    // Simpson on each cell.
    cum[i + 1] = cum[i] + dt / 6.0 * (speed(t0) + 4.0 * speed(t0 + 0.5 * dt) + speed(t0 + dt));
  }
  const double total = cum.back();
  std::uniform_real_distribution<double> unif(0.0, total);
  std::vector<double> out(count);
  for (auto& t : out) {
    const double s = unif(rng);
    auto it = std::upper_bound(cum.begin(), cum.end(), s);
    const auto hi = static_cast<std::size_t>(std::clamp<std::ptrdiff_t>(it - cum.begin(), 1, kNodes));
    const double frac = (s - cum[hi - 1]) / (cum[hi] - cum[hi - 1]);
    t = (static_cast<double>(hi - 1) + frac) * dt;
  }
  return out;
}

LabeledDataset gen_circle_ellipse(std::uint64_t seed, std::size_t n_per_class, double noise_sd,
                                  const CircleEllipseShape& shape) {
  check_noise_sd(noise_sd);
  if (!(shape.eccentricity >= 0.0 && shape.eccentricity < 1.0)) {
    throw InvalidArgument("eccentricity must lie in [0, 1)");
  }
  auto param_rng = stage_rng(seed, Stage::TrainParameters);
  auto noise_rng = stage_rng(seed, Stage::TrainNoise);
  const double b = shape.semi_minor;
  const double a = b / std::sqrt(1.0 - shape.eccentricity * shape.eccentricity);

  LabeledDataset out{RowMatrix(0, 2), {}};
  const auto circle = ellipse_arclength_parameters(param_rng, shape.circle_radius,
                                                   shape.circle_radius, n_per_class);
  for (double t : circle) {
    push_noisy(out.features, noise_rng, shape.circle_radius * std::cos(t),
               shape.circle_radius * std::sin(t), noise_sd);
    out.labels.push_back(0);
  }
  for (double t : ellipse_arclength_parameters(param_rng, a, b, n_per_class)) {
    push_noisy(out.features, noise_rng, a * std::cos(t), b * std::sin(t), noise_sd);
    out.labels.push_back(1);
  }
  return out;
}

LabeledDataset gen_two_moons(std::uint64_t seed, std::size_t n_per_moon, double noise_sd) {
  check_noise_sd(noise_sd);
  auto param_rng = stage_rng(seed, Stage::TrainParameters);
  auto noise_rng = stage_rng(seed, Stage::TrainNoise);
  std::uniform_real_distribution<double> unif(0.0, pi);
  LabeledDataset out{RowMatrix(0, 2), {}};
  for (std::size_t i = 0; i < n_per_moon; ++i) {
    const double t = unif(param_rng);
    push_noisy(out.features, noise_rng, std::cos(t), std::sin(t), noise_sd);
    out.labels.push_back(0);
  }
  for (std::size_t i = 0; i < n_per_moon; ++i) {
    const double t = unif(param_rng);
    push_noisy(out.features, noise_rng, 1.0 - std::cos(t), 0.5 - std::sin(t), noise_sd);
    out.labels.push_back(1);
  }
  return out;
}

ArcsWithBackground gen_two_arcs(std::uint64_t seed, std::size_t n_per_arc,
                                double background_fraction) {
  if (!(background_fraction >= 0.0)) {
    throw InvalidArgument("background_fraction must be >= 0");
  }
  auto rng = stage_rng(seed, Stage::TrainParameters);
  std::uniform_real_distribution<double> arc0(0.2, 2.6);
  std::uniform_real_distribution<double> arc1(3.4, 5.8);
  std::uniform_real_distribution<double> box(-1.5, 1.5);
  ArcsWithBackground out{{RowMatrix(0, 2), {}}, {}};
  auto add = [&](double x, double y, int label, bool support) {
    const double row[2] = {x, y};
    out.data.features.push_row(row);
    out.data.labels.push_back(label);
    out.on_support.push_back(support ? 1 : 0);
  };
  for (std::size_t i = 0; i < n_per_arc; ++i) {
    const double t = arc0(rng);
    add(std::cos(t), std::sin(t), 0, true);
  }
  for (std::size_t i = 0; i < n_per_arc; ++i) {
    const double t = arc1(rng);
    add(std::cos(t), std::sin(t), 1, true);
  }
  const auto background = static_cast<std::size_t>(
      std::llround(background_fraction * static_cast<double>(2 * n_per_arc)));
  for (std::size_t i = 0; i < background; ++i) {
    const double x = box(rng);
    add(x, box(rng), 2, false);
  }
  return out;
}

std::vector<double> noise_at_snr(std::mt19937_64& rng, std::span<const double> signal,
                                 double snr_db) {
  std::vector<double> noise(signal.size(), 0.0);
  const double signal_norm = norm2(signal);
  if (std::isinf(snr_db) && snr_db > 0.0) {
    return noise;
  }
  if (std::isnan(snr_db)) {
    throw InvalidArgument("noise_at_snr: SNR is NaN");
  }
  std::normal_distribution<double> gauss(0.0, 1.0);
  for (auto& v : noise) {
    v = gauss(rng);
  }
  const double raw = norm2(noise);
  if (signal_norm == 0.0 || raw == 0.0) {
    std::fill(noise.begin(), noise.end(), 0.0);
    return noise;
  }
  const double factor = signal_norm / (raw * std::pow(10.0, snr_db / 20.0));
  for (auto& v : noise) {
    v *= factor;
  }
  return noise;
}

double ellipse_target(double theta) noexcept {
  const double c = std::cos(theta);
  return 1.0 + std::sqrt(std::fabs(c)) * std::sin(c + std::sin(theta)) / 2.0;
}

std::vector<double> ellipse_plane_point(double theta) {
  return {3.0 * std::cos(theta), 6.0 * std::sin(theta)};
}

double ellipse_theta(std::span<const double> plane_point) noexcept {
  return std::atan2(plane_point[1] / 6.0, plane_point[0] / 3.0);
}

std::vector<double> ellipse_sphere_point(double theta) {
  return inverse_stereographic(ellipse_plane_point(theta));
}

double ellipse_exact_density(double theta) noexcept {
  const double vx = 3.0 * std::cos(theta);
  const double vy = 6.0 * std::sin(theta);
  const double dx = -3.0 * std::sin(theta);
  const double dy = 6.0 * std::cos(theta);
  const double r2 = vx * vx + vy * vy + 1.0;
  const double radial = vx * dx + vy * dy;
  const double speed2 = (dx * dx + dy * dy) / r2 - radial * radial / (r2 * r2);
  return 1.0 / std::sqrt(speed2);
}

RegressionData gen_ellipse(std::uint64_t seed, std::size_t count, double snr_db, Split split) {
  auto param_rng = stage_rng(seed, parameter_stage(split));
  std::uniform_real_distribution<double> unif(-pi, pi);
  RegressionData out{RowMatrix(0, 2), RowMatrix(0, 1), {}};
  std::vector<double> clean(count);
  for (std::size_t j = 0; j < count; ++j) {
    // uniform_real_distribution samples [-pi, pi); reflect onto (-pi, pi].
    double theta = unif(param_rng);
    if (theta == -pi) {
      theta = pi;
    }
    out.raw.push_row(ellipse_plane_point(theta));
    clean[j] = ellipse_target(theta);
  }
  std::vector<double> noise(count, 0.0);
  if (split == Split::Train) {
    auto noise_rng = stage_rng(seed, noise_stage(split));
    noise = noise_at_snr(noise_rng, clean, snr_db);
    out.achieved_snr_db.push_back(loctrig::snr_db(clean, noise));
  }
  for (std::size_t j = 0; j < count; ++j) {
    const double z = clean[j] + noise[j];
    out.targets.push_row(std::span<const double>(&z, 1));
  }
  return out;
}

RowMatrix ellipse_embed(const RowMatrix& raw) {
  RowMatrix out(0, raw.cols() + 1);
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    out.push_row(inverse_stereographic(raw.row(i)));
  }
  return out;
}

std::vector<double> biexp_signal(double lambda1, double lambda2, std::size_t length) {
  std::vector<double> out(length);
  for (std::size_t j = 0; j < length; ++j) {
    const double t = static_cast<double>(j + 1);
    out[j] = 0.7 * std::exp(-lambda1 * t) + 0.3 * std::exp(-lambda2 * t);
  }
  return out;
}

namespace {

// Shared by the biexp and Darcy generators: parameters, clean rows, per-row noise.
template <typename Signal>
RegressionData gen_parametric(std::uint64_t seed, std::size_t count, double snr_db, Split split,
                              double lo1, double hi1, double lo2, double hi2, std::size_t width,
                              Signal signal) {
  auto param_rng = stage_rng(seed, parameter_stage(split));
  auto noise_rng = stage_rng(seed, noise_stage(split));
  std::uniform_real_distribution<double> first(lo1, hi1);
  std::uniform_real_distribution<double> second(lo2, hi2);
  RegressionData out{RowMatrix(0, width), RowMatrix(0, 2), {}};
  const bool noisy = !(std::isinf(snr_db) && snr_db > 0.0);
  for (std::size_t j = 0; j < count; ++j) {
    const double u = first(param_rng);
    const double v = second(param_rng);
    auto row = signal(u, v);
    if (noisy) {
      const auto noise = noise_at_snr(noise_rng, row, snr_db);
      out.achieved_snr_db.push_back(loctrig::snr_db(row, noise));
      for (std::size_t i = 0; i < row.size(); ++i) {
        row[i] += noise[i];
      }
    }
    out.raw.push_row(row);
    const double params[2] = {u, v};
    out.targets.push_row(params);
  }
  return out;
}

}  // namespace

RegressionData gen_biexp(std::uint64_t seed, std::size_t count, double snr_db, Split split) {
  if (count < 1) {
    throw InvalidArgument("gen_biexp: need at least one sample");
  }
  return gen_parametric(seed, count, snr_db, split, 0.1, 0.7, 1.1, 1.7, 100,
                        [](double l1, double l2) { return biexp_signal(l1, l2); });
}

RowMatrix biexp_embed(const RowMatrix& raw, const BiexpTransform& transform) {
  RowMatrix out(0, raw.cols() + 1);
  std::vector<double> buf(raw.cols() + 1);
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    const auto row = raw.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      const double shift = k < transform.offset.size() ? transform.offset[k] : 0.0;
      buf[k] = transform.scale * row[k] - shift;
    }
    buf.back() = transform.lift;
    const double norm = norm2(buf);
    for (auto& v : buf) {
      v /= norm;
    }
    out.push_row(buf);
  }
  return out;
}

double darcy_solution(double p, double s, double t) noexcept {
  const double c = -(p + s) / std::expm1(s);
  return (p / s) * t + (c / s) * std::expm1(s * t) + 1.0;
}

std::vector<double> darcy_design(std::uint64_t seed, std::size_t count) {
  auto rng = stage_rng(seed, Stage::Design);
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<double> t(count);
  for (auto& v : t) {
    v = unif(rng);
  }
  return t;
}

RegressionData gen_darcy(std::uint64_t seed, std::size_t count, double snr_db, Split split,
                         std::span<const double> times) {
  if (count < 1) {
    throw InvalidArgument("gen_darcy: need at least one sample");
  }
  return gen_parametric(seed, count, snr_db, split, 0.1, 0.25, 1.5, 2.5, times.size(),
                        [times](double p, double s) {
                          std::vector<double> row(times.size());
                          for (std::size_t i = 0; i < times.size(); ++i) {
                            row[i] = darcy_solution(p, s, times[i]);
                          }
                          return row;
                        });
}

namespace {

std::string trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) {
    return {};
  }
  const auto last = s.find_last_not_of(" \t\r");
  return std::string(s.substr(first, last - first + 1));
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::string_view rest(line);
  while (true) {
    const auto comma = rest.find(',');
    out.push_back(trim(rest.substr(0, comma)));
    if (comma == std::string_view::npos) {
      break;
    }
    rest.remove_prefix(comma + 1);
  }
  return out;
}

std::string format_double(double v) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

CsvTable read_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw DataFormatError("cannot open " + path.string());
  }
  CsvTable table;
  std::string line;
  std::size_t line_no = 0;
  std::vector<double> row;
  while (std::getline(in, line)) {
    ++line_no;
    if (trim(line).empty()) {
      continue;
    }
    auto fields = split_fields(line);
    if (table.header.empty()) {
      table.header = std::move(fields);
      table.values = RowMatrix(0, table.header.size());
      continue;
    }
    if (fields.size() != table.header.size()) {
      throw DataFormatError(path.string() + ":" + std::to_string(line_no) + ": expected " +
                            std::to_string(table.header.size()) + " fields, got " +
                            std::to_string(fields.size()));
    }
    row.assign(fields.size(), 0.0);
    for (std::size_t k = 0; k < fields.size(); ++k) {
      const auto& f = fields[k];
      const auto res = std::from_chars(f.data(), f.data() + f.size(), row[k]);
      if (res.ec != std::errc() || res.ptr != f.data() + f.size()) {
        throw DataFormatError(path.string() + ":" + std::to_string(line_no) +
                              ": not a number: '" + f + "'");
      }
    }
    table.values.push_row(row);
  }
  if (table.header.empty()) {
    throw DataFormatError(path.string() + ": missing header row");
  }
  return table;
}

void write_csv(const std::filesystem::path& path, const CsvTable& table) {
  if (table.header.size() != table.values.cols()) {
    throw InvalidArgument("write_csv: header width does not match the data");
  }
  std::ofstream out(path);
  if (!out) {
    throw DataFormatError("cannot write " + path.string());
  }
  for (std::size_t k = 0; k < table.header.size(); ++k) {
    out << (k ? "," : "") << table.header[k];
  }
  out << '\n';
  for (std::size_t i = 0; i < table.values.rows(); ++i) {
    const auto row = table.values.row(i);
    for (std::size_t k = 0; k < row.size(); ++k) {
      out << (k ? "," : "") << format_double(row[k]);
    }
    out << '\n';
  }
  if (!out) {
    throw DataFormatError("write failed for " + path.string());
  }
}

CsvTable to_table(const LabeledDataset& data) {
  const std::size_t d = data.features.cols();
  CsvTable table;
  for (std::size_t k = 0; k < d; ++k) {
    table.header.push_back("x" + std::to_string(k));
  }
  table.header.emplace_back("label");
  table.values = RowMatrix(0, d + 1);
  std::vector<double> row(d + 1);
  for (std::size_t i = 0; i < data.features.rows(); ++i) {
    std::copy_n(data.features.row(i).begin(), d, row.begin());
    row[d] = data.labels[i];
    table.values.push_row(row);
  }
  return table;
}

LabeledDataset labeled_from_table(const CsvTable& table) {
  if (table.values.cols() < 2) {
    throw DataFormatError("labeled data needs feature columns and a label column");
  }
  const std::size_t d = table.values.cols() - 1;
  LabeledDataset out{RowMatrix(0, d), {}};
  for (std::size_t i = 0; i < table.values.rows(); ++i) {
    const auto row = table.values.row(i);
    const double label = row[d];
    if (label != std::trunc(label) || std::fabs(label) > std::numeric_limits<int>::max()) {
      throw DataFormatError("row " + std::to_string(i + 1) + ": label is not an integer");
    }
    out.features.push_row(row.first(d));
    out.labels.push_back(static_cast<int>(label));
  }
  return out;
}

CsvTable to_table(const RegressionData& data) {
  const std::size_t d = data.raw.cols();
  const std::size_t t = data.targets.cols();
  CsvTable table;
  for (std::size_t k = 0; k < d; ++k) {
    table.header.push_back("x" + std::to_string(k));
  }
  for (std::size_t k = 0; k < t; ++k) {
    table.header.push_back("z" + std::to_string(k));
  }
  table.values = RowMatrix(0, d + t);
  std::vector<double> row(d + t);
  for (std::size_t i = 0; i < data.raw.rows(); ++i) {
    std::copy_n(data.raw.row(i).begin(), d, row.begin());
    std::copy_n(data.targets.row(i).begin(), t, row.begin() + d);
    table.values.push_row(row);
  }
  return table;
}

RegressionData regression_from_table(const CsvTable& table, std::size_t feature_columns) {
  if (feature_columns == 0 || feature_columns >= table.values.cols()) {
    throw DataFormatError("regression data: expected " + std::to_string(feature_columns) +
                          " feature columns plus targets, got " +
                          std::to_string(table.values.cols()) + " columns");
  }
  const std::size_t t = table.values.cols() - feature_columns;
  RegressionData out{RowMatrix(0, feature_columns), RowMatrix(0, t), {}};
  for (std::size_t i = 0; i < table.values.rows(); ++i) {
    const auto row = table.values.row(i);
    out.raw.push_row(row.first(feature_columns));
    out.targets.push_row(row.subspan(feature_columns));
  }
  return out;
}

}  // namespace loctrig
