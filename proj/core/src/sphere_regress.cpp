#include "loctrig/sphere_regress.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>

#include "loctrig/errors.hpp"
#include "loctrig/parallel.hpp"

namespace loctrig {

namespace {

constexpr double kUnitTolerance = 1e-10;

void check_unit_rows(const RowMatrix& points) {
  for (std::size_t i = 0; i < points.rows(); ++i) {
    const double len = norm2(points.row(i));
    if (std::fabs(len - 1.0) > kUnitTolerance) {
      throw InvalidArgument("SphericalDataset: point " + std::to_string(i) +
                            " is not unit length (norm " + std::to_string(len) + ")");
    }
  }
}

}  // namespace

SphericalDataset::SphericalDataset(RowMatrix points, RowMatrix targets)
    : points_(std::move(points)), targets_(std::move(targets)) {
  if (points_.rows() == 0) {
    throw InvalidArgument("SphericalDataset: need at least one point");
  }
  if (targets_.rows() != points_.rows()) {
    throw InvalidArgument("SphericalDataset: point and target row counts differ");
  }
  if (targets_.cols() == 0) {
    throw InvalidArgument("SphericalDataset: targets must have at least one column");
  }
  check_unit_rows(points_);
}

SphericalDataset::SphericalDataset(RowMatrix points) : points_(std::move(points)) {
  if (points_.rows() == 0) {
    throw InvalidArgument("SphericalDataset: need at least one point");
  }
  targets_ = RowMatrix(points_.rows(), 1, 1.0);
  check_unit_rows(points_);
}

ManifoldEstimator::ManifoldEstimator(SphericalDataset data, EstimatorConfig cfg)
    : data_(std::move(data)), cfg_(cfg), kernel_(std::max(cfg.degree, 1), std::max(cfg.q, 1)) {
  if (cfg.degree < 1) {
    throw InvalidArgument("EstimatorConfig: degree must be >= 1");
  }
  const int ambient_q = static_cast<int>(data_.ambient_dim()) - 1;
  if (cfg.q < 1 || cfg.q > std::max(ambient_q, 1)) {
    throw InvalidArgument("EstimatorConfig: q must satisfy 1 <= q <= Q = " + std::to_string(ambient_q));
  }
}

void ManifoldEstimator::accumulate(std::span<const double> x, std::span<double> numer,
                                   double& denom) const {
  if (x.size() != data_.ambient_dim()) {
    throw InvalidArgument("estimator query has wrong dimension");
  }
  std::fill(numer.begin(), numer.end(), 0.0);
  denom = 0.0;
  const auto& pts = data_.points();
  const auto& tgt = data_.targets();
  for (std::size_t j = 0; j < pts.rows(); ++j) {
    const double t = std::clamp(dot(x, pts.row(j)), -1.0, 1.0);
    const double k = kernel_(t);
    denom += k;
    const auto z = tgt.row(j);
    for (std::size_t c = 0; c < numer.size(); ++c) {
      numer[c] += z[c] * k;
    }
  }
  const double inv_m = 1.0 / static_cast<double>(pts.rows());
  denom *= inv_m;
  for (auto& v : numer) {
    v *= inv_m;
  }
}

std::vector<double> ManifoldEstimator::estimate(std::span<const double> x) const {
  std::vector<double> numer(data_.target_dim());
  double denom = 0.0;
  accumulate(x, numer, denom);
  if (cfg_.normalize) {
    if (!(denom > 0.0)) {
      throw UndefinedPoint("normalized estimate undefined: density estimate is " +
                           std::to_string(denom));
    }
    for (auto& v : numer) {
      v /= denom;
    }
  }
  return numer;
}

double ManifoldEstimator::density(std::span<const double> x) const {
  std::vector<double> numer(data_.target_dim());
  double denom = 0.0;
  accumulate(x, numer, denom);
  return denom;
}

ManifoldEstimator::Batch ManifoldEstimator::estimate_batch(const RowMatrix& probes) const {
  Batch out;
  out.values = RowMatrix(probes.rows(), data_.target_dim());
  out.defined.assign(probes.rows(), 1);
  out.density.assign(probes.rows(), 0.0);
  parallel_for(0, probes.rows(), [&](std::size_t i) {
    auto row = out.values.row(i);
    double denom = 0.0;
    accumulate(probes.row(i), row, denom);
    out.density[i] = denom;
    if (cfg_.normalize) {
      if (denom > 0.0) {
        for (auto& v : row) {
          v /= denom;
        }
      } else {
        out.defined[i] = 0;
        std::fill(row.begin(), row.end(), std::numeric_limits<double>::quiet_NaN());
      }
    }
  });
  return out;
}

std::vector<double> f_n_estimate(const SphericalDataset& data, const EstimatorConfig& cfg,
                                 std::span<const double> x) {
  return ManifoldEstimator(data, cfg).estimate(x);
}

double density_estimate(const SphericalDataset& data, const EstimatorConfig& cfg,
                        std::span<const double> x) {
  return ManifoldEstimator(data, cfg).density(x);
}

std::vector<double> inverse_stereographic(std::span<const double> x) {
  std::vector<double> out(x.begin(), x.end());
  out.push_back(1.0);
  const double len = norm2(out);
  for (auto& v : out) {
    v /= len;
  }
  return out;
}

std::vector<double> AffineEmbedding::apply(std::span<const double> row) const {
  if (row.size() != center.size()) {
    throw InvalidArgument("AffineEmbedding: row has wrong dimension");
  }
  std::vector<double> out(row.size() + 1);
  for (std::size_t c = 0; c < row.size(); ++c) {
    out[c] = row[c] - center[c];
  }
  out.back() = scale;
  const double len = norm2(out);
  for (auto& v : out) {
    v /= len;
  }
  return out;
}

RowMatrix AffineEmbedding::apply(const RowMatrix& rows) const {
  RowMatrix out(rows.rows(), rows.cols() + 1);
  for (std::size_t i = 0; i < rows.rows(); ++i) {
    const auto mapped = apply(rows.row(i));
    std::copy(mapped.begin(), mapped.end(), out.row(i).begin());
  }
  return out;
}

AffineEmbedResult affine_sphere_embed(const RowMatrix& rows) {
  if (rows.rows() < 2) {
    throw InvalidArgument("affine_sphere_embed: need at least two rows");
  }
  const std::size_t cols = rows.cols();
  std::vector<double> lo(rows.row(0).begin(), rows.row(0).end());
  std::vector<double> hi = lo;
  for (std::size_t i = 1; i < rows.rows(); ++i) {
    const auto r = rows.row(i);
    for (std::size_t c = 0; c < cols; ++c) {
      lo[c] = std::min(lo[c], r[c]);
      hi[c] = std::max(hi[c], r[c]);
    }
  }
  AffineEmbedding map;
  map.center.resize(cols);
  for (std::size_t c = 0; c < cols; ++c) {
    map.center[c] = 0.5 * (hi[c] + lo[c]);
    map.scale = std::max(map.scale, hi[c] - lo[c]);
  }
  if (!(map.scale > 0.0)) {
    throw DegenerateData("affine_sphere_embed: all rows are identical (zero spread)");
  }
  return {map.apply(rows), std::move(map)};
}

double snr_db(std::span<const double> signal, std::span<const double> noise) {
  if (signal.size() != noise.size()) {
    throw InvalidArgument("snr_db: signal and noise lengths differ");
  }
  const double noise_norm = norm2(noise);
  if (noise_norm == 0.0) {
    return std::numeric_limits<double>::infinity();
  }
  return 20.0 * std::log10(norm2(signal) / noise_norm);
}

std::vector<PercentPoint> percent_point_curve(std::span<const double> errors) {
  if (errors.empty()) {
    throw InvalidArgument("percent_point_curve: no errors given");
  }
  std::vector<double> sorted(errors.begin(), errors.end());
  for (double e : sorted) {
    if (!(e > 0.0)) {
      throw InvalidArgument("percent_point_curve: errors must be positive");
    }
  }
  std::sort(sorted.begin(), sorted.end());
  const double count = static_cast<double>(sorted.size());
  std::vector<PercentPoint> curve(sorted.size());
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    curve[i] = {100.0 * static_cast<double>(i + 1) / count, std::log10(sorted[i])};
  }
  return curve;
}

double combined_error(std::span<const double> truth, std::span<const double> estimate) {
  if (truth.size() != estimate.size()) {
    throw InvalidArgument("combined_error: lengths differ");
  }
  double total = 0.0;
  for (std::size_t i = 0; i < truth.size(); ++i) {
    if (truth[i] == 0.0) {
      throw InvalidArgument("combined_error: true parameter " + std::to_string(i) + " is zero");
    }
    total += std::fabs(truth[i] - estimate[i]) / std::fabs(truth[i]);
  }
  return total;
}

}  // namespace loctrig
