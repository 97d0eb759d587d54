#pragma once

#include <span>
#include <vector>

#include "loctrig/matrix.hpp"
#include "loctrig/orthopoly.hpp"

namespace loctrig {

/// Training samples y_j on S^Q (rows of `points`) with targets z_j (rows of
/// `targets`). Construction checks unit norms to 1e-10 and matching row counts.
class SphericalDataset {
 public:
  SphericalDataset(RowMatrix points, RowMatrix targets);
  /// Points only; targets default to a single column of ones.
  explicit SphericalDataset(RowMatrix points);

  std::size_t size() const noexcept { return points_.rows(); }
  std::size_t ambient_dim() const noexcept { return points_.cols(); }
  std::size_t target_dim() const noexcept { return targets_.cols(); }
  const RowMatrix& points() const noexcept { return points_; }
  const RowMatrix& targets() const noexcept { return targets_; }

 private:
  RowMatrix points_;
  RowMatrix targets_;
};

struct EstimatorConfig {
  int degree = 32;        // n
  int q = 1;              // manifold-dimension hyperparameter
  bool normalize = true;  // divide by the density estimate
};

/**
 * Training-free estimator
 *
 *     F_n(x) = (1/M) sum_j z_j Phi_{n,q}(x . y_j),
 *
 * optionally divided by the density estimate (1/M) sum_j Phi_{n,q}(x . y_j).
 * Holds the kernel so repeated queries do not rebuild it.
 */
class ManifoldEstimator {
 public:
  ManifoldEstimator(SphericalDataset data, EstimatorConfig cfg);

  const SphericalDataset& data() const noexcept { return data_; }

  const EstimatorConfig& config() const noexcept { return cfg_; }
  const SphericalKernel& kernel() const noexcept { return kernel_; }

  /// Throws UndefinedPoint when normalizing and the density estimate at x is <= 0.
  std::vector<double> estimate(std::span<const double> x) const;
  double density(std::span<const double> x) const;

  struct Batch {
    RowMatrix values;          // one row per probe; meaningless where !defined
    std::vector<char> defined; // 0 where the normalized form is undefined
    std::vector<double> density;
  };
  /// Evaluates every probe row in parallel. Undefined probes are flagged
  /// instead of throwing.
  Batch estimate_batch(const RowMatrix& probes) const;

 private:
  void accumulate(std::span<const double> x, std::span<double> numer, double& denom) const;

  SphericalDataset data_;
  EstimatorConfig cfg_;
  SphericalKernel kernel_;
};

std::vector<double> f_n_estimate(const SphericalDataset& data, const EstimatorConfig& cfg,
                                 std::span<const double> x);
double density_estimate(const SphericalDataset& data, const EstimatorConfig& cfg,
                        std::span<const double> x);

/// (x, 1) / ||(x, 1)||.
std::vector<double> inverse_stereographic(std::span<const double> x);

/// Center-and-spread embedding onto the sphere: row -> (row - C, r) / ||(row - C, r)||.
struct AffineEmbedding {
  std::vector<double> center;
  double scale = 0.0;

  std::vector<double> apply(std::span<const double> row) const;
  RowMatrix apply(const RowMatrix& rows) const;
};

struct AffineEmbedResult {
  RowMatrix embedded;
  AffineEmbedding map;
};

/// C = (max + min) / 2 per column, r = max over columns of (max - min).
/// Throws DegenerateData when r == 0 and InvalidArgument for fewer than 2 rows.
AffineEmbedResult affine_sphere_embed(const RowMatrix& rows);

/// 20 log10(||signal|| / ||noise||); +infinity for a zero noise vector.
double snr_db(std::span<const double> signal, std::span<const double> noise);

struct PercentPoint {
  double percent;
  double log10_error;
};

/// Sorted (percent, log10 error) pairs: x% of errors are <= 10^y.
std::vector<PercentPoint> percent_point_curve(std::span<const double> errors);

/// sum_i |true_i - est_i| / |true_i|.
double combined_error(std::span<const double> truth, std::span<const double> estimate);

}  // namespace loctrig
