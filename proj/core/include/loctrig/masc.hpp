#pragma once

#include <cstdint>
#include <functional>
#include <limits>
#include <span>
#include <vector>

#include "loctrig/matrix.hpp"

namespace loctrig {

/// Label value for points MASC has not (yet) labeled.
inline constexpr int kNoLabel = std::numeric_limits<int>::min();

/**
 * Finite metric space with a dense, precomputed distance matrix whose
 * diameter is at most pi. Raw feature data is rescaled by pi / diameter;
 * points already on a sphere use the geodesic arccos(x . y).
 */
class MetricCloud {
 public:
  /// Euclidean distances rescaled so the diameter is exactly pi.
  static MetricCloud euclidean(const RowMatrix& features);
  /// Geodesic distances between unit vectors; diameter <= pi without rescaling.
  static MetricCloud spherical(const RowMatrix& unit_points);
  /// Arbitrary symmetric distances with zero diagonal (row-major, size x size);
  /// rescaled only if the diameter exceeds pi.
  static MetricCloud from_distances(std::size_t size, std::vector<double> distances);

  std::size_t size() const noexcept { return size_; }
  double operator()(std::size_t i, std::size_t j) const noexcept { return dist_[i * size_ + j]; }
  std::span<const double> row(std::size_t i) const noexcept { return {dist_.data() + i * size_, size_}; }
  /// Factor applied to the raw distances.
  double scale() const noexcept { return scale_; }
  double diameter() const noexcept { return diameter_; }

 private:
  MetricCloud(std::size_t size, std::vector<double> dist, double scale);

  std::size_t size_ = 0;
  std::vector<double> dist_;
  double scale_ = 1.0;
  double diameter_ = 0.0;
};

/// score_i = (1/M) sum_j Psi_n(rho(x_i, x_j)).
std::vector<double> support_scores(const MetricCloud& cloud, int degree);

/// Indices with score >= theta * max(score), ascending. theta in (0, 1].
std::vector<std::size_t> threshold_set(std::span<const double> scores, double theta);

/**
 * Connected components of the graph on `members` with an edge whenever
 * rho < eta, keeping components of size >= min_size. Members inside a
 * component are ascending; components are ordered by their smallest index.
 */
std::vector<std::vector<std::size_t>> components_at_eta(const MetricCloud& cloud,
                                                        std::span<const std::size_t> members,
                                                        double eta, std::size_t min_size);

/// Label oracle that counts how often it has been consulted.
class Oracle {
 public:
  explicit Oracle(std::function<int(std::size_t)> query) : query_(std::move(query)) {}

  int operator()(std::size_t index) {
    ++calls_;
    return query_(index);
  }
  std::size_t calls() const noexcept { return calls_; }

 private:
  std::function<int(std::size_t)> query_;
  std::size_t calls_ = 0;
};

struct MascConfig {
  int degree = 32;              // n
  double theta = 0.1;           // threshold parameter, (0, 1]
  double eta_start = 0.01;
  double eta_step = 0.01;
  double eta_max = std::numeric_limits<double>::infinity();  // last level; pi caps it anyway
  std::size_t min_component = 1;  // p
  std::size_t neighbors = 5;      // k-bar
  std::uint64_t seed = 0;         // echoed into reports; the algorithm is deterministic

  /// Throws InvalidArgument when a positivity constraint fails.
  void validate() const;
};

struct QueryRecord {
  double eta;
  std::size_t index;
  int label;
};

enum class ComponentAction {
  Queried,    // no queried point yet: queried its F_n maximizer and extended
  Extended,   // queried points agree: label extended
  Conflicted  // queried points disagree: nothing assigned at this level
};

struct ComponentRecord {
  std::vector<std::size_t> members;
  ComponentAction action;
  int label;  // kNoLabel when Conflicted
};

struct EtaLevel {
  double eta;
  std::size_t components;
  std::size_t queries;           // cumulative
  std::vector<ComponentRecord> detail;
  std::vector<int> labels_after; // main-state labels after this level (kNoLabel if absent)
  std::vector<int> snapshot;     // labels_after completed by k-NN, without mutating state
};

struct MascResult {
  std::vector<int> labels;           // final predictions, every point labeled
  std::vector<int> cautious_labels;  // before k-NN completion
  std::vector<QueryRecord> queries;
  std::vector<EtaLevel> history;
  std::vector<std::size_t> support;  // indices kept by the threshold set
  std::vector<double> scores;
};

/// Multiscale active classifier: prune to the threshold set, grow eta-graphs,
/// query component maximizers of F_n, extend labels cautiously, then finish
/// with a k-nearest-neighbor vote.
MascResult masc_run(const MetricCloud& cloud, Oracle& oracle, const MascConfig& cfg);

/**
 * Modal label among the k nearest labeled points of each unlabeled index.
 * Distance ties go to the smaller index; label ties to the smaller label.
 * Returns one label per entry of `unlabeled`.
 */
std::vector<int> knn_extend(const MetricCloud& cloud, std::span<const std::size_t> labeled,
                            std::span<const int> labels, std::span<const std::size_t> unlabeled,
                            std::size_t k);

/**
 * Size-weighted clustering F-score of a predicted partition against the
 * ground truth. Both partitions are given as one cluster id per point;
 * `weights` (optional) replaces cardinality by per-point mass.
 */
double f_score(std::span<const int> predicted, std::span<const int> truth,
               std::span<const double> weights = {});

/// Fraction of positions where the two label vectors agree.
double accuracy(std::span<const int> predicted, std::span<const int> truth);

}  // namespace loctrig
