#include "loctrig/masc.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <utility>

#include "loctrig/errors.hpp"
#include "loctrig/parallel.hpp"
#include "loctrig/trig_kernel.hpp"
#include "loctrig/union_find.hpp"

namespace loctrig {

using std::numbers::pi;

// --- metric cloud ---------------------------------------------------------

MetricCloud::MetricCloud(std::size_t size, std::vector<double> dist, double scale)
    : size_(size), dist_(std::move(dist)), scale_(scale) {
  for (double d : dist_) {
    diameter_ = std::max(diameter_, d);
  }
}

MetricCloud MetricCloud::euclidean(const RowMatrix& features) {
  const std::size_t m = features.rows();
  if (m == 0) {
    throw InvalidArgument("MetricCloud: empty point set");
  }
  std::vector<double> dist(m * m, 0.0);
  parallel_for(0, m, [&](std::size_t i) {
    const auto xi = features.row(i);
    for (std::size_t j = 0; j < m; ++j) {
      const auto xj = features.row(j);
      double acc = 0.0;
      for (std::size_t c = 0; c < xi.size(); ++c) {
        const double d = xi[c] - xj[c];
        acc += d * d;
      }
      dist[i * m + j] = std::sqrt(acc);
    }
  });
  const double diam = *std::max_element(dist.begin(), dist.end());
  const double scale = diam > 0.0 ? pi / diam : 1.0;
  for (auto& d : dist) {
    d *= scale;
  }
  return MetricCloud(m, std::move(dist), scale);
}

MetricCloud MetricCloud::spherical(const RowMatrix& unit_points) {
  const std::size_t m = unit_points.rows();
  if (m == 0) {
    throw InvalidArgument("MetricCloud: empty point set");
  }
  std::vector<double> dist(m * m, 0.0);
  parallel_for(0, m, [&](std::size_t i) {
    for (std::size_t j = 0; j < m; ++j) {
      dist[i * m + j] = i == j ? 0.0 : std::acos(std::clamp(dot(unit_points.row(i), unit_points.row(j)), -1.0, 1.0));
    }
  });
  return MetricCloud(m, std::move(dist), 1.0);
}

MetricCloud MetricCloud::from_distances(std::size_t size, std::vector<double> distances) {
  if (size == 0 || distances.size() != size * size) {
    throw InvalidArgument("MetricCloud::from_distances: need a non-empty size x size matrix");
  }
  double diam = 0.0;
  for (std::size_t i = 0; i < size; ++i) {
    if (distances[i * size + i] != 0.0) {
      throw InvalidArgument("MetricCloud::from_distances: nonzero diagonal");
    }
    for (std::size_t j = i + 1; j < size; ++j) {
      const double a = distances[i * size + j];
      if (a < 0.0 || a != distances[j * size + i]) {
        throw InvalidArgument("MetricCloud::from_distances: distances must be symmetric and nonnegative");
      }
      diam = std::max(diam, a);
    }
  }
  const double scale = diam > pi ? pi / diam : 1.0;
  if (scale != 1.0) {
    for (auto& d : distances) {
      d *= scale;
    }
  }
  return MetricCloud(size, std::move(distances), scale);
}

// --- support estimation ---------------------------------------------------

std::vector<double> support_scores(const MetricCloud& cloud, int degree) {
  const TrigKernel kernel(degree);
  const std::size_t m = cloud.size();
  std::vector<double> scores(m, 0.0);
  parallel_for(0, m, [&](std::size_t i) {
    const auto row = cloud.row(i);
    double acc = 0.0;
    for (std::size_t j = 0; j < m; ++j) {
      acc += kernel.psi(row[j]);
    }
    scores[i] = acc / static_cast<double>(m);
  });
  return scores;
}

std::vector<std::size_t> threshold_set(std::span<const double> scores, double theta) {
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw InvalidArgument("threshold_set: theta must lie in (0, 1]");
  }
  if (scores.empty()) {
    return {};
  }
  const double top = *std::max_element(scores.begin(), scores.end());
  const double cut = theta * top;
  std::vector<std::size_t> kept;
  for (std::size_t i = 0; i < scores.size(); ++i) {
    if (scores[i] >= cut) {
      kept.push_back(i);
    }
  }
  return kept;
}

std::vector<std::vector<std::size_t>> components_at_eta(const MetricCloud& cloud,
                                                        std::span<const std::size_t> members,
                                                        double eta, std::size_t min_size) {
  if (!(eta > 0.0)) {
    throw InvalidArgument("components_at_eta: eta must be positive");
  }
  const std::size_t count = members.size();
  UnionFind sets(count);
  for (std::size_t a = 0; a < count; ++a) {
    const auto row = cloud.row(members[a]);
    for (std::size_t b = a + 1; b < count; ++b) {
      if (row[members[b]] < eta) {
        sets.unite(a, b);
      }
    }
  }
  std::map<std::size_t, std::vector<std::size_t>> by_root;
  for (std::size_t a = 0; a < count; ++a) {
    by_root[sets.find(a)].push_back(members[a]);
  }
  std::vector<std::vector<std::size_t>> out;
  for (auto& [root, comp] : by_root) {
    if (comp.size() >= min_size) {
      std::sort(comp.begin(), comp.end());
      out.push_back(std::move(comp));
    }
  }
  std::sort(out.begin(), out.end(),
            [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

// --- k-NN completion ------------------------------------------------------

std::vector<int> knn_extend(const MetricCloud& cloud, std::span<const std::size_t> labeled,
                            std::span<const int> labels, std::span<const std::size_t> unlabeled,
                            std::size_t k) {
  if (labeled.size() != labels.size()) {
    throw InvalidArgument("knn_extend: labeled indices and labels differ in length");
  }
  if (labeled.empty()) {
    throw InvalidArgument("knn_extend: need at least one labeled point");
  }
  if (k == 0) {
    throw InvalidArgument("knn_extend: k must be >= 1");
  }
  const std::size_t take = std::min(k, labeled.size());
  std::vector<int> out(unlabeled.size(), kNoLabel);
  parallel_for(0, unlabeled.size(), [&](std::size_t u) {
    const auto row = cloud.row(unlabeled[u]);
    std::vector<std::pair<double, std::size_t>> cand(labeled.size());
    for (std::size_t i = 0; i < labeled.size(); ++i) {
      cand[i] = {row[labeled[i]], i};
    }
    std::partial_sort(cand.begin(), cand.begin() + static_cast<std::ptrdiff_t>(take), cand.end(),
                      [&](const auto& a, const auto& b) {
                        if (a.first != b.first) {
                          return a.first < b.first;
                        }
                        return labeled[a.second] < labeled[b.second];
                      });
    std::map<int, std::size_t> votes;  // ordered: ties resolve to the smallest label
    for (std::size_t i = 0; i < take; ++i) {
      ++votes[labels[cand[i].second]];
    }
    int best = kNoLabel;
    std::size_t best_count = 0;
    for (const auto& [label, c] : votes) {
      if (c > best_count) {
        best = label;
        best_count = c;
      }
    }
    out[u] = best;
  });
  return out;
}

namespace {

std::vector<int> complete_by_knn(const MetricCloud& cloud, const std::vector<int>& partial,
                                 std::size_t k) {
  std::vector<std::size_t> labeled;
  std::vector<int> labeled_values;
  std::vector<std::size_t> unlabeled;
  for (std::size_t i = 0; i < partial.size(); ++i) {
    if (partial[i] == kNoLabel) {
      unlabeled.push_back(i);
    } else {
      labeled.push_back(i);
      labeled_values.push_back(partial[i]);
    }
  }
  std::vector<int> out = partial;
  if (labeled.empty() || unlabeled.empty()) {
    return out;
  }
  const auto filled = knn_extend(cloud, labeled, labeled_values, unlabeled, k);
  for (std::size_t u = 0; u < unlabeled.size(); ++u) {
    out[unlabeled[u]] = filled[u];
  }
  return out;
}

std::size_t argmax_in(std::span<const std::size_t> indices, std::span<const double> scores) {
  std::size_t best = indices.front();
  for (std::size_t i : indices) {
    // strict: ties keep the smaller index (indices are ascending)
    if (scores[i] > scores[best]) {
      best = i;
    }
  }
  return best;
}

}  // namespace

// --- MASC -----------------------------------------------------------------

void MascConfig::validate() const {
  if (degree < 1) {
    throw InvalidArgument("MascConfig: degree must be >= 1");
  }
  if (!(theta > 0.0 && theta <= 1.0)) {
    throw InvalidArgument("MascConfig: theta must lie in (0, 1]");
  }
  if (!(eta_start > 0.0) || !(eta_step > 0.0)) {
    throw InvalidArgument("MascConfig: eta_start and eta_step must be positive");
  }
  if (min_component < 1 || neighbors < 1) {
    throw InvalidArgument("MascConfig: min_component and neighbors must be >= 1");
  }
}

MascResult masc_run(const MetricCloud& cloud, Oracle& oracle, const MascConfig& cfg) {
  cfg.validate();
  const std::size_t m = cloud.size();
  MascResult result;
  result.scores = support_scores(cloud, cfg.degree);
  result.support = threshold_set(result.scores, cfg.theta);

  std::vector<int> labels(m, kNoLabel);
  std::vector<int> queried(m, kNoLabel);  // oracle answer for queried points

  // Floating slack so that eta_start + k * eta_step lands on eta_max.
  const double eta_limit = cfg.eta_max + 1e-9 * cfg.eta_step;
  for (std::size_t level = 0;; ++level) {
    const double eta = cfg.eta_start + static_cast<double>(level) * cfg.eta_step;
    if (eta > eta_limit) {
      break;
    }
    auto comps = components_at_eta(cloud, result.support, eta, cfg.min_component);
    const bool connected = std::any_of(comps.begin(), comps.end(), [&](const auto& c) {
      return c.size() == result.support.size();
    });

    EtaLevel record{eta, comps.size(), 0, {}, {}, {}};
    for (auto& comp : comps) {
      int agreed = kNoLabel;
      bool any_queried = false;
      bool conflict = false;
      for (std::size_t i : comp) {
        if (queried[i] == kNoLabel) {
          continue;
        }
        if (!any_queried) {
          agreed = queried[i];
          any_queried = true;
        } else if (queried[i] != agreed) {
          conflict = true;
        }
      }
      ComponentAction action = ComponentAction::Extended;
      if (!any_queried) {
        const std::size_t pick = argmax_in(comp, result.scores);
        agreed = oracle(pick);
        queried[pick] = agreed;
        result.queries.push_back({eta, pick, agreed});
        action = ComponentAction::Queried;
      } else if (conflict) {
        action = ComponentAction::Conflicted;
        agreed = kNoLabel;
      }
      if (action != ComponentAction::Conflicted) {
        for (std::size_t i : comp) {
          labels[i] = agreed;
        }
      }
      record.detail.push_back({std::move(comp), action, agreed});
    }
    record.queries = result.queries.size();
    record.labels_after = labels;
    record.snapshot = complete_by_knn(cloud, labels, cfg.neighbors);
    result.history.push_back(std::move(record));

    if (connected || eta > cloud.diameter()) {
      break;
    }
  }

  if (std::none_of(labels.begin(), labels.end(), [](int l) { return l != kNoLabel; })) {
    // No component ever reached the size floor: fall back to the global
    // F_n maximizer so the k-NN stage has something to vote with.
    const auto& pool = result.support;
    const std::size_t pick = argmax_in(pool, result.scores);
    const int label = queried[pick] != kNoLabel ? queried[pick] : oracle(pick);
    if (queried[pick] == kNoLabel) {
      queried[pick] = label;
      const double eta = result.history.empty() ? cfg.eta_start : result.history.back().eta;
      result.queries.push_back({eta, pick, label});
    }
    labels[pick] = label;
  }

  result.cautious_labels = labels;
  result.labels = complete_by_knn(cloud, labels, cfg.neighbors);
  return result;
}

// --- scoring --------------------------------------------------------------

double f_score(std::span<const int> predicted, std::span<const int> truth,
               std::span<const double> weights) {
  if (predicted.empty() || predicted.size() != truth.size()) {
    throw InvalidArgument("f_score: partitions must be non-empty and of equal length");
  }
  if (!weights.empty() && weights.size() != predicted.size()) {
    throw InvalidArgument("f_score: weights length mismatch");
  }
  auto w = [&](std::size_t i) { return weights.empty() ? 1.0 : weights[i]; };
  std::map<int, double> pred_mass;
  std::map<int, double> true_mass;
  std::map<std::pair<int, int>, double> overlap;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    pred_mass[predicted[i]] += w(i);
    true_mass[truth[i]] += w(i);
    overlap[{predicted[i], truth[i]}] += w(i);
  }
  double total = 0.0;
  double weighted = 0.0;
  for (const auto& [cluster, mass] : pred_mass) {
    double best = 0.0;
    for (const auto& [label, lmass] : true_mass) {
      const auto it = overlap.find({cluster, label});
      if (it == overlap.end()) {
        continue;
      }
      best = std::max(best, 2.0 * it->second / (mass + lmass));
    }
    weighted += mass * best;
    total += mass;
  }
  if (!(total > 0.0)) {
    throw InvalidArgument("f_score: total cluster mass is zero");
  }
  return weighted / total;
}

double accuracy(std::span<const int> predicted, std::span<const int> truth) {
  if (predicted.size() != truth.size() || predicted.empty()) {
    throw InvalidArgument("accuracy: label vectors must be non-empty and of equal length");
  }
  std::size_t hits = 0;
  for (std::size_t i = 0; i < predicted.size(); ++i) {
    hits += predicted[i] == truth[i] ? 1 : 0;
  }
  return static_cast<double>(hits) / static_cast<double>(predicted.size());
}

}  // namespace loctrig
