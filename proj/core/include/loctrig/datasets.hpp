#pragma once

#include <cstdint>
#include <filesystem>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "loctrig/matrix.hpp"
#include "loctrig/rng.hpp"

namespace loctrig {

struct LabeledDataset {
  RowMatrix features;
  std::vector<int> labels;
};

/// Circle of radius `circle_radius` and a concentric ellipse with the given
/// semi-minor axis and eccentricity. With equal radius and semi-minor axis the
/// circle touches the ellipse at the ends of its minor axis.
struct CircleEllipseShape {
  double circle_radius = 1.0;
  double semi_minor = 1.0;
  double eccentricity = 0.79;
};

/// Class 0 on the circle, class 1 on the ellipse, both arclength-uniform, with
/// N(0, noise_sd^2) added to each coordinate.
LabeledDataset gen_circle_ellipse(std::uint64_t seed, std::size_t n_per_class, double noise_sd,
                                  const CircleEllipseShape& shape = {});

/// Interleaved half circles: (cos t, sin t) and (1 - cos t, 1/2 - sin t).
LabeledDataset gen_two_moons(std::uint64_t seed, std::size_t n_per_moon, double noise_sd);

/// Two disjoint arcs of the unit circle (labels 0 and 1) plus uniform
/// background on [-1.5, 1.5]^2 (label 2).
struct ArcsWithBackground {
  LabeledDataset data;
  std::vector<char> on_support;
};
ArcsWithBackground gen_two_arcs(std::uint64_t seed, std::size_t n_per_arc,
                                double background_fraction);

/// Arclength-uniform parameters t in [0, 2 pi) for the ellipse (a cos t, b sin t).
std::vector<double> ellipse_arclength_parameters(std::mt19937_64& rng, double a, double b,
                                                 std::size_t count);

/// Noise vector with ||signal|| / ||noise|| = 10^(snr/20) exactly; zeros for
/// snr = +inf or a zero signal.
std::vector<double> noise_at_snr(std::mt19937_64& rng, std::span<const double> signal,
                                 double snr_db);

/// Raw generator output: features before the sphere map, one row per sample,
/// and targets (noisy responses or true parameters).
struct RegressionData {
  RowMatrix raw;
  RowMatrix targets;
  std::vector<double> achieved_snr_db;  // one entry per noise vector
};

// Piecewise smooth target on the planar ellipse E(theta) = (3 cos, 6 sin).
double ellipse_target(double theta) noexcept;
std::vector<double> ellipse_plane_point(double theta);
double ellipse_theta(std::span<const double> plane_point) noexcept;
/// P(E(theta)) on S^2 via inverse stereographic projection.
std::vector<double> ellipse_sphere_point(double theta);
/// Limit of the density estimate for uniform theta: 1 / |d/dtheta P(E(theta))|.
double ellipse_exact_density(double theta) noexcept;
/// theta uniform on (-pi, pi]; raw = plane points, targets = f + noise at the
/// SNR over the whole target vector (test split is always noiseless).
RegressionData gen_ellipse(std::uint64_t seed, std::size_t count, double snr_db, Split split);
RowMatrix ellipse_embed(const RowMatrix& raw);

struct BiexpTransform {
  double scale = 1000.0;
  std::vector<double> offset{380.0, 189.0, 116.0};
  double lift = 100.0;
};

/// (f(1), ..., f(length)) with f(j) = .7 exp(-l1 j) + .3 exp(-l2 j).
std::vector<double> biexp_signal(double lambda1, double lambda2, std::size_t length = 100);
/// (l1, l2) uniform on [.1, .7] x [1.1, 1.7]; raw = noisy signal, per-sample SNR.
RegressionData gen_biexp(std::uint64_t seed, std::size_t count, double snr_db, Split split);
/// y = P(T(raw)): scale, subtract offset, append lift, normalize.
RowMatrix biexp_embed(const RowMatrix& raw, const BiexpTransform& transform = {});

/// Closed-form solution of -(e^{-st} y')' = p e^{-st}, y(0) = 1, y(1) = 0.
double darcy_solution(double p, double s, double t) noexcept;
/// 100 uniform time points on [0, 1] drawn from the design stream.
std::vector<double> darcy_design(std::uint64_t seed, std::size_t count = 100);
/// (p, s) uniform on [.1, .25] x [1.5, 2.5]; raw = noisy y(t_i), per-sample SNR.
RegressionData gen_darcy(std::uint64_t seed, std::size_t count, double snr_db, Split split,
                         std::span<const double> times);

struct CsvTable {
  std::vector<std::string> header;
  RowMatrix values;
};

/// Header row then numeric rows. Numbers are written in shortest round-trip
/// form, so write/read is exact.
CsvTable read_csv(const std::filesystem::path& path);
void write_csv(const std::filesystem::path& path, const CsvTable& table);

/// Features then the label column.
CsvTable to_table(const LabeledDataset& data);
LabeledDataset labeled_from_table(const CsvTable& table);
/// raw feature columns then target columns.
CsvTable to_table(const RegressionData& data);
RegressionData regression_from_table(const CsvTable& table, std::size_t feature_columns);

}  // namespace loctrig
