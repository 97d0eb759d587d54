#include "loctrig/transfer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "loctrig/errors.hpp"
#include "loctrig/filter.hpp"
#include "loctrig/parallel.hpp"

namespace loctrig {

using std::numbers::pi;

JacobiDataSpace::JacobiDataSpace(double alpha, double beta) : poly_(alpha, beta) {}

void JacobiDataSpace::functions_into(double theta, std::span<double> out) const {
  if (out.empty()) {
    return;
  }
  // 1 - cos = 2 sin^2(theta/2), 1 + cos = 2 cos^2(theta/2), exact near the ends.
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  const double weight = std::pow(2.0 * s * s, 0.5 * alpha() + 0.25) *
                        std::pow(2.0 * c * c, 0.5 * beta() + 0.25);
  poly_.values_into(std::cos(theta), out);
  for (auto& v : out) {
    v *= weight;
  }
}

std::vector<double> JacobiDataSpace::functions(double theta, int count) const {
  if (count < 0) {
    throw InvalidArgument("JacobiDataSpace::functions: count must be >= 0");
  }
  std::vector<double> out(static_cast<std::size_t>(count));
  functions_into(theta, out);
  return out;
}

std::vector<double> trapezoid_grid(std::size_t intervals) {
  if (intervals == 0) {
    throw InvalidArgument("trapezoid_grid: need at least one interval");
  }
  std::vector<double> grid(intervals + 1);
  for (std::size_t i = 0; i <= intervals; ++i) {
    grid[i] = pi * static_cast<double>(i) / static_cast<double>(intervals);
  }
  return grid;
}

namespace {

double trapezoid_weight(std::size_t i, std::size_t intervals) {
  const double h = pi / static_cast<double>(intervals);
  return (i == 0 || i == intervals) ? 0.5 * h : h;
}

// (intervals + 1) x count table of phi_k at the trapezoid nodes.
RowMatrix function_table(const JacobiDataSpace& space, std::size_t intervals, int count) {
  RowMatrix table(intervals + 1, static_cast<std::size_t>(count));
  const auto grid = trapezoid_grid(intervals);
  parallel_for(0, grid.size(), [&](std::size_t i) { space.functions_into(grid[i], table.row(i)); });
  return table;
}

int integer_half_gap(double lhs, double rhs, const char* name) {
  const double half = 0.5 * std::fabs(lhs - rhs);
  const double rounded = std::round(half);
  if (std::fabs(half - rounded) > 1e-12) {
    throw InvalidArgument(std::string("Jacobi joint space: ") + name +
                          " = |difference| / 2 must be an integer, got " + std::to_string(half));
  }
  return static_cast<int>(rounded);
}

double omega_value(int a, int b, double theta) {
  const double s = std::sin(0.5 * theta);
  const double c = std::cos(0.5 * theta);
  return std::pow(2.0 * s * s, a) * std::pow(2.0 * c * c, b);
}

RowMatrix connection_estimate(const JacobiDataSpace& first, const JacobiDataSpace& second,
                              int a, int b, int size, std::size_t intervals) {
  const auto t1 = function_table(first, intervals, size);
  const auto t2 = function_table(second, intervals, size);
  const auto grid = trapezoid_grid(intervals);
  std::vector<double> w(grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i) {
    w[i] = trapezoid_weight(i, intervals) * omega_value(a, b, grid[i]);
  }
  const auto n = static_cast<std::size_t>(size);
  RowMatrix out(n, n);
  parallel_for(0, n, [&](std::size_t m) {
    auto row = out.row(m);
    for (std::size_t i = 0; i < grid.size(); ++i) {
      const double left = w[i] * t1(i, m);
      if (left == 0.0) {
        continue;
      }
      const auto r2 = t2.row(i);
      for (std::size_t k = 0; k < n; ++k) {
        row[k] += left * r2[k];
      }
    }
  });
  return out;
}

}  // namespace

std::vector<double> jacobi_coefficients(const JacobiDataSpace& space,
                                        std::span<const double> f_samples, int count) {
  if (f_samples.size() < 2) {
    throw InvalidArgument("jacobi_coefficients: need at least two samples");
  }
  if (count < 0) {
    throw InvalidArgument("jacobi_coefficients: count must be >= 0");
  }
  const std::size_t intervals = f_samples.size() - 1;
  const auto grid = trapezoid_grid(intervals);
  std::vector<double> coeffs(static_cast<std::size_t>(count), 0.0);
  std::vector<double> phi(static_cast<std::size_t>(count));
  for (std::size_t i = 0; i <= intervals; ++i) {
    const double fw = f_samples[i] * trapezoid_weight(i, intervals);
    if (fw == 0.0) {
      continue;
    }
    space.functions_into(grid[i], phi);
    for (std::size_t k = 0; k < coeffs.size(); ++k) {
      coeffs[k] += fw * phi[k];
    }
  }
  return coeffs;
}

ConnectionMatrix connection_matrix(const JacobiDataSpace& first, const JacobiDataSpace& second,
                                   int size, const ConnectionOptions& options) {
  const int a = integer_half_gap(first.alpha(), second.alpha(), "a");
  const int b = integer_half_gap(first.beta(), second.beta(), "b");
  if (size < 1) {
    throw InvalidArgument("connection_matrix: size must be >= 1");
  }
  if (options.start_intervals < 1 || options.max_intervals < options.start_intervals) {
    throw InvalidArgument("connection_matrix: bad refinement range");
  }
  std::size_t intervals = options.start_intervals;
  RowMatrix coarse = connection_estimate(first, second, a, b, size, intervals);
  double change = 0.0;
  while (intervals * 2 <= options.max_intervals) {
    intervals *= 2;
    RowMatrix fine = connection_estimate(first, second, a, b, size, intervals);
    change = 0.0;
    for (std::size_t i = 0; i < fine.data().size(); ++i) {
      change = std::max(change, std::fabs(fine.data()[i] - coarse.data()[i]));
    }
    if (change < options.tolerance) {
      return {std::move(fine), intervals, change};
    }
    coarse = std::move(fine);
  }
  throw NumericError("connection_matrix: no convergence up to " +
                     std::to_string(options.max_intervals) + " intervals (last change " +
                     std::to_string(change) + ")");
}

double JacobiSeries::operator()(double theta) const {
  std::vector<double> phi(coeffs.size());
  space.functions_into(theta, phi);
  double acc = 0.0;
  for (std::size_t m = 0; m < coeffs.size(); ++m) {
    acc += coeffs[m] * phi[m];
  }
  return acc;
}

JointJacobiSpace::JointJacobiSpace(JacobiDataSpace first, JacobiDataSpace second, int size,
                                   const ConnectionOptions& options)
    : first_(first),
      second_(second),
      size_(size),
      a_(integer_half_gap(first.alpha(), second.alpha(), "a")),
      b_(integer_half_gap(first.beta(), second.beta(), "b")),
      connection_(connection_matrix(first, second, size, options)) {}

double JointJacobiSpace::joint_eigenvalue(int m, int k) const noexcept {
  return std::hypot(first_.eigenvalue(m), second_.eigenvalue(k));
}

double JointJacobiSpace::omega(double theta) const noexcept { return omega_value(a_, b_, theta); }

void JointJacobiSpace::check_degree(double degree) const {
  if (!(degree > 0.0)) {
    throw InvalidArgument("joint space: degree must be positive");
  }
  if (first_.eigenvalue(size_) < degree || second_.eigenvalue(size_) < degree) {
    throw InvalidArgument("joint space: degree " + std::to_string(degree) +
                          " needs more than the " + std::to_string(size_) +
                          " precomputed connection coefficients");
  }
}

double JointJacobiSpace::kernel(double degree, double theta1, double theta2) const {
  check_degree(degree);
  const Filter h;
  const auto phi1 = first_.functions(theta1, size_);
  const auto phi2 = second_.functions(theta2, size_);
  const auto& A = connection_.values;
  const int band = bandwidth();
  double acc = 0.0;
  for (int m = 0; m < size_ && first_.eigenvalue(m) < degree; ++m) {
    for (int k = std::max(0, m - band); k <= std::min(size_ - 1, m + band); ++k) {
      const double l = joint_eigenvalue(m, k);
      if (l >= degree) {
        continue;
      }
      acc += h(l / degree) * A(m, k) * phi1[m] * phi2[k];
    }
  }
  return acc;
}

JacobiSeries JointJacobiSpace::lift_series(std::span<const double> f_samples, double degree) const {
  check_degree(degree);
  const Filter h;
  const auto fhat = jacobi_coefficients(second_, f_samples, size_);
  const auto& A = connection_.values;
  const int band = bandwidth();
  JacobiSeries out{first_, std::vector<double>(static_cast<std::size_t>(size_), 0.0)};
  for (int m = 0; m < size_ && first_.eigenvalue(m) < degree; ++m) {
    double acc = 0.0;
    for (int k = std::max(0, m - band); k <= std::min(size_ - 1, m + band); ++k) {
      const double l = joint_eigenvalue(m, k);
      if (l >= degree) {
        continue;
      }
      acc += h(l / degree) * A(m, k) * fhat[k];
    }
    out.coeffs[m] = acc;
  }
  return out;
}

double JointJacobiSpace::inclusion_constant(double n0, double tolerance) const {
  if (!(n0 > 0.0)) {
    throw InvalidArgument("inclusion_constant: n0 must be positive");
  }
  const auto& A = connection_.values;
  double top = 0.0;
  for (double v : A.data()) {
    top = std::max(top, std::fabs(v));
  }
  const double cut = tolerance * top;
  double worst = 0.0;
  for (int k = 0; second_.eigenvalue(k) < n0; ++k) {
    if (k + bandwidth() >= size_) {
      throw InvalidArgument("inclusion_constant: connection matrix too small for n0 = " +
                            std::to_string(n0));
    }
    for (int m = 0; m < size_; ++m) {
      if (std::fabs(A(m, k)) <= cut) {
        continue;
      }
      // lambda1 < c n0 is strict; l_{m,k} >= lambda1_m covers it except when
      // lambda2_k = 0, so nudge by one ulp-scale step.
      const double need = std::max(joint_eigenvalue(m, k), std::nextafter(first_.eigenvalue(m), 1e300));
      worst = std::max(worst, need / n0);
    }
  }
  return worst;
}

double JointJacobiSpace::preservation_constant(double n0, double tolerance) const {
  return 2.0 * inclusion_constant(n0, tolerance);
}

double joint_kernel(const JointJacobiSpace& space, double degree, double theta1, double theta2) {
  return space.kernel(degree, theta1, theta2);
}

double lift(const JointJacobiSpace& space, std::span<const double> f_samples, double degree,
            double theta1) {
  return space.lift_series(f_samples, degree)(theta1);
}

JacobiSeries smooth_series(const JacobiDataSpace& space, std::span<const double> f_samples,
                           double degree, int count) {
  if (!(degree > 0.0)) {
    throw InvalidArgument("smooth_series: degree must be positive");
  }
  if (space.eigenvalue(count) < degree) {
    throw InvalidArgument("smooth_series: too few terms for degree " + std::to_string(degree));
  }
  const Filter h;
  auto coeffs = jacobi_coefficients(space, f_samples, count);
  for (int k = 0; k < count; ++k) {
    coeffs[k] *= h(space.eigenvalue(k) / degree);
  }
  return {space, std::move(coeffs)};
}

}  // namespace loctrig
