#pragma once

#include <span>
#include <vector>

#include "loctrig/matrix.hpp"
#include "loctrig/orthopoly.hpp"

namespace loctrig {

/**
 * Jacobi data space on [0, pi] with the trigonometric Jacobi functions
 *
 *     phi_n(theta) = (1 - cos theta)^{alpha/2 + 1/4} (1 + cos theta)^{beta/2 + 1/4}
 *                    p_n^{(alpha,beta)}(cos theta),
 *
 * orthonormal with respect to d theta, and eigenvalues
 * lambda_n = n + (alpha + beta + 1) / 2.
 */
class JacobiDataSpace {
 public:
  JacobiDataSpace(double alpha, double beta);

  double alpha() const noexcept { return poly_.alpha(); }
  double beta() const noexcept { return poly_.beta(); }
  double eigenvalue(int n) const noexcept { return n + 0.5 * (alpha() + beta() + 1.0); }

  /// phi_0(theta) .. phi_{count-1}(theta) written into `out` (size count).
  void functions_into(double theta, std::span<double> out) const;
  std::vector<double> functions(double theta, int count) const;

 private:
  JacobiSystem poly_;
};

/// Composite trapezoid nodes i * pi / intervals, i = 0 .. intervals.
std::vector<double> trapezoid_grid(std::size_t intervals);

/// c_k = int_0^pi f(theta) phi_k(theta) d theta by the trapezoid rule, with f
/// sampled on trapezoid_grid(f_samples.size() - 1).
std::vector<double> jacobi_coefficients(const JacobiDataSpace& space,
                                        std::span<const double> f_samples, int count);

struct ConnectionOptions {
  std::size_t start_intervals = 2048;
  std::size_t max_intervals = 32768;
  double tolerance = 1e-8;
};

/// A_{m,k} = int_0^pi phi^{(1)}_m phi^{(2)}_k Omega d theta,
/// Omega = (1 - cos)^a (1 + cos)^b, refined by node doubling.
struct ConnectionMatrix {
  RowMatrix values;           // size x size
  std::size_t intervals = 0;  // trapezoid intervals of the accepted estimate
  double last_change = 0.0;   // max entrywise change at acceptance
};

/// Throws InvalidArgument unless a = |alpha1 - alpha2| / 2 and
/// b = |beta1 - beta2| / 2 are integers; NumericError if refinement stalls.
ConnectionMatrix connection_matrix(const JacobiDataSpace& first, const JacobiDataSpace& second,
                                   int size, const ConnectionOptions& options = {});

/// Expansion sum_m c_m phi^{(space)}_m(theta).
struct JacobiSeries {
  JacobiDataSpace space;
  std::vector<double> coeffs;

  double operator()(double theta) const;
};

/**
 * Joint data space of two Jacobi spaces sharing [0, pi]. Connection
 * coefficients are computed once at construction for indices < size.
 * Joint eigenvalues are l_{m,k} = sqrt(lambda1_m^2 + lambda2_k^2).
 */
class JointJacobiSpace {
 public:
  JointJacobiSpace(JacobiDataSpace first, JacobiDataSpace second, int size,
                   const ConnectionOptions& options = {});

  const JacobiDataSpace& first() const noexcept { return first_; }
  const JacobiDataSpace& second() const noexcept { return second_; }
  int size() const noexcept { return size_; }
  int a() const noexcept { return a_; }
  int b() const noexcept { return b_; }
  /// 2a + 2b: A_{m,k} vanishes for |m - k| above this.
  int bandwidth() const noexcept { return 2 * a_ + 2 * b_; }
  const ConnectionMatrix& connection() const noexcept { return connection_; }
  double joint_eigenvalue(int m, int k) const noexcept;
  double omega(double theta) const noexcept;

  /// Throws InvalidArgument if some pair with l_{m,k} < degree falls
  /// outside the precomputed matrix.
  void check_degree(double degree) const;

  /// sum h(l_{m,k}/n) A_{m,k} phi1_m(theta1) phi2_k(theta2).
  double kernel(double degree, double theta1, double theta2) const;

  /// sigma_n(f) as a series in the first space, from samples of f on a
  /// trapezoid grid of [0, pi].
  JacobiSeries lift_series(std::span<const double> f_samples, double degree) const;

  /**
   * Smallest c with {(i,j): A_ij != 0, lambda2_j < n0} contained in
   * {(i,j): l_ij <= c n0, lambda1_i < c n0}; entries below
   * tolerance * max|A| count as zero.
   */
  double inclusion_constant(double n0, double tolerance = 1e-8) const;
  /// Degree factor beyond which sigma_m(P) no longer changes for P of degree
  /// < n0: every contributing pair sits on the filter plateau, so this is
  /// twice the inclusion constant.
  double preservation_constant(double n0, double tolerance = 1e-8) const;

 private:
  JacobiDataSpace first_;
  JacobiDataSpace second_;
  int size_;
  int a_;
  int b_;
  ConnectionMatrix connection_;
};

double joint_kernel(const JointJacobiSpace& space, double degree, double theta1, double theta2);
double lift(const JointJacobiSpace& space, std::span<const double> f_samples, double degree,
            double theta1);

/// Single-space smoothing sigma_n(f) = sum_k h(lambda_k / n) c_k phi_k, with
/// `count` terms available.
JacobiSeries smooth_series(const JacobiDataSpace& space, std::span<const double> f_samples,
                           double degree, int count);

}  // namespace loctrig
