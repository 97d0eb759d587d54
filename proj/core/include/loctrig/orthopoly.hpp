#pragma once

#include <span>
#include <vector>

namespace loctrig {

/// Surface volume of S^q, 2 pi^{(q+1)/2} / Gamma((q+1)/2). Defined for q >= 0.
double sphere_volume(int q);
/// omega_q / omega_{q-1}, the constant in front of the spherical kernel.
double sphere_volume_ratio(int q);

/// p_{q,n}(1) for the orthonormalized ultraspherical polynomials of dimension q.
double ultraspherical_at_one(int q, int n);
/// p_n^{(alpha,beta)}(1) for the orthonormalized Jacobi polynomials.
double jacobi_at_one(double alpha, double beta, int n);

/**
 * Recurrence in the shape consumed by clenshaw_eval:
 *
 *     p_k(x) = a_k x p_{k-1}(x) + b_k p_{k-2}(x),  k >= 1,  b_1 = 0,
 *
 * with p_0 a constant. a[0] and b[0] are unused placeholders so that the
 * vectors are indexed by k directly.
 */
struct ClenshawRecurrence {
  std::vector<double> a;
  std::vector<double> b;
  double p0 = 0.0;
};

/**
 * sum_{k=0}^{n-1} C_k p_k(x) by the backward Clenshaw recursion.
 * Requires a.size() == b.size() >= coeffs.size(); throws InvalidArgument
 * otherwise. An empty coefficient list sums to zero.
 */
double clenshaw_eval(std::span<const double> coeffs, std::span<const double> a,
                     std::span<const double> b, double p0, double x);
double clenshaw_eval(std::span<const double> coeffs, const ClenshawRecurrence& rec, double x);

/// Orthonormal ultraspherical polynomials p_{q,n} with respect to the weight
/// (1 - x^2)^{q/2 - 1} on [-1, 1].
class UltrasphericalSystem {
 public:
  explicit UltrasphericalSystem(int q);

  int dimension() const noexcept { return q_; }

  /// Coefficient of p_{q,n+1} in x p_{q,n} = A_n p_{q,n+1} + B_n p_{q,n-1}.
  double forward_coeff(int n) const;
  /// Coefficient of p_{q,n-1} in the same relation; B_0 = 0.
  double backward_coeff(int n) const;

  /// p_{q,0}(x) .. p_{q,n_max}(x).
  std::vector<double> values(int n_max, double x) const;
  /// Recurrence rewritten for clenshaw_eval, covering k = 1 .. terms - 1.
  ClenshawRecurrence clenshaw_form(int terms) const;

 private:
  int q_;
};

std::vector<double> ultraspherical_values(const UltrasphericalSystem& system, int n_max, double x);

/// Orthonormal Jacobi polynomials with respect to (1 - x)^alpha (1 + x)^beta
/// on [-1, 1]. Parameters are restricted to alpha, beta >= -1/2.
class JacobiSystem {
 public:
  JacobiSystem(double alpha, double beta);

  double alpha() const noexcept { return alpha_; }
  double beta() const noexcept { return beta_; }

  /// p_0, a constant: (2^{alpha+beta+1} B(alpha+1, beta+1))^{-1/2}.
  double p0() const noexcept { return p0_; }

  /// p_0(x) .. p_{n_max}(x) via the orthonormal three-term recurrence
  ///     x p_n = s_{n+1} p_{n+1} + d_n p_n + s_n p_{n-1}.
  std::vector<double> values(int n_max, double x) const;
  /// Same as values() but writes into a caller buffer of size n_max + 1.
  void values_into(double x, std::span<double> out) const;

  double diagonal(int n) const;     // d_n
  double off_diagonal(int n) const; // s_n, n >= 1

 private:
  double alpha_;
  double beta_;
  double p0_;
};

std::vector<double> jacobi_values(const JacobiSystem& system, int n_max, double x);

/**
 * Localized spherical kernel
 *
 *     Phi_{n,q}(t) = (omega_q / omega_{q-1}) sum_l h(l/n) p_{q,l}(1) p_{q,l}(t),
 *
 * evaluated with the Clenshaw recursion. Terms with l >= n vanish through
 * the filter and are not stored.
 */
class SphericalKernel {
 public:
  SphericalKernel(int degree, int q);

  int degree() const noexcept { return degree_; }
  int dimension() const noexcept { return q_; }
  std::span<const double> coefficients() const noexcept { return coeffs_; }
  const ClenshawRecurrence& recurrence() const noexcept { return rec_; }

  /// t is a dot product of unit vectors; values within 1e-12 outside
  /// [-1, 1] are clamped, anything further throws InvalidArgument.
  double operator()(double t) const;

 private:
  int degree_;
  int q_;
  std::vector<double> coeffs_;
  ClenshawRecurrence rec_;
};

double spherical_kernel_eval(const SphericalKernel& kernel, double t);

}  // namespace loctrig
