#include "loctrig/orthopoly.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "loctrig/errors.hpp"
#include "loctrig/filter.hpp"

namespace loctrig {

using std::numbers::pi;

double sphere_volume(int q) {
  if (q < 0) {
    throw InvalidArgument("sphere_volume: q must be >= 0");
  }
  const double half = 0.5 * (q + 1);
  return 2.0 * std::pow(pi, half) / std::tgamma(half);
}

double sphere_volume_ratio(int q) {
  if (q < 1) {
    throw InvalidArgument("sphere_volume_ratio: q must be >= 1");
  }
  // omega_q / omega_{q-1} = sqrt(pi) Gamma(q/2) / Gamma((q+1)/2); q = 1 gives pi.
  return std::sqrt(pi) * std::exp(std::lgamma(0.5 * q) - std::lgamma(0.5 * (q + 1)));
}

double ultraspherical_at_one(int q, int n) {
  if (q < 1 || n < 0) {
    throw InvalidArgument("ultraspherical_at_one: need q >= 1 and n >= 0");
  }
  // log of Gamma(n+q-1) (2n+q-1) / Gamma(n+1). At n = 0 the product
  // Gamma(q-1)(q-1) is Gamma(q), which also covers q = 1.
  double log_inner = 0.0;
  if (n == 0) {
    log_inner = std::lgamma(static_cast<double>(q));
  } else {
    log_inner = std::lgamma(static_cast<double>(n + q - 1)) + std::log(2.0 * n + q - 1) -
                std::lgamma(static_cast<double>(n + 1));
  }
  const double log_value = (0.5 - 0.5 * q) * std::numbers::ln2 - std::lgamma(0.5 * q) + 0.5 * log_inner;
  return std::exp(log_value);
}

double jacobi_at_one(double alpha, double beta, int n) {
  if (alpha < -0.5 || beta < -0.5 || n < 0) {
    throw InvalidArgument("jacobi_at_one: need alpha, beta >= -1/2 and n >= 0");
  }
  const double l = n;
  const double ab = alpha + beta;
  // (2l+a+b+1) Gamma(l+a+b+1) collapses to Gamma(a+b+2) at l = 0.
  double log_num = 0.0;
  if (n == 0) {
    log_num = std::lgamma(ab + 2.0);
  } else {
    log_num = std::log(2.0 * l + ab + 1.0) + std::lgamma(l + ab + 1.0);
  }
  const double log_norm = log_num - (ab + 1.0) * std::numbers::ln2 + std::lgamma(l + 1.0) -
                          std::lgamma(l + alpha + 1.0) - std::lgamma(l + beta + 1.0);
  const double log_tail = std::lgamma(l + alpha + 1.0) - std::lgamma(alpha + 1.0) - std::lgamma(l + 1.0);
  return std::exp(0.5 * log_norm + log_tail);
}

double clenshaw_eval(std::span<const double> coeffs, std::span<const double> a,
                     std::span<const double> b, double p0, double x) {
  const std::size_t n = coeffs.size();
  if (a.size() != b.size() || a.size() < n) {
    throw InvalidArgument("clenshaw_eval: recurrence arrays must have equal length >= " +
                          std::to_string(n));
  }
  if (n == 0) {
    return 0.0;
  }
  // y_k = C_k + a_{k+1} x y_{k+1} + b_{k+2} y_{k+2};  sum = y_0 p_0.
  double y1 = 0.0;  // y_{k+1}
  double y2 = 0.0;  // y_{k+2}
  for (std::size_t k = n; k-- > 0;) {
    const double ak1 = (k + 1 < n) ? a[k + 1] : 0.0;
    const double bk2 = (k + 2 < n) ? b[k + 2] : 0.0;
    const double y0 = coeffs[k] + ak1 * x * y1 + bk2 * y2;
    y2 = y1;
    y1 = y0;
  }
  return y1 * p0;
}

double clenshaw_eval(std::span<const double> coeffs, const ClenshawRecurrence& rec, double x) {
  return clenshaw_eval(coeffs, rec.a, rec.b, rec.p0, x);
}

// --- ultraspherical -------------------------------------------------------

UltrasphericalSystem::UltrasphericalSystem(int q) : q_(q) {
  if (q < 1) {
    throw InvalidArgument("UltrasphericalSystem: q must be >= 1, got " + std::to_string(q));
  }
}

double UltrasphericalSystem::forward_coeff(int n) const {
  if (n < 0) {
    throw InvalidArgument("forward_coeff: n must be >= 0");
  }
  if (q_ == 1 && n == 0) {
    return std::sqrt(0.5);  // removable 0/0, limit of (q-1)/((q-1)(q+1))
  }
  const double num = static_cast<double>(n + 1) * (n + q_ - 1);
  const double den = static_cast<double>(2 * n + q_ - 1) * (2 * n + q_ + 1);
  return std::sqrt(num / den);
}

double UltrasphericalSystem::backward_coeff(int n) const {
  if (n < 0) {
    throw InvalidArgument("backward_coeff: n must be >= 0");
  }
  if (n == 0) {
    return 0.0;
  }
  if (q_ == 1 && n == 1) {
    return std::sqrt(0.5);  // removable 0/0
  }
  const double num = static_cast<double>(n) * (n + q_ - 2);
  const double den = static_cast<double>(2 * n + q_ - 1) * (2 * n + q_ - 3);
  return std::sqrt(num / den);
}

std::vector<double> UltrasphericalSystem::values(int n_max, double x) const {
  if (n_max < 0) {
    throw InvalidArgument("ultraspherical_values: n_max must be >= 0");
  }
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  p[0] = ultraspherical_at_one(q_, 0);
  if (n_max >= 1) {
    p[1] = ultraspherical_at_one(q_, 1) * x;
  }
  for (int n = 1; n < n_max; ++n) {
    p[n + 1] = (x * p[n] - backward_coeff(n) * p[n - 1]) / forward_coeff(n);
  }
  return p;
}

ClenshawRecurrence UltrasphericalSystem::clenshaw_form(int terms) const {
  if (terms < 0) {
    throw InvalidArgument("clenshaw_form: terms must be >= 0");
  }
  ClenshawRecurrence rec;
  const std::size_t size = static_cast<std::size_t>(std::max(terms, 1));
  rec.a.assign(size, 0.0);
  rec.b.assign(size, 0.0);
  rec.p0 = ultraspherical_at_one(q_, 0);
  for (int k = 1; k < terms; ++k) {
    const double fwd = forward_coeff(k - 1);
    rec.a[k] = 1.0 / fwd;
    rec.b[k] = -backward_coeff(k - 1) / fwd;
  }
  return rec;
}

std::vector<double> ultraspherical_values(const UltrasphericalSystem& system, int n_max, double x) {
  return system.values(n_max, x);
}

// --- Jacobi ---------------------------------------------------------------

JacobiSystem::JacobiSystem(double alpha, double beta) : alpha_(alpha), beta_(beta) {
  if (!(alpha >= -0.5) || !(beta >= -0.5)) {
    throw InvalidArgument("JacobiSystem: alpha and beta must be >= -1/2");
  }
  const double ab = alpha + beta;
  const double log_mass = (ab + 1.0) * std::numbers::ln2 + std::lgamma(alpha + 1.0) +
                          std::lgamma(beta + 1.0) - std::lgamma(ab + 2.0);
  p0_ = std::exp(-0.5 * log_mass);
}

double JacobiSystem::diagonal(int n) const {
  const double ab = alpha_ + beta_;
  if (n == 0) {
    return (beta_ - alpha_) / (ab + 2.0);
  }
  const double s = 2.0 * n + ab;
  return (beta_ * beta_ - alpha_ * alpha_) / (s * (s + 2.0));
}

double JacobiSystem::off_diagonal(int n) const {
  if (n < 1) {
    throw InvalidArgument("off_diagonal: n must be >= 1");
  }
  const double ab = alpha_ + beta_;
  if (n == 1) {
    // (n + a + b) cancels against (2n + a + b - 1); keeps a + b = -1 finite.
    return std::sqrt(4.0 * (1.0 + alpha_) * (1.0 + beta_) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab)));
  }
  const double s = 2.0 * n + ab;
  const double num = 4.0 * n * (n + alpha_) * (n + beta_) * (n + ab);
  const double den = s * s * (s + 1.0) * (s - 1.0);
  return std::sqrt(num / den);
}

void JacobiSystem::values_into(double x, std::span<double> out) const {
  if (out.empty()) {
    return;
  }
  out[0] = p0_;
  if (out.size() == 1) {
    return;
  }
  out[1] = (x - diagonal(0)) * out[0] / off_diagonal(1);
  double s_prev = off_diagonal(1);
  for (std::size_t n = 1; n + 1 < out.size(); ++n) {
    const double s_next = off_diagonal(static_cast<int>(n) + 1);
    out[n + 1] = ((x - diagonal(static_cast<int>(n))) * out[n] - s_prev * out[n - 1]) / s_next;
    s_prev = s_next;
  }
}

std::vector<double> JacobiSystem::values(int n_max, double x) const {
  if (n_max < 0) {
    throw InvalidArgument("jacobi_values: n_max must be >= 0");
  }
  std::vector<double> p(static_cast<std::size_t>(n_max) + 1);
  values_into(x, p);
  return p;
}

std::vector<double> jacobi_values(const JacobiSystem& system, int n_max, double x) {
  return system.values(n_max, x);
}

// --- spherical kernel -----------------------------------------------------

SphericalKernel::SphericalKernel(int degree, int q) : degree_(degree), q_(q) {
  if (degree < 1) {
    throw InvalidArgument("SphericalKernel: degree must be >= 1");
  }
  const UltrasphericalSystem system(q);
  const Filter h;
  const double ratio = sphere_volume_ratio(q);
  coeffs_.resize(static_cast<std::size_t>(degree));
  for (int l = 0; l < degree; ++l) {
    coeffs_[l] = ratio * h(static_cast<double>(l) / degree) * ultraspherical_at_one(q, l);
  }
  rec_ = system.clenshaw_form(degree);
}

double SphericalKernel::operator()(double t) const {
  constexpr double kSlack = 1e-12;
  if (!(std::fabs(t) <= 1.0 + kSlack)) {
    throw InvalidArgument("spherical kernel argument outside [-1, 1]: " + std::to_string(t));
  }
  return clenshaw_eval(coeffs_, rec_, std::clamp(t, -1.0, 1.0));
}

double spherical_kernel_eval(const SphericalKernel& kernel, double t) { return kernel(t); }

}  // namespace loctrig
