#pragma once

#include <span>
#include <vector>

namespace loctrig {

/**
 * Localized trigonometric kernel on the circle,
 *
 *     Phi_n(t) = sum_{|k| < n} h(k/n) e^{ikt} = c_0 + 2 sum_{k=1}^{n-1} c_k cos(kt),
 *
 * with c_k = h(k/n) precomputed at construction. Immutable; evaluation is
 * O(n) and safe to call concurrently.
 */
class TrigKernel {
 public:
  explicit TrigKernel(int degree);

  int degree() const noexcept { return degree_; }
  std::span<const double> coefficients() const noexcept { return coeffs_; }

  /// Phi_n(t), evaluated as a Chebyshev series in cos(t).
  double phi(double t) const noexcept;
  /// Psi_n(d) = Phi_n(d)^2, the positive kernel used on metric spaces.
  double psi(double dist) const noexcept;
  /// Phi_n(0) = sum of all filter weights; the kernel's peak height.
  double peak() const noexcept { return peak_; }

 private:
  int degree_;
  std::vector<double> coeffs_;
  double peak_;
};

double phi_n(const TrigKernel& kernel, double t) noexcept;
double psi_n(const TrigKernel& kernel, double dist) noexcept;

/// Reduces an angle into (-pi, pi].
double wrap_angle(double t) noexcept;
/// Distance on R / 2piZ, in [0, pi].
double circle_distance(double a, double b) noexcept;

struct Atom {
  double location;
  double amplitude;
};

/// Finite sum of point masses on the circle; locations are stored wrapped
/// into (-pi, pi].
class AtomicMeasure {
 public:
  AtomicMeasure() = default;
  explicit AtomicMeasure(std::vector<Atom> atoms);

  void add(double location, double amplitude);
  std::span<const Atom> atoms() const noexcept { return atoms_; }
  bool empty() const noexcept { return atoms_.empty(); }

 private:
  std::vector<Atom> atoms_;
};

/// sigma_n(mu)(x_i) = sum_k a_k Phi_n(x_i - omega_k) for every grid point.
std::vector<double> sigma_point_sources(const AtomicMeasure& measure,
                                        const TrigKernel& kernel,
                                        std::span<const double> grid);

struct Sample {
  double location;
  double value;
};

/// |sigma_n(mu)| on `factor * n` equispaced points of (-pi, pi].
std::vector<Sample> sample_power_spectrum(const AtomicMeasure& measure,
                                          const TrigKernel& kernel,
                                          int factor = 8);

struct Peak {
  double location;
  double amplitude;
};

/**
 * Thresholded local maxima of a circularly ordered power spectrum.
 *
 * Keeps maxima with value >= threshold_frac * max(value); maxima closer than
 * pi/(2n) collapse onto the larger one. Amplitudes are read off as
 * value / Phi_n(0). Samples must cover the circle with at least 8n points.
 * Output is sorted by location.
 */
std::vector<Peak> detect_peaks(const TrigKernel& kernel,
                               std::span<const Sample> samples,
                               double threshold_frac);

}  // namespace loctrig
