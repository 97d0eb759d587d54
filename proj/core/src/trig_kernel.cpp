#include "loctrig/trig_kernel.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "loctrig/errors.hpp"
#include "loctrig/filter.hpp"
#include "loctrig/parallel.hpp"

namespace loctrig {

using std::numbers::pi;

TrigKernel::TrigKernel(int degree) : degree_(degree) {
  if (degree < 1) {
    throw InvalidArgument("TrigKernel: degree must be >= 1, got " + std::to_string(degree));
  }
  const Filter h;
  coeffs_.resize(static_cast<std::size_t>(degree));
  peak_ = 0.0;
  for (int k = 0; k < degree; ++k) {
    coeffs_[k] = h(static_cast<double>(k) / degree);
    peak_ += (k == 0 ? 1.0 : 2.0) * coeffs_[k];
  }
}

double TrigKernel::phi(double t) const noexcept {
  // Clenshaw for sum_k d_k T_k(x) with x = cos t, d_0 = c_0, d_k = 2 c_k.
  const double x = std::cos(t);
  double b1 = 0.0;
  double b2 = 0.0;
  for (int k = degree_ - 1; k >= 1; --k) {
    const double b0 = 2.0 * coeffs_[k] + 2.0 * x * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  return coeffs_[0] + x * b1 - b2;
}

double TrigKernel::psi(double dist) const noexcept {
  const double v = phi(dist);
  return v * v;
}

double phi_n(const TrigKernel& kernel, double t) noexcept { return kernel.phi(t); }
double psi_n(const TrigKernel& kernel, double dist) noexcept { return kernel.psi(dist); }

double wrap_angle(double t) noexcept {
  double r = std::remainder(t, 2.0 * pi);  // in [-pi, pi]
  if (r <= -pi) {
    r += 2.0 * pi;
  }
  return r;
}

double circle_distance(double a, double b) noexcept { return std::fabs(std::remainder(a - b, 2.0 * pi)); }

AtomicMeasure::AtomicMeasure(std::vector<Atom> atoms) {
  atoms_.reserve(atoms.size());
  for (const auto& a : atoms) {
    add(a.location, a.amplitude);
  }
}

void AtomicMeasure::add(double location, double amplitude) {
  atoms_.push_back({wrap_angle(location), amplitude});
}

std::vector<double> sigma_point_sources(const AtomicMeasure& measure,
                                        const TrigKernel& kernel,
                                        std::span<const double> grid) {
  std::vector<double> out(grid.size(), 0.0);
  if (measure.empty()) {
    return out;
  }
  const auto atoms = measure.atoms();
  parallel_for(0, grid.size(), [&](std::size_t i) {
    double acc = 0.0;
    for (const auto& a : atoms) {
      acc += a.amplitude * kernel.phi(grid[i] - a.location);
    }
    out[i] = acc;
  });
  return out;
}

std::vector<Sample> sample_power_spectrum(const AtomicMeasure& measure,
                                          const TrigKernel& kernel, int factor) {
  if (factor < 1) {
    throw InvalidArgument("sample_power_spectrum: factor must be >= 1");
  }
  const std::size_t count = static_cast<std::size_t>(factor) * kernel.degree();
  std::vector<double> grid(count);
  for (std::size_t i = 0; i < count; ++i) {
    // (-pi, pi], ascending
    grid[i] = -pi + 2.0 * pi * static_cast<double>(i + 1) / static_cast<double>(count);
  }
  const auto values = sigma_point_sources(measure, kernel, grid);
  std::vector<Sample> out(count);
  for (std::size_t i = 0; i < count; ++i) {
    out[i] = {grid[i], std::fabs(values[i])};
  }
  return out;
}

std::vector<Peak> detect_peaks(const TrigKernel& kernel,
                               std::span<const Sample> samples,
                               double threshold_frac) {
  if (!(threshold_frac > 0.0 && threshold_frac < 1.0)) {
    throw InvalidArgument("detect_peaks: threshold_frac must lie in (0, 1)");
  }
  const std::size_t count = samples.size();
  if (count < 8 * static_cast<std::size_t>(kernel.degree())) {
    throw InvalidArgument("detect_peaks: need at least 8n samples, got " + std::to_string(count));
  }
  double top = 0.0;
  for (const auto& s : samples) {
    top = std::max(top, s.value);
  }
  if (top <= 0.0) {
    return {};
  }
  const double cutoff = threshold_frac * top;

  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < count; ++i) {
    const double prev = samples[(i + count - 1) % count].value;
    const double next = samples[(i + 1) % count].value;
    const double v = samples[i].value;
    // >= on the left, > on the right: a flat top reports its first sample.
    if (v >= cutoff && v >= prev && v > next) {
      candidates.push_back(i);
    }
  }

  std::stable_sort(candidates.begin(), candidates.end(), [&](std::size_t a, std::size_t b) {
    return samples[a].value > samples[b].value;
  });
  const double merge_radius = pi / (2.0 * kernel.degree());
  std::vector<Peak> peaks;
  for (std::size_t idx : candidates) {
    const double loc = samples[idx].location;
    const bool shadowed = std::any_of(peaks.begin(), peaks.end(), [&](const Peak& p) {
      return circle_distance(p.location, loc) < merge_radius;
    });
    if (!shadowed) {
      peaks.push_back({loc, samples[idx].value / kernel.peak()});
    }
  }
  std::sort(peaks.begin(), peaks.end(),
            [](const Peak& a, const Peak& b) { return a.location < b.location; });
  return peaks;
}

}  // namespace loctrig
