#pragma once

namespace loctrig {

/**
 * C-infinity bandpass filter shared by every kernel in the library.
 *
 * h(t) = 1 for |t| <= 1/2, h(t) = 0 for |t| >= 1, and on the transition band
 *
 *     h(t) = g(1 - |t|) / (g(1 - |t|) + g(|t| - 1/2)),   g(s) = exp(-1/s), s > 0
 *
 * which is even, monotone on [1/2, 1] and has all derivatives vanishing at
 * both edges of the transition band.
 */
struct Filter {
  double operator()(double t) const noexcept;
};

/// Free-function form of Filter{}(t).
double eval_filter(double t) noexcept;

}  // namespace loctrig
