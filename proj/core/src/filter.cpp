#include "loctrig/filter.hpp"

#include <cmath>

namespace loctrig {

namespace {

// exp(-1/s) underflows to 0 below s ~ 1/745; returning 0 early keeps the
// ratio well defined on both sides of the transition band.
constexpr double kTinyArgument = 1.0 / 700.0;

double bump(double s) noexcept {
  if (!(s > kTinyArgument)) {
    return 0.0;
  }
  return std::exp(-1.0 / s);
}

}  // namespace

double Filter::operator()(double t) const noexcept {
  const double a = std::fabs(t);
  if (a <= 0.5) {
    return 1.0;
  }
  if (a >= 1.0) {
    return 0.0;
  }
  // One of the two arguments is always >= 1/4, so the denominator is positive.
  const double up = bump(1.0 - a);
  const double down = bump(a - 0.5);
  return up / (up + down);
}

double eval_filter(double t) noexcept { return Filter{}(t); }

}  // namespace loctrig
