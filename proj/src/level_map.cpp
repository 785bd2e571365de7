#include "wekit/level_map.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace wekit {

namespace {

const double kC = std::atan(std::sqrt(7.0));
const double kCotC = 1.0 / std::sqrt(7.0);
const double kSinC = std::sqrt(7.0 / 8.0);
const double kPi = 3.14159265358979323846;

// Unique root of F(x) = level on [lo, hi], where F is strictly monotone.
double bisect_level(double lo, double hi, double level) {
  double flo = damped_sine(lo) - level;
  double fhi = damped_sine(hi) - level;
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo > 0) == (fhi > 0))
    throw std::logic_error("beta: bracketing failure (F not monotone as expected)");
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (hi - lo <= 1e-13) return mid;
    const double fm = damped_sine(mid) - level;
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace

double critical_angle() { return kC; }

double damped_sine(double alpha, int order) {
  if (order < 0 || order > 4)
    throw std::invalid_argument("damped_sine: order in [0, 4]");
  const double sign = (order % 2 == 0) ? 1.0 : -1.0;
  return sign * std::exp(-alpha * kCotC) * std::sin(alpha - order * kC) /
         std::pow(kSinC, order);
}

double beta_value(double alpha) {
  if (alpha < 0.0 || alpha > kPi)
    throw std::invalid_argument("beta_value: alpha in [0, pi]");
  if (alpha == 0.0) return kPi;
  if (alpha == kPi) return 0.0;
  if (alpha == kC) return kC;
  const double level = damped_sine(alpha);
  return alpha < kC ? bisect_level(kC, kPi, level) : bisect_level(0.0, kC, level);
}

double beta_slope(double alpha) {
  if (alpha < 0.0 || alpha > kC)
    throw std::invalid_argument("beta_slope: alpha in [0, c]");
  if (kC - alpha < 1e-6) return -1.0;  // removable 0/0; beta'(c) = -1
  return damped_sine(alpha, 1) / damped_sine(beta_value(alpha), 1);
}

BetaMap build_beta_map(int samples) {
  if (samples < 1000) throw std::invalid_argument("build_beta_map: samples >= 1000");
  BetaMap map;
  map.c = kC;
  map.alpha.resize(samples);
  map.beta.resize(samples);
  map.beta_prime.assign(samples, std::numeric_limits<double>::quiet_NaN());
  for (int i = 0; i < samples; ++i) {
    const double a = kPi * i / (samples - 1);
    map.alpha[i] = a;
    map.beta[i] = beta_value(a);
    if (a <= kC) map.beta_prime[i] = beta_slope(a);
  }
  for (int i = 1; i < samples; ++i)
    if (!(map.beta[i] < map.beta[i - 1]))
      throw std::logic_error("build_beta_map: beta not strictly decreasing");
  for (int i = 0; i < samples; ++i) {
    const double lv = damped_sine(map.alpha[i]) - damped_sine(map.beta[i]);
    if (std::abs(lv) > 1e-10)
      throw std::logic_error("build_beta_map: level matching failed");
  }
  return map;
}

SlopeScan verify_lemma(int grid, double margin) {
  if (grid < 10) throw std::invalid_argument("verify_lemma: grid too small");
  if (!(margin > 0.0 && margin < kC))
    throw std::invalid_argument("verify_lemma: margin in (0, c)");
  SlopeScan out;
  out.c = kC;
  out.three_c_minus_pi = 3.0 * kC - kPi;
  out.three_c_minus_pi_in_range =
      out.three_c_minus_pi > 0.0 && out.three_c_minus_pi < kPi / 4.0;
  out.f2_ratio = 2.0 * std::exp(kC * kCotC) * std::cos(kC);
  out.alpha0 = bisect_level(0.0, kC - 1e-9, damped_sine(2.0 * kC));
  out.beta_alpha0 = beta_value(out.alpha0);
  out.beta_prime_alpha0 = beta_slope(out.alpha0);
  out.beta_prime_zero = beta_slope(0.0);

  const double hi = kC - margin;
  double worst = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < grid; ++i) {
    const double a = hi * i / (grid - 1);
    worst = std::max(worst, beta_slope(a));
  }
  out.max_beta_prime = worst;
  out.verdict = worst < -1.0;
  return out;
}

SineForm reduce_to_sine(const QSpec& spec) {
  if (spec.a == 0.0 && spec.b == 0.0)
    throw std::invalid_argument("reduce_to_sine: oscillatory part vanishes");
  const double rt7 = std::sqrt(7.0);
  SineForm out;
  out.delta = spec.eps;
  out.amplitude = 2.0 * std::hypot(spec.a, spec.b);
  // a cos(rt7 th) + b sin(rt7 th) = (amp/2) sin(rt7 (th - phase))
  out.phase = std::atan2(-spec.a, spec.b) / rt7;

  double worst = 0.0;
  const int npts = 101;
  const double period = 2.0 * kPi / rt7;
  for (int i = 0; i < npts; ++i) {
    const double th = -period + 2.0 * period * i / (npts - 1);
    const double t = spec.gamma + out.delta * std::exp(2.0 * th);
    const double lhs = 2.0 * std::exp(-th) * q_eval(spec, t).q;
    const double rhs = out.delta * spec.eps * spec.k * std::exp(th) +
                       out.amplitude * std::sin(rt7 * (th - out.phase));
    worst = std::max(worst, std::abs(lhs - rhs) /
                                (1.0 + std::abs(spec.k) * std::exp(th) + out.amplitude));
  }
  out.roundtrip_residual = worst;
  return out;
}

}  // namespace wekit
