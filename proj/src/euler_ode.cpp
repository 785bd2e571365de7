#include "wekit/euler_ode.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace wekit {

namespace {

const double kSqrt7 = std::sqrt(7.0);

void check_spec(const QSpec& s) {
  if (s.eps != 1 && s.eps != -1)
    throw std::invalid_argument("QSpec: eps must be +1 or -1");
}

double bisect_root(const QSpec& spec, double lo, double hi, double flo) {
  // flo carries the sign of Q at lo; invariant: sign change across [lo, hi]
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi || hi - lo <= 1e-12) return mid;
    const double fm = q_eval(spec, mid).q;
    if (fm == 0.0) return mid;
    if ((fm > 0) == (flo > 0))
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

QJet q_eval(const QSpec& spec, double t) {
  check_spec(spec);
  const double u = t - spec.gamma;
  if (u == 0.0) throw std::domain_error("q_eval: t = gamma is singular");
  const double m = std::abs(u);
  const double sg = u > 0 ? 1.0 : -1.0;
  const double w = kSqrt7 / 2.0;
  const double ph = w * std::log(m);
  const double cosp = std::cos(ph), sinp = std::sin(ph);
  const double osc = spec.a * cosp + spec.b * sinp;          // C(log m)
  const double osc_l = w * (spec.b * cosp - spec.a * sinp);  // dC/dlog m
  const double rm = std::sqrt(m);

  QJet jet;
  jet.q = spec.eps * spec.k * u / 2.0 + rm * osc;
  jet.dq = spec.eps * spec.k / 2.0 + sg * (osc / 2.0 + osc_l) / rm;
  jet.d2q = -2.0 * osc / (m * rm);
  return jet;
}

std::vector<PositivityInterval> positivity_scan(const QSpec& spec, double t_lo,
                                                double t_hi, int grid) {
  check_spec(spec);
  if (!(t_lo < t_hi)) throw std::invalid_argument("positivity_scan: need t_lo < t_hi");
  if (grid < 100) throw std::invalid_argument("positivity_scan: grid >= 100 required");
  if (t_lo <= spec.gamma && spec.gamma <= t_hi)
    throw std::invalid_argument("positivity_scan: interval straddles gamma");

  const double side = t_lo > spec.gamma ? 1.0 : -1.0;
  const double m_min = std::min(std::abs(t_lo - spec.gamma), std::abs(t_hi - spec.gamma));
  const double m_max = std::max(std::abs(t_lo - spec.gamma), std::abs(t_hi - spec.gamma));
  const double span = std::log(m_max / m_min);

  // geometric in |t - gamma|, endpoints exact
  std::vector<double> ts(grid + 1);
  for (int i = 0; i <= grid; ++i)
    ts[i] = spec.gamma + side * m_min * std::exp(span * i / grid);
  std::sort(ts.begin(), ts.end());
  ts.front() = t_lo;
  ts.back() = t_hi;

  std::vector<double> breaks{t_lo};
  std::vector<bool> is_root{false};
  double prev_t = ts[0];
  double prev_q = q_eval(spec, prev_t).q;
  for (int i = 1; i <= grid; ++i) {
    const double cur_t = ts[i];
    const double cur_q = q_eval(spec, cur_t).q;
    if (prev_q == 0.0 && i == 1) {
      // exact zero at the left edge: recorded as the edge itself
    } else if (cur_q == 0.0) {
      breaks.push_back(cur_t);
      is_root.push_back(true);
    } else if ((prev_q > 0) != (cur_q > 0) && prev_q != 0.0) {
      breaks.push_back(bisect_root(spec, prev_t, cur_t, prev_q));
      is_root.push_back(true);
    }
    prev_t = cur_t;
    prev_q = cur_q;
  }
  if (breaks.back() != t_hi) {
    breaks.push_back(t_hi);
    is_root.push_back(false);
  } else {
    is_root.back() = true;
  }

  std::vector<PositivityInterval> out;
  for (size_t i = 0; i + 1 < breaks.size(); ++i) {
    const double lo = breaks[i], hi = breaks[i + 1];
    if (!(lo < hi)) continue;
    // geometric midpoint in |t - gamma| avoids landing on another root
    const double mm = std::sqrt(std::abs(lo - spec.gamma) * std::abs(hi - spec.gamma));
    const double mid = spec.gamma + side * mm;
    if (q_eval(spec, mid).q <= 0.0) continue;
    PositivityInterval iv;
    iv.lo = lo;
    iv.hi = hi;
    iv.lo_kind = is_root[i] ? BoundaryKind::zero : BoundaryKind::domain_edge;
    iv.hi_kind = is_root[i + 1] ? BoundaryKind::zero : BoundaryKind::domain_edge;
    iv.lo_slope = q_eval(spec, lo).dq;
    iv.hi_slope = q_eval(spec, hi).dq;
    out.push_back(iv);
  }
  return out;
}

bool boundary_match(const PositivityInterval& iv, double tol) {
  if (iv.lo_kind != BoundaryKind::zero || iv.hi_kind != BoundaryKind::zero)
    throw std::invalid_argument("boundary_match: both endpoints must be zeros of Q");
  if (!(iv.lo_slope > 0.0)) return false;
  return std::abs(iv.lo_slope + iv.hi_slope) <= tol * std::abs(iv.lo_slope);
}

}  // namespace wekit
