#include "secmac/gaussian_bounds.hpp"

#include <cassert>
#include <cmath>
#include <stdexcept>

#include "secmac/numerics.hpp"

namespace secmac {

void LowerBoundParams::validate() const {
  if (!(alpha >= 0.0 && alpha <= 1.0))
    throw std::invalid_argument("LowerBoundParams: alpha must be in [0,1]");
  if (!(beta >= 0.0 && beta <= 1.0))
    throw std::invalid_argument("LowerBoundParams: beta must be in [0,1]");
}

double upper_bound_value(const GaussianMacChannel& ch, double psi) {
  if (!(psi >= -1.0 && psi <= 1.0))
    throw std::domain_error("upper_bound_value: |psi| <= 1 required");
  double cross = 2.0 * psi * std::sqrt(ch.p1 * ch.p2);
  double s_d = ch.h1d * ch.h1d * ch.p1 + ch.h2d * ch.h2d * ch.p2 + cross * ch.h1d * ch.h2d;
  double s_e = ch.h1e * ch.h1e * ch.p1 + ch.h2e * ch.h2e * ch.p2 + cross * ch.h1e * ch.h2e;
  // Nonnegative for |psi| <= 1 by Cauchy-Schwarz, up to rounding.
  assert(s_d >= -1e-12 && s_e >= -1e-12);
  if (s_d < 0.0 || s_e < 0.0)
    throw std::domain_error("upper_bound_value: negative received power");
  return cap(s_d / ch.sigma1_sq) - cap(s_e / ch.sigma2_sq);
}

BoundReport upper_bound(const GaussianMacChannel& ch, const BoundOptions& opts) {
  ch.validate();
  GridSpec spec;
  spec.lo = {-1.0};
  spec.hi = {1.0};
  spec.coarse_steps = opts.grid_steps;
  spec.refine_rounds = opts.refine_rounds;
  auto res = maximize([&](std::span<const double> x) { return upper_bound_value(ch, x[0]); },
                      spec);
  BoundReport rep;
  rep.raw_value = res.value;
  rep.value = clamp_plus(res.value);
  rep.argmax = res.argmax;
  return rep;
}

double lower_bound_value(const GaussianMacChannel& ch, const LowerBoundParams& p) {
  p.validate();
  const double a = p.alpha, b = p.beta;
  const double ab_bar = (1.0 - a) * (1.0 - b);
  const double g1d = ch.h1d * ch.h1d * ch.p1;
  const double g2d = ch.h2d * ch.h2d * ch.p2;
  const double g1e = ch.h1e * ch.h1e * ch.p1;
  const double g2e = ch.h2e * ch.h2e * ch.p2;

  double noise_term = std::min(cap(b * g2d / (ch.sigma1_sq + a * g1d)),
                               cap(b * g2e / ch.sigma2_sq));

  // The artificial-noise rate rides inside the min: the receiver decodes the
  // noise codeword out of the same channel, so the coherent sum-rate term
  // caps the private-plus-noise total. Written with the noise rate outside
  // the min the expression can exceed the converse bound.
  double coherent_d = cap((g1d + g2d + 2.0 * std::sqrt(ab_bar * g1d * g2d)) / ch.sigma1_sq);
  double rate_term;
  if (is_infinite_c12(ch.c12)) {
    rate_term = coherent_d;
  } else {
    rate_term =
        std::min(noise_term + cap(a * g1d / ch.sigma1_sq) + ch.c12, coherent_d);
  }
  double leak_term = cap((g1e + g2e + 2.0 * std::sqrt(ab_bar * g1e * g2e)) / ch.sigma2_sq);
  return clamp_plus(rate_term - leak_term);
}

BoundReport lower_bound(const GaussianMacChannel& ch, const BoundOptions& opts) {
  ch.validate();
  GridSpec spec;
  spec.lo = {0.0, 0.0};
  spec.hi = {1.0, 1.0};
  spec.coarse_steps = opts.grid_steps;
  spec.refine_rounds = opts.refine_rounds;
  auto res = maximize(
      [&](std::span<const double> x) {
        return lower_bound_value(ch, {x[0], x[1]});
      },
      spec);
  BoundReport rep;
  rep.raw_value = res.value;
  rep.value = clamp_plus(res.value);
  rep.argmax = res.argmax;
  rep.noise_power = res.argmax[1] * ch.p2;
  rep.conf_power = (1.0 - res.argmax[1]) * ch.p2;
  return rep;
}

double c12_zero_bound_value(const GaussianMacChannel& ch, double x1, double x2) {
  if (!(x1 >= 0.0 && x1 <= ch.p1 && x2 >= 0.0 && x2 <= ch.p2))
    throw std::domain_error("c12_zero_bound_value: powers outside [0,P1]x[0,P2]");
  double direct = cap(ch.h1d * ch.h1d * x1 / ch.sigma1_sq);
  double leak = cap(ch.h1e * ch.h1e * x1 / (ch.sigma2_sq + ch.h2e * ch.h2e * x2));
  return clamp_plus(direct - leak);
}

bool c12_zero_condition(const GaussianMacChannel& ch, double x1, double x2) {
  // cap is strictly increasing, so compare the SNRs directly.
  double lhs = ch.h2d * ch.h2d * x2 / (ch.h1d * ch.h1d * x1 + ch.sigma1_sq);
  double rhs = ch.h2e * ch.h2e * x2 / ch.sigma2_sq;
  return lhs >= rhs;
}

C12ZeroResult c12_zero_bounds(const GaussianMacChannel& ch, const BoundOptions& opts) {
  ch.validate();
  GridSpec spec;
  spec.lo = {0.0, 0.0};
  spec.hi = {ch.p1, ch.p2};
  spec.coarse_steps = opts.grid_steps;
  spec.refine_rounds = opts.refine_rounds;

  auto upper_res = maximize(
      [&](std::span<const double> x) { return c12_zero_bound_value(ch, x[0], x[1]); },
      spec);
  // Infeasible cells get a sentinel below any attainable value; x2 = 0 is
  // always feasible, so the feasible set is never empty.
  auto lower_res = maximize(
      [&](std::span<const double> x) {
        if (!c12_zero_condition(ch, x[0], x[1])) return -1.0;
        return c12_zero_bound_value(ch, x[0], x[1]);
      },
      spec);

  C12ZeroResult out;
  out.upper.raw_value = upper_res.value;
  out.upper.value = clamp_plus(upper_res.value);
  out.upper.argmax = upper_res.argmax;
  out.lower.raw_value = lower_res.value;
  out.lower.value = clamp_plus(lower_res.value);
  out.lower.argmax = lower_res.argmax;
  out.coincide = c12_zero_condition(ch, upper_res.argmax[0], upper_res.argmax[1]);
  return out;
}

BoundReport full_cooperation_capacity(const GaussianMacChannel& ch,
                                      const BoundOptions& opts) {
  return upper_bound(ch, opts);
}

}  // namespace secmac
