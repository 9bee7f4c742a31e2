#ifndef SECMAC_GAUSSIAN_BOUNDS_HPP
#define SECMAC_GAUSSIAN_BOUNDS_HPP

#include <vector>

#include "secmac/gaussian_model.hpp"

namespace secmac {

/// alpha: Encoder 1 private-signal power fraction.
/// beta:  Encoder 2 artificial-noise power fraction.
struct LowerBoundParams {
  double alpha = 0.0;
  double beta = 0.0;

  void validate() const;
};

struct BoundReport {
  double value = 0.0;      // clamped at 0
  double raw_value = 0.0;  // before the nonnegativity clamp
  std::vector<double> argmax;  // {psi} for the upper bound, {alpha, beta} for the lower
  double noise_power = 0.0;    // beta * P2   (lower bound only)
  double conf_power = 0.0;     // (1-beta) * P2
};

struct BoundOptions {
  int grid_steps = 201;
  int refine_rounds = 4;
};

/// Secrecy-rate difference for jointly Gaussian inputs with correlation psi.
double upper_bound_value(const GaussianMacChannel& ch, double psi);

/// Upper bound on the secrecy capacity: max over psi in [-1,1].
BoundReport upper_bound(const GaussianMacChannel& ch, const BoundOptions& opts = {});

/// Achievable secrecy rate for a given power split (alpha, beta).
double lower_bound_value(const GaussianMacChannel& ch, const LowerBoundParams& p);

/// Lower bound on the secrecy capacity: max over (alpha, beta) in [0,1]^2.
BoundReport lower_bound(const GaussianMacChannel& ch, const BoundOptions& opts = {});

/// Shared no-conference bound expression at input powers (x1, x2).
double c12_zero_bound_value(const GaussianMacChannel& ch, double x1, double x2);

/// Feasibility condition under which the no-conference lower bound applies.
bool c12_zero_condition(const GaussianMacChannel& ch, double x1, double x2);

struct C12ZeroResult {
  BoundReport upper;
  BoundReport lower;
  bool coincide = false;  // upper's argmax satisfies the condition; then the
                          // common value is the secrecy capacity
};

/// No-conference upper/lower bounds over the power box (c12 field ignored).
C12ZeroResult c12_zero_bounds(const GaussianMacChannel& ch, const BoundOptions& opts = {});

/// Secrecy capacity with an unbounded conference link; identical computation
/// to upper_bound, exposed separately for the coincidence checks.
BoundReport full_cooperation_capacity(const GaussianMacChannel& ch,
                                      const BoundOptions& opts = {});

}  // namespace secmac

#endif
