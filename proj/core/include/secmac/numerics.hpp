#ifndef SECMAC_NUMERICS_HPP
#define SECMAC_NUMERICS_HPP

#include <functional>
#include <span>
#include <vector>

namespace secmac {

/// C(x) = log2(1 + x). Throws std::domain_error for x < 0.
double cap(double x);

/// [x]^+ = max(0, x).
double clamp_plus(double x);

/// Binary entropy in bits, with 0*log2(0) := 0. Domain error outside [0,1].
double binary_entropy(double p);

/// Box-constrained lattice search: a coarse pass over the full box followed
/// by shrinking local re-grids around the incumbent. Deterministic; ties on
/// a lattice go to the lexicographically smallest argument vector.
struct GridSpec {
  std::vector<double> lo;
  std::vector<double> hi;
  int coarse_steps = 101;
  int refine_rounds = 4;
  double refine_shrink = 0.25;

  int dims() const { return static_cast<int>(lo.size()); }
  void validate() const;  // throws std::invalid_argument
};

struct MaximizeResult {
  std::vector<double> argmax;
  double value = 0.0;
};

using BoxObjective = std::function<double(std::span<const double>)>;

MaximizeResult maximize(const BoxObjective& f, const GridSpec& spec);

}  // namespace secmac

#endif
