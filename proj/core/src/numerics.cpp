#include "secmac/numerics.hpp"

#include <cmath>
#include <stdexcept>

namespace secmac {

double cap(double x) {
  if (x < 0.0 || std::isnan(x)) throw std::domain_error("cap: x must be >= 0");
  return std::log2(1.0 + x);
}

double clamp_plus(double x) { return x > 0.0 ? x : 0.0; }

double binary_entropy(double p) {
  if (!(p >= 0.0 && p <= 1.0))
    throw std::domain_error("binary_entropy: p must be in [0,1]");
  double h = 0.0;
  if (p > 0.0) h -= p * std::log2(p);
  if (p < 1.0) h -= (1.0 - p) * std::log2(1.0 - p);
  return h;
}

void GridSpec::validate() const {
  if (lo.empty() || lo.size() != hi.size())
    throw std::invalid_argument("GridSpec: lo/hi must be non-empty and equal-sized");
  for (size_t i = 0; i < lo.size(); ++i)
    if (!(lo[i] <= hi[i]))
      throw std::invalid_argument("GridSpec: lo[i] <= hi[i] violated");
  if (coarse_steps < 2) throw std::invalid_argument("GridSpec: coarse_steps >= 2");
  if (refine_rounds < 0) throw std::invalid_argument("GridSpec: refine_rounds >= 0");
  if (!(refine_shrink > 0.0 && refine_shrink < 1.0))
    throw std::invalid_argument("GridSpec: refine_shrink in (0,1)");
}

namespace {

// Sweep one axis-aligned lattice in lexicographic index order; replace the
// incumbent only on strict improvement, so within a pass the first (lex
// smallest) maximizer wins ties and across passes earlier finds are kept.
void sweep_lattice(const BoxObjective& f, const std::vector<double>& lo,
                   const std::vector<double>& hi, int steps,
                   MaximizeResult& best, bool force_first) {
  const int dims = static_cast<int>(lo.size());
  std::vector<int> idx(dims, 0);
  std::vector<double> x(dims);
  bool first = force_first;
  for (;;) {
    for (int d = 0; d < dims; ++d) {
      double t = static_cast<double>(idx[d]) / (steps - 1);
      x[d] = lo[d] + t * (hi[d] - lo[d]);
      if (idx[d] == steps - 1) x[d] = hi[d];  // exact endpoint
    }
    double v = f(x);
    if (first || v > best.value) {
      best.value = v;
      best.argmax = x;
      first = false;
    }
    int d = dims - 1;
    while (d >= 0 && ++idx[d] == steps) idx[d--] = 0;
    if (d < 0) break;
  }
}

}  // namespace

MaximizeResult maximize(const BoxObjective& f, const GridSpec& spec) {
  spec.validate();
  const int dims = spec.dims();
  MaximizeResult best;
  sweep_lattice(f, spec.lo, spec.hi, spec.coarse_steps, best, true);

  std::vector<double> lo(dims), hi(dims);
  for (int r = 1; r <= spec.refine_rounds; ++r) {
    double scale = std::pow(spec.refine_shrink, r);
    for (int d = 0; d < dims; ++d) {
      double half = 0.5 * (spec.hi[d] - spec.lo[d]) * scale;
      lo[d] = std::max(spec.lo[d], best.argmax[d] - half);
      hi[d] = std::min(spec.hi[d], best.argmax[d] + half);
    }
    sweep_lattice(f, lo, hi, spec.coarse_steps, best, false);
  }
  return best;
}

}  // namespace secmac
