#ifndef SECMAC_EXPERIMENTS_HPP
#define SECMAC_EXPERIMENTS_HPP

#include <string>
#include <vector>

#include "secmac/gaussian_bounds.hpp"
#include "secmac/gaussian_model.hpp"

namespace secmac {

/// Encoder 2 location sweep along the x-axis, one bound pair per (d, c12).
struct SweepConfig {
  NetworkGeometry base;  // pos_enc2 is overwritten per sample point
  double start = 0.0;
  double stop = 2.0;
  double step = 0.05;
  std::vector<double> c12_list;
  bool include_wiretap_baseline = true;
  BoundOptions bounds;

  void validate() const;
};

struct SweepRow {
  double d = 0.0;
  double c12 = 0.0;
  double lower_value = 0.0;
  double upper_value = 0.0;
  double alpha_star = 0.0;
  double beta_star = 0.0;
  double noise_power = 0.0;
  double conf_power = 0.0;
  double wiretap_baseline = -1.0;  // -1 sentinel when the baseline is disabled
};

/// No-helper scalar wiretap secrecy rate for the same Encoder 1 links.
double wiretap_baseline(const GaussianMacChannel& ch);

/// Rows ordered by (d, c12) ascending; the upper bound has no c12 dependence
/// and is computed once per d.
std::vector<SweepRow> run_sweep(const SweepConfig& cfg);

struct PowerSplitRow {
  double d = 0.0;
  double c12 = 0.0;
  double noise_power = 0.0;
  double conf_power = 0.0;
  bool near_destination = false;         // 0.9 < d < 1.1
  bool conf_power_below_5pct = false;    // conf_power < 0.05 * P2
};

std::vector<PowerSplitRow> power_split_report(const std::vector<SweepRow>& rows, double p2);

/// CSV, UTF-8, fixed header; infinite c12 serialized as "inf".
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Deterministic line plots.
std::string sweep_bounds_svg(const std::vector<SweepRow>& rows);
std::string power_split_svg(const std::vector<SweepRow>& rows);

}  // namespace secmac

#endif
