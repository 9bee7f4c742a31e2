#ifndef SECMAC_GAUSSIAN_MODEL_HPP
#define SECMAC_GAUSSIAN_MODEL_HPP

#include <array>
#include <limits>

namespace secmac {

/// Distinguished "unbounded conference link" value.
inline constexpr double kInfiniteC12 = std::numeric_limits<double>::infinity();

inline bool is_infinite_c12(double c12) {
  return c12 == std::numeric_limits<double>::infinity();
}

/// Memoryless Gaussian MAC with a one-way conference link from Encoder 1
/// to Encoder 2. Gains are signed reals; the bound formulas only use |h|^2.
struct GaussianMacChannel {
  double h1d = 0.0;  // Encoder 1 -> destination
  double h2d = 0.0;  // Encoder 2 -> destination
  double h1e = 0.0;  // Encoder 1 -> eavesdropper
  double h2e = 0.0;  // Encoder 2 -> eavesdropper
  double sigma1_sq = 1.0;
  double sigma2_sq = 1.0;
  double p1 = 1.0;
  double p2 = 1.0;
  double c12 = 0.0;  // bits/channel-use; kInfiniteC12 for full cooperation

  void validate() const;  // throws std::invalid_argument
};

using Point2 = std::array<double, 2>;

/// Planar node layout that compiles into channel gains via distance-dependent
/// path loss. Distances below min_distance are clamped so sweeps through a
/// node position stay finite.
struct NetworkGeometry {
  Point2 pos_enc1{0.0, 0.0};
  Point2 pos_enc2{0.0, 0.0};
  Point2 pos_dest{0.0, 0.0};
  Point2 pos_eave{0.0, 0.0};
  double gamma = 2.0;
  double p1 = 1.0;
  double p2 = 1.0;
  double sigma1_sq = 1.0;
  double sigma2_sq = 1.0;
  double c12 = 0.0;
  double min_distance = 0.01;

  void validate() const;
};

/// max(distance, min_distance)^(-gamma/2); strictly positive.
double path_loss_gain(double distance, double gamma, double min_distance);

double euclidean_distance(const Point2& a, const Point2& b);

GaussianMacChannel compile_geometry(const NetworkGeometry& g);

}  // namespace secmac

#endif
