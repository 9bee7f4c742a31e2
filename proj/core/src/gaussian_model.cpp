#include "secmac/gaussian_model.hpp"

#include <cmath>
#include <stdexcept>

namespace secmac {

void GaussianMacChannel::validate() const {
  if (!(sigma1_sq > 0.0)) throw std::invalid_argument("sigma1_sq must be > 0");
  if (!(sigma2_sq > 0.0)) throw std::invalid_argument("sigma2_sq must be > 0");
  if (!(p1 >= 0.0)) throw std::invalid_argument("p1 must be >= 0");
  if (!(p2 >= 0.0)) throw std::invalid_argument("p2 must be >= 0");
  if (!(c12 >= 0.0) && !is_infinite_c12(c12))
    throw std::invalid_argument("c12 must be >= 0 or infinite");
}

void NetworkGeometry::validate() const {
  if (!(gamma > 0.0)) throw std::invalid_argument("gamma must be > 0");
  if (!(min_distance > 0.0)) throw std::invalid_argument("min_distance must be > 0");
  GaussianMacChannel probe;
  probe.sigma1_sq = sigma1_sq;
  probe.sigma2_sq = sigma2_sq;
  probe.p1 = p1;
  probe.p2 = p2;
  probe.c12 = c12;
  probe.validate();
}

double path_loss_gain(double distance, double gamma, double min_distance) {
  if (!(gamma > 0.0)) throw std::domain_error("path_loss_gain: gamma must be > 0");
  if (!(min_distance > 0.0))
    throw std::domain_error("path_loss_gain: min_distance must be > 0");
  if (!(distance >= 0.0) || !std::isfinite(distance))
    throw std::domain_error("path_loss_gain: distance must be finite and >= 0");
  return std::pow(std::max(distance, min_distance), -gamma / 2.0);
}

double euclidean_distance(const Point2& a, const Point2& b) {
  return std::hypot(a[0] - b[0], a[1] - b[1]);
}

GaussianMacChannel compile_geometry(const NetworkGeometry& g) {
  g.validate();
  GaussianMacChannel ch;
  ch.h1d = path_loss_gain(euclidean_distance(g.pos_enc1, g.pos_dest), g.gamma, g.min_distance);
  ch.h2d = path_loss_gain(euclidean_distance(g.pos_enc2, g.pos_dest), g.gamma, g.min_distance);
  ch.h1e = path_loss_gain(euclidean_distance(g.pos_enc1, g.pos_eave), g.gamma, g.min_distance);
  ch.h2e = path_loss_gain(euclidean_distance(g.pos_enc2, g.pos_eave), g.gamma, g.min_distance);
  ch.sigma1_sq = g.sigma1_sq;
  ch.sigma2_sq = g.sigma2_sq;
  ch.p1 = g.p1;
  ch.p2 = g.p2;
  ch.c12 = g.c12;
  return ch;
}

}  // namespace secmac
