#include "nfcb/transform.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nfcb {

BeamVector rotate(const ArrayConfig& cfg, const BeamVector& w, double delta_theta) {
  BeamVector out = w;
  const double coeff = 2.0 * std::numbers::pi / cfg.lambda * cfg.d * delta_theta;
  const auto offsets = element_offsets(cfg);
  for (int i = 0; i < cfg.n_w; ++i)
    if (out.active[i]) out.weights[i] *= std::polar(1.0, coeff * offsets[i]);
  return out;
}

BeamVector relocate_curvature(const ArrayConfig& cfg, const BeamVector& w,
                              double kappa_shift) {
  BeamVector out = w;
  const double coeff =
      -std::numbers::pi / cfg.lambda * cfg.d * cfg.d * kappa_shift;
  const auto offsets = element_offsets(cfg);
  for (int i = 0; i < cfg.n_w; ++i)
    if (out.active[i])
      out.weights[i] *= std::polar(1.0, coeff * offsets[i] * offsets[i]);
  return out;
}

BeamVector relocate(const ArrayConfig& cfg, const BeamVector& w, double delta_r) {
  if (delta_r == 0.0) throw std::invalid_argument("relocate: delta_r must be nonzero");
  return relocate_curvature(cfg, w, std::isinf(delta_r) ? 0.0 : 1.0 / delta_r);
}

namespace {

PolarPoint raw_point(double theta, double kappa) {
  PolarPoint p;
  p.theta = theta;
  p.kappa = kappa;
  p.r = kappa != 0.0 ? (1.0 - theta * theta) / kappa
                     : std::numeric_limits<double>::infinity();
  return p;
}

}  // namespace

MappedPoint map_point_rotation(const PolarPoint& p, double delta_theta) {
  MappedPoint m;
  m.point = raw_point(p.theta - delta_theta, p.kappa);
  m.is_virtual = false;  // kappa unchanged
  return m;
}

MappedPoint map_point_relocation(const PolarPoint& p, double delta_r) {
  if (delta_r == 0.0)
    throw std::invalid_argument("map_point_relocation: delta_r must be nonzero");
  const double shift = std::isinf(delta_r) ? 0.0 : 1.0 / delta_r;
  MappedPoint m;
  m.point = raw_point(p.theta, p.kappa - shift);
  m.is_virtual = m.point.kappa < 0.0;
  return m;
}

}  // namespace nfcb
