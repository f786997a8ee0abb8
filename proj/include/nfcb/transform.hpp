#pragma once

#include "nfcb/array.hpp"

namespace nfcb {

/// Rotation / relocation amounts. delta_r == infinity means no relocation.
struct TransformSpec {
  double delta_theta = 0.0;
  double delta_r = std::numeric_limits<double>::infinity();
};

/// w o sqrt(n_w) a(delta_theta, inf): unit-modulus far-field ramp.
/// Translates the quadratic-model gain pattern by +delta_theta at constant kappa.
BeamVector rotate(const ArrayConfig& cfg, const BeamVector& w, double delta_theta);

/// w o sqrt(n_w) a(0, delta_r): unit-modulus quadratic ramp, with
/// kappa shift 1/delta_r. Negative delta_r defocuses.
BeamVector relocate(const ArrayConfig& cfg, const BeamVector& w, double delta_r);

/// Same transform parameterized directly by the curvature shift.
BeamVector relocate_curvature(const ArrayConfig& cfg, const BeamVector& w,
                              double kappa_shift);

/// A transported point; is_virtual marks mapped curvature below 0
/// (no physical location, the pattern value still exists analytically).
struct MappedPoint {
  PolarPoint point;
  bool is_virtual = false;
};

/// (theta, kappa) -> (theta - delta_theta, kappa).
MappedPoint map_point_rotation(const PolarPoint& p, double delta_theta);

/// (theta, kappa) -> (theta, kappa - 1/delta_r).
MappedPoint map_point_relocation(const PolarPoint& p, double delta_r);

}  // namespace nfcb
