#pragma once

#include "nfcb/array.hpp"

namespace nfcb {

/// Axis-aligned cell in (theta, kappa) space. kappa bounds half-open
/// [kappa_lo, kappa_hi), theta likewise, except where clamped to the domain.
struct CoverageRegion {
  double theta_lo = 0.0;
  double theta_hi = 0.0;
  double kappa_lo = 0.0;
  double kappa_hi = 0.0;
};

struct LowerCodebookParams {
  double rho = 0.0;    // coverage gain threshold in (0, 1)
  double delta = 0.0;  // ring scalar; ring m >= 2 sits at kappa = (m-1)/delta
  int n_theta = 0;
  int n_r = 0;
};

/// Steering-point grid: n_r rings (ring 0 far field) x n_theta columns.
/// Rings share a curvature; per-column distance is (1 - theta^2)/kappa.
struct SteeringGrid {
  std::vector<double> thetas;       // size n_theta, strictly increasing
  std::vector<double> ring_kappas;  // size n_r, ring_kappas[0] == 0
  std::vector<PolarPoint> points;   // ring-major, n_r * n_theta
};

/// Bottom-layer codebook: quadratic-model steering codewords on the grid.
struct LowerCodebook {
  ArrayConfig cfg;
  LowerCodebookParams params;
  SteeringGrid grid;
  std::vector<BeamVector> codewords;  // ring-major, parallel to grid.points

  int size() const { return static_cast<int>(codewords.size()); }
  int index(int ring, int angle) const { return ring * params.n_theta + angle; }
  const PolarPoint& point(int ring, int angle) const {
    return grid.points[index(ring, angle)];
  }
  const BeamVector& codeword(int ring, int angle) const {
    return codewords[index(ring, angle)];
  }
};

/// theta_k = -1 + (2k - 1)/n_theta; rings at kappa = (m-1)/delta, truncated
/// where the broadside ring distance 1/kappa falls below the Fresnel
/// distance (kappa > kappa_max).
SteeringGrid sample_steering_points(const ArrayConfig& cfg, int n_theta, double delta);

/// Equal-gain boundary between two steering points on the same ring:
/// theta midpoint. Throws when the ring precondition is violated beyond 1e-9.
double boundary_theta(const PolarPoint& p1, const PolarPoint& p2);

/// Equal-gain boundary between two steering points in the same direction:
/// kappa midpoint (harmonic mean of distances). Throws on direction mismatch.
double boundary_kappa(const PolarPoint& p1, const PolarPoint& p2);

/// Cell bounds: midpoints to neighbors, clamped to [-1,1] in theta and
/// [0, kappa_max] in kappa; innermost ring extends to kappa_max.
CoverageRegion coverage_region(const LowerCodebook& cb, int ring, int angle);

/// Minimum closed-form gain over the cell's four corners. With
/// use_direct_sum the quadratic-model summation replaces the closed form.
double min_gain(const LowerCodebook& cb, int ring, int angle,
                bool use_direct_sum = false);

/// Materialize a codebook at explicit parameters.
LowerCodebook make_lower_codebook(const ArrayConfig& cfg, const LowerCodebookParams& params);

/// Codebook at a fixed grid size with the ring scalar set so the rings
/// split [0, kappa_max] evenly end to end (innermost ring at r_min); every
/// cell then shares the same worst-case corner distance.
LowerCodebook make_calibrated_codebook(const ArrayConfig& cfg, int n_theta, int n_r);

/// Smallest (n_theta, n_r) codebook, lexicographically over the search
/// schedule, whose minimum corner gain reaches rho.
/// Throws std::runtime_error when the schedule is exhausted.
LowerCodebook build_lower_codebook(const ArrayConfig& cfg, double rho);

/// Far-field baseline: n_theta steering codewords at kappa = 0, or the
/// n_w-point DFT grid when dft is set.
LowerCodebook make_far_field_codebook(const ArrayConfig& cfg, int n_theta,
                                      bool dft = false);

}  // namespace nfcb
