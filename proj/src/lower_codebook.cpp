#include "nfcb/lower_codebook.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "nfcb/fresnel.hpp"

namespace nfcb {

SteeringGrid sample_steering_points(const ArrayConfig& cfg, int n_theta, double delta) {
  if (n_theta < 1) throw std::invalid_argument("sample_steering_points: n_theta >= 1");
  if (!(delta > 0.0)) throw std::invalid_argument("sample_steering_points: delta > 0");

  SteeringGrid grid;
  grid.thetas.resize(n_theta);
  for (int k = 1; k <= n_theta; ++k)
    grid.thetas[k - 1] = -1.0 + (2.0 * k - 1.0) / n_theta;

  const double kappa_max = cfg.kappa_max();
  grid.ring_kappas.push_back(0.0);
  for (int m = 2;; ++m) {
    const double kappa = (m - 1) / delta;
    // relative slack so a ring placed on the boundary survives rounding
    if (kappa - kappa_max > kappa_max * 1e-12) break;
    grid.ring_kappas.push_back(kappa);
  }

  grid.points.reserve(grid.ring_kappas.size() * grid.thetas.size());
  for (double kappa : grid.ring_kappas)
    for (double theta : grid.thetas)
      grid.points.push_back(PolarPoint::from_curvature(theta, kappa));
  return grid;
}

double boundary_theta(const PolarPoint& p1, const PolarPoint& p2) {
  if (std::fabs(p1.kappa - p2.kappa) > 1e-9)
    throw std::invalid_argument("boundary_theta: points must share a distance ring");
  return (p1.theta + p2.theta) / 2.0;
}

double boundary_kappa(const PolarPoint& p1, const PolarPoint& p2) {
  if (std::fabs(p1.theta - p2.theta) > 1e-9)
    throw std::invalid_argument("boundary_kappa: points must share a direction");
  return (p1.kappa + p2.kappa) / 2.0;
}

CoverageRegion coverage_region(const LowerCodebook& cb, int ring, int angle) {
  const auto& thetas = cb.grid.thetas;
  const auto& kappas = cb.grid.ring_kappas;
  const int n_r = static_cast<int>(kappas.size());
  const int n_th = static_cast<int>(thetas.size());
  if (ring < 0 || ring >= n_r || angle < 0 || angle >= n_th)
    throw std::out_of_range("coverage_region: bad cell index");

  CoverageRegion c;
  c.theta_lo = angle == 0 ? -1.0 : (thetas[angle - 1] + thetas[angle]) / 2.0;
  c.theta_hi = angle == n_th - 1 ? 1.0 : (thetas[angle] + thetas[angle + 1]) / 2.0;
  c.kappa_lo = ring == 0 ? 0.0 : (kappas[ring - 1] + kappas[ring]) / 2.0;
  c.kappa_hi = ring == n_r - 1 ? cb.cfg.kappa_max()
                               : (kappas[ring] + kappas[ring + 1]) / 2.0;
  return c;
}

double min_gain(const LowerCodebook& cb, int ring, int angle, bool use_direct_sum) {
  const CoverageRegion c = coverage_region(cb, ring, angle);
  const PolarPoint& steer = cb.point(ring, angle);
  double lo = 1.0;
  const double th[2] = {c.theta_lo, c.theta_hi};
  const double ka[2] = {c.kappa_lo, c.kappa_hi};
  for (double t : th)
    for (double k : ka) {
      const PolarPoint corner = PolarPoint::from_curvature(t, k);
      const double g = use_direct_sum
                           ? beam_gain(cb.cfg, cb.codeword(ring, angle), corner,
                                       GainModel::Quadratic)
                           : lemma1_gain(cb.cfg, steer, corner);
      lo = std::min(lo, g);
    }
  return lo;
}

LowerCodebook make_lower_codebook(const ArrayConfig& cfg,
                                  const LowerCodebookParams& params) {
  LowerCodebook cb;
  cb.cfg = cfg;
  cb.params = params;
  cb.grid = sample_steering_points(cfg, params.n_theta, params.delta);
  cb.params.n_r = static_cast<int>(cb.grid.ring_kappas.size());
  cb.codewords.reserve(cb.grid.points.size());
  for (const auto& p : cb.grid.points)
    cb.codewords.push_back(steering_vector(cfg, p, GainModel::Quadratic));
  return cb;
}

namespace {

double codebook_min_gain(const LowerCodebook& cb) {
  double lo = 1.0;
  const int n_r = cb.params.n_r;
  const int n_th = cb.params.n_theta;
  // corner gains repeat across columns; one column plus both theta edges
  // is exhaustive, but the full sweep is cheap enough to keep literal
  for (int ring = 0; ring < n_r; ++ring) {
    lo = std::min(lo, min_gain(cb, ring, 0));
    lo = std::min(lo, min_gain(cb, ring, n_th / 2));
    lo = std::min(lo, min_gain(cb, ring, n_th - 1));
  }
  return lo;
}

}  // namespace

LowerCodebook make_calibrated_codebook(const ArrayConfig& cfg, int n_theta, int n_r) {
  if (n_theta < 1 || n_r < 1)
    throw std::invalid_argument("make_calibrated_codebook: bad grid size");
  const double kappa_max = cfg.kappa_max();
  // Rings span the whole curvature range end to end: the innermost ring sits
  // on the Fresnel boundary itself, so every cell is at most half a ring
  // spacing away from its steering point and the worst-case corner is the
  // same in every ring.
  const double delta =
      n_r == 1 ? 0.5 / kappa_max  // sentinel below the first finite ring
               : (n_r - 1) / kappa_max;
  LowerCodebookParams params;
  params.rho = 0.0;
  params.delta = delta;
  params.n_theta = n_theta;
  params.n_r = n_r;
  return make_lower_codebook(cfg, params);
}

LowerCodebook build_lower_codebook(const ArrayConfig& cfg, double rho) {
  if (!(rho > 0.0 && rho < 1.0))
    throw std::invalid_argument("build_lower_codebook: rho must lie in (0, 1)");

  constexpr int kMaxRings = 64;
  constexpr int kMaxThetaDoublings = 6;

  int n_theta = 1;
  while (n_theta < cfg.n_w) n_theta *= 2;

  for (int t = 0; t <= kMaxThetaDoublings; ++t, n_theta *= 2) {
    const double b = 2.0 * cfg.d / cfg.lambda / n_theta;  // corner angular offset
    // the far-field ring corner gain is the angular ceiling; if it misses
    // rho no ring count can help at this n_theta
    if (dirichlet_gain(cfg.n_w, b) < rho) continue;

    for (int n_r = 1; n_r <= kMaxRings; ++n_r) {
      LowerCodebook cb = make_calibrated_codebook(cfg, n_theta, n_r);
      cb.params.rho = rho;
      if (cb.params.n_r != n_r) continue;  // truncation disagreed with target
      if (codebook_min_gain(cb) >= rho) return cb;
    }
  }
  throw std::runtime_error(
      "build_lower_codebook: schedule exhausted; rho = " + std::to_string(rho) +
      " is not attainable with the configured grid sizes");
}

LowerCodebook make_far_field_codebook(const ArrayConfig& cfg, int n_theta, bool dft) {
  LowerCodebook cb;
  cb.cfg = cfg;
  cb.params.rho = 0.0;
  cb.params.delta = 0.5 / cfg.kappa_max();
  if (dft) n_theta = cfg.n_w;
  cb.params.n_theta = n_theta;
  cb.params.n_r = 1;
  cb.grid.ring_kappas.push_back(0.0);
  cb.grid.thetas.resize(n_theta);
  for (int k = 1; k <= n_theta; ++k) {
    cb.grid.thetas[k - 1] = dft ? -1.0 + 2.0 * (k - 1) / n_theta
                                : -1.0 + (2.0 * k - 1.0) / n_theta;
    cb.grid.points.push_back(PolarPoint::far_field(cb.grid.thetas[k - 1]));
    cb.codewords.push_back(
        steering_vector(cfg, cb.grid.points.back(), GainModel::Quadratic));
  }
  return cb;
}

}  // namespace nfcb
