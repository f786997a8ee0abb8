#include "nfcb/array.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace nfcb {

ArrayConfig ArrayConfig::make(int n_w, double f_c, double spacing) {
  if (n_w < 1) throw std::invalid_argument("ArrayConfig: n_w must be >= 1");
  if (f_c <= 0.0) throw std::invalid_argument("ArrayConfig: f_c must be positive");
  ArrayConfig cfg;
  cfg.n_w = n_w;
  cfg.f_c = f_c;
  cfg.lambda = kSpeedOfLight / f_c;
  cfg.d = spacing > 0.0 ? spacing : cfg.lambda / 2.0;
  return cfg;
}

double ArrayConfig::fresnel_distance() const {
  const double D = aperture();
  return 0.5 * std::sqrt(D * D * D / lambda);
}

PolarPoint PolarPoint::from_distance(double theta, double r) {
  if (!(theta >= -1.0 && theta <= 1.0))
    throw std::invalid_argument("PolarPoint: theta must lie in [-1, 1]");
  if (!(r > 0.0)) throw std::invalid_argument("PolarPoint: r must be positive");
  PolarPoint p;
  p.theta = theta;
  p.r = r;
  p.kappa = std::isinf(r) ? 0.0 : (1.0 - theta * theta) / r;
  return p;
}

PolarPoint PolarPoint::from_curvature(double theta, double kappa) {
  if (!(theta >= -1.0 && theta <= 1.0))
    throw std::invalid_argument("PolarPoint: theta must lie in [-1, 1]");
  if (!(kappa >= 0.0)) throw std::invalid_argument("PolarPoint: kappa must be >= 0");
  PolarPoint p;
  p.theta = theta;
  p.kappa = kappa;
  p.r = kappa > 0.0 ? (1.0 - theta * theta) / kappa
                    : std::numeric_limits<double>::infinity();
  return p;
}

int BeamVector::active_count() const {
  int m = 0;
  for (auto a : active) m += a ? 1 : 0;
  return m;
}

std::vector<double> element_offsets(const ArrayConfig& cfg) {
  std::vector<double> offsets(cfg.n_w);
  for (int i = 1; i <= cfg.n_w; ++i)
    offsets[i - 1] = (2.0 * i - cfg.n_w - 1.0) / 2.0;
  return offsets;
}

namespace {

// Phase of element with offset delta under the quadratic model, Eq. (3)
// sign convention: +2pi/lambda * d * theta * delta - 2pi/lambda * d^2 delta^2 kappa / 2.
inline double quadratic_phase(const ArrayConfig& cfg, double theta, double kappa,
                              double delta) {
  const double two_pi_over_lambda = 2.0 * std::numbers::pi / cfg.lambda;
  return two_pi_over_lambda * cfg.d * theta * delta -
         two_pi_over_lambda * cfg.d * cfg.d * delta * delta * kappa / 2.0;
}

}  // namespace

BeamVector steering_vector(const ArrayConfig& cfg, const PolarPoint& p, GainModel model) {
  if (!(p.r > 0.0)) throw std::invalid_argument("steering_vector: r must be positive");
  if (model == GainModel::Exact && std::isinf(p.r))
    throw std::invalid_argument("steering_vector: exact model requires finite r");

  BeamVector v;
  v.weights.resize(cfg.n_w);
  v.active.assign(cfg.n_w, 1);
  const double amp = 1.0 / std::sqrt(static_cast<double>(cfg.n_w));
  const double two_pi_over_lambda = 2.0 * std::numbers::pi / cfg.lambda;
  const auto offsets = element_offsets(cfg);

  if (model == GainModel::Exact) {
    for (int i = 0; i < cfg.n_w; ++i) {
      const double delta = offsets[i];
      const double r_i = std::sqrt(p.r * p.r + delta * delta * cfg.d * cfg.d -
                                   2.0 * p.r * p.theta * delta * cfg.d);
      v.weights[i] = std::polar(amp, -two_pi_over_lambda * (r_i - p.r));
    }
  } else {
    for (int i = 0; i < cfg.n_w; ++i)
      v.weights[i] = std::polar(amp, quadratic_phase(cfg, p.theta, p.kappa, offsets[i]));
  }
  return v;
}

std::vector<std::complex<double>> synthesize_channel(const ArrayConfig& cfg,
                                                     const ChannelRealization& ch) {
  if (ch.paths.empty()) throw std::invalid_argument("synthesize_channel: L must be >= 1");
  std::vector<std::complex<double>> h(cfg.n_w, {0.0, 0.0});
  for (const auto& path : ch.paths) {
    const BeamVector a = steering_vector(cfg, path.location, GainModel::Exact);
    for (int i = 0; i < cfg.n_w; ++i) h[i] += path.alpha * a.weights[i];
  }
  return h;
}

double beam_gain(const ArrayConfig& cfg, const BeamVector& w, const PolarPoint& p,
                 GainModel model) {
  const BeamVector a = steering_vector(cfg, p, model);
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < cfg.n_w; ++i)
    if (w.active[i]) acc += std::conj(w.weights[i]) * a.weights[i];
  return std::abs(acc);
}

double channel_gain(const BeamVector& w, const std::vector<std::complex<double>>& h) {
  if (static_cast<int>(h.size()) != w.size())
    throw std::invalid_argument("channel_gain: dimension mismatch");
  std::complex<double> acc{0.0, 0.0};
  for (int i = 0; i < w.size(); ++i)
    if (w.active[i]) acc += std::conj(w.weights[i]) * h[i];
  return std::abs(acc);
}

}  // namespace nfcb
