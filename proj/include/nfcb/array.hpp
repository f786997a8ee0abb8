#pragma once

#include <complex>
#include <cstdint>
#include <limits>
#include <vector>

namespace nfcb {

inline constexpr double kSpeedOfLight = 299792458.0;

/// Gain model used when evaluating array responses.
///   Exact:     per-element distances r_i = sqrt(r^2 + delta^2 d^2 - 2 r theta delta d)
///   Quadratic: second-order (Fresnel) expansion, parameterized by curvature kappa
enum class GainModel { Exact, Quadratic };

/// Amplitude normalization for codewords with deactivated elements.
enum class Normalization { ActiveCount, FullArray };

/// ULA geometry and carrier. Aperture and Fresnel distance are derived.
struct ArrayConfig {
  int n_w = 0;        // antenna count
  double f_c = 0.0;   // carrier frequency [Hz]
  double lambda = 0.0;  // wavelength [m]
  double d = 0.0;     // element spacing [m]

  // spacing <= 0 selects the default lambda/2
  static ArrayConfig make(int n_w, double f_c, double spacing = 0.0);

  double aperture() const { return static_cast<double>(n_w) * d; }
  double fresnel_distance() const;
  // largest curvature inside the Fresnel region, 1/r_min
  double kappa_max() const { return 1.0 / fresnel_distance(); }
};

/// A location / steering coordinate in the polar domain.
/// Internally all quadratic-model math runs on (theta, kappa); far field is
/// kappa == 0, never a floating-point infinity inside formulas.
struct PolarPoint {
  double theta = 0.0;  // directional cosine, in [-1, 1]
  double r = std::numeric_limits<double>::infinity();  // distance [m]
  double kappa = 0.0;  // curvature (1 - theta^2)/r [1/m]

  static PolarPoint from_distance(double theta, double r);
  static PolarPoint from_curvature(double theta, double kappa);
  static PolarPoint far_field(double theta) { return from_curvature(theta, 0.0); }

  bool is_far_field() const { return kappa == 0.0; }
};

/// Length-n_w complex weight vector under the per-element amplitude
/// constraint: active elements share a common modulus, inactive are exactly 0.
struct BeamVector {
  std::vector<std::complex<double>> weights;
  std::vector<std::uint8_t> active;

  int size() const { return static_cast<int>(weights.size()); }
  int active_count() const;
};

struct ChannelPath {
  std::complex<double> alpha;
  PolarPoint location;
};

struct ChannelRealization {
  std::vector<ChannelPath> paths;
};

/// Half-index element offsets delta_i = (2i - n_w - 1)/2, i = 1..n_w.
std::vector<double> element_offsets(const ArrayConfig& cfg);

/// Near-field steering vector at p under the chosen model.
/// Phase convention: exp(-j 2pi/lambda (r_i - r)).
/// Throws std::invalid_argument for r <= 0, or Exact with far-field p.
BeamVector steering_vector(const ArrayConfig& cfg, const PolarPoint& p, GainModel model);

/// h = sum_l alpha_l a(theta_l, r_l), exact-model steering vectors.
std::vector<std::complex<double>> synthesize_channel(const ArrayConfig& cfg,
                                                     const ChannelRealization& ch);

/// Normalized beam gain |w^H a(p)| under the chosen model. Result in [0, 1].
double beam_gain(const ArrayConfig& cfg, const BeamVector& w, const PolarPoint& p,
                 GainModel model);

/// |w^H h| for an arbitrary channel vector.
double channel_gain(const BeamVector& w, const std::vector<std::complex<double>>& h);

}  // namespace nfcb
