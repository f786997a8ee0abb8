#pragma once

#include "nfcb/array.hpp"

namespace nfcb {

/// Fresnel cosine integral C(x) = int_0^x cos(pi/2 t^2) dt.
/// Absolute error below 1e-8 on the whole real line; odd in x.
double fresnel_c(double x);

/// Fresnel sine integral S(x) = int_0^x sin(pi/2 t^2) dt.
double fresnel_s(double x);

/// Quadratic- and linear-phase coefficients of the steering-beam gain
/// closed form, for steering point p and evaluation point q.
struct Lemma1Params {
  double a = 0.0;  // (d^2/lambda)(kappa_p - kappa_q)
  double b = 0.0;  // (2d/lambda)(theta_q - theta_p)
  double gamma1 = 0.0;  // b / sqrt(2|a|), 0 when degenerate
  double gamma2 = 0.0;  // sqrt(2|a|) n_w / 2
  bool degenerate = false;  // sqrt(2|a|) n_w below threshold -> Dirichlet branch

  static Lemma1Params compute(const ArrayConfig& cfg, const PolarPoint& steer,
                              const PolarPoint& eval);
};

/// |sin(n pi b / 2) / (n sin(pi b / 2))|, with the b -> 0 limit 1.
double dirichlet_gain(int n, double b);

/// Closed-form steering-beam gain: Fresnel-integral expression away from
/// a = 0, Dirichlet kernel on the degenerate ray.
double lemma1_gain(const ArrayConfig& cfg, const PolarPoint& steer,
                   const PolarPoint& eval);

}  // namespace nfcb
