#include "nfcb/fresnel.hpp"

#include <array>
#include <cmath>
#include <numbers>

namespace nfcb {

namespace {

constexpr double kPi = std::numbers::pi;

// Three-branch evaluation, each piece good to ~1e-11 absolute or better:
//   |x| <= 2 : Taylor series with coefficients generated by recurrence
//   2 < x < 4: Gauss-Legendre quadrature from the x = 2 anchor
//   x >= 4   : auxiliary functions f, g from the asymptotic expansion,
//              truncated adaptively at the smallest term
// The popular 12-term fitted auxiliary coefficients are only printed to
// nine digits and miss the 1e-8 contract near the switch point, hence the
// quadrature bridge.

void series_cs(double x, double* c_out, double* s_out) {
  const double w = kPi / 2.0 * x * x;
  const double w2 = w * w;
  // C: sum (-1)^n w^(2n) / ((2n)! (4n+1)) * x
  // S: sum (-1)^n w^(2n+1)/((2n+1)! (4n+3)) * x
  double uc = 1.0, us = w;
  double c = uc, s = us / 3.0;
  for (int n = 0; n < 40; ++n) {
    uc *= -w2 / ((2.0 * n + 1.0) * (2.0 * n + 2.0));
    us *= -w2 / ((2.0 * n + 2.0) * (2.0 * n + 3.0));
    const double tc = uc / (4.0 * n + 5.0);
    const double ts = us / (4.0 * n + 7.0);
    c += tc;
    s += ts;
    if (std::fabs(tc) < 1e-17 && std::fabs(ts) < 1e-17) break;
  }
  *c_out = c * x;
  *s_out = s * x;
}

struct GaussLegendre {
  static constexpr int kOrder = 40;
  std::array<double, kOrder> node, weight;

  GaussLegendre() {
    // roots of P_40 by Newton iteration from the Chebyshev initial guess
    for (int i = 0; i < kOrder; ++i) {
      double z = std::cos(kPi * (i + 0.75) / (kOrder + 0.5));
      double pp = 0.0;
      for (int it = 0; it < 100; ++it) {
        double p0 = 1.0, p1 = 0.0;
        for (int j = 0; j < kOrder; ++j) {
          const double p2 = p1;
          p1 = p0;
          p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
        }
        pp = kOrder * (z * p0 - p1) / (z * z - 1.0);
        const double dz = p0 / pp;
        z -= dz;
        if (std::fabs(dz) < 1e-15) break;
      }
      node[i] = z;
      weight[i] = 2.0 / ((1.0 - z * z) * pp * pp);
    }
  }
};

void bridge_cs(double x, double* c_out, double* s_out) {
  static const GaussLegendre gl;
  static const auto anchor = [] {
    std::array<double, 2> a;
    series_cs(2.0, &a[0], &a[1]);
    return a;
  }();
  const double mid = 0.5 * (x + 2.0);
  const double half = 0.5 * (x - 2.0);
  double c = anchor[0], s = anchor[1];
  for (int i = 0; i < GaussLegendre::kOrder; ++i) {
    const double t = mid + half * gl.node[i];
    const double arg = kPi / 2.0 * t * t;
    c += half * gl.weight[i] * std::cos(arg);
    s += half * gl.weight[i] * std::sin(arg);
  }
  *c_out = c;
  *s_out = s;
}

void asymptotic_cs(double x, double* c_out, double* s_out) {
  // f(x) ~ 1/(pi x)   sum (-1)^m (4m-1)!! / (pi x^2)^(2m)
  // g(x) ~ 1/(pi x^2) sum (-1)^m (4m+1)!! / (pi x^2)^(2m+1) * x ... i.e.
  // both series in u = 1/(pi x^2)^2, truncated where the terms turn
  const double pix2 = kPi * x * x;
  const double u = 1.0 / (pix2 * pix2);
  double tf = 1.0;         // (4m-1)!! u^m
  double tg = 1.0 / pix2;  // (4m+1)!! u^m / (pi x^2)
  double f = tf, g = tg;
  double sign = -1.0;
  for (int m = 1; m < 60; ++m) {
    const double nf = tf * (4.0 * m - 3.0) * (4.0 * m - 1.0) * u;
    const double ng = tg * (4.0 * m - 1.0) * (4.0 * m + 1.0) * u;
    if (nf >= tf || ng >= tg) break;  // divergence point of the expansion
    tf = nf;
    tg = ng;
    f += sign * tf;
    g += sign * tg;
    sign = -sign;
    if (tf < 1e-18 && tg < 1e-18) break;
  }
  f /= kPi * x;
  g /= kPi * x;
  const double arg = kPi / 2.0 * x * x;
  const double sa = std::sin(arg);
  const double ca = std::cos(arg);
  *c_out = 0.5 + f * sa - g * ca;
  *s_out = 0.5 - f * ca - g * sa;
}

void fresnel_cs(double x0, double* c_out, double* s_out) {
  const double x = std::fabs(x0);
  if (x <= 2.0)
    series_cs(x, c_out, s_out);
  else if (x < 4.0)
    bridge_cs(x, c_out, s_out);
  else
    asymptotic_cs(x, c_out, s_out);
  if (x0 < 0.0) {
    *c_out = -*c_out;
    *s_out = -*s_out;
  }
}

// Below this value of sqrt(2|a|) n_w the 1/(2 gamma2) factor is ill-posed
// and the Dirichlet limit takes over; branches agree to >= 8 digits here.
constexpr double kDegenerateThreshold = 1e-6;

}  // namespace

double fresnel_c(double x) {
  double c, s;
  fresnel_cs(x, &c, &s);
  return c;
}

double fresnel_s(double x) {
  double c, s;
  fresnel_cs(x, &c, &s);
  return s;
}

Lemma1Params Lemma1Params::compute(const ArrayConfig& cfg, const PolarPoint& steer,
                                   const PolarPoint& eval) {
  Lemma1Params p;
  p.a = cfg.d * cfg.d / cfg.lambda * (steer.kappa - eval.kappa);
  p.b = 2.0 * cfg.d / cfg.lambda * (eval.theta - steer.theta);
  // |sum| is 2-periodic in b: shifting b by 2 scales every element term by
  // e^{j pi (2 delta_i)}, a common unit factor since the 2 delta_i are
  // integers of fixed parity. The integral form is not periodic, so fold
  // into [-1, 1] to keep the grating-lobe region honest.
  p.b -= 2.0 * std::round(p.b / 2.0);
  const double root = std::sqrt(2.0 * std::fabs(p.a));
  if (root * cfg.n_w < kDegenerateThreshold) {
    p.degenerate = true;
  } else {
    p.gamma1 = p.b / root;
    p.gamma2 = root * cfg.n_w / 2.0;
  }
  return p;
}

double dirichlet_gain(int n, double b) {
  const double half_pi_b = std::numbers::pi * b / 2.0;
  const double den = n * std::sin(half_pi_b);
  if (std::fabs(den) < 1e-14) return 1.0;
  return std::fabs(std::sin(n * half_pi_b) / den);
}

double lemma1_gain(const ArrayConfig& cfg, const PolarPoint& steer,
                   const PolarPoint& eval) {
  const auto p = Lemma1Params::compute(cfg, steer, eval);
  if (p.degenerate) return dirichlet_gain(cfg.n_w, p.b);
  double c_hi, s_hi, c_lo, s_lo;
  fresnel_cs(p.gamma1 + p.gamma2, &c_hi, &s_hi);
  fresnel_cs(p.gamma1 - p.gamma2, &c_lo, &s_lo);
  const double re = c_hi - c_lo;
  const double im = s_hi - s_lo;
  // a < 0 yields the conjugate integral, identical modulus
  return std::sqrt(re * re + im * im) / (2.0 * p.gamma2);
}

}  // namespace nfcb
