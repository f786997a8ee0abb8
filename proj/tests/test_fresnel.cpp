#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nfcb/fresnel.hpp"
#include "oracles.hpp"

using namespace nfcb;

namespace {
const ArrayConfig kTableI = ArrayConfig::make(256, 40e9);
}

TEST_CASE("Fresnel integrals at pinned points") {
  CHECK(fresnel_c(0.0) == 0.0);
  CHECK(fresnel_s(0.0) == 0.0);
  // frozen from the quadrature oracle
  CHECK(fresnel_c(1.0) == doctest::Approx(0.77989340037682).epsilon(1e-8));
  CHECK(fresnel_s(1.0) == doctest::Approx(0.43825914739035).epsilon(1e-8));
  CHECK(fresnel_c(2.0) == doctest::Approx(0.48825340607534).epsilon(1e-8));
  CHECK(fresnel_s(2.0) == doctest::Approx(0.34341567836369).epsilon(1e-8));
  // large-argument limit with the leading 1/(pi x) auxiliary correction
  CHECK(std::fabs(fresnel_c(50.0) - oracle::fresnel_c(50.0)) < 1e-6);
  CHECK(std::fabs(fresnel_s(50.0) - oracle::fresnel_s(50.0)) < 1e-6);
}

TEST_CASE("Fresnel integrals track the quadrature oracle across the range") {
  oracle::Rng rng(11);
  std::vector<double> xs;
  for (int i = 0; i < 300; ++i) xs.push_back(rng.range(0.0, 50.0));
  std::sort(xs.begin(), xs.end());
  const auto table = oracle::fresnel_table(xs);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    CHECK(std::fabs(fresnel_c(xs[i]) - table.c[i]) < 1e-8);
    CHECK(std::fabs(fresnel_s(xs[i]) - table.s[i]) < 1e-8);
  }
}

TEST_CASE("odd symmetry holds exactly") {
  for (double x : {0.3, 1.1, 1.6, 2.5, 7.0, 31.0}) {
    CHECK(fresnel_c(-x) == -fresnel_c(x));
    CHECK(fresnel_s(-x) == -fresnel_s(x));
  }
}

TEST_CASE("closed-form gain: degenerate cases") {
  const PolarPoint p = PolarPoint::from_distance(0.25, 30.0);
  CHECK(lemma1_gain(kTableI, p, p) == doctest::Approx(1.0).epsilon(1e-12));

  // same ring, angular offset 2/n_w: the Dirichlet zero
  const PolarPoint q = PolarPoint::from_curvature(0.25 + 2.0 / 256, p.kappa);
  CHECK(lemma1_gain(kTableI, p, q) < 1e-9);
}

TEST_CASE("closed form matches the direct summation oracle") {
  const PolarPoint steer = PolarPoint::from_distance(0.0, 10.0);
  const PolarPoint eval = PolarPoint::from_distance(0.05, 25.0);
  const auto w = steering_vector(kTableI, steer, GainModel::Quadratic);
  const double direct =
      oracle::quadratic_gain(256, kTableI.d, kTableI.lambda, w.weights, eval.theta, eval.kappa);
  CHECK(std::fabs(lemma1_gain(kTableI, steer, eval) - direct) < 0.02);
}

TEST_CASE("approximation fidelity over the polar domain") {
  oracle::Rng rng(5);
  const double kappa_max = kTableI.kappa_max();
  std::vector<double> errs;
  for (int trial = 0; trial < 40; ++trial) {
    const PolarPoint steer = PolarPoint::from_curvature(rng.range(-0.9, 0.9),
                                                        rng.range(0.0, kappa_max));
    const auto w = steering_vector(kTableI, steer, GainModel::Quadratic);
    for (int j = 0; j < 25; ++j) {
      const PolarPoint eval = PolarPoint::from_curvature(rng.range(-0.9, 0.9),
                                                         rng.range(0.0, kappa_max));
      const double direct = oracle::quadratic_gain(256, kTableI.d, kTableI.lambda,
                                                   w.weights, eval.theta, eval.kappa);
      errs.push_back(std::fabs(lemma1_gain(kTableI, steer, eval) - direct));
    }
  }
  std::sort(errs.begin(), errs.end());
  CHECK(errs.back() <= 0.03);
  CHECK(errs[errs.size() / 2] <= 0.01);
}

TEST_CASE("monotone in |b| over the main lobe, symmetric in signs") {
  const double kappa_max = kTableI.kappa_max();
  for (double dk : {0.1 * kappa_max, 0.4 * kappa_max, 0.8 * kappa_max}) {
    const PolarPoint steer = PolarPoint::from_curvature(0.0, dk);
    double prev = 2.0;
    for (int i = 0; i <= 40; ++i) {
      const double b = 2.0 / 256 * i / 40.0;
      const double g = lemma1_gain(kTableI, steer, PolarPoint::far_field(b));
      CHECK(g <= prev + 1e-9);
      prev = g;

      // modulus is even in b and in the sign of a
      const double gm = lemma1_gain(kTableI, steer, PolarPoint::far_field(-b));
      CHECK(g == doctest::Approx(gm).epsilon(1e-12));
      const double gswap =
          lemma1_gain(kTableI, PolarPoint::far_field(0.0),
                      PolarPoint::from_curvature(b, dk));
      CHECK(g == doctest::Approx(gswap).epsilon(1e-9));
    }
  }
}
