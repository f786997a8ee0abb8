#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "nfcb/fresnel.hpp"
#include "nfcb/lower_codebook.hpp"
#include "oracles.hpp"

using namespace nfcb;

namespace {
const ArrayConfig kTableI = ArrayConfig::make(256, 40e9);
}

TEST_CASE("steering-point sampling rule") {
  const auto grid = sample_steering_points(kTableI, 512, 4.5 / kTableI.kappa_max());
  CHECK(grid.thetas.front() == doctest::Approx(-1.0 + 1.0 / 512).epsilon(1e-15));
  CHECK(grid.thetas.back() == doctest::Approx(1.0 - 1.0 / 512).epsilon(1e-15));
  CHECK(std::is_sorted(grid.thetas.begin(), grid.thetas.end()));

  // ring 1 is the far-field ring
  CHECK(grid.ring_kappas[0] == 0.0);
  for (int a = 0; a < 512; ++a) CHECK(grid.points[a].kappa == 0.0);

  // rings 2, 3 at any column have distances in ratio 2:1
  const int n_th = 512;
  const double r2 = grid.points[1 * n_th + 256].r;
  const double r3 = grid.points[2 * n_th + 256].r;
  CHECK(r2 / r3 == doctest::Approx(2.0).epsilon(1e-12));

  CHECK_THROWS(sample_steering_points(kTableI, 0, 1.0));
  CHECK_THROWS(sample_steering_points(kTableI, 16, -1.0));
}

TEST_CASE("boundary points between adjacent steering points") {
  const auto p1 = PolarPoint::from_curvature(0.2, 0.1);
  const auto p2 = PolarPoint::from_curvature(0.4, 0.1);
  CHECK(boundary_theta(p1, p2) == doctest::Approx(0.3));

  const auto q1 = PolarPoint::from_distance(0.0, 10.0);
  const auto q2 = PolarPoint::from_distance(0.0, 30.0);
  CHECK(boundary_kappa(q1, q2) == doctest::Approx(1.0 / 15.0));

  CHECK(boundary_theta(p1, p1) == doctest::Approx(p1.theta));
  CHECK(boundary_kappa(q1, q1) == doctest::Approx(q1.kappa));

  CHECK_THROWS(boundary_theta(p1, PolarPoint::from_curvature(0.3, 0.25)));
  CHECK_THROWS(boundary_kappa(p1, p2));
}

TEST_CASE("coverage regions tile the polar rectangle exactly") {
  const auto cb = make_calibrated_codebook(kTableI, 64, 4);
  const double kappa_max = kTableI.kappa_max();

  // corner cell extends to the domain edges
  const auto corner = coverage_region(cb, 0, 0);
  CHECK(corner.theta_lo == -1.0);
  CHECK(corner.kappa_lo == 0.0);

  // interval sweep: within a column the kappa intervals chain with shared
  // endpoints from 0 to kappa_max; across columns the theta intervals chain
  for (int a = 0; a < cb.params.n_theta; ++a) {
    double cursor = 0.0;
    for (int ring = 0; ring < cb.params.n_r; ++ring) {
      const auto c = coverage_region(cb, ring, a);
      CHECK(c.kappa_lo == cursor);  // exact shared endpoint, no gap/overlap
      CHECK(c.kappa_lo < c.kappa_hi);
      cursor = c.kappa_hi;
    }
    CHECK(cursor == kappa_max);
  }
  double cursor = -1.0;
  for (int a = 0; a < cb.params.n_theta; ++a) {
    const auto c = coverage_region(cb, 0, a);
    CHECK(c.theta_lo == cursor);
    CHECK(c.theta_lo < c.theta_hi);
    cursor = c.theta_hi;
  }
  CHECK(cursor == 1.0);
}

TEST_CASE("adjacent codewords balance at the shared boundary") {
  const auto cb = make_calibrated_codebook(kTableI, 512, 5);
  const int ring = 2, a = 200;
  const double boundary = boundary_theta(cb.point(ring, a), cb.point(ring, a + 1));
  const auto at_boundary = PolarPoint::from_curvature(boundary, cb.grid.ring_kappas[ring]);
  const double g1 = lemma1_gain(cb.cfg, cb.point(ring, a), at_boundary);
  const double g2 = lemma1_gain(cb.cfg, cb.point(ring, a + 1), at_boundary);
  CHECK(std::fabs(g1 - g2) < 1e-6);
}

TEST_CASE("reference operating point: (512, 5) at rho = 0.64") {
  const auto cb = build_lower_codebook(kTableI, 0.64);
  CHECK(cb.params.n_theta == 512);
  CHECK(cb.params.n_r == 5);

  double lo = 1.0;
  for (int ring = 0; ring < cb.params.n_r; ++ring)
    for (int a : {0, 128, 256, 511}) lo = std::min(lo, min_gain(cb, ring, a));
  MESSAGE("min corner gain: ", lo);
  CHECK(lo >= 0.64 - 0.01);

  // closed-form and direct-summation corner evaluations agree
  CHECK(min_gain(cb, 2, 100) == doctest::Approx(min_gain(cb, 2, 100, true)).epsilon(0.03));
}

TEST_CASE("loose threshold collapses to the far-field ring") {
  const auto cb = build_lower_codebook(kTableI, 0.05);
  CHECK(cb.params.n_r == 1);
  CHECK(cb.params.n_theta == 256);
}

TEST_CASE("toy aperture needs a single ring") {
  // an 8-element beam is about as wide in curvature as the whole toy
  // Fresnel region, so one ring already covers it at a moderate threshold
  const auto toy = ArrayConfig::make(8, 40e9);
  const auto cb = build_lower_codebook(toy, 0.5);
  CHECK(cb.params.n_theta == 8);
  CHECK(cb.params.n_r == 1);
}

TEST_CASE("every returned codebook meets its threshold") {
  for (double rho : {0.3, 0.5, 0.64}) {
    const auto cb = build_lower_codebook(kTableI, rho);
    for (int ring = 0; ring < cb.params.n_r; ++ring)
      for (int a : {0, cb.params.n_theta / 2, cb.params.n_theta - 1})
        CHECK(min_gain(cb, ring, a) >= rho - 1e-9);
  }
}

TEST_CASE("containing cell is the best codeword for random points") {
  const auto cb = make_calibrated_codebook(kTableI, 256, 4);
  oracle::Rng rng(17);
  const double kappa_max = kTableI.kappa_max();
  int hits = 0;
  const int trials = 200;
  for (int t = 0; t < trials; ++t) {
    const auto p = PolarPoint::from_curvature(rng.range(-0.999, 0.999),
                                              rng.range(0.0, kappa_max));
    // cell containing p
    int cell = -1;
    for (int i = 0; i < cb.size(); ++i) {
      const auto c = coverage_region(cb, i / cb.params.n_theta, i % cb.params.n_theta);
      if (p.theta >= c.theta_lo && p.theta < c.theta_hi && p.kappa >= c.kappa_lo &&
          p.kappa < c.kappa_hi) {
        cell = i;
        break;
      }
    }
    REQUIRE(cell >= 0);
    int best = 0;
    double best_gain = -1.0;
    for (int i = 0; i < cb.size(); ++i) {
      const double g = oracle::quadratic_gain(256, cb.cfg.d, cb.cfg.lambda,
                                              cb.codewords[i].weights, p.theta, p.kappa);
      if (g > best_gain) {
        best_gain = g;
        best = i;
      }
    }
    if (best == cell) ++hits;
  }
  MESSAGE("containment/argmax agreement: ", hits, "/", trials);
  CHECK(hits >= trials * 95 / 100);
}
