// End-to-end acceptance gate: one pass/fail line per criterion, nonzero
// exit when any fails. Tolerances are pinned here, not configurable.
#include <algorithm>
#include <cmath>
#include <cstdio>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "nfcb/fresnel.hpp"
#include "nfcb/lower_codebook.hpp"
#include "nfcb/search.hpp"
#include "nfcb/sim.hpp"
#include "nfcb/transform.hpp"
#include "oracles.hpp"

using namespace nfcb;

namespace {

const ArrayConfig kTableI = ArrayConfig::make(256, 40e9);

int g_failures = 0;

void report(int criterion, bool ok, const std::string& detail) {
  std::printf("criterion %d: %s  (%s)\n", criterion, ok ? "PASS" : "FAIL",
              detail.c_str());
  std::fflush(stdout);
  if (!ok) ++g_failures;
}

std::string fmt(const char* pattern, double a, double b = 0.0, double c = 0.0,
                double d = 0.0) {
  char buf[256];
  std::snprintf(buf, sizeof buf, pattern, a, b, c, d);
  return buf;
}

// 1. Fresnel functions vs the quadrature oracle: 1e4 points, |x| <= 50.
void criterion_fresnel() {
  oracle::Rng rng(101);
  std::vector<double> xs;
  for (int i = 0; i < 10000; ++i) xs.push_back(rng.range(0.0, 50.0));
  std::sort(xs.begin(), xs.end());
  const auto table = oracle::fresnel_table(xs);
  double worst = 0.0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    // odd symmetry makes the negative half identical up to sign
    worst = std::max(worst, std::fabs(fresnel_c(xs[i]) - table.c[i]));
    worst = std::max(worst, std::fabs(fresnel_s(xs[i]) - table.s[i]));
    worst = std::max(worst, std::fabs(fresnel_c(-xs[i]) + table.c[i]));
    worst = std::max(worst, std::fabs(fresnel_s(-xs[i]) + table.s[i]));
  }
  report(1, worst <= 1e-8, fmt("max integral error %.3g, tolerance 1e-8", worst));
}

// 2. Closed-form gain vs direct quadratic summation on a dense grid.
void criterion_gain_fidelity() {
  oracle::Rng rng(103);
  const double kappa_max = kTableI.kappa_max();
  std::vector<double> errs;
  errs.reserve(20 * 200 * 200);
  for (int s = 0; s < 20; ++s) {
    const PolarPoint steer = PolarPoint::from_curvature(rng.range(-0.95, 0.95),
                                                        rng.range(0.0, kappa_max));
    const auto w = steering_vector(kTableI, steer, GainModel::Quadratic);
    for (int i = 0; i < 200; ++i) {
      const double theta = -1.0 + 2.0 * (i + 0.5) / 200.0;
      for (int j = 0; j < 200; ++j) {
        const double kappa = kappa_max * (j + 0.5) / 200.0;
        const double direct = oracle::quadratic_gain(256, kTableI.d, kTableI.lambda,
                                                     w.weights, theta, kappa);
        const PolarPoint eval = PolarPoint::from_curvature(theta, kappa);
        errs.push_back(std::fabs(lemma1_gain(kTableI, steer, eval) - direct));
      }
    }
  }
  std::sort(errs.begin(), errs.end());
  const double worst = errs.back();
  const double median = errs[errs.size() / 2];
  report(2, worst <= 0.03 && median <= 0.01,
         fmt("max %.4f (<= 0.03), median %.4f (<= 0.01)", worst, median));
}

// 3. Rotation / relocation gain-translation identities.
void criterion_transform_identities() {
  oracle::Rng rng(107);
  const double kappa_max = kTableI.kappa_max();
  double worst = 0.0;
  for (int t = 0; t < 1000; ++t) {
    BeamVector w;
    w.weights.resize(256);
    w.active.assign(256, 1);
    for (auto& c : w.weights) c = std::polar(1.0 / 16.0, rng.range(-3.0, 3.0));

    const double theta = rng.range(-0.45, 0.45);
    const double kappa = rng.range(0.0, kappa_max);
    double lhs, rhs;
    if (t % 2 == 0) {
      const double dtheta = rng.range(-0.5, 0.5);
      lhs = oracle::quadratic_gain(256, kTableI.d, kTableI.lambda,
                                   rotate(kTableI, w, dtheta).weights, theta, kappa);
      rhs = oracle::quadratic_gain(256, kTableI.d, kTableI.lambda, w.weights,
                                   theta - dtheta, kappa);
    } else {
      const double delta_r = rng.range(6.0, 80.0) * (t % 4 == 1 ? 1.0 : -1.0);
      lhs = oracle::quadratic_gain(256, kTableI.d, kTableI.lambda,
                                   relocate(kTableI, w, delta_r).weights, theta, kappa);
      rhs = oracle::quadratic_gain(256, kTableI.d, kTableI.lambda, w.weights, theta,
                                   kappa - 1.0 / delta_r);
    }
    worst = std::max(worst, std::fabs(lhs - rhs));
  }
  report(3, worst <= 1e-10, fmt("max identity error %.3g, tolerance 1e-10", worst));
}

// 4. Reference operating point and its measured coverage floor.
void criterion_operating_point(const LowerCodebook& cb) {
  double floor = 1.0;
  for (int ring = 0; ring < cb.params.n_r; ++ring)
    for (int a = 0; a < cb.params.n_theta; ++a)
      floor = std::min(floor, min_gain(cb, ring, a));
  const bool ok = cb.params.n_theta == 512 && cb.params.n_r == 5 && floor >= 0.63;
  report(4, ok,
         fmt("grid %gx%g, min corner gain %.4f (>= 0.63)",
             static_cast<double>(cb.params.n_theta),
             static_cast<double>(cb.params.n_r), floor));
}

// 5. Coverage regions partition [-1,1] x [0, kappa_max] with exactly shared
// endpoints (interval chaining, no tolerance).
void criterion_tiling(const LowerCodebook& cb) {
  const double kappa_max = cb.cfg.kappa_max();
  bool ok = true;
  for (int a = 0; a < cb.params.n_theta && ok; ++a) {
    double cursor = 0.0;
    for (int ring = 0; ring < cb.params.n_r; ++ring) {
      const auto c = coverage_region(cb, ring, a);
      ok = ok && c.kappa_lo == cursor && c.kappa_lo < c.kappa_hi;
      cursor = c.kappa_hi;
    }
    ok = ok && cursor == kappa_max;
  }
  for (int ring = 0; ring < cb.params.n_r && ok; ++ring) {
    double cursor = -1.0;
    for (int a = 0; a < cb.params.n_theta; ++a) {
      const auto c = coverage_region(cb, ring, a);
      ok = ok && c.theta_lo == cursor && c.theta_lo < c.theta_hi;
      cursor = c.theta_hi;
    }
    ok = ok && cursor == 1.0;
  }
  report(5, ok, ok ? "exact partition, zero gaps/overlaps" : "gap or overlap found");
}

// 6. Exhaustive sweep cost at the reference codebook.
void criterion_step_count(const LowerCodebook& cb) {
  ChannelRealization ch;
  ch.paths.push_back({{1.0, 0.0}, PolarPoint::from_distance(0.31, 9.0)});
  const auto res = exhaustive_search(cb, synthesize_channel(cb.cfg, ch));
  report(6, res.steps == 2560, fmt("steps %g (expect 2560)",
                                   static_cast<double>(res.steps)));
}

// 7. Hierarchical search cost and accuracy ordering at n_u = 1e4.
void criterion_search_experiment() {
  SimConfig sim;
  sim.n_u = 10000;
  sim.seed = 1;
  const auto res = run_search_experiment(sim).doc["results"];

  const double steps_d = res["deact"]["mean_steps"].get<double>();
  const double steps_b = res["bmwss"]["mean_steps"].get<double>();
  const double steps_q = res["quadric"]["mean_steps"].get<double>();
  const double t1d = res["deact"]["top1"].get<double>();
  const double t3d = res["deact"]["top3"].get<double>();
  const bool ok = steps_d >= 13.0 && steps_d <= 28.0 && steps_b < 40.0 &&
                  steps_q < 40.0 && steps_d < 40.0 &&
                  t1d >= res["bmwss"]["top1"].get<double>() &&
                  t1d >= res["quadric"]["top1"].get<double>() &&
                  t3d >= res["bmwss"]["top3"].get<double>() &&
                  t3d >= res["quadric"]["top3"].get<double>();
  report(7, ok,
         fmt("mean steps deact %.2f [13,28] / bmwss %.2f / quadric %.2f; ", steps_d,
             steps_b, steps_q) +
             fmt("deact top1 %.3f top3 %.3f lead both", t1d, t3d));
}

// 8. Average / minimum gain lift over the baselines at n_u = 1e4.
void criterion_gain_experiment() {
  SimConfig sim;
  sim.n_u = 10000;
  sim.seed = 1;
  const auto res = run_gain_experiment(sim).doc["results"];
  const double avg_ff = res["proposed_vs_far_field"]["avg_gain_pct"].get<double>();
  const double min_ff = res["proposed_vs_far_field"]["min_gain_pct"].get<double>();
  const double avg_us = res["proposed_vs_undersampled"]["avg_gain_pct"].get<double>();
  const double min_us = res["proposed_vs_undersampled"]["min_gain_pct"].get<double>();
  const bool ok = avg_ff >= 10.0 && avg_ff <= 35.0 && min_ff >= 100.0 &&
                  avg_us > 0.0 && min_us > 0.0;
  report(8, ok,
         fmt("vs far field avg %+.2f%% [10,35], min %+.2f%% (>=100); ", avg_ff,
             min_ff) +
             fmt("vs under-sampled avg %+.2f%%, min %+.2f%% (both > 0)", avg_us,
                 min_us));
}

// 9. Reports are byte-identical regardless of worker count.
void criterion_determinism() {
  SimConfig sim;
  sim.n_u = 500;
  sim.seed = 7;
#ifdef _OPENMP
  const int prev = omp_get_max_threads();
  omp_set_num_threads(1);
#endif
  const std::string first = run_search_experiment(sim).doc.dump(2);
#ifdef _OPENMP
  omp_set_num_threads(2);
#endif
  const std::string second = run_search_experiment(sim).doc.dump(2);
#ifdef _OPENMP
  omp_set_num_threads(prev);
#endif
  report(9, first == second,
         first == second ? "byte-identical reports across worker counts"
                         : "reports differ between worker counts");
}

}  // namespace

int main() {
  criterion_fresnel();
  criterion_gain_fidelity();
  criterion_transform_identities();

  const LowerCodebook reference = build_lower_codebook(kTableI, 0.64);
  criterion_operating_point(reference);
  criterion_tiling(reference);
  criterion_step_count(reference);

  criterion_search_experiment();
  criterion_gain_experiment();
  criterion_determinism();

  if (g_failures > 0) {
    std::printf("%d criterion(s) failed\n", g_failures);
    return 1;
  }
  std::printf("all criteria passed\n");
  return 0;
}
