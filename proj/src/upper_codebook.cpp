#include "nfcb/upper_codebook.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "nfcb/transform.hpp"

namespace nfcb {

BeamVector deact_pattern(const ArrayConfig& cfg, int level, Normalization norm) {
  const int M = 1 << level;
  if (level < 1 || M > cfg.n_w)
    throw std::invalid_argument("deact_pattern: 2^level must lie in [2, n_w]");
  BeamVector w;
  w.weights.assign(cfg.n_w, {0.0, 0.0});
  w.active.assign(cfg.n_w, 0);
  const int start = (cfg.n_w - M) / 2;
  const double amp = norm == Normalization::ActiveCount
                         ? 1.0 / std::sqrt(static_cast<double>(M))
                         : 1.0 / std::sqrt(static_cast<double>(cfg.n_w));
  for (int i = start; i < start + M; ++i) {
    w.weights[i] = {amp, 0.0};
    w.active[i] = 1;
  }
  return w;
}

namespace {

double in_sector_min_gain(const ArrayConfig& cfg, const BeamVector& w, double half_width) {
  // interior of the target sector, guard band of one far-field beamwidth
  const double guard = 2.0 / cfg.n_w;
  const double lo = -half_width + guard;
  const double hi = half_width - guard;
  if (lo >= hi) return beam_gain(cfg, w, PolarPoint::far_field(0.0), GainModel::Quadratic);
  double worst = 1.0;
  const int n = 129;
  for (int i = 0; i < n; ++i) {
    const double theta = lo + (hi - lo) * i / (n - 1);
    worst = std::min(worst,
                     beam_gain(cfg, w, PolarPoint::far_field(theta), GainModel::Quadratic));
  }
  return worst;
}

}  // namespace

BeamVector bmwss_pattern(const ArrayConfig& cfg, int level) {
  const int width_div = 1 << level;  // sector width 2/width_div
  if (level < 1 || width_div > cfg.n_w)
    throw std::invalid_argument("bmwss_pattern: 2^level must lie in [2, n_w]");

  // S sub-arrays of size S * 2^level, S^2 * 2^level active elements total.
  // The sub-array count and the inter-sub-array quadratic phase are both
  // grid-searched for the best worst-case in-sector gain; S = 1 is the
  // plain deactivation beam, so the result never falls below it.
  const double half_width = 1.0 / width_div;
  BeamVector best = deact_pattern(cfg, level);
  double best_score = in_sector_min_gain(cfg, best, half_width);

  for (int S = 2; S * S * width_div <= cfg.n_w; S *= 2) {
    const int sub_len = S * width_div;
    const int active = S * sub_len;
    const int start = (cfg.n_w - active) / 2;
    const double amp = 1.0 / std::sqrt(static_cast<double>(active));
    const double sub_width = 2.0 / sub_len;  // cosine width of one sub-beam

    for (int bi = 0; bi <= 40; ++bi) {
      const double beta = 0.05 * bi;
      BeamVector w;
      w.weights.assign(cfg.n_w, {0.0, 0.0});
      w.active.assign(cfg.n_w, 0);
      for (int s = 0; s < S; ++s) {
        const double centered = s - (S - 1) / 2.0;
        const double psi = centered * sub_width;  // sub-beam steering offset
        const double phi = std::numbers::pi * beta * centered * centered;
        for (int j = 0; j < sub_len; ++j) {
          const int i = start + s * sub_len + j;
          const double local = j - (sub_len - 1) / 2.0;
          const double phase =
              2.0 * std::numbers::pi / cfg.lambda * cfg.d * psi * local + phi;
          w.weights[i] = std::polar(amp, phase);
          w.active[i] = 1;
        }
      }
      const double score = in_sector_min_gain(cfg, w, half_width);
      if (score > best_score) {
        best_score = score;
        best = w;
      }
    }
  }
  return best;
}

BeamVector quadric_pattern(const ArrayConfig& cfg, int level) {
  const int width_div = 1 << level;
  if (level < 1 || width_div > cfg.n_w)
    throw std::invalid_argument("quadric_pattern: 2^level must lie in [2, n_w]");
  const double W = 2.0 / width_div;
  const double a_q = W / (2.0 * cfg.n_w);  // stationary-phase width rule
  BeamVector w;
  w.weights.resize(cfg.n_w);
  w.active.assign(cfg.n_w, 1);
  const double amp = 1.0 / std::sqrt(static_cast<double>(cfg.n_w));
  const auto offsets = element_offsets(cfg);
  for (int i = 0; i < cfg.n_w; ++i)
    w.weights[i] = std::polar(amp, std::numbers::pi * a_q * offsets[i] * offsets[i]);
  return w;
}

BeamVector initial_pattern(const ArrayConfig& cfg, PatternKind kind, int level) {
  switch (kind) {
    case PatternKind::Deact:
      return deact_pattern(cfg, level);
    case PatternKind::BmwSS:
      return bmwss_pattern(cfg, level);
    case PatternKind::Quadric:
      return quadric_pattern(cfg, level);
  }
  throw std::invalid_argument("initial_pattern: unknown kind");
}

std::vector<double> ring_schedule(const ArrayConfig& cfg, const BeamVector& w_ori,
                                  double half_fraction) {
  const double kappa_max = cfg.kappa_max();
  const double g0 =
      beam_gain(cfg, w_ori, PolarPoint::from_curvature(0.0, 0.0), GainModel::Quadratic);
  if (!(g0 > 0.0))
    throw std::invalid_argument("ring_schedule: pattern has zero broadside gain");
  const double target = half_fraction * g0;

  auto profile = [&](double kappa) {
    return beam_gain(cfg, w_ori, PolarPoint::from_curvature(0.0, kappa),
                     GainModel::Quadratic);
  };

  // bracket the first crossing of the broadside kappa profile
  const int n_march = 256;
  double lo = 0.0, hi = -1.0;
  for (int i = 1; i <= n_march; ++i) {
    const double kappa = kappa_max * i / n_march;
    if (profile(kappa) < target) {
      hi = kappa;
      lo = kappa_max * (i - 1) / n_march;
      break;
    }
  }
  if (hi < 0.0) return {0.0};  // pattern wider in kappa than the whole region

  for (int it = 0; it < 60; ++it) {
    const double mid = 0.5 * (lo + hi);
    (profile(mid) >= target ? lo : hi) = mid;
  }
  // rings are one full width apart, so adjacent beams cross at the target
  // fraction exactly (the crossing sits half a spacing from either ring)
  const double dk = lo + hi;

  std::vector<double> schedule;
  for (double kappa = 0.0; kappa <= kappa_max; kappa += dk) schedule.push_back(kappa);
  return schedule;
}

namespace {

CoverageRegion level_cell_region(const std::vector<double>& kappas, int ring,
                                 double theta_center, double half_width,
                                 double kappa_max) {
  CoverageRegion c;
  c.theta_lo = theta_center - half_width;
  c.theta_hi = theta_center + half_width;
  const int n_r = static_cast<int>(kappas.size());
  c.kappa_lo = ring == 0 ? 0.0 : (kappas[ring - 1] + kappas[ring]) / 2.0;
  c.kappa_hi = ring == n_r - 1 ? kappa_max : (kappas[ring] + kappas[ring + 1]) / 2.0;
  return c;
}

bool regions_overlap(const CoverageRegion& a, const CoverageRegion& b) {
  return a.theta_lo < b.theta_hi && b.theta_lo < a.theta_hi &&
         a.kappa_lo < b.kappa_hi && b.kappa_lo < a.kappa_hi;
}

}  // namespace

HierarchicalCodebook build_hierarchy(const ArrayConfig& cfg, const HierarchyConfig& hcfg,
                                     const LowerCodebook& lower) {
  if (hcfg.n_lv < 2) throw std::invalid_argument("build_hierarchy: n_lv must be >= 2");
  if ((1 << (hcfg.n_lv - 1)) > cfg.n_w)
    throw std::invalid_argument("build_hierarchy: too many levels for n_w");

  HierarchicalCodebook hier;
  hier.cfg = cfg;
  hier.hcfg = hcfg;
  hier.lower = lower;
  const double kappa_max = cfg.kappa_max();

  for (int l = 1; l <= hcfg.n_lv - 1; ++l) {
    const BeamVector w_ori = initial_pattern(cfg, hcfg.pattern, l);
    const std::vector<double> kappas =
        ring_schedule(cfg, w_ori, hcfg.ring_gain_fraction);

    UpperLevel level;
    level.n_theta = 1 << l;
    level.ring_kappas = kappas;
    const double half_width = 1.0 / level.n_theta;

    for (int m = 0; m < static_cast<int>(kappas.size()); ++m) {
      const BeamVector w_ring = relocate_curvature(cfg, w_ori, kappas[m]);
      for (int n = 1; n <= level.n_theta; ++n) {
        const double theta_n = -1.0 + (2.0 * n - 1.0) / level.n_theta;
        UpperCodeword cw;
        cw.w = rotate(cfg, w_ring, theta_n);
        cw.region = level_cell_region(kappas, m, theta_n, half_width, kappa_max);
        cw.target = PolarPoint::from_curvature(theta_n, kappas[m]);
        level.codewords.push_back(std::move(cw));
      }
    }
    hier.levels.push_back(std::move(level));
  }

  // parent -> child links: descriptor overlap between adjacent upper levels,
  // steering-point containment into the lower grid at the bottom
  hier.children.resize(hier.levels.size());
  for (std::size_t li = 0; li + 1 < hier.levels.size(); ++li) {
    const auto& cur = hier.levels[li];
    const auto& nxt = hier.levels[li + 1];
    hier.children[li].resize(cur.codewords.size());
    for (int i = 0; i < cur.size(); ++i)
      for (int j = 0; j < nxt.size(); ++j)
        if (regions_overlap(cur.codewords[i].region, nxt.codewords[j].region))
          hier.children[li][i].push_back(j);
  }
  {
    const auto& last = hier.levels.back();
    auto& links = hier.children.back();
    links.resize(last.codewords.size());
    std::vector<int> parents(lower.size(), 0);
    for (int j = 0; j < lower.size(); ++j) {
      const CoverageRegion cell =
          coverage_region(lower, j / lower.params.n_theta, j % lower.params.n_theta);
      for (int i = 0; i < last.size(); ++i) {
        if (regions_overlap(last.codewords[i].region, cell)) {
          links[i].push_back(j);
          ++parents[j];
        }
      }
    }
    for (int j = 0; j < lower.size(); ++j)
      if (parents[j] == 0)
        throw std::runtime_error("build_hierarchy: orphan lower-codebook cell");
  }
  for (std::size_t li = 0; li < hier.children.size(); ++li)
    for (const auto& kids : hier.children[li])
      if (kids.empty())
        throw std::runtime_error("build_hierarchy: codeword with no children");

  return hier;
}

}  // namespace nfcb
