#include "nfcb/sim.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

#include "nfcb/io.hpp"

namespace nfcb {

double SimConfig::effective_r_max() const {
  if (r_max > 0.0) return r_max;
  return 10.0 * array().fresnel_distance();
}

SimConfig SimConfig::from_json(const ordered_json& j) {
  SimConfig sim;
  sim.n_w = j.value("n_w", sim.n_w);
  sim.f_c = j.value("f_c", sim.f_c);
  sim.spacing = j.value("spacing", sim.spacing);
  sim.bandwidth = j.value("bandwidth", sim.bandwidth);
  sim.n_u = j.value("n_u", sim.n_u);
  sim.rho = j.value("rho", sim.rho);
  sim.snr_db = j.value("snr_db", sim.snr_db);
  sim.seed = j.value("seed", sim.seed);
  sim.r_max = j.value("r_max", sim.r_max);
  sim.n_lv = j.value("n_lv", sim.n_lv);
  sim.far_field_dft = j.value("far_field_dft", sim.far_field_dft);
  if (sim.n_u < 1) throw std::invalid_argument("SimConfig: n_u must be >= 1");
  if (!std::isfinite(sim.snr_db)) throw std::invalid_argument("SimConfig: bad snr_db");
  return sim;
}

ordered_json SimConfig::to_json() const {
  ordered_json j;
  j["n_w"] = n_w;
  j["f_c"] = f_c;
  j["spacing"] = spacing;
  j["bandwidth"] = bandwidth;
  j["n_u"] = n_u;
  j["rho"] = rho;
  j["snr_db"] = snr_db;
  j["seed"] = seed;
  j["r_max"] = r_max;
  j["r_max_effective"] = effective_r_max();
  j["n_lv"] = n_lv;
  j["far_field_dft"] = far_field_dft;
  return j;
}

namespace {

// uniform double in [0, 1), independent of library distribution internals
inline double next_unit(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

std::vector<PolarPoint> sample_users(const SimConfig& sim) {
  const ArrayConfig cfg = sim.array();
  const double r_min = cfg.fresnel_distance();
  const double r_max = sim.effective_r_max();
  if (!(r_max > r_min))
    throw std::invalid_argument("sample_users: r_max must exceed r_min");

  std::mt19937_64 rng(sim.seed);
  std::vector<PolarPoint> users;
  users.reserve(sim.n_u);
  for (int u = 0; u < sim.n_u; ++u) {
    const double theta = -1.0 + 2.0 * next_unit(rng);
    const double r = r_max - (r_max - r_min) * next_unit(rng);  // in (r_min, r_max]
    users.push_back(PolarPoint::from_distance(theta, r));
  }
  return users;
}

namespace {

// LOS channel with |alpha| = 1: the exact-model steering vector itself.
std::vector<std::complex<double>> los_channel(const ArrayConfig& cfg,
                                              const PolarPoint& p) {
  return steering_vector(cfg, p, GainModel::Exact).weights;
}

struct GainStats {
  double avg = 0.0;
  double min = 0.0;
};

GainStats exhaustive_gain_stats(const LowerCodebook& cb,
                                const std::vector<PolarPoint>& users) {
  std::vector<double> gains(users.size());
  const long n = static_cast<long>(users.size());
#pragma omp parallel for schedule(static)
  for (long u = 0; u < n; ++u) {
    const auto h = los_channel(cb.cfg, users[u]);
    gains[u] = exhaustive_search(cb, h).achieved_gain;
  }
  GainStats s;
  s.min = gains.empty() ? 0.0 : gains[0];
  double acc = 0.0;
  for (double g : gains) {  // fixed-order reduction
    acc += g;
    s.min = std::min(s.min, g);
  }
  s.avg = acc / static_cast<double>(gains.size());
  return s;
}

double pct_lift(double value, double base) { return 100.0 * (value / base - 1.0); }

}  // namespace

ExperimentReport run_gain_experiment(const SimConfig& sim) {
  const ArrayConfig cfg = sim.array();
  const std::vector<PolarPoint> users = sample_users(sim);

  const LowerCodebook proposed = build_lower_codebook(cfg, sim.rho);
  const LowerCodebook undersampled = make_calibrated_codebook(
      cfg, std::max(1, proposed.params.n_theta / 2), std::max(1, proposed.params.n_r - 1));
  const LowerCodebook far_field =
      make_far_field_codebook(cfg, proposed.params.n_theta, sim.far_field_dft);

  const GainStats gp = exhaustive_gain_stats(proposed, users);
  const GainStats gu = exhaustive_gain_stats(undersampled, users);
  const GainStats gf = exhaustive_gain_stats(far_field, users);

  ExperimentReport report;
  auto& doc = report.doc;
  doc["experiment"] = "gain";
  doc["config"] = sim.to_json();
  doc["codebooks"] = ordered_json::object();
  auto describe = [](const LowerCodebook& cb) {
    ordered_json j;
    j["n_theta"] = cb.params.n_theta;
    j["n_r"] = cb.params.n_r;
    j["delta"] = cb.params.delta;
    j["hash"] = codebook_hash(cb);
    return j;
  };
  doc["codebooks"]["proposed"] = describe(proposed);
  doc["codebooks"]["undersampled"] = describe(undersampled);
  doc["codebooks"]["far_field"] = describe(far_field);

  doc["results"] = ordered_json::object();
  auto row = [](const GainStats& s) {
    ordered_json j;
    j["avg_gain"] = s.avg;
    j["min_gain"] = s.min;
    return j;
  };
  doc["results"]["proposed"] = row(gp);
  doc["results"]["undersampled"] = row(gu);
  doc["results"]["far_field"] = row(gf);
  doc["results"]["proposed_vs_far_field"] = {
      {"avg_gain_pct", pct_lift(gp.avg, gf.avg)},
      {"min_gain_pct", pct_lift(gp.min, gf.min)}};
  doc["results"]["proposed_vs_undersampled"] = {
      {"avg_gain_pct", pct_lift(gp.avg, gu.avg)},
      {"min_gain_pct", pct_lift(gp.min, gu.min)}};
  return report;
}

ExperimentReport run_search_experiment(const SimConfig& sim) {
  const ArrayConfig cfg = sim.array();
  const std::vector<PolarPoint> users = sample_users(sim);
  const LowerCodebook lower = build_lower_codebook(cfg, sim.rho);

  constexpr int kTopDepth = 3;

  // exhaustive oracle, shared across patterns
  const long n = static_cast<long>(users.size());
  std::vector<SearchResult> oracle(users.size());
#pragma omp parallel for schedule(static)
  for (long u = 0; u < n; ++u) {
    const auto h = los_channel(cfg, users[u]);
    oracle[u] = exhaustive_search(lower, h, kTopDepth);
  }

  ExperimentReport report;
  auto& doc = report.doc;
  doc["experiment"] = "search";
  doc["config"] = sim.to_json();
  doc["codebooks"] = ordered_json::object();
  doc["results"] = ordered_json::object();
  doc["results"]["exhaustive"] = {{"mean_steps", static_cast<double>(lower.size())}};

  const std::pair<PatternKind, const char*> kinds[] = {
      {PatternKind::Deact, "deact"},
      {PatternKind::BmwSS, "bmwss"},
      {PatternKind::Quadric, "quadric"}};

  for (const auto& [kind, name] : kinds) {
    HierarchyConfig hcfg;
    hcfg.n_lv = sim.n_lv;
    hcfg.pattern = kind;
    const HierarchicalCodebook hier = build_hierarchy(cfg, hcfg, lower);
    doc["codebooks"][name] = {{"n_lv", hcfg.n_lv}, {"hash", codebook_hash(hier)}};

    std::vector<SearchResult> results(users.size());
#pragma omp parallel for schedule(static)
    for (long u = 0; u < n; ++u) {
      const auto h = los_channel(cfg, users[u]);
      results[u] = hierarchical_search(hier, h);
    }

    double steps_acc = 0.0, upper_acc = 0.0;
    for (const auto& r : results) {
      steps_acc += static_cast<double>(r.steps);
      upper_acc += static_cast<double>(r.upper_steps);
    }
    ordered_json j;
    j["mean_steps"] = steps_acc / static_cast<double>(results.size());
    j["mean_upper_steps"] = upper_acc / static_cast<double>(results.size());
    j["top1"] = topk_agreement(results, oracle, 1);
    j["top3"] = topk_agreement(results, oracle, 3);
    doc["results"][name] = j;
  }
  doc["codebooks"]["lower"] = {{"n_theta", lower.params.n_theta},
                               {"n_r", lower.params.n_r},
                               {"hash", codebook_hash(lower)}};
  return report;
}

void emit_report(const ExperimentReport& report, ReportFormat format,
                 const std::string& path) {
  if (format == ReportFormat::Json) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << report.doc.dump(2) << "\n";
    if (!out) throw std::runtime_error("write failed: " + path);
    return;
  }

  std::FILE* f = std::fopen(path.c_str(), "w");
  if (!f) throw std::runtime_error("cannot open " + path + " for writing");
  std::fprintf(f, "codebook,metric,value\n");
  if (report.doc.contains("results")) {
    for (const auto& [codebook, metrics] : report.doc["results"].items())
      for (const auto& [metric, value] : metrics.items())
        std::fprintf(f, "%s,%s,%.17g\n", codebook.c_str(), metric.c_str(),
                     value.get<double>());
  }
  if (std::fclose(f) != 0) throw std::runtime_error("write failed: " + path);
}

}  // namespace nfcb
