#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json.hpp>

#include "nfcb/search.hpp"

namespace nfcb {

using ordered_json = nlohmann::ordered_json;

/// Monte-Carlo experiment configuration; mirrors the CLI's JSON config file.
struct SimConfig {
  int n_w = 256;
  double f_c = 40e9;       // Hz
  double spacing = 0.0;    // m; <= 0 selects lambda/2
  double bandwidth = 1e9;  // Hz, recorded only (narrowband model)
  int n_u = 100000;
  double rho = 0.64;
  double snr_db = 20.0;  // scales the received signal only; gains are normalized
  std::uint64_t seed = 1;
  double r_max = 0.0;  // m; <= 0 selects 10 * r_min
  int n_lv = 9;
  bool far_field_dft = false;  // n_w-point DFT baseline instead of the dense grid

  ArrayConfig array() const { return ArrayConfig::make(n_w, f_c, spacing); }
  double effective_r_max() const;

  static SimConfig from_json(const ordered_json& j);
  ordered_json to_json() const;
};

/// theta ~ U[-1, 1], r ~ U(r_min, r_max]; reproducible from the seed alone.
std::vector<PolarPoint> sample_users(const SimConfig& sim);

enum class ReportFormat { Csv, Json };

struct ExperimentReport {
  ordered_json doc;  // config echo, codebook hashes, per-codebook metrics
};

/// Fig.-4-style experiment: exhaustive selection per user against the
/// proposed lower codebook, the under-sampled grid, and the far-field grid;
/// reports average and minimum normalized gain plus the relative lifts.
ExperimentReport run_gain_experiment(const SimConfig& sim);

/// Table-II / Fig.-5-style experiment: hierarchical search with the three
/// initial patterns against the exhaustive oracle; reports mean steps and
/// Top-1/Top-3 agreement.
ExperimentReport run_search_experiment(const SimConfig& sim);

void emit_report(const ExperimentReport& report, ReportFormat format,
                 const std::string& path);

}  // namespace nfcb
