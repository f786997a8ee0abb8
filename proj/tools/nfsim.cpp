#include <cstdio>
#include <exception>
#include <fstream>
#include <string>

#include <CLI11.hpp>

#include "nfcb/io.hpp"
#include "nfcb/sim.hpp"

namespace {

nfcb::SimConfig load_sim_config(const std::string& config_path) {
  if (config_path.empty()) return {};
  std::ifstream in(config_path);
  if (!in) throw std::runtime_error("cannot open config file " + config_path);
  nfcb::ordered_json j;
  in >> j;
  return nfcb::SimConfig::from_json(j);
}

nfcb::PatternKind parse_pattern(const std::string& name) {
  if (name == "deact") return nfcb::PatternKind::Deact;
  if (name == "bmwss") return nfcb::PatternKind::BmwSS;
  if (name == "quadric") return nfcb::PatternKind::Quadric;
  throw std::runtime_error("unknown pattern '" + name + "'");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Near-field hierarchical beamforming codebook simulator"};
  app.require_subcommand(1);

  std::string config_path, out_path, csv_path, format = "json";
  std::string pattern = "deact", in_path;
  std::uint64_t seed = 0;
  bool seed_set = false;
  int n_u = 0;
  double r_max = 0.0;

  auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path, "JSON config file (SimConfig mirror)");
    cmd->add_option("--seed", seed, "RNG seed")->each([&](const std::string&) {
      seed_set = true;
    });
    cmd->add_option("--out", out_path, "output path");
    cmd->add_option("--format", format, "csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    cmd->add_option("--nu", n_u, "number of users");
    cmd->add_option("--rmax", r_max, "maximum user distance [m]");
  };

  auto* build_lower = app.add_subcommand("build-lower", "synthesize the lower codebook");
  add_common(build_lower);
  build_lower->add_option("--csv", csv_path, "also export a CSV view");

  auto* build_hier =
      app.add_subcommand("build-hierarchy", "synthesize a full hierarchical codebook");
  add_common(build_hier);
  build_hier->add_option("--pattern", pattern, "deact|bmwss|quadric")
      ->check(CLI::IsMember({"deact", "bmwss", "quadric"}));
  build_hier->add_option("--csv", csv_path, "also export a CSV view");

  auto* gain_exp = app.add_subcommand("gain-exp", "beamforming-gain comparison");
  add_common(gain_exp);

  auto* search_exp = app.add_subcommand("search-exp", "hierarchical beam-search study");
  add_common(search_exp);

  auto* export_cb = app.add_subcommand("export-codebook", "binary container to CSV");
  export_cb->add_option("--in", in_path, "binary codebook file")->required();
  export_cb->add_option("--out", out_path, "CSV output path")->required();

  CLI11_PARSE(app, argc, argv);

  try {
    nfcb::SimConfig sim = load_sim_config(config_path);
    if (seed_set) sim.seed = seed;
    if (n_u > 0) sim.n_u = n_u;
    if (r_max > 0.0) sim.r_max = r_max;
    const nfcb::ReportFormat fmt =
        format == "csv" ? nfcb::ReportFormat::Csv : nfcb::ReportFormat::Json;

    if (build_lower->parsed()) {
      const auto cb = nfcb::build_lower_codebook(sim.array(), sim.rho);
      std::printf("lower codebook: n_theta=%d n_r=%d delta=%.6g hash=%s\n",
                  cb.params.n_theta, cb.params.n_r, cb.params.delta,
                  nfcb::codebook_hash(cb).c_str());
      if (!out_path.empty()) nfcb::save_codebook(out_path, cb);
      if (!csv_path.empty()) nfcb::export_codebook_csv(csv_path, cb, sim.n_lv);
    } else if (build_hier->parsed()) {
      const auto lower = nfcb::build_lower_codebook(sim.array(), sim.rho);
      nfcb::HierarchyConfig hcfg;
      hcfg.n_lv = sim.n_lv;
      hcfg.pattern = parse_pattern(pattern);
      const auto hier = nfcb::build_hierarchy(sim.array(), hcfg, lower);
      std::printf("hierarchical codebook: pattern=%s n_lv=%d hash=%s\n",
                  pattern.c_str(), hcfg.n_lv, nfcb::codebook_hash(hier).c_str());
      if (!out_path.empty()) nfcb::save_codebook(out_path, hier);
      if (!csv_path.empty()) nfcb::export_codebook_csv(csv_path, hier);
    } else if (gain_exp->parsed()) {
      const auto report = nfcb::run_gain_experiment(sim);
      if (out_path.empty()) {
        std::printf("%s\n", report.doc.dump(2).c_str());
      } else {
        nfcb::emit_report(report, fmt, out_path);
      }
    } else if (search_exp->parsed()) {
      const auto report = nfcb::run_search_experiment(sim);
      if (out_path.empty()) {
        std::printf("%s\n", report.doc.dump(2).c_str());
      } else {
        nfcb::emit_report(report, fmt, out_path);
      }
    } else if (export_cb->parsed()) {
      if (nfcb::codebook_file_is_hierarchical(in_path)) {
        nfcb::export_codebook_csv(out_path, nfcb::load_hierarchical_codebook(in_path));
      } else {
        nfcb::export_codebook_csv(out_path, nfcb::load_lower_codebook(in_path));
      }
    }
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 0;
}
