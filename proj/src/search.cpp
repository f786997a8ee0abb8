#include "nfcb/search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace nfcb {

namespace {

inline double one_gain(const BeamVector& w, const std::vector<std::complex<double>>& h) {
  std::complex<double> acc{0.0, 0.0};
  const int n = w.size();
  for (int i = 0; i < n; ++i)
    if (w.active[i]) acc += std::conj(w.weights[i]) * h[i];
  return std::abs(acc);
}

}  // namespace

std::vector<double> batch_gains_serial(const std::vector<BeamVector>& codewords,
                                       const std::vector<std::complex<double>>& h) {
  std::vector<double> gains(codewords.size());
  for (std::size_t i = 0; i < codewords.size(); ++i) gains[i] = one_gain(codewords[i], h);
  return gains;
}

std::vector<double> batch_gains(const std::vector<BeamVector>& codewords,
                                const std::vector<std::complex<double>>& h) {
  std::vector<double> gains(codewords.size());
  const long n = static_cast<long>(codewords.size());
#pragma omp parallel for schedule(static)
  for (long i = 0; i < n; ++i) gains[i] = one_gain(codewords[i], h);
  return gains;
}

SearchResult exhaustive_search(const LowerCodebook& lower,
                               const std::vector<std::complex<double>>& h,
                               int top_depth) {
  if (static_cast<int>(h.size()) != lower.cfg.n_w)
    throw std::invalid_argument("exhaustive_search: dimension mismatch");

  const std::vector<double> gains = batch_gains(lower.codewords, h);
  SearchResult res;
  res.steps = static_cast<long>(gains.size());
  res.upper_steps = 0;

  int best = 0;
  for (int i = 1; i < static_cast<int>(gains.size()); ++i)
    if (gains[i] > gains[best]) best = i;  // strict: ties keep the lowest index
  res.flat_index = best;
  res.ring = best / lower.params.n_theta;
  res.angle = best % lower.params.n_theta;
  res.achieved_gain = gains[best];
  res.trace.push_back(best);

  if (top_depth > 0) {
    std::vector<int> order(gains.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
      if (gains[a] != gains[b]) return gains[a] > gains[b];
      return a < b;
    });
    const int depth = std::min<int>(top_depth, static_cast<int>(order.size()));
    int keep = depth;
    // include everything tied with the depth-th gain
    while (keep < static_cast<int>(order.size()) &&
           gains[order[keep]] == gains[order[depth - 1]])
      ++keep;
    for (int i = 0; i < keep; ++i) {
      res.top_indices.push_back(order[i]);
      res.top_gains.push_back(gains[order[i]]);
    }
  }
  return res;
}

SearchResult hierarchical_search(const HierarchicalCodebook& hier,
                                 const std::vector<std::complex<double>>& h) {
  if (static_cast<int>(h.size()) != hier.cfg.n_w)
    throw std::invalid_argument("hierarchical_search: dimension mismatch");

  SearchResult res;
  if (hier.levels.empty()) {
    res = exhaustive_search(hier.lower, h);
    return res;
  }

  // level 1: full sweep
  std::vector<int> candidates(hier.levels[0].codewords.size());
  std::iota(candidates.begin(), candidates.end(), 0);

  int selected = -1;
  for (std::size_t li = 0; li < hier.levels.size(); ++li) {
    const auto& level = hier.levels[li];
    double best_gain = -1.0;
    selected = -1;
    for (int idx : candidates) {
      const double g = one_gain(level.codewords[idx].w, h);
      ++res.upper_steps;
      if (g > best_gain) {
        best_gain = g;
        selected = idx;
      }
    }
    if (selected < 0)
      throw std::runtime_error("hierarchical_search: empty candidate set");
    res.trace.push_back(selected);
    candidates = hier.children[li][selected];
    if (candidates.empty())
      throw std::runtime_error("hierarchical_search: malformed children map");
  }

  // bottom refinement over the assigned lower-codebook subset
  double best_gain = -1.0;
  int best = -1;
  long bottom_steps = 0;
  for (int idx : candidates) {
    const double g = one_gain(hier.lower.codewords[idx], h);
    ++bottom_steps;
    if (g > best_gain || (g == best_gain && idx < best)) {
      best_gain = g;
      best = idx;
    }
  }
  res.steps = res.upper_steps + bottom_steps;
  res.flat_index = best;
  res.ring = best / hier.lower.params.n_theta;
  res.angle = best % hier.lower.params.n_theta;
  res.achieved_gain = best_gain;
  res.trace.push_back(best);
  return res;
}

double topk_agreement(const std::vector<SearchResult>& results,
                      const std::vector<SearchResult>& oracle, int k) {
  if (k < 1) throw std::invalid_argument("topk_agreement: k must be >= 1");
  if (results.size() != oracle.size())
    throw std::invalid_argument("topk_agreement: length mismatch");
  if (results.empty()) return 0.0;

  long hits = 0;
  for (std::size_t t = 0; t < results.size(); ++t) {
    const auto& top = oracle[t].top_indices;
    const auto& gains = oracle[t].top_gains;
    if (static_cast<int>(top.size()) < k)
      throw std::invalid_argument("topk_agreement: oracle depth below k");
    const double kth = gains[k - 1];
    for (std::size_t i = 0; i < top.size(); ++i) {
      if (gains[i] < kth) break;
      if (top[i] == results[t].flat_index) {
        ++hits;
        break;
      }
    }
  }
  return static_cast<double>(hits) / static_cast<double>(results.size());
}

}  // namespace nfcb
