#pragma once

#include "nfcb/upper_codebook.hpp"

namespace nfcb {

struct SearchResult {
  int ring = -1;
  int angle = -1;
  int flat_index = -1;     // bottom-level flat index
  long steps = 0;          // total gain evaluations, bottom sweep included
  long upper_steps = 0;    // evaluations spent above the bottom level
  std::vector<int> trace;  // per-level chosen index (flat within level)
  double achieved_gain = 0.0;
  // best bottom-level indices by gain, ties with the k-th included;
  // filled by exhaustive_search up to its top_depth argument
  std::vector<int> top_indices;
  std::vector<double> top_gains;
};

/// |w^H h| for every codeword; serial reference implementation.
std::vector<double> batch_gains_serial(const std::vector<BeamVector>& codewords,
                                       const std::vector<std::complex<double>>& h);

/// OpenMP variant; bit-identical to the serial reference (per-slot writes,
/// no reductions).
std::vector<double> batch_gains(const std::vector<BeamVector>& codewords,
                                const std::vector<std::complex<double>>& h);

/// Full sweep of the bottom codebook. Ties break to the lowest
/// (ring, angle). top_depth > 0 additionally records the best indices.
SearchResult exhaustive_search(const LowerCodebook& lower,
                               const std::vector<std::complex<double>>& h,
                               int top_depth = 0);

/// Level-by-level descent: full sweep of level 1, then only the children
/// of the current selection, ending with the assigned lower-codebook subset.
SearchResult hierarchical_search(const HierarchicalCodebook& hier,
                                 const std::vector<std::complex<double>>& h);

/// Fraction of trials whose selection lands in the oracle's k best
/// bottom-level codewords (gain ties with the k-th included).
double topk_agreement(const std::vector<SearchResult>& results,
                      const std::vector<SearchResult>& oracle, int k);

}  // namespace nfcb
