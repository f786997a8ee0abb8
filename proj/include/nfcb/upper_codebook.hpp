#pragma once

#include "nfcb/lower_codebook.hpp"

namespace nfcb {

enum class PatternKind { Deact, BmwSS, Quadric };

struct HierarchyConfig {
  int n_lv = 9;  // counts the bottom (lower) codebook as the last level
  PatternKind pattern = PatternKind::Deact;
  double ring_gain_fraction = 0.5;  // adjacent-ring crossing level at broadside
};

struct UpperCodeword {
  BeamVector w;
  CoverageRegion region;  // (theta sector) x (kappa interval) descriptor
  PolarPoint target;      // ring/direction the pattern was moved to
};

struct UpperLevel {
  int n_theta = 0;
  std::vector<double> ring_kappas;
  std::vector<UpperCodeword> codewords;  // ring-major

  int size() const { return static_cast<int>(codewords.size()); }
  int index(int ring, int angle) const { return ring * n_theta + angle; }
};

/// Levels 1..n_lv-1 plus the lower codebook as the bottom level.
/// children[l][i] lists next-level codeword indices; for the last upper
/// level the indices address the lower codebook's flat grid.
struct HierarchicalCodebook {
  ArrayConfig cfg;
  HierarchyConfig hcfg;
  std::vector<UpperLevel> levels;
  std::vector<std::vector<std::vector<int>>> children;
  LowerCodebook lower;
};

/// Broadside beam over M = 2^level centered elements, the rest switched off.
BeamVector deact_pattern(const ArrayConfig& cfg, int level,
                         Normalization norm = Normalization::ActiveCount);

/// Wide beam stitched from steered sub-arrays (deactivation fills the
/// remainder); spans cosine width 2/2^level about broadside at full power.
BeamVector bmwss_pattern(const ArrayConfig& cfg, int level);

/// All-element quadratic-phase beam covering cosine width 2/2^level.
BeamVector quadric_pattern(const ArrayConfig& cfg, int level);

BeamVector initial_pattern(const ArrayConfig& cfg, PatternKind kind, int level);

/// Ring curvatures {0, dk, 2 dk, ...} truncated at kappa_max, where dk/2 is
/// the broadside curvature offset at which the pattern's quadratic-model gain
/// falls to half_fraction of its kappa = 0 value (bisection), so adjacent
/// ring beams cross at exactly that fraction midway between rings.
std::vector<double> ring_schedule(const ArrayConfig& cfg, const BeamVector& w_ori,
                                  double half_fraction = 0.5);

/// Algorithm: per level, relocate the initial pattern to each scheduled
/// ring, rotate copies to the 2^level uniform directions, then link levels
/// (including the bottom codebook) by coverage-descriptor overlap.
HierarchicalCodebook build_hierarchy(const ArrayConfig& cfg, const HierarchyConfig& hcfg,
                                     const LowerCodebook& lower);

}  // namespace nfcb
