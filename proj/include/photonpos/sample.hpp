#pragma once

// Deterministic sample-point generation on a momentum shell, keeping away
// from the p3 axis where the spherical frame is singular.

#include <cstdint>
#include <string_view>
#include <vector>

#include "photonpos/expr.hpp"

namespace photonpos {

struct SamplePlan {
  std::uint64_t seed = 0;
  int count = 64;
  double r_min = 0.5;
  double r_max = 2.0;
  double axis_margin = 0.1;  // points satisfy rho >= axis_margin * r
};

inline SamplePlan default_plan() { return {}; }

// Deterministic: identical plan -> identical point list, independent of
// platform (no std::distribution involved).
std::vector<Point> sample_points(const SamplePlan& plan);

// Stable stream derivation so independent checks never share or reorder
// random points (FNV-1a over the tag, mixed with the global seed).
std::uint64_t derive_seed(std::uint64_t global_seed, std::string_view tag);

}  // namespace photonpos
