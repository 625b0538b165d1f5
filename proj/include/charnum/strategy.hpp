#pragma once

#include <cstdint>
#include <random>

namespace charnum {

/// Reduction-path selection for the evaluators.
///
/// The default (a null strategy pointer) fixes every choice deterministically
/// so cache contents are reproducible.  A randomized strategy picks uniformly
/// among the mathematically valid alternatives at each step; values are
/// choice-independent, which the self-checks exploit.
struct EvalStrategy {
  bool randomized = false;
  std::mt19937_64 rng{0};

  static EvalStrategy random(std::uint64_t seed) {
    EvalStrategy s;
    s.randomized = true;
    s.rng.seed(seed);
    return s;
  }

  /// Uniform in [0, n).
  int pick(int n) {
    return static_cast<int>(std::uniform_int_distribution<int>(0, n - 1)(rng));
  }
};

}  // namespace charnum
