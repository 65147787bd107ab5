#include <algorithm>
#include <cmath>
#include <tuple>

#include "nppc/error.hpp"
#include "nppc/eval.hpp"
#include "nppc/rng.hpp"

namespace nppc::eval {

namespace {

// Linear-interpolation quantile of a sorted vector at q in [0, 1].
double quantile_sorted(const std::vector<double>& xs, double q) {
  double pos = q * static_cast<double>(xs.size() - 1);
  size_t lo = static_cast<size_t>(std::floor(pos));
  size_t hi = static_cast<size_t>(std::ceil(pos));
  double frac = pos - static_cast<double>(lo);
  return xs[lo] * (1.0 - frac) + xs[hi] * frac;
}

}  // namespace

Interval bootstrap_ci_strata(const Strata& strata, Metric metric,
                             int resamples, double confidence, uint64_t seed,
                             std::optional<double> gamma) {
  if (resamples <= 0)
    fail(Errc::config_mismatch, "bootstrap_ci: resamples must be positive");
  if (!(confidence > 0.0 && confidence < 1.0))
    fail(Errc::config_mismatch, "bootstrap_ci: confidence must be in (0, 1)");
  if (strata.empty())
    fail(Errc::empty_stratum, "bootstrap_ci: no strata in slice");
  for (const auto& [task, runs] : strata)
    if (runs.empty()) fail(Errc::empty_stratum, "bootstrap_ci: empty stratum");

  std::vector<double> values;
  values.reserve(static_cast<size_t>(resamples));
  std::vector<double> pooled;
  for (int r = 0; r < resamples; ++r) {
    // Counter-derived per-resample seed: independent of thread scheduling
    // and of how many resamples precede this one.
    Rng rng(mix64(seed ^ mix64(static_cast<uint64_t>(r))));
    pooled.clear();
    // The source map is ordered, so stratum order (and thus the draw
    // stream) is stable across runs.
    for (const auto& [task, runs] : strata)
      for (size_t i = 0; i < runs.size(); ++i)
        pooled.push_back(runs[rng.below(runs.size())]);
    values.push_back(aggregate(pooled, metric, gamma));
  }
  std::sort(values.begin(), values.end());

  double alpha = (1.0 - confidence) / 2.0;
  return {quantile_sorted(values, alpha), quantile_sorted(values, 1.0 - alpha)};
}

Interval bootstrap_ci(const ScoreMatrix& slice, Metric metric, int resamples,
                      double confidence, uint64_t seed,
                      std::optional<double> gamma) {
  Strata strata;
  for (const auto& [key, cell] : slice.cells)
    strata[{key.model, key.problem, key.level}].push_back(cell.accuracy());
  return bootstrap_ci_strata(strata, metric, resamples, confidence, seed,
                             gamma);
}

}  // namespace nppc::eval
