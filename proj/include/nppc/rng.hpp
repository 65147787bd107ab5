#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

namespace nppc {

// Deterministic RNG facade. std::mt19937_64 output is pinned by the
// standard, but the standard distributions are not, so every bounded draw
// goes through the helpers below. Identical seeds give identical streams on
// every platform and in every build.
class Rng {
 public:
  explicit Rng(uint64_t seed) : eng_(seed) {}

  uint64_t u64() { return eng_(); }

  // Uniform in [0, n); n must be > 0. Masked rejection keeps it unbiased.
  uint64_t below(uint64_t n);

  // Uniform in [lo, hi], inclusive.
  int64_t range(int64_t lo, int64_t hi);

  bool coin() { return (u64() >> 63) != 0; }

  // Exact Bernoulli(num/den); no floating point involved.
  bool chance(int64_t num, int64_t den);

  template <class T>
  void shuffle(std::vector<T>& v) {
    for (size_t i = v.size(); i > 1; --i) std::swap(v[i - 1], v[below(i)]);
  }

  // Partial Fisher-Yates: afterwards v[0..k) is a uniform sample of k
  // distinct entries of v.
  template <class T>
  void partial_shuffle(std::vector<T>& v, size_t k) {
    if (k > v.size()) k = v.size();
    for (size_t i = 0; i < k; ++i)
      std::swap(v[i], v[i + below(v.size() - i)]);
  }

 private:
  std::mt19937_64 eng_;
};

uint64_t fnv1a64(const std::string& bytes);
uint64_t mix64(uint64_t x);

// Stable per-trial seed: hash of (experiment seed, problem name, level,
// trial index). Reruns and resumed runs regenerate identical instances.
uint64_t derive_trial_seed(uint64_t experiment_seed, const std::string& problem,
                           int level, int trial_index);

// Seed for the in-context example generated next to a trial; always
// distinct from the trial's own instance seed.
uint64_t example_seed(uint64_t trial_seed, int shot_index);

}  // namespace nppc
