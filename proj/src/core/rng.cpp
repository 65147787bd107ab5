#include "nppc/rng.hpp"

#include <cassert>

namespace nppc {

uint64_t Rng::below(uint64_t n) {
  assert(n > 0);
  if (n == 1) return 0;
  // Smallest all-ones mask covering n-1.
  uint64_t mask = n - 1;
  mask |= mask >> 1;
  mask |= mask >> 2;
  mask |= mask >> 4;
  mask |= mask >> 8;
  mask |= mask >> 16;
  mask |= mask >> 32;
  for (;;) {
    uint64_t r = u64() & mask;
    if (r < n) return r;
  }
}

int64_t Rng::range(int64_t lo, int64_t hi) {
  assert(lo <= hi);
  return lo + static_cast<int64_t>(below(static_cast<uint64_t>(hi - lo) + 1));
}

bool Rng::chance(int64_t num, int64_t den) {
  assert(den > 0 && num >= 0);
  if (num >= den) return true;
  // u64 < num/den * 2^64, computed exactly in 128 bits.
  unsigned __int128 lhs = static_cast<unsigned __int128>(u64()) *
                          static_cast<unsigned __int128>(den);
  unsigned __int128 rhs = static_cast<unsigned __int128>(num) << 64;
  return lhs < rhs;
}

uint64_t fnv1a64(const std::string& bytes) {
  uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

uint64_t mix64(uint64_t x) {
  // splitmix64 finalizer.
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

uint64_t derive_trial_seed(uint64_t experiment_seed, const std::string& problem,
                           int level, int trial_index) {
  std::string key = std::to_string(experiment_seed) + "|" + problem + "|" +
                    std::to_string(level) + "|" + std::to_string(trial_index);
  return mix64(fnv1a64(key));
}

uint64_t example_seed(uint64_t trial_seed, int shot_index) {
  constexpr uint64_t kExampleSalt = 0xa24baed4963ee407ULL;
  return mix64(trial_seed ^ kExampleSalt ^ mix64(static_cast<uint64_t>(shot_index)));
}

}  // namespace nppc
