#pragma once

#include <chrono>
#include <cstdint>

#include "nppc/oracle.hpp"

namespace nppc::oracle::detail {

// Budget bookkeeping shared by every solver: tick() once per search node,
// stop expanding as soon as it returns false.
class Search {
 public:
  explicit Search(const OracleBudget& budget)
      : budget_(budget), start_(std::chrono::steady_clock::now()) {}

  bool tick() {
    if (stopped_) return false;
    if (++states_ > budget_.max_states) {
      stopped_ = true;
      return false;
    }
    if ((states_ & 0xfff) == 0) {
      auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start_)
                    .count();
      if (ms > budget_.max_millis) stopped_ = true;
    }
    return !stopped_;
  }

  bool stopped() const { return stopped_; }
  int64_t states() const { return states_; }
  int64_t max_states() const { return budget_.max_states; }

 private:
  const OracleBudget& budget_;
  std::chrono::steady_clock::time_point start_;
  int64_t states_ = 0;
  bool stopped_ = false;
};

}  // namespace nppc::oracle::detail
