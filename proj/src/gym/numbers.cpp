#include <algorithm>
#include <numeric>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "problems.hpp"

namespace nppc::gym::detail {

// ---- Quadratic Diophantine Equations -----------------------------------------
// Draw a, b and a solution (x, y), then publish c = a*x^2 + b*y.

Json gen_qde(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t lo = config.geti("low");
  const int64_t hi = config.geti("high");
  if (lo < 1 || hi < lo) infeasible("need 1 <= low <= high");
  Rng rng(seed);

  const int64_t a = rng.range(lo, hi);
  const int64_t b = rng.range(lo, hi);
  const int64_t x = rng.range(lo, hi);
  const int64_t y = rng.range(lo, hi);
  const __int128 c = static_cast<__int128>(a) * x * x + static_cast<__int128>(b) * y;
  if (c > kMaxValue) infeasible("high is large enough to overflow the value bound");

  Json payload = Json::object();
  payload["a"] = a;
  payload["b"] = b;
  payload["c"] = static_cast<int64_t>(c);
  planted = Json::array({x, y});
  return payload;
}

VerifyOutcome verify_qde(const Json& payload, const Json& candidate) {
  auto xy = cand_int_list(candidate);
  if (!xy) return verification_error("Wrong output format.");
  if (xy->size() != 2) return problem_error(Problem::qde, 1);
  const int64_t x = (*xy)[0];
  const int64_t y = (*xy)[1];
  if (x <= 0 || y <= 0) return problem_error(Problem::qde, 2);
  const int64_t a = payload.at("a").get<int64_t>();
  const int64_t b = payload.at("b").get<int64_t>();
  const int64_t c = payload.at("c").get<int64_t>();
  // a*x^2 alone exceeds any representable c once x is past 2^31.5, so the
  // wide compare below only needs x^2 to fit in 64 bits.
  if (x > 3'037'000'499LL) return problem_error(Problem::qde, 3);
  const __int128 lhs = static_cast<__int128>(a) * (x * x) + static_cast<__int128>(b) * y;
  if (lhs != c) return problem_error(Problem::qde, 3);
  return ok_outcome();
}

void validate_qde(const Json& payload) {
  req_int(payload, "a", 1, kMaxValue);
  req_int(payload, "b", 1, kMaxValue);
  req_int(payload, "c", 1, kMaxValue);
}

// ---- Quadratic Congruences ------------------------------------------------------
// Draw b and x until x^2 mod b is nonzero (a must be positive), then publish
// a = x^2 mod b and a bound c holding x below it.

Json gen_quadratic_congruences(const GenConfig& config, uint64_t seed,
                               SolutionJson& planted) {
  const int64_t lo = config.geti("min_value");
  const int64_t hi = config.geti("max_value");
  if (lo < 1 || hi < lo) infeasible("need 1 <= min_value <= max_value");
  Rng rng(seed);

  int64_t b = 0, x = 0, a = 0;
  int attempts = 0;
  do {
    if (++attempts > kRetryBudget)
      infeasible("cannot find x with x^2 mod b > 0 in the configured range");
    b = rng.range(lo, hi);
    x = rng.range(lo, hi);
    a = static_cast<int64_t>(static_cast<__int128>(x) * x % b);
  } while (a == 0);
  const __int128 c = static_cast<__int128>(x) + 1 +
                     static_cast<int64_t>(rng.below(static_cast<uint64_t>(hi)));
  if (c > kMaxValue) infeasible("max_value is large enough to overflow the value bound");

  Json payload = Json::object();
  payload["a"] = a;
  payload["b"] = b;
  payload["c"] = static_cast<int64_t>(c);
  planted = x;
  return payload;
}

VerifyOutcome verify_quadratic_congruences(const Json& payload, const Json& candidate) {
  auto xv = cand_int(candidate);
  if (!xv) return verification_error("Wrong output format.");
  const int64_t x = *xv;
  const int64_t a = payload.at("a").get<int64_t>();
  const int64_t b = payload.at("b").get<int64_t>();
  const int64_t c = payload.at("c").get<int64_t>();
  if (x <= 0) return problem_error(Problem::quadratic_congruences, 1);
  if (x >= c) return problem_error(Problem::quadratic_congruences, 2);
  if (static_cast<__int128>(x) * x % b != a)
    return problem_error(Problem::quadratic_congruences, 3);
  return ok_outcome();
}

void validate_quadratic_congruences(const Json& payload) {
  req_int(payload, "a", 1, kMaxValue);
  req_int(payload, "b", 1, kMaxValue);
  req_int(payload, "c", 1, kMaxValue);
}

// ---- Partition -------------------------------------------------------------------
// Pick a reachable per-side target sum, draw both halves i.i.d., then nudge
// entries toward the target in one sweep; the slack inside [1, max_value]
// always absorbs the gap, so no retries are needed.

Json gen_partition(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("n");
  const int64_t max_value = config.geti("max_value");
  const int64_t half1 = n / 2;
  const int64_t half2 = n - half1;
  if (half1 < 1) infeasible("partition needs at least 2 elements");
  const int64_t lo = std::max(half1, half2);
  const int64_t hi = std::min(half1, half2) * max_value;
  if (lo > hi)
    infeasible("cannot balance " + std::to_string(n) + " sizes under max_value " +
               std::to_string(max_value));
  Rng rng(seed);
  const int64_t target = rng.range(lo, hi);

  // Draw each side uniformly, then sweep once from a random start nudging
  // entries toward the target sum. The total slack within [1, max_value]
  // covers any gap, so a single sweep always lands exactly on target.
  auto draw_side = [&](int64_t count) {
    std::vector<int64_t> v;
    int64_t sum = 0;
    for (int64_t i = 0; i < count; ++i) {
      v.push_back(rng.range(1, max_value));
      sum += v.back();
    }
    const size_t start = static_cast<size_t>(rng.below(v.size()));
    for (size_t step = 0; sum != target && step < v.size(); ++step) {
      int64_t& x = v[(start + step) % v.size()];
      const int64_t adj = sum > target ? -std::min(sum - target, x - 1)
                                       : std::min(target - sum, max_value - x);
      x += adj;
      sum += adj;
    }
    return v;
  };
  std::vector<int64_t> first = draw_side(half1);
  std::vector<int64_t> second = draw_side(half2);

  std::vector<std::pair<int64_t, int64_t>> items;  // (size, side)
  for (int64_t s : first) items.emplace_back(s, 0);
  for (int64_t s : second) items.emplace_back(s, 1);
  rng.shuffle(items);

  Json sizes = Json::array();
  Json labels = Json::array();
  for (const auto& [size, side] : items) {
    sizes.push_back(size);
    labels.push_back(side);
  }
  Json payload = Json::object();
  payload["sizes"] = std::move(sizes);
  planted = std::move(labels);
  return payload;
}

VerifyOutcome verify_partition(const Json& payload, const Json& candidate) {
  auto labels = cand_int_list(candidate);
  if (!labels) return verification_error("Wrong output format.");
  const Json& sizes = payload.at("sizes");
  if (labels->size() != sizes.size()) return problem_error(Problem::partition, 1);
  for (int64_t l : *labels)
    if (l != 0 && l != 1) return problem_error(Problem::partition, 2);
  __int128 sums[2] = {0, 0};
  for (size_t i = 0; i < labels->size(); ++i)
    sums[(*labels)[i]] += sizes[i].get<int64_t>();
  if (sums[0] != sums[1]) return problem_error(Problem::partition, 3);
  return ok_outcome();
}

void validate_partition(const Json& payload) {
  const Json& sizes = req_array(payload, "sizes");
  if (sizes.empty()) schema_fail("sizes", "must not be empty");
  size_t i = 0;
  for (const auto& s : sizes)
    as_checked_int(s, "sizes[" + std::to_string(i++) + "]", 1, kMaxItemValue);
}

// ---- Subset Sum -------------------------------------------------------------------
// Draw sizes, pick a random nonempty subset, publish its sum as the target.

Json gen_subset_sum(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_elements");
  const int64_t max_value = config.geti("max_value");
  Rng rng(seed);

  std::vector<int64_t> sizes;
  for (int64_t i = 0; i < n; ++i) sizes.push_back(rng.range(1, max_value));

  std::vector<int64_t> chosen;
  for (int attempts = 1; chosen.empty(); ++attempts) {
    if (attempts > kRetryBudget) infeasible("cannot draw a nonempty subset");
    for (int64_t i = 0; i < n; ++i)
      if (rng.coin()) chosen.push_back(i);
  }
  int64_t target = 0;
  for (int64_t i : chosen) target += sizes[static_cast<size_t>(i)];

  Json payload = Json::object();
  payload["sizes"] = int_list_json(sizes);
  payload["target"] = target;
  planted = int_list_json(chosen);
  return payload;
}

VerifyOutcome verify_subset_sum(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return problem_error(Problem::subset_sum, 1);
  const Json& sizes = payload.at("sizes");
  const int64_t target = payload.at("target").get<int64_t>();
  std::set<int64_t> chosen;
  for (int64_t i : *idx) {
    if (i < 0 || i >= static_cast<int64_t>(sizes.size()) || !chosen.insert(i).second)
      return problem_error(Problem::subset_sum, 2);
  }
  __int128 sum = 0;
  for (int64_t i : chosen) sum += sizes[static_cast<size_t>(i)].get<int64_t>();
  if (sum != target) return problem_error(Problem::subset_sum, 3);
  return ok_outcome();
}

void validate_subset_sum(const Json& payload) {
  const Json& sizes = req_array(payload, "sizes");
  if (sizes.empty()) schema_fail("sizes", "must not be empty");
  size_t i = 0;
  for (const auto& s : sizes)
    as_checked_int(s, "sizes[" + std::to_string(i++) + "]", 1, kMaxItemValue);
  req_int(payload, "target", 1, kMaxValue);
}

// ---- Minimum Sum of Squares ---------------------------------------------------------
// Shuffle elements into k sets round-robin and publish the resulting sum of
// squared set sums as J, so the planted partition is exactly tight.

Json gen_min_sum_squares(const GenConfig& config, uint64_t seed,
                         SolutionJson& planted) {
  const int64_t n = config.geti("num_elements");
  const int64_t k = config.geti("k");
  if (k < 1 || k > kMaxCount) infeasible("k must be within [1, " + std::to_string(kMaxCount) + "]");
  Rng rng(seed);

  std::vector<int64_t> sizes;
  for (int64_t i = 0; i < n; ++i) sizes.push_back(rng.range(1, 100));

  std::vector<int64_t> perm(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  rng.shuffle(perm);
  std::vector<int64_t> assignment(static_cast<size_t>(n));
  std::vector<int64_t> loads(static_cast<size_t>(k), 0);
  for (int64_t i = 0; i < n; ++i) {
    int64_t element = perm[static_cast<size_t>(i)];
    int64_t set = i % k;
    assignment[static_cast<size_t>(element)] = set;
    loads[static_cast<size_t>(set)] += sizes[static_cast<size_t>(element)];
  }
  int64_t J = 0;
  for (int64_t load : loads) J += load * load;

  Json payload = Json::object();
  payload["sizes"] = int_list_json(sizes);
  payload["k"] = k;
  payload["J"] = J;
  planted = int_list_json(assignment);
  return payload;
}

VerifyOutcome verify_min_sum_squares(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return verification_error("Wrong output format.");
  const Json& sizes = payload.at("sizes");
  const int64_t k = payload.at("k").get<int64_t>();
  const int64_t J = payload.at("J").get<int64_t>();
  if (idx->size() != sizes.size())
    return problem_error(Problem::min_sum_squares, 1);
  for (int64_t s : *idx)
    if (s < 0 || s >= k) return problem_error(Problem::min_sum_squares, 2);
  std::vector<__int128> loads(static_cast<size_t>(k), 0);
  for (size_t i = 0; i < idx->size(); ++i)
    loads[static_cast<size_t>((*idx)[i])] += sizes[i].get<int64_t>();
  __int128 total = 0;
  for (__int128 load : loads) total += load * load;
  if (total > J) return problem_error(Problem::min_sum_squares, 3);
  return ok_outcome();
}

void validate_min_sum_squares(const Json& payload) {
  const Json& sizes = req_array(payload, "sizes");
  if (sizes.empty()) schema_fail("sizes", "must not be empty");
  size_t i = 0;
  for (const auto& s : sizes)
    as_checked_int(s, "sizes[" + std::to_string(i++) + "]", 1, kMaxItemValue);
  req_int(payload, "k", 1, kMaxCount);
  req_int(payload, "J", 1, kMaxValue);
}

// ---- Bin Packing -----------------------------------------------------------------
// Split the items evenly across bins, give each bin a total in
// [max(items, ceil(B/2)), B], and compose it into positive item sizes; the
// pre-shuffle assignment is the planted packing.

Json gen_bin_packing(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t m = config.geti("num_items");
  const int64_t capacity = config.geti("bin_capacity");
  const int64_t k = config.geti("num_bins");
  if (k < 1 || m < k) infeasible("need num_items >= num_bins >= 1");
  Rng rng(seed);

  std::vector<std::pair<int64_t, int64_t>> items;  // (size, bin)
  for (int64_t bin = 0; bin < k; ++bin) {
    const int64_t count = m / k + (bin < m % k ? 1 : 0);
    const int64_t lo = std::max(count, (capacity + 1) / 2);
    if (lo > capacity)
      infeasible("bin_capacity cannot hold " + std::to_string(count) +
                 " positive item sizes");
    const int64_t total = rng.range(lo, capacity);
    for (int64_t s : random_composition(total, count, rng))
      items.emplace_back(s, bin);
  }
  rng.shuffle(items);

  Json sizes = Json::array();
  Json bins = Json::array();
  for (const auto& [size, bin] : items) {
    sizes.push_back(size);
    bins.push_back(bin);
  }
  Json payload = Json::object();
  payload["sizes"] = std::move(sizes);
  payload["bin_capacity"] = capacity;
  payload["num_bins"] = k;
  planted = std::move(bins);
  return payload;
}

VerifyOutcome verify_bin_packing(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return verification_error("Wrong output format.");
  const Json& sizes = payload.at("sizes");
  const int64_t capacity = payload.at("bin_capacity").get<int64_t>();
  const int64_t k = payload.at("num_bins").get<int64_t>();
  if (idx->size() != sizes.size()) return problem_error(Problem::bin_packing, 1);
  for (int64_t b : *idx)
    if (b < 0 || b >= k) return problem_error(Problem::bin_packing, 2);
  std::vector<__int128> totals(static_cast<size_t>(k), 0);
  for (size_t i = 0; i < idx->size(); ++i)
    totals[static_cast<size_t>((*idx)[i])] += sizes[i].get<int64_t>();
  for (__int128 t : totals)
    if (t > capacity) return problem_error(Problem::bin_packing, 3);
  return ok_outcome();
}

void validate_bin_packing(const Json& payload) {
  const Json& sizes = req_array(payload, "sizes");
  if (sizes.empty()) schema_fail("sizes", "must not be empty");
  size_t i = 0;
  for (const auto& s : sizes)
    as_checked_int(s, "sizes[" + std::to_string(i++) + "]", 1, kMaxItemValue);
  req_int(payload, "bin_capacity", 1, kMaxValue);
  req_int(payload, "num_bins", 1, kMaxCount);
}

}  // namespace nppc::gym::detail
