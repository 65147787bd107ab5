#include <algorithm>
#include <array>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "problems.hpp"

namespace nppc::gym::detail {

namespace {

using Triple = std::array<int64_t, 3>;

Json subsets_json(const std::vector<std::vector<int64_t>>& subsets) {
  Json arr = Json::array();
  for (const auto& s : subsets) arr.push_back(int_list_json(s));
  return arr;
}

// Mix planted subsets with distractors, shuffle, and report where the planted
// ones ended up (ascending).
std::vector<int64_t> shuffle_subsets(std::vector<std::vector<int64_t>>& planted,
                                     std::vector<std::vector<int64_t>>& fillers,
                                     std::vector<std::vector<int64_t>>& out,
                                     Rng& rng) {
  std::vector<std::pair<std::vector<int64_t>, bool>> tagged;
  tagged.reserve(planted.size() + fillers.size());
  for (auto& s : planted) tagged.emplace_back(std::move(s), true);
  for (auto& s : fillers) tagged.emplace_back(std::move(s), false);
  rng.shuffle(tagged);
  std::vector<int64_t> where;
  out.clear();
  out.reserve(tagged.size());
  for (size_t i = 0; i < tagged.size(); ++i) {
    if (tagged[i].second) where.push_back(static_cast<int64_t>(i));
    out.push_back(std::move(tagged[i].first));
  }
  return where;
}

}  // namespace

// ---- 3-Dimensional Matching --------------------------------------------------
// Elements are disjoint ranges: X = 0..n-1, Y = n..2n-1, Z = 2n..3n-1. The
// planted matching pairs each x with permuted y and z values; n distinct
// distractor triples round the set out to 2n.

Json gen_three_dm(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("n");
  Rng rng(seed);

  std::vector<int64_t> py(static_cast<size_t>(n)), pz(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) py[static_cast<size_t>(i)] = pz[static_cast<size_t>(i)] = i;
  rng.shuffle(py);
  rng.shuffle(pz);

  std::vector<Triple> matching;
  std::set<Triple> seen;
  for (int64_t i = 0; i < n; ++i) {
    Triple t{i, n + py[static_cast<size_t>(i)], 2 * n + pz[static_cast<size_t>(i)]};
    matching.push_back(t);
    seen.insert(t);
  }

  std::vector<Triple> all = matching;
  for (int64_t j = 0; j < n; ++j) {
    Triple t;
    int attempts = 0;
    do {
      if (++attempts > kRetryBudget)
        infeasible("cannot draw " + std::to_string(n) + " distinct distractor triples");
      t = {static_cast<int64_t>(rng.below(static_cast<uint64_t>(n))),
           n + static_cast<int64_t>(rng.below(static_cast<uint64_t>(n))),
           2 * n + static_cast<int64_t>(rng.below(static_cast<uint64_t>(n)))};
    } while (!seen.insert(t).second);
    all.push_back(t);
  }
  rng.shuffle(all);

  Json triples = Json::array();
  for (const Triple& t : all) triples.push_back(Json::array({t[0], t[1], t[2]}));
  Json payload = Json::object();
  payload["n"] = n;
  payload["triples"] = std::move(triples);

  planted = Json::array();
  for (const Triple& t : matching) planted.push_back(Json::array({t[0], t[1], t[2]}));
  return payload;
}

VerifyOutcome verify_three_dm(const Json& payload, const Json& candidate) {
  if (!candidate.is_array()) return verification_error("Wrong output format.");
  std::vector<Triple> chosen;
  for (const auto& tj : candidate) {
    auto t = cand_int_list(tj);
    if (!t || t->size() != 3) return verification_error("Wrong output format.");
    chosen.push_back({(*t)[0], (*t)[1], (*t)[2]});
  }
  const int64_t n = payload.at("n").get<int64_t>();
  std::set<Triple> pool;
  for (const auto& tj : payload.at("triples"))
    pool.insert({tj[0].get<int64_t>(), tj[1].get<int64_t>(), tj[2].get<int64_t>()});
  for (const Triple& t : chosen)
    if (!pool.count(t)) return problem_error(Problem::three_dm, 1);
  if (static_cast<int64_t>(chosen.size()) != n)
    return problem_error(Problem::three_dm, 2);
  std::set<int64_t> xs, ys, zs;
  for (const Triple& t : chosen) {
    xs.insert(t[0]);
    ys.insert(t[1]);
    zs.insert(t[2]);
  }
  if (xs.size() != chosen.size() || ys.size() != chosen.size() ||
      zs.size() != chosen.size())
    return problem_error(Problem::three_dm, 3);
  return ok_outcome();
}

void validate_three_dm(const Json& payload) {
  const int64_t n = req_int(payload, "n", 1, kMaxCount);
  const Json& triples = req_array(payload, "triples");
  std::set<Triple> seen;
  size_t ti = 0;
  for (const auto& tj : triples) {
    std::string where = "triples[" + std::to_string(ti++) + "]";
    if (!tj.is_array() || tj.size() != 3)
      schema_fail(where, "a triple lists exactly 3 elements");
    Triple t{as_checked_int(tj[0], where, 0, n - 1),
             as_checked_int(tj[1], where, n, 2 * n - 1),
             as_checked_int(tj[2], where, 2 * n, 3 * n - 1)};
    if (!seen.insert(t).second) schema_fail(where, "duplicate triple");
  }
}

// ---- Set Splitting -------------------------------------------------------------
// Plant a balanced 2-partition; every subset takes one element from each side
// plus random extras, so the planted sides split all of them. Subsets may
// repeat: the published ladders ask for more subsets than distinct crossing
// subsets exist at some levels.

Json gen_set_splitting(const GenConfig& config, uint64_t seed,
                       SolutionJson& planted) {
  const int64_t n = config.geti("num_elements");
  const int64_t m = config.geti("num_subsets");
  if (n < 2) infeasible("set splitting needs at least 2 elements");
  Rng rng(seed);

  std::vector<int64_t> perm(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  rng.shuffle(perm);
  const int64_t half = n / 2;
  std::vector<int64_t> side(static_cast<size_t>(n), 1);
  for (int64_t i = 0; i < half; ++i)
    side[static_cast<size_t>(perm[static_cast<size_t>(i)])] = 0;

  const int64_t max_extra = std::max<int64_t>(1, n / 3);
  Json subsets = Json::array();
  for (int64_t j = 0; j < m; ++j) {
    int64_t a = perm[static_cast<size_t>(rng.below(static_cast<uint64_t>(half)))];
    int64_t b = perm[static_cast<size_t>(half + static_cast<int64_t>(rng.below(
                                                    static_cast<uint64_t>(n - half))))];
    std::vector<int64_t> others;
    others.reserve(static_cast<size_t>(n - 2));
    for (int64_t e = 0; e < n; ++e)
      if (e != a && e != b) others.push_back(e);
    size_t extras = static_cast<size_t>(rng.below(static_cast<uint64_t>(max_extra + 1)));
    rng.partial_shuffle(others, extras);
    std::vector<int64_t> subset{a, b};
    subset.insert(subset.end(), others.begin(), others.begin() + static_cast<long>(extras));
    std::sort(subset.begin(), subset.end());
    subsets.push_back(int_list_json(subset));
  }

  Json payload = Json::object();
  payload["num_elements"] = n;
  payload["subsets"] = std::move(subsets);
  planted = int_list_json(side);
  return payload;
}

VerifyOutcome verify_set_splitting(const Json& payload, const Json& candidate) {
  auto labels = cand_int_list(candidate);
  if (!labels) return verification_error("Wrong output format.");
  const int64_t n = payload.at("num_elements").get<int64_t>();
  if (static_cast<int64_t>(labels->size()) != n)
    return problem_error(Problem::set_splitting, 1);
  for (int64_t l : *labels)
    if (l != 0 && l != 1) return problem_error(Problem::set_splitting, 2);
  for (const auto& subset : payload.at("subsets")) {
    bool side0 = false, side1 = false;
    for (const auto& ej : subset) {
      if ((*labels)[static_cast<size_t>(ej.get<int64_t>())] == 0)
        side0 = true;
      else
        side1 = true;
    }
    if (!side0 || !side1) return problem_error(Problem::set_splitting, 3);
  }
  return ok_outcome();
}

void validate_set_splitting(const Json& payload) {
  const int64_t n = req_int(payload, "num_elements", 1, kMaxCount);
  const Json& subsets = req_array(payload, "subsets");
  size_t si = 0;
  for (const auto& s : subsets)
    validate_subset(s, n, "subsets[" + std::to_string(si++) + "]", true);
}

// ---- Set Packing ----------------------------------------------------------------
// Plant num_disjoint_sets blocks that partition a sub-universe (so they are
// pairwise disjoint by construction), then pad with distinct random subsets.

Json gen_set_packing(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_elements");
  const int64_t m = config.geti("num_subsets");
  const int64_t k = config.geti("num_disjoint_sets");
  if (k < 1 || k > m) infeasible("num_disjoint_sets must be within [1, num_subsets]");
  if (k > n) infeasible("cannot plant more disjoint nonempty sets than elements");
  Rng rng(seed);

  std::vector<int64_t> perm(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  rng.shuffle(perm);

  const int64_t sub_universe = std::max(k, n / 2);
  std::vector<int64_t> block_sizes = random_composition(sub_universe, k, rng);
  std::vector<std::vector<int64_t>> blocks;
  std::set<std::vector<int64_t>> seen;
  size_t cursor = 0;
  for (int64_t i = 0; i < k; ++i) {
    std::vector<int64_t> block(perm.begin() + static_cast<long>(cursor),
                               perm.begin() + static_cast<long>(cursor) +
                                   static_cast<long>(block_sizes[static_cast<size_t>(i)]));
    cursor += static_cast<size_t>(block_sizes[static_cast<size_t>(i)]);
    std::sort(block.begin(), block.end());
    seen.insert(block);
    blocks.push_back(std::move(block));
  }

  const int64_t size_hi = std::max<int64_t>(2, n / 10);
  std::vector<std::vector<int64_t>> fillers;
  for (int64_t j = 0; j < m - k; ++j) {
    std::vector<int64_t> subset;
    int attempts = 0;
    do {
      if (++attempts > kRetryBudget)
        infeasible("cannot draw " + std::to_string(m - k) + " distinct filler subsets");
      int64_t size = rng.range(1, std::min(size_hi, n));
      subset = sample_indices(n, static_cast<size_t>(size), rng);
      std::sort(subset.begin(), subset.end());
    } while (!seen.insert(subset).second);
    fillers.push_back(std::move(subset));
  }

  std::vector<std::vector<int64_t>> all;
  std::vector<int64_t> where = shuffle_subsets(blocks, fillers, all, rng);

  Json payload = Json::object();
  payload["num_elements"] = n;
  payload["k"] = k;
  payload["subsets"] = subsets_json(all);
  planted = int_list_json(where);
  return payload;
}

VerifyOutcome verify_set_packing(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return problem_error(Problem::set_packing, 1);
  const int64_t k = payload.at("k").get<int64_t>();
  const Json& subsets = payload.at("subsets");
  if (static_cast<int64_t>(idx->size()) != k)
    return problem_error(Problem::set_packing, 2);
  std::set<int64_t> chosen;
  for (int64_t i : *idx) {
    if (i < 0 || i >= static_cast<int64_t>(subsets.size()) || !chosen.insert(i).second)
      return problem_error(Problem::set_packing, 3);
  }
  std::set<int64_t> used;
  for (int64_t i : chosen)
    for (const auto& ej : subsets[static_cast<size_t>(i)])
      if (!used.insert(ej.get<int64_t>()).second)
        return problem_error(Problem::set_packing, 4);
  return ok_outcome();
}

void validate_set_packing(const Json& payload) {
  const int64_t n = req_int(payload, "num_elements", 1, kMaxCount);
  req_int(payload, "k", 1, kMaxCount);
  const Json& subsets = req_array(payload, "subsets");
  size_t si = 0;
  for (const auto& s : subsets)
    validate_subset(s, n, "subsets[" + std::to_string(si++) + "]", true);
}

// ---- Exact Cover by 3-Sets --------------------------------------------------------
// The config's num_elements counts planted triples (the universe holds three
// times as many elements, as the problem requires |X| = 3n). Plant a perfect
// cover from a shuffled universe, pad with distinct distractor triples.

Json gen_x3c(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_elements");
  const int64_t m = config.geti("num_subsets");
  if (m < n) infeasible("num_subsets must be at least the planted cover size");
  const int64_t universe = 3 * n;
  Rng rng(seed);

  std::vector<int64_t> perm(static_cast<size_t>(universe));
  for (int64_t i = 0; i < universe; ++i) perm[static_cast<size_t>(i)] = i;
  rng.shuffle(perm);

  std::vector<std::vector<int64_t>> cover;
  std::set<std::vector<int64_t>> seen;
  for (int64_t i = 0; i < n; ++i) {
    std::vector<int64_t> t{perm[static_cast<size_t>(3 * i)],
                           perm[static_cast<size_t>(3 * i + 1)],
                           perm[static_cast<size_t>(3 * i + 2)]};
    std::sort(t.begin(), t.end());
    seen.insert(t);
    cover.push_back(std::move(t));
  }

  std::vector<std::vector<int64_t>> fillers;
  for (int64_t j = 0; j < m - n; ++j) {
    std::vector<int64_t> t;
    int attempts = 0;
    do {
      if (++attempts > kRetryBudget)
        infeasible("cannot draw " + std::to_string(m - n) + " distinct distractor triples");
      t = sample_indices(universe, 3, rng);
      std::sort(t.begin(), t.end());
    } while (!seen.insert(t).second);
    fillers.push_back(std::move(t));
  }

  std::vector<std::vector<int64_t>> all;
  std::vector<int64_t> where = shuffle_subsets(cover, fillers, all, rng);

  Json payload = Json::object();
  payload["num_elements"] = universe;
  payload["subsets"] = subsets_json(all);
  planted = int_list_json(where);
  return payload;
}

VerifyOutcome verify_x3c(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return problem_error(Problem::x3c, 1);
  const int64_t universe = payload.at("num_elements").get<int64_t>();
  const Json& subsets = payload.at("subsets");
  if (static_cast<int64_t>(idx->size()) != universe / 3)
    return problem_error(Problem::x3c, 2);
  std::set<int64_t> chosen;
  for (int64_t i : *idx) {
    if (i < 0 || i >= static_cast<int64_t>(subsets.size()) || !chosen.insert(i).second)
      return problem_error(Problem::x3c, 3);
  }
  std::vector<bool> covered(static_cast<size_t>(universe), false);
  for (int64_t i : chosen) {
    for (const auto& ej : subsets[static_cast<size_t>(i)]) {
      size_t e = static_cast<size_t>(ej.get<int64_t>());
      if (covered[e]) return problem_error(Problem::x3c, 4);
      covered[e] = true;
    }
  }
  return ok_outcome();
}

void validate_x3c(const Json& payload) {
  const int64_t universe = req_int(payload, "num_elements", 3, kMaxCount);
  if (universe % 3 != 0)
    schema_fail("num_elements", "the universe size must be a multiple of 3");
  const Json& subsets = req_array(payload, "subsets");
  size_t si = 0;
  for (const auto& s : subsets) {
    std::string where = "subsets[" + std::to_string(si++) + "]";
    validate_subset(s, universe, where, true);
    if (s.size() != 3) schema_fail(where, "subsets hold exactly 3 elements");
  }
}

// ---- Minimum Cover -----------------------------------------------------------------
// Plant min(k, n) sets that partition the universe round-robin, then pad with
// distinct random subsets.

Json gen_minimum_cover(const GenConfig& config, uint64_t seed, SolutionJson& planted) {
  const int64_t n = config.geti("num_elements");
  const int64_t m = config.geti("num_sets");
  const int64_t k = config.geti("k");
  if (k < 1 || k > m) infeasible("k must be within [1, num_sets]");
  Rng rng(seed);

  std::vector<int64_t> perm(static_cast<size_t>(n));
  for (int64_t i = 0; i < n; ++i) perm[static_cast<size_t>(i)] = i;
  rng.shuffle(perm);

  const int64_t parts = std::min(k, n);
  if (m < parts) infeasible("num_sets cannot hold the planted cover");
  std::vector<std::vector<int64_t>> cover(static_cast<size_t>(parts));
  for (int64_t i = 0; i < n; ++i)
    cover[static_cast<size_t>(i % parts)].push_back(perm[static_cast<size_t>(i)]);
  std::set<std::vector<int64_t>> seen;
  for (auto& s : cover) {
    std::sort(s.begin(), s.end());
    seen.insert(s);
  }

  const int64_t size_hi = std::max<int64_t>(2, n / 4);
  std::vector<std::vector<int64_t>> fillers;
  for (int64_t j = 0; j < m - parts; ++j) {
    std::vector<int64_t> subset;
    int attempts = 0;
    do {
      if (++attempts > kRetryBudget)
        infeasible("cannot draw " + std::to_string(m - parts) + " distinct filler sets");
      int64_t size = rng.range(1, std::min(size_hi, n));
      subset = sample_indices(n, static_cast<size_t>(size), rng);
      std::sort(subset.begin(), subset.end());
    } while (!seen.insert(subset).second);
    fillers.push_back(std::move(subset));
  }

  std::vector<std::vector<int64_t>> all;
  std::vector<int64_t> where = shuffle_subsets(cover, fillers, all, rng);

  Json payload = Json::object();
  payload["num_elements"] = n;
  payload["k"] = k;
  payload["sets"] = subsets_json(all);
  planted = int_list_json(where);
  return payload;
}

VerifyOutcome verify_minimum_cover(const Json& payload, const Json& candidate) {
  auto idx = cand_int_list(candidate);
  if (!idx) return problem_error(Problem::minimum_cover, 1);
  const int64_t n = payload.at("num_elements").get<int64_t>();
  const int64_t k = payload.at("k").get<int64_t>();
  const Json& sets = payload.at("sets");
  if (static_cast<int64_t>(idx->size()) > k)
    return problem_error(Problem::minimum_cover, 2);
  std::set<int64_t> chosen;
  for (int64_t i : *idx) {
    if (i < 0 || i >= static_cast<int64_t>(sets.size()) || !chosen.insert(i).second)
      return problem_error(Problem::minimum_cover, 3);
  }
  std::vector<bool> covered(static_cast<size_t>(n), false);
  for (int64_t i : chosen)
    for (const auto& ej : sets[static_cast<size_t>(i)])
      covered[static_cast<size_t>(ej.get<int64_t>())] = true;
  for (int64_t e = 0; e < n; ++e)
    if (!covered[static_cast<size_t>(e)])
      return problem_error(Problem::minimum_cover, 4);
  return ok_outcome();
}

void validate_minimum_cover(const Json& payload) {
  const int64_t n = req_int(payload, "num_elements", 1, kMaxCount);
  req_int(payload, "k", 1, kMaxCount);
  const Json& sets = req_array(payload, "sets");
  size_t si = 0;
  for (const auto& s : sets)
    validate_subset(s, n, "sets[" + std::to_string(si++) + "]", true);
}

}  // namespace nppc::gym::detail
