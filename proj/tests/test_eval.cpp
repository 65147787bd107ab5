#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "nppc/error.hpp"
#include "nppc/eval.hpp"
#include "nppc/outcome.hpp"
#include "nppc/problem.hpp"
#include "nppc/rng.hpp"
#include "nppc/solver.hpp"

using namespace nppc;
using namespace nppc::eval;

namespace {

solver::TrialRecord make_rec(const std::string& model, Problem p, int level,
                             uint64_t seed, int trial, bool ok,
                             int64_t prompt_tokens = 0,
                             int64_t completion_tokens = 0) {
  solver::TrialRecord rec;
  rec.problem = p;
  rec.level = level;
  rec.seed = seed;
  rec.trial_index = trial;
  rec.model = model;
  rec.prompt_tokens = prompt_tokens;
  rec.completion_tokens = completion_tokens;
  rec.outcome.ok = ok;
  if (!ok) {
    rec.outcome.error = ErrorCode{ErrorCategory::json_error, 0};
    rec.outcome.message = "failed";
  }
  return rec;
}

Errc code_of(const std::function<void()>& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  REQUIRE(false);
  return Errc::parse_error;
}

}  // namespace

TEST_CASE("aggregate pins the published reference values") {
  CHECK(aggregate({1.0, 2.0, 3.0, 4.0}, Metric::iqm) ==
        doctest::Approx(2.5).epsilon(1e-12));
  CHECK(aggregate({0.5, 1.0}, Metric::optimality_gap, 1.0) == 0.25);

  CHECK(aggregate({1.0, 2.0, 3.0, 4.0}, Metric::mean) == 2.5);
  CHECK(aggregate({1.0, 2.0, 3.0, 4.0}, Metric::median) == 2.5);
  CHECK(aggregate({5.0, 1.0, 3.0}, Metric::median) == 3.0);
  CHECK(aggregate({7.0}, Metric::iqm) == 7.0);
  CHECK(aggregate({7.0}, Metric::median) == 7.0);

  // Fractional trim at n = 5: the tail items drop entirely and their
  // neighbours keep weight 0.75, so the outlier cannot move the result.
  CHECK(aggregate({0.0, 1.0, 2.0, 3.0, 100.0}, Metric::iqm) ==
        doctest::Approx(2.0).epsilon(1e-12));
  // n = 3 keeps a quarter of each tail item, unlike whole-item trimming.
  CHECK(aggregate({0.0, 1.0, 100.0}, Metric::iqm) ==
        doctest::Approx((0.25 * 0.0 + 1.0 + 0.25 * 100.0) / 1.5)
            .epsilon(1e-12));
}

TEST_CASE("IQM is permutation invariant and bounded by min and max") {
  Rng rng(20240815);
  for (int round = 0; round < 1000; ++round) {
    size_t n = 1 + rng.below(25);
    std::vector<double> xs(n);
    for (double& x : xs)
      x = static_cast<double>(rng.below(1000001)) / 1e6;
    double base = aggregate(xs, Metric::iqm);

    std::vector<double> shuffled = xs;
    rng.shuffle(shuffled);
    CHECK(std::fabs(aggregate(shuffled, Metric::iqm) - base) <= 1e-12);

    auto [mn, mx] = std::minmax_element(xs.begin(), xs.end());
    CHECK(base >= *mn - 1e-12);
    CHECK(base <= *mx + 1e-12);
  }
}

TEST_CASE("optimality gap is zero exactly when every score reaches gamma") {
  CHECK(aggregate({1.0, 1.0, 1.2}, Metric::optimality_gap, 1.0) == 0.0);
  CHECK(aggregate({0.8, 1.0}, Metric::optimality_gap, 0.8) == 0.0);
  CHECK(aggregate({0.999, 1.0}, Metric::optimality_gap, 1.0) > 0.0);
  CHECK(aggregate({0.0}, Metric::optimality_gap, 1.0) == 1.0);
}

TEST_CASE("aggregate rejects empty input and a missing gamma") {
  CHECK(code_of([] { aggregate({}, Metric::mean); }) == Errc::empty_input);
  CHECK(code_of([] { aggregate({1.0}, Metric::optimality_gap); }) ==
        Errc::missing_gamma);
}

TEST_CASE("metric names round-trip") {
  for (Metric m : {Metric::mean, Metric::median, Metric::iqm,
                   Metric::optimality_gap})
    CHECK(parse_metric(metric_name(m)) == m);
  CHECK(parse_metric("IQM") == Metric::iqm);
  CHECK(code_of([] { parse_metric("nope"); }) == Errc::parse_error);
}

TEST_CASE("accuracy matrix tallies per cell") {
  std::vector<solver::TrialRecord> records;
  for (int t = 0; t < 4; ++t)
    records.push_back(
        make_rec("m", Problem::three_sat, 1, 42, t, t < 3));
  for (int t = 0; t < 4; ++t)
    records.push_back(
        make_rec("m", Problem::three_sat, 1, 53, t, t < 1));
  records.push_back(make_rec("m", Problem::tsp, 2, 42, 0, true));

  ScoreMatrix matrix = accuracy_matrix(records);
  REQUIRE(matrix.cells.size() == 3);
  const Cell& a = matrix.cells.at({"m", Problem::three_sat, 1, 42});
  CHECK(a.successes == 3);
  CHECK(a.trials == 4);
  CHECK(a.accuracy() == 0.75);
  CHECK(matrix.cells.at({"m", Problem::three_sat, 1, 53}).accuracy() == 0.25);
  CHECK(matrix.cells.at({"m", Problem::tsp, 2, 42}).accuracy() == 1.0);
}

TEST_CASE("mean of per-seed accuracies equals the pooled ratio at equal "
          "trial counts") {
  std::vector<solver::TrialRecord> records;
  for (int t = 0; t < 4; ++t)
    records.push_back(make_rec("m", Problem::clique, 3, 42, t, t < 3));
  for (int t = 0; t < 4; ++t)
    records.push_back(make_rec("m", Problem::clique, 3, 53, t, t < 1));

  ScoreMatrix matrix = accuracy_matrix(records);
  std::vector<double> accs;
  int successes = 0, trials = 0;
  for (const auto& [key, cell] : matrix.cells) {
    accs.push_back(cell.accuracy());
    successes += cell.successes;
    trials += cell.trials;
  }
  CHECK(aggregate(accs, Metric::mean) ==
        static_cast<double>(successes) / trials);
}

TEST_CASE("cost report reproduces every published spend figure to the cent") {
  struct Row {
    const char* model;
    int64_t prompt;
    int64_t completion;
    double total;
    const char* rendered;
  };
  const std::vector<Row> rows = {
      {"GPT-4o-mini", 30964144, 9442548, 10.31, "$10.31"},
      {"GPT-4o", 30963606, 7786156, 155.27, "$155.27"},
      {"Claude-3.7-Sonnet", 33799101, 11186272, 269.19, "$269.19"},
      {"DeepSeek-V3", 31490957, 16178388, 192.41, "192.41RMB"},
      {"DeepSeek-V3-2503", 31490957, 31808451, 317.45, "317.45RMB"},
      {"DeepSeek-R1", 31512557, 95936418, 1661.03, "1661.03RMB"},
      {"o1-mini", 31360984, 35161551, 189.21, "$189.21"},
      {"o3-mini", 31199884, 110944621, 522.48, "$522.48"},
  };

  // Two records per model so the report has to sum tokens.
  std::vector<solver::TrialRecord> records;
  for (const Row& row : rows) {
    records.push_back(make_rec(row.model, Problem::three_sat, 1, 42, 0, true,
                               row.prompt / 2, row.completion / 2));
    records.push_back(make_rec(row.model, Problem::three_sat, 1, 42, 1, false,
                               row.prompt - row.prompt / 2,
                               row.completion - row.completion / 2));
  }

  std::vector<CostLine> lines = cost_report(records, builtin_price_table());
  REQUIRE(lines.size() == rows.size());
  int matched = 0;
  for (const Row& row : rows) {
    for (const CostLine& line : lines) {
      if (line.model != row.model) continue;
      ++matched;
      CHECK(line.prompt_tokens == row.prompt);
      CHECK(line.completion_tokens == row.completion);
      CHECK(std::fabs(line.total - row.total) <= 0.01);
      CHECK(money_string(line.total, line.currency) == row.rendered);
    }
  }
  CHECK(matched == 8);
}

TEST_CASE("cost report refuses a model without a price") {
  std::vector<solver::TrialRecord> records = {
      make_rec("mystery-model", Problem::three_sat, 1, 42, 0, true, 10, 10)};
  CHECK(code_of([&] { cost_report(records, builtin_price_table()); }) ==
        Errc::unpriced_model);
}

TEST_CASE("money string rounds half a cent up") {
  CHECK(money_string(10.305, Currency::usd) == "$10.31");
  CHECK(money_string(10.304999, Currency::usd) == "$10.30");
  CHECK(money_string(0.0, Currency::usd) == "$0.00");
  CHECK(money_string(2.5, Currency::rmb) == "2.50RMB");
  CHECK(money_string(1661.032916, Currency::rmb) == "1661.03RMB");
}

TEST_CASE("rank models uses competition ranking over mean accuracy") {
  std::vector<solver::TrialRecord> records;
  // a: 1.0 and 0.5 -> 0.75; b: 1.0 and 0.0 -> 0.5; c: 0.5 and 0.5 -> 0.5.
  for (int t = 0; t < 2; ++t) {
    records.push_back(make_rec("a", Problem::tsp, 1, 42, t, true));
    records.push_back(make_rec("a", Problem::tsp, 1, 53, t, t == 0));
    records.push_back(make_rec("b", Problem::tsp, 1, 42, t, true));
    records.push_back(make_rec("b", Problem::tsp, 1, 53, t, false));
    records.push_back(make_rec("c", Problem::tsp, 1, 42, t, t == 0));
    records.push_back(make_rec("c", Problem::tsp, 1, 53, t, t == 0));
    // Noise on another problem that must not leak in.
    records.push_back(make_rec("a", Problem::clique, 1, 42, t, false));
  }

  std::vector<Ranked> ranked =
      rank_models(accuracy_matrix(records), Problem::tsp);
  REQUIRE(ranked.size() == 3);
  CHECK(ranked[0].model == "a");
  CHECK(ranked[0].rank == 1);
  CHECK(ranked[0].mean_accuracy == 0.75);
  CHECK(ranked[1].model == "b");
  CHECK(ranked[1].rank == 2);
  CHECK(ranked[2].model == "c");
  CHECK(ranked[2].rank == 2);  // tie shares the better rank
  CHECK(ranked[1].mean_accuracy == 0.5);
  CHECK(ranked[2].mean_accuracy == 0.5);

  // A strict three-way order with a tie on top skips rank 2.
  std::vector<solver::TrialRecord> tied;
  tied.push_back(make_rec("x", Problem::tsp, 1, 42, 0, true));
  tied.push_back(make_rec("y", Problem::tsp, 1, 42, 0, true));
  tied.push_back(make_rec("z", Problem::tsp, 1, 42, 0, false));
  std::vector<Ranked> top = rank_models(accuracy_matrix(tied), Problem::tsp);
  REQUIRE(top.size() == 3);
  CHECK(top[0].rank == 1);
  CHECK(top[1].rank == 1);
  CHECK(top[2].rank == 3);

  std::vector<solver::TrialRecord> lone = {
      make_rec("only", Problem::tsp, 1, 42, 0, true)};
  CHECK(code_of([&] {
          rank_models(accuracy_matrix(lone), Problem::tsp);
        }) == Errc::insufficient_data);
}

TEST_CASE("error histogram keeps every failure and drops successes") {
  std::vector<solver::TrialRecord> records;
  records.push_back(make_rec("m", Problem::three_sat, 1, 42, 0, true));
  records.push_back(make_rec("m", Problem::three_sat, 1, 42, 1, false));
  records.push_back(make_rec("m", Problem::three_sat, 1, 53, 2, false));
  solver::TrialRecord verif =
      make_rec("m", Problem::three_sat, 2, 42, 0, false);
  verif.outcome.error = ErrorCode{ErrorCategory::verification_error, 0};
  records.push_back(verif);
  solver::TrialRecord prob = make_rec("m", Problem::three_sat, 2, 42, 1, false);
  prob.outcome.error = ErrorCode{ErrorCategory::problem_error, 2};
  records.push_back(prob);
  records.push_back(make_rec("other", Problem::tsp, 1, 42, 0, false));

  auto hist = error_histogram(records);
  CHECK(hist.at({"m", 1}).at("JSON_ERROR") == 2);
  CHECK(hist.at({"m", 2}).at("VERIFICATION_ERROR") == 1);
  CHECK(hist.at({"m", 2}).at("3SAT ERROR 2") == 1);
  CHECK(hist.at({"other", 1}).at("JSON_ERROR") == 1);

  int total = 0;
  for (const auto& [key, counts] : hist)
    for (const auto& [text, count] : counts) total += count;
  CHECK(total == 5);  // one success dropped
}

TEST_CASE("bootstrap interval collapses on constant data") {
  ScoreMatrix slice;
  for (uint64_t seed : {42, 53, 64})
    slice.cells[{"m", Problem::three_sat, 1, seed}] = {3, 4};
  Interval ci = bootstrap_ci(slice, Metric::mean, 500, 0.95, 7);
  CHECK(ci.low == 0.75);
  CHECK(ci.high == 0.75);
}

TEST_CASE("bootstrap interval stays in bounds and is seed-deterministic") {
  ScoreMatrix slice;
  int flip = 0;
  for (Problem p : {Problem::three_sat, Problem::tsp, Problem::clique})
    for (int level : {1, 2})
      for (uint64_t seed : {42, 53, 64}) {
        slice.cells[{"m", p, level, seed}] = {(flip++ % 3), 3};
      }

  Interval a = bootstrap_ci(slice, Metric::mean, 800, 0.95, 11);
  Interval b = bootstrap_ci(slice, Metric::mean, 800, 0.95, 11);
  CHECK(a.low == b.low);
  CHECK(a.high == b.high);
  CHECK(a.low >= 0.0);
  CHECK(a.high <= 1.0);
  CHECK(a.low <= a.high);

  Interval iqm = bootstrap_ci(slice, Metric::iqm, 800, 0.95, 11);
  CHECK(iqm.low >= 0.0);
  CHECK(iqm.high <= 1.0);
  Interval gap =
      bootstrap_ci(slice, Metric::optimality_gap, 800, 0.95, 11, 1.0);
  CHECK(gap.low >= 0.0);
  CHECK(gap.high <= 1.0);
}

TEST_CASE("bootstrap width shrinks as strata gain runs") {
  // Balanced 0/1 runs; quadrupling the per-stratum run count should
  // halve the interval width, far beyond resampling noise.
  auto width_for = [](int runs_per_stratum) {
    Strata strata;
    auto& runs = strata[{"m", Problem::three_sat, 1}];
    for (int i = 0; i < runs_per_stratum; ++i)
      runs.push_back(i % 2 == 0 ? 1.0 : 0.0);
    Interval ci = bootstrap_ci_strata(strata, Metric::mean, 2000, 0.95, 5);
    return ci.high - ci.low;
  };
  double w4 = width_for(4);
  double w16 = width_for(16);
  double w64 = width_for(64);
  CHECK(w4 >= w16);
  CHECK(w16 >= w64);
  CHECK(w64 > 0.0);
}

TEST_CASE("bootstrap rejects bad inputs") {
  ScoreMatrix empty;
  CHECK(code_of([&] { bootstrap_ci(empty, Metric::mean); }) ==
        Errc::empty_stratum);

  ScoreMatrix one;
  one.cells[{"m", Problem::tsp, 1, 42}] = {1, 2};
  CHECK(code_of([&] { bootstrap_ci(one, Metric::mean, 0); }) ==
        Errc::config_mismatch);
  CHECK(code_of([&] { bootstrap_ci(one, Metric::mean, 100, 1.0); }) ==
        Errc::config_mismatch);
  CHECK(code_of([&] { bootstrap_ci(one, Metric::optimality_gap, 10); }) ==
        Errc::missing_gamma);
}

TEST_CASE("report is byte-stable and carries every section") {
  std::vector<solver::TrialRecord> records;
  for (uint64_t seed : {42, 53, 64})
    for (int t = 0; t < 5; ++t) {
      records.push_back(make_rec("GPT-4o", Problem::three_sat, 1, seed, t,
                                 t < 4, 100, 50));
      records.push_back(
          make_rec("GPT-4o", Problem::three_sat, 2, seed, t, t < 2, 120, 80));
      records.push_back(
          make_rec("local-oracle", Problem::tsp, 1, seed, t, true, 0, 0));
    }

  EvalOptions options;
  options.resamples = 200;
  options.seed = 3;
  Report first = build_report(records, options);
  Report second = build_report(records, options);
  CHECK(first.csv == second.csv);
  CHECK(first.summary.dump() == second.summary.dump());

  CHECK(first.csv.rfind("model,problem,level,metric,value,ci_low,ci_high\n",
                        0) == 0);
  CHECK(first.csv.find("GPT-4o,all,all,mean,") != std::string::npos);
  CHECK(first.csv.find("GPT-4o,all,all,median,") != std::string::npos);
  CHECK(first.csv.find("GPT-4o,all,all,iqm,") != std::string::npos);
  CHECK(first.csv.find("GPT-4o,all,all,optimality_gap,") != std::string::npos);
  CHECK(first.csv.find("GPT-4o,3SAT,1,mean,0.800000,") != std::string::npos);
  CHECK(first.csv.find("GPT-4o,3SAT,2,mean,0.400000,") != std::string::npos);
  CHECK(first.csv.find("local-oracle,TSP,1,mean,1.000000,1.000000,1.000000") !=
        std::string::npos);

  const Json& summary = first.summary;
  CHECK(summary.at("models").at("GPT-4o").at("overall").at("mean").at(
            "value") == doctest::Approx(0.6));
  CHECK(summary.at("models")
            .at("GPT-4o")
            .at("problems")
            .at("3SAT")
            .at("1")
            .at("trials") == 15);
  CHECK(summary.at("models")
            .at("GPT-4o")
            .at("problems")
            .at("3SAT")
            .at("1")
            .at("successes") == 12);
  CHECK(summary.at("errors").at("GPT-4o").at("1").at("JSON_ERROR") == 3);
  CHECK(summary.at("costs").at("GPT-4o").at("prompt_tokens") ==
        15 * 100 + 15 * 120);
  CHECK(summary.at("costs").at("GPT-4o").at("currency") == "USD");
  CHECK(summary.at("unpriced").size() == 1);
  CHECK(summary.at("unpriced").at(0) == "local-oracle");
  CHECK(summary.at("options").at("resamples") == 200);

  // A constant-accuracy model keeps a zero-width interval end to end.
  CHECK(summary.at("models")
            .at("local-oracle")
            .at("overall")
            .at("mean")
            .at("ci_low") == 1.0);
  CHECK(summary.at("models")
            .at("local-oracle")
            .at("overall")
            .at("mean")
            .at("ci_high") == 1.0);
}

TEST_CASE("joint-trials runs change the run definition, not the mean") {
  std::vector<solver::TrialRecord> records;
  for (uint64_t seed : {42, 53, 64})
    for (int t = 0; t < 4; ++t)
      records.push_back(
          make_rec("m", Problem::three_sat, 1, seed, t, t < 2, 1, 1));

  EvalOptions per_seed;
  per_seed.resamples = 400;
  EvalOptions joint = per_seed;
  joint.joint_trials = true;

  Report a = build_report(records, per_seed);
  Report b = build_report(records, joint);
  double mean_a =
      a.summary.at("models").at("m").at("overall").at("mean").at("value");
  double mean_b =
      b.summary.at("models").at("m").at("overall").at("mean").at("value");
  CHECK(mean_a == 0.5);
  CHECK(mean_b == 0.5);

  // Per-seed accuracies are constant at 0.5, so that CI collapses; the
  // twelve individual 0/1 trials do not.
  double lo_a =
      a.summary.at("models").at("m").at("overall").at("mean").at("ci_low");
  double hi_a =
      a.summary.at("models").at("m").at("overall").at("mean").at("ci_high");
  double lo_b =
      b.summary.at("models").at("m").at("overall").at("mean").at("ci_low");
  double hi_b =
      b.summary.at("models").at("m").at("overall").at("mean").at("ci_high");
  CHECK(hi_a - lo_a == 0.0);
  CHECK(hi_b - lo_b > 0.0);
}

TEST_CASE("report rejects an empty record set") {
  CHECK(code_of([] { build_report({}); }) == Errc::empty_input);
}
