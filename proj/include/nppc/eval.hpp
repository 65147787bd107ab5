#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "nppc/problem.hpp"
#include "nppc/solver.hpp"

namespace nppc::eval {

enum class Metric { mean, median, iqm, optimality_gap };

std::string metric_name(Metric m);
Metric parse_metric(const std::string& name);  // throws parse_error

struct CellKey {
  std::string model;
  Problem problem = Problem::three_sat;
  int level = 0;
  uint64_t seed = 0;

  auto operator<=>(const CellKey&) const = default;
};

struct Cell {
  int successes = 0;
  int trials = 0;

  double accuracy() const {
    return trials > 0 ? static_cast<double>(successes) / trials : 0.0;
  }
};

// Accuracy per (model, problem, level, seed); missing cells stay absent.
struct ScoreMatrix {
  std::map<CellKey, Cell> cells;
};

ScoreMatrix accuracy_matrix(const std::vector<solver::TrialRecord>& records);

// mean / median / IQM (fractional symmetric 25% trim) / optimality_gap
// (gamma minus the mean of scores clipped at gamma; gamma required).
// Throws empty_input / missing_gamma.
double aggregate(const std::vector<double>& scores, Metric metric,
                 std::optional<double> gamma = {});

struct Interval {
  double low = 0.0;
  double high = 0.0;
};

// Stratified bootstrap percentile interval: strata are (model, problem,
// level) tasks, runs are the per-seed accuracies; runs resample with
// replacement independently within each stratum, the aggregate recomputes
// per resample. Deterministic in seed. Throws empty_stratum on an empty
// slice and missing_gamma like aggregate.
Interval bootstrap_ci(const ScoreMatrix& slice, Metric metric,
                      int resamples = 2000, double confidence = 0.95,
                      uint64_t seed = 0, std::optional<double> gamma = {});

// Task-keyed run scores, for callers that define runs differently (e.g.
// one run per trial instead of one per seed).
using Strata =
    std::map<std::tuple<std::string, Problem, int>, std::vector<double>>;

Interval bootstrap_ci_strata(const Strata& strata, Metric metric,
                             int resamples = 2000, double confidence = 0.95,
                             uint64_t seed = 0,
                             std::optional<double> gamma = {});

struct Ranked {
  std::string model;
  double mean_accuracy = 0.0;
  int rank = 0;
};

// Models ordered by mean accuracy over every level and seed of the problem,
// descending; ties share the better rank and the following rank skips.
// Throws insufficient_data with fewer than two models.
std::vector<Ranked> rank_models(const ScoreMatrix& matrix, Problem problem);

// (model, level) -> canonical error text -> count; ok records excluded.
std::map<std::pair<std::string, int>, std::map<std::string, int>>
error_histogram(const std::vector<solver::TrialRecord>& records);

enum class Currency { usd, rmb };

struct ModelPrice {
  double prompt_per_million = 0.0;
  double completion_per_million = 0.0;
  Currency currency = Currency::usd;
};

using PriceTable = std::map<std::string, ModelPrice>;

// The published per-model API prices.
const PriceTable& builtin_price_table();

struct CostLine {
  std::string model;
  int64_t prompt_tokens = 0;
  int64_t completion_tokens = 0;
  double total = 0.0;  // unrounded; rounding happens at presentation
  Currency currency = Currency::usd;
};

// Token totals priced per model. Throws unpriced_model.
std::vector<CostLine> cost_report(
    const std::vector<solver::TrialRecord>& records, const PriceTable& prices);

// Half-up cent rounding at presentation: "$10.31" / "192.41RMB".
std::string money_string(double amount, Currency currency);

struct EvalOptions {
  int resamples = 2000;
  double confidence = 0.95;
  uint64_t seed = 0;
  double gamma = 1.0;
  // Metric used for the per-(problem, level) rows; the overall rows always
  // carry all four aggregates.
  Metric level_metric = Metric::mean;
  // false: runs are per-seed accuracies (3 per task by default);
  // true: runs are the individual trial outcomes pooled across seeds.
  bool joint_trials = false;
};

struct Report {
  std::string csv;  // model,problem,level,metric,value,ci_low,ci_high
  Json summary;     // same content as a nested document, plus errors/costs
};

// Per model: the four aggregates with CIs over the whole matrix, then a
// per-(problem, level) mean row with its CI. Byte-deterministic in
// (records, options). Throws empty_input when records is empty.
Report build_report(const std::vector<solver::TrialRecord>& records,
                    const EvalOptions& options = {});

}  // namespace nppc::eval
