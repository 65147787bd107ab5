#include <algorithm>
#include <cmath>
#include <cstdio>

#include "nppc/error.hpp"
#include "nppc/eval.hpp"

namespace nppc::eval {

std::string metric_name(Metric m) {
  switch (m) {
    case Metric::mean: return "mean";
    case Metric::median: return "median";
    case Metric::iqm: return "iqm";
    case Metric::optimality_gap: return "optimality_gap";
  }
  fail(Errc::parse_error, "bad metric value");
}

Metric parse_metric(const std::string& name) {
  if (name == "mean") return Metric::mean;
  if (name == "median") return Metric::median;
  if (name == "iqm" || name == "IQM") return Metric::iqm;
  if (name == "optimality_gap") return Metric::optimality_gap;
  fail(Errc::parse_error, "unknown metric: " + name);
}

ScoreMatrix accuracy_matrix(const std::vector<solver::TrialRecord>& records) {
  ScoreMatrix matrix;
  for (const auto& rec : records) {
    Cell& cell =
        matrix.cells[{rec.model, rec.problem, rec.level, rec.seed}];
    cell.trials += 1;
    if (rec.outcome.ok) cell.successes += 1;
  }
  return matrix;
}

namespace {

double mean_of(const std::vector<double>& xs) {
  double sum = 0.0;
  for (double x : xs) sum += x;
  return sum / static_cast<double>(xs.size());
}

double median_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  size_t n = xs.size();
  if (n % 2 == 1) return xs[n / 2];
  return (xs[n / 2 - 1] + xs[n / 2]) / 2.0;
}

// Interquartile mean with fractional trimming: sorted item i in [0, n)
// carries weight max(0, min(i + 1, 0.75 n) - max(i, 0.25 n)), so a quarter
// of the total mass drops off each tail even when n is not divisible by 4.
double iqm_of(std::vector<double> xs) {
  std::sort(xs.begin(), xs.end());
  double n = static_cast<double>(xs.size());
  double lo = 0.25 * n;
  double hi = 0.75 * n;
  double weighted = 0.0;
  double weight = 0.0;
  for (size_t i = 0; i < xs.size(); ++i) {
    double left = std::max(static_cast<double>(i), lo);
    double right = std::min(static_cast<double>(i + 1), hi);
    double w = std::max(0.0, right - left);
    weighted += w * xs[i];
    weight += w;
  }
  return weighted / weight;
}

}  // namespace

double aggregate(const std::vector<double>& scores, Metric metric,
                 std::optional<double> gamma) {
  if (scores.empty()) fail(Errc::empty_input, "aggregate: no scores");
  switch (metric) {
    case Metric::mean:
      return mean_of(scores);
    case Metric::median:
      return median_of(scores);
    case Metric::iqm:
      return iqm_of(scores);
    case Metric::optimality_gap: {
      if (!gamma)
        fail(Errc::missing_gamma, "optimality_gap requires gamma");
      double sum = 0.0;
      for (double s : scores) sum += std::min(s, *gamma);
      return *gamma - sum / static_cast<double>(scores.size());
    }
  }
  fail(Errc::parse_error, "bad metric value");
}

std::vector<Ranked> rank_models(const ScoreMatrix& matrix, Problem problem) {
  std::map<std::string, std::vector<double>> per_model;
  for (const auto& [key, cell] : matrix.cells)
    if (key.problem == problem) per_model[key.model].push_back(cell.accuracy());
  if (per_model.size() < 2)
    fail(Errc::insufficient_data,
         "rank_models needs at least two models with results for " +
             problem_name(problem));

  std::vector<Ranked> out;
  for (const auto& [model, scores] : per_model)
    out.push_back({model, mean_of(scores), 0});
  std::sort(out.begin(), out.end(), [](const Ranked& a, const Ranked& b) {
    if (a.mean_accuracy != b.mean_accuracy)
      return a.mean_accuracy > b.mean_accuracy;
    return a.model < b.model;
  });
  for (size_t i = 0; i < out.size(); ++i) {
    if (i > 0 && out[i].mean_accuracy == out[i - 1].mean_accuracy)
      out[i].rank = out[i - 1].rank;  // ties share the better rank
    else
      out[i].rank = static_cast<int>(i) + 1;
  }
  return out;
}

std::map<std::pair<std::string, int>, std::map<std::string, int>>
error_histogram(const std::vector<solver::TrialRecord>& records) {
  std::map<std::pair<std::string, int>, std::map<std::string, int>> hist;
  for (const auto& rec : records) {
    if (rec.outcome.ok || !rec.outcome.error) continue;
    std::string text = format_error(*rec.outcome.error, rec.problem);
    hist[{rec.model, rec.level}][text] += 1;
  }
  return hist;
}

const PriceTable& builtin_price_table() {
  static const PriceTable table = {
      {"GPT-4o-mini", {0.15, 0.6, Currency::usd}},
      {"GPT-4o", {2.5, 10.0, Currency::usd}},
      {"Claude-3.7-Sonnet", {3.0, 15.0, Currency::usd}},
      {"DeepSeek-V3", {2.0, 8.0, Currency::rmb}},
      {"DeepSeek-V3-2503", {2.0, 8.0, Currency::rmb}},
      {"DeepSeek-R1", {4.0, 16.0, Currency::rmb}},
      {"o1-mini", {1.1, 4.4, Currency::usd}},
      {"o3-mini", {1.1, 4.4, Currency::usd}},
  };
  return table;
}

std::vector<CostLine> cost_report(
    const std::vector<solver::TrialRecord>& records,
    const PriceTable& prices) {
  std::map<std::string, std::pair<int64_t, int64_t>> tokens;
  for (const auto& rec : records) {
    auto& [prompt, completion] = tokens[rec.model];
    prompt += rec.prompt_tokens;
    completion += rec.completion_tokens;
  }
  std::vector<CostLine> out;
  for (const auto& [model, counts] : tokens) {
    auto it = prices.find(model);
    if (it == prices.end())
      fail(Errc::unpriced_model, "no price entry for model: " + model);
    const ModelPrice& price = it->second;
    CostLine line;
    line.model = model;
    line.prompt_tokens = counts.first;
    line.completion_tokens = counts.second;
    line.total =
        static_cast<double>(counts.first) * price.prompt_per_million / 1e6 +
        static_cast<double>(counts.second) * price.completion_per_million /
            1e6;
    line.currency = price.currency;
    out.push_back(line);
  }
  return out;
}

std::string money_string(double amount, Currency currency) {
  long long cents = std::llround(amount * 100.0);
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%lld.%02lld", cents / 100,
                std::llabs(cents % 100));
  if (currency == Currency::usd) return std::string("$") + buf;
  return std::string(buf) + "RMB";
}

}  // namespace nppc::eval
