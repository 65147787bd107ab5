#include <algorithm>
#include <cstdio>
#include <set>

#include "nppc/error.hpp"
#include "nppc/eval.hpp"

namespace nppc::eval {

namespace {

std::string fixed6(double x) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6f", x);
  return buf;
}

std::string csv_field(const std::string& raw) {
  if (raw.find_first_of(",\"\n") == std::string::npos) return raw;
  std::string quoted = "\"";
  for (char c : raw) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + "\"";
}

void csv_row(std::string& out, const std::string& model,
             const std::string& problem, const std::string& level,
             const std::string& metric, double value, Interval ci) {
  out += csv_field(model) + "," + csv_field(problem) + "," + level + "," +
         metric + "," + fixed6(value) + "," + fixed6(ci.low) + "," +
         fixed6(ci.high) + "\n";
}

Json interval_json(double value, Interval ci) {
  Json doc = Json::object();
  doc["value"] = value;
  doc["ci_low"] = ci.low;
  doc["ci_high"] = ci.high;
  return doc;
}

}  // namespace

Report build_report(const std::vector<solver::TrialRecord>& records,
                    const EvalOptions& options) {
  if (records.empty()) fail(Errc::empty_input, "build_report: no records");

  ScoreMatrix matrix = accuracy_matrix(records);

  // Run scores per task. Default runs are the per-seed accuracies; the
  // joint variant makes every trial its own 0/1 run instead.
  std::map<std::string, Strata> per_model;
  if (options.joint_trials) {
    // Group trials deterministically regardless of record order.
    std::map<std::tuple<std::string, Problem, int, uint64_t, int>, double>
        trial_scores;
    for (const auto& rec : records)
      trial_scores[{rec.model, rec.problem, rec.level, rec.seed,
                    rec.trial_index}] = rec.outcome.ok ? 1.0 : 0.0;
    for (const auto& [key, score] : trial_scores) {
      const auto& [model, problem, level, seed, trial] = key;
      per_model[model][{model, problem, level}].push_back(score);
    }
  } else {
    for (const auto& [key, cell] : matrix.cells)
      per_model[key.model][{key.model, key.problem, key.level}].push_back(
          cell.accuracy());
  }

  // Trial tallies per (model, problem, level), pooled over seeds.
  std::map<std::tuple<std::string, Problem, int>, std::pair<int, int>> tallies;
  for (const auto& [key, cell] : matrix.cells) {
    auto& [successes, trials] = tallies[{key.model, key.problem, key.level}];
    successes += cell.successes;
    trials += cell.trials;
  }

  const std::vector<Metric> metrics = {Metric::mean, Metric::median,
                                       Metric::iqm, Metric::optimality_gap};
  std::optional<double> gamma = options.gamma;

  std::string csv = "model,problem,level,metric,value,ci_low,ci_high\n";
  Json models_json = Json::object();

  for (const auto& [model, strata] : per_model) {
    std::vector<double> pooled;
    for (const auto& [task, runs] : strata)
      pooled.insert(pooled.end(), runs.begin(), runs.end());

    Json overall = Json::object();
    for (Metric metric : metrics) {
      double value = aggregate(pooled, metric, gamma);
      Interval ci =
          bootstrap_ci_strata(strata, metric, options.resamples,
                              options.confidence, options.seed, gamma);
      csv_row(csv, model, "all", "all", metric_name(metric), value, ci);
      overall[metric_name(metric)] = interval_json(value, ci);
    }

    Json problems_json = Json::object();
    for (Problem problem : all_problems()) {
      std::set<int> levels;
      for (const auto& [task, runs] : strata)
        if (std::get<1>(task) == problem) levels.insert(std::get<2>(task));
      if (levels.empty()) continue;
      Json levels_json = Json::object();
      for (int level : levels) {
        Strata stratum;
        stratum[{model, problem, level}] = strata.at({model, problem, level});
        const auto& runs = stratum.begin()->second;
        double value = aggregate(runs, options.level_metric, gamma);
        Interval ci = bootstrap_ci_strata(stratum, options.level_metric,
                                          options.resamples,
                                          options.confidence, options.seed,
                                          gamma);
        csv_row(csv, model, problem_name(problem), std::to_string(level),
                metric_name(options.level_metric), value, ci);
        Json cell = interval_json(value, ci);
        const auto& [successes, trials] = tallies.at({model, problem, level});
        cell["successes"] = successes;
        cell["trials"] = trials;
        levels_json[std::to_string(level)] = cell;
      }
      problems_json[problem_name(problem)] = levels_json;
    }

    Json entry = Json::object();
    entry["overall"] = overall;
    entry["problems"] = problems_json;
    models_json[model] = entry;
  }

  // Errors by (model, level).
  Json errors_json = Json::object();
  for (const auto& [key, counts] : error_histogram(records)) {
    Json level_json = Json::object();
    for (const auto& [text, count] : counts) level_json[text] = count;
    errors_json[key.first][std::to_string(key.second)] = level_json;
  }

  // Costs for the models the builtin table prices; the rest are listed.
  const PriceTable& prices = builtin_price_table();
  std::vector<solver::TrialRecord> priced;
  std::set<std::string> unpriced;
  for (const auto& rec : records) {
    if (prices.count(rec.model))
      priced.push_back(rec);
    else
      unpriced.insert(rec.model);
  }
  Json costs_json = Json::object();
  if (!priced.empty()) {
    for (const CostLine& line : cost_report(priced, prices)) {
      Json entry = Json::object();
      entry["prompt_tokens"] = line.prompt_tokens;
      entry["completion_tokens"] = line.completion_tokens;
      entry["total"] = money_string(line.total, line.currency);
      entry["currency"] = line.currency == Currency::usd ? "USD" : "RMB";
      costs_json[line.model] = entry;
    }
  }
  Json unpriced_json = Json::array();
  for (const auto& model : unpriced) unpriced_json.push_back(model);

  Json options_json = Json::object();
  options_json["resamples"] = options.resamples;
  options_json["confidence"] = options.confidence;
  options_json["seed"] = options.seed;
  options_json["gamma"] = options.gamma;
  options_json["joint_trials"] = options.joint_trials;

  Report report;
  report.csv = std::move(csv);
  report.summary = Json::object();
  report.summary["models"] = models_json;
  report.summary["errors"] = errors_json;
  report.summary["costs"] = costs_json;
  report.summary["unpriced"] = unpriced_json;
  report.summary["options"] = options_json;
  return report;
}

}  // namespace nppc::eval
