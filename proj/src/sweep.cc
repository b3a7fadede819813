// Copyright 2026 The Ecdither Authors. All Rights Reserved.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "ecdither/sweep.h"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <mutex>
#include <numeric>
#include <string>
#include <thread>

#include "absl/strings/str_cat.h"
#include "ecdither/contour.h"
#include "ecdither/rng.h"

namespace ecdither {

std::string_view ConditionName(Condition c) {
  switch (c) {
    case Condition::kTpdf:
      return "tpdf";
    case Condition::kTpdfShaping:
      return "tpdf_shaping";
    case Condition::kModifiedTpdf:
      return "mtpdf";
    case Condition::kModifiedTpdfShaping:
      return "mtpdf_shaping";
    case Condition::kRpdf:
      return "rpdf";
    case Condition::kNpdf:
      return "npdf";
  }
  return "unknown";
}

absl::StatusOr<Condition> ParseCondition(std::string_view name) {
  for (Condition c : AllConditions()) {
    if (ConditionName(c) == name) return c;
  }
  return absl::InvalidArgumentError(absl::StrCat(
      "unknown condition '", std::string(name),
      "' (expected tpdf|tpdf_shaping|mtpdf|mtpdf_shaping|rpdf|npdf)"));
}

DitherKind ConditionDither(Condition c) {
  switch (c) {
    case Condition::kTpdf:
    case Condition::kTpdfShaping:
      return DitherKind::kTriangular;
    case Condition::kModifiedTpdf:
    case Condition::kModifiedTpdfShaping:
      return DitherKind::kModifiedTriangular;
    case Condition::kRpdf:
      return DitherKind::kRectangular;
    case Condition::kNpdf:
      return DitherKind::kNone;
  }
  return DitherKind::kNone;
}

bool ConditionShaped(Condition c) {
  return c == Condition::kTpdfShaping || c == Condition::kModifiedTpdfShaping;
}

std::vector<Condition> AllConditions() {
  return {Condition::kTpdf,         Condition::kTpdfShaping,
          Condition::kModifiedTpdf, Condition::kModifiedTpdfShaping,
          Condition::kRpdf,         Condition::kNpdf};
}

std::string_view SelectionRuleName(SelectionRule rule) {
  return rule == SelectionRule::kKnee ? "knee" : "argmax_j";
}

absl::StatusOr<SelectionRule> ParseSelectionRule(std::string_view name) {
  if (name == "knee") return SelectionRule::kKnee;
  if (name == "argmax_j") return SelectionRule::kArgmaxObjective;
  return absl::InvalidArgumentError(absl::StrCat("unknown selection rule '",
                                                 std::string(name),
                                                 "' (expected knee|argmax_j)"));
}

absl::Status ValidateSweepConfig(const SweepConfig& config) {
  if (config.alpha_count < 3) {
    return absl::InvalidArgumentError(
        absl::StrCat("alpha_count must be >= 3, got ", config.alpha_count));
  }
  if (config.shaped_alpha_count.has_value() && *config.shaped_alpha_count < 3) {
    return absl::InvalidArgumentError(absl::StrCat(
        "shaped_alpha_count must be >= 3, got ", *config.shaped_alpha_count));
  }
  if (config.conditions.empty()) {
    return absl::InvalidArgumentError("no conditions selected");
  }
  if (!(config.lambda >= 0.0 && config.lambda <= 1.0)) {
    return absl::InvalidArgumentError(
        absl::StrCat("lambda must be in [0, 1], got ", config.lambda));
  }
  if (!(config.knee_threshold > 0.0 && config.knee_threshold <= 1.0)) {
    return absl::InvalidArgumentError(absl::StrCat(
        "knee_threshold must be in (0, 1], got ", config.knee_threshold));
  }
  if (config.shaping.iterations < 1) {
    return absl::InvalidArgumentError("shaping iterations must be >= 1");
  }
  return absl::OkStatus();
}

std::vector<double> AlphaGrid(int count) {
  std::vector<double> grid(std::max(count, 2));
  const double last = static_cast<double>(grid.size() - 1);
  for (size_t i = 0; i < grid.size(); ++i)
    grid[i] = static_cast<double>(i) / last;
  return grid;
}

std::vector<double> NormalizedPerceptual(std::span<const MetricRow> rows) {
  std::vector<double> out(rows.size(), 1.0);
  if (rows.empty()) return out;
  double lo = rows[0].pwsnr_db;
  double hi = rows[0].pwsnr_db;
  for (const MetricRow& r : rows) {
    lo = std::min(lo, r.pwsnr_db);
    hi = std::max(hi, r.pwsnr_db);
  }
  if (!(hi > lo)) return out;
  for (size_t i = 0; i < rows.size(); ++i) {
    out[i] = (rows[i].pwsnr_db - lo) / (hi - lo);
  }
  return out;
}

double Objective(const MetricRow& row, double p_norm, double lambda, int bits,
                 bool degenerate) {
  const double c = 1.0 - row.entropy_bits / static_cast<double>(bits);
  if (degenerate) return c;
  return (1.0 - lambda) * p_norm + lambda * c;
}

absl::StatusOr<Selection> SelectAlpha(std::span<const MetricRow> rows,
                                      SelectionRule rule, int bits,
                                      double lambda, double knee_threshold) {
  if (rows.size() < 3) {
    return absl::InvalidArgumentError(absl::StrCat(
        "alpha selection needs at least 3 rows, got ", rows.size()));
  }
  std::vector<double> p = NormalizedPerceptual(rows);
  const bool degenerate = std::all_of(
      rows.begin(), rows.end(),
      [&](const MetricRow& r) { return r.pwsnr_db == rows[0].pwsnr_db; });
  std::vector<size_t> order(rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](size_t a, size_t b) {
    return rows[a].alpha < rows[b].alpha;
  });

  std::vector<double> j(rows.size());
  for (size_t i = 0; i < rows.size(); ++i) {
    j[i] = Objective(rows[i], p[i], lambda, bits, degenerate);
  }

  size_t best = order.front();
  if (rule == SelectionRule::kKnee) {
    const double max_p = *std::max_element(p.begin(), p.end());
    for (size_t i : order) {
      if (p[i] >= knee_threshold * max_p) {
        best = i;
        break;
      }
    }
  } else {
    for (size_t i : order) {
      if (j[i] > j[best]) best = i;
    }
  }
  return Selection{rows[best].alpha, best, j[best]};
}

int SweepWorkerCount() {
  if (const char* env = std::getenv("ECDITHER_WORKERS")) {
    char* end = nullptr;
    const long n = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && n > 0) {
      return static_cast<int>(std::min<long>(n, 1024));
    }
  }
  return static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
}

namespace {

struct Job {
  Condition condition;
  size_t alpha_index;
  double alpha;
};

class JobRunner {
 public:
  JobRunner(const Signal& x, const SweepConfig& config,
            const MetricEvaluator& evaluator, const Shaper* shaper)
      : x_(x), config_(config), evaluator_(evaluator), shaper_(shaper) {}

  absl::StatusOr<MetricRow> Run(const Job& job) const {
    const DitherSpec dither{
        .kind = ConditionDither(job.condition),
        .alpha = job.alpha,
        .seed = MixSeed(config_.seed, job.alpha_index),
        .construction = config_.construction,
    };
    absl::StatusOr<QuantResult> result =
        ConditionShaped(job.condition)
            ? shaper_->Run(x_, dither, config_.quant, config_.mode)
            : RunPipeline(x_, dither, config_.quant, config_.mode);
    if (!result.ok()) {
      return absl::Status(
          result.status().code(),
          absl::StrCat("condition ", std::string(ConditionName(job.condition)),
                       " alpha ", job.alpha, ": ", result.status().message()));
    }
    return evaluator_.Evaluate(job.alpha, *result);
  }

 private:
  const Signal& x_;
  const SweepConfig& config_;
  const MetricEvaluator& evaluator_;
  const Shaper* shaper_;
};

}  // namespace

absl::StatusOr<SweepReport> RunSweep(const Signal& x, const SweepConfig& config,
                                     SweepControl* control) {
  if (auto status = ValidateSweepConfig(config); !status.ok()) return status;
  if (x.empty()) return absl::InvalidArgumentError("empty signal");

  std::vector<Condition> conditions = config.conditions;
  std::sort(conditions.begin(), conditions.end());
  conditions.erase(std::unique(conditions.begin(), conditions.end()),
                   conditions.end());

  auto evaluator = MetricEvaluator::Create(
      x, config.quant, config.shaping.contour, config.fundamental_hz);
  if (!evaluator.ok()) return evaluator.status();

  std::optional<Shaper> shaper;
  if (std::any_of(conditions.begin(), conditions.end(), ConditionShaped)) {
    auto created = Shaper::Create(config.shaping, x.sample_rate());
    if (!created.ok()) return created.status();
    shaper = *std::move(created);
  }
  JobRunner runner(x, config, *evaluator, shaper ? &*shaper : nullptr);

  SweepReport report;
  report.config = config;
  report.config.conditions = conditions;
  report.contour_hash = ContourHash(config.shaping.contour);
  report.version = ECDITHER_VERSION;

  auto baseline = runner.Run({Condition::kNpdf, 0, 0.0});
  if (!baseline.ok()) return baseline.status();
  report.npdf_baseline = *baseline;

  // NPDF ignores alpha, so its rows are the baseline with alpha filled in.
  std::vector<Job> jobs;
  std::vector<std::vector<double>> grids;
  for (Condition c : conditions) {
    grids.push_back(AlphaGrid(ConditionShaped(c) && config.shaped_alpha_count
                                  ? *config.shaped_alpha_count
                                  : config.alpha_count));
    if (c == Condition::kNpdf) continue;
    for (size_t i = 0; i < grids.back().size(); ++i) {
      jobs.push_back({c, i, grids.back()[i]});
    }
  }
  if (control != nullptr) control->SetTotal(jobs.size());

  std::vector<std::optional<MetricRow>> results(jobs.size());
  std::atomic<size_t> next{0};
  std::atomic<bool> failed{false};
  std::mutex error_mu;
  size_t error_job = jobs.size();
  absl::Status error;

  auto worker = [&] {
    while (true) {
      if (failed.load() || (control != nullptr && control->cancelled())) return;
      const size_t k = next.fetch_add(1);
      if (k >= jobs.size()) return;
      auto row = runner.Run(jobs[k]);
      if (!row.ok()) {
        std::lock_guard<std::mutex> lock(error_mu);
        if (k < error_job) {
          error_job = k;
          error = row.status();
        }
        failed.store(true);
        return;
      }
      results[k] = *row;
      if (control != nullptr) control->AddCompleted();
    }
  };

  const size_t workers =
      std::min<size_t>(static_cast<size_t>(SweepWorkerCount()),
                       std::max<size_t>(jobs.size(), 1));
  if (workers <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (size_t w = 0; w < workers; ++w) pool.emplace_back(worker);
    for (std::thread& t : pool) t.join();
  }
  if (failed.load()) return error;
  report.complete = control == nullptr || !control->cancelled() ||
                    std::all_of(results.begin(), results.end(),
                                [](const auto& r) { return r.has_value(); });

  size_t k = 0;
  for (size_t ci = 0; ci < conditions.size(); ++ci) {
    const Condition c = conditions[ci];
    std::vector<MetricRow> rows;
    if (c == Condition::kNpdf) {
      for (double alpha : grids[ci]) {
        MetricRow row = report.npdf_baseline;
        row.alpha = alpha;
        rows.push_back(row);
      }
    } else {
      for (size_t i = 0; i < grids[ci].size(); ++i, ++k) {
        if (results[k].has_value()) rows.push_back(*results[k]);
      }
    }
    for (const MetricRow& row : rows) report.rows.push_back({c, row});
    if (rows.size() < 3) continue;
    auto sel = SelectAlpha(rows, config.rule, config.quant.bits(),
                           config.lambda, config.knee_threshold);
    if (!sel.ok()) return sel.status();
    const double score = rows[sel->index].pwsnr_db;
    report.optimal.push_back({
        .condition = c,
        .alpha = sel->alpha,
        .rule = config.rule,
        .score_at_optimum = score,
        .improvement_over_npdf = score - report.npdf_baseline.pwsnr_db,
        .objective = sel->objective,
    });
  }
  return report;
}

}  // namespace ecdither
