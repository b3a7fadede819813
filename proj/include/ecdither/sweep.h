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

#ifndef ECDITHER_SWEEP_H_
#define ECDITHER_SWEEP_H_

#include <atomic>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ecdither/dither.h"
#include "ecdither/metric_row.h"
#include "ecdither/pipeline.h"
#include "ecdither/quantizer.h"
#include "ecdither/shaper.h"
#include "ecdither/signal.h"

namespace ecdither {

// Declaration order is report order.
enum class Condition {
  kTpdf,
  kTpdfShaping,
  kModifiedTpdf,
  kModifiedTpdfShaping,
  kRpdf,
  kNpdf,
};

std::string_view ConditionName(Condition c);
absl::StatusOr<Condition> ParseCondition(std::string_view name);
DitherKind ConditionDither(Condition c);
bool ConditionShaped(Condition c);
std::vector<Condition> AllConditions();

enum class SelectionRule {
  kKnee,             // smallest alpha with P~ >= threshold * max P~
  kArgmaxObjective,  // largest J(lambda)
};

std::string_view SelectionRuleName(SelectionRule rule);
absl::StatusOr<SelectionRule> ParseSelectionRule(std::string_view name);

struct SweepConfig {
  // Uniform grid on [0, 1], both ends included.
  int alpha_count = 1000;
  // Grid size for shaped conditions; alpha_count when unset.
  std::optional<int> shaped_alpha_count;
  std::vector<Condition> conditions = AllConditions();
  QuantConfig quant;
  ShapingConfig shaping;
  DitherMode mode = DitherMode::kSubtractive;
  // Weight of compressibility against the perceptual proxy in J.
  double lambda = 0.5;
  uint64_t seed = 1;
  SelectionRule rule = SelectionRule::kKnee;
  double knee_threshold = 0.95;
  // Enables spur measurement for tonal inputs.
  std::optional<double> fundamental_hz;
  TpdfConstruction construction = TpdfConstruction::kDifference;
};

absl::Status ValidateSweepConfig(const SweepConfig& config);

// i / (count - 1) for i in [0, count). Requires count >= 2.
std::vector<double> AlphaGrid(int count);

// P~: pwsnr min-max normalized over `rows`. All ones when every row has the
// same pwsnr.
std::vector<double> NormalizedPerceptual(std::span<const MetricRow> rows);

// J = (1 - lambda) P~ + lambda C~ with C~ = 1 - entropy_bits / bits. A
// degenerate P~ range leaves J = C~.
double Objective(const MetricRow& row, double p_norm, double lambda, int bits,
                 bool degenerate = false);

struct Selection {
  double alpha = 0.0;
  size_t index = 0;  // into the rows passed in
  double objective = 0.0;
};

// Needs at least three rows. Ties go to the smallest alpha, independent of
// row order.
absl::StatusOr<Selection> SelectAlpha(std::span<const MetricRow> rows,
                                      SelectionRule rule, int bits,
                                      double lambda = 0.5,
                                      double knee_threshold = 0.95);

struct SweepRow {
  Condition condition = Condition::kTpdf;
  MetricRow metrics;
};

struct OptimalAlpha {
  Condition condition = Condition::kTpdf;
  double alpha = 0.0;
  SelectionRule rule = SelectionRule::kKnee;
  // pwsnr_db at alpha, and its difference to the undithered baseline.
  double score_at_optimum = 0.0;
  double improvement_over_npdf = 0.0;
  double objective = 0.0;
};

struct SweepReport {
  SweepConfig config;
  // Sorted by condition, then alpha.
  std::vector<SweepRow> rows;
  std::vector<OptimalAlpha> optimal;
  // Unshaped, undithered pass; the reference for improvement_over_npdf.
  MetricRow npdf_baseline;
  std::string contour_hash;
  std::string version;
  // False when the sweep was cancelled; rows then hold what finished.
  bool complete = true;
};

// Progress and cancellation for a running sweep. Safe to poll and cancel
// from other threads.
class SweepControl {
 public:
  void Cancel() { cancelled_.store(true); }
  bool cancelled() const { return cancelled_.load(); }
  size_t completed() const { return completed_.load(); }
  size_t total() const { return total_.load(); }

  // Updated by RunSweep.
  void SetTotal(size_t total) { total_.store(total); }
  void AddCompleted() { completed_.fetch_add(1); }

 private:
  std::atomic<bool> cancelled_{false};
  std::atomic<size_t> completed_{0};
  std::atomic<size_t> total_{0};
};

// ECDITHER_WORKERS when set to a positive integer, else the hardware
// concurrency (at least 1).
int SweepWorkerCount();

// Evaluates every (condition, alpha) pair on a bounded worker pool. Dither
// for grid index i uses seed MixSeed(config.seed, i), shared by all
// conditions. Output is independent of scheduling. A diverging shaped run
// fails the sweep with the condition and alpha in the message.
absl::StatusOr<SweepReport> RunSweep(const Signal& x, const SweepConfig& config,
                                     SweepControl* control = nullptr);

}  // namespace ecdither

#endif  // ECDITHER_SWEEP_H_
