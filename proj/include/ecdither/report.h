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

#ifndef ECDITHER_REPORT_H_
#define ECDITHER_REPORT_H_

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "absl/status/statusor.h"
#include "ecdither/metric_row.h"
#include "ecdither/sweep.h"

namespace ecdither {

// Frozen column order of sweep CSV files.
inline constexpr std::string_view kSweepCsvHeader =
    "file_id,condition,alpha,entropy_bits,cond_entropy_bits,mse,"
    "coded_bits_per_symbol,pwsnr_proxy_db,spur_db";

inline constexpr std::string_view kExternalScoresHeader =
    "file_id,alpha,metric_name,score";

// Shortest text that parses back to the same double; "nan", "inf", "-inf"
// for non-finite values.
std::string FormatNumber(double v);
absl::StatusOr<double> ParseNumber(std::string_view text);

struct CsvRow {
  // "<input>.<condition>": names one processed file per alpha, the unit an
  // external scorer sees.
  std::string file_id;
  Condition condition = Condition::kTpdf;
  MetricRow metrics;
};

std::vector<CsvRow> ReportCsvRows(const SweepReport& report,
                                  std::string_view input_id);

// Header line plus one line per row, "\n" terminated.
std::string SweepCsv(std::span<const CsvRow> rows);
absl::StatusOr<std::vector<CsvRow>> ParseSweepCsv(std::string_view text);

struct ExternalScore {
  std::string file_id;
  double alpha = 0.0;
  std::string metric_name;
  double score = 0.0;
};

absl::StatusOr<std::vector<ExternalScore>> ParseExternalScores(
    std::string_view text);

struct JoinedCsv {
  std::string csv;
  // Scores whose (file_id, alpha) matched no row.
  size_t unmatched = 0;
};

// Sweep CSV with one extra column per metric name, in name order. Keys match
// on file_id text and alpha value exactly; cells without a score stay empty.
// Duplicate (file_id, alpha, metric_name) entries are an error.
absl::StatusOr<JoinedCsv> JoinExternalScores(
    std::span<const CsvRow> rows, std::span<const ExternalScore> scores);

enum class Chart {
  kEntropy,     // entropy_bits vs alpha
  kPerceptual,  // normalized pwsnr proxy vs alpha
};

// Line chart with one series per file_id.
std::string SweepSvg(std::span<const CsvRow> rows, Chart chart);

}  // namespace ecdither

#endif  // ECDITHER_REPORT_H_
