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

#include "cli.h"

#include <filesystem>
#include <fstream>
#include <optional>
#include <sstream>
#include <utility>

#include "CLI11.hpp"
#include "absl/status/status.h"
#include "absl/strings/str_cat.h"
#include "absl/strings/str_join.h"
#include "absl/strings/str_split.h"
#include "ecdither/contour.h"
#include "ecdither/json_config.h"
#include "ecdither/process.h"
#include "ecdither/report.h"
#include "ecdither/signal.h"
#include "ecdither/sweep.h"
#include "ecdither/wav.h"
#include "run_config.h"

namespace ecdither::cli {
namespace {

namespace fs = std::filesystem;

// Bit depth of every WAV the CLI writes.
constexpr int kOutputBits = 16;

int Fail(std::ostream& err, int code, const absl::Status& status) {
  err << "error: " << status.message() << "\n";
  return code;
}

int IoOrDataCode(const absl::Status& s) {
  return s.code() == absl::StatusCode::kNotFound ||
                 s.code() == absl::StatusCode::kPermissionDenied
             ? kExitIo
             : kExitBadData;
}

int PipelineCode(const absl::Status& s) {
  return s.code() == absl::StatusCode::kInvalidArgument ||
                 s.code() == absl::StatusCode::kOutOfRange
             ? kExitBadData
             : kExitPipeline;
}

absl::StatusOr<std::string> ReadText(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    return absl::NotFoundError(absl::StrCat("cannot open ", path.string()));
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

absl::Status WriteText(const fs::path& path, std::string_view text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out ||
      !out.write(text.data(), static_cast<std::streamsize>(text.size()))) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  out.close();
  if (!out) {
    return absl::PermissionDeniedError(
        absl::StrCat("cannot write ", path.string()));
  }
  return absl::OkStatus();
}

std::string MetricsLine(const ProcessParams& params, const ProcessOutput& o) {
  const MetricRow& m = o.metrics;
  return absl::StrCat(
      "dither=", std::string(DitherKindName(params.dither.kind)),
      " alpha=", FormatNumber(m.alpha),
      " mode=", std::string(DitherModeName(params.mode)),
      " shaping=", params.shaping ? "on" : "off",
      " entropy_bits=", FormatNumber(m.entropy_bits),
      " cond_entropy_bits=", FormatNumber(m.cond_entropy_bits),
      " mse=", FormatNumber(m.mse),
      " coded_bits_per_symbol=", FormatNumber(m.coded_bits_per_symbol),
      " pwsnr_proxy_db=", FormatNumber(m.pwsnr_db),
      " spur_db=", FormatNumber(m.spur_db),
      " max_abs_error=", FormatNumber(o.max_abs_error),
      " max_abs_error_unclipped=", FormatNumber(o.max_abs_error_unclipped),
      " clipped_samples=", o.clipped_samples);
}

struct GenerateArgs {
  std::string note;
  std::optional<double> freq;
  std::string notes = "C4,E4,G4,C5";
  double db = 0.0;
  double duration = 1.0;
  int rate = kDefaultSampleRate;
  int bits = kOutputBits;
  std::string out;
};

int RunGenerate(bool chord, const GenerateArgs& a, std::ostream& out,
                std::ostream& err) {
  absl::StatusOr<Signal> signal;
  if (chord) {
    ChordSpec spec;
    spec.level_db = a.db;
    for (absl::string_view n :
         absl::StrSplit(a.notes, ',', absl::SkipEmpty())) {
      auto hz = NoteFrequency(std::string_view(n.data(), n.size()));
      if (!hz.ok()) return Fail(err, kExitUsage, hz.status());
      spec.tones.push_back({.frequency_hz = *hz, .duration_s = a.duration});
    }
    signal = GenerateChord(spec, a.rate);
  } else {
    double hz = 0.0;
    if (a.freq) {
      hz = *a.freq;
    } else {
      auto f = NoteFrequency(a.note.empty() ? "C4" : a.note);
      if (!f.ok()) return Fail(err, kExitUsage, f.status());
      hz = *f;
    }
    signal = GenerateSine(
        {.frequency_hz = hz, .duration_s = a.duration, .level_db = a.db},
        a.rate);
  }
  if (!signal.ok()) return Fail(err, kExitUsage, signal.status());
  if (auto s = WriteWav(a.out, *signal, a.bits); !s.ok()) {
    return Fail(
        err, s.code() == absl::StatusCode::kOutOfRange ? kExitUsage : kExitIo,
        s);
  }
  out << "wrote " << a.out << " (" << signal->size() << " samples, "
      << signal->sample_rate() << " Hz, " << a.bits << "-bit)\n";
  return kExitOk;
}

struct ProcessArgs {
  std::string in;
  std::string out;
  std::string dither = "tpdf";
  double alpha = 1.0;
  uint64_t seed = 1;
  int bits = 3;
  double full_scale = 1.0;
  bool subtractive = false;
  bool nsd = false;
  std::string construction = "difference";
  std::string shaping;
  int iters = kDefaultShapingIterations;
  int order = kDefaultFirOrder;
  double relaxation = ShapingConfig().relaxation;
  bool redraw = false;
  bool no_normalize = false;
  std::optional<double> fundamental;
  bool json = false;
};

int RunProcess(const ProcessArgs& a, std::ostream& out, std::ostream& err) {
  ProcessParams p;
  auto kind = ParseDitherKind(a.dither);
  if (!kind.ok()) return Fail(err, kExitUsage, kind.status());
  auto construction = ParseTpdfConstruction(a.construction);
  if (!construction.ok()) return Fail(err, kExitUsage, construction.status());
  if (!(a.alpha >= 0.0 && a.alpha <= 1.0)) {
    return Fail(err, kExitUsage,
                absl::InvalidArgumentError("--alpha must be in [0, 1]"));
  }
  p.dither = {.kind = *kind,
              .alpha = a.alpha,
              .seed = a.seed,
              .construction = *construction};
  auto quant = QuantConfig::Create(a.bits, a.full_scale);
  if (!quant.ok()) return Fail(err, kExitUsage, quant.status());
  p.quant = *quant;
  p.mode = a.nsd ? DitherMode::kNonSubtractive : DitherMode::kSubtractive;
  if (!a.shaping.empty()) {
    ShapingConfig shaping{.order = a.order,
                          .iterations = a.iters,
                          .redraw_dither = a.redraw,
                          .relaxation = a.relaxation};
    if (a.shaping != "default") {
      auto contour = LoadContour(a.shaping);
      if (!contour.ok()) {
        return Fail(err,
                    contour.status().code() == absl::StatusCode::kNotFound
                        ? kExitIo
                        : kExitUsage,
                    contour.status());
      }
      shaping.contour = *std::move(contour);
    }
    p.shaping = std::move(shaping);
  }
  p.fundamental_hz = a.fundamental;
  p.normalize = !a.no_normalize;

  auto x = ReadWav(a.in);
  if (!x.ok()) return Fail(err, IoOrDataCode(x.status()), x.status());
  auto result = ProcessSignal(*x, p);
  if (!result.ok())
    return Fail(err, PipelineCode(result.status()), result.status());

  if (a.json) {
    Json j = MetricRowToJson(result->metrics);
    j["max_abs_error"] = result->max_abs_error;
    j["max_abs_error_unclipped"] = result->max_abs_error_unclipped;
    j["clipped_samples"] = result->clipped_samples;
    j["params"] = ProcessParamsToJson(p);
    out << j.dump() << "\n";
  } else {
    out << MetricsLine(p, *result) << "\n";
  }
  if (!a.out.empty()) {
    if (auto s = WriteWav(a.out, result->result.output, kOutputBits); !s.ok()) {
      return Fail(err, kExitIo, s);
    }
  }
  return kExitOk;
}

struct SweepArgs {
  std::string config;
  std::string out_dir;
  bool no_svg = false;
};

int RunSweepCommand(const SweepArgs& a, std::ostream& out, std::ostream& err) {
  auto text = ReadText(a.config);
  if (!text.ok()) return Fail(err, kExitIo, text.status());
  Json j = Json::parse(*text, nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded()) {
    return Fail(
        err, kExitUsage,
        absl::InvalidArgumentError(absl::StrCat(a.config, ": not valid JSON")));
  }
  auto config = ParseRunConfig(j, fs::path(a.config).parent_path());
  if (!config.ok()) {
    return Fail(err, kExitUsage,
                absl::InvalidArgumentError(
                    absl::StrCat(a.config, ": ", config.status().message())));
  }
  if (!a.out_dir.empty()) config->output_dir = a.out_dir;
  if (a.no_svg) config->svg = false;

  const Json resolved = RunConfigToJson(*config);
  out << resolved.dump(2) << "\n";

  auto inputs = ResolveInputs(*config);
  if (!inputs.ok())
    return Fail(err, IoOrDataCode(inputs.status()), inputs.status());

  std::vector<CsvRow> rows;
  Json runs = Json::array();
  for (size_t i = 0; i < inputs->size(); ++i) {
    const RunInput& input = (*inputs)[i];
    SweepConfig sweep = config->sweep;
    if (input.fundamental_hz) sweep.fundamental_hz = input.fundamental_hz;
    auto report = RunSweep(input.signal, sweep);
    if (!report.ok()) {
      return Fail(err, PipelineCode(report.status()),
                  absl::Status(
                      report.status().code(),
                      absl::StrCat(input.id, ": ", report.status().message())));
    }
    err << "sweep " << (i + 1) << "/" << inputs->size() << " " << input.id
        << ": " << report->rows.size() << " rows\n";
    std::vector<CsvRow> r = ReportCsvRows(*report, input.id);
    rows.insert(rows.end(), r.begin(), r.end());
    runs.push_back({{"id", input.id},
                    {"samples", input.signal.size()},
                    {"sample_rate", input.signal.sample_rate()},
                    {"report", SweepReportToJson(*report, false)}});
  }

  std::error_code ec;
  fs::create_directories(config->output_dir, ec);
  if (ec) {
    return Fail(err, kExitIo,
                absl::PermissionDeniedError(
                    absl::StrCat("cannot create ", config->output_dir.string(),
                                 ": ", ec.message())));
  }
  std::vector<std::pair<std::string, std::string>> files = {
      {"sweep.csv", SweepCsv(rows)}};
  if (config->svg) {
    files.emplace_back("entropy.svg", SweepSvg(rows, Chart::kEntropy));
    files.emplace_back("perceptual.svg", SweepSvg(rows, Chart::kPerceptual));
  }
  Json names = Json::array();
  for (const auto& f : files) names.push_back(f.first);
  const Json sidecar = {{"run_config", resolved},
                        {"outputs", names},
                        {"csv_header", std::string(kSweepCsvHeader)},
                        {"runs", runs}};
  files.emplace_back("sweep.json", sidecar.dump(2) + "\n");
  for (const auto& [name, body] : files) {
    if (auto s = WriteText(config->output_dir / name, body); !s.ok()) {
      return Fail(err, kExitIo, s);
    }
    err << "wrote " << (config->output_dir / name).string() << "\n";
  }
  return kExitOk;
}

struct ReportArgs {
  std::string csv;
  std::string scores;
  std::string out;
  std::string svg_dir;
};

int RunReport(const ReportArgs& a, std::ostream& out, std::ostream& err) {
  auto text = ReadText(a.csv);
  if (!text.ok()) return Fail(err, kExitIo, text.status());
  auto rows = ParseSweepCsv(*text);
  if (!rows.ok()) return Fail(err, kExitBadData, rows.status());

  std::string csv = SweepCsv(*rows);
  if (!a.scores.empty()) {
    auto scores_text = ReadText(a.scores);
    if (!scores_text.ok()) return Fail(err, kExitIo, scores_text.status());
    auto scores = ParseExternalScores(*scores_text);
    if (!scores.ok()) return Fail(err, kExitBadData, scores.status());
    auto joined = JoinExternalScores(*rows, *scores);
    if (!joined.ok()) return Fail(err, kExitBadData, joined.status());
    if (joined->unmatched > 0) {
      err << "warning: " << joined->unmatched
          << " external scores matched no row\n";
    }
    csv = std::move(joined->csv);
  }
  if (a.out.empty()) {
    out << csv;
  } else if (auto s = WriteText(a.out, csv); !s.ok()) {
    return Fail(err, kExitIo, s);
  }
  if (!a.svg_dir.empty()) {
    std::error_code ec;
    fs::create_directories(a.svg_dir, ec);
    for (auto [name, chart] :
         {std::pair{"entropy.svg", Chart::kEntropy},
          std::pair{"perceptual.svg", Chart::kPerceptual}}) {
      if (auto s =
              WriteText(fs::path(a.svg_dir) / name, SweepSvg(*rows, chart));
          !s.ok()) {
        return Fail(err, kExitIo, s);
      }
    }
  }
  return kExitOk;
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::ostream& out,
           std::ostream& err) {
  CLI::App app{"Entropy-controlled dithered quantization for audio.",
               "ecdither"};
  app.require_subcommand(1);
  app.set_version_flag("--version", ECDITHER_VERSION);

  GenerateArgs g;
  auto* generate = app.add_subcommand("generate", "Write a test tone WAV");
  generate->require_subcommand(1);
  auto* sine = generate->add_subcommand("sine", "Single sine tone");
  auto* chord = generate->add_subcommand("chord", "Equal-weight sine chord");
  for (auto* sub : {sine, chord}) {
    sub->add_option("--db", g.db, "Peak level in dBFS (<= 0)")
        ->capture_default_str();
    sub->add_option("--duration", g.duration, "Seconds")->capture_default_str();
    sub->add_option("--rate", g.rate, "Sample rate in Hz")
        ->capture_default_str();
    sub->add_option("--bits", g.bits, "WAV bit depth (8 or 16)")
        ->capture_default_str();
    sub->add_option("--out", g.out, "Output WAV")->required();
  }
  auto* note = sine->add_option("--note", g.note, "Note name, e.g. C4 or F#3");
  sine->add_option("--freq", g.freq, "Frequency in Hz")->excludes(note);
  chord->add_option("--notes", g.notes, "Comma-separated note names")
      ->capture_default_str();

  ProcessArgs p;
  auto* process = app.add_subcommand("process", "Dither and quantize a WAV");
  process->add_option("--in", p.in, "Input WAV")->required();
  process->add_option("--out", p.out, "Output WAV (16-bit)");
  process->add_option("--dither", p.dither, "npdf|rpdf|tpdf|mtpdf")
      ->capture_default_str();
  process->add_option("--alpha", p.alpha, "Dither amplitude in [0, 1]")
      ->capture_default_str();
  process->add_option("--seed", p.seed)->capture_default_str();
  process->add_option("--bits", p.bits, "Quantizer bits")
      ->capture_default_str();
  process->add_option("--full-scale", p.full_scale)->capture_default_str();
  auto* sd = process->add_flag("--subtractive", p.subtractive,
                               "Subtractive dither (default)");
  process->add_flag("--nsd", p.nsd, "Non-subtractive dither")->excludes(sd);
  process
      ->add_option("--tpdf-construction", p.construction,
                   "difference|independent_sum")
      ->capture_default_str();
  process->add_option("--shaping", p.shaping,
                      "Noise shaping: 'default' or a contour table file");
  process->add_option("--iters", p.iters, "Shaping iterations")
      ->capture_default_str();
  process->add_option("--order", p.order, "Shaping FIR order")
      ->capture_default_str();
  process->add_option("--relaxation", p.relaxation, "Shaping update step")
      ->capture_default_str();
  process->add_flag("--redraw-dither", p.redraw,
                    "Fresh dither on every shaping pass");
  process->add_flag("--no-normalize", p.no_normalize,
                    "Keep the input level instead of peak-normalizing");
  process->add_option("--fundamental", p.fundamental,
                      "Fundamental in Hz for spur measurement");
  process->add_flag("--json", p.json, "Print metrics as JSON");

  SweepArgs s;
  auto* sweep = app.add_subcommand("sweep", "Run an alpha sweep from a config");
  sweep->add_option("--config", s.config, "Run config (JSON)")->required();
  sweep->add_option("--out-dir", s.out_dir, "Overrides output_dir");
  sweep->add_flag("--no-svg", s.no_svg, "Skip charts");

  ReportArgs r;
  auto* report = app.add_subcommand(
      "report", "Re-emit a sweep CSV, join external scores, draw charts");
  report->add_option("--csv", r.csv, "Sweep CSV")->required();
  report->add_option("--scores", r.scores,
                     "External scores CSV (file_id,alpha,metric_name,score)");
  report->add_option("--out", r.out, "Joined CSV; stdout when omitted");
  report->add_option("--svg-dir", r.svg_dir, "Write charts here");

  std::vector<const char*> argv = {"ecdither"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (*sine) return RunGenerate(false, g, out, err);
  if (*chord) return RunGenerate(true, g, out, err);
  if (*process) return RunProcess(p, out, err);
  if (*sweep) return RunSweepCommand(s, out, err);
  return RunReport(r, out, err);
}

}  // namespace ecdither::cli
