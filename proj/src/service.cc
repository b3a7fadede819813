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

#include "ecdither/service.h"

#include <string>
#include <utility>
#include <vector>

#include "absl/strings/escaping.h"
#include "absl/strings/str_cat.h"
#include "ecdither/process.h"
#include "ecdither/spectrum.h"
#include "ecdither/wav.h"

namespace ecdither {
namespace {

constexpr const char* kJsonType = "application/json";

void SendJson(httplib::Response& res, int status, const Json& body) {
  res.status = status;
  res.set_content(body.dump(), kJsonType);
}

void SendError(httplib::Response& res, int status, std::string_view code,
               absl::string_view message) {
  SendJson(res, status,
           {{"error", {{"code", code}, {"message", std::string(message)}}}});
}

// Maps store and lookup failures onto HTTP.
void SendStatus(httplib::Response& res, const absl::Status& s) {
  const absl::string_view message = s.message();
  switch (s.code()) {
    case absl::StatusCode::kNotFound:
      return SendError(res, 404, "not_found", message);
    case absl::StatusCode::kAlreadyExists:
      return SendError(res, 409, "conflict", message);
    case absl::StatusCode::kInvalidArgument:
      return SendError(res, 400, "bad_params", message);
    default:
      return SendError(res, 500, "internal", message);
  }
}

Json SpectrumJson(std::span<const double> x, int rate) {
  DisplaySpectrum s = ComputeDisplaySpectrum(x, rate, kSpectrumPoints);
  return {{"freq_hz", s.freq_hz}, {"level_db", s.level_db}};
}

struct ProcessRequest {
  std::string wav;
  std::optional<Json> params;
  std::optional<std::string> preset;
};

// Fills `out` from a multipart or JSON body. On failure the response is
// already set.
bool ParseProcessRequest(const httplib::Request& req, httplib::Response& res,
                         ProcessRequest* out) {
  if (req.is_multipart_form_data()) {
    if (!req.has_file("audio")) {
      SendError(res, 400, "bad_wav", "missing multipart field 'audio'");
      return false;
    }
    out->wav = req.get_file_value("audio").content;
    if (req.has_file("params")) {
      Json p = Json::parse(req.get_file_value("params").content, nullptr,
                           /*allow_exceptions=*/false);
      if (p.is_discarded()) {
        SendError(res, 400, "bad_params", "field 'params' is not valid JSON");
        return false;
      }
      out->params = std::move(p);
    }
    if (req.has_file("preset"))
      out->preset = req.get_file_value("preset").content;
  } else {
    const Json body =
        Json::parse(req.body, nullptr, /*allow_exceptions=*/false);
    if (body.is_discarded() || !body.is_object()) {
      SendError(res, 400, "bad_request",
                "expected multipart/form-data or a JSON object");
      return false;
    }
    JsonErrors errors;
    CheckKeys(body, "", {"audio_base64", "params", "preset"}, &errors);
    if (!errors.empty()) {
      SendError(res, 400, "bad_request", errors.ToStatus().message());
      return false;
    }
    auto audio = body.find("audio_base64");
    if (audio == body.end() || !audio->is_string() ||
        !absl::Base64Unescape(audio->get<std::string>(), &out->wav)) {
      SendError(res, 400, "bad_wav",
                "'audio_base64' must hold base64 WAV data");
      return false;
    }
    if (auto p = body.find("params"); p != body.end()) out->params = *p;
    if (auto p = body.find("preset"); p != body.end()) {
      if (!p->is_string()) {
        SendError(res, 400, "bad_params", "'preset' must be a name");
        return false;
      }
      out->preset = p->get<std::string>();
    }
  }
  if (out->params && out->preset) {
    SendError(res, 400, "bad_params", "give either params or preset, not both");
    return false;
  }
  return true;
}

absl::StatusOr<Signal> FixtureSignal(const Json& j) {
  if (!j.is_object())
    return absl::InvalidArgumentError("fixture: expected an object");
  JsonErrors errors;
  CheckKeys(j, "fixture", {"note", "frequency_hz", "db", "duration_s"},
            &errors);
  if (auto s = errors.ToStatus(); !s.ok()) return s;
  ToneSpec tone;
  if (j.contains("frequency_hz")) {
    if (!j["frequency_hz"].is_number()) {
      return absl::InvalidArgumentError(
          "fixture.frequency_hz: expected a number");
    }
    tone.frequency_hz = j["frequency_hz"].get<double>();
  } else {
    const Json note = j.value("note", Json("C4"));
    if (!note.is_string()) {
      return absl::InvalidArgumentError("fixture.note: expected a note name");
    }
    auto hz = NoteFrequency(note.get<std::string>());
    if (!hz.ok()) return hz.status();
    tone.frequency_hz = *hz;
  }
  for (auto [key, target] : {std::pair{"db", &tone.level_db},
                             std::pair{"duration_s", &tone.duration_s}}) {
    if (j.contains(key)) {
      if (!j[key].is_number()) {
        return absl::InvalidArgumentError(
            absl::StrCat("fixture.", key, ": expected a number"));
      }
      *target = j[key].get<double>();
    }
  }
  if (!(tone.duration_s > 0.0 && tone.duration_s <= 600.0)) {
    return absl::InvalidArgumentError("fixture.duration_s: expected (0, 600]");
  }
  return GenerateSine(tone);
}

}  // namespace

absl::StatusOr<std::unique_ptr<Service>> Service::Create(
    ServiceOptions options) {
  auto presets = PresetStore::Open(options.preset_file);
  if (!presets.ok()) return presets.status();
  return std::unique_ptr<Service>(
      new Service(std::move(options), *std::move(presets)));
}

void Service::HandleProcess(const httplib::Request& req,
                            httplib::Response& res) {
  if (req.body.size() > options_.max_payload_bytes) {
    return SendError(res, 413, "payload_too_large", "request body too large");
  }
  ProcessRequest pr;
  if (!ParseProcessRequest(req, res, &pr)) return;

  Json params_json = Json::object();
  if (pr.params) params_json = *pr.params;
  if (pr.preset) {
    auto preset = presets_->Get(*pr.preset);
    if (!preset.ok()) return SendStatus(res, preset.status());
    params_json = (*preset)["params"];
  }
  auto params = ProcessParamsFromJson(params_json);
  if (!params.ok()) {
    return SendError(res, 400, "bad_params", params.status().message());
  }
  auto x = DecodeWav(std::span<const uint8_t>(
      reinterpret_cast<const uint8_t*>(pr.wav.data()), pr.wav.size()));
  if (!x.ok()) return SendError(res, 400, "bad_wav", x.status().message());

  auto out = ProcessSignal(*x, *params);
  if (!out.ok()) {
    switch (out.status().code()) {
      case absl::StatusCode::kAborted:
        return SendError(res, 500, "diverged", out.status().message());
      case absl::StatusCode::kInvalidArgument:
      case absl::StatusCode::kOutOfRange:
        return SendError(res, 400, "bad_input", out.status().message());
      default:
        return SendError(res, 500, "internal", out.status().message());
    }
  }
  auto wav = EncodeWav(out->result.output, 16);
  if (!wav.ok()) return SendError(res, 500, "internal", wav.status().message());

  const Signal& in = out->input;
  std::vector<double> error(in.size());
  for (size_t i = 0; i < in.size(); ++i) {
    error[i] = out->result.output[i] - in[i];
  }
  Json metrics = MetricRowToJson(out->metrics);
  metrics["max_abs_error"] = out->max_abs_error;
  metrics["max_abs_error_unclipped"] = out->max_abs_error_unclipped;
  metrics["clipped_samples"] = out->clipped_samples;
  SendJson(res, 200,
           {{"metrics", metrics},
            {"params", ProcessParamsToJson(*params)},
            {"sample_rate", in.sample_rate()},
            {"audio_wav_base64",
             absl::Base64Escape(absl::string_view(
                 reinterpret_cast<const char*>(wav->data()), wav->size()))},
            {"spectra",
             {{"input", SpectrumJson(in.samples(), in.sample_rate())},
              {"output",
               SpectrumJson(out->result.output.samples(), in.sample_rate())},
              {"error", SpectrumJson(error, in.sample_rate())}}},
            {"version", ECDITHER_VERSION}});
}

void Service::HandleSweepSubmit(const httplib::Request& req,
                                httplib::Response& res) {
  const Json body = Json::parse(req.body, nullptr, /*allow_exceptions=*/false);
  if (body.is_discarded() || !body.is_object()) {
    return SendError(res, 400, "bad_request", "expected a JSON object");
  }
  JsonErrors errors;
  CheckKeys(body, "", {"config", "audio_base64", "fixture", "normalize"},
            &errors);
  SweepConfig config;
  if (auto it = body.find("config"); it != body.end()) {
    if (it->is_object()) {
      CheckKeys(*it, "config", SweepConfigKeys(), &errors);
      SweepConfigFromJson(*it, {}, &config, &errors);
    } else {
      errors.Add("config: expected an object");
    }
  }
  if (auto s = ValidateSweepConfig(config); !s.ok()) {
    errors.Add(std::string(s.message()));
  }
  bool normalize = true;
  if (auto it = body.find("normalize"); it != body.end()) {
    if (it->is_boolean()) {
      normalize = it->get<bool>();
    } else {
      errors.Add("normalize: expected true or false");
    }
  }
  if (!errors.empty()) {
    return SendError(res, 400, "bad_params", errors.ToStatus().message());
  }

  absl::StatusOr<Signal> x =
      absl::InvalidArgumentError("give 'audio_base64' (WAV) or 'fixture'");
  if (body.contains("audio_base64") == body.contains("fixture")) {
    return SendError(res, 400, "bad_request", x.status().message());
  }
  if (body.contains("fixture")) {
    x = FixtureSignal(body["fixture"]);
    if (!x.ok()) return SendError(res, 400, "bad_params", x.status().message());
  } else {
    std::string wav;
    if (!body["audio_base64"].is_string() ||
        !absl::Base64Unescape(body["audio_base64"].get<std::string>(), &wav)) {
      return SendError(res, 400, "bad_wav",
                       "'audio_base64' must hold base64 WAV data");
    }
    x = DecodeWav(std::span<const uint8_t>(
        reinterpret_cast<const uint8_t*>(wav.data()), wav.size()));
    if (!x.ok()) return SendError(res, 400, "bad_wav", x.status().message());
  }
  if (normalize) {
    x = NormalizePeak(*x);
    if (!x.ok()) return SendError(res, 400, "bad_input", x.status().message());
  }
  const std::string id = jobs_.Submit(*std::move(x), std::move(config));
  SendJson(res, 202, *jobs_.Status(id));
}

void Service::Register(httplib::Server& server) {
  server.set_payload_max_length(options_.max_payload_bytes);
  server.set_error_handler([](const httplib::Request&, httplib::Response& res) {
    if (!res.body.empty()) return httplib::Server::HandlerResponse::Unhandled;
    const char* code = res.status == 404   ? "not_found"
                       : res.status == 413 ? "payload_too_large"
                       : res.status == 405 ? "method_not_allowed"
                                           : "bad_request";
    SendError(res, res.status, code, httplib::status_message(res.status));
    return httplib::Server::HandlerResponse::Handled;
  });

  server.Get("/health", [](const httplib::Request&, httplib::Response& res) {
    SendJson(res, 200, {{"status", "ok"}, {"version", ECDITHER_VERSION}});
  });
  server.Post("/process",
              [this](const httplib::Request& req, httplib::Response& res) {
                HandleProcess(req, res);
              });

  server.Get("/presets",
             [this](const httplib::Request&, httplib::Response& res) {
               SendJson(res, 200, presets_->List());
             });
  server.Post(
      "/presets", [this](const httplib::Request& req, httplib::Response& res) {
        const Json doc = Json::parse(req.body, nullptr, false);
        if (doc.is_discarded()) {
          return SendError(res, 400, "bad_request", "body is not valid JSON");
        }
        auto created = presets_->Create(doc);
        if (!created.ok()) return SendStatus(res, created.status());
        SendJson(res, 201, *created);
      });
  server.Get(R"(/presets/([^/]+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               auto doc = presets_->Get(req.matches[1].str());
               if (!doc.ok()) return SendStatus(res, doc.status());
               SendJson(res, 200, *doc);
             });
  server.Put(R"(/presets/([^/]+))", [this](const httplib::Request& req,
                                           httplib::Response& res) {
    const Json doc = Json::parse(req.body, nullptr, false);
    if (doc.is_discarded()) {
      return SendError(res, 400, "bad_request", "body is not valid JSON");
    }
    auto stored = presets_->Put(req.matches[1].str(), doc);
    if (!stored.ok()) return SendStatus(res, stored.status());
    SendJson(res, 200, *stored);
  });
  server.Delete(R"(/presets/([^/]+))", [this](const httplib::Request& req,
                                              httplib::Response& res) {
    if (auto s = presets_->Delete(req.matches[1].str()); !s.ok()) {
      return SendStatus(res, s);
    }
    res.status = 204;
  });

  server.Post("/sweep",
              [this](const httplib::Request& req, httplib::Response& res) {
                HandleSweepSubmit(req, res);
              });
  server.Get(R"(/sweep/([^/]+))",
             [this](const httplib::Request& req, httplib::Response& res) {
               auto status = jobs_.Status(req.matches[1].str());
               if (!status)
                 return SendError(res, 404, "not_found", "no such sweep");
               SendJson(res, 200, *status);
             });
  server.Post(R"(/sweep/([^/]+)/cancel)",
              [this](const httplib::Request& req, httplib::Response& res) {
                auto status = jobs_.Cancel(req.matches[1].str());
                if (!status)
                  return SendError(res, 404, "not_found", "no such sweep");
                SendJson(res, 200, *status);
              });
}

}  // namespace ecdither
