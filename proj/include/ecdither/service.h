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

#ifndef ECDITHER_SERVICE_H_
#define ECDITHER_SERVICE_H_

#include <cstddef>
#include <filesystem>
#include <memory>

#include "absl/status/statusor.h"
#include "ecdither/preset_store.h"
#include "ecdither/sweep_jobs.h"
#include "httplib.h"

namespace ecdither {

// Largest accepted request body.
inline constexpr size_t kMaxPayloadBytes = size_t{50} * 1024 * 1024;
// Points per spectrum in /process responses.
inline constexpr size_t kSpectrumPoints = 2048;

struct ServiceOptions {
  std::filesystem::path preset_file = "presets.json";
  size_t max_payload_bytes = kMaxPayloadBytes;
};

// HTTP API:
//   GET    /health
//   POST   /process                 multipart (audio, params) or JSON
//   GET    /presets                 POST /presets
//   GET|PUT|DELETE /presets/{name}
//   POST   /sweep                   GET /sweep/{id}   POST /sweep/{id}/cancel
// Errors are {"error": {"code", "message"}}.
class Service {
 public:
  static absl::StatusOr<std::unique_ptr<Service>> Create(
      ServiceOptions options);

  // Installs handlers and the payload limit on `server`.
  void Register(httplib::Server& server);

 private:
  Service(ServiceOptions options, std::unique_ptr<PresetStore> presets)
      : options_(std::move(options)), presets_(std::move(presets)) {}

  void HandleProcess(const httplib::Request& req, httplib::Response& res);
  void HandleSweepSubmit(const httplib::Request& req, httplib::Response& res);

  ServiceOptions options_;
  std::unique_ptr<PresetStore> presets_;
  SweepJobs jobs_;
};

}  // namespace ecdither

#endif  // ECDITHER_SERVICE_H_
