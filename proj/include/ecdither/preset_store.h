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

#ifndef ECDITHER_PRESET_STORE_H_
#define ECDITHER_PRESET_STORE_H_

#include <filesystem>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <string_view>

#include "absl/status/status.h"
#include "absl/status/statusor.h"
#include "ecdither/json_config.h"

namespace ecdither {

// Named ProcessParams documents kept in one JSON file. A preset document is
//   {"name": ..., "params": <ProcessParams keys>, "created_at": RFC 3339}
// and is stored in canonical form, so what GET returns is what a PUT of that
// document stores. Every mutation rewrites the file through a temp file and
// rename; mutations are serialized by one mutex.
class PresetStore {
 public:
  // Loads `file` if it exists; a missing file is an empty store.
  static absl::StatusOr<std::unique_ptr<PresetStore>> Open(
      std::filesystem::path file);

  // AlreadyExists when the name is taken.
  absl::StatusOr<Json> Create(const Json& doc);
  // Creates or replaces. A "name" in `doc` must match `name`. Replacing keeps
  // the stored created_at unless the document carries one.
  absl::StatusOr<Json> Put(std::string_view name, const Json& doc);
  absl::StatusOr<Json> Get(std::string_view name) const;
  // {"presets": [documents in name order]}
  Json List() const;
  absl::Status Delete(std::string_view name);

  // 1-64 characters from [A-Za-z0-9_.-], not starting with '.'.
  static bool ValidName(std::string_view name);

 private:
  explicit PresetStore(std::filesystem::path file) : file_(std::move(file)) {}

  absl::StatusOr<Json> Canonical(std::string_view name, const Json& doc,
                                 const Json* existing) const;
  absl::Status Persist(
      const std::map<std::string, Json, std::less<>>& presets) const;

  const std::filesystem::path file_;
  mutable std::mutex mu_;
  std::map<std::string, Json, std::less<>> presets_;
};

}  // namespace ecdither

#endif  // ECDITHER_PRESET_STORE_H_
