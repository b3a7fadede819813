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

#include "ecdither/preset_store.h"

#include <fcntl.h>
#include <unistd.h>

#include <cerrno>
#include <chrono>
#include <cstring>
#include <ctime>
#include <fstream>
#include <sstream>
#include <utility>

#include "absl/strings/str_cat.h"

namespace ecdither {
namespace {

constexpr const char* kStoreFormat = "ecdither.presets";

std::string NowRfc3339() {
  const std::time_t t =
      std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

absl::Status WriteAll(int fd, std::string_view data) {
  while (!data.empty()) {
    const ssize_t n = ::write(fd, data.data(), data.size());
    if (n < 0) {
      if (errno == EINTR) continue;
      return absl::InternalError(absl::StrCat("write: ", std::strerror(errno)));
    }
    data.remove_prefix(static_cast<size_t>(n));
  }
  return absl::OkStatus();
}

}  // namespace

bool PresetStore::ValidName(std::string_view name) {
  if (name.empty() || name.size() > 64 || name[0] == '.') return false;
  for (char c : name) {
    const bool ok = (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
                    (c >= '0' && c <= '9') || c == '_' || c == '-' || c == '.';
    if (!ok) return false;
  }
  return true;
}

absl::StatusOr<std::unique_ptr<PresetStore>> PresetStore::Open(
    std::filesystem::path file) {
  std::unique_ptr<PresetStore> store(new PresetStore(std::move(file)));
  std::ifstream in(store->file_, std::ios::binary);
  if (!in) {
    if (std::filesystem::exists(store->file_)) {
      return absl::PermissionDeniedError(
          absl::StrCat("cannot read ", store->file_.string()));
    }
    return store;
  }
  std::stringstream ss;
  ss << in.rdbuf();
  const Json j = Json::parse(ss.str(), nullptr, /*allow_exceptions=*/false);
  if (j.is_discarded() || !j.is_object() ||
      j.value("format", "") != kStoreFormat || !j.contains("presets") ||
      !j["presets"].is_object()) {
    return absl::DataLossError(
        absl::StrCat(store->file_.string(), ": not a preset store"));
  }
  for (auto it = j["presets"].begin(); it != j["presets"].end(); ++it) {
    auto doc = store->Canonical(it.key(), it.value(), nullptr);
    if (!doc.ok()) {
      return absl::DataLossError(absl::StrCat(store->file_.string(),
                                              ": preset '", it.key(),
                                              "': ", doc.status().message()));
    }
    store->presets_[it.key()] = *std::move(doc);
  }
  return store;
}

absl::StatusOr<Json> PresetStore::Canonical(std::string_view name,
                                            const Json& doc,
                                            const Json* existing) const {
  if (!ValidName(name)) {
    return absl::InvalidArgumentError(
        absl::StrCat("invalid preset name '", std::string(name),
                     "' (1-64 of A-Z a-z 0-9 _ . -)"));
  }
  if (!doc.is_object()) {
    return absl::InvalidArgumentError("preset must be a JSON object");
  }
  JsonErrors errors;
  CheckKeys(doc, "", {"name", "params", "created_at"}, &errors);
  if (auto it = doc.find("name");
      it != doc.end() && (!it->is_string() || it->get<std::string>() != name)) {
    errors.Add("name: does not match the preset name");
  }
  std::string created_at = existing != nullptr
                               ? (*existing)["created_at"].get<std::string>()
                               : NowRfc3339();
  if (auto it = doc.find("created_at"); it != doc.end()) {
    if (it->is_string()) {
      created_at = it->get<std::string>();
    } else {
      errors.Add("created_at: expected a string");
    }
  }
  Json params;
  if (auto it = doc.find("params"); it == doc.end()) {
    errors.Add("params: missing");
  } else {
    auto p = ProcessParamsFromJson(*it);
    if (p.ok()) {
      params = ProcessParamsToJson(*p);
    } else {
      errors.Add(absl::StrCat("params: ", p.status().message()));
    }
  }
  if (auto status = errors.ToStatus(); !status.ok()) return status;
  return Json{{"name", std::string(name)},
              {"params", std::move(params)},
              {"created_at", std::move(created_at)}};
}

absl::Status PresetStore::Persist(
    const std::map<std::string, Json, std::less<>>& presets) const {
  Json j = {
      {"format", kStoreFormat}, {"version", 1}, {"presets", Json::object()}};
  for (const auto& [name, doc] : presets) j["presets"][name] = doc;
  const std::string body = j.dump(2) + "\n";

  const std::string tmp = file_.string() + ".tmp";
  const int fd =
      ::open(tmp.c_str(), O_WRONLY | O_CREAT | O_TRUNC | O_CLOEXEC, 0644);
  if (fd < 0) {
    return absl::InternalError(
        absl::StrCat("cannot write ", tmp, ": ", std::strerror(errno)));
  }
  absl::Status status = WriteAll(fd, body);
  if (status.ok() && ::fsync(fd) != 0) {
    status = absl::InternalError(absl::StrCat("fsync: ", std::strerror(errno)));
  }
  ::close(fd);
  if (status.ok() && std::rename(tmp.c_str(), file_.c_str()) != 0) {
    status = absl::InternalError(
        absl::StrCat("rename to ", file_.string(), ": ", std::strerror(errno)));
  }
  if (!status.ok()) ::unlink(tmp.c_str());
  return status;
}

absl::StatusOr<Json> PresetStore::Create(const Json& doc) {
  if (!doc.is_object() || !doc.contains("name") || !doc["name"].is_string()) {
    return absl::InvalidArgumentError("preset needs a string \"name\"");
  }
  const std::string name = doc["name"].get<std::string>();
  std::lock_guard<std::mutex> lock(mu_);
  if (presets_.count(name) > 0) {
    return absl::AlreadyExistsError(
        absl::StrCat("preset '", name, "' already exists"));
  }
  auto canonical = Canonical(name, doc, nullptr);
  if (!canonical.ok()) return canonical.status();
  std::map<std::string, Json, std::less<>> next = presets_;
  next[name] = *canonical;
  if (auto s = Persist(next); !s.ok()) return s;
  presets_ = std::move(next);
  return canonical;
}

absl::StatusOr<Json> PresetStore::Put(std::string_view name, const Json& doc) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = presets_.find(name);
  auto canonical =
      Canonical(name, doc, it == presets_.end() ? nullptr : &it->second);
  if (!canonical.ok()) return canonical.status();
  std::map<std::string, Json, std::less<>> next = presets_;
  next[std::string(name)] = *canonical;
  if (auto s = Persist(next); !s.ok()) return s;
  presets_ = std::move(next);
  return canonical;
}

absl::StatusOr<Json> PresetStore::Get(std::string_view name) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = presets_.find(name);
  if (it == presets_.end()) {
    return absl::NotFoundError(
        absl::StrCat("no preset '", std::string(name), "'"));
  }
  return it->second;
}

Json PresetStore::List() const {
  std::lock_guard<std::mutex> lock(mu_);
  Json list = Json::array();
  for (const auto& [name, doc] : presets_) list.push_back(doc);
  return {{"presets", list}};
}

absl::Status PresetStore::Delete(std::string_view name) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = presets_.find(name);
  if (it == presets_.end()) {
    return absl::NotFoundError(
        absl::StrCat("no preset '", std::string(name), "'"));
  }
  std::map<std::string, Json, std::less<>> next = presets_;
  next.erase(std::string(name));
  if (auto s = Persist(next); !s.ok()) return s;
  presets_ = std::move(next);
  return absl::OkStatus();
}

}  // namespace ecdither
