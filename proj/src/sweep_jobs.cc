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

#include "ecdither/sweep_jobs.h"

#include <utility>

namespace ecdither {
namespace {

const char* StateName(int state) {
  static constexpr const char* kNames[] = {"queued", "running", "done",
                                           "cancelled", "failed"};
  return kNames[state];
}

}  // namespace

SweepJobs::SweepJobs() : worker_([this] { Work(); }) {}

SweepJobs::~SweepJobs() {
  {
    std::lock_guard<std::mutex> lock(mu_);
    stopping_ = true;
    for (auto& [id, job] : jobs_) job->control.Cancel();
  }
  cv_.notify_all();
  worker_.join();
}

std::string SweepJobs::Submit(Signal x, SweepConfig config) {
  auto job = std::make_shared<Job>();
  job->signal = std::move(x);
  job->config = std::move(config);
  {
    std::lock_guard<std::mutex> lock(mu_);
    job->id = std::to_string(next_id_++);
    jobs_[job->id] = job;
    queue_.push_back(job);
  }
  cv_.notify_all();
  return job->id;
}

void SweepJobs::Work() {
  while (true) {
    std::shared_ptr<Job> job;
    {
      std::unique_lock<std::mutex> lock(mu_);
      cv_.wait(lock, [&] { return stopping_ || !queue_.empty(); });
      if (stopping_) return;
      job = queue_.front();
      queue_.pop_front();
      if (job->state != State::kQueued) continue;  // cancelled while queued
      job->state = State::kRunning;
    }
    auto report = RunSweep(job->signal, job->config, &job->control);
    std::lock_guard<std::mutex> lock(mu_);
    job->signal = Signal();
    if (!report.ok()) {
      job->state = State::kFailed;
      job->error = std::string(report.status().message());
    } else {
      job->state = report->complete ? State::kDone : State::kCancelled;
      job->report = *std::move(report);
    }
  }
}

Json SweepJobs::StatusLocked(const Job& job) const {
  const size_t total = job.control.total();
  const size_t completed = job.control.completed();
  Json j = {
      {"id", job.id},
      {"status", StateName(static_cast<int>(job.state))},
      {"progress",
       {{"completed", completed},
        {"total", total},
        {"fraction", total == 0 ? 0.0
                                : static_cast<double>(completed) /
                                      static_cast<double>(total)}}},
  };
  if (job.state == State::kFailed) j["error"] = job.error;
  if (job.report) j["report"] = SweepReportToJson(*job.report, true);
  return j;
}

std::optional<Json> SweepJobs::Status(std::string_view id) const {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  return StatusLocked(*it->second);
}

std::optional<Json> SweepJobs::Cancel(std::string_view id) {
  std::lock_guard<std::mutex> lock(mu_);
  auto it = jobs_.find(id);
  if (it == jobs_.end()) return std::nullopt;
  Job& job = *it->second;
  if (job.state == State::kQueued) {
    job.state = State::kCancelled;
    job.signal = Signal();
  }
  job.control.Cancel();
  return StatusLocked(job);
}

}  // namespace ecdither
