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

#ifndef ECDITHER_SWEEP_JOBS_H_
#define ECDITHER_SWEEP_JOBS_H_

#include <condition_variable>
#include <deque>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <string_view>
#include <thread>

#include "ecdither/json_config.h"
#include "ecdither/signal.h"
#include "ecdither/sweep.h"

namespace ecdither {

// Asynchronous sweeps. One job runs at a time; later submissions wait in
// FIFO order. Finished jobs stay queryable for the lifetime of the queue.
class SweepJobs {
 public:
  SweepJobs();
  ~SweepJobs();  // cancels the running job and joins the worker

  SweepJobs(const SweepJobs&) = delete;
  SweepJobs& operator=(const SweepJobs&) = delete;

  // Returns the new job id. Identical submissions get distinct ids.
  std::string Submit(Signal x, SweepConfig config);

  // {"id", "status": queued|running|done|cancelled|failed,
  //  "progress": {"completed", "total", "fraction"}, "error"?, "report"?}
  // The report is present once the job is done, or cancelled after it
  // started (rows then hold what finished). nullopt for an unknown id.
  std::optional<Json> Status(std::string_view id) const;

  // Cancels a queued or running job; finished jobs are left as they are.
  std::optional<Json> Cancel(std::string_view id);

 private:
  enum class State { kQueued, kRunning, kDone, kCancelled, kFailed };
  struct Job {
    std::string id;
    Signal signal;
    SweepConfig config;
    State state = State::kQueued;
    SweepControl control;
    std::optional<SweepReport> report;
    std::string error;
  };

  void Work();
  Json StatusLocked(const Job& job) const;

  mutable std::mutex mu_;
  std::condition_variable cv_;
  bool stopping_ = false;
  uint64_t next_id_ = 1;
  std::map<std::string, std::shared_ptr<Job>, std::less<>> jobs_;
  std::deque<std::shared_ptr<Job>> queue_;
  std::thread worker_;
};

}  // namespace ecdither

#endif  // ECDITHER_SWEEP_JOBS_H_
