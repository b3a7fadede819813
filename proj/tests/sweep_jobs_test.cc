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

#include <chrono>
#include <string>
#include <thread>

#include "gtest/gtest.h"
#include "test_util.h"

namespace ecdither {
namespace {

Json Wait(const SweepJobs& jobs, const std::string& id) {
  for (int i = 0; i < 20000; ++i) {
    Json j = *jobs.Status(id);
    if (j["status"] != "queued" && j["status"] != "running") return j;
    std::this_thread::sleep_for(std::chrono::milliseconds(5));
  }
  ADD_FAILURE() << "job " << id << " did not finish";
  return Json();
}

SweepConfig Small() {
  SweepConfig c;
  c.alpha_count = 3;
  c.conditions = {Condition::kTpdf, Condition::kNpdf};
  return c;
}

TEST(SweepJobsTest, RunsInOrderWithDistinctIds) {
  SweepJobs jobs;
  const Signal x = testing::C4Fixture(0.0, 0.1);
  const std::string a = jobs.Submit(x, Small());
  const std::string b = jobs.Submit(x, Small());
  EXPECT_NE(a, b);
  Json ja = Wait(jobs, a);
  Json jb = Wait(jobs, b);
  EXPECT_EQ(ja["status"], "done");
  EXPECT_EQ(ja["report"]["rows"].size(), 6u);
  EXPECT_EQ(ja["report"], jb["report"]);
  EXPECT_EQ(ja["progress"]["completed"], ja["progress"]["total"]);
}

TEST(SweepJobsTest, CancelQueuedJob) {
  SweepJobs jobs;
  const Signal x = testing::C4Fixture(0.0, 1.0);
  SweepConfig slow;
  slow.alpha_count = 200;
  slow.conditions = {Condition::kTpdfShaping};
  const std::string first = jobs.Submit(x, slow);
  const std::string second = jobs.Submit(x, Small());
  Json c = *jobs.Cancel(second);
  EXPECT_EQ(c["status"], "cancelled");
  EXPECT_FALSE(c.contains("report"));
  jobs.Cancel(first);
  EXPECT_EQ(Wait(jobs, first)["status"], "cancelled");
  EXPECT_EQ(Wait(jobs, second)["status"], "cancelled");
}

TEST(SweepJobsTest, FailureCarriesMessage) {
  SweepJobs jobs;
  SweepConfig c = Small();
  c.conditions = {Condition::kTpdfShaping};
  c.shaping.contour = ContourTable::Flat(40.0);
  c.shaping.relaxation = 1.0;
  c.shaping.iterations = 10;
  Json j = Wait(jobs, jobs.Submit(testing::C4Fixture(0.0, 0.1), c));
  EXPECT_EQ(j["status"], "failed");
  EXPECT_NE(j["error"].get<std::string>().find("condition tpdf_shaping"),
            std::string::npos);
}

TEST(SweepJobsTest, UnknownId) {
  SweepJobs jobs;
  EXPECT_FALSE(jobs.Status("42").has_value());
  EXPECT_FALSE(jobs.Cancel("42").has_value());
}

TEST(SweepJobsTest, DestructorCancelsRunningJob) {
  const auto start = std::chrono::steady_clock::now();
  {
    SweepJobs jobs;
    SweepConfig slow;
    slow.alpha_count = 1000;
    slow.conditions = {Condition::kTpdfShaping};
    jobs.Submit(testing::C4Fixture(0.0, 1.0), slow);
    std::this_thread::sleep_for(std::chrono::milliseconds(50));
  }
  EXPECT_LT(std::chrono::steady_clock::now() - start, std::chrono::seconds(30));
}

}  // namespace
}  // namespace ecdither
