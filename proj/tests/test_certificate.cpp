/*
   Copyright 2026 The cuboid-quintic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <gtest/gtest.h>

#include <atomic>

#include "cuboid/certificate.hpp"
#include "cuboid/parallel.hpp"

using namespace cuboid;

namespace {
RunConfig small_config(unsigned threads) {
    RunConfig c;
    c.height = 40;
    c.sweep_bound = 8;
    c.threads = threads;
    return c;
}

std::string stable_dump(const Certificate& cert) {
    auto j = to_json(cert);
    j.erase("timings_ms");
    return j.dump();
}
}  // namespace

TEST(RunAll, SmallConfigPasses) {
    const Certificate cert = run_all(small_config(2));
    EXPECT_TRUE(cert.overall_pass());
    EXPECT_EQ(cert.failed(), 0u);
    EXPECT_EQ(cert.external(), 1u);
    // Ten identities, reproduction, completeness, case analysis, sweep.
    EXPECT_EQ(cert.checks.size(), 14u);
    for (const auto& c : cert.checks) EXPECT_NE(c.status, Status::fail) << c.check << ": " << c.witness;
}

TEST(RunAll, CheckOrder) {
    const Certificate cert = run_all(small_config(1));
    ASSERT_EQ(cert.checks.size(), 14u);
    EXPECT_EQ(cert.checks[0].check, "NORMALIZATION");
    EXPECT_EQ(cert.checks[10].check, "CURVE_POINTS_REPRODUCED");
    EXPECT_EQ(cert.checks[11].check, "CURVE_COMPLETENESS");
    EXPECT_EQ(cert.checks[12].check, "LEMMA_NO_ADMISSIBLE_S");
    EXPECT_EQ(cert.checks[13].check, "THEOREM_SWEEP");
}

TEST(RunAll, DeterministicAcrossThreadCounts) {
    EXPECT_EQ(stable_dump(run_all(small_config(1))), stable_dump(run_all(small_config(3))));
}

TEST(RunAll, InvalidConfig) {
    RunConfig c = small_config(1);
    c.height = 0;
    EXPECT_THROW(run_all(c), std::domain_error);
    c = small_config(1);
    c.sweep_bound = 1;
    EXPECT_THROW(run_all(c), std::domain_error);
}

TEST(Json, TopLevelShape) {
    const auto j = to_json(run_all(small_config(1)));
    EXPECT_EQ(j["schema_version"], 1);
    EXPECT_EQ(j["toolkit_version"], kToolkitVersion);
    EXPECT_EQ(j["summary"]["overall"], "pass");
    EXPECT_EQ(j["checks"][0].size(), 4u);
    EXPECT_EQ(j["checks"][11]["status"], "external-assumption");
    EXPECT_EQ(j["external_assumptions"][0]["rank_bound"], 1);
    EXPECT_EQ(j["curve_points"].size(), 6u);
    EXPECT_FALSE(j["config"].contains("threads"));
}

TEST(Parallel, EveryIndexOnce) {
    std::vector<std::atomic<int>> hits(1000);
    parallel_for(hits.size(), 4, [&](std::size_t i) { hits[i].fetch_add(1); });
    for (const auto& h : hits) EXPECT_EQ(h.load(), 1);
}

TEST(Parallel, PropagatesExceptions) {
    EXPECT_THROW(parallel_for(50, 3,
                              [](std::size_t i) {
                                  if (i == 17) throw std::runtime_error("boom");
                              }),
                 std::runtime_error);
}
