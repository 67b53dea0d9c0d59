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

#ifndef CUBOID_CERTIFICATE_HPP
#define CUBOID_CERTIFICATE_HPP

#include <chrono>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "cuboid/check.hpp"
#include "cuboid/curve.hpp"
#include "cuboid/family.hpp"
#include "cuboid/parallel.hpp"
#include "cuboid/sweep.hpp"

namespace cuboid {

inline constexpr const char* kToolkitVersion = "1.0.0";
inline constexpr int kCertificateSchemaVersion = 1;

struct RunConfig {
    long long height = 1000;
    long long sweep_bound = 30;
    unsigned threads = default_thread_count();
};

struct Certificate {
    std::string toolkit_version = kToolkitVersion;
    RunConfig config;
    std::vector<CheckResult> checks;
    std::vector<curve::ExternalCertificate> external_assumptions;
    std::vector<std::pair<std::string, double>> timings_ms;
    std::vector<curve::CurvePoint> curve_points;
    SweepReport sweep;

    std::size_t passed() const { return count(Status::pass); }
    std::size_t failed() const { return count(Status::fail); }
    std::size_t external() const { return count(Status::external_assumption); }

    /// Every non-external check passed and the external assumptions are listed.
    bool overall_pass() const { return failed() == 0 && !external_assumptions.empty(); }

private:
    std::size_t count(Status s) const {
        std::size_t n = 0;
        for (const auto& c : checks) n += c.status == s ? 1 : 0;
        return n;
    }
};

/// Runs the proof chain in order: identities, curve, case analysis, sweep.
/// The result does not depend on config.threads (timings aside).
inline Certificate run_all(const RunConfig& config) {
    if (config.height < 1) throw std::domain_error("height must be at least 1");
    if (config.sweep_bound < 2) throw std::domain_error("sweep bound must be at least 2");

    using clock = std::chrono::steady_clock;
    auto elapsed_ms = [](clock::time_point start) {
        return std::chrono::duration<double, std::milli>(clock::now() - start).count();
    };

    Certificate cert;
    cert.config = config;

    std::vector<double> identity_ms(kAllIdentities.size());
    std::vector<CheckResult> identities(kAllIdentities.size());
    parallel_for(identities.size(), config.threads, [&](std::size_t i) {
        const auto start = clock::now();
        identities[i] = verify_identity(kAllIdentities[i]);
        identity_ms[i] = elapsed_ms(start);
    });
    for (std::size_t i = 0; i < identities.size(); ++i) {
        cert.timings_ms.emplace_back(identities[i].check, identity_ms[i]);
        cert.checks.push_back(std::move(identities[i]));
    }

    auto start = clock::now();
    const auto ext = curve::chabauty_certificate();
    cert.curve_points = curve::search_points(config.height, {config.threads, true});
    auto certification = curve::certify_points(cert.curve_points, ext, config.height);
    const double search_ms = elapsed_ms(start);
    cert.timings_ms.emplace_back(certification.reproduction.check, search_ms);
    cert.timings_ms.emplace_back(certification.completeness.check, 0.0);
    cert.checks.push_back(std::move(certification.reproduction));
    cert.checks.push_back(std::move(certification.completeness));
    cert.external_assumptions.push_back(ext);

    start = clock::now();
    cert.checks.push_back(lemma_noadmissible_report(ext.claimed_points));
    cert.timings_ms.emplace_back(cert.checks.back().check, elapsed_ms(start));

    start = clock::now();
    cert.sweep = sweep(config.sweep_bound, config.threads);
    cert.checks.push_back(sweep_check(cert.sweep));
    cert.timings_ms.emplace_back(cert.checks.back().check, elapsed_ms(start));
    return cert;
}

/// Certificate document. The "timings_ms" member is the only part that
/// varies between runs with the same height and sweep bound.
inline nlohmann::ordered_json to_json(const Certificate& cert) {
    nlohmann::ordered_json checks = nlohmann::ordered_json::array();
    for (const auto& c : cert.checks) checks.push_back(c);
    nlohmann::ordered_json ext = nlohmann::ordered_json::array();
    for (const auto& e : cert.external_assumptions) ext.push_back(curve::to_json(e));
    nlohmann::ordered_json timings = nlohmann::ordered_json::object();
    for (const auto& [name, ms] : cert.timings_ms) timings[name] = ms;

    return nlohmann::ordered_json{
        {"schema_version", kCertificateSchemaVersion},
        {"toolkit_version", cert.toolkit_version},
        {"config", {{"height", cert.config.height}, {"sweep_bound", cert.config.sweep_bound}}},
        {"checks", checks},
        {"external_assumptions", ext},
        {"curve_points", curve::to_json(cert.curve_points)},
        {"sweep", to_json(cert.sweep)},
        {"summary",
         {{"passed", cert.passed()},
          {"failed", cert.failed()},
          {"external", cert.external()},
          {"overall", cert.overall_pass() ? "pass" : "fail"}}},
        {"timings_ms", timings},
    };
}

}  // namespace cuboid

#endif  // CUBOID_CERTIFICATE_HPP
