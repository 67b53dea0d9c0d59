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

// Acceptance driver: one PASS/FAIL line per criterion, exit status 0 only
// when every line is PASS. The CLI criteria run the built `cuboid` binary.

#include <array>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <sys/wait.h>

#include <nlohmann/json.hpp>

#include "cuboid/cuboid.hpp"

#ifndef CUBOID_CLI_PATH
#error "CUBOID_CLI_PATH must point at the cuboid executable"
#endif

namespace {

using cuboid::MultiPoly;
using cuboid::Rational;
using cuboid::Var;
using json = nlohmann::ordered_json;

struct Outcome {
    bool ok = false;
    std::string detail;
};

struct Run {
    int exit_code = -1;
    std::string out;
    double seconds = 0;
};

Run run_cli(const std::string& args) {
    const std::string cmd = std::string(CUBOID_CLI_PATH) + " " + args + " 2>/dev/null";
    const auto start = std::chrono::steady_clock::now();
    Run r;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (pipe == nullptr) return r;
    std::array<char, 4096> buf{};
    std::size_t n = 0;
    while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
    const int status = pclose(pipe);
    r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    return r;
}

std::string secs(double s) {
    std::ostringstream os;
    os.precision(3);
    os << s << "s";
    return os.str();
}

Outcome identities() {
    const auto start = std::chrono::steady_clock::now();
    const auto results = cuboid::verify_all_identities(1);
    const double elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::string failed;
    bool unit_one = false;
    for (const auto& r : results) {
        if (!r.passed()) failed += " " + r.check;
        if (r.check == "RESULTANT_IS_G_SQUARED") unit_one = r.witness.find("unit constant = 1") != std::string::npos;
    }
    const bool ok = results.size() == 10 && failed.empty() && unit_one && elapsed < 60.0;
    return {ok, std::to_string(results.size()) + " checks, unit constant " + (unit_one ? "1" : "not 1") +
                    (failed.empty() ? "" : ", failed:" + failed) + ", " + secs(elapsed)};
}

Outcome transcript_reproduction() {
    const Run r = run_cli("search --height 1000 --threads 1");
    if (r.exit_code != 0) return {false, "exit code " + std::to_string(r.exit_code)};
    const json j = json::parse(r.out);
    const json expected = json::parse(
        R"([{"infinity":true},{"t":"-1","w":"0"},{"t":"0","w":"-1"},{"t":"0","w":"1"},{"t":"1","w":"-8"},{"t":"1","w":"8"}])");
    const bool ok = j["points"] == expected && r.seconds < 120.0;
    return {ok, std::to_string(j["points"].size()) + " points, " + secs(r.seconds)};
}

Outcome case_analysis() {
    const auto cases = cuboid::lemma_noadmissible_cases(cuboid::curve::chabauty_certificate().claimed_points);
    const auto report = cuboid::lemma_noadmissible_report();
    bool values = cases.size() == 4;
    if (values) {
        values = cases[0].tau == "inf" && cases[0].U == Rational(2) && cases[1].tau == "-1" &&
                 cases[1].U == Rational(-2) && cases[2].tau == "0" && cases[2].pole &&
                 cases[2].numerator == Rational(4) && cases[3].tau == "1" && cases[3].pole &&
                 cases[3].numerator == Rational(128);
    }
    std::vector<Rational> admissible;
    for (const auto& c : cases) admissible.insert(admissible.end(), c.admissible.begin(), c.admissible.end());
    const bool only_one = admissible == std::vector<Rational>{Rational(1)};
    return {values && only_one && report.passed(), report.witness};
}

Outcome theorem_sweep() {
    const Run r = run_cli("sweep --bound 30 --threads 4");
    if (r.exit_code != 0) return {false, "exit code " + std::to_string(r.exit_code)};
    const json j = json::parse(r.out);
    const auto& cc = j["control_case"];
    bool has_minus_one = false;
    for (const auto& x : cc["ps_roots"]) has_minus_one = has_minus_one || x == "-1";
    const bool ok = j["violations"].empty() && has_minus_one && cc["division_ok"] == true && cc["ok"] == true &&
                    r.seconds < 120.0;
    return {ok, std::to_string(j["pairs_checked"].get<long long>()) + " pairs, " +
                    std::to_string(j["violations"].size()) + " violations, control roots " + cc["ps_roots"].dump() +
                    ", " + secs(r.seconds)};
}

Outcome oracle_equivalence() {
    std::mt19937_64 gen(20260105);
    auto uniform = [&](long long lo, long long hi) { return std::uniform_int_distribution<long long>(lo, hi)(gen); };
    const MultiPoly s = cuboid::var(Var::s);
    const MultiPoly U = cuboid::var(Var::U);
    int agree = 0;
    for (int i = 0; i < 50; ++i) {
        const long long degree = uniform(1, 5);
        MultiPoly f;
        for (long long k = 0; k <= degree; ++k) {
            MultiPoly c;
            for (long long a = 0; a <= 2; ++a)
                for (long long b = 0; b <= 2; ++b)
                    if (uniform(0, 2) == 0)
                        c += cuboid::pow(cuboid::var(Var::y), static_cast<int>(a)) *
                             cuboid::pow(U, static_cast<int>(b)).scaled(Rational(uniform(-9, 9)));
            if (k == degree && c.is_zero()) c = MultiPoly(uniform(1, 9));
            f += c * cuboid::pow(s, static_cast<int>(k));
        }
        const MultiPoly quad = cuboid::trace_quadratic(Var::s, U);
        const MultiPoly norm = cuboid::quadratic_norm_resultant(f, Var::s, U);
        const MultiPoly syl =
            cuboid::sylvester_resultant(f, quad, Var::s).scaled(cuboid::swap_sign(f, quad, Var::s));
        if (norm == syl && norm == cuboid::sylvester_resultant(quad, f, Var::s)) ++agree;
    }
    const auto dr = cuboid::double_resultant(true);
    const bool stages = dr.stage1 == dr.stage1_sylvester && dr.stage2 == dr.stage2_sylvester;
    return {agree == 50 && stages,
            std::to_string(agree) + "/50 random instances, elimination stages " + (stages ? "equal" : "differ")};
}

Outcome determinism() {
    const Run a = run_cli("verify --threads 1");
    const Run b = run_cli("verify --threads 4");
    if (a.exit_code != 0 || b.exit_code != 0)
        return {false, "exit codes " + std::to_string(a.exit_code) + ", " + std::to_string(b.exit_code)};
    json ja = json::parse(a.out);
    json jb = json::parse(b.out);
    ja.erase("timings_ms");
    jb.erase("timings_ms");
    const std::string da = ja.dump(2);
    const std::string db = jb.dump(2);
    return {da == db, std::to_string(da.size()) + " bytes compared, " + secs(a.seconds) + " + " + secs(b.seconds)};
}

}  // namespace

int main() {
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria = {
        {"1 identity suite", identities},
        {"2 transcript reproduction (search --height 1000)", transcript_reproduction},
        {"3 case analysis over C(Q)", case_analysis},
        {"4 theorem sweep (sweep --bound 30)", theorem_sweep},
        {"5 oracle equivalence", oracle_equivalence},
        {"6 determinism across thread counts", determinism},
    };
    int failures = 0;
    for (const auto& [name, fn] : criteria) {
        Outcome o;
        try {
            o = fn();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        failures += o.ok ? 0 : 1;
        std::cout << (o.ok ? "PASS" : "FAIL") << "  criterion " << name << ": " << o.detail << std::endl;
    }
    return failures == 0 ? 0 : 1;
}
