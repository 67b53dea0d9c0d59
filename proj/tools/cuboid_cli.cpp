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

// cuboid: command-line driver for the verification chain.
//
//   cuboid verify [--height H] [--sweep-bound B] [--threads N]
//   cuboid search --height H [--threads N] [--no-prefilter]
//   cuboid sweep --bound B [--threads N]
//   cuboid show <qpq|ps|f|g|param> [--p P --q Q | --s NUM/DEN]
//
// JSON goes to stdout, diagnostics to stderr.

#include <exception>
#include <iostream>
#include <limits>
#include <optional>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "cuboid/cuboid.hpp"

namespace {

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

int run_verify(long long height, long long bound, unsigned threads) {
    const cuboid::RunConfig config{height, bound, threads};
    const auto cert = cuboid::run_all(config);
    std::cout << cuboid::to_json(cert).dump(2) << '\n';
    for (const auto& c : cert.checks) {
        if (c.status == cuboid::Status::fail) {
            std::cerr << "FAILED: " << nlohmann::ordered_json(c).dump(2) << '\n';
        }
    }
    std::cerr << "summary: " << cert.passed() << " passed, " << cert.failed() << " failed, " << cert.external()
              << " external assumption(s); overall " << (cert.overall_pass() ? "pass" : "fail") << '\n';
    return cert.overall_pass() ? 0 : kExitFail;
}

int run_search(long long height, unsigned threads, bool prefilter) {
    const auto points = cuboid::curve::search_points(height, {threads, prefilter});
    const auto ext = cuboid::curve::chabauty_certificate();
    const auto cert = cuboid::curve::certify_points(points, ext, height);
    const nlohmann::ordered_json out{{"height", height},
                                     {"points", cuboid::curve::to_json(points)},
                                     {"reproduction", cert.reproduction},
                                     {"completeness", cert.completeness}};
    std::cout << out.dump(2) << '\n';
    return cert.reproduction.passed() ? 0 : kExitFail;
}

int run_sweep(long long bound, unsigned threads) {
    const auto report = cuboid::sweep(bound, threads);
    std::cout << cuboid::to_json(report).dump(2) << '\n';
    if (!report.confirmed()) std::cerr << cuboid::sweep_check(report).witness << '\n';
    return report.confirmed() ? 0 : kExitFail;
}

cuboid::CuboidParams require_pq(const std::optional<long long>& p, const std::optional<long long>& q) {
    if (!p || !q) throw UsageError("this target needs --p and --q");
    if (*p <= 0 || *q <= 0) throw UsageError("--p and --q must be positive");
    return cuboid::CuboidParams::make(*p, *q);
}

int run_show(const std::string& target, const std::optional<long long>& p, const std::optional<long long>& q,
             const std::optional<std::string>& s) {
    using namespace cuboid;
    if (target == "qpq") {
        std::cout << build_Qpq(require_pq(p, q)).str(Var::t) << '\n';
    } else if (target == "ps") {
        Rational value;
        if (s) {
            try {
                value = Rational::parse(*s);
            } catch (const std::exception& e) {
                throw UsageError(std::string("bad --s value: ") + e.what());
            }
        } else {
            value = require_pq(p, q).s();
        }
        std::cout << build_Ps(value).str() << '\n';
    } else if (target == "f") {
        std::cout << build_F().str() << '\n';
    } else if (target == "g") {
        std::cout << build_G().str() << '\n';
    } else if (target == "param") {
        const auto uv = build_UV_param();
        std::cout << "U = " << uv.U.str() << '\n' << "V = " << uv.V.str() << '\n';
    } else {
        throw UsageError("unknown show target: " + target);
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact verification of the cuboid quintic root obstruction"};
    app.require_subcommand(1);

    const auto max_ll = std::numeric_limits<long long>::max();
    const unsigned max_threads = 1024;

    long long verify_height = 1000;
    long long verify_bound = 30;
    unsigned verify_threads = cuboid::default_thread_count();
    auto* verify = app.add_subcommand("verify", "Run the full chain and print the certificate");
    verify->add_option("--height", verify_height, "Curve search height")->check(CLI::Range(1LL, max_ll));
    verify->add_option("--sweep-bound", verify_bound, "Parameter sweep bound")->check(CLI::Range(2LL, max_ll));
    verify->add_option("--threads", verify_threads, "Worker threads")->check(CLI::Range(1u, max_threads));

    long long search_height = 0;
    unsigned search_threads = cuboid::default_thread_count();
    bool no_prefilter = false;
    auto* search = app.add_subcommand("search", "Bounded-height rational point search on C");
    search->add_option("--height", search_height, "Search height")->required()->check(CLI::Range(1LL, max_ll));
    search->add_option("--threads", search_threads, "Worker threads")->check(CLI::Range(1u, max_threads));
    search->add_flag("--no-prefilter", no_prefilter, "Disable the quadratic-residue pre-filter");

    long long sweep_bound = 0;
    unsigned sweep_threads = cuboid::default_thread_count();
    auto* sweep = app.add_subcommand("sweep", "Root sweep over coprime parameter pairs");
    sweep->add_option("--bound", sweep_bound, "Parameter bound")->required()->check(CLI::Range(2LL, max_ll));
    sweep->add_option("--threads", sweep_threads, "Worker threads")->check(CLI::Range(1u, max_threads));

    std::string show_target;
    std::optional<long long> show_p;
    std::optional<long long> show_q;
    std::optional<std::string> show_s;
    auto* show = app.add_subcommand("show", "Print one of the polynomials in canonical form");
    show->add_option("target", show_target, "qpq | ps | f | g | param")
        ->required()
        ->check(CLI::IsMember({"qpq", "ps", "f", "g", "param"}));
    auto* opt_p = show->add_option("--p", show_p, "Parameter p");
    auto* opt_q = show->add_option("--q", show_q, "Parameter q");
    auto* opt_s = show->add_option("--s", show_s, "Parameter s as NUM/DEN");
    opt_s->excludes(opt_p)->excludes(opt_q);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*verify) return run_verify(verify_height, verify_bound, verify_threads);
        if (*search) return run_search(search_height, search_threads, !no_prefilter);
        if (*sweep) return run_sweep(sweep_bound, sweep_threads);
        if (*show) return run_show(show_target, show_p, show_q, show_s);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitFail;
    }
    return kExitUsage;
}
