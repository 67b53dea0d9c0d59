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

#ifndef CUBOID_CHECK_HPP
#define CUBOID_CHECK_HPP

#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

namespace cuboid {

enum class Status { pass, fail, external_assumption };

inline std::string_view to_string(Status s) {
    switch (s) {
        case Status::pass: return "pass";
        case Status::fail: return "fail";
        case Status::external_assumption: return "external-assumption";
    }
    return "fail";
}

/// Outcome of one verification step.
struct CheckResult {
    std::string check;
    Status status = Status::fail;
    std::string citation;
    std::string witness;

    bool passed() const { return status == Status::pass; }
};

inline void to_json(nlohmann::ordered_json& j, const CheckResult& r) {
    j = nlohmann::ordered_json{{"check", r.check},
                               {"status", std::string(to_string(r.status))},
                               {"citation", r.citation},
                               {"witness", r.witness}};
}

}  // namespace cuboid

#endif  // CUBOID_CHECK_HPP
