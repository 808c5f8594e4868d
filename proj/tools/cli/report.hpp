/*
   Copyright 2026 The pfactor Authors

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

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"

#include "pfactor/pythagoras.hpp"

namespace pfactor::cli {

enum class Format { Text, Structured };

/// Command output. Items are either plain values or checks carrying a
/// residual, tolerance and verdict; only checks count toward the summary.
class Report {
public:
    Report(std::string command, std::vector<std::string> arguments, std::uint64_t seed, std::string field);

    void set_field(std::string field) { field_ = std::move(field); }

    void value(const std::string& name, double v, const std::string& path = {});
    void check(const std::string& name, double v, double residual, double tolerance, const std::string& path = {});
    void sum(const std::string& name, const SumReport& s);

    /// Extra key on the most recent item.
    void annotate(const std::string& key, nlohmann::ordered_json v);

    bool all_pass() const noexcept { return failed_ == 0; }
    nlohmann::ordered_json to_json() const;
    std::string render(Format format) const;

private:
    nlohmann::ordered_json& push(const std::string& name, double v, const std::string& path);

    std::string command_;
    std::vector<std::string> arguments_;
    std::uint64_t seed_;
    std::string field_;
    nlohmann::ordered_json items_ = nlohmann::ordered_json::array();
    std::size_t passed_ = 0;
    std::size_t failed_ = 0;
};

}  // namespace pfactor::cli
