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

#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

namespace pfactor::cli {

using nlohmann::ordered_json;

namespace {

std::string num(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", x);
    return buf;
}

// NaN and infinities are not valid JSON numbers.
ordered_json json_number(double x) {
    if (std::isfinite(x)) {
        return x;
    }
    return std::isnan(x) ? "nan" : (x > 0 ? "inf" : "-inf");
}

}  // namespace

Report::Report(std::string command, std::vector<std::string> arguments, std::uint64_t seed, std::string field)
    : command_(std::move(command)), arguments_(std::move(arguments)), seed_(seed), field_(std::move(field)) {}

ordered_json& Report::push(const std::string& name, double v, const std::string& path) {
    ordered_json item;
    item["name"] = name;
    item["value"] = json_number(v);
    if (!path.empty()) {
        item["path"] = path;
    }
    items_.push_back(std::move(item));
    return items_.back();
}

void Report::value(const std::string& name, double v, const std::string& path) { push(name, v, path); }

void Report::check(const std::string& name, double v, double residual, double tolerance, const std::string& path) {
    ordered_json& item = push(name, v, path);
    const bool pass = residual <= tolerance;
    item["residual"] = json_number(residual);
    item["tolerance"] = tolerance;
    item["pass"] = pass;
    ++(pass ? passed_ : failed_);
}

void Report::sum(const std::string& name, const SumReport& s) {
    check(name, s.sum, s.residual, s.tolerance);
    annotate("target", s.target);
    if (s.std_error) {
        annotate("std_error", *s.std_error);
    }
    ordered_json terms = ordered_json::array();
    for (const Term& t : s.terms) {
        terms.push_back({{"label", t.label}, {"value", json_number(t.value)}});
    }
    annotate("terms", std::move(terms));
}

void Report::annotate(const std::string& key, ordered_json v) { items_.back()[key] = std::move(v); }

ordered_json Report::to_json() const {
    ordered_json j;
    j["command"] = command_;
    j["arguments"] = arguments_;
    j["seed"] = seed_;
    j["field"] = field_;
    j["items"] = items_;
    j["summary"] = {{"passed", passed_}, {"failed", failed_}, {"all_pass", all_pass()}};
    return j;
}

std::string Report::render(Format format) const {
    if (format == Format::Structured) {
        return to_json().dump(2) + "\n";
    }
    std::ostringstream out;
    out << "pfactor";
    for (const auto& a : arguments_) {
        out << ' ' << a;
    }
    out << "  (field " << field_ << ", seed " << seed_ << ")\n";
    for (const auto& item : items_) {
        const auto fmt = [](const ordered_json& v) { return v.is_number() ? num(v.get<double>()) : v.dump(); };
        if (item.contains("pass")) {
            out << (item["pass"].get<bool>() ? "  pass  " : "  FAIL  ");
        } else {
            out << "        ";
        }
        out << item["name"].get<std::string>() << " = " << fmt(item["value"]);
        if (item.contains("path")) {
            out << "  [" << item["path"].get<std::string>() << "]";
        }
        if (item.contains("residual")) {
            out << "  residual " << fmt(item["residual"]) << " (tol " << num(item["tolerance"].get<double>()) << ")";
        }
        out << '\n';
    }
    out << passed_ << " passed, " << failed_ << " failed\n";
    return out.str();
}

}  // namespace pfactor::cli
