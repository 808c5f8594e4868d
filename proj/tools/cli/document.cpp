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

#include "document.hpp"

#include <fstream>
#include <iterator>
#include <set>

#include "pfactor/errors.hpp"

namespace pfactor::cli {

using nlohmann::json;

namespace {

void require(bool ok, const std::string& what) {
    if (!ok) {
        throw InputError(what);
    }
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
    require(obj.is_object(), where + ": expected an object");
    for (const auto& [key, value] : obj.items()) {
        require(allowed.count(key) > 0, where + ": unknown key '" + key + "'");
    }
}

double number(const json& j, const std::string& where) {
    require(j.is_number(), where + ": expected a number");
    return j.get<double>();
}

template <Scalar T>
T scalar(const json& j, const std::string& where) {
    if constexpr (is_complex_v<T>) {
        if (j.is_array()) {
            require(j.size() == 2, where + ": complex entries are [re, im]");
            return {number(j[0], where), number(j[1], where)};
        }
        return {number(j, where), 0.0};
    } else {
        return number(j, where);
    }
}

template <Scalar T>
Vector<T> vector_of(const json& j, std::size_t n, const std::string& where) {
    require(j.is_array(), where + ": expected a list of entries");
    require(j.size() == n, where + ": expected " + std::to_string(n) + " entries, got " + std::to_string(j.size()));
    Vector<T> v(n);
    for (std::size_t i = 0; i < n; ++i) {
        v[i] = scalar<T>(j[i], where);
    }
    return v;
}

template <Scalar T>
Matrix<T> columns_of(const json& j, std::size_t n, const std::string& where) {
    require(j.is_array(), where + ": expected a list of columns");
    Matrix<T> m(n, j.size());
    for (std::size_t c = 0; c < j.size(); ++c) {
        const Vector<T> col = vector_of<T>(j[c], n, where + " column " + std::to_string(c + 1));
        std::copy(col.begin(), col.end(), m.col(c).begin());
    }
    return m;
}

std::vector<std::string> names_of(const json& j, const std::string& where) {
    require(j.is_array(), where + ": expected a list of names");
    std::vector<std::string> out;
    for (const auto& e : j) {
        require(e.is_string(), where + ": expected a name");
        out.push_back(e.get<std::string>());
    }
    return out;
}

template <Scalar T>
Document<T> parse_as(const json& j) {
    Document<T> d;
    require(j.contains("ambient_dim") && j["ambient_dim"].is_number_unsigned() && j["ambient_dim"].get<std::size_t>() > 0,
            "ambient_dim must be a positive integer");
    d.ambient_dim = j["ambient_dim"].get<std::size_t>();
    const std::size_t n = d.ambient_dim;

    if (j.contains("subspaces")) {
        require(j["subspaces"].is_object(), "subspaces: expected an object");
        for (const auto& [name, cols] : j["subspaces"].items()) {
            const std::string where = "subspace '" + name + "'";
            Subspace<T> s(n, columns_of<T>(cols, n, where));
            try {
                (void)s.orthonormal_basis();
            } catch (const DependentBasisError&) {
                throw InputError(where + ": columns are linearly dependent");
            }
            d.subspaces.emplace(name, std::move(s));
        }
    }
    if (j.contains("partitions")) {
        require(j["partitions"].is_object(), "partitions: expected an object");
        for (const auto& [name, parts] : j["partitions"].items()) {
            const std::string where = "partition '" + name + "'";
            d.partitions.emplace(name, names_of(parts, where));
            for (const auto& part : d.partitions.at(name)) {
                require(d.subspaces.count(part) > 0, where + ": unknown subspace '" + part + "'");
            }
        }
    }
    if (j.contains("states")) {
        require(j["states"].is_object(), "states: expected an object");
        for (const auto& [name, psi] : j["states"].items()) {
            d.states.emplace(name, vector_of<T>(psi, n, "state '" + name + "'"));
        }
    }
    if (j.contains("observables")) {
        require(j["observables"].is_object(), "observables: expected an object");
        for (const auto& [name, obs] : j["observables"].items()) {
            const std::string where = "observable '" + name + "'";
            only_keys(obs, {"parts", "eigenvalues"}, where);
            require(obs.contains("parts") && obs.contains("eigenvalues"), where + ": needs parts and eigenvalues");
            ObservableSpec spec{names_of(obs["parts"], where), {}};
            require(obs["eigenvalues"].is_array(), where + ": eigenvalues must be a list");
            for (const auto& e : obs["eigenvalues"]) {
                spec.eigenvalues.push_back(number(e, where));
            }
            for (const auto& part : spec.parts) {
                require(d.subspaces.count(part) > 0, where + ": unknown subspace '" + part + "'");
            }
            d.observables.emplace(name, std::move(spec));
        }
    }
    if (j.contains("sets")) {
        require(j["sets"].is_object(), "sets: expected an object");
        for (const auto& [name, set] : j["sets"].items()) {
            const std::string where = "set '" + name + "'";
            require(set.is_object() && set.size() == 1, where + ": expected exactly one kind");
            const std::string kind = set.begin().key();
            const json& body = set.begin().value();
            if (kind == "parallelotope") {
                d.parallelotopes.emplace(name, Parallelotope<T>{columns_of<T>(body, n, where)});
                continue;
            }
            static const std::map<std::string, std::set<std::string>> kinds = {
                {"ball", {"carrier", "radius"}},
                {"hexagram", {"carrier", "radius"}},
                {"annulus", {"carrier", "inner", "outer"}},
                {"box", {"carrier", "lo", "hi"}},
                {"intervals", {"carrier", "intervals"}},
            };
            const auto it = kinds.find(kind);
            require(it != kinds.end(), where + ": unknown kind '" + kind + "'");
            only_keys(body, it->second, where);
            for (const auto& key : it->second) {
                require(body.contains(key), where + ": missing '" + key + "'");
            }
            require(body["carrier"].is_string(), where + ": carrier must be a subspace name");
            const std::string carrier = body["carrier"].get<std::string>();
            require(d.subspaces.count(carrier) > 0, where + ": unknown subspace '" + carrier + "'");
            d.sampled.emplace(name, SampledSpec{kind, carrier, body});
        }
    }
    return d;
}

}  // namespace

template <Scalar T>
const Subspace<T>& Document<T>::subspace(const std::string& name) const {
    const auto it = subspaces.find(name);
    if (it == subspaces.end()) {
        throw InputError("unknown subspace '" + name + "'");
    }
    return it->second;
}

template <Scalar T>
SampledSet<T> Document<T>::sampled_set(const std::string& name, std::size_t samples, std::uint64_t seed) const {
    const auto it = sampled.find(name);
    if (it == sampled.end()) {
        throw InputError("unknown sampled set '" + name + "'");
    }
    const SampledSpec& spec = it->second;
    const std::string where = "set '" + name + "'";
    const Subspace<T>& carrier = subspace(spec.carrier);
    const json& b = spec.params;
    SampledSet<T> s;
    try {
        if (spec.kind == "ball") {
            s = ball_set(carrier, number(b["radius"], where));
        } else if (spec.kind == "hexagram") {
            s = hexagram_set(carrier, number(b["radius"], where));
        } else if (spec.kind == "annulus") {
            s = annulus_set(carrier, number(b["inner"], where), number(b["outer"], where));
        } else if (spec.kind == "box") {
            require(b["lo"].is_array() && b["hi"].is_array(), where + ": lo and hi must be lists");
            Box box;
            for (const auto& x : b["lo"]) {
                box.lo.push_back(number(x, where));
            }
            for (const auto& x : b["hi"]) {
                box.hi.push_back(number(x, where));
            }
            s = box_set(carrier, std::move(box));
        } else {
            std::vector<std::pair<double, double>> iv;
            require(b["intervals"].is_array(), where + ": intervals must be a list");
            for (const auto& e : b["intervals"]) {
                require(e.is_array() && e.size() == 2, where + ": intervals are [lo, hi] pairs");
                iv.emplace_back(number(e[0], where), number(e[1], where));
            }
            s = intervals_set(carrier, std::move(iv));
        }
    } catch (const pfactor::Error& e) {
        throw InputError(where + ": " + e.what());
    }
    s.sample_count = samples;
    s.seed = seed;
    return s;
}

json load_json(const std::string& path, std::istream& stdin_stream) {
    std::string text;
    if (path.empty() || path == "-") {
        text.assign(std::istreambuf_iterator<char>(stdin_stream), std::istreambuf_iterator<char>());
    } else {
        std::ifstream in(path);
        if (!in) {
            throw InputError("cannot open '" + path + "'");
        }
        text.assign(std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>());
    }
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("invalid JSON: ") + e.what());
    }
}

AnyDocument parse_document(const json& j) {
    only_keys(j, {"field", "ambient_dim", "subspaces", "partitions", "states", "observables", "sets"}, "document");
    require(j.contains("field") && j["field"].is_string(), "field must be \"real\" or \"complex\"");
    const std::string field = j["field"].get<std::string>();
    if (field == "real") {
        return parse_as<double>(j);
    }
    if (field == "complex") {
        return parse_as<Complex>(j);
    }
    throw InputError("field must be \"real\" or \"complex\"");
}

template struct Document<double>;
template struct Document<Complex>;

}  // namespace pfactor::cli
