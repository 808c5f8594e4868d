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

#include <cstddef>
#include <cstdint>
#include <istream>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "pfactor/field.hpp"
#include "pfactor/matrix.hpp"
#include "pfactor/measure.hpp"
#include "pfactor/subspace.hpp"

namespace pfactor::cli {

/// Malformed or inconsistent input; maps to exit code 2.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

struct ObservableSpec {
    std::vector<std::string> parts;
    std::vector<double> eigenvalues;
};

/// Sampled set description; the set itself is built once seed and sample
/// count are known.
struct SampledSpec {
    std::string kind;  ///< ball, box, hexagram, annulus, intervals
    std::string carrier;
    nlohmann::json params;
};

template <Scalar T>
struct Document {
    using scalar_type = T;

    std::size_t ambient_dim = 0;
    std::map<std::string, Subspace<T>> subspaces;
    std::map<std::string, std::vector<std::string>> partitions;
    std::map<std::string, Vector<T>> states;
    std::map<std::string, ObservableSpec> observables;
    std::map<std::string, Parallelotope<T>> parallelotopes;
    std::map<std::string, SampledSpec> sampled;

    const Subspace<T>& subspace(const std::string& name) const;
    SampledSet<T> sampled_set(const std::string& name, std::size_t samples, std::uint64_t seed) const;
};

using AnyDocument = std::variant<Document<double>, Document<Complex>>;

/// Reads JSON from `path`, or from standard input when `path` is empty or "-".
nlohmann::json load_json(const std::string& path, std::istream& stdin_stream);

AnyDocument parse_document(const nlohmann::json& j);

}  // namespace pfactor::cli
