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

#include <gtest/gtest.h>

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>

#include "pfactor/field.hpp"
#include "pfactor/linalg.hpp"
#include "pfactor/matrix.hpp"
#include "pfactor/random.hpp"

namespace testing_support {

using pfactor::Complex;
using pfactor::Matrix;
using pfactor::Vector;

using Fields = ::testing::Types<double, Complex>;

class FieldNames {
public:
    template <typename T>
    static std::string GetName(int) {
        return pfactor::is_complex_v<T> ? "Complex" : "Real";
    }
};

template <typename T>
double max_abs_diff(const Matrix<T>& a, const Matrix<T>& b) {
    double worst = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        worst = std::max(worst, std::abs(a.data()[i] - b.data()[i]));
    }
    return worst;
}

template <typename T>
double orthonormality_error(const Matrix<T>& q) {
    return max_abs_diff(pfactor::gram(q), Matrix<T>::identity(q.cols()));
}

template <typename T>
Vector<T> unit(std::size_t n, std::size_t i) {
    Vector<T> v(n, T(0));
    v[i] = T(1);
    return v;
}

template <typename T>
Matrix<T> units(std::size_t n, std::initializer_list<std::size_t> idx) {
    Matrix<T> m(n, idx.size());
    std::size_t j = 0;
    for (std::size_t i : idx) {
        m(i, j++) = T(1);
    }
    return m;
}

/// Fixed per-test seed so each property test draws its own stream.
inline pfactor::Rng rng_for(std::uint64_t salt) { return pfactor::Rng(0x5EED0000ULL + salt); }

}  // namespace testing_support
