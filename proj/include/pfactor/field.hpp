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

#include <complex>
#include <string_view>
#include <type_traits>

namespace pfactor {

/// Ground field of a computation. Real maps to `double`, Complex to
/// `std::complex<double>`.
enum class Field { Real, Complex };

using Complex = std::complex<double>;

template <typename T>
inline constexpr bool is_complex_v = std::is_same_v<T, Complex>;

template <typename T>
concept Scalar = std::is_same_v<T, double> || std::is_same_v<T, Complex>;

template <Scalar T>
inline constexpr Field field_of = is_complex_v<T> ? Field::Complex : Field::Real;

constexpr std::string_view field_name(Field f) {
    return f == Field::Real ? "real" : "complex";
}

template <Scalar T>
constexpr T conj(T x) {
    if constexpr (is_complex_v<T>) {
        return std::conj(x);
    } else {
        return x;
    }
}

template <Scalar T>
constexpr double real_part(T x) {
    if constexpr (is_complex_v<T>) {
        return x.real();
    } else {
        return x;
    }
}

/// |x|^2 without the square root.
template <Scalar T>
constexpr double abs2(T x) {
    if constexpr (is_complex_v<T>) {
        return x.real() * x.real() + x.imag() * x.imag();
    } else {
        return x * x;
    }
}

/// Power that turns a principal cosine into a principal projection factor:
/// 1 over the reals, 2 over the complex numbers (each complex dimension is
/// two real ones contracting by the same cosine).
template <Scalar T>
inline constexpr int factor_power = is_complex_v<T> ? 2 : 1;

/// Raise a real-mode quantity to the field's factor power.
template <Scalar T>
constexpr double field_power(double x) {
    if constexpr (is_complex_v<T>) {
        return x * x;
    } else {
        return x;
    }
}

}  // namespace pfactor
