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

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

#include "pfactor/field.hpp"
#include "pfactor/matrix.hpp"
#include "pfactor/subspace.hpp"

namespace pfactor {

/// Strictly increasing list of 0-based coordinate indices. Ordered
/// lexicographically; printed 1-based.
class MultiIndex {
public:
    MultiIndex() = default;
    /// Throws DomainError unless strictly increasing and below `ambient_dim`.
    MultiIndex(std::vector<std::size_t> indices, std::size_t ambient_dim);

    std::size_t size() const noexcept { return indices_.size(); }
    const std::vector<std::size_t>& indices() const noexcept { return indices_; }
    std::size_t operator[](std::size_t k) const { return indices_[k]; }

    /// "13" style label (1-based, digits concatenated when n < 10).
    std::string label() const;

    auto operator<=>(const MultiIndex&) const = default;

private:
    std::vector<std::size_t> indices_;
};

/// All C(n, q) multi-indices of size q in lexicographic order.
std::vector<MultiIndex> combinations(std::size_t n, std::size_t q);

/// C(n, k) as a double (0 when k > n).
double binomial(std::size_t n, std::size_t k);

/// Parity sign of the permutation sorting the concatenation (I, K); 0 if the
/// index sets intersect.
int merge_sign(const MultiIndex& i, const MultiIndex& k);

/// Decomposable p-vector v_1 ^ ... ^ v_p, stored as its factor list.
/// Grade 0 is the scalar 1.
template <Scalar T>
class Blade {
public:
    Blade(std::size_t ambient_dim, Matrix<T> factors);
    explicit Blade(Matrix<T> factors) : Blade(factors.rows(), std::move(factors)) {}

    static Blade unit(std::size_t ambient_dim) { return Blade(ambient_dim, Matrix<T>(ambient_dim, 0)); }

    /// Blade of canonical vectors e_I.
    static Blade coordinate(std::size_t ambient_dim, const MultiIndex& idx);

    std::size_t grade() const noexcept { return factors_.cols(); }
    std::size_t ambient_dim() const noexcept { return ambient_; }
    const Matrix<T>& factors() const noexcept { return factors_; }

private:
    std::size_t ambient_;
    Matrix<T> factors_;
};

/// Grade-q element given by coordinates over the canonical basis blades e_I.
template <Scalar T>
struct Multivector {
    std::size_t grade = 0;
    std::size_t ambient_dim = 0;
    std::map<MultiIndex, T> coefficients;

    T coefficient(const MultiIndex& idx) const {
        auto it = coefficients.find(idx);
        return it == coefficients.end() ? T(0) : it->second;
    }
};

/// <nu, omega> = det(<v_i, w_j>).
template <Scalar T>
T blade_inner(const Blade<T>& nu, const Blade<T>& omega);

/// sqrt(det Gram(factors)): the p-volume of the spanned parallelotope.
template <Scalar T>
double blade_norm(const Blade<T>& nu);

/// Factor concatenation; GradeError when the grades exceed the dimension.
template <Scalar T>
Blade<T> wedge(const Blade<T>& nu, const Blade<T>& omega);

/// Coordinates of a blade over the canonical e_I (its Pluecker vector).
template <Scalar T>
Multivector<T> expand(const Blade<T>& nu);

template <Scalar T>
T multivector_inner(const Multivector<T>& x, const Multivector<T>& y);

template <Scalar T>
double multivector_norm(const Multivector<T>& x);

/// Interior product nu _| omega, the (q-p)-vector with
/// <nu _| omega, mu> = <omega, nu ^ mu> for every (q-p)-blade mu.
template <Scalar T>
Multivector<T> interior(const Blade<T>& nu, const Blade<T>& omega);

/// P v_1 ^ ... ^ P v_p for the orthogonal projection P on W.
template <Scalar T>
Blade<T> blade_project(const Blade<T>& nu, const Subspace<T>& w);

}  // namespace pfactor
