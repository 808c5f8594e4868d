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
#include <memory>
#include <mutex>
#include <span>

#include "pfactor/field.hpp"
#include "pfactor/linalg.hpp"
#include "pfactor/matrix.hpp"

namespace pfactor {

/// A linear subspace of T^n, given by spanning columns. The orthonormal
/// basis is computed on first use under a once-only guard and shared by
/// copies, so a Subspace can be read from many threads.
///
/// dim() == 0 represents {0}.
template <Scalar T>
class Subspace {
public:
    Subspace() : Subspace(0, Matrix<T>(0, 0)) {}

    /// `basis` must have `ambient_dim` rows (or no columns). Independence is
    /// checked lazily: orthonormal_basis() throws DependentBasisError.
    Subspace(std::size_t ambient_dim, Matrix<T> basis);

    /// Spanned by the columns of `basis` (ambient dimension = rows).
    explicit Subspace(Matrix<T> basis) : Subspace(basis.rows(), std::move(basis)) {}

    static Subspace zero(std::size_t ambient_dim) { return Subspace(ambient_dim, Matrix<T>(ambient_dim, 0)); }
    static Subspace whole(std::size_t ambient_dim) { return from_orthonormal(Matrix<T>::identity(ambient_dim)); }

    /// Trusts that the columns are already orthonormal.
    static Subspace from_orthonormal(Matrix<T> q);

    /// Span of possibly dependent vectors (rank-revealing; may be {0}).
    static Subspace span_of(const Matrix<T>& vectors, double rel_tol = 1e-10, double reference = 0.0);

    std::size_t ambient_dim() const noexcept { return ambient_; }
    std::size_t dim() const noexcept { return basis_.cols(); }
    bool is_zero() const noexcept { return dim() == 0; }
    static constexpr Field field() noexcept { return field_of<T>; }

    const Matrix<T>& basis() const noexcept { return basis_; }
    const Matrix<T>& orthonormal_basis() const;

private:
    struct Cache {
        std::once_flag once;
        Matrix<T> q;
    };

    std::size_t ambient_;
    Matrix<T> basis_;
    std::shared_ptr<Cache> cache_;
};

/// Orthogonal projection of v on W.
template <Scalar T>
Vector<T> project(std::span<const T> v, const Subspace<T>& w);

/// Columns of `m` each projected on W.
template <Scalar T>
Matrix<T> project_columns(const Matrix<T>& m, const Subspace<T>& w);

/// W-perp, by extending an orthonormal basis of W to the whole space.
template <Scalar T>
Subspace<T> orthogonal_complement(const Subspace<T>& w);

/// P(V): the image of V under the orthogonal projection on W.
template <Scalar T>
Subspace<T> image(const Subspace<T>& v, const Subspace<T>& w);

/// Orthogonal complement of U inside V (U need not lie in V; its projection
/// is removed from every basis vector of V).
template <Scalar T>
Subspace<T> complement_within(const Subspace<T>& v, const Subspace<T>& u);

/// V + W.
template <Scalar T>
Subspace<T> sum(const Subspace<T>& v, const Subspace<T>& w);

/// C^n -> R^2n, interleaving (re, im). Identity on real vectors.
Vector<double> realify(std::span<const Complex> v);
inline Vector<double> realify(std::span<const double> v) { return {v.begin(), v.end()}; }

/// Column-wise realification of vectors (no i-multiples added).
Matrix<double> realify_columns(const Matrix<Complex>& m);
inline Matrix<double> realify_columns(const Matrix<double>& m) { return m; }

/// A complex k-dimensional subspace as a real 2k-dimensional subspace of
/// R^2n with basis {b_j, i b_j}. Identity on real subspaces.
Subspace<double> realify(const Subspace<Complex>& s);
inline Subspace<double> realify(const Subspace<double>& s) { return s; }

/// The real line R v (inside the realified space when v is complex).
template <Scalar T>
Subspace<double> real_line(std::span<const T> v) {
    return Subspace<double>(Matrix<double>::from_columns({realify(v)}));
}

}  // namespace pfactor
