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

#include <span>
#include <vector>

#include "pfactor/field.hpp"
#include "pfactor/matrix.hpp"

namespace pfactor {

// Relative Gram-Schmidt residual below which a spanning list counts as
// dependent (relative to the largest input norm).
inline constexpr double kRankTolerance = 1e-12;

/// Hermitian product, conjugate-linear in the FIRST argument:
/// inner(v, w) = sum_i conj(v_i) * w_i. Over the reals this is the dot
/// product. Projection factors only depend on |inner|, so the convention
/// choice never changes a factor value.
template <Scalar T>
T inner(std::span<const T> v, std::span<const T> w);

/// Re<v, w>: the real inner product of the underlying real space.
template <Scalar T>
double re_inner(std::span<const T> v, std::span<const T> w);

template <Scalar T>
double norm(std::span<const T> v);

/// G(i, j) = <v_i, v_j> over the columns of `vs`.
template <Scalar T>
Matrix<T> gram(const Matrix<T>& vs);

/// C(i, j) = <a_i, b_j>, i.e. adjoint(a) * b.
template <Scalar T>
Matrix<T> cross_gram(const Matrix<T>& a, const Matrix<T>& b);

/// Determinant by LU with partial pivoting; exactly singular input gives 0.
template <Scalar T>
T det(const Matrix<T>& m);

/// Solve A X = B for square nonsingular A (LU, partial pivoting).
template <Scalar T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b);

/// Orthonormal basis of the column span, in column order (Gram-Schmidt with
/// re-orthogonalization). Throws DependentBasisError when a residual falls
/// below kRankTolerance times the largest column norm.
template <Scalar T>
Matrix<T> orthonormalize(const Matrix<T>& basis);

/// Rank-revealing variant: orthonormal basis of the span, silently dropping
/// columns whose residual falls below `rel_tol` times the largest norm
/// (or `reference`, if larger).
/// The result may have zero columns.
template <Scalar T>
Matrix<T> orthonormal_span(const Matrix<T>& vectors, double rel_tol = 1e-10, double reference = 0.0);

/// Orthonormal columns completing the orthonormal columns of `q` to a basis
/// of the ambient space (n - k columns, chosen from canonical vectors).
template <Scalar T>
Matrix<T> complete_orthonormal(const Matrix<T>& q);

struct SvdOptions {
    int max_sweeps = 60;
};

/// Thin SVD M = U diag(sigma) V^*, r = min(rows, cols), sigma descending.
template <Scalar T>
struct Svd {
    Matrix<T> u;
    std::vector<double> sigma;
    Matrix<T> v;
};

/// One-sided (Hestenes) Jacobi SVD. A pair of columns is rotated until
/// |<a_i, a_j>| <= rows * eps * ||a_i|| ||a_j||; throws NumericalError if a
/// sweep cap is reached first.
template <Scalar T>
Svd<T> svd(const Matrix<T>& m, SvdOptions options = {});

/// Orthogonal projection of v on the span of orthonormal columns q.
template <Scalar T>
Vector<T> project_orthonormal(const Matrix<T>& q, std::span<const T> v);

}  // namespace pfactor
