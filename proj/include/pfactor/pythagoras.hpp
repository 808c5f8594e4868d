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

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pfactor/execution.hpp"
#include "pfactor/exterior.hpp"
#include "pfactor/measure.hpp"
#include "pfactor/random.hpp"
#include "pfactor/subspace.hpp"

namespace pfactor {

inline constexpr double kPartitionTolerance = 1e-10;
inline constexpr double kLineSumTolerance = 1e-10;
inline constexpr double kCoordinateSumTolerance = 1e-9;
/// Sampled-set identities pass within this many combined standard errors.
inline constexpr double kSampledSigmas = 3.0;

/// Mutually orthogonal subspaces whose direct sum is the whole space.
template <Scalar T>
class OrthogonalPartition {
public:
    /// Throws ValidationError if parts are not pairwise orthogonal within
    /// `tol` or their dimensions do not add up to the ambient dimension.
    explicit OrthogonalPartition(std::vector<Subspace<T>> parts, double tol = kPartitionTolerance);

    const std::vector<Subspace<T>>& parts() const noexcept { return parts_; }
    std::size_t size() const noexcept { return parts_.size(); }
    std::size_t ambient_dim() const noexcept { return parts_.empty() ? 0 : parts_.front().ambient_dim(); }

private:
    std::vector<Subspace<T>> parts_;
};

/// Splits a random orthonormal basis of T^n into consecutive blocks of the
/// given sizes.
template <Scalar T>
OrthogonalPartition<T> random_partition(std::size_t n, const std::vector<std::size_t>& dims, Rng& rng);

/// The C(n, q) coordinate subspaces V_I of an orthogonal basis, in
/// lexicographic order of I. The basis is normalized internally.
template <Scalar T>
class CoordinateFamily {
public:
    /// Throws ValidationError unless `basis` is n x n with nonzero, pairwise
    /// orthogonal columns; DomainError unless 1 <= q <= n.
    CoordinateFamily(const Matrix<T>& basis, std::size_t q);

    static CoordinateFamily canonical(std::size_t n, std::size_t q) {
        return CoordinateFamily(Matrix<T>::identity(n), q);
    }

    std::size_t ambient_dim() const noexcept { return basis_.rows(); }
    std::size_t q() const noexcept { return q_; }
    const Matrix<T>& basis() const noexcept { return basis_; }
    const std::vector<MultiIndex>& indices() const noexcept { return indices_; }
    const std::vector<Subspace<T>>& members() const noexcept { return members_; }

private:
    Matrix<T> basis_;
    std::size_t q_;
    std::vector<MultiIndex> indices_;
    std::vector<Subspace<T>> members_;
};

struct Term {
    std::string label;
    double value = 0.0;
};

/// Outcome of one identity check: each term, their (powered) sum, the
/// target, and the residual against a tolerance.
struct SumReport {
    std::string identity;
    std::vector<Term> terms;
    double sum = 0.0;
    double target = 0.0;
    double residual = 0.0;
    double tolerance = 0.0;
    bool pass = false;
    std::optional<double> std_error;  ///< sampled-set checks only
};

enum class TermDirection {
    VOntoMember,  ///< pi_{V, V_I}
    MemberOntoV,  ///< pi_{V_I, V}
};

/// Projection factors between V and every member of the family, in
/// lexicographic order. The OpenMP kernel and the serial loop return
/// identical vectors.
template <Scalar T>
std::vector<double> coordinate_terms(const Subspace<T>& v, const CoordinateFamily<T>& family, TermDirection dir,
                                     Execution exec = Execution::Parallel);

/// Line L and partition: sum pi^2 = 1 (real) / sum pi = 1 (complex).
template <Scalar T>
SumReport verify_line_partition(const Subspace<T>& line, const OrthogonalPartition<T>& partition,
                                double tol = kLineSumTolerance);

/// Measure form for a parallelotope carried by a line: |S|^2 = sum |S_j|^2
/// (real, S a segment) or |S| = sum |S_j| (complex, S = [v, iv]).
template <Scalar T>
SumReport verify_measure_line(const Parallelotope<T>& s, const OrthogonalPartition<T>& partition,
                              double tol = kLineSumTolerance);

/// Same with a sampled set on a line. Each |S_j| pushes the samples of S
/// through the projection; the tolerance is 3 combined standard errors.
template <Scalar T>
SumReport verify_measure_line(const SampledSet<T>& s, const OrthogonalPartition<T>& partition,
                              Execution exec = Execution::Parallel);

/// sum_I pi_{V,V_I}^2 = 1 (real) / sum_I pi_{V,V_I} = 1 (complex), q = dim V.
template <Scalar T>
SumReport verify_subspace_coordinates(const Subspace<T>& v, const CoordinateFamily<T>& family,
                                      double tol = kCoordinateSumTolerance, Execution exec = Execution::Parallel);

/// Binomial sums: C(n-p, n-q) when p <= q (terms pi_{V,V_I}), C(p, q) when
/// p > q (terms pi_{V_I,V}); squared terms over R.
template <Scalar T>
SumReport verify_binomial_identity(const Subspace<T>& v, const CoordinateFamily<T>& family,
                                   double tol = kCoordinateSumTolerance, Execution exec = Execution::Parallel);

/// |S|^2 = C(n-p, n-q)^-1 sum_I |S_I|^2 (real) or |S| = C(n-p, n-q)^-1 sum_I
/// |S_I| (complex) for a parallelotope S; every measure comes from the Gram
/// determinant oracle. DomainError when q < p.
template <Scalar T>
SumReport verify_measure_subspace(const Parallelotope<T>& s, const CoordinateFamily<T>& family,
                                  double tol = kCoordinateSumTolerance);

/// Sampled-set form (q = p only is typical, any q >= p accepted); projected
/// measures reuse the samples of S.
template <Scalar T>
SumReport verify_measure_subspace(const SampledSet<T>& s, const CoordinateFamily<T>& family,
                                  Execution exec = Execution::Parallel);

}  // namespace pfactor
