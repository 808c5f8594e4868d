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
#include <functional>
#include <span>
#include <vector>

#include "pfactor/execution.hpp"
#include "pfactor/field.hpp"
#include "pfactor/matrix.hpp"
#include "pfactor/subspace.hpp"

namespace pfactor {

inline constexpr std::size_t kLibrarySamples = 100'000;
inline constexpr std::size_t kAcceptanceSamples = 1'000'000;
inline constexpr std::size_t kMinSamples = 1'000;

/// [v_1, ..., v_k] = { sum t_i v_i : t_i in [0, 1] }, based at the origin.
/// Measured as a subset of the underlying real space.
template <Scalar T>
struct Parallelotope {
    Matrix<T> edges;  ///< n x k, one edge per column

    std::size_t ambient_dim() const noexcept { return edges.rows(); }
    std::size_t edge_count() const noexcept { return edges.cols(); }
};

/// k-dimensional Lebesgue measure sqrt(det Gram_R(edges)), where Gram_R uses
/// the real inner product Re<.,.>. 0 for dependent edges.
template <Scalar T>
double parallelotope_measure(const Parallelotope<T>& p);

/// Edge-wise projection on W.
template <Scalar T>
Parallelotope<T> project_parallelotope(const Parallelotope<T>& p, const Subspace<T>& w);

/// [v_1, i v_1, ..., v_k, i v_k]: the cell a complex k-blade measures.
Parallelotope<Complex> complex_parallelotope(const Matrix<Complex>& edges);

/// Axis-aligned box in carrier coordinates.
struct Box {
    std::vector<double> lo;
    std::vector<double> hi;

    std::size_t dim() const noexcept { return lo.size(); }
    double volume() const;
    bool contains(std::span<const double> x) const;
};

/// A measurable set inside a carrier subspace, given by a membership test on
/// real coordinates with respect to carrier_frame(carrier). The box must
/// contain the set.
template <Scalar T>
struct SampledSet {
    Subspace<T> carrier;
    std::function<bool(std::span<const double>)> indicator;
    Box box;
    std::size_t sample_count = kLibrarySamples;
    std::uint64_t seed = 0;
};

/// Real orthonormal frame of the carrier inside the (realified) ambient
/// space: n x k for real carriers, 2n x 2k for complex ones.
template <Scalar T>
Matrix<double> carrier_frame(const Subspace<T>& carrier);

struct Estimate {
    double value = 0.0;
    double std_error = 0.0;
    std::uint64_t seed = 0;
    std::size_t samples = 0;
};

/// Box volume times hit fraction. Deterministic for a fixed seed; per-block
/// streams make Serial and Parallel agree bit for bit.
template <Scalar T>
Estimate monte_carlo_measure(const SampledSet<T>& s, Execution exec = Execution::Parallel);

/// |P(S)| on W via change of variables: |det L| times the Monte-Carlo
/// measure of S, where L is the projection restricted to the carrier, in
/// orthonormal coordinates of the carrier and of P(carrier). Shares the
/// samples of S. Returns 0 (exactly) when P is not injective on the carrier.
struct ProjectedEstimate {
    Estimate estimate;
    double jacobian = 0.0;  ///< |det L|, the product of its singular values
    bool degenerate = false;
};

template <Scalar T>
ProjectedEstimate projected_set_measure(const SampledSet<T>& s, const Subspace<T>& w,
                                           Execution exec = Execution::Parallel);

/// Independent estimate of |P(S)|: samples a box around P(S) in coordinates
/// of P(carrier) and pulls each point back through L^-1 to test membership.
/// Uses its own random stream (`seed`), not the samples of S.
template <Scalar T>
Estimate resampled_projected_measure(const SampledSet<T>& s, const Subspace<T>& w, std::uint64_t seed,
                                     Execution exec = Execution::Parallel);

/// Deterministic midpoint grid count of |P(S)| for carriers of real
/// dimension <= 2 (DomainError otherwise).
template <Scalar T>
double grid_projected_measure(const SampledSet<T>& s, const Subspace<T>& w, std::size_t cells_per_axis);

// Ready-made sets in carrier coordinates.

/// Whole box.
template <Scalar T>
SampledSet<T> box_set(const Subspace<T>& carrier, Box box);

/// Euclidean ball of radius r about the origin (a disk for 2-dim carriers).
template <Scalar T>
SampledSet<T> ball_set(const Subspace<T>& carrier, double radius);

/// Union of closed intervals on a 1-dim carrier.
template <Scalar T>
SampledSet<T> intervals_set(const Subspace<T>& carrier, std::vector<std::pair<double, double>> intervals);

/// Hexagram (first Koch snowflake iterate): union of two equilateral
/// triangles with circumradius r, area sqrt(3) r^2. 2-dim carriers only.
template <Scalar T>
SampledSet<T> hexagram_set(const Subspace<T>& carrier, double radius);

/// Annulus r_in <= |x| <= r_out. 2-dim carriers only.
template <Scalar T>
SampledSet<T> annulus_set(const Subspace<T>& carrier, double r_in, double r_out);

}  // namespace pfactor
