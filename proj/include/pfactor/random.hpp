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

#include <cstdint>
#include <random>
#include <vector>

#include "pfactor/field.hpp"
#include "pfactor/linalg.hpp"
#include "pfactor/matrix.hpp"
#include "pfactor/subspace.hpp"

namespace pfactor {

/// SplitMix64 finalizer; used to derive independent stream seeds.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

/// Seedable, splittable generator (mt19937_64 underneath). Draws are
/// bit-identical across platforms: no std distributions are involved.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : seed_(seed), engine_(splitmix64(seed)) {}

    /// Independent stream `id` derived from `seed`.
    static Rng stream(std::uint64_t seed, std::uint64_t id) {
        return Rng(splitmix64(seed ^ splitmix64(id + 0x632BE59BD9B4E019ULL)));
    }

    std::uint64_t seed() const noexcept { return seed_; }

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform in [0, 1) with 53 random bits.
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Uniform integer in [lo, hi].
    std::size_t between(std::size_t lo, std::size_t hi) {
        return lo + static_cast<std::size_t>(engine_() % (hi - lo + 1));
    }

    /// Entry uniform in [-1, 1] (both components in complex mode).
    template <Scalar T>
    T entry() {
        if constexpr (is_complex_v<T>) {
            const double re = uniform(-1.0, 1.0);
            return {re, uniform(-1.0, 1.0)};
        } else {
            return uniform(-1.0, 1.0);
        }
    }

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
};

template <Scalar T>
Vector<T> random_vector(std::size_t n, Rng& rng) {
    Vector<T> v(n);
    for (T& x : v) {
        x = rng.entry<T>();
    }
    return v;
}

template <Scalar T>
Matrix<T> random_matrix(std::size_t rows, std::size_t cols, Rng& rng) {
    Matrix<T> m(rows, cols);
    for (std::size_t j = 0; j < cols; ++j) {
        for (std::size_t i = 0; i < rows; ++i) {
            m(i, j) = rng.entry<T>();
        }
    }
    return m;
}

// Smallest singular value of the column-normalized basis below which a
// random draw is rejected as nearly dependent.
inline constexpr double kRejectConditioning = 1e-3;

/// True when the columns are comfortably independent.
template <Scalar T>
bool well_conditioned(const Matrix<T>& basis, double threshold = kRejectConditioning) {
    if (basis.cols() == 0) {
        return true;
    }
    Matrix<T> normalized = basis;
    for (std::size_t j = 0; j < normalized.cols(); ++j) {
        const double nj = norm<T>(normalized.col(j));
        if (nj == 0.0) {
            return false;
        }
        for (T& x : normalized.col(j)) {
            x /= nj;
        }
    }
    const Svd<T> s = svd(normalized);
    return s.sigma.back() >= threshold;
}

/// k random spanning vectors of T^n, entries i.i.d. uniform in [-1, 1];
/// nearly dependent draws are rejected and redrawn.
template <Scalar T>
Matrix<T> random_basis(std::size_t n, std::size_t k, Rng& rng) {
    while (true) {
        Matrix<T> m = random_matrix<T>(n, k, rng);
        if (well_conditioned(m)) {
            return m;
        }
    }
}

template <Scalar T>
Subspace<T> random_subspace(std::size_t n, std::size_t k, Rng& rng) {
    return Subspace<T>(n, random_basis<T>(n, k, rng));
}

/// Random k-dimensional subspace of W (random combinations of its basis).
template <Scalar T>
Subspace<T> random_subspace_of(const Subspace<T>& w, std::size_t k, Rng& rng) {
    const Matrix<T>& q = w.orthonormal_basis();
    return Subspace<T>(w.ambient_dim(), q * random_basis<T>(q.cols(), k, rng));
}

/// Random orthonormal basis of T^n.
template <Scalar T>
Matrix<T> random_unitary(std::size_t n, Rng& rng) {
    return orthonormalize(random_basis<T>(n, n, rng));
}

/// Random dimension split of n into `parts` positive sizes.
inline std::vector<std::size_t> random_composition(std::size_t n, std::size_t parts, Rng& rng) {
    std::vector<std::size_t> dims(parts, 1);
    for (std::size_t extra = n - parts; extra > 0; --extra) {
        ++dims[rng.between(0, parts - 1)];
    }
    return dims;
}

}  // namespace pfactor
