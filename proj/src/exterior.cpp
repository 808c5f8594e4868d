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

#include "pfactor/exterior.hpp"

#include <algorithm>
#include <cmath>

#include "pfactor/errors.hpp"
#include "pfactor/linalg.hpp"

namespace pfactor {

MultiIndex::MultiIndex(std::vector<std::size_t> indices, std::size_t ambient_dim) : indices_(std::move(indices)) {
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (indices_[k] >= ambient_dim) {
            throw DomainError("multi-index entry outside the ambient dimension");
        }
        if (k > 0 && indices_[k] <= indices_[k - 1]) {
            throw DomainError("multi-index is not strictly increasing");
        }
    }
}

std::string MultiIndex::label() const {
    std::string out;
    const bool compact = indices_.empty() || indices_.back() < 9;
    for (std::size_t k = 0; k < indices_.size(); ++k) {
        if (!compact && k > 0) {
            out += ',';
        }
        out += std::to_string(indices_[k] + 1);
    }
    return out;
}

std::vector<MultiIndex> combinations(std::size_t n, std::size_t q) {
    std::vector<MultiIndex> out;
    if (q > n) {
        return out;
    }
    std::vector<std::size_t> idx(q);
    for (std::size_t k = 0; k < q; ++k) {
        idx[k] = k;
    }
    while (true) {
        out.emplace_back(idx, n);
        // Advance the rightmost index that still has room.
        std::size_t k = q;
        while (k > 0 && idx[k - 1] == n - q + (k - 1)) {
            --k;
        }
        if (k == 0) {
            break;
        }
        ++idx[k - 1];
        for (std::size_t j = k; j < q; ++j) {
            idx[j] = idx[j - 1] + 1;
        }
    }
    return out;
}

double binomial(std::size_t n, std::size_t k) {
    if (k > n) {
        return 0.0;
    }
    k = std::min(k, n - k);
    double c = 1.0;
    for (std::size_t j = 1; j <= k; ++j) {
        c = c * static_cast<double>(n - k + j) / static_cast<double>(j);
    }
    return std::round(c);
}

int merge_sign(const MultiIndex& i, const MultiIndex& k) {
    std::size_t inversions = 0;
    for (std::size_t a : i.indices()) {
        for (std::size_t b : k.indices()) {
            if (a == b) {
                return 0;
            }
            if (a > b) {
                ++inversions;
            }
        }
    }
    return inversions % 2 == 0 ? 1 : -1;
}

namespace {

// Rows `idx` of `m`.
template <Scalar T>
Matrix<T> rows_of(const Matrix<T>& m, const MultiIndex& idx) {
    Matrix<T> out(idx.size(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        for (std::size_t r = 0; r < idx.size(); ++r) {
            out(r, j) = m(idx[r], j);
        }
    }
    return out;
}

}  // namespace

template <Scalar T>
Blade<T>::Blade(std::size_t ambient_dim, Matrix<T> factors) : ambient_(ambient_dim), factors_(std::move(factors)) {
    if (factors_.cols() == 0) {
        factors_ = Matrix<T>(ambient_, 0);
    } else if (factors_.rows() != ambient_) {
        throw DimensionError("blade factors do not match the ambient dimension");
    }
}

template <Scalar T>
Blade<T> Blade<T>::coordinate(std::size_t ambient_dim, const MultiIndex& idx) {
    Matrix<T> f(ambient_dim, idx.size());
    for (std::size_t k = 0; k < idx.size(); ++k) {
        f(idx[k], k) = T(1);
    }
    return Blade(ambient_dim, std::move(f));
}

template <Scalar T>
T blade_inner(const Blade<T>& nu, const Blade<T>& omega) {
    if (nu.grade() != omega.grade()) {
        throw GradeError("blade_inner: grades differ");
    }
    if (nu.ambient_dim() != omega.ambient_dim()) {
        throw DimensionError("blade_inner: ambient dimensions differ");
    }
    if (nu.grade() == 0) {
        return T(1);
    }
    return det(cross_gram(nu.factors(), omega.factors()));
}

template <Scalar T>
double blade_norm(const Blade<T>& nu) {
    if (nu.grade() == 0) {
        return 1.0;
    }
    // Product of singular values; sqrt(det Gram) loses half the digits near 0.
    double prod = 1.0;
    for (double s : svd(nu.factors()).sigma) {
        prod *= s;
    }
    return prod;
}

template <Scalar T>
Blade<T> wedge(const Blade<T>& nu, const Blade<T>& omega) {
    if (nu.ambient_dim() != omega.ambient_dim()) {
        throw DimensionError("wedge: ambient dimensions differ");
    }
    if (nu.grade() + omega.grade() > nu.ambient_dim()) {
        throw GradeError("wedge: grade exceeds the ambient dimension");
    }
    return Blade<T>(nu.ambient_dim(), hcat(nu.factors(), omega.factors()));
}

template <Scalar T>
Multivector<T> expand(const Blade<T>& nu) {
    Multivector<T> out{nu.grade(), nu.ambient_dim(), {}};
    for (const MultiIndex& idx : combinations(nu.ambient_dim(), nu.grade())) {
        const T c = nu.grade() == 0 ? T(1) : det(rows_of(nu.factors(), idx));
        if (c != T(0)) {
            out.coefficients.emplace(idx, c);
        }
    }
    return out;
}

template <Scalar T>
T multivector_inner(const Multivector<T>& x, const Multivector<T>& y) {
    if (x.grade != y.grade || x.ambient_dim != y.ambient_dim) {
        throw GradeError("multivector_inner: grades or dimensions differ");
    }
    T s{};
    for (const auto& [idx, c] : x.coefficients) {
        s += conj(c) * y.coefficient(idx);
    }
    return s;
}

template <Scalar T>
double multivector_norm(const Multivector<T>& x) {
    double s = 0.0;
    for (const auto& entry : x.coefficients) {
        s += abs2(entry.second);
    }
    return std::sqrt(s);
}

template <Scalar T>
Multivector<T> interior(const Blade<T>& nu, const Blade<T>& omega) {
    const std::size_t n = nu.ambient_dim();
    if (omega.ambient_dim() != n) {
        throw DimensionError("interior: ambient dimensions differ");
    }
    const std::size_t p = nu.grade();
    const std::size_t q = omega.grade();
    if (p > q) {
        throw GradeError("interior: grade of the contracting blade exceeds the target");
    }
    const Multivector<T> nu_c = expand(nu);
    const Multivector<T> omega_c = expand(omega);
    Multivector<T> out{q - p, n, {}};
    // (nu _| omega)_K = sum_I conj(nu_I) sign(I, K) omega_{I u K}
    for (const auto& [j_idx, w] : omega_c.coefficients) {
        for (const MultiIndex& pos : combinations(q, p)) {
            std::vector<std::size_t> i_vals;
            std::vector<std::size_t> k_vals;
            std::size_t next = 0;
            for (std::size_t t = 0; t < q; ++t) {
                if (next < p && pos[next] == t) {
                    i_vals.push_back(j_idx[t]);
                    ++next;
                } else {
                    k_vals.push_back(j_idx[t]);
                }
            }
            const MultiIndex i_idx(std::move(i_vals), n);
            const MultiIndex k_idx(std::move(k_vals), n);
            const T v = nu_c.coefficient(i_idx);
            if (v == T(0)) {
                continue;
            }
            out.coefficients[k_idx] += conj(v) * static_cast<double>(merge_sign(i_idx, k_idx)) * w;
        }
    }
    return out;
}

template <Scalar T>
Blade<T> blade_project(const Blade<T>& nu, const Subspace<T>& w) {
    if (nu.ambient_dim() != w.ambient_dim()) {
        throw DimensionError("blade_project: ambient dimensions differ");
    }
    return Blade<T>(nu.ambient_dim(), project_columns(nu.factors(), w));
}

#define PFACTOR_INSTANTIATE(T)                                                    \
    template class Blade<T>;                                                      \
    template T blade_inner<T>(const Blade<T>&, const Blade<T>&);                  \
    template double blade_norm<T>(const Blade<T>&);                               \
    template Blade<T> wedge<T>(const Blade<T>&, const Blade<T>&);                 \
    template Multivector<T> expand<T>(const Blade<T>&);                           \
    template T multivector_inner<T>(const Multivector<T>&, const Multivector<T>&); \
    template double multivector_norm<T>(const Multivector<T>&);                   \
    template Multivector<T> interior<T>(const Blade<T>&, const Blade<T>&);        \
    template Blade<T> blade_project<T>(const Blade<T>&, const Subspace<T>&);

PFACTOR_INSTANTIATE(double)
PFACTOR_INSTANTIATE(Complex)

#undef PFACTOR_INSTANTIATE

}  // namespace pfactor
