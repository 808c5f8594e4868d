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

#include "pfactor/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "pfactor/errors.hpp"

namespace pfactor {

namespace {

constexpr double kEps = std::numeric_limits<double>::epsilon();

template <Scalar T>
void axpy(T alpha, std::span<const T> x, std::span<T> y) {
    for (std::size_t i = 0; i < x.size(); ++i) {
        y[i] += alpha * x[i];
    }
}

template <Scalar T>
void scale(std::span<T> x, double s) {
    for (T& xi : x) {
        xi *= s;
    }
}

// Removes from `v` its components along the first `k` columns of `q`, twice.
template <Scalar T>
void orthogonalize_against(const Matrix<T>& q, std::size_t k, std::span<T> v) {
    for (int pass = 0; pass < 2; ++pass) {
        for (std::size_t j = 0; j < k; ++j) {
            const T c = inner<T>(q.col(j), v);
            axpy<T>(-c, q.col(j), v);
        }
    }
}

struct Lu {
    std::vector<std::size_t> perm;
    int sign = 1;
    bool singular = false;
};

template <Scalar T>
Lu lu_in_place(Matrix<T>& a) {
    const std::size_t n = a.rows();
    Lu lu;
    lu.perm.resize(n);
    std::iota(lu.perm.begin(), lu.perm.end(), std::size_t{0});
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::abs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            if (std::abs(a(i, k)) > best) {
                best = std::abs(a(i, k));
                piv = i;
            }
        }
        if (best == 0.0) {
            lu.singular = true;
            continue;
        }
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) {
                std::swap(a(k, j), a(piv, j));
            }
            std::swap(lu.perm[k], lu.perm[piv]);
            lu.sign = -lu.sign;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            const T f = a(i, k) / a(k, k);
            a(i, k) = f;
            for (std::size_t j = k + 1; j < n; ++j) {
                a(i, j) -= f * a(k, j);
            }
        }
    }
    return lu;
}

template <Scalar T>
Svd<T> svd_tall(const Matrix<T>& m, SvdOptions options) {
    const std::size_t rows = m.rows();
    const std::size_t cols = m.cols();
    Matrix<T> a = m;
    Matrix<T> v = Matrix<T>::identity(cols);
    const double pair_tol = static_cast<double>(std::max<std::size_t>(rows, 1)) * kEps;
    // Columns this small are roundoff of a rank-deficient input and are
    // left alone; a relative test alone would keep rotating pure noise.
    const double negligible = pair_tol * frobenius_norm(m);

    bool converged = cols < 2;
    for (int sweep = 0; sweep < options.max_sweeps && !converged; ++sweep) {
        bool rotated = false;
        for (std::size_t i = 0; i + 1 < cols; ++i) {
            for (std::size_t j = i + 1; j < cols; ++j) {
                const double alpha = std::real(inner<T>(a.col(i), a.col(i)));
                const double beta = std::real(inner<T>(a.col(j), a.col(j)));
                const T gamma = inner<T>(a.col(i), a.col(j));
                const double g = std::abs(gamma);
                if (g == 0.0 || g <= pair_tol * std::sqrt(alpha) * std::sqrt(beta) ||
                    std::sqrt(alpha) <= negligible || std::sqrt(beta) <= negligible) {
                    continue;
                }
                rotated = true;
                const T phase = conj(gamma / g);
                const double zeta = (beta - alpha) / (2.0 * g);
                const double t = (zeta >= 0.0 ? 1.0 : -1.0) / (std::abs(zeta) + std::sqrt(1.0 + zeta * zeta));
                const double c = 1.0 / std::sqrt(1.0 + t * t);
                const double s = c * t;
                auto rotate = [&](Matrix<T>& x) {
                    for (std::size_t r = 0; r < x.rows(); ++r) {
                        const T xi = x(r, i);
                        const T xj = x(r, j) * phase;
                        x(r, i) = c * xi - s * xj;
                        x(r, j) = s * xi + c * xj;
                    }
                };
                rotate(a);
                rotate(v);
            }
        }
        converged = !rotated;
    }
    if (!converged) {
        throw NumericalError("Jacobi SVD did not converge within the sweep cap");
    }

    std::vector<double> norms(cols);
    for (std::size_t j = 0; j < cols; ++j) {
        norms[j] = norm<T>(a.col(j));
    }
    std::vector<std::size_t> order(cols);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) { return norms[x] > norms[y]; });

    Svd<T> out{Matrix<T>(rows, cols), std::vector<double>(cols), Matrix<T>(cols, cols)};
    const double smax = cols > 0 ? norms[order[0]] : 0.0;
    for (std::size_t k = 0; k < cols; ++k) {
        const std::size_t src = order[k];
        out.sigma[k] = norms[src];
        std::copy(v.col(src).begin(), v.col(src).end(), out.v.col(k).begin());
        auto uk = out.u.col(k);
        std::copy(a.col(src).begin(), a.col(src).end(), uk.begin());
        // Columns carrying (almost) no mass are re-derived as an orthonormal
        // completion; the reconstruction error this costs is below sigma_k.
        if (norms[src] > 1e-8 * smax && norms[src] > std::numeric_limits<double>::min()) {
            scale<T>(uk, 1.0 / norms[src]);
            continue;
        }
        orthogonalize_against(out.u, k, uk);
        double nk = norm<T>(uk);
        if (nk <= 1e-3 * std::max(norms[src], std::numeric_limits<double>::min())) {
            // Direction lost entirely: take the canonical vector with the
            // largest residual.
            double best = -1.0;
            Vector<T> pick(rows);
            for (std::size_t e = 0; e < rows; ++e) {
                Vector<T> cand(rows);
                cand[e] = T(1);
                orthogonalize_against(out.u, k, std::span<T>(cand));
                const double cn = norm<T>(cand);
                if (cn > best) {
                    best = cn;
                    pick = cand;
                }
            }
            std::copy(pick.begin(), pick.end(), uk.begin());
            nk = best;
        }
        scale<T>(uk, 1.0 / nk);
    }
    return out;
}

}  // namespace

template <Scalar T>
T inner(std::span<const T> v, std::span<const T> w) {
    if (v.size() != w.size()) {
        throw DimensionError("inner: ambient dimensions differ");
    }
    T s{};
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += conj(v[i]) * w[i];
    }
    return s;
}

template <Scalar T>
double re_inner(std::span<const T> v, std::span<const T> w) {
    return real_part(inner<T>(v, w));
}

template <Scalar T>
double norm(std::span<const T> v) {
    double s = 0.0;
    for (const T& x : v) {
        s += abs2(x);
    }
    return std::sqrt(s);
}

template <Scalar T>
Matrix<T> gram(const Matrix<T>& vs) {
    return cross_gram(vs, vs);
}

template <Scalar T>
Matrix<T> cross_gram(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != b.rows()) {
        throw DimensionError("cross_gram: ambient dimensions differ");
    }
    Matrix<T> g(a.cols(), b.cols());
    for (std::size_t j = 0; j < b.cols(); ++j) {
        for (std::size_t i = 0; i < a.cols(); ++i) {
            g(i, j) = inner<T>(a.col(i), b.col(j));
        }
    }
    return g;
}

template <Scalar T>
T det(const Matrix<T>& m) {
    if (m.rows() != m.cols()) {
        throw DimensionError("det: matrix is not square");
    }
    Matrix<T> a = m;
    const Lu lu = lu_in_place(a);
    if (lu.singular) {
        return T(0);
    }
    T d = T(lu.sign);
    for (std::size_t i = 0; i < a.rows(); ++i) {
        d *= a(i, i);
    }
    return d;
}

template <Scalar T>
Matrix<T> solve(const Matrix<T>& a, const Matrix<T>& b) {
    if (a.rows() != a.cols() || a.rows() != b.rows()) {
        throw DimensionError("solve: incompatible shapes");
    }
    Matrix<T> lu_mat = a;
    const Lu lu = lu_in_place(lu_mat);
    if (lu.singular) {
        throw DependentBasisError("solve: singular matrix");
    }
    const std::size_t n = a.rows();
    Matrix<T> x(n, b.cols());
    for (std::size_t c = 0; c < b.cols(); ++c) {
        Vector<T> y(n);
        for (std::size_t i = 0; i < n; ++i) {
            T s = b(lu.perm[i], c);
            for (std::size_t k = 0; k < i; ++k) {
                s -= lu_mat(i, k) * y[k];
            }
            y[i] = s;
        }
        for (std::size_t i = n; i-- > 0;) {
            T s = y[i];
            for (std::size_t k = i + 1; k < n; ++k) {
                s -= lu_mat(i, k) * x(k, c);
            }
            x(i, c) = s / lu_mat(i, i);
        }
    }
    return x;
}

template <Scalar T>
Matrix<T> orthonormalize(const Matrix<T>& basis) {
    double largest = 0.0;
    for (std::size_t j = 0; j < basis.cols(); ++j) {
        largest = std::max(largest, norm<T>(basis.col(j)));
    }
    Matrix<T> q = basis;
    for (std::size_t j = 0; j < q.cols(); ++j) {
        auto qj = q.col(j);
        orthogonalize_against(q, j, qj);
        const double r = norm<T>(qj);
        if (!(r > kRankTolerance * largest)) {
            throw DependentBasisError("orthonormalize: spanning vectors are linearly dependent");
        }
        scale<T>(qj, 1.0 / r);
    }
    return q;
}

template <Scalar T>
Matrix<T> orthonormal_span(const Matrix<T>& vectors, double rel_tol, double reference) {
    const std::size_t n = vectors.rows();
    double largest = reference;
    for (std::size_t j = 0; j < vectors.cols(); ++j) {
        largest = std::max(largest, norm<T>(vectors.col(j)));
    }
    Matrix<T> work = vectors;
    std::vector<bool> used(work.cols(), false);
    Matrix<T> q(n, std::min(n, work.cols()));
    std::size_t rank = 0;
    // Greedy column pivoting: always take the largest remaining residual.
    while (rank < q.cols()) {
        std::size_t best = work.cols();
        double best_norm = 0.0;
        for (std::size_t j = 0; j < work.cols(); ++j) {
            if (used[j]) {
                continue;
            }
            const double r = norm<T>(work.col(j));
            if (r > best_norm) {
                best_norm = r;
                best = j;
            }
        }
        if (best == work.cols() || !(best_norm > rel_tol * largest)) {
            break;
        }
        used[best] = true;
        auto qr = q.col(rank);
        std::copy(work.col(best).begin(), work.col(best).end(), qr.begin());
        orthogonalize_against(q, rank, qr);
        const double r = norm<T>(qr);
        if (!(r > rel_tol * largest)) {
            std::fill(qr.begin(), qr.end(), T(0));
            continue;
        }
        scale<T>(qr, 1.0 / r);
        for (std::size_t j = 0; j < work.cols(); ++j) {
            if (!used[j]) {
                const T c = inner<T>(qr, work.col(j));
                axpy<T>(-c, qr, work.col(j));
            }
        }
        ++rank;
    }
    return q.column_block(0, rank);
}

template <Scalar T>
Matrix<T> complete_orthonormal(const Matrix<T>& q) {
    const std::size_t n = q.rows();
    const std::size_t k = q.cols();
    if (k > n) {
        throw DimensionError("complete_orthonormal: more columns than rows");
    }
    Matrix<T> all(n, n);
    for (std::size_t j = 0; j < k; ++j) {
        std::copy(q.col(j).begin(), q.col(j).end(), all.col(j).begin());
    }
    for (std::size_t j = k; j < n; ++j) {
        double best = -1.0;
        Vector<T> pick;
        for (std::size_t e = 0; e < n; ++e) {
            Vector<T> cand(n);
            cand[e] = T(1);
            orthogonalize_against(all, j, std::span<T>(cand));
            const double cn = norm<T>(cand);
            if (cn > best) {
                best = cn;
                pick = std::move(cand);
            }
        }
        scale<T>(std::span<T>(pick), 1.0 / best);
        std::copy(pick.begin(), pick.end(), all.col(j).begin());
    }
    return all.column_block(k, n - k);
}

template <Scalar T>
Svd<T> svd(const Matrix<T>& m, SvdOptions options) {
    if (m.rows() >= m.cols()) {
        return svd_tall(m, options);
    }
    Svd<T> t = svd_tall(adjoint(m), options);
    return {std::move(t.v), std::move(t.sigma), std::move(t.u)};
}

template <Scalar T>
Vector<T> project_orthonormal(const Matrix<T>& q, std::span<const T> v) {
    if (q.rows() != v.size()) {
        throw DimensionError("project: ambient dimensions differ");
    }
    Vector<T> out(v.size());
    for (std::size_t j = 0; j < q.cols(); ++j) {
        const T c = inner<T>(q.col(j), v);
        axpy<T>(c, q.col(j), std::span<T>(out));
    }
    return out;
}

#define PFACTOR_INSTANTIATE(T)                                                         \
    template T inner<T>(std::span<const T>, std::span<const T>);                       \
    template double re_inner<T>(std::span<const T>, std::span<const T>);               \
    template double norm<T>(std::span<const T>);                                       \
    template Matrix<T> gram<T>(const Matrix<T>&);                                      \
    template Matrix<T> cross_gram<T>(const Matrix<T>&, const Matrix<T>&);              \
    template T det<T>(const Matrix<T>&);                                               \
    template Matrix<T> solve<T>(const Matrix<T>&, const Matrix<T>&);                   \
    template Matrix<T> orthonormalize<T>(const Matrix<T>&);                            \
    template Matrix<T> orthonormal_span<T>(const Matrix<T>&, double, double);           \
    template Matrix<T> complete_orthonormal<T>(const Matrix<T>&);                      \
    template Svd<T> svd<T>(const Matrix<T>&, SvdOptions);                              \
    template Vector<T> project_orthonormal<T>(const Matrix<T>&, std::span<const T>);

PFACTOR_INSTANTIATE(double)
PFACTOR_INSTANTIATE(Complex)

#undef PFACTOR_INSTANTIATE

}  // namespace pfactor
