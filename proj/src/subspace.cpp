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

#include "pfactor/subspace.hpp"

#include "pfactor/errors.hpp"

namespace pfactor {

template <Scalar T>
Subspace<T>::Subspace(std::size_t ambient_dim, Matrix<T> basis)
    : ambient_(ambient_dim), basis_(std::move(basis)), cache_(std::make_shared<Cache>()) {
    if (basis_.cols() == 0) {
        basis_ = Matrix<T>(ambient_, 0);
    } else if (basis_.rows() != ambient_) {
        throw DimensionError("subspace basis does not match the ambient dimension");
    }
    if (basis_.cols() > ambient_) {
        throw DependentBasisError("more spanning vectors than the ambient dimension");
    }
}

template <Scalar T>
Subspace<T> Subspace<T>::from_orthonormal(Matrix<T> q) {
    const std::size_t n = q.rows();
    Subspace s(n, q);
    std::call_once(s.cache_->once, [&] { s.cache_->q = std::move(q); });
    return s;
}

template <Scalar T>
Subspace<T> Subspace<T>::span_of(const Matrix<T>& vectors, double rel_tol, double reference) {
    Matrix<T> q = orthonormal_span(vectors, rel_tol, reference);
    if (q.cols() == 0) {
        return zero(vectors.rows());
    }
    return from_orthonormal(std::move(q));
}

template <Scalar T>
const Matrix<T>& Subspace<T>::orthonormal_basis() const {
    std::call_once(cache_->once, [this] { cache_->q = orthonormalize(basis_); });
    return cache_->q;
}

template <Scalar T>
Vector<T> project(std::span<const T> v, const Subspace<T>& w) {
    if (v.size() != w.ambient_dim()) {
        throw DimensionError("project: ambient dimensions differ");
    }
    if (w.is_zero()) {
        return Vector<T>(v.size());
    }
    return project_orthonormal(w.orthonormal_basis(), v);
}

template <Scalar T>
Matrix<T> project_columns(const Matrix<T>& m, const Subspace<T>& w) {
    Matrix<T> out(m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Vector<T> pj = project<T>(m.col(j), w);
        std::copy(pj.begin(), pj.end(), out.col(j).begin());
    }
    return out;
}

template <Scalar T>
Subspace<T> orthogonal_complement(const Subspace<T>& w) {
    const std::size_t n = w.ambient_dim();
    if (w.is_zero()) {
        return Subspace<T>::whole(n);
    }
    Matrix<T> c = complete_orthonormal(w.orthonormal_basis());
    if (c.cols() == 0) {
        return Subspace<T>::zero(n);
    }
    return Subspace<T>::from_orthonormal(std::move(c));
}

template <Scalar T>
Subspace<T> image(const Subspace<T>& v, const Subspace<T>& w) {
    if (v.ambient_dim() != w.ambient_dim()) {
        throw DimensionError("image: ambient dimensions differ");
    }
    if (v.is_zero()) {
        return Subspace<T>::zero(v.ambient_dim());
    }
    return Subspace<T>::span_of(project_columns(v.orthonormal_basis(), w), 1e-10, 1.0);
}

template <Scalar T>
Subspace<T> complement_within(const Subspace<T>& v, const Subspace<T>& u) {
    if (v.ambient_dim() != u.ambient_dim()) {
        throw DimensionError("complement_within: ambient dimensions differ");
    }
    if (v.is_zero()) {
        return v;
    }
    const Matrix<T>& q = v.orthonormal_basis();
    return Subspace<T>::span_of(q - project_columns(q, u), 1e-10, 1.0);
}

template <Scalar T>
Subspace<T> sum(const Subspace<T>& v, const Subspace<T>& w) {
    if (v.ambient_dim() != w.ambient_dim()) {
        throw DimensionError("sum: ambient dimensions differ");
    }
    return Subspace<T>::span_of(hcat(v.orthonormal_basis(), w.orthonormal_basis()));
}

Vector<double> realify(std::span<const Complex> v) {
    Vector<double> out(2 * v.size());
    for (std::size_t i = 0; i < v.size(); ++i) {
        out[2 * i] = v[i].real();
        out[2 * i + 1] = v[i].imag();
    }
    return out;
}

Matrix<double> realify_columns(const Matrix<Complex>& m) {
    Matrix<double> out(2 * m.rows(), m.cols());
    for (std::size_t j = 0; j < m.cols(); ++j) {
        const Vector<double> r = realify(m.col(j));
        std::copy(r.begin(), r.end(), out.col(j).begin());
    }
    return out;
}

Subspace<double> realify(const Subspace<Complex>& s) {
    const Matrix<Complex>& b = s.basis();
    Matrix<double> out(2 * s.ambient_dim(), 2 * s.dim());
    const Complex i_unit(0.0, 1.0);
    for (std::size_t j = 0; j < s.dim(); ++j) {
        Vector<Complex> ib(b.col(j).begin(), b.col(j).end());
        for (Complex& x : ib) {
            x *= i_unit;
        }
        const Vector<double> r0 = realify(b.col(j));
        const Vector<double> r1 = realify(std::span<const Complex>(ib));
        std::copy(r0.begin(), r0.end(), out.col(2 * j).begin());
        std::copy(r1.begin(), r1.end(), out.col(2 * j + 1).begin());
    }
    return Subspace<double>(2 * s.ambient_dim(), std::move(out));
}

#define PFACTOR_INSTANTIATE(T)                                                         \
    template class Subspace<T>;                                                        \
    template Vector<T> project<T>(std::span<const T>, const Subspace<T>&);             \
    template Matrix<T> project_columns<T>(const Matrix<T>&, const Subspace<T>&);       \
    template Subspace<T> orthogonal_complement<T>(const Subspace<T>&);                 \
    template Subspace<T> image<T>(const Subspace<T>&, const Subspace<T>&);             \
    template Subspace<T> complement_within<T>(const Subspace<T>&, const Subspace<T>&); \
    template Subspace<T> sum<T>(const Subspace<T>&, const Subspace<T>&);

PFACTOR_INSTANTIATE(double)
PFACTOR_INSTANTIATE(Complex)

#undef PFACTOR_INSTANTIATE

}  // namespace pfactor
