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

#include "pfactor/projection.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "pfactor/errors.hpp"
#include "pfactor/linalg.hpp"

namespace pfactor {

namespace {

double clamp01(double x) { return std::clamp(x, 0.0, 1.0); }

template <Scalar T>
void require_same_space(const Subspace<T>& v, const Subspace<T>& w) {
    if (v.ambient_dim() != w.ambient_dim()) {
        throw DimensionError("subspaces live in different ambient dimensions");
    }
}

// sqrt over the reals, identity over C: maps a "squared real factor"
// determinant to the field's factor.
template <Scalar T>
double det_to_factor(double d) {
    d = std::max(d, 0.0);
    if constexpr (is_complex_v<T>) {
        return clamp01(d);
    } else {
        return clamp01(std::sqrt(d));
    }
}

}  // namespace

template <Scalar T>
PrincipalDecomposition<T> principal_decomposition(const Subspace<T>& v, const Subspace<T>& w) {
    require_same_space(v, w);
    if (v.is_zero() || w.is_zero()) {
        throw DomainError("principal decomposition of a zero subspace");
    }
    const Matrix<T>& qv = v.orthonormal_basis();
    const Matrix<T>& qw = w.orthonormal_basis();
    const Matrix<T> m = cross_gram(qw, qv);  // q x p, the projection in these bases
    const Svd<T> s = svd(m);
    const std::size_t p = qv.cols();
    const std::size_t count = s.sigma.size();

    PrincipalDecomposition<T> out;
    out.e_vecs = qv * s.v;
    out.f_vecs = qw * s.u;
    out.sigma.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.sigma[i] = clamp01(s.sigma[i]);
    }

    const Svd<T> s_perp = svd(qv - qw * m);
    out.sines.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        out.sines[i] = clamp01(s_perp.sigma[p - 1 - i]);
    }

    out.theta.resize(count);
    out.pi_principal.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
        const double c = out.sigma[i];
        out.theta[i] = c * c > 0.5 ? std::asin(out.sines[i]) : std::acos(c);
        out.pi_principal[i] = field_power<T>(c);
    }

    Matrix<T> rest = complete_orthonormal(s.v);
    out.v_basis = rest.cols() == 0 ? out.e_vecs : hcat(out.e_vecs, qv * rest);
    return out;
}

template <Scalar T>
double projection_factor(const Subspace<T>& v, const Subspace<T>& w) {
    require_same_space(v, w);
    if (v.is_zero()) {
        return 1.0;
    }
    if (w.is_zero() || v.dim() > w.dim()) {
        return 0.0;
    }
    const PrincipalDecomposition<T> pd = principal_decomposition(v, w);
    double prod = 1.0;
    for (double pi : pd.pi_principal) {
        prod *= pi;
    }
    return clamp01(prod);
}

template <Scalar T>
double factor_orthonormal_det(const Subspace<T>& v, const Subspace<T>& w) {
    require_same_space(v, w);
    if (v.is_zero()) {
        return 1.0;
    }
    if (w.is_zero() || v.dim() > w.dim()) {
        return 0.0;
    }
    const Matrix<T> p = cross_gram(w.orthonormal_basis(), v.orthonormal_basis());
    if (v.dim() == w.dim()) {
        return clamp01(field_power<T>(std::abs(det(p))));
    }
    return det_to_factor<T>(real_part(det(adjoint(p) * p)));
}

template <Scalar T>
double factor_general_bases(const Matrix<T>& basis_v, const Matrix<T>& basis_w) {
    if (basis_v.rows() != basis_w.rows() && basis_v.cols() > 0 && basis_w.cols() > 0) {
        throw DimensionError("factor_general_bases: ambient dimensions differ");
    }
    const std::size_t p = basis_v.cols();
    const std::size_t q = basis_w.cols();
    if (p == 0) {
        return 1.0;
    }
    if (q == 0 || p > q) {
        return 0.0;
    }
    // Rank test with the shared dependence tolerance.
    (void)orthonormalize(basis_v);
    (void)orthonormalize(basis_w);
    const Matrix<T> a = gram(basis_w);
    const Matrix<T> b = cross_gram(basis_w, basis_v);
    const Matrix<T> d = gram(basis_v);
    const double det_a = real_part(det(a));
    const double det_d = real_part(det(d));
    if (!(det_a > 0.0) || !(det_d > 0.0)) {
        throw DependentBasisError("factor_general_bases: singular Gram matrix");
    }
    if (p == q) {
        const double r = std::abs(det(b)) / (std::sqrt(det_a) * std::sqrt(det_d));
        return clamp01(field_power<T>(r));
    }
    const Matrix<T> x = solve(a, b);
    return det_to_factor<T>(real_part(det(adjoint(b) * x)) / det_d);
}

template <Scalar T>
double factor_blades(const Blade<T>& nu, const Blade<T>& omega) {
    if (nu.grade() != omega.grade()) {
        throw GradeError("factor_blades: grades differ");
    }
    const double nn = blade_norm(nu);
    const double no = blade_norm(omega);
    if (nn == 0.0 || no == 0.0) {
        throw DomainError("factor_blades: zero blade");
    }
    return clamp01(field_power<T>(std::abs(blade_inner(nu, omega)) / (nn * no)));
}

template <Scalar T>
double factor_interior(const Blade<T>& nu, const Blade<T>& omega) {
    if (nu.grade() > omega.grade()) {
        return 0.0;
    }
    const double nn = blade_norm(nu);
    const double no = blade_norm(omega);
    if (nn == 0.0 || no == 0.0) {
        throw DomainError("factor_interior: zero blade");
    }
    return clamp01(field_power<T>(multivector_norm(interior(nu, omega)) / (nn * no)));
}

template <Scalar T>
double factor_exterior_power(const Subspace<T>& v, const Subspace<T>& w) {
    require_same_space(v, w);
    if (v.is_zero()) {
        return 1.0;
    }
    if (w.is_zero() || v.dim() > w.dim()) {
        return 0.0;
    }
    const std::size_t n = v.ambient_dim();
    const std::size_t p = v.dim();
    const Multivector<T> x = expand(Blade<T>(n, v.basis()));
    const Matrix<T>& qw = w.orthonormal_basis();
    // The blades f_J, |J| = p, are an orthonormal basis of Lambda^p W.
    double proj2 = 0.0;
    for (const MultiIndex& j : combinations(qw.cols(), p)) {
        Matrix<T> f(n, p);
        for (std::size_t k = 0; k < p; ++k) {
            std::copy(qw.col(j[k]).begin(), qw.col(j[k]).end(), f.col(k).begin());
        }
        proj2 += abs2(multivector_inner(expand(Blade<T>(n, std::move(f))), x));
    }
    const double nx = multivector_norm(x);
    if (nx == 0.0) {
        throw DependentBasisError("factor_exterior_power: dependent basis");
    }
    return clamp01(field_power<T>(std::sqrt(proj2) / nx));
}

template <Scalar T>
double grassmann_angle(const Subspace<T>& v, const Subspace<T>& w) {
    require_same_space(v, w);
    if (v.is_zero()) {
        return 0.0;
    }
    if (w.is_zero() || v.dim() > w.dim()) {
        return std::numbers::pi / 2.0;
    }
    const PrincipalDecomposition<T> pd = principal_decomposition(v, w);
    double prod = 1.0;
    for (double t : pd.theta) {
        prod *= std::cos(t);
    }
    return std::acos(clamp01(prod));
}

template <Scalar T>
ComplementFactors complement_factor(const Subspace<T>& v, const Subspace<T>& w) {
    require_same_space(v, w);
    ComplementFactors out;
    if (v.is_zero() || w.is_zero()) {
        // pi_{{0}, .} = 1, and W = {0} makes W-perp the whole space.
        out.principal = out.orthonormal_det = out.general_det = out.exterior = 1.0;
        return out;
    }
    const PrincipalDecomposition<T> pd = principal_decomposition(v, w);
    double prod = 1.0;
    for (double s : pd.sines) {
        prod *= field_power<T>(s);
    }
    out.principal = clamp01(prod);

    const std::size_t q = w.dim();
    if (v.dim() + q > v.ambient_dim()) {
        // dim V > dim W-perp: every determinant form is exactly 0.
        out.orthonormal_det = out.general_det = out.exterior = 0.0;
        return out;
    }
    const Matrix<T> b_on = cross_gram(w.orthonormal_basis(), v.orthonormal_basis());
    out.orthonormal_det = det_to_factor<T>(real_part(det(Matrix<T>::identity(q) - b_on * adjoint(b_on))));

    const Matrix<T>& bv = v.basis();
    const Matrix<T>& bw = w.basis();
    const Matrix<T> a = gram(bw);
    const Matrix<T> b = cross_gram(bw, bv);
    const Matrix<T> d = gram(bv);
    const Matrix<T> schur = a - b * solve(d, adjoint(b));
    out.general_det = det_to_factor<T>(real_part(det(schur)) / real_part(det(a)));

    const Blade<T> nu(v.ambient_dim(), bv);
    const Blade<T> omega(w.ambient_dim(), bw);
    out.exterior = clamp01(field_power<T>(blade_norm(wedge(nu, omega)) / (blade_norm(nu) * blade_norm(omega))));
    return out;
}

template <Scalar T>
double line_factor(std::span<const T> v, const Subspace<T>& w, LineMode mode) {
    if (mode == LineMode::ComplexLine && !is_complex_v<T>) {
        throw DomainError("complex line factor needs a complex space");
    }
    const double nv = norm<T>(v);
    if (nv == 0.0) {
        throw DomainError("line factor of the zero vector");
    }
    const Vector<T> pv = project<T>(v, w);
    const double r = clamp01(norm<T>(std::span<const T>(pv)) / nv);
    return mode == LineMode::RealLine ? r : r * r;
}

template <Scalar T>
double euclidean_angle(std::span<const T> v, std::span<const T> w) {
    const double d = norm<T>(v) * norm<T>(w);
    if (d == 0.0) {
        throw DomainError("angle with the zero vector");
    }
    return std::acos(std::clamp(re_inner<T>(v, w) / d, -1.0, 1.0));
}

template <Scalar T>
double hermitian_angle(std::span<const T> v, std::span<const T> w) {
    const double d = norm<T>(v) * norm<T>(w);
    if (d == 0.0) {
        throw DomainError("angle with the zero vector");
    }
    return std::acos(clamp01(std::abs(inner<T>(v, w)) / d));
}

std::string_view path_name(FactorPath path) {
    switch (path) {
        case FactorPath::SVD: return "svd";
        case FactorPath::OrthonormalDet: return "orthonormal-det";
        case FactorPath::GeneralBasisDet: return "general-det";
        case FactorPath::Blades: return "blades";
        case FactorPath::Interior: return "interior";
        case FactorPath::GrassmannAngle: return "grassmann-angle";
        case FactorPath::ExteriorPower: return "exterior-power";
    }
    return "unknown";
}

template <Scalar T>
FactorReport factor_by_path(const Subspace<T>& v, const Subspace<T>& w, FactorPath path) {
    require_same_space(v, w);
    FactorReport r{0.0, path, field_of<T>};
    const bool trivial = v.is_zero() || w.is_zero();
    switch (path) {
        case FactorPath::SVD:
            r.value = projection_factor(v, w);
            break;
        case FactorPath::OrthonormalDet:
            r.value = factor_orthonormal_det(v, w);
            break;
        case FactorPath::GeneralBasisDet:
            r.value = factor_general_bases(v.basis(), w.basis());
            break;
        case FactorPath::Blades:
            if (trivial) {
                r.value = projection_factor(v, w);
            } else if (v.dim() != w.dim()) {
                throw GradeError("blade path needs subspaces of equal dimension");
            } else {
                r.value = factor_blades(Blade<T>(v.ambient_dim(), v.basis()), Blade<T>(w.ambient_dim(), w.basis()));
            }
            break;
        case FactorPath::Interior:
            r.value = trivial ? projection_factor(v, w)
                              : factor_interior(Blade<T>(v.ambient_dim(), v.basis()),
                                                Blade<T>(w.ambient_dim(), w.basis()));
            break;
        case FactorPath::GrassmannAngle:
            r.value = field_power<T>(std::cos(grassmann_angle(v, w)));
            if (v.is_zero() || (!w.is_zero() && v.dim() <= w.dim())) {
                r.value = clamp01(r.value);
            } else {
                r.value = 0.0;  // cos(pi/2) is not exactly 0 in floating point
            }
            break;
        case FactorPath::ExteriorPower:
            r.value = factor_exterior_power(v, w);
            break;
    }
    return r;
}

template <Scalar T>
std::vector<FactorReport> factor_all_paths(const Subspace<T>& v, const Subspace<T>& w) {
    std::vector<FactorReport> out;
    for (FactorPath path : {FactorPath::SVD, FactorPath::OrthonormalDet, FactorPath::GeneralBasisDet,
                            FactorPath::Blades, FactorPath::Interior, FactorPath::GrassmannAngle,
                            FactorPath::ExteriorPower}) {
        if (path == FactorPath::Blades && v.dim() != w.dim()) {
            continue;
        }
        out.push_back(factor_by_path(v, w, path));
    }
    return out;
}

#define PFACTOR_INSTANTIATE(T)                                                                             \
    template PrincipalDecomposition<T> principal_decomposition<T>(const Subspace<T>&, const Subspace<T>&); \
    template double projection_factor<T>(const Subspace<T>&, const Subspace<T>&);                          \
    template double factor_orthonormal_det<T>(const Subspace<T>&, const Subspace<T>&);                     \
    template double factor_general_bases<T>(const Matrix<T>&, const Matrix<T>&);                           \
    template double factor_blades<T>(const Blade<T>&, const Blade<T>&);                                    \
    template double factor_interior<T>(const Blade<T>&, const Blade<T>&);                                  \
    template double factor_exterior_power<T>(const Subspace<T>&, const Subspace<T>&);                      \
    template double grassmann_angle<T>(const Subspace<T>&, const Subspace<T>&);                            \
    template ComplementFactors complement_factor<T>(const Subspace<T>&, const Subspace<T>&);               \
    template double line_factor<T>(std::span<const T>, const Subspace<T>&, LineMode);                      \
    template double euclidean_angle<T>(std::span<const T>, std::span<const T>);                           \
    template double hermitian_angle<T>(std::span<const T>, std::span<const T>);                           \
    template FactorReport factor_by_path<T>(const Subspace<T>&, const Subspace<T>&, FactorPath);           \
    template std::vector<FactorReport> factor_all_paths<T>(const Subspace<T>&, const Subspace<T>&);

PFACTOR_INSTANTIATE(double)
PFACTOR_INSTANTIATE(Complex)

#undef PFACTOR_INSTANTIATE

}  // namespace pfactor
