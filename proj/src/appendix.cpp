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

#include "pfactor/appendix.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <exception>

#include "pfactor/errors.hpp"
#include "pfactor/exterior.hpp"
#include "pfactor/linalg.hpp"
#include "pfactor/projection.hpp"

namespace pfactor {

namespace {

constexpr std::array<std::string_view, kIdentityCount> kNames = {
    "zero-conventions",       "vanishes-on-perp-vector", "one-when-contained",   "image-reduction",
    "equal-dim-symmetry",     "line-bridge",             "intersection-reduction", "principal-split",
    "orthogonal-split",       "nested-target",           "principal-bound",      "target-monotone",
    "source-monotone",        "blade-projection",        "interior-product",     "coordinate-sum",
    "complement-duality",     "complement-both",         "complement-principal", "zeta-bounds",
    "complement-exterior",    "complement-gram",
};

// Real factors enter sums squared, complex ones as they are.
template <Scalar T>
double pyth(double x) {
    if constexpr (is_complex_v<T>) {
        return x;
    } else {
        return x * x;
    }
}

template <Scalar T>
double pi(const Subspace<T>& a, const Subspace<T>& b) {
    return projection_factor(a, b);
}

template <Scalar T>
Subspace<T> random_subspace_conditioned(const Matrix<T>& fixed, std::size_t extra, Rng& rng) {
    while (true) {
        Matrix<T> m = hcat(fixed, random_matrix<T>(fixed.rows(), extra, rng));
        if (well_conditioned(m)) {
            return Subspace<T>(fixed.rows(), std::move(m));
        }
    }
}

template <Scalar T>
Vector<T> random_vector_in(const Subspace<T>& s, Rng& rng) {
    const Matrix<T>& q = s.orthonormal_basis();
    const Vector<T> c = random_vector<T>(q.cols(), rng);
    return q * std::span<const T>(c);
}

template <Scalar T>
T nonzero_scalar(Rng& rng) {
    while (true) {
        const T c = rng.entry<T>();
        if (std::abs(c) >= 0.1) {
            return c;
        }
    }
}

template <Scalar T>
Subspace<T> line_of(const Vector<T>& x) {
    return Subspace<T>(Matrix<T>::from_columns({x}));
}

}  // namespace

std::string_view identity_name(Identity id) { return kNames.at(static_cast<std::size_t>(id)); }

bool is_inequality(Identity id) {
    return id == Identity::PrincipalBound || id == Identity::TargetMonotone || id == Identity::SourceMonotone ||
           id == Identity::ZetaBounds;
}

bool AppendixReport::all_pass() const {
    return std::all_of(identities.begin(), identities.end(), [](const IdentitySummary& s) { return s.pass; });
}

template <Scalar T>
std::vector<IdentityCheck> verify_appendix_identities(const Subspace<T>& v, const Subspace<T>& w, Rng& rng) {
    if (v.ambient_dim() != w.ambient_dim()) {
        throw DimensionError("verify_appendix_identities: ambient dimensions differ");
    }
    if (v.is_zero() || w.is_zero()) {
        throw DomainError("verify_appendix_identities: V and W must be nonzero");
    }
    const std::size_t n = v.ambient_dim();
    const std::size_t p = v.dim();
    const std::size_t q = w.dim();
    const Subspace<T> zero = Subspace<T>::zero(n);
    const Subspace<T> vp = orthogonal_complement(v);
    const Subspace<T> wp = orthogonal_complement(w);
    const Subspace<T> pv = image(v, w);
    const PrincipalDecomposition<T> pd = principal_decomposition(v, w);
    const double pvw = pi(v, w);
    const double pv_wp = pi(v, wp);

    std::vector<IdentityCheck> out;
    out.reserve(kIdentityCount);
    auto record = [&](Identity id, double r) { out.push_back({id, r}); };

    record(Identity::ZeroConventions,
           std::max({std::abs(pi(zero, zero) - 1.0), std::abs(pi(zero, w) - 1.0), std::abs(pi(v, zero))}));

    if (wp.is_zero()) {
        // W is everything, so V meets W-perp trivially and the factor is 1.
        record(Identity::VanishesOnPerpVector, std::abs(pvw - 1.0));
    } else {
        const Matrix<T> x = Matrix<T>::from_columns({random_vector_in(wp, rng)});
        record(Identity::VanishesOnPerpVector, pi(random_subspace_conditioned(x, p - 1, rng), w));
    }

    record(Identity::OneWhenContained, std::abs(pi(random_subspace_of(w, rng.between(1, q), rng), w) - 1.0));

    record(Identity::ImageReduction, std::abs(pvw - pi(v, pv)));

    {
        const Subspace<T> w2 = random_subspace<T>(n, p, rng);
        double r = std::abs(pi(v, w2) - pi(w2, v));
        if (p == q) {
            r = std::max(r, std::abs(pvw - pi(w, v)));
        }
        record(Identity::EqualDimSymmetry, r);
    }

    {
        const Vector<T> x = random_vector<T>(n, rng);
        const T c = nonzero_scalar<T>(rng);
        Vector<T> u = x;
        for (T& e : u) {
            e *= c;
        }
        const Subspace<double> real_w = realify(w);
        const double rx = pi(real_line<T>(x), real_w);
        double r = std::abs(pi(real_line<T>(u), real_w) - rx);
        if constexpr (is_complex_v<T>) {
            r = std::max(r, std::abs(pi(line_of(x), w) - rx * rx));
        } else {
            r = std::max(r, std::abs(pi(line_of(x), w) - rx));
        }
        record(Identity::LineBridge, r);
    }

    {
        const std::size_t kmin = std::max<std::size_t>(1, p + q > n ? p + q - n : 0);
        const std::size_t k = rng.between(kmin, std::min(p, q));
        const Subspace<T> z = random_subspace<T>(n, k, rng);
        const Subspace<T> v7 = random_subspace_conditioned(z.orthonormal_basis(), p - k, rng);
        const Subspace<T> w7 = random_subspace_conditioned(z.orthonormal_basis(), q - k, rng);
        record(Identity::IntersectionReduction,
               std::abs(pi(v7, w7) - pi(complement_within(v7, z), complement_within(w7, z))));
    }

    {
        const std::vector<std::size_t> sizes = random_composition(p, rng.between(1, p), rng);
        double prod = 1.0;
        std::size_t first = 0;
        for (std::size_t s : sizes) {
            prod *= pi(Subspace<T>::from_orthonormal(pd.v_basis.column_block(first, s)), w);
            first += s;
        }
        record(Identity::PrincipalSplit, std::abs(prod - pvw));
    }

    {
        const Subspace<T> a = random_subspace_of(v, rng.between(1, p), rng);
        const Subspace<T> b = complement_within(v, a);
        const double rhs = pi(a, w) * pi(b, w) * pi(image(a, w), orthogonal_complement(image(b, w)));
        record(Identity::OrthogonalSplit, std::abs(pvw - rhs));
    }

    {
        const Subspace<T> u = random_subspace_of(w, rng.between(1, q), rng);
        record(Identity::NestedTarget, std::abs(pi(v, u) - pvw * pi(pv, u)));
    }

    record(Identity::PrincipalBound,
           std::max(0.0, pvw - *std::min_element(pd.pi_principal.begin(), pd.pi_principal.end())));

    {
        const Subspace<T> w1 = random_subspace_of(w, rng.between(1, q), rng);
        double r = std::max(0.0, pi(v, w1) - pvw);
        // Equality case: P(V) inside W' inside W.
        const std::size_t extra = rng.between(0, q - pv.dim());
        const Subspace<T> w2 = extra == 0 ? pv : sum(pv, random_subspace_of(w, extra, rng));
        r = std::max(r, std::abs(pi(v, w2) - pvw));
        record(Identity::TargetMonotone, r);
    }

    {
        const Subspace<T> v1 = random_subspace_of(v, rng.between(1, p), rng);
        double r = std::max(0.0, pvw - pi(v1, w));
        // Equality case: V = V' + Z with Z inside W and orthogonal to V'.
        const std::size_t zd = rng.between(1, std::min(q, n - 1));
        const Subspace<T> z = random_subspace_of(w, zd, rng);
        const Subspace<T> v2 = random_subspace_of(orthogonal_complement(z), rng.between(1, n - zd), rng);
        r = std::max(r, std::abs(pi(sum(v2, z), w) - pi(v2, w)));
        record(Identity::SourceMonotone, r);
    }

    const Blade<T> nu(v.basis());
    const Blade<T> omega(w.basis());
    {
        const double ratio = blade_norm(blade_project(nu, w)) / blade_norm(nu);
        record(Identity::BladeProjection, std::abs(field_power<T>(ratio) - pvw));
    }

    record(Identity::InteriorProduct, std::abs(factor_interior(nu, omega) - pvw));

    {
        const std::size_t r_dim = rng.between(1, p);
        const Subspace<T> u = random_subspace_of(v, r_dim, rng);
        double s = 0.0;
        for (const MultiIndex& idx : combinations(p, r_dim)) {
            Matrix<T> cols(n, r_dim);
            for (std::size_t k = 0; k < r_dim; ++k) {
                std::copy(pd.v_basis.col(idx[k]).begin(), pd.v_basis.col(idx[k]).end(), cols.col(k).begin());
            }
            const Subspace<T> vi = Subspace<T>::from_orthonormal(std::move(cols));
            s += pyth<T>(pi(u, vi)) * pyth<T>(pi(vi, w));
        }
        record(Identity::CoordinateSum, std::abs(pyth<T>(pi(u, w)) - s));
    }

    record(Identity::ComplementDuality, std::abs(pv_wp - pi(w, vp)));
    record(Identity::ComplementBoth, std::abs(pi(vp, wp) - pi(w, v)));

    const ComplementFactors cf = complement_factor(v, w);
    record(Identity::ComplementPrincipal, std::abs(cf.principal - pv_wp));

    {
        auto zeta = [&](const Subspace<T>& a) { return pyth<T>(pi(a, w)) + pyth<T>(pi(a, wp)); };
        const double z = zeta(v);
        double r = std::max({0.0, z - 1.0, -z});
        r = std::max(r, std::abs(zeta(random_subspace<T>(n, 1, rng)) - 1.0));
        r = std::max(r, std::abs(zeta(random_subspace_of(w, rng.between(1, q), rng)) - 1.0));
        if (!wp.is_zero()) {
            r = std::max(r, std::abs(zeta(random_subspace_of(wp, rng.between(1, wp.dim()), rng)) - 1.0));
            const Matrix<T> both = Matrix<T>::from_columns({random_vector_in(w, rng), random_vector_in(wp, rng)});
            r = std::max(r, std::abs(zeta(Subspace<T>(n, both))));
        }
        record(Identity::ZetaBounds, r);
    }

    record(Identity::ComplementExterior, std::abs(cf.exterior - pv_wp));
    record(Identity::ComplementGram,
           std::max(std::abs(cf.orthonormal_det - pv_wp), std::abs(cf.general_det - pv_wp)));
    return out;
}

template <Scalar T>
AppendixReport run_appendix_suite(std::size_t trials, std::uint64_t seed, std::size_t dims_up_to, double tol,
                                  Execution exec) {
    if (dims_up_to < 2) {
        throw DomainError("appendix suite needs dims_up_to >= 2");
    }
    AppendixReport report{trials, seed, dims_up_to, tol, {}};
    if (trials == 0) {
        return report;
    }
    std::vector<double> residuals(trials * kIdentityCount, 0.0);
    std::vector<std::exception_ptr> errors(trials);
    auto run = [&](std::size_t t) {
        try {
            Rng rng = Rng::stream(seed, t);
            const std::size_t n = rng.between(2, dims_up_to);
            // Mostly proper subspaces, with the whole space now and then.
            auto pick = [&] { return rng.uniform() < 0.85 ? rng.between(1, n - 1) : rng.between(1, n); };
            const std::size_t p = pick();
            const std::size_t q = pick();
            const Subspace<T> v = random_subspace<T>(n, p, rng);
            const Subspace<T> w = random_subspace<T>(n, q, rng);
            const std::vector<IdentityCheck> checks = verify_appendix_identities(v, w, rng);
            for (std::size_t k = 0; k < kIdentityCount; ++k) {
                residuals[t * kIdentityCount + k] = checks[k].residual;
            }
        } catch (...) {
            errors[t] = std::current_exception();
        }
    };
    if (exec == Execution::Parallel) {
        const auto count = static_cast<std::ptrdiff_t>(trials);
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t t = 0; t < count; ++t) {
            run(static_cast<std::size_t>(t));
        }
    } else {
        for (std::size_t t = 0; t < trials; ++t) {
            run(t);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    for (std::size_t k = 0; k < kIdentityCount; ++k) {
        IdentitySummary s{static_cast<Identity>(k), 0.0, 0, true};
        for (std::size_t t = 0; t < trials; ++t) {
            const double r = residuals[t * kIdentityCount + k];
            if (std::isnan(r) || r > s.worst_residual) {
                s.worst_residual = r;
                s.worst_trial = t;
                if (std::isnan(r)) {
                    break;
                }
            }
        }
        s.pass = s.worst_residual <= tol;
        report.identities.push_back(s);
    }
    return report;
}

#define PFACTOR_INSTANTIATE(T)                                                                               \
    template std::vector<IdentityCheck> verify_appendix_identities<T>(const Subspace<T>&, const Subspace<T>&, \
                                                                       Rng&);                                \
    template AppendixReport run_appendix_suite<T>(std::size_t, std::uint64_t, std::size_t, double, Execution);

PFACTOR_INSTANTIATE(double)
PFACTOR_INSTANTIATE(Complex)

#undef PFACTOR_INSTANTIATE

}  // namespace pfactor
