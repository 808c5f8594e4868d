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

#include "pfactor/pythagoras.hpp"

#include <cmath>
#include <exception>

#include "pfactor/errors.hpp"
#include "pfactor/linalg.hpp"
#include "pfactor/projection.hpp"

namespace pfactor {

namespace {

// Pythagorean sums square real factors and add complex ones as they are.
template <Scalar T>
double pythagorean_power(double x) {
    if constexpr (is_complex_v<T>) {
        return x;
    } else {
        return x * x;
    }
}

template <Scalar T>
std::size_t real_rank(const Matrix<T>& edges) {
    return Subspace<double>::span_of(realify_columns(edges)).dim();
}

void finish(SumReport& r, double scale) {
    r.residual = std::abs(r.sum - r.target) / scale;
    r.pass = r.residual <= r.tolerance;
}

}  // namespace

template <Scalar T>
OrthogonalPartition<T>::OrthogonalPartition(std::vector<Subspace<T>> parts, double tol) : parts_(std::move(parts)) {
    if (parts_.empty()) {
        throw ValidationError("orthogonal partition has no parts");
    }
    const std::size_t n = parts_.front().ambient_dim();
    std::size_t total = 0;
    for (const auto& p : parts_) {
        if (p.ambient_dim() != n) {
            throw ValidationError("partition parts live in different ambient dimensions");
        }
        total += p.dim();
    }
    if (total != n) {
        throw ValidationError("partition dimensions do not add up to the ambient dimension");
    }
    for (std::size_t a = 0; a < parts_.size(); ++a) {
        for (std::size_t b = a + 1; b < parts_.size(); ++b) {
            if (parts_[a].is_zero() || parts_[b].is_zero()) {
                continue;
            }
            const Matrix<T> c = cross_gram(parts_[a].orthonormal_basis(), parts_[b].orthonormal_basis());
            for (const T& x : c.data()) {
                if (std::abs(x) > tol) {
                    throw ValidationError("partition parts are not mutually orthogonal");
                }
            }
        }
    }
}

template <Scalar T>
OrthogonalPartition<T> random_partition(std::size_t n, const std::vector<std::size_t>& dims, Rng& rng) {
    const Matrix<T> u = random_unitary<T>(n, rng);
    std::vector<Subspace<T>> parts;
    std::size_t first = 0;
    for (std::size_t d : dims) {
        if (first + d > n) {
            throw DimensionError("random_partition: dimensions exceed n");
        }
        parts.push_back(d == 0 ? Subspace<T>::zero(n) : Subspace<T>::from_orthonormal(u.column_block(first, d)));
        first += d;
    }
    return OrthogonalPartition<T>(std::move(parts));
}

template <Scalar T>
CoordinateFamily<T>::CoordinateFamily(const Matrix<T>& basis, std::size_t q) : basis_(basis), q_(q) {
    const std::size_t n = basis_.rows();
    if (basis_.cols() != n || n == 0) {
        throw ValidationError("coordinate basis must be square and nonempty");
    }
    if (q_ < 1 || q_ > n) {
        throw DomainError("coordinate subspace dimension q must satisfy 1 <= q <= n");
    }
    for (std::size_t j = 0; j < n; ++j) {
        const double nj = norm<T>(basis_.col(j));
        if (nj == 0.0) {
            throw ValidationError("coordinate basis has a zero vector");
        }
        for (T& x : basis_.col(j)) {
            x /= nj;
        }
    }
    const Matrix<T> g = gram(basis_);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (std::abs(g(i, j)) > kPartitionTolerance) {
                throw ValidationError("coordinate basis is not orthogonal");
            }
        }
    }
    indices_ = combinations(n, q_);
    members_.reserve(indices_.size());
    for (const MultiIndex& idx : indices_) {
        Matrix<T> m(n, q_);
        for (std::size_t k = 0; k < q_; ++k) {
            std::copy(basis_.col(idx[k]).begin(), basis_.col(idx[k]).end(), m.col(k).begin());
        }
        members_.push_back(Subspace<T>::from_orthonormal(std::move(m)));
    }
}

template <Scalar T>
std::vector<double> coordinate_terms(const Subspace<T>& v, const CoordinateFamily<T>& family, TermDirection dir,
                                     Execution exec) {
    if (v.ambient_dim() != family.ambient_dim()) {
        throw DimensionError("coordinate_terms: ambient dimensions differ");
    }
    if (!v.is_zero()) {
        (void)v.orthonormal_basis();
    }
    const auto& members = family.members();
    std::vector<double> out(members.size());
    std::vector<std::exception_ptr> errors(members.size());
    auto term = [&](std::size_t i) {
        try {
            out[i] = dir == TermDirection::VOntoMember ? projection_factor(v, members[i])
                                                       : projection_factor(members[i], v);
        } catch (...) {
            errors[i] = std::current_exception();
        }
    };
    if (exec == Execution::Parallel) {
        const auto count = static_cast<std::ptrdiff_t>(members.size());
#pragma omp parallel for schedule(dynamic)
        for (std::ptrdiff_t i = 0; i < count; ++i) {
            term(static_cast<std::size_t>(i));
        }
    } else {
        for (std::size_t i = 0; i < members.size(); ++i) {
            term(i);
        }
    }
    for (const auto& e : errors) {
        if (e) {
            std::rethrow_exception(e);
        }
    }
    return out;
}

template <Scalar T>
SumReport verify_line_partition(const Subspace<T>& line, const OrthogonalPartition<T>& partition, double tol) {
    if (line.dim() != 1) {
        throw DomainError("verify_line_partition: L must be one-dimensional");
    }
    if (line.ambient_dim() != partition.ambient_dim()) {
        throw DimensionError("verify_line_partition: ambient dimensions differ");
    }
    SumReport r{"line-partition", {}, 0.0, 1.0, 0.0, tol, false, std::nullopt};
    for (std::size_t j = 0; j < partition.size(); ++j) {
        const double pi = projection_factor(line, partition.parts()[j]);
        r.terms.push_back({"V" + std::to_string(j + 1), pi});
        r.sum += pythagorean_power<T>(pi);
    }
    finish(r, 1.0);
    return r;
}

template <Scalar T>
SumReport verify_measure_line(const Parallelotope<T>& s, const OrthogonalPartition<T>& partition, double tol) {
    if (s.ambient_dim() != partition.ambient_dim()) {
        throw DimensionError("verify_measure_line: ambient dimensions differ");
    }
    const Subspace<T> span = Subspace<T>::span_of(s.edges);
    if (span.dim() > 1) {
        throw ValidationError("verify_measure_line: the set is not carried by a line");
    }
    SumReport r{"measure-line", {}, 0.0, 0.0, 0.0, tol, false, std::nullopt};
    const std::size_t line_real_dim = is_complex_v<T> ? 2 : 1;
    if (span.dim() == 0 || real_rank(s.edges) < line_real_dim || s.edge_count() != line_real_dim) {
        r.pass = true;  // |S| = 0: nothing to verify
        return r;
    }
    const double measure = parallelotope_measure(s);
    r.target = pythagorean_power<T>(measure);
    for (std::size_t j = 0; j < partition.size(); ++j) {
        const double mj = parallelotope_measure(project_parallelotope(s, partition.parts()[j]));
        r.terms.push_back({"S" + std::to_string(j + 1), mj});
        r.sum += pythagorean_power<T>(mj);
    }
    finish(r, r.target);
    return r;
}

template <Scalar T>
SumReport verify_measure_line(const SampledSet<T>& s, const OrthogonalPartition<T>& partition, Execution exec) {
    if (s.carrier.dim() != 1) {
        throw DomainError("verify_measure_line: the set must lie on a line");
    }
    if (s.carrier.ambient_dim() != partition.ambient_dim()) {
        throw DimensionError("verify_measure_line: ambient dimensions differ");
    }
    SumReport r{"measure-line-sampled", {}, 0.0, 0.0, 0.0, 0.0, false, std::nullopt};
    const Estimate base = monte_carlo_measure(s, exec);
    r.target = pythagorean_power<T>(base.value);
    double var_target = is_complex_v<T> ? base.std_error * base.std_error
                                        : std::pow(2.0 * base.value * base.std_error, 2);
    double var_sum = 0.0;
    for (std::size_t j = 0; j < partition.size(); ++j) {
        // Pushforward of the same samples as |S|, so the errors move together.
        const Estimate e = projected_set_measure(s, partition.parts()[j], exec).estimate;
        r.terms.push_back({"S" + std::to_string(j + 1), e.value});
        r.sum += pythagorean_power<T>(e.value);
        var_sum += is_complex_v<T> ? e.std_error * e.std_error : std::pow(2.0 * e.value * e.std_error, 2);
    }
    r.std_error = std::sqrt(var_target + var_sum);
    r.tolerance = std::max(kSampledSigmas * *r.std_error, 1e-12 * r.target);
    finish(r, 1.0);
    return r;
}

template <Scalar T>
SumReport verify_subspace_coordinates(const Subspace<T>& v, const CoordinateFamily<T>& family, double tol,
                                      Execution exec) {
    if (v.dim() != family.q()) {
        throw DimensionError("verify_subspace_coordinates: q must equal dim V");
    }
    SumReport r{"subspace-coords", {}, 0.0, 1.0, 0.0, tol, false, std::nullopt};
    const std::vector<double> pis = coordinate_terms(v, family, TermDirection::VOntoMember, exec);
    for (std::size_t i = 0; i < pis.size(); ++i) {
        r.terms.push_back({family.indices()[i].label(), pis[i]});
        r.sum += pythagorean_power<T>(pis[i]);
    }
    finish(r, 1.0);
    return r;
}

template <Scalar T>
SumReport verify_binomial_identity(const Subspace<T>& v, const CoordinateFamily<T>& family, double tol,
                                   Execution exec) {
    const std::size_t n = family.ambient_dim();
    const std::size_t p = v.dim();
    const std::size_t q = family.q();
    SumReport r{"binomial", {}, 0.0, 0.0, 0.0, tol, false, std::nullopt};
    TermDirection dir = TermDirection::VOntoMember;
    if (p <= q) {
        r.target = binomial(n - p, n - q);
    } else {
        r.target = binomial(p, q);
        dir = TermDirection::MemberOntoV;
    }
    const std::vector<double> pis = coordinate_terms(v, family, dir, exec);
    for (std::size_t i = 0; i < pis.size(); ++i) {
        r.terms.push_back({family.indices()[i].label(), pis[i]});
        r.sum += pythagorean_power<T>(pis[i]);
    }
    finish(r, 1.0);
    return r;
}

template <Scalar T>
SumReport verify_measure_subspace(const Parallelotope<T>& s, const CoordinateFamily<T>& family, double tol) {
    if (s.ambient_dim() != family.ambient_dim()) {
        throw DimensionError("verify_measure_subspace: ambient dimensions differ");
    }
    const std::size_t n = family.ambient_dim();
    const std::size_t p = Subspace<T>::span_of(s.edges).dim();
    const std::size_t q = family.q();
    if (q < p) {
        throw DomainError("verify_measure_subspace: needs q >= dim V");
    }
    SumReport r{"measure-subspace", {}, 0.0, 0.0, 0.0, tol, false, std::nullopt};
    const std::size_t full_real_dim = p * (is_complex_v<T> ? 2 : 1);
    if (p == 0 || s.edge_count() != full_real_dim || real_rank(s.edges) < full_real_dim) {
        r.pass = true;  // |S| = 0
        return r;
    }
    const double c = binomial(n - p, n - q);
    r.target = pythagorean_power<T>(parallelotope_measure(s));
    for (std::size_t i = 0; i < family.members().size(); ++i) {
        const double mi = parallelotope_measure(project_parallelotope(s, family.members()[i]));
        r.terms.push_back({family.indices()[i].label(), mi});
        r.sum += pythagorean_power<T>(mi);
    }
    r.sum /= c;
    finish(r, r.target);
    return r;
}

template <Scalar T>
SumReport verify_measure_subspace(const SampledSet<T>& s, const CoordinateFamily<T>& family, Execution exec) {
    if (s.carrier.ambient_dim() != family.ambient_dim()) {
        throw DimensionError("verify_measure_subspace: ambient dimensions differ");
    }
    const std::size_t n = family.ambient_dim();
    const std::size_t p = s.carrier.dim();
    const std::size_t q = family.q();
    if (q < p) {
        throw DomainError("verify_measure_subspace: needs q >= dim V");
    }
    const double c = binomial(n - p, n - q);
    SumReport r{"measure-subspace-sampled", {}, 0.0, 0.0, 0.0, 0.0, false, std::nullopt};
    const Estimate base = monte_carlo_measure(s, exec);
    r.target = pythagorean_power<T>(base.value);
    const double var_target = is_complex_v<T> ? base.std_error * base.std_error
                                              : std::pow(2.0 * base.value * base.std_error, 2);
    double var_sum = 0.0;
    for (std::size_t i = 0; i < family.members().size(); ++i) {
        const Estimate e = projected_set_measure(s, family.members()[i], exec).estimate;
        r.terms.push_back({family.indices()[i].label(), e.value});
        r.sum += pythagorean_power<T>(e.value);
        var_sum += is_complex_v<T> ? e.std_error * e.std_error : std::pow(2.0 * e.value * e.std_error, 2);
    }
    r.sum /= c;
    r.std_error = std::sqrt(var_target + var_sum / (c * c));
    r.tolerance = std::max(kSampledSigmas * *r.std_error, 1e-12 * r.target);
    finish(r, 1.0);
    return r;
}

#define PFACTOR_INSTANTIATE(T)                                                                                      \
    template class OrthogonalPartition<T>;                                                                          \
    template class CoordinateFamily<T>;                                                                             \
    template OrthogonalPartition<T> random_partition<T>(std::size_t, const std::vector<std::size_t>&, Rng&);        \
    template std::vector<double> coordinate_terms<T>(const Subspace<T>&, const CoordinateFamily<T>&, TermDirection, \
                                                     Execution);                                                    \
    template SumReport verify_line_partition<T>(const Subspace<T>&, const OrthogonalPartition<T>&, double);         \
    template SumReport verify_measure_line<T>(const Parallelotope<T>&, const OrthogonalPartition<T>&, double);      \
    template SumReport verify_measure_line<T>(const SampledSet<T>&, const OrthogonalPartition<T>&, Execution);      \
    template SumReport verify_subspace_coordinates<T>(const Subspace<T>&, const CoordinateFamily<T>&, double,       \
                                                      Execution);                                                   \
    template SumReport verify_binomial_identity<T>(const Subspace<T>&, const CoordinateFamily<T>&, double,          \
                                                   Execution);                                                      \
    template SumReport verify_measure_subspace<T>(const Parallelotope<T>&, const CoordinateFamily<T>&, double);     \
    template SumReport verify_measure_subspace<T>(const SampledSet<T>&, const CoordinateFamily<T>&, Execution);

PFACTOR_INSTANTIATE(double)
PFACTOR_INSTANTIATE(Complex)

#undef PFACTOR_INSTANTIATE

}  // namespace pfactor
