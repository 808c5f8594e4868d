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

#include "pfactor/measure.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>

#include "pfactor/errors.hpp"
#include "pfactor/linalg.hpp"
#include "pfactor/random.hpp"

namespace pfactor {

namespace {

constexpr std::size_t kBlock = 8192;
constexpr std::size_t kMaxPullbackDim = 16;

template <Scalar T>
std::size_t real_dim(const Subspace<T>& s) {
    return s.dim() * (is_complex_v<T> ? 2 : 1);
}

// Hit count of `inside` over `samples` uniform points of `box`, drawn in
// fixed blocks with one random stream per block.
template <typename Pred>
std::uint64_t count_hits(const Box& box, std::size_t samples, std::uint64_t seed, const Pred& inside,
                         Execution exec) {
    const std::size_t blocks = (samples + kBlock - 1) / kBlock;
    const std::size_t d = box.dim();
    std::vector<std::uint64_t> hits(blocks, 0);
    auto run_block = [&](std::size_t b) {
        Rng rng = Rng::stream(seed, b);
        std::vector<double> x(d);
        const std::size_t end = std::min(samples, (b + 1) * kBlock);
        std::uint64_t h = 0;
        for (std::size_t s = b * kBlock; s < end; ++s) {
            for (std::size_t i = 0; i < d; ++i) {
                x[i] = rng.uniform(box.lo[i], box.hi[i]);
            }
            h += inside(std::span<const double>(x)) ? 1 : 0;
        }
        hits[b] = h;
    };
    if (exec == Execution::Parallel) {
        const auto nblocks = static_cast<std::ptrdiff_t>(blocks);
#pragma omp parallel for schedule(static)
        for (std::ptrdiff_t b = 0; b < nblocks; ++b) {
            run_block(static_cast<std::size_t>(b));
        }
    } else {
        for (std::size_t b = 0; b < blocks; ++b) {
            run_block(b);
        }
    }
    std::uint64_t total = 0;
    for (std::uint64_t h : hits) {
        total += h;
    }
    return total;
}

Estimate hit_estimate(double volume, std::uint64_t hits, std::size_t samples, std::uint64_t seed) {
    const double f = static_cast<double>(hits) / static_cast<double>(samples);
    return {volume * f, volume * std::sqrt(f * (1.0 - f) / static_cast<double>(samples)), seed, samples};
}

// The projection restricted to the carrier, in orthonormal real coordinates
// of the carrier and of its image.
struct RestrictedMap {
    Matrix<double> l;
    Matrix<double> l_inv;
    double jacobian = 0.0;
    bool degenerate = true;
};

template <Scalar T>
RestrictedMap restricted_map(const Subspace<T>& carrier, const Subspace<T>& w) {
    if (carrier.ambient_dim() != w.ambient_dim()) {
        throw DimensionError("projected measure: ambient dimensions differ");
    }
    const Matrix<double> e = carrier_frame(carrier);
    const Matrix<double> pe = project_columns(e, realify(w));
    RestrictedMap out;
    const Svd<double> s = svd(pe);
    out.jacobian = 1.0;
    for (double x : s.sigma) {
        out.jacobian *= x;
    }
    out.degenerate = s.sigma.empty() || s.sigma.back() <= 1e-12;
    if (out.degenerate) {
        out.jacobian = 0.0;
        return out;
    }
    const Matrix<double> f = orthonormalize(pe);
    out.l = cross_gram(f, pe);
    out.l_inv = solve(out.l, Matrix<double>::identity(out.l.rows()));
    return out;
}

// Bounding box of L(box).
Box image_box(const Matrix<double>& l, const Box& box) {
    const std::size_t d = box.dim();
    Box out{std::vector<double>(d), std::vector<double>(d)};
    for (std::size_t i = 0; i < d; ++i) {
        double c = 0.0;
        double h = 0.0;
        for (std::size_t j = 0; j < d; ++j) {
            c += l(i, j) * 0.5 * (box.lo[j] + box.hi[j]);
            h += std::abs(l(i, j)) * 0.5 * (box.hi[j] - box.lo[j]);
        }
        out.lo[i] = c - h;
        out.hi[i] = c + h;
    }
    return out;
}

template <Scalar T>
void check_set(const SampledSet<T>& s) {
    if (s.box.dim() != real_dim(s.carrier) || s.box.hi.size() != s.box.dim()) {
        throw DimensionError("sampled set: box dimension differs from the carrier's real dimension");
    }
    if (!(s.box.volume() > 0.0)) {
        throw DomainError("sampled set: zero-volume bounding box");
    }
    if (s.sample_count < kMinSamples) {
        throw DomainError("sampled set: fewer than 1000 samples");
    }
}

bool in_triangle(double x, double y, const std::array<double, 6>& t) {
    auto edge = [&](int a, int b) {
        return (t[2 * b] - t[2 * a]) * (y - t[2 * a + 1]) - (t[2 * b + 1] - t[2 * a + 1]) * (x - t[2 * a]);
    };
    const double e0 = edge(0, 1);
    const double e1 = edge(1, 2);
    const double e2 = edge(2, 0);
    return (e0 >= 0 && e1 >= 0 && e2 >= 0) || (e0 <= 0 && e1 <= 0 && e2 <= 0);
}

std::array<double, 6> triangle(double radius, double start_deg) {
    std::array<double, 6> t{};
    for (int k = 0; k < 3; ++k) {
        const double a = (start_deg + 120.0 * k) * std::numbers::pi / 180.0;
        t[2 * k] = radius * std::cos(a);
        t[2 * k + 1] = radius * std::sin(a);
    }
    return t;
}

template <Scalar T>
Box cube(const Subspace<T>& carrier, double half) {
    const std::size_t d = real_dim(carrier);
    return {std::vector<double>(d, -half), std::vector<double>(d, half)};
}

template <Scalar T>
void require_plane(const Subspace<T>& carrier) {
    if (real_dim(carrier) != 2) {
        throw DimensionError("planar set needs a carrier of real dimension 2");
    }
}

}  // namespace

double Box::volume() const {
    double v = 1.0;
    for (std::size_t i = 0; i < lo.size(); ++i) {
        v *= hi[i] - lo[i];
    }
    return v;
}

bool Box::contains(std::span<const double> x) const {
    for (std::size_t i = 0; i < lo.size(); ++i) {
        if (x[i] < lo[i] || x[i] > hi[i]) {
            return false;
        }
    }
    return true;
}

template <Scalar T>
double parallelotope_measure(const Parallelotope<T>& p) {
    if (p.edge_count() == 0) {
        return 1.0;
    }
    const Matrix<double> real_edges = realify_columns(p.edges);
    return std::sqrt(std::max(0.0, det(gram(real_edges))));
}

template <Scalar T>
Parallelotope<T> project_parallelotope(const Parallelotope<T>& p, const Subspace<T>& w) {
    return {project_columns(p.edges, w)};
}

Parallelotope<Complex> complex_parallelotope(const Matrix<Complex>& edges) {
    Matrix<Complex> out(edges.rows(), 2 * edges.cols());
    for (std::size_t j = 0; j < edges.cols(); ++j) {
        for (std::size_t i = 0; i < edges.rows(); ++i) {
            out(i, 2 * j) = edges(i, j);
            out(i, 2 * j + 1) = Complex(0.0, 1.0) * edges(i, j);
        }
    }
    return {std::move(out)};
}

template <Scalar T>
Matrix<double> carrier_frame(const Subspace<T>& carrier) {
    if (carrier.is_zero()) {
        return Matrix<double>(carrier.ambient_dim() * (is_complex_v<T> ? 2 : 1), 0);
    }
    return realify(carrier).orthonormal_basis();
}

template <Scalar T>
Estimate monte_carlo_measure(const SampledSet<T>& s, Execution exec) {
    check_set(s);
    const std::uint64_t hits = count_hits(s.box, s.sample_count, s.seed, s.indicator, exec);
    return hit_estimate(s.box.volume(), hits, s.sample_count, s.seed);
}

template <Scalar T>
ProjectedEstimate projected_set_measure(const SampledSet<T>& s, const Subspace<T>& w, Execution exec) {
    check_set(s);
    const RestrictedMap map = restricted_map(s.carrier, w);
    ProjectedEstimate out;
    out.jacobian = map.jacobian;
    out.degenerate = map.degenerate;
    if (map.degenerate) {
        out.estimate = {0.0, 0.0, s.seed, s.sample_count};
        return out;
    }
    const Estimate base = monte_carlo_measure(s, exec);
    out.estimate = {map.jacobian * base.value, map.jacobian * base.std_error, base.seed, base.samples};
    return out;
}

template <Scalar T>
Estimate resampled_projected_measure(const SampledSet<T>& s, const Subspace<T>& w, std::uint64_t seed,
                                     Execution exec) {
    check_set(s);
    const RestrictedMap map = restricted_map(s.carrier, w);
    if (map.degenerate) {
        return {0.0, 0.0, seed, s.sample_count};
    }
    const Box ybox = image_box(map.l, s.box);
    const std::size_t d = ybox.dim();
    if (d > kMaxPullbackDim) {
        throw DomainError("resampled estimator supports carriers of real dimension <= 16");
    }
    auto inside = [&](std::span<const double> y) {
        std::array<double, kMaxPullbackDim> xbuf{};
        const std::span<double> x(xbuf.data(), d);
        for (std::size_t i = 0; i < d; ++i) {
            double acc = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                acc += map.l_inv(i, j) * y[j];
            }
            x[i] = acc;
        }
        return s.box.contains(x) && s.indicator(x);
    };
    const std::uint64_t hits = count_hits(ybox, s.sample_count, seed, inside, exec);
    return hit_estimate(ybox.volume(), hits, s.sample_count, seed);
}

template <Scalar T>
double grid_projected_measure(const SampledSet<T>& s, const Subspace<T>& w, std::size_t cells_per_axis) {
    if (real_dim(s.carrier) > 2 || real_dim(s.carrier) == 0) {
        throw DomainError("grid estimator supports carriers of real dimension 1 or 2");
    }
    if (cells_per_axis == 0) {
        throw DomainError("grid estimator needs at least one cell per axis");
    }
    const RestrictedMap map = restricted_map(s.carrier, w);
    if (map.degenerate) {
        return 0.0;
    }
    const Box ybox = image_box(map.l, s.box);
    const std::size_t d = ybox.dim();
    std::vector<double> step(d);
    double cell = 1.0;
    for (std::size_t i = 0; i < d; ++i) {
        step[i] = (ybox.hi[i] - ybox.lo[i]) / static_cast<double>(cells_per_axis);
        cell *= step[i];
    }
    const std::size_t total = d == 1 ? cells_per_axis : cells_per_axis * cells_per_axis;
    std::uint64_t count = 0;
    std::vector<double> y(d);
    std::vector<double> x(d);
    for (std::size_t c = 0; c < total; ++c) {
        y[0] = ybox.lo[0] + (static_cast<double>(c % cells_per_axis) + 0.5) * step[0];
        if (d == 2) {
            y[1] = ybox.lo[1] + (static_cast<double>(c / cells_per_axis) + 0.5) * step[1];
        }
        for (std::size_t i = 0; i < d; ++i) {
            x[i] = 0.0;
            for (std::size_t j = 0; j < d; ++j) {
                x[i] += map.l_inv(i, j) * y[j];
            }
        }
        if (s.box.contains(x) && s.indicator(x)) {
            ++count;
        }
    }
    return static_cast<double>(count) * cell;
}

template <Scalar T>
SampledSet<T> box_set(const Subspace<T>& carrier, Box box) {
    return {carrier, [](std::span<const double>) { return true; }, std::move(box)};
}

template <Scalar T>
SampledSet<T> ball_set(const Subspace<T>& carrier, double radius) {
    const double r2 = radius * radius;
    auto inside = [r2](std::span<const double> x) {
        double s = 0.0;
        for (double xi : x) {
            s += xi * xi;
        }
        return s <= r2;
    };
    return {carrier, inside, cube(carrier, radius)};
}

template <Scalar T>
SampledSet<T> intervals_set(const Subspace<T>& carrier, std::vector<std::pair<double, double>> intervals) {
    if (real_dim(carrier) != 1) {
        throw DimensionError("interval set needs a carrier of real dimension 1");
    }
    if (intervals.empty()) {
        throw DomainError("interval set needs at least one interval");
    }
    double lo = intervals.front().first;
    double hi = intervals.front().second;
    for (const auto& [a, b] : intervals) {
        lo = std::min(lo, a);
        hi = std::max(hi, b);
    }
    auto inside = [iv = std::move(intervals)](std::span<const double> x) {
        return std::any_of(iv.begin(), iv.end(), [&](const auto& ab) { return x[0] >= ab.first && x[0] <= ab.second; });
    };
    return {carrier, inside, Box{{lo}, {hi}}};
}

template <Scalar T>
SampledSet<T> hexagram_set(const Subspace<T>& carrier, double radius) {
    require_plane(carrier);
    const auto up = triangle(radius, 90.0);
    const auto down = triangle(radius, 270.0);
    auto inside = [up, down](std::span<const double> x) {
        return in_triangle(x[0], x[1], up) || in_triangle(x[0], x[1], down);
    };
    return {carrier, inside, cube(carrier, radius)};
}

template <Scalar T>
SampledSet<T> annulus_set(const Subspace<T>& carrier, double r_in, double r_out) {
    require_plane(carrier);
    const double a = r_in * r_in;
    const double b = r_out * r_out;
    auto inside = [a, b](std::span<const double> x) {
        const double s = x[0] * x[0] + x[1] * x[1];
        return s >= a && s <= b;
    };
    return {carrier, inside, cube(carrier, r_out)};
}

#define PFACTOR_INSTANTIATE(T)                                                                                     \
    template double parallelotope_measure<T>(const Parallelotope<T>&);                                             \
    template Parallelotope<T> project_parallelotope<T>(const Parallelotope<T>&, const Subspace<T>&);               \
    template Matrix<double> carrier_frame<T>(const Subspace<T>&);                                                  \
    template Estimate monte_carlo_measure<T>(const SampledSet<T>&, Execution);                                     \
    template ProjectedEstimate projected_set_measure<T>(const SampledSet<T>&, const Subspace<T>&, Execution);      \
    template Estimate resampled_projected_measure<T>(const SampledSet<T>&, const Subspace<T>&, std::uint64_t,      \
                                                     Execution);                                                   \
    template double grid_projected_measure<T>(const SampledSet<T>&, const Subspace<T>&, std::size_t);              \
    template SampledSet<T> box_set<T>(const Subspace<T>&, Box);                                                    \
    template SampledSet<T> ball_set<T>(const Subspace<T>&, double);                                                \
    template SampledSet<T> intervals_set<T>(const Subspace<T>&, std::vector<std::pair<double, double>>);           \
    template SampledSet<T> hexagram_set<T>(const Subspace<T>&, double);                                            \
    template SampledSet<T> annulus_set<T>(const Subspace<T>&, double, double);

PFACTOR_INSTANTIATE(double)
PFACTOR_INSTANTIATE(Complex)

#undef PFACTOR_INSTANTIATE

}  // namespace pfactor
