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

#include "pfactor/quantum.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pfactor/errors.hpp"
#include "pfactor/projection.hpp"

namespace {

using namespace pfactor;
using namespace testing_support;

Observable spin(std::size_t n) {
    std::vector<Subspace<Complex>> parts;
    std::vector<double> eigenvalues;
    for (std::size_t i = 0; i < n; ++i) {
        parts.emplace_back(units<Complex>(n, {i}));
        eigenvalues.push_back(static_cast<double>(i) - 1.0);
    }
    return Observable(OrthogonalPartition<Complex>(std::move(parts)), std::move(eigenvalues));
}

Vector<Complex> scaled(Vector<Complex> v, Complex c) {
    for (Complex& x : v) {
        x *= c;
    }
    return v;
}

TEST(Quantum, StateValidation) {
    EXPECT_THROW(QuantumState(Vector<Complex>{}), DomainError);
    EXPECT_THROW(QuantumState(Vector<Complex>(3, Complex(0))), DomainError);
    EXPECT_EQ(QuantumState(Vector<Complex>{1, 2}).dim(), 2u);
}

TEST(Quantum, ObservableValidation) {
    const OrthogonalPartition<Complex> axes(
        {Subspace<Complex>(units<Complex>(2, {0})), Subspace<Complex>(units<Complex>(2, {1}))});
    EXPECT_THROW(Observable(axes, {1.0}), ValidationError);
    EXPECT_THROW(Observable(axes, {1.0, 1.0}), ValidationError);
    EXPECT_NO_THROW(Observable(axes, {1.0, -1.0}));
}

TEST(Quantum, EigenvectorIsCertain) {
    const Observable obs = spin(3);
    const QuantumState psi(scaled(unit<Complex>(3, 1), Complex(0, 2)));
    const auto dist = born_distribution(psi, obs);
    EXPECT_EQ(dist, (std::vector<double>{0.0, 1.0, 0.0}));
    EXPECT_NEAR(total_probability(psi, obs), 1.0, 1e-15);
}

TEST(Quantum, EqualSuperposition) {
    const Observable obs = spin(2);
    const double h = std::numbers::sqrt2 / 2;
    const QuantumState psi(Vector<Complex>{h, h});
    EXPECT_NEAR(born_probability(psi, obs, 0), 0.5, 1e-15);
    EXPECT_NEAR(born_probability(psi, obs, 1), 0.5, 1e-15);
}

TEST(Quantum, AmplitudesSquared) {
    const Observable obs = spin(2);
    Rng rng = rng_for(401);
    for (int t = 0; t < 50; ++t) {
        const double r = rng.uniform();
        const Complex c1 = std::polar(std::sqrt(r), rng.uniform(0, 6.3));
        const Complex c2 = std::polar(std::sqrt(1 - r), rng.uniform(0, 6.3));
        const QuantumState psi(Vector<Complex>{c1, c2});
        EXPECT_NEAR(born_probability(psi, obs, 0), std::norm(c1), 1e-14);
        EXPECT_NEAR(born_probability(psi, obs, 1), std::norm(c2), 1e-14);
    }
}

TEST(Quantum, IndexAndDimensionErrors) {
    const Observable obs = spin(2);
    const QuantumState psi(Vector<Complex>{1, 0});
    EXPECT_THROW(born_probability(psi, obs, 2), DomainError);
    EXPECT_THROW(born_probability(QuantumState(Vector<Complex>{1, 0, 0}), obs, 0), DimensionError);
}

TEST(Quantum, TotalProbabilityOnRandomPartitions) {
    Rng rng = rng_for(402);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = rng.between(2, 8);
        const std::size_t k = rng.between(1, n);
        const auto parts = random_partition<Complex>(n, random_composition(n, k, rng), rng);
        std::vector<double> eigenvalues;
        for (std::size_t i = 0; i < k; ++i) {
            eigenvalues.push_back(static_cast<double>(i));
        }
        const Observable obs(parts, eigenvalues);
        const auto psi = random_vector<Complex>(n, rng);
        const QuantumState state(psi);
        EXPECT_NEAR(total_probability(state, obs), 1.0, kTotalProbabilityTolerance);
        for (std::size_t i = 0; i < k; ++i) {
            const double want = std::real(oracle::dot(oracle::project(psi, oracle::columns(parts.parts()[i].basis())),
                                                      oracle::project(psi, oracle::columns(parts.parts()[i].basis())))) /
                                std::real(oracle::dot(psi, psi));
            EXPECT_NEAR(born_probability(state, obs, i), want, 1e-12);
        }
    }
}

TEST(Quantum, RandomStateInCFourThreeParts) {
    Rng rng = rng_for(403);
    const Observable obs(random_partition<Complex>(4, {1, 1, 2}, rng), {-1.0, 0.0, 2.5});
    const auto psi = random_vector<Complex>(4, rng);
    const double base = total_probability(QuantumState(psi), obs);
    EXPECT_NEAR(base, 1.0, 1e-10);
    EXPECT_NEAR(total_probability(QuantumState(scaled(psi, 7.0)), obs), base, 1e-15);
}

TEST(Quantum, RayInvariance) {
    Rng rng = rng_for(404);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = rng.between(2, 6);
        const Observable obs(random_partition<Complex>(n, random_composition(n, 2, rng), rng), {0.0, 1.0});
        const auto psi = random_vector<Complex>(n, rng);
        Complex c = rng.entry<Complex>();
        c *= rng.uniform(0.01, 100.0) / std::abs(c);
        for (std::size_t i = 0; i < 2; ++i) {
            EXPECT_NEAR(born_probability(QuantumState(psi), obs, i), born_probability(QuantumState(scaled(psi, c)), obs, i),
                        1e-12);
        }
    }
}

TEST(Quantum, FidelityExamples) {
    const Vector<Complex> psi{1, 0};
    const double h = std::numbers::sqrt2 / 2;
    const Vector<Complex> phi{h, h};
    EXPECT_NEAR(fidelity(psi, phi), 0.5, 1e-15);
    EXPECT_NEAR(bures_angle(psi, phi), std::numbers::pi / 4, 1e-15);
    EXPECT_NEAR(fidelity(psi, psi), 1.0, 1e-15);
    EXPECT_NEAR(bures_angle(psi, scaled(psi, Complex(0, 3))), 0.0, 1e-7);
    const Vector<Complex> orth{0, Complex(0, 1)};
    EXPECT_EQ(fidelity(psi, orth), 0.0);
    EXPECT_NEAR(bures_angle(psi, orth), std::numbers::pi / 2, 1e-15);
    EXPECT_THROW(fidelity(psi, Vector<Complex>{0, 0}), DomainError);
}

TEST(Quantum, FidelityIsSymmetricAndMatchesLineFactor) {
    Rng rng = rng_for(405);
    for (int t = 0; t < 100; ++t) {
        const std::size_t n = rng.between(1, 6);
        const auto psi = random_vector<Complex>(n, rng);
        const auto phi = random_vector<Complex>(n, rng);
        const double f = fidelity(psi, phi);
        EXPECT_NEAR(f, fidelity(phi, psi), 1e-15);
        EXPECT_GE(f, 0.0);
        EXPECT_LE(f, 1.0);
        const Subspace<Complex> line(Matrix<Complex>::from_columns({phi}));
        EXPECT_NEAR(f, line_factor<Complex>(psi, line, LineMode::ComplexLine), 1e-12);
        EXPECT_NEAR(fidelity(QuantumState(psi), QuantumState(phi)), f, 0.0);
        const double angle = bures_angle(psi, phi);
        EXPECT_NEAR(std::cos(angle) * std::cos(angle), f, 1e-12);
        EXPECT_NEAR(angle, hermitian_angle<Complex>(psi, phi), 1e-7);
    }
}

}  // namespace
