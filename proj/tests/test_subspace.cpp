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

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pfactor/errors.hpp"

namespace {

using namespace pfactor;
using namespace testing_support;

template <typename T>
class SubspaceTest : public ::testing::Test {};
TYPED_TEST_SUITE(SubspaceTest, Fields, FieldNames);

TYPED_TEST(SubspaceTest, ZeroAndWhole) {
    using T = TypeParam;
    const auto z = Subspace<T>::zero(4);
    EXPECT_TRUE(z.is_zero());
    EXPECT_EQ(z.ambient_dim(), 4u);
    EXPECT_EQ(z.orthonormal_basis().cols(), 0u);
    const auto x = Subspace<T>::whole(4);
    EXPECT_EQ(x.dim(), 4u);
    EXPECT_EQ(orthogonal_complement(x).dim(), 0u);
    EXPECT_EQ(orthogonal_complement(z).dim(), 4u);
}

TYPED_TEST(SubspaceTest, DependentBasisRejected) {
    using T = TypeParam;
    const Subspace<T> s(Matrix<T>::from_columns({unit<T>(3, 1), unit<T>(3, 1)}));
    EXPECT_THROW((void)s.orthonormal_basis(), DependentBasisError);
    EXPECT_EQ(Subspace<T>::span_of(s.basis()).dim(), 1u);
}

TYPED_TEST(SubspaceTest, ProjectionMatchesNormalEquations) {
    using T = TypeParam;
    Rng rng = rng_for(20);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = rng.between(2, 8);
        const Subspace<T> w = random_subspace<T>(n, rng.between(1, n), rng);
        const Vector<T> x = random_vector<T>(n, rng);
        const Vector<T> p = project<T>(x, w);
        const Vector<T> ref = oracle::project(x, oracle::columns(w.basis()));
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LT(std::abs(p[i] - ref[i]), 1e-11);
        }
        // idempotent
        const Vector<T> pp = project<T>(p, w);
        for (std::size_t i = 0; i < n; ++i) {
            EXPECT_LT(std::abs(pp[i] - p[i]), 1e-13);
        }
    }
}

TYPED_TEST(SubspaceTest, ComplementIsOrthogonalAndFills) {
    using T = TypeParam;
    Rng rng = rng_for(21);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = rng.between(1, 8);
        const Subspace<T> w = random_subspace<T>(n, rng.between(0, n), rng);
        const Subspace<T> c = orthogonal_complement(w);
        EXPECT_EQ(c.dim() + w.dim(), n);
        if (!c.is_zero() && !w.is_zero()) {
            const Matrix<T> g = cross_gram(c.orthonormal_basis(), w.orthonormal_basis());
            EXPECT_LT(max_abs_diff(g, Matrix<T>(g.rows(), g.cols())), 1e-13);
        }
    }
}

TYPED_TEST(SubspaceTest, ImageAndComplementWithin) {
    using T = TypeParam;
    Rng rng = rng_for(22);
    const Subspace<T> w = random_subspace<T>(6, 3, rng);
    const Subspace<T> v = random_subspace<T>(6, 2, rng);
    EXPECT_EQ(image(v, w).dim(), 2u);
    EXPECT_EQ(image(v, orthogonal_complement(v)).dim(), 0u);
    // a subspace of v leaves a complement of the right dimension inside v
    const Subspace<T> a = random_subspace_of(v, 1, rng);
    const Subspace<T> b = complement_within(v, a);
    EXPECT_EQ(b.dim(), 1u);
    EXPECT_LT(std::abs(inner<T>(a.orthonormal_basis().col(0), b.orthonormal_basis().col(0))), 1e-13);
    EXPECT_EQ(complement_within(v, v).dim(), 0u);
    EXPECT_EQ(sum(a, b).dim(), 2u);
    EXPECT_EQ(sum(v, w).dim(), 5u);
}

TEST(Subspace, RealifyDoublesDimension) {
    Rng rng = rng_for(23);
    const Subspace<Complex> v = random_subspace<Complex>(4, 2, rng);
    const Subspace<double> r = realify(v);
    EXPECT_EQ(r.ambient_dim(), 8u);
    EXPECT_EQ(r.dim(), 4u);
    // Re<x, y> is the real dot product of the realified vectors
    const Vector<Complex> x = random_vector<Complex>(4, rng);
    const Vector<Complex> y = random_vector<Complex>(4, rng);
    const Vector<double> rx = realify(std::span<const Complex>(x));
    const Vector<double> ry = realify(std::span<const Complex>(y));
    EXPECT_NEAR(re_inner<Complex>(x, y), oracle::dot(rx, ry), 1e-14);
}

TEST(Subspace, AmbientMismatch) {
    EXPECT_THROW((void)image(Subspace<double>::whole(3), Subspace<double>::whole(4)), DimensionError);
    EXPECT_THROW((void)sum(Subspace<double>::whole(3), Subspace<double>::whole(2)), DimensionError);
}

}  // namespace
