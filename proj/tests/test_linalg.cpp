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

#include <gtest/gtest.h>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pfactor/errors.hpp"

namespace {

using namespace pfactor;
using namespace testing_support;

template <typename T>
class LinalgTest : public ::testing::Test {};
TYPED_TEST_SUITE(LinalgTest, Fields, FieldNames);

TEST(Linalg, DetSmallMatrices) {
    EXPECT_DOUBLE_EQ(det(Matrix<double>::from_rows({{1, 2}, {3, 4}})), -2.0);
    EXPECT_DOUBLE_EQ(det(Matrix<double>::from_rows({{2, 0, 0}, {5, 3, 0}, {1, 1, 4}})), 24.0);
    EXPECT_EQ(det(Matrix<double>::from_rows({{1, 2}, {2, 4}})), 0.0);
    EXPECT_DOUBLE_EQ(det(Matrix<double>(0, 0)), 1.0);
    const Complex i(0, 1);
    const Complex d = det(Matrix<Complex>::from_rows({{i, 1.0}, {1.0, i}}));
    EXPECT_NEAR(std::abs(d - Complex(-2, 0)), 0.0, 1e-15);
}

TYPED_TEST(LinalgTest, DetMatchesOracle) {
    using T = TypeParam;
    Rng rng = rng_for(1);
    for (int t = 0; t < 50; ++t) {
        const std::size_t n = rng.between(1, 7);
        const Matrix<T> m = random_matrix<T>(n, n, rng);
        oracle::Dense<T> rows(n, std::vector<T>(n));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                rows[i][j] = m(i, j);
            }
        }
        EXPECT_LT(std::abs(det(m) - oracle::det(rows)), 1e-12);
    }
}

TYPED_TEST(LinalgTest, InnerConjugatesFirstArgument) {
    using T = TypeParam;
    Rng rng = rng_for(2);
    const Vector<T> a = random_vector<T>(5, rng);
    const Vector<T> b = random_vector<T>(5, rng);
    EXPECT_LT(std::abs(inner<T>(a, b) - oracle::dot(a, b)), 1e-14);
    EXPECT_LT(std::abs(inner<T>(a, b) - conj(inner<T>(b, a))), 1e-14);
    EXPECT_NEAR(norm<T>(a) * norm<T>(a), real_part(inner<T>(a, a)), 1e-13);
}

TYPED_TEST(LinalgTest, SolveAndSingular) {
    using T = TypeParam;
    Rng rng = rng_for(3);
    const Matrix<T> a = random_basis<T>(4, 4, rng);
    const Matrix<T> b = random_matrix<T>(4, 2, rng);
    EXPECT_LT(max_abs_diff(a * solve(a, b), b), 1e-11);
    Matrix<T> singular(3, 3);
    singular(0, 0) = T(1);
    EXPECT_THROW(solve(singular, Matrix<T>(3, 1)), DependentBasisError);
}

TYPED_TEST(LinalgTest, OrthonormalizeKeepsSpan) {
    using T = TypeParam;
    Rng rng = rng_for(4);
    for (int t = 0; t < 30; ++t) {
        const std::size_t n = rng.between(2, 8);
        const std::size_t k = rng.between(1, n);
        const Matrix<T> b = random_basis<T>(n, k, rng);
        const Matrix<T> q = orthonormalize(b);
        EXPECT_LT(orthonormality_error(q), 1e-13);
        // every original column is reproduced by its projection on span(q)
        for (std::size_t j = 0; j < k; ++j) {
            const Vector<T> p = project_orthonormal<T>(q, b.col(j));
            for (std::size_t i = 0; i < n; ++i) {
                EXPECT_LT(std::abs(p[i] - b(i, j)), 1e-12);
            }
        }
    }
    EXPECT_THROW(orthonormalize(Matrix<T>::from_columns({unit<T>(3, 0), unit<T>(3, 0)})), DependentBasisError);
}

TYPED_TEST(LinalgTest, OrthonormalSpanRevealsRank) {
    using T = TypeParam;
    Rng rng = rng_for(5);
    const Matrix<T> b = random_basis<T>(6, 3, rng);
    // append two combinations of the first columns
    Matrix<T> m = hcat(b, b * random_matrix<T>(3, 2, rng));
    EXPECT_EQ(orthonormal_span(m).cols(), 3u);
    EXPECT_EQ(orthonormal_span(Matrix<T>(4, 2)).cols(), 0u);
}

TYPED_TEST(LinalgTest, CompleteOrthonormalIsUnitary) {
    using T = TypeParam;
    Rng rng = rng_for(6);
    const Matrix<T> q = orthonormalize(random_basis<T>(7, 3, rng));
    const Matrix<T> c = complete_orthonormal(q);
    ASSERT_EQ(c.cols(), 4u);
    EXPECT_LT(orthonormality_error(hcat(q, c)), 1e-13);
}

TYPED_TEST(LinalgTest, SvdReconstructs) {
    using T = TypeParam;
    Rng rng = rng_for(7);
    for (int t = 0; t < 100; ++t) {
        const std::size_t rows = rng.between(1, 8);
        const std::size_t cols = rng.between(1, 8);
        const Matrix<T> m = random_matrix<T>(rows, cols, rng);
        const Svd<T> s = svd(m);
        ASSERT_EQ(s.sigma.size(), std::min(rows, cols));
        Matrix<T> us = s.u;
        for (std::size_t j = 0; j < s.sigma.size(); ++j) {
            for (std::size_t i = 0; i < rows; ++i) {
                us(i, j) *= s.sigma[j];
            }
        }
        EXPECT_LT(max_abs_diff(us * adjoint(s.v), m), 1e-12);
        EXPECT_LT(orthonormality_error(s.u), 1e-12);
        EXPECT_LT(orthonormality_error(s.v), 1e-12);
        EXPECT_TRUE(std::is_sorted(s.sigma.rbegin(), s.sigma.rend()));
        double sq = 0.0;
        for (double x : s.sigma) {
            EXPECT_GE(x, 0.0);
            sq += x * x;
        }
        EXPECT_NEAR(sq, std::pow(frobenius_norm(m), 2), 1e-11);
    }
}

TYPED_TEST(LinalgTest, SvdSquareProductIsAbsDet) {
    using T = TypeParam;
    Rng rng = rng_for(8);
    for (int t = 0; t < 40; ++t) {
        const std::size_t n = rng.between(1, 6);
        const Matrix<T> m = random_matrix<T>(n, n, rng);
        double prod = 1.0;
        for (double x : svd(m).sigma) {
            prod *= x;
        }
        EXPECT_NEAR(prod, std::abs(det(m)), 1e-12);
    }
}

TYPED_TEST(LinalgTest, SvdRankDeficient) {
    using T = TypeParam;
    Rng rng = rng_for(9);
    const Matrix<T> a = random_matrix<T>(6, 2, rng);
    const Matrix<T> m = a * random_matrix<T>(2, 5, rng);
    const Svd<T> s = svd(m);
    EXPECT_GT(s.sigma[1], 1e-3);
    for (std::size_t i = 2; i < s.sigma.size(); ++i) {
        EXPECT_LT(s.sigma[i], 1e-13);
    }
    EXPECT_LT(orthonormality_error(s.u), 1e-12);
    const Svd<T> z = svd(Matrix<T>(3, 2));
    EXPECT_EQ(z.sigma, (std::vector<double>{0.0, 0.0}));
    EXPECT_LT(orthonormality_error(z.u), 1e-14);
}

TEST(Linalg, SvdKnownDiagonal) {
    const Svd<double> s = svd(Matrix<double>::from_rows({{0, 3}, {-2, 0}, {0, 0}}));
    EXPECT_DOUBLE_EQ(s.sigma[0], 3.0);
    EXPECT_DOUBLE_EQ(s.sigma[1], 2.0);
}

TEST(Linalg, SvdSweepCapReported) {
    Rng rng = rng_for(10);
    const Matrix<double> m = random_matrix<double>(6, 6, rng);
    EXPECT_THROW(svd(m, SvdOptions{1}), NumericalError);
}

}  // namespace
