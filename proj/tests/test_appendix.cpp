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

#include <gtest/gtest.h>

#include <set>
#include <string>

#include "helpers.hpp"
#include "oracles.hpp"
#include "pfactor/errors.hpp"
#include "pfactor/projection.hpp"

namespace {

using namespace pfactor;
using namespace testing_support;

template <typename T>
class AppendixTest : public ::testing::Test {};
TYPED_TEST_SUITE(AppendixTest, Fields, FieldNames);

template <typename T>
double oracle_factor(const Subspace<T>& v, const Subspace<T>& w) {
    return oracle::factor(oracle::columns(v.basis()), oracle::columns(w.basis()));
}

TEST(Appendix, IdentityNames) {
    std::set<std::string> names;
    std::size_t inequalities = 0;
    for (std::size_t i = 0; i < kIdentityCount; ++i) {
        const auto id = static_cast<Identity>(i);
        const std::string name(identity_name(id));
        EXPECT_FALSE(name.empty());
        EXPECT_EQ(name.find(' '), std::string::npos);
        names.insert(name);
        inequalities += is_inequality(id) ? 1 : 0;
    }
    EXPECT_EQ(names.size(), kIdentityCount);
    EXPECT_EQ(inequalities, 4u);
    EXPECT_TRUE(is_inequality(Identity::ZetaBounds));
    EXPECT_FALSE(is_inequality(Identity::ComplementDuality));
}

TYPED_TEST(AppendixTest, EveryIdentityIsChecked) {
    using T = TypeParam;
    Rng rng = rng_for(501);
    const auto checks = verify_appendix_identities(random_subspace<T>(5, 2, rng), random_subspace<T>(5, 3, rng), rng);
    std::set<Identity> seen;
    for (const auto& c : checks) {
        seen.insert(c.id);
        EXPECT_GE(c.residual, 0.0);
        EXPECT_LT(c.residual, kAppendixTolerance) << identity_name(c.id);
    }
    EXPECT_EQ(seen.size(), kIdentityCount);
    EXPECT_THROW(verify_appendix_identities(Subspace<T>::zero(3), Subspace<T>::whole(3), rng), DomainError);
}

TYPED_TEST(AppendixTest, SuitePasses) {
    using T = TypeParam;
    const AppendixReport report = run_appendix_suite<T>(300, 2024, 8);
    ASSERT_EQ(report.identities.size(), kIdentityCount);
    EXPECT_EQ(report.trials, 300u);
    EXPECT_EQ(report.seed, 2024u);
    for (const auto& s : report.identities) {
        EXPECT_TRUE(s.pass) << identity_name(s.id) << " worst " << s.worst_residual << " at trial " << s.worst_trial;
        EXPECT_LT(s.worst_trial, 300u);
    }
    EXPECT_TRUE(report.all_pass());
}

TYPED_TEST(AppendixTest, SerialEqualsParallel) {
    using T = TypeParam;
    const auto a = run_appendix_suite<T>(60, 7, 6, kAppendixTolerance, Execution::Serial);
    const auto b = run_appendix_suite<T>(60, 7, 6, kAppendixTolerance, Execution::Parallel);
    ASSERT_EQ(a.identities.size(), b.identities.size());
    for (std::size_t i = 0; i < a.identities.size(); ++i) {
        EXPECT_EQ(a.identities[i].worst_residual, b.identities[i].worst_residual);
        EXPECT_EQ(a.identities[i].worst_trial, b.identities[i].worst_trial);
    }
}

TYPED_TEST(AppendixTest, EdgeCases) {
    using T = TypeParam;
    const auto empty = run_appendix_suite<T>(0, 1, 8);
    EXPECT_TRUE(empty.identities.empty());
    EXPECT_TRUE(empty.all_pass());
    EXPECT_THROW(run_appendix_suite<T>(10, 1, 1), DomainError);
    // A tolerance of zero must fail somewhere: the identities are evaluated in floating point.
    EXPECT_FALSE(run_appendix_suite<T>(50, 1, 8, 0.0).all_pass());
}

TYPED_TEST(AppendixTest, ComplementDualitiesAgainstGramOracle) {
    using T = TypeParam;
    Rng rng = rng_for(502);
    for (int t = 0; t < 200; ++t) {
        const std::size_t n = rng.between(2, 8);
        const auto v = random_subspace<T>(n, rng.between(1, n - 1), rng);
        const auto w = random_subspace<T>(n, rng.between(1, n - 1), rng);
        const auto vp = orthogonal_complement(v);
        const auto wp = orthogonal_complement(w);
        EXPECT_NEAR(projection_factor(v, wp), oracle_factor(w, vp), 1e-9);
        EXPECT_NEAR(projection_factor(vp, wp), oracle_factor(w, v), 1e-9);
    }
}

TYPED_TEST(AppendixTest, ZetaEqualityCases) {
    using T = TypeParam;
    auto zeta = [](const Subspace<T>& v, const Subspace<T>& w) {
        const double a = projection_factor(v, w);
        const double b = projection_factor(v, orthogonal_complement(w));
        return is_complex_v<T> ? a + b : a * a + b * b;
    };
    const Subspace<T> w(units<T>(4, {0, 1}));
    Rng rng = rng_for(503);
    EXPECT_NEAR(zeta(random_subspace<T>(4, 1, rng), w), 1.0, 1e-12);
    EXPECT_NEAR(zeta(Subspace<T>(units<T>(4, {0, 1})), w), 1.0, 1e-15);
    EXPECT_NEAR(zeta(Subspace<T>(units<T>(4, {2, 3})), w), 1.0, 1e-15);
    EXPECT_NEAR(zeta(Subspace<T>(units<T>(4, {0, 2})), w), 0.0, 1e-15);
    for (int t = 0; t < 50; ++t) {
        const double z = zeta(random_subspace<T>(4, 2, rng), w);
        EXPECT_GE(z, 0.0);
        EXPECT_LT(z, 1.0);
    }
}

}  // namespace
