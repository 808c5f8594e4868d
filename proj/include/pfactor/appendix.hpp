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

#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "pfactor/execution.hpp"
#include "pfactor/random.hpp"
#include "pfactor/subspace.hpp"

namespace pfactor {

inline constexpr double kAppendixTolerance = 1e-9;

/// Identities checked per trial, in report order.
enum class Identity {
    ZeroConventions,
    VanishesOnPerpVector,
    OneWhenContained,
    ImageReduction,
    EqualDimSymmetry,
    LineBridge,
    IntersectionReduction,
    PrincipalSplit,
    OrthogonalSplit,
    NestedTarget,
    PrincipalBound,
    TargetMonotone,
    SourceMonotone,
    BladeProjection,
    InteriorProduct,
    CoordinateSum,
    ComplementDuality,
    ComplementBoth,
    ComplementPrincipal,
    ZetaBounds,
    ComplementExterior,
    ComplementGram,
};

inline constexpr std::size_t kIdentityCount = 22;

std::string_view identity_name(Identity id);
bool is_inequality(Identity id);

struct IdentityCheck {
    Identity id;
    double residual = 0.0;  ///< |lhs - rhs|, or the amount by which an inequality is violated
};

/// Evaluates every identity for the pair (V, W). Auxiliary subspaces
/// (subspaces of V or W, splittings, constructive equality cases) are
/// drawn from `rng`.
template <Scalar T>
std::vector<IdentityCheck> verify_appendix_identities(const Subspace<T>& v, const Subspace<T>& w, Rng& rng);

struct IdentitySummary {
    Identity id;
    double worst_residual = 0.0;
    std::size_t worst_trial = 0;
    bool pass = true;
};

struct AppendixReport {
    std::size_t trials = 0;
    std::uint64_t seed = 0;
    std::size_t dims_up_to = 0;
    double tolerance = kAppendixTolerance;
    std::vector<IdentitySummary> identities;  ///< empty when trials == 0

    bool all_pass() const;
};

/// Random trials with n in [2, dims_up_to]; trial t draws from Rng::stream(seed, t).
template <Scalar T>
AppendixReport run_appendix_suite(std::size_t trials, std::uint64_t seed, std::size_t dims_up_to,
                                  double tol = kAppendixTolerance, Execution exec = Execution::Parallel);

}  // namespace pfactor
