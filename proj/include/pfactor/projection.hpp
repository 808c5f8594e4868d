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

#include <string_view>
#include <vector>

#include "pfactor/exterior.hpp"
#include "pfactor/field.hpp"
#include "pfactor/matrix.hpp"
#include "pfactor/subspace.hpp"

namespace pfactor {

// Cross-path agreement (two SVDs compound) and single-path reconstruction
// tolerances.
inline constexpr double kCrossPathTolerance = 1e-9;
inline constexpr double kReconstructionTolerance = 1e-10;

/// Principal vectors, cosines and angles of V with respect to W,
/// m = min(dim V, dim W).
///
/// Cosines come from the SVD of Q_W^* Q_V and sines from the SVD of
/// (1 - P_W) Q_V, so both are accurate near 0; angles use whichever of the
/// two is better conditioned.
template <Scalar T>
struct PrincipalDecomposition {
    std::vector<double> sigma;         ///< cos(theta_i), descending, in [0, 1]
    std::vector<double> sines;         ///< sin(theta_i), ascending, in [0, 1]
    std::vector<double> theta;         ///< principal angles, ascending
    std::vector<double> pi_principal;  ///< sigma_i (real) or sigma_i^2 (complex)
    Matrix<T> e_vecs;                  ///< n x m principal vectors of V
    Matrix<T> f_vecs;                  ///< n x m principal vectors of W
    Matrix<T> v_basis;                 ///< n x dim V: e_vecs completed inside V

    std::size_t size() const noexcept { return sigma.size(); }
};

/// Throws DomainError if either subspace is {0}.
template <Scalar T>
PrincipalDecomposition<T> principal_decomposition(const Subspace<T>& v, const Subspace<T>& w);

/// pi_{V,W}: product of principal projection factors, 0 when dim V > dim W,
/// with pi_{{0},W} = 1 and pi_{V,{0}} = 0 for V != {0}.
template <Scalar T>
double projection_factor(const Subspace<T>& v, const Subspace<T>& w);

/// sqrt(det(P^T P)) (real) or det(P^* P) (complex) for P = Q_W^* Q_V;
/// |det P| or |det P|^2 when the dimensions agree.
template <Scalar T>
double factor_orthonormal_det(const Subspace<T>& v, const Subspace<T>& w);

/// Same factor from arbitrary bases (columns) through the Gram matrices
/// A = (<w_i, w_j>), B = (<w_i, v_j>), D = (<v_i, v_j>).
template <Scalar T>
double factor_general_bases(const Matrix<T>& basis_v, const Matrix<T>& basis_w);

/// |<nu, omega>| / (|nu| |omega|) (squared over C) for blades of equal grade.
template <Scalar T>
double factor_blades(const Blade<T>& nu, const Blade<T>& omega);

/// |nu _| omega| / (|nu| |omega|) (squared over C); 0 when grade nu > grade omega.
template <Scalar T>
double factor_interior(const Blade<T>& nu, const Blade<T>& omega);

/// Factor between the line spanned by a unit p-blade of V and the subspace
/// Lambda^p W of the exterior power, computed on Pluecker coordinates.
template <Scalar T>
double factor_exterior_power(const Subspace<T>& v, const Subspace<T>& w);

/// Grassmann angle Theta_{V,W} in [0, pi/2].
template <Scalar T>
double grassmann_angle(const Subspace<T>& v, const Subspace<T>& w);

/// pi_{V,W-perp} by each available route.
struct ComplementFactors {
    double principal = 0.0;        ///< prod sqrt(1 - pi_i^2) / prod (1 - pi_i)
    double orthonormal_det = 0.0;  ///< det(1 - B B^*) form
    double general_det = 0.0;      ///< det(A - B D^-1 B^*) / det A form
    double exterior = 0.0;         ///< |nu ^ omega| / (|nu| |omega|) form
};

template <Scalar T>
ComplementFactors complement_factor(const Subspace<T>& v, const Subspace<T>& w);

enum class LineMode { RealLine, ComplexLine };

/// |Pv| / |v| for the real line R v, |Pv|^2 / |v|^2 for the complex line C v.
template <Scalar T>
double line_factor(std::span<const T> v, const Subspace<T>& w, LineMode mode);

/// Euclidean angle in [0, pi]: cos = Re<v, w> / (|v| |w|).
template <Scalar T>
double euclidean_angle(std::span<const T> v, std::span<const T> w);

/// Hermitian angle in [0, pi/2]: cos = |<v, w>| / (|v| |w|).
template <Scalar T>
double hermitian_angle(std::span<const T> v, std::span<const T> w);

enum class FactorPath { SVD, OrthonormalDet, GeneralBasisDet, Blades, Interior, GrassmannAngle, ExteriorPower };

std::string_view path_name(FactorPath path);

struct FactorReport {
    double value = 0.0;
    FactorPath path = FactorPath::SVD;
    Field field = Field::Real;
};

/// The factor pi_{V,W} through one route. Blades needs dim V == dim W;
/// Interior and ExteriorPower give 0 directly when dim V > dim W.
template <Scalar T>
FactorReport factor_by_path(const Subspace<T>& v, const Subspace<T>& w, FactorPath path);

/// Every route applicable to (V, W).
template <Scalar T>
std::vector<FactorReport> factor_all_paths(const Subspace<T>& v, const Subspace<T>& w);

}  // namespace pfactor
