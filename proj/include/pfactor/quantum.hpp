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
#include <span>
#include <vector>

#include "pfactor/field.hpp"
#include "pfactor/matrix.hpp"
#include "pfactor/pythagoras.hpp"

namespace pfactor {

inline constexpr double kTotalProbabilityTolerance = 1e-10;

/// A pure state as a ray: psi need not be normalized.
class QuantumState {
public:
    explicit QuantumState(Vector<Complex> psi);

    std::span<const Complex> psi() const noexcept { return psi_; }
    std::size_t dim() const noexcept { return psi_.size(); }

private:
    Vector<Complex> psi_;
};

class Observable {
public:
    /// One real eigenvalue per eigenspace, all distinct.
    Observable(OrthogonalPartition<Complex> eigenspaces, std::vector<double> eigenvalues);

    const OrthogonalPartition<Complex>& eigenspaces() const noexcept { return eigenspaces_; }
    const std::vector<double>& eigenvalues() const noexcept { return eigenvalues_; }
    std::size_t size() const noexcept { return eigenvalues_.size(); }
    std::size_t dim() const noexcept { return eigenspaces_.ambient_dim(); }

private:
    OrthogonalPartition<Complex> eigenspaces_;
    std::vector<double> eigenvalues_;
};

/// Probability of measuring eigenvalue `index`: ||P psi||^2 / ||psi||^2.
double born_probability(const QuantumState& state, const Observable& obs, std::size_t index);

std::vector<double> born_distribution(const QuantumState& state, const Observable& obs);

double total_probability(const QuantumState& state, const Observable& obs);

double fidelity(std::span<const Complex> psi, std::span<const Complex> phi);
double fidelity(const QuantumState& psi, const QuantumState& phi);

/// arccos sqrt(fidelity), in [0, pi/2].
double bures_angle(std::span<const Complex> psi, std::span<const Complex> phi);
double bures_angle(const QuantumState& psi, const QuantumState& phi);

}  // namespace pfactor
