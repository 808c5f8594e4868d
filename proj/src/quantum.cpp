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

#include <algorithm>
#include <cmath>

#include "pfactor/errors.hpp"
#include "pfactor/linalg.hpp"
#include "pfactor/projection.hpp"

namespace pfactor {

QuantumState::QuantumState(Vector<Complex> psi) : psi_(std::move(psi)) {
    if (psi_.empty() || norm<Complex>(psi_) == 0.0) {
        throw DomainError("quantum state must be a nonzero vector");
    }
}

Observable::Observable(OrthogonalPartition<Complex> eigenspaces, std::vector<double> eigenvalues)
    : eigenspaces_(std::move(eigenspaces)), eigenvalues_(std::move(eigenvalues)) {
    if (eigenvalues_.size() != eigenspaces_.size()) {
        throw ValidationError("observable needs one eigenvalue per eigenspace");
    }
    std::vector<double> sorted = eigenvalues_;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw ValidationError("observable eigenvalues must be distinct");
    }
}

double born_probability(const QuantumState& state, const Observable& obs, std::size_t index) {
    if (index >= obs.size()) {
        throw DomainError("eigenvalue index out of range");
    }
    if (state.dim() != obs.dim()) {
        throw DimensionError("state and observable dimensions differ");
    }
    const Subspace<Complex>& w = obs.eigenspaces().parts()[index];
    if (w.is_zero()) {
        return 0.0;
    }
    return line_factor<Complex>(state.psi(), w, LineMode::ComplexLine);
}

std::vector<double> born_distribution(const QuantumState& state, const Observable& obs) {
    std::vector<double> out(obs.size());
    for (std::size_t i = 0; i < obs.size(); ++i) {
        out[i] = born_probability(state, obs, i);
    }
    return out;
}

double total_probability(const QuantumState& state, const Observable& obs) {
    double total = 0.0;
    for (double p : born_distribution(state, obs)) {
        total += p;
    }
    return total;
}

double fidelity(std::span<const Complex> psi, std::span<const Complex> phi) {
    if (psi.size() != phi.size()) {
        throw DimensionError("fidelity: dimensions differ");
    }
    const double npsi = norm<Complex>(psi);
    const double nphi = norm<Complex>(phi);
    if (npsi == 0.0 || nphi == 0.0) {
        throw DomainError("fidelity of the zero vector");
    }
    const double c = std::abs(inner<Complex>(psi, phi)) / (npsi * nphi);
    return std::min(1.0, c * c);
}

double fidelity(const QuantumState& psi, const QuantumState& phi) { return fidelity(psi.psi(), phi.psi()); }

double bures_angle(std::span<const Complex> psi, std::span<const Complex> phi) {
    return std::acos(std::sqrt(fidelity(psi, phi)));
}

double bures_angle(const QuantumState& psi, const QuantumState& phi) { return bures_angle(psi.psi(), phi.psi()); }

}  // namespace pfactor
