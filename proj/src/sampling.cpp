// Copyright 2026 The gateteach Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "gateteach/sampling.hpp"

#include <cmath>
#include <numbers>

#include <Eigen/QR>

namespace gateteach {

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (stream + 1);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

double SeededRng::uniform() {
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
}

double SeededRng::normal() {
    if (has_spare_) {
        has_spare_ = false;
        return spare_;
    }
    const double u1 = 1.0 - uniform();  // (0, 1]
    const double u2 = uniform();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double theta = 2.0 * std::numbers::pi * u2;
    spare_ = r * std::sin(theta);
    has_spare_ = true;
    return r * std::cos(theta);
}

Complex SeededRng::complex_normal() {
    const double re = normal();
    const double im = normal();
    return {re, im};
}

PureState haar_random_state(int num_qubits, SeededRng& rng) {
    if (num_qubits < 1) {
        throw InvariantError("haar_random_state: need at least one qubit");
    }
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    Vector v(dim);
    for (Eigen::Index i = 0; i < dim; ++i) {
        v(i) = rng.complex_normal();
    }
    v /= v.norm();
    return PureState(std::move(v));
}

UnitaryMatrix haar_random_unitary(Eigen::Index dim, SeededRng& rng) {
    if (dim < 2) {
        throw InvariantError("haar_random_unitary: dimension must be at least 2");
    }
    Matrix z(dim, dim);
    for (Eigen::Index j = 0; j < dim; ++j) {
        for (Eigen::Index i = 0; i < dim; ++i) {
            z(i, j) = rng.complex_normal();
        }
    }
    Eigen::HouseholderQR<Matrix> qr(z);
    Matrix q = qr.householderQ();
    const Matrix& r = qr.matrixQR();
    for (Eigen::Index j = 0; j < dim; ++j) {
        const Complex d = r(j, j);
        const double mag = std::abs(d);
        q.col(j) *= mag > 0.0 ? d / mag : Complex(1.0, 0.0);
    }
    return UnitaryMatrix(std::move(q));
}

TrainingPair generate_training_pair(const UnitaryMatrix& target, int num_qubits, SeededRng& rng) {
    if (target.dim() != (Eigen::Index{1} << num_qubits)) {
        throw InvariantError("generate_training_pair: target of dimension " +
                             std::to_string(target.dim()) + " does not act on " +
                             std::to_string(num_qubits) + " qubits");
    }
    PureState input = haar_random_state(num_qubits, rng);
    Vector out = target.matrix() * input.amplitudes();
    return {std::move(input), PureState(std::move(out))};
}

std::vector<TrainingPair> validation_set(const UnitaryMatrix& target, int num_qubits,
                                         std::size_t size, std::uint64_t seed) {
    SeededRng rng(derive_seed(seed, kValidationStream));
    std::vector<TrainingPair> pairs;
    pairs.reserve(size);
    for (std::size_t i = 0; i < size; ++i) {
        pairs.push_back(generate_training_pair(target, num_qubits, rng));
    }
    return pairs;
}

}  // namespace gateteach
