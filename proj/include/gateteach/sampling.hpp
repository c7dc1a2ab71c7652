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

#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "gateteach/linalg.hpp"

namespace gateteach {

/// Mixes (seed, stream) into an independent 64-bit seed (splitmix64).
std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream);

/// Deterministic random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the standard; uniforms and Gaussians are derived
/// from raw engine words here (not via <random> distributions) so streams are
/// bit-identical across standard library implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : seed_(seed), engine_(seed) {}

    std::uint64_t seed() const { return seed_; }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform();
    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

    /// Standard normal via Box-Muller.
    double normal();

    /// Real and imaginary parts i.i.d. standard normal.
    Complex complex_normal();

private:
    std::uint64_t seed_;
    std::mt19937_64 engine_;
    bool has_spare_ = false;
    double spare_ = 0.0;
};

PureState haar_random_state(int num_qubits, SeededRng& rng);

/// QR of a complex Gaussian matrix with the phases of diag(R) moved into Q.
UnitaryMatrix haar_random_unitary(Eigen::Index dim, SeededRng& rng);

struct TrainingPair {
    PureState input;
    PureState target_output;
};

TrainingPair generate_training_pair(const UnitaryMatrix& target, int num_qubits, SeededRng& rng);

/// Fixed held-out pairs, drawn from their own stream of `seed`.
std::vector<TrainingPair> validation_set(const UnitaryMatrix& target, int num_qubits,
                                         std::size_t size, std::uint64_t seed);

inline constexpr std::uint64_t kValidationStream = 0x76616c6964ULL;

}  // namespace gateteach
