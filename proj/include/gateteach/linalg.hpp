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

#include <complex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

/// Dense complex linear algebra for multi-qubit systems.
///
/// Bit ordering is fixed across the whole library: qubit 0 is the most
/// significant bit of a computational-basis index, so for n qubits qubit q
/// lives at bit position (n - 1 - q).
namespace gateteach {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Thrown when a value would violate the invariant of a domain type.
class InvariantError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace tol {
inline constexpr double kStateNorm = 1e-12;
inline constexpr double kHermitian = 1e-12;
inline constexpr double kTrace = 1e-12;
inline constexpr double kPsd = 1e-10;
inline constexpr double kUnitary = 1e-10;
inline constexpr double kFidelityOvershoot = 1e-10;
inline constexpr double kDegenerate = 1e-9;
}  // namespace tol

/// Returns n if dim == 2^n, otherwise throws.
int qubits_for_dimension(Eigen::Index dim);

/// Unit-norm amplitude vector of length 2^n. n = 0 (a single amplitude) is
/// allowed so that an empty ancilla register has a well-defined state.
class PureState {
public:
    explicit PureState(Vector amplitudes);

    static PureState basis(int num_qubits, Eigen::Index index);

    const Vector& amplitudes() const { return amplitudes_; }
    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return amplitudes_.size(); }

private:
    Vector amplitudes_;
    int num_qubits_ = 0;
};

/// Hermitian, unit-trace, positive semidefinite matrix.
class DensityMatrix {
public:
    explicit DensityMatrix(Matrix matrix);

    static DensityMatrix from_pure(const PureState& state);

    const Matrix& matrix() const { return matrix_; }
    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    Matrix matrix_;
    int num_qubits_ = 0;
};

class HermitianOperator {
public:
    explicit HermitianOperator(Matrix matrix);

    static HermitianOperator zero(int num_qubits);

    const Matrix& matrix() const { return matrix_; }
    int num_qubits() const { return num_qubits_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    Matrix matrix_;
    int num_qubits_ = 0;
};

/// Square matrix with U^dagger U = I (Frobenius deviation within 1e-10).
class UnitaryMatrix {
public:
    explicit UnitaryMatrix(Matrix matrix);

    static UnitaryMatrix identity(Eigen::Index dim);

    const Matrix& matrix() const { return matrix_; }
    Eigen::Index dim() const { return matrix_.rows(); }

private:
    Matrix matrix_;
};

/// Eigenvalues ascending, eigenvectors as the columns of a unitary matrix.
struct SpectralDecomposition {
    RealVector eigenvalues;
    Matrix eigenvectors;

    Matrix reconstruct() const;
};

/// Largest |A_ij - conj(A_ji)| and where it occurs.
struct AsymmetryProbe {
    double max_deviation = 0.0;
    Eigen::Index row = 0;
    Eigen::Index col = 0;
};
AsymmetryProbe hermitian_asymmetry(const Matrix& m);

/// Frobenius norm of U^dagger U - I.
double unitarity_deviation(const Matrix& m);

Matrix kron(const Matrix& a, const Matrix& b);

/// Kronecker product of a list of factors, leftmost factor = qubit 0.
Matrix kron_all(std::span<const Matrix> factors);

SpectralDecomposition hermitian_eig(const HermitianOperator& h);

/// e^{-itH} evaluated as V diag(e^{-it lambda}) V^dagger.
UnitaryMatrix expm_hamiltonian(const HermitianOperator& h, double t);
UnitaryMatrix expm_from_spectrum(const SpectralDecomposition& spectrum, double t);

/// Divided differences of f(x) = e^{-itx} on the spectrum:
///   Gamma_mn = (f(l_m) - f(l_n)) / (l_m - l_n)   if |l_m - l_n| > 1e-9
///   Gamma_mn = -it f(l_m)                         otherwise.
Matrix divided_difference_kernel(const SpectralDecomposition& spectrum, double t);

/// d/ds e^{-it(H + sD)} at s = 0 via V [Gamma o (V^dagger D V)] V^dagger.
Matrix expm_directional_derivative(const HermitianOperator& h,
                                   const HermitianOperator& direction, double t);
Matrix expm_directional_derivative(const SpectralDecomposition& spectrum,
                                   const Matrix& direction, double t);

/// Splits an n-qubit basis into (selected, rest) factors. Selected qubits
/// keep the order they are given in; the rest are in ascending order.
class SubsystemSplit {
public:
    SubsystemSplit(int num_qubits, std::span<const int> selected);

    Eigen::Index full_index(Eigen::Index selected_index, Eigen::Index rest_index) const {
        return map_[static_cast<std::size_t>(selected_index * rest_dim_ + rest_index)];
    }
    Eigen::Index selected_dim() const { return selected_dim_; }
    Eigen::Index rest_dim() const { return rest_dim_; }
    const std::vector<int>& rest_qubits() const { return rest_; }

private:
    std::vector<Eigen::Index> map_;
    std::vector<int> rest_;
    Eigen::Index selected_dim_ = 1;
    Eigen::Index rest_dim_ = 1;
};

/// Reduced state on the kept qubits, which appear in ascending index order.
DensityMatrix partial_trace(const PureState& state, std::span<const int> keep);
DensityMatrix partial_trace(const DensityMatrix& state, std::span<const int> keep);

/// <psi|rho|psi>. Overshoot outside [0,1] up to 1e-10 is clamped; anything
/// larger means rho is not a physical state and throws.
double fidelity(const PureState& target, const DensityMatrix& state);

}  // namespace gateteach
