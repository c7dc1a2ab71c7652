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

#include "gateteach/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include <Eigen/Eigenvalues>

namespace gateteach {

namespace {

std::string describe(const char* what, double value) {
    std::ostringstream os;
    os.precision(3);
    os << what << " (deviation " << std::scientific << value << ")";
    return os.str();
}

void require_square(const Matrix& m, const char* type) {
    if (m.rows() != m.cols() || m.rows() == 0) {
        std::ostringstream os;
        os << type << ": expected a non-empty square matrix, got " << m.rows() << "x" << m.cols();
        throw InvariantError(os.str());
    }
}

}  // namespace

int qubits_for_dimension(Eigen::Index dim) {
    if (dim < 1 || (dim & (dim - 1)) != 0) {
        throw InvariantError("dimension " + std::to_string(dim) + " is not a power of two");
    }
    int n = 0;
    while ((Eigen::Index{1} << n) < dim) {
        ++n;
    }
    return n;
}

PureState::PureState(Vector amplitudes) : amplitudes_(std::move(amplitudes)) {
    num_qubits_ = qubits_for_dimension(amplitudes_.size());
    const double deviation = std::abs(amplitudes_.norm() - 1.0);
    if (!(deviation <= tol::kStateNorm)) {
        throw InvariantError(describe("PureState: amplitudes are not unit norm", deviation));
    }
}

PureState PureState::basis(int num_qubits, Eigen::Index index) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    if (index < 0 || index >= dim) {
        throw InvariantError("PureState::basis: index out of range");
    }
    Vector v = Vector::Zero(dim);
    v(index) = 1.0;
    return PureState(std::move(v));
}

DensityMatrix::DensityMatrix(Matrix matrix) : matrix_(std::move(matrix)) {
    require_square(matrix_, "DensityMatrix");
    num_qubits_ = qubits_for_dimension(matrix_.rows());
    const auto asym = hermitian_asymmetry(matrix_);
    if (!(asym.max_deviation <= tol::kHermitian)) {
        throw InvariantError(describe("DensityMatrix: not Hermitian", asym.max_deviation));
    }
    const double trace_dev = std::abs(matrix_.trace() - Complex(1.0, 0.0));
    if (!(trace_dev <= tol::kTrace)) {
        throw InvariantError(describe("DensityMatrix: trace is not 1", trace_dev));
    }
    Eigen::SelfAdjointEigenSolver<Matrix> solver(matrix_, Eigen::EigenvaluesOnly);
    const double min_eig = solver.eigenvalues().minCoeff();
    if (min_eig < -tol::kPsd) {
        throw InvariantError(describe("DensityMatrix: negative eigenvalue", -min_eig));
    }
}

DensityMatrix DensityMatrix::from_pure(const PureState& state) {
    return DensityMatrix(state.amplitudes() * state.amplitudes().adjoint());
}

HermitianOperator::HermitianOperator(Matrix matrix) : matrix_(std::move(matrix)) {
    require_square(matrix_, "HermitianOperator");
    num_qubits_ = qubits_for_dimension(matrix_.rows());
    const auto asym = hermitian_asymmetry(matrix_);
    if (!(asym.max_deviation <= tol::kHermitian)) {
        std::ostringstream os;
        os.precision(3);
        os << "HermitianOperator: entry (" << asym.row << "," << asym.col
           << ") differs from the conjugate of its transpose partner by " << std::scientific
           << asym.max_deviation;
        throw InvariantError(os.str());
    }
}

HermitianOperator HermitianOperator::zero(int num_qubits) {
    const Eigen::Index dim = Eigen::Index{1} << num_qubits;
    return HermitianOperator(Matrix::Zero(dim, dim));
}

UnitaryMatrix::UnitaryMatrix(Matrix matrix) : matrix_(std::move(matrix)) {
    require_square(matrix_, "UnitaryMatrix");
    const double dev = unitarity_deviation(matrix_);
    if (!(dev <= tol::kUnitary)) {
        throw InvariantError(describe("UnitaryMatrix: U^dagger U != I", dev));
    }
}

UnitaryMatrix UnitaryMatrix::identity(Eigen::Index dim) {
    return UnitaryMatrix(Matrix::Identity(dim, dim));
}

Matrix SpectralDecomposition::reconstruct() const {
    return eigenvectors * eigenvalues.cast<Complex>().asDiagonal() * eigenvectors.adjoint();
}

AsymmetryProbe hermitian_asymmetry(const Matrix& m) {
    AsymmetryProbe probe;
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
        for (Eigen::Index i = 0; i <= j; ++i) {
            const double d = std::abs(m(i, j) - std::conj(m(j, i)));
            if (d > probe.max_deviation || std::isnan(d)) {
                probe = {d, i, j};
                if (std::isnan(d)) {
                    return probe;
                }
            }
        }
    }
    return probe;
}

double unitarity_deviation(const Matrix& m) {
    return (m.adjoint() * m - Matrix::Identity(m.cols(), m.cols())).norm();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
        for (Eigen::Index j = 0; j < a.cols(); ++j) {
            out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
        }
    }
    return out;
}

Matrix kron_all(std::span<const Matrix> factors) {
    Matrix out = Matrix::Identity(1, 1);
    for (const auto& f : factors) {
        out = kron(out, f);
    }
    return out;
}

SpectralDecomposition hermitian_eig(const HermitianOperator& h) {
    Eigen::SelfAdjointEigenSolver<Matrix> solver(h.matrix());
    if (solver.info() != Eigen::Success) {
        throw std::runtime_error("hermitian_eig: eigensolver did not converge");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

UnitaryMatrix expm_from_spectrum(const SpectralDecomposition& spectrum, double t) {
    const auto& v = spectrum.eigenvectors;
    Vector phases(spectrum.eigenvalues.size());
    for (Eigen::Index m = 0; m < phases.size(); ++m) {
        phases(m) = std::polar(1.0, -t * spectrum.eigenvalues(m));
    }
    return UnitaryMatrix(v * phases.asDiagonal() * v.adjoint());
}

UnitaryMatrix expm_hamiltonian(const HermitianOperator& h, double t) {
    return expm_from_spectrum(hermitian_eig(h), t);
}

Matrix divided_difference_kernel(const SpectralDecomposition& spectrum, double t) {
    const auto& lambda = spectrum.eigenvalues;
    const Eigen::Index d = lambda.size();
    Vector f(d);
    for (Eigen::Index m = 0; m < d; ++m) {
        f(m) = std::polar(1.0, -t * lambda(m));
    }
    const Complex minus_it(0.0, -t);
    Matrix gamma(d, d);
    for (Eigen::Index n = 0; n < d; ++n) {
        for (Eigen::Index m = 0; m < d; ++m) {
            const double gap = lambda(m) - lambda(n);
            gamma(m, n) = std::abs(gap) > tol::kDegenerate ? (f(m) - f(n)) / gap : minus_it * f(m);
        }
    }
    return gamma;
}

Matrix expm_directional_derivative(const SpectralDecomposition& spectrum, const Matrix& direction,
                                   double t) {
    const auto& v = spectrum.eigenvectors;
    const Matrix rotated = v.adjoint() * direction * v;
    const Matrix inner = divided_difference_kernel(spectrum, t).cwiseProduct(rotated);
    return v * inner * v.adjoint();
}

Matrix expm_directional_derivative(const HermitianOperator& h, const HermitianOperator& direction,
                                   double t) {
    if (h.dim() != direction.dim()) {
        throw InvariantError("expm_directional_derivative: dimension mismatch");
    }
    return expm_directional_derivative(hermitian_eig(h), direction.matrix(), t);
}

SubsystemSplit::SubsystemSplit(int num_qubits, std::span<const int> selected) {
    std::vector<bool> used(static_cast<std::size_t>(num_qubits), false);
    for (int q : selected) {
        if (q < 0 || q >= num_qubits) {
            throw InvariantError("qubit index " + std::to_string(q) + " out of range for " +
                                 std::to_string(num_qubits) + " qubits");
        }
        if (used[static_cast<std::size_t>(q)]) {
            throw InvariantError("qubit index " + std::to_string(q) + " selected twice");
        }
        used[static_cast<std::size_t>(q)] = true;
    }
    for (int q = 0; q < num_qubits; ++q) {
        if (!used[static_cast<std::size_t>(q)]) {
            rest_.push_back(q);
        }
    }
    const auto ns = static_cast<int>(selected.size());
    const auto nr = static_cast<int>(rest_.size());
    selected_dim_ = Eigen::Index{1} << ns;
    rest_dim_ = Eigen::Index{1} << nr;

    // Bit contribution of each local basis bit to the full index.
    auto bit_of = [num_qubits](int q) { return Eigen::Index{1} << (num_qubits - 1 - q); };
    std::vector<Eigen::Index> sel_part(static_cast<std::size_t>(selected_dim_), 0);
    for (Eigen::Index s = 0; s < selected_dim_; ++s) {
        for (int k = 0; k < ns; ++k) {
            if ((s >> (ns - 1 - k)) & 1) {
                sel_part[static_cast<std::size_t>(s)] |= bit_of(selected[static_cast<std::size_t>(k)]);
            }
        }
    }
    std::vector<Eigen::Index> rest_part(static_cast<std::size_t>(rest_dim_), 0);
    for (Eigen::Index r = 0; r < rest_dim_; ++r) {
        for (int k = 0; k < nr; ++k) {
            if ((r >> (nr - 1 - k)) & 1) {
                rest_part[static_cast<std::size_t>(r)] |= bit_of(rest_[static_cast<std::size_t>(k)]);
            }
        }
    }
    map_.resize(static_cast<std::size_t>(selected_dim_ * rest_dim_));
    for (Eigen::Index s = 0; s < selected_dim_; ++s) {
        for (Eigen::Index r = 0; r < rest_dim_; ++r) {
            map_[static_cast<std::size_t>(s * rest_dim_ + r)] =
                sel_part[static_cast<std::size_t>(s)] | rest_part[static_cast<std::size_t>(r)];
        }
    }
}

namespace {

std::vector<int> sorted_keep(std::span<const int> keep) {
    if (keep.empty()) {
        throw InvariantError("partial_trace: keep set is empty");
    }
    std::vector<int> k(keep.begin(), keep.end());
    std::sort(k.begin(), k.end());
    return k;
}

}  // namespace

DensityMatrix partial_trace(const PureState& state, std::span<const int> keep) {
    const auto kept = sorted_keep(keep);
    const SubsystemSplit split(state.num_qubits(), kept);
    Matrix amps(split.selected_dim(), split.rest_dim());
    for (Eigen::Index s = 0; s < split.selected_dim(); ++s) {
        for (Eigen::Index r = 0; r < split.rest_dim(); ++r) {
            amps(s, r) = state.amplitudes()(split.full_index(s, r));
        }
    }
    return DensityMatrix(amps * amps.adjoint());
}

DensityMatrix partial_trace(const DensityMatrix& state, std::span<const int> keep) {
    const auto kept = sorted_keep(keep);
    const SubsystemSplit split(state.num_qubits(), kept);
    const Eigen::Index ds = split.selected_dim();
    Matrix out = Matrix::Zero(ds, ds);
    for (Eigen::Index i = 0; i < ds; ++i) {
        for (Eigen::Index j = 0; j < ds; ++j) {
            Complex acc = 0.0;
            for (Eigen::Index r = 0; r < split.rest_dim(); ++r) {
                acc += state.matrix()(split.full_index(i, r), split.full_index(j, r));
            }
            out(i, j) = acc;
        }
    }
    return DensityMatrix(std::move(out));
}

double fidelity(const PureState& target, const DensityMatrix& state) {
    if (target.dim() != state.dim()) {
        throw InvariantError("fidelity: target has dimension " + std::to_string(target.dim()) +
                             " but state has dimension " + std::to_string(state.dim()));
    }
    const auto& psi = target.amplitudes();
    const double value = psi.dot(state.matrix() * psi).real();
    if (value < -tol::kFidelityOvershoot || value > 1.0 + tol::kFidelityOvershoot) {
        throw InvariantError(describe("fidelity: value outside [0,1], state is not physical",
                                      value < 0 ? -value : value - 1.0));
    }
    return std::clamp(value, 0.0, 1.0);
}

}  // namespace gateteach
