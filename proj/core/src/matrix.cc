// Copyright 2026 The qwp Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "qwp/matrix.h"

#include <algorithm>
#include <cmath>
#include <string>

#include "qwp/error.h"

namespace qwp {

namespace {

void require_same_dim(const ComplexMatrix &a, const ComplexMatrix &b, const char *what) {
    if (a.dim() != b.dim()) {
        throw DimensionError(
            std::string(what) + ": dimension mismatch (" + std::to_string(a.dim()) + " vs " +
            std::to_string(b.dim()) + ")");
    }
}

Eigen::VectorXd singular_values(const ComplexMatrix &a) {
    Eigen::JacobiSVD<Eigen::MatrixXcd> svd(a.eigen());
    if (svd.info() != Eigen::Success) {
        throw DecompositionError("singular value decomposition failed");
    }
    return svd.singularValues();
}

}  // namespace

void ToleranceConfig::validate() const {
    if (!(eig_tol >= 0 && eig_tol <= kMaxTol) || !(residual_tol >= 0 && residual_tol <= kMaxTol)) {
        throw DomainError("tolerances must lie in [0, 1e-3]");
    }
    if (sample_count == 0) {
        throw DomainError("sample_count must be positive");
    }
}

ComplexMatrix::ComplexMatrix(Eigen::MatrixXcd m) : m_(std::move(m)) {
    if (m_.rows() == 0 || m_.rows() != m_.cols()) {
        throw DimensionError(
            "matrix must be square with dim >= 1, got " + std::to_string(m_.rows()) + "x" +
            std::to_string(m_.cols()));
    }
    if (!m_.allFinite()) {
        throw DomainError("matrix has non-finite entries");
    }
}

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Identity(n, n));
}

ComplexMatrix ComplexMatrix::zero(std::size_t dim) {
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(Eigen::MatrixXcd::Zero(n, n));
}

ComplexMatrix ComplexMatrix::diagonal(const std::vector<Complex> &diag) {
    Eigen::VectorXcd v(static_cast<Eigen::Index>(diag.size()));
    for (std::size_t k = 0; k < diag.size(); k++) {
        v(static_cast<Eigen::Index>(k)) = diag[k];
    }
    return ComplexMatrix(v.asDiagonal().toDenseMatrix());
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    auto n = static_cast<Eigen::Index>(rows.size());
    Eigen::MatrixXcd m(n, n);
    Eigen::Index r = 0;
    for (const auto &row : rows) {
        if (static_cast<Eigen::Index>(row.size()) != n) {
            throw DimensionError("from_rows: ragged or non-square row list");
        }
        Eigen::Index c = 0;
        for (const auto &x : row) {
            m(r, c++) = x;
        }
        r++;
    }
    return ComplexMatrix(std::move(m));
}

ComplexMatrix ComplexMatrix::outer(const Eigen::VectorXcd &v) {
    return ComplexMatrix(v * v.adjoint());
}

ComplexMatrix ComplexMatrix::adjoint() const {
    return ComplexMatrix(m_.adjoint());
}

ComplexMatrix ComplexMatrix::transpose() const {
    return ComplexMatrix(m_.transpose());
}

ComplexMatrix ComplexMatrix::conjugate() const {
    return ComplexMatrix(m_.conjugate());
}

Complex ComplexMatrix::trace() const {
    return m_.trace();
}

double ComplexMatrix::max_abs_entry() const {
    return m_.cwiseAbs().maxCoeff();
}

ComplexMatrix ComplexMatrix::operator+(const ComplexMatrix &other) const {
    require_same_dim(*this, other, "matrix sum");
    return ComplexMatrix(m_ + other.m_);
}

ComplexMatrix ComplexMatrix::operator-(const ComplexMatrix &other) const {
    require_same_dim(*this, other, "matrix difference");
    return ComplexMatrix(m_ - other.m_);
}

ComplexMatrix ComplexMatrix::operator*(const ComplexMatrix &other) const {
    require_same_dim(*this, other, "matrix product");
    return ComplexMatrix(m_ * other.m_);
}

ComplexMatrix ComplexMatrix::operator*(Complex scalar) const {
    return ComplexMatrix(m_ * scalar);
}

ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b) {
    auto na = static_cast<Eigen::Index>(a.dim());
    auto nb = static_cast<Eigen::Index>(b.dim());
    Eigen::MatrixXcd out(na * nb, na * nb);
    for (Eigen::Index i = 0; i < na; i++) {
        for (Eigen::Index j = 0; j < na; j++) {
            out.block(i * nb, j * nb, nb, nb) = a.eigen()(i, j) * b.eigen();
        }
    }
    return ComplexMatrix(std::move(out));
}

double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "max_abs_diff");
    return (a.eigen() - b.eigen()).cwiseAbs().maxCoeff();
}

Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b) {
    require_same_dim(a, b, "hs_inner");
    return (a.eigen().adjoint() * b.eigen()).trace();
}

bool is_hermitian(const ComplexMatrix &a, const ToleranceConfig &tol) {
    return (a.eigen() - a.eigen().adjoint()).cwiseAbs().maxCoeff() <= tol.residual_tol;
}

HermitianEigen hermitian_eigen(const ComplexMatrix &a, const ToleranceConfig &tol) {
    if (!is_hermitian(a, tol)) {
        throw DomainError("hermitian_eigen: matrix is not hermitian");
    }
    Eigen::MatrixXcd h = 0.5 * (a.eigen() + a.eigen().adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h);
    if (solver.info() != Eigen::Success) {
        throw DecompositionError("hermitian eigendecomposition failed");
    }
    return {solver.eigenvalues(), solver.eigenvectors()};
}

double min_eigenvalue(const ComplexMatrix &a, const ToleranceConfig &tol) {
    return hermitian_eigen(a, tol).values(0);
}

bool is_psd(const ComplexMatrix &a, const ToleranceConfig &tol) {
    if (!is_hermitian(a, tol)) {
        return false;
    }
    return min_eigenvalue(a, tol) >= -tol.eig_tol;
}

bool loewner_leq(const ComplexMatrix &a, const ComplexMatrix &b, const ToleranceConfig &tol) {
    require_same_dim(a, b, "loewner_leq");
    if (!is_hermitian(a, tol) || !is_hermitian(b, tol)) {
        throw DomainError("loewner_leq: operands must be hermitian");
    }
    return min_eigenvalue(b - a, tol) >= -tol.eig_tol;
}

double operator_norm_hermitian(const ComplexMatrix &a, const ToleranceConfig &tol) {
    if (!is_hermitian(a, tol)) {
        throw DomainError("operator_norm_hermitian: matrix is not hermitian");
    }
    return hermitian_eigen(a, tol).values.cwiseAbs().maxCoeff();
}

double operator_norm(const ComplexMatrix &a) {
    return singular_values(a).maxCoeff();
}

double spectral_radius(const ComplexMatrix &a) {
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(a.eigen(), false);
    if (solver.info() != Eigen::Success) {
        throw DecompositionError("general eigendecomposition failed");
    }
    return solver.eigenvalues().cwiseAbs().maxCoeff();
}

double trace_norm(const ComplexMatrix &a) {
    return singular_values(a).sum();
}

ComplexMatrix psd_sqrt(const ComplexMatrix &a, const ToleranceConfig &tol) {
    auto eig = hermitian_eigen(a, tol);
    if (eig.values(0) < -tol.eig_tol) {
        throw DomainError("psd_sqrt: matrix is not positive semidefinite");
    }
    Eigen::VectorXd roots = eig.values.cwiseMax(0.0).cwiseSqrt();
    return ComplexMatrix(eig.vectors * roots.asDiagonal() * eig.vectors.adjoint());
}

}  // namespace qwp
