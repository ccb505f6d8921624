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

#ifndef QWP_MATRIX_H
#define QWP_MATRIX_H

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <vector>

#include <Eigen/Dense>

#include "qwp/tolerance.h"

namespace qwp {

using Complex = std::complex<double>;

/// Dense square complex matrix. The single carrier for effects, states,
/// Kraus operators, Choi matrices and superoperators.
///
/// Invariants: square, dim >= 1, every entry finite. Values are immutable
/// once built; arithmetic returns new matrices.
class ComplexMatrix {
   public:
    /// Throws DimensionError for empty or rectangular input and DomainError
    /// for non-finite entries.
    explicit ComplexMatrix(Eigen::MatrixXcd m);

    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix zero(std::size_t dim);
    static ComplexMatrix diagonal(const std::vector<Complex> &diag);
    /// Row-major construction; throws DimensionError unless rows.size() is
    /// a square and every row has that length.
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    /// |v><v| for a (not necessarily normalized) column vector.
    static ComplexMatrix outer(const Eigen::VectorXcd &v);

    std::size_t dim() const {
        return static_cast<std::size_t>(m_.rows());
    }
    const Eigen::MatrixXcd &eigen() const {
        return m_;
    }
    Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    ComplexMatrix adjoint() const;
    ComplexMatrix transpose() const;
    ComplexMatrix conjugate() const;
    Complex trace() const;
    /// max_ij |a_ij|.
    double max_abs_entry() const;

    ComplexMatrix operator+(const ComplexMatrix &other) const;
    ComplexMatrix operator-(const ComplexMatrix &other) const;
    ComplexMatrix operator*(const ComplexMatrix &other) const;
    ComplexMatrix operator*(Complex scalar) const;
    friend ComplexMatrix operator*(Complex scalar, const ComplexMatrix &m) {
        return m * scalar;
    }

   private:
    Eigen::MatrixXcd m_;
};

/// Kronecker product a (x) b.
ComplexMatrix kron(const ComplexMatrix &a, const ComplexMatrix &b);

/// max-entry |a - b|; throws DimensionError on mismatch.
double max_abs_diff(const ComplexMatrix &a, const ComplexMatrix &b);

/// Hilbert-Schmidt pairing <a|b>_HS = Tr(a^dagger b).
Complex hs_inner(const ComplexMatrix &a, const ComplexMatrix &b);

bool is_hermitian(const ComplexMatrix &a, const ToleranceConfig &tol = {});

/// Eigenvalues (ascending) and orthonormal eigenvectors of a hermitian matrix.
struct HermitianEigen {
    Eigen::VectorXd values;
    Eigen::MatrixXcd vectors;
};

/// Throws DomainError if `a` is not hermitian within residual_tol and
/// DecompositionError if the solver fails. The hermitian part of `a` is
/// decomposed so slack below residual_tol does not leak into the result.
HermitianEigen hermitian_eigen(const ComplexMatrix &a, const ToleranceConfig &tol = {});

double min_eigenvalue(const ComplexMatrix &a, const ToleranceConfig &tol = {});

/// Hermitian and min eigenvalue >= -eig_tol. Non-hermitian input is simply
/// not PSD; solver failure throws DecompositionError.
bool is_psd(const ComplexMatrix &a, const ToleranceConfig &tol = {});

/// a <= b in the Loewner order (b - a is PSD). Throws DomainError unless
/// both operands are hermitian.
bool loewner_leq(const ComplexMatrix &a, const ComplexMatrix &b, const ToleranceConfig &tol = {});

/// max |lambda| over the spectrum of a hermitian matrix, which is its
/// operator norm. Throws DomainError for non-hermitian input.
double operator_norm_hermitian(const ComplexMatrix &a, const ToleranceConfig &tol = {});

/// Largest singular value; defined for any square matrix.
double operator_norm(const ComplexMatrix &a);

/// sup |lambda| over the spectrum, from a general (non-hermitian) eigensolver.
double spectral_radius(const ComplexMatrix &a);

/// Sum of singular values.
double trace_norm(const ComplexMatrix &a);

/// Positive semidefinite square root of a PSD matrix (negative eigenvalues
/// within slack are clamped to zero).
ComplexMatrix psd_sqrt(const ComplexMatrix &a, const ToleranceConfig &tol = {});

}  // namespace qwp

#endif  // QWP_MATRIX_H
