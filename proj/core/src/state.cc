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

#include "qwp/state.h"

#include <cmath>
#include <string>

#include "qwp/error.h"

namespace qwp {

DensityState::DensityState(ComplexMatrix m, const ToleranceConfig &tol) : m_(std::move(m)) {
    if (!is_hermitian(m_, tol)) {
        throw DomainError("density state must be hermitian");
    }
    double lo = min_eigenvalue(m_, tol);
    if (lo < -tol.eig_tol) {
        throw PositivityError("density state has negative eigenvalue " + std::to_string(lo));
    }
    double tr = m_.trace().real();
    if (std::abs(tr - 1.0) > tol.residual_tol) {
        throw DomainError("density state must have unit trace, got " + std::to_string(tr));
    }
}

DensityState DensityState::pure(const Eigen::VectorXcd &psi) {
    double n2 = psi.squaredNorm();
    if (!(n2 > 0)) {
        throw DomainError("pure state vector must be non-zero");
    }
    return DensityState(ComplexMatrix(psi * psi.adjoint() / n2));
}

DensityState DensityState::maximally_mixed(std::size_t dim) {
    return DensityState(ComplexMatrix::identity(dim) * Complex(1.0 / static_cast<double>(dim)));
}

DensityState DensityState::basis(std::size_t dim, std::size_t k) {
    if (k >= dim) {
        throw DimensionError("basis index out of range");
    }
    Eigen::VectorXcd v = Eigen::VectorXcd::Zero(static_cast<Eigen::Index>(dim));
    v(static_cast<Eigen::Index>(k)) = 1.0;
    return pure(v);
}

}  // namespace qwp
