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

#ifndef QWP_STATE_H
#define QWP_STATE_H

#include "qwp/matrix.h"
#include "qwp/tolerance.h"

namespace qwp {

/// A density operator: PSD within eig_tol, unit trace within residual_tol.
class DensityState {
   public:
    /// Throws DomainError if `m` is not hermitian, PositivityError if its
    /// minimum eigenvalue is below -eig_tol, and DomainError if its trace is
    /// off by more than residual_tol.
    explicit DensityState(ComplexMatrix m, const ToleranceConfig &tol = {});

    /// |psi><psi| / <psi|psi>.
    static DensityState pure(const Eigen::VectorXcd &psi);
    static DensityState maximally_mixed(std::size_t dim);
    /// |k><k| in the computational basis.
    static DensityState basis(std::size_t dim, std::size_t k);

    const ComplexMatrix &matrix() const {
        return m_;
    }
    std::size_t dim() const {
        return m_.dim();
    }

   private:
    ComplexMatrix m_;
};

}  // namespace qwp

#endif  // QWP_STATE_H
