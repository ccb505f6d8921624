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

#ifndef QWP_TOLERANCE_H
#define QWP_TOLERANCE_H

#include <cstddef>

namespace qwp {

/// Numerical slack used by every order, positivity and equality test.
///
/// `eig_tol` is the eigenvalue slack for PSD tests, `residual_tol` bounds
/// max-entry deviations in equality checks, and `sample_count` is the budget
/// for sampled checks (positivity, weakest-precondition campaigns).
struct ToleranceConfig {
    static constexpr double kMaxTol = 1e-3;

    double eig_tol = 1e-9;
    double residual_tol = 1e-9;
    std::size_t sample_count = 1000;

    /// Throws DomainError unless both tolerances lie in [0, kMaxTol] and
    /// sample_count is positive.
    void validate() const;

    bool operator==(const ToleranceConfig &) const = default;
};

}  // namespace qwp

#endif  // QWP_TOLERANCE_H
