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

#ifndef QWP_TESTS_ORACLES_H
#define QWP_TESTS_ORACLES_H

// Reference computations used as independent oracles in tests. Nothing here
// calls into the library beyond ComplexMatrix accessors.

#include <cmath>
#include <complex>
#include <vector>

#include <Eigen/Dense>

#include "qwp/matrix.h"

namespace qwp::oracle {

/// sum_ij conj(a_ij) b_ij.
inline Complex entrywise_hs(const ComplexMatrix &a, const ComplexMatrix &b) {
    Complex acc = 0;
    for (std::size_t i = 0; i < a.dim(); i++) {
        for (std::size_t j = 0; j < a.dim(); j++) {
            acc += std::conj(a(i, j)) * b(i, j);
        }
    }
    return acc;
}

/// Spectral radius of a hermitian matrix by power iteration on A^2.
inline double power_iteration_radius(const ComplexMatrix &a, int iterations = 5000) {
    Eigen::MatrixXcd a2 = a.eigen() * a.eigen();
    Eigen::VectorXcd v = Eigen::VectorXcd::Ones(a2.rows());
    for (Eigen::Index k = 0; k < v.size(); k++) {
        v(k) += Complex(0.1 * static_cast<double>(k), 0.05);
    }
    v.normalize();
    for (int k = 0; k < iterations; k++) {
        Eigen::VectorXcd w = a2 * v;
        double n = w.norm();
        if (n == 0) {
            return 0;
        }
        v = w / n;
    }
    return std::sqrt(std::abs((v.adjoint() * a2 * v)(0, 0)));
}

/// Plain-loop sum_k K_k rho K_k^dagger.
inline Eigen::MatrixXcd kraus_forward(const std::vector<Eigen::MatrixXcd> &ops, const Eigen::MatrixXcd &rho) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(rho.rows(), rho.cols());
    for (const auto &k : ops) {
        acc += k * rho * k.adjoint();
    }
    return acc;
}

/// Plain-loop sum_k K_k^dagger f K_k.
inline Eigen::MatrixXcd kraus_dual(const std::vector<Eigen::MatrixXcd> &ops, const Eigen::MatrixXcd &f) {
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(f.rows(), f.cols());
    for (const auto &k : ops) {
        acc += k.adjoint() * f * k;
    }
    return acc;
}

/// Qubit pure state on the Bloch sphere.
inline Eigen::Vector2cd bloch_vector(double theta, double phi) {
    return {std::cos(theta / 2), std::polar(std::sin(theta / 2), phi)};
}

/// Trine effect (2/3)|psi_k><psi_k| with |psi_k> = cos(t)|0> + sin(t)|1>,
/// t = k * 60 degrees (Bloch angle k * 120 degrees).
inline Eigen::Matrix2cd trine_effect(int k) {
    double t = k * M_PI / 3.0;
    Eigen::Vector2cd v(std::cos(t), std::sin(t));
    return (2.0 / 3.0) * v * v.adjoint();
}

inline double max_abs_diff(const Eigen::MatrixXcd &a, const Eigen::MatrixXcd &b) {
    return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace qwp::oracle

#endif  // QWP_TESTS_ORACLES_H
