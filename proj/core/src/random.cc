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

#include "qwp/random.h"

#include "qwp/error.h"

namespace qwp {

namespace {

Eigen::MatrixXcd ginibre(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    std::normal_distribution<double> normal(0.0, 1.0);
    Eigen::MatrixXcd g(rows, cols);
    for (Eigen::Index c = 0; c < cols; c++) {
        for (Eigen::Index r = 0; r < rows; r++) {
            double re = normal(rng);
            double im = normal(rng);
            g(r, c) = Complex(re, im);
        }
    }
    return g;
}

// Orthonormal columns from a Ginibre matrix, with the R-diagonal phases
// divided out so the distribution is Haar rather than QR-biased.
Eigen::MatrixXcd haar_isometry(Eigen::Index rows, Eigen::Index cols, Rng &rng) {
    Eigen::MatrixXcd g = ginibre(rows, cols, rng);
    Eigen::HouseholderQR<Eigen::MatrixXcd> qr(g);
    Eigen::MatrixXcd q = qr.householderQ() * Eigen::MatrixXcd::Identity(rows, cols);
    Eigen::MatrixXcd r = qr.matrixQR().topRows(cols).triangularView<Eigen::Upper>();
    for (Eigen::Index k = 0; k < cols; k++) {
        Complex d = r(k, k);
        double a = std::abs(d);
        if (a > 0) {
            q.col(k) *= d / a;
        }
    }
    return q;
}

ComplexMatrix with_spectrum(const Eigen::VectorXd &spectrum, Rng &rng) {
    auto n = spectrum.size();
    Eigen::MatrixXcd u = haar_isometry(n, n, rng);
    return ComplexMatrix(u * spectrum.cast<Complex>().asDiagonal() * u.adjoint());
}

void require_dim(std::size_t dim) {
    if (dim == 0) {
        throw DimensionError("random sampling requires dim >= 1");
    }
}

}  // namespace

std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t index) {
    std::uint64_t z = seed + 0x9E3779B97F4A7C15ULL * (index + 1);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

ComplexMatrix random_psd(std::size_t dim, Rng &rng) {
    require_dim(dim);
    auto n = static_cast<Eigen::Index>(dim);
    Eigen::MatrixXcd g = ginibre(n, n, rng);
    return ComplexMatrix(g * g.adjoint());
}

ComplexMatrix random_density(std::size_t dim, Rng &rng) {
    ComplexMatrix p = random_psd(dim, rng);
    return p * Complex(1.0 / p.trace().real());
}

ComplexMatrix random_effect(std::size_t dim, Rng &rng) {
    require_dim(dim);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    Eigen::VectorXd spectrum(static_cast<Eigen::Index>(dim));
    for (auto &x : spectrum) {
        x = unit(rng);
    }
    return with_spectrum(spectrum, rng);
}

ComplexMatrix random_unitary(std::size_t dim, Rng &rng) {
    require_dim(dim);
    auto n = static_cast<Eigen::Index>(dim);
    return ComplexMatrix(haar_isometry(n, n, rng));
}

ComplexMatrix random_hermitian_contraction(std::size_t dim, Rng &rng) {
    require_dim(dim);
    std::uniform_real_distribution<double> sym(-1.0, 1.0);
    Eigen::VectorXd spectrum(static_cast<Eigen::Index>(dim));
    for (auto &x : spectrum) {
        x = sym(rng);
    }
    return with_spectrum(spectrum, rng);
}

Eigen::VectorXcd random_pure_vector(std::size_t dim, Rng &rng) {
    require_dim(dim);
    Eigen::VectorXcd v = ginibre(static_cast<Eigen::Index>(dim), 1, rng).col(0);
    return v / v.norm();
}

std::vector<ComplexMatrix> random_kraus(std::size_t dim, std::size_t count, Rng &rng) {
    require_dim(dim);
    if (count == 0) {
        throw DomainError("random_kraus: need at least one Kraus operator");
    }
    auto n = static_cast<Eigen::Index>(dim);
    auto k = static_cast<Eigen::Index>(count);
    Eigen::MatrixXcd v = haar_isometry(k * n, n, rng);
    std::vector<ComplexMatrix> ops;
    ops.reserve(count);
    for (Eigen::Index i = 0; i < k; i++) {
        ops.emplace_back(v.block(i * n, 0, n, n));
    }
    return ops;
}

ComplexMatrix sample_random(SampleKind kind, std::size_t dim, std::uint64_t seed) {
    Rng rng(seed);
    switch (kind) {
        case SampleKind::density:
            return random_density(dim, rng);
        case SampleKind::effect:
            return random_effect(dim, rng);
        case SampleKind::unitary:
            return random_unitary(dim, rng);
        case SampleKind::hermitian_contraction:
            return random_hermitian_contraction(dim, rng);
    }
    throw DomainError("sample_random: unknown kind");
}

}  // namespace qwp
