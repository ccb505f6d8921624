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

#include "qwp/program.h"

#include <cmath>
#include <limits>
#include <numbers>

#include "qwp/error.h"
#include "qwp/random.h"

namespace qwp {

namespace {

using Eigen::Index;

Index idx(std::size_t k) {
    return static_cast<Index>(k);
}

std::size_t square_root_dim(std::size_t n) {
    auto d = static_cast<std::size_t>(std::llround(std::sqrt(static_cast<double>(n))));
    if (d * d != n) {
        throw DimensionError("superoperator size " + std::to_string(n) + " is not a perfect square");
    }
    return d;
}

ComplexMatrix super_from_kraus(const std::vector<ComplexMatrix> &ops) {
    if (ops.empty()) {
        throw DomainError("Kraus list must be non-empty");
    }
    std::size_t d = ops.front().dim();
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(idx(d * d), idx(d * d));
    for (const auto &k : ops) {
        if (k.dim() != d) {
            throw DimensionError("Kraus operators have mixed dimensions");
        }
        s += kron(k.conjugate(), k).eigen();
    }
    return ComplexMatrix(std::move(s));
}

void require_dim(std::size_t got, std::size_t want, const char *what) {
    if (got != want) {
        throw DimensionError(
            std::string(what) + ": dimension " + std::to_string(got) + " does not match program dimension " +
            std::to_string(want));
    }
}

// X^a Z^b on C^d.
ComplexMatrix weyl(std::size_t d, std::size_t a, std::size_t b) {
    Eigen::MatrixXcd w = Eigen::MatrixXcd::Zero(idx(d), idx(d));
    for (std::size_t k = 0; k < d; k++) {
        double phase = 2 * std::numbers::pi * static_cast<double>(b * k) / static_cast<double>(d);
        w(idx((k + a) % d), idx(k)) = std::polar(1.0, phase);
    }
    return ComplexMatrix(std::move(w));
}

Eigen::VectorXcd fourier_vector(std::size_t d, std::size_t k) {
    Eigen::VectorXcd v(idx(d));
    for (std::size_t j = 0; j < d; j++) {
        double phase = 2 * std::numbers::pi * static_cast<double>(j * k) / static_cast<double>(d);
        v(idx(j)) = std::polar(1.0 / std::sqrt(static_cast<double>(d)), phase);
    }
    return v;
}

struct NamedBuilder {
    std::size_t dim;

    QuantumProgram operator()(const IdentityMap &) const {
        return identity_program(dim);
    }
    QuantumProgram operator()(const TransposeMap &) const {
        return transpose_program(dim);
    }
    QuantumProgram operator()(const Depolarizing &dep) const {
        return depolarizing(dep.p, dim);
    }
    QuantumProgram operator()(const AmplitudeDamping &ad) const {
        require_dim(dim, 2, "amplitude_damping");
        return amplitude_damping(ad.gamma);
    }
};

}  // namespace

Eigen::VectorXcd vectorize(const ComplexMatrix &m) {
    std::size_t d = m.dim();
    Eigen::VectorXcd v(idx(d * d));
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t i = 0; i < d; i++) {
            v(idx(j * d + i)) = m(i, j);
        }
    }
    return v;
}

ComplexMatrix devectorize(const Eigen::VectorXcd &v) {
    std::size_t d = square_root_dim(static_cast<std::size_t>(v.size()));
    Eigen::MatrixXcd m(idx(d), idx(d));
    for (std::size_t j = 0; j < d; j++) {
        for (std::size_t i = 0; i < d; i++) {
            m(idx(i), idx(j)) = v(idx(j * d + i));
        }
    }
    return ComplexMatrix(std::move(m));
}

QuantumProgram::QuantumProgram(
    ComplexMatrix super, std::optional<std::vector<ComplexMatrix>> kraus, std::string label)
    : dim_(square_root_dim(super.dim())), super_(std::move(super)), kraus_(std::move(kraus)), label_(std::move(label)) {
    if (kraus_) {
        if (kraus_->empty()) {
            throw DomainError("Kraus list must be non-empty");
        }
        for (const auto &k : *kraus_) {
            require_dim(k.dim(), dim_, "Kraus operator");
        }
    }
}

ComplexMatrix QuantumProgram::apply_operator(const ComplexMatrix &m) const {
    require_dim(m.dim(), dim_, "operand");
    return devectorize(super_.eigen() * vectorize(m));
}

QuantumProgram identity_program(std::size_t dim) {
    return QuantumProgram(ComplexMatrix::identity(dim * dim), std::vector{ComplexMatrix::identity(dim)}, "identity");
}

QuantumProgram transpose_program(std::size_t dim) {
    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(idx(dim * dim), idx(dim * dim));
    for (std::size_t i = 0; i < dim; i++) {
        for (std::size_t j = 0; j < dim; j++) {
            s(idx(j * dim + i), idx(i * dim + j)) = 1.0;
        }
    }
    return QuantumProgram(ComplexMatrix(std::move(s)), std::nullopt, "transpose");
}

QuantumProgram depolarizing(double p, std::size_t dim) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw DomainError("depolarizing: p must lie in [0, 1]");
    }
    if (dim == 0) {
        throw DimensionError("depolarizing: dim must be >= 1");
    }
    double d = static_cast<double>(dim);
    // Closed form: (1 - p) id + (p / d) |vec I><vec I|.
    Eigen::VectorXcd vec_i = vectorize(ComplexMatrix::identity(dim));
    Eigen::MatrixXcd s = (1.0 - p) * Eigen::MatrixXcd::Identity(idx(dim * dim), idx(dim * dim)) +
                         (p / d) * vec_i * vec_i.adjoint();

    std::vector<ComplexMatrix> ops;
    for (std::size_t a = 0; a < dim; a++) {
        for (std::size_t b = 0; b < dim; b++) {
            double w = (a == 0 && b == 0) ? 1.0 - p + p / (d * d) : p / (d * d);
            ops.push_back(weyl(dim, a, b) * Complex(std::sqrt(w)));
        }
    }
    return QuantumProgram(ComplexMatrix(std::move(s)), std::move(ops), "depolarizing");
}

QuantumProgram amplitude_damping(double gamma) {
    if (!(gamma >= 0.0 && gamma <= 1.0)) {
        throw DomainError("amplitude_damping: gamma must lie in [0, 1]");
    }
    std::vector<ComplexMatrix> ops{
        ComplexMatrix::from_rows({{1.0, 0.0}, {0.0, std::sqrt(1.0 - gamma)}}),
        ComplexMatrix::from_rows({{0.0, std::sqrt(gamma)}, {0.0, 0.0}}),
    };
    return kraus_program(std::move(ops), "amplitude_damping");
}

QuantumProgram unitary_program(const ComplexMatrix &u, const ToleranceConfig &tol) {
    if (max_abs_diff(u.adjoint() * u, ComplexMatrix::identity(u.dim())) > tol.residual_tol) {
        throw DomainError("unitary source is not unitary");
    }
    return kraus_program({u}, "unitary");
}

QuantumProgram kraus_program(std::vector<ComplexMatrix> ops, std::string label) {
    ComplexMatrix s = super_from_kraus(ops);
    return QuantumProgram(std::move(s), std::move(ops), std::move(label));
}

QuantumProgram build_program(
    const ProgramSource &source, std::size_t dim, const ToleranceConfig &tol, std::string label) {
    QuantumProgram out = std::visit(
        [&](const auto &src) -> QuantumProgram {
            using T = std::decay_t<decltype(src)>;
            if constexpr (std::is_same_v<T, KrausSource>) {
                if (src.ops.empty()) {
                    throw DomainError("Kraus list must be non-empty");
                }
                require_dim(src.ops.front().dim(), dim, "Kraus operator");
                return kraus_program(src.ops);
            } else if constexpr (std::is_same_v<T, UnitarySource>) {
                require_dim(src.u.dim(), dim, "unitary");
                return unitary_program(src.u, tol);
            } else if constexpr (std::is_same_v<T, ChoiSource>) {
                require_dim(src.choi.dim(), dim * dim, "Choi matrix");
                // Tracing out the output factor must give the identity.
                Eigen::MatrixXcd partial = Eigen::MatrixXcd::Zero(idx(dim), idx(dim));
                for (std::size_t a = 0; a < dim; a++) {
                    partial += src.choi.eigen().block(idx(a * dim), idx(a * dim), idx(dim), idx(dim));
                }
                double dev = (partial - Eigen::MatrixXcd::Identity(idx(dim), idx(dim))).cwiseAbs().maxCoeff();
                if (dev > tol.residual_tol) {
                    throw TracePreservationError(
                        "Choi matrix is not trace preserving: output partial trace differs from I by " +
                        std::to_string(dev));
                }
                return QuantumProgram(choi_to_super(src.choi), std::nullopt, "choi");
            } else if constexpr (std::is_same_v<T, SuperSource>) {
                require_dim(src.super.dim(), dim * dim, "superoperator");
                return QuantumProgram(src.super, std::nullopt, "super");
            } else {
                return std::visit(NamedBuilder{dim}, src);
            }
        },
        source);
    if (label.empty()) {
        return out;
    }
    return QuantumProgram(out.super(), out.kraus(), std::move(label));
}

DensityState apply(const QuantumProgram &c, const DensityState &rho, const ToleranceConfig &tol) {
    require_dim(rho.dim(), c.dim(), "state");
    ComplexMatrix out = c.apply_operator(rho.matrix());
    double tr = out.trace().real();
    if (std::abs(tr - 1.0) > tol.residual_tol) {
        throw TracePreservationError("program '" + c.label() + "' changed the trace to " + std::to_string(tr));
    }
    ToleranceConfig loose = tol;
    loose.eig_tol = 10 * tol.eig_tol;
    if (!is_hermitian(out, tol) || min_eigenvalue(out, tol) < -loose.eig_tol) {
        throw PositivityError("program '" + c.label() + "' mapped a state outside the state space");
    }
    return DensityState(std::move(out), loose);
}

QuantumProgram adjoint(const QuantumProgram &c) {
    std::optional<std::vector<ComplexMatrix>> ops;
    if (c.kraus()) {
        ops.emplace();
        for (const auto &k : *c.kraus()) {
            ops->push_back(k.adjoint());
        }
    }
    return QuantumProgram(c.super().adjoint(), std::move(ops), "adjoint(" + c.label() + ")");
}

ComplexMatrix kraus_adjoint_apply(const QuantumProgram &c, const ComplexMatrix &f) {
    if (!c.kraus()) {
        throw DomainError("program '" + c.label() + "' has no Kraus representation");
    }
    require_dim(f.dim(), c.dim(), "operand");
    Eigen::MatrixXcd acc = Eigen::MatrixXcd::Zero(idx(c.dim()), idx(c.dim()));
    for (const auto &k : *c.kraus()) {
        acc += k.eigen().adjoint() * f.eigen() * k.eigen();
    }
    return ComplexMatrix(std::move(acc));
}

bool is_trace_preserving(const QuantumProgram &c, const ToleranceConfig &tol) {
    ComplexMatrix id = ComplexMatrix::identity(c.dim());
    return max_abs_diff(adjoint(c).apply_operator(id), id) <= tol.residual_tol;
}

ComplexMatrix to_choi(const QuantumProgram &c) {
    std::size_t d = c.dim();
    const auto &s = c.super().eigen();
    Eigen::MatrixXcd j(idx(d * d), idx(d * d));
    // J(a d + i, b d + j) = C(|i><j|)_{ab} = S(b d + a, j d + i).
    for (std::size_t a = 0; a < d; a++) {
        for (std::size_t i = 0; i < d; i++) {
            for (std::size_t b = 0; b < d; b++) {
                for (std::size_t jj = 0; jj < d; jj++) {
                    j(idx(a * d + i), idx(b * d + jj)) = s(idx(b * d + a), idx(jj * d + i));
                }
            }
        }
    }
    return ComplexMatrix(std::move(j));
}

ComplexMatrix choi_to_super(const ComplexMatrix &choi) {
    std::size_t d = square_root_dim(choi.dim());
    const auto &j = choi.eigen();
    Eigen::MatrixXcd s(idx(d * d), idx(d * d));
    for (std::size_t a = 0; a < d; a++) {
        for (std::size_t i = 0; i < d; i++) {
            for (std::size_t b = 0; b < d; b++) {
                for (std::size_t jj = 0; jj < d; jj++) {
                    s(idx(b * d + a), idx(jj * d + i)) = j(idx(a * d + i), idx(b * d + jj));
                }
            }
        }
    }
    return ComplexMatrix(std::move(s));
}

bool is_completely_positive(const QuantumProgram &c, const ToleranceConfig &tol) {
    return is_psd(to_choi(c), tol);
}

const char *to_string(PositivityVerdict::Kind kind) {
    switch (kind) {
        case PositivityVerdict::Kind::certified_cp:
            return "certified_cp";
        case PositivityVerdict::Kind::no_counterexample:
            return "no_counterexample";
        case PositivityVerdict::Kind::counterexample:
            return "counterexample";
    }
    return "unknown";
}

PositivityVerdict is_positive_sampled(const QuantumProgram &c, const ToleranceConfig &tol, std::uint64_t seed) {
    PositivityVerdict verdict;
    verdict.kind = PositivityVerdict::Kind::no_counterexample;
    std::size_t d = c.dim();
    ComplexMatrix choi = to_choi(c);
    if (is_hermitian(choi, tol)) {
        double lo = min_eigenvalue(choi, tol);
        if (lo >= -tol.eig_tol) {
            verdict.kind = PositivityVerdict::Kind::certified_cp;
            verdict.min_eigenvalue = lo;
            return verdict;
        }
    }

    verdict.min_eigenvalue = std::numeric_limits<double>::infinity();
    auto check = [&](const Eigen::VectorXcd &psi) {
        verdict.samples++;
        ComplexMatrix out = c.apply_operator(ComplexMatrix::outer(psi));
        double lo = is_hermitian(out, tol) ? min_eigenvalue(out, tol) : -std::numeric_limits<double>::infinity();
        verdict.min_eigenvalue = std::min(verdict.min_eigenvalue, lo);
        if (lo < -tol.eig_tol) {
            verdict.kind = PositivityVerdict::Kind::counterexample;
            verdict.counterexample = psi;
            return true;
        }
        return false;
    };

    for (std::size_t k = 0; k < d; k++) {
        Eigen::VectorXcd e = Eigen::VectorXcd::Zero(idx(d));
        e(idx(k)) = 1.0;
        if (check(e)) {
            return verdict;
        }
    }
    for (std::size_t k = 0; k < d; k++) {
        if (check(fourier_vector(d, k))) {
            return verdict;
        }
    }
    Rng rng(seed);
    for (std::size_t n = 0; n < tol.sample_count; n++) {
        if (check(random_pure_vector(d, rng))) {
            return verdict;
        }
    }
    return verdict;
}

QuantumProgram seq(const QuantumProgram &c1, const QuantumProgram &c2) {
    require_dim(c2.dim(), c1.dim(), "seq");
    std::optional<std::vector<ComplexMatrix>> ops;
    if (c1.kraus() && c2.kraus()) {
        ops.emplace();
        for (const auto &k2 : *c2.kraus()) {
            for (const auto &k1 : *c1.kraus()) {
                ops->push_back(k2 * k1);
            }
        }
    }
    return QuantumProgram(c2.super() * c1.super(), std::move(ops), "seq(" + c1.label() + ", " + c2.label() + ")");
}

QuantumProgram mix(double weight, const QuantumProgram &c1, const QuantumProgram &c2) {
    if (!(weight >= 0.0 && weight <= 1.0)) {
        throw DomainError("mix: weight must lie in [0, 1]");
    }
    require_dim(c2.dim(), c1.dim(), "mix");
    std::optional<std::vector<ComplexMatrix>> ops;
    if (c1.kraus() && c2.kraus()) {
        ops.emplace();
        if (weight > 0) {
            for (const auto &k : *c1.kraus()) {
                ops->push_back(k * Complex(std::sqrt(weight)));
            }
        }
        if (weight < 1) {
            for (const auto &k : *c2.kraus()) {
                ops->push_back(k * Complex(std::sqrt(1.0 - weight)));
            }
        }
    }
    return QuantumProgram(
        c1.super() * Complex(weight) + c2.super() * Complex(1.0 - weight),
        std::move(ops),
        "mix(" + c1.label() + ", " + c2.label() + ")");
}

QuantumProgram measure_branch(
    const std::vector<ComplexMatrix> &instrument,
    const std::vector<QuantumProgram> &branches,
    const ToleranceConfig &tol) {
    if (instrument.empty() || instrument.size() != branches.size()) {
        throw DomainError("measure_branch: need one branch per instrument operator");
    }
    std::size_t d = instrument.front().dim();
    Eigen::MatrixXcd completeness = Eigen::MatrixXcd::Zero(idx(d), idx(d));
    for (std::size_t m = 0; m < instrument.size(); m++) {
        require_dim(instrument[m].dim(), d, "instrument operator");
        require_dim(branches[m].dim(), d, "branch");
        completeness += instrument[m].eigen().adjoint() * instrument[m].eigen();
    }
    if ((completeness - Eigen::MatrixXcd::Identity(idx(d), idx(d))).cwiseAbs().maxCoeff() > tol.residual_tol) {
        throw DomainError("measure_branch: instrument is incomplete (sum M^dagger M != I)");
    }

    Eigen::MatrixXcd s = Eigen::MatrixXcd::Zero(idx(d * d), idx(d * d));
    bool all_kraus = true;
    std::vector<ComplexMatrix> ops;
    for (std::size_t m = 0; m < instrument.size(); m++) {
        s += branches[m].super().eigen() * kron(instrument[m].conjugate(), instrument[m]).eigen();
        if (branches[m].kraus()) {
            for (const auto &k : *branches[m].kraus()) {
                ops.push_back(k * instrument[m]);
            }
        } else {
            all_kraus = false;
        }
    }
    std::optional<std::vector<ComplexMatrix>> kraus;
    if (all_kraus) {
        kraus = std::move(ops);
    }
    return QuantumProgram(ComplexMatrix(std::move(s)), std::move(kraus), "measure_branch");
}

}  // namespace qwp
