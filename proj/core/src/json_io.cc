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

#include "qwp/json_io.h"

#include <string>

#include "qwp/error.h"

namespace qwp {

namespace {

const json &field(const json &j, const char *key, const char *what) {
    if (!j.is_object()) {
        throw FormatError(std::string(what) + ": expected a JSON object");
    }
    auto it = j.find(key);
    if (it == j.end()) {
        throw FormatError(std::string(what) + ": missing field '" + key + "'");
    }
    return *it;
}

double number(const json &j, const char *what) {
    if (!j.is_number()) {
        throw FormatError(std::string(what) + ": expected a number");
    }
    return j.get<double>();
}

std::size_t positive_int(const json &j, const char *what) {
    if (!j.is_number_integer() || j.get<long long>() < 1) {
        throw FormatError(std::string(what) + ": expected a positive integer");
    }
    return j.get<std::size_t>();
}

std::string string_field(const json &j, const char *key, const char *what) {
    const json &v = field(j, key, what);
    if (!v.is_string()) {
        throw FormatError(std::string(what) + ": field '" + key + "' must be a string");
    }
    return v.get<std::string>();
}

json vector_to_json(const Eigen::VectorXcd &v) {
    json re = json::array();
    json im = json::array();
    for (Eigen::Index k = 0; k < v.size(); k++) {
        re.push_back(v(k).real());
        im.push_back(v(k).imag());
    }
    return {{"re", re}, {"im", im}};
}

json atom_map(const OutcomeSpace &space, const std::vector<double> &values) {
    json out = json::object();
    for (std::size_t k = 0; k < space.size(); k++) {
        out[space.atoms()[k]] = values[k];
    }
    return out;
}

}  // namespace

json to_json(const ComplexMatrix &m) {
    json re = json::array();
    json im = json::array();
    for (std::size_t r = 0; r < m.dim(); r++) {
        json rr = json::array();
        json ii = json::array();
        for (std::size_t c = 0; c < m.dim(); c++) {
            rr.push_back(m(r, c).real());
            ii.push_back(m(r, c).imag());
        }
        re.push_back(std::move(rr));
        im.push_back(std::move(ii));
    }
    return {{"dim", m.dim()}, {"re", std::move(re)}, {"im", std::move(im)}};
}

ComplexMatrix matrix_from_json(const json &j) {
    std::size_t d = positive_int(field(j, "dim", "matrix"), "matrix.dim");
    const json &re = field(j, "re", "matrix");
    const json &im = field(j, "im", "matrix");
    auto check_rows = [d](const json &rows, const char *name) {
        if (!rows.is_array() || rows.size() != d) {
            throw FormatError(std::string("matrix.") + name + ": expected " + std::to_string(d) + " rows");
        }
        for (const auto &row : rows) {
            if (!row.is_array() || row.size() != d) {
                throw FormatError(std::string("matrix.") + name + ": expected rows of length " + std::to_string(d));
            }
        }
    };
    check_rows(re, "re");
    check_rows(im, "im");
    auto n = static_cast<Eigen::Index>(d);
    Eigen::MatrixXcd m(n, n);
    for (std::size_t r = 0; r < d; r++) {
        for (std::size_t c = 0; c < d; c++) {
            m(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                Complex(number(re[r][c], "matrix.re"), number(im[r][c], "matrix.im"));
        }
    }
    return ComplexMatrix(std::move(m));
}

json to_json(const Predicate &p) {
    json effects = json::object();
    for (std::size_t k = 0; k < p.space().size(); k++) {
        effects[p.space().atoms()[k]] = to_json(p.effect(k));
    }
    return {{"atoms", p.space().atoms()}, {"effects", std::move(effects)}};
}

Predicate predicate_from_json(const json &j) {
    const json &atoms = field(j, "atoms", "predicate");
    const json &effects = field(j, "effects", "predicate");
    if (!atoms.is_array()) {
        throw FormatError("predicate.atoms: expected an array of labels");
    }
    if (!effects.is_object()) {
        throw FormatError("predicate.effects: expected an object keyed by atom label");
    }
    std::vector<std::string> labels;
    for (const auto &a : atoms) {
        if (!a.is_string()) {
            throw FormatError("predicate.atoms: labels must be strings");
        }
        labels.push_back(a.get<std::string>());
    }
    if (effects.size() != labels.size()) {
        throw FormatError("predicate.effects: expected exactly one effect per atom");
    }
    std::vector<ComplexMatrix> mats;
    for (const auto &label : labels) {
        auto it = effects.find(label);
        if (it == effects.end()) {
            throw FormatError("predicate.effects: missing effect for atom '" + label + "'");
        }
        mats.push_back(matrix_from_json(*it));
    }
    return Predicate(OutcomeSpace(std::move(labels)), std::move(mats));
}

json to_json(const SatMeasure &s) {
    return {{"weights", atom_map(s.space, s.weights)}, {"satisfied", s.satisfied}};
}

json to_json(const QuantumProgram &c) {
    json out{{"dim", c.dim()}, {"label", c.label()}};
    if (c.kraus()) {
        json ops = json::array();
        for (const auto &k : *c.kraus()) {
            ops.push_back(to_json(k));
        }
        out["repr"] = "kraus";
        out["payload"] = std::move(ops);
    } else {
        out["repr"] = "super";
        out["payload"] = to_json(c.super());
    }
    return out;
}

QuantumProgram program_from_json(const json &j, const ToleranceConfig &tol) {
    std::size_t d = positive_int(field(j, "dim", "program"), "program.dim");
    std::string repr = string_field(j, "repr", "program");
    const json &payload = field(j, "payload", "program");
    std::string label;
    if (j.contains("label")) {
        label = string_field(j, "label", "program");
    }

    if (repr == "kraus") {
        if (!payload.is_array() || payload.empty()) {
            throw FormatError("program.payload: kraus payload must be a non-empty array of matrices");
        }
        std::vector<ComplexMatrix> ops;
        for (const auto &m : payload) {
            ops.push_back(matrix_from_json(m));
        }
        return build_program(KrausSource{std::move(ops)}, d, tol, label);
    }
    if (repr == "super") {
        return build_program(SuperSource{matrix_from_json(payload)}, d, tol, label);
    }
    if (repr == "choi") {
        return build_program(ChoiSource{matrix_from_json(payload)}, d, tol, label);
    }
    if (repr == "named") {
        std::string name = string_field(payload, "name", "program.payload");
        NamedProgram named;
        if (name == "identity") {
            named = IdentityMap{};
        } else if (name == "transpose") {
            named = TransposeMap{};
        } else if (name == "depolarizing") {
            named = Depolarizing{number(field(payload, "p", "program.payload"), "program.payload.p")};
        } else if (name == "amplitude_damping") {
            named = AmplitudeDamping{number(field(payload, "gamma", "program.payload"), "program.payload.gamma")};
        } else {
            throw FormatError("program.payload: unknown named program '" + name + "'");
        }
        return build_program(named, d, tol, label);
    }
    throw FormatError("program.repr: expected kraus, super, choi or named, got '" + repr + "'");
}

json to_json(const HoareTriple &t) {
    return {{"pre", to_json(t.pre)}, {"prog", to_json(t.prog)}, {"post", to_json(t.post)}};
}

HoareTriple triple_from_json(const json &j, const ToleranceConfig &tol) {
    return HoareTriple(
        predicate_from_json(field(j, "pre", "triple")),
        program_from_json(field(j, "prog", "triple"), tol),
        predicate_from_json(field(j, "post", "triple")));
}

DensityState state_from_json(const json &j, const ToleranceConfig &tol) {
    return DensityState(matrix_from_json(j), tol);
}

json to_json(const ToleranceConfig &tol) {
    return {{"eig_tol", tol.eig_tol}, {"residual_tol", tol.residual_tol}, {"sample_count", tol.sample_count}};
}

json to_json(const ValidationReport &r) {
    json violations = json::array();
    for (const auto &v : r.violations) {
        violations.push_back({{"atom", v.atom ? json(*v.atom) : json(nullptr)}, {"message", v.message}});
    }
    return {{"ok", r.ok()}, {"violations", std::move(violations)}};
}

json to_json(const PositivityVerdict &v) {
    json out{{"verdict", to_string(v.kind)}, {"samples", v.samples}, {"min_eigenvalue", v.min_eigenvalue}};
    if (v.counterexample) {
        out["counterexample"] = vector_to_json(*v.counterexample);
    }
    return out;
}

json to_json(const VerificationReport &r) {
    json out{
        {"verdict", to_string(r.verdict)},
        {"residuals", atom_map(r.space, r.residuals)},
        {"margins", atom_map(r.space, r.margins)},
        {"seed", r.seed},
        {"tolerances", to_json(r.tol)},
    };
    if (r.witness) {
        out["witness"] = {
            {"atom", r.space.atoms()[r.witness->atom]},
            {"state", to_json(r.witness->state.matrix())},
            {"lhs", r.witness->lhs},
            {"rhs", r.witness->rhs},
        };
    } else {
        out["witness"] = nullptr;
    }
    return out;
}

json to_json(const WeakestReport &r) {
    return {
        {"trials", r.trials},
        {"all_dominated", r.all_dominated},
        {"membership", r.membership},
        {"failures", r.failures},
        {"max_sampled_excess", r.max_sampled_excess},
        {"seed", r.seed},
    };
}

json to_json(const CampaignReport &r) {
    return {
        {"suite", r.suite},
        {"dims", r.dims},
        {"seed", r.seed},
        {"trials", r.trials},
        {"failures", r.failures},
        {"passed", r.passed()},
        {"metrics", r.metrics},
    };
}

}  // namespace qwp
