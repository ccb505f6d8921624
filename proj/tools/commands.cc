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

#include "commands.h"

#include <charconv>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "qwp/campaigns.h"
#include "qwp/error.h"
#include "qwp/json_io.h"

namespace qwp::cli {

namespace {

constexpr std::size_t kDualityStates = 100;
constexpr std::size_t kMaxDim = 6;

/// Unreadable input, unwritable output or malformed JSON text.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

std::pair<std::size_t, std::size_t> line_column(const std::string &text, std::size_t byte) {
    std::size_t line = 1;
    std::size_t column = 1;
    for (std::size_t k = 0; k + 1 < byte && k < text.size(); k++) {
        if (text[k] == '\n') {
            line++;
            column = 1;
        } else {
            column++;
        }
    }
    return {line, column};
}

json load(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw InputError(path + ": cannot open for reading");
    }
    std::stringstream buffer;
    buffer << in.rdbuf();
    std::string text = buffer.str();
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        auto [line, column] = line_column(text, e.byte);
        throw InputError(
            path + ":" + std::to_string(line) + ":" + std::to_string(column) + ": malformed JSON (" + e.what() +
            ")");
    }
}

void write_file(const std::string &path, const json &j) {
    std::ofstream f(path, std::ios::binary | std::ios::trunc);
    if (!f) {
        throw InputError(path + ": cannot open for writing");
    }
    f << j.dump(2) << '\n';
    if (!f) {
        throw InputError(path + ": write failed");
    }
}

void emit(const RunManifest &m, const json &j, std::ostream &out) {
    if (m.out) {
        write_file(*m.out, j);
    } else {
        out << j.dump(2) << '\n';
    }
}

json manifest_json(const RunManifest &m) {
    return {{"command", m.command}, {"inputs", m.inputs}, {"seed", m.seed}, {"tolerances", to_json(m.tol)}};
}

/// Runs `body`, translating failures into the exit-status contract.
int guarded(const std::function<int()> &body, std::ostream &err) {
    try {
        return body();
    } catch (const InputError &e) {
        err << "error: " << e.what() << '\n';
        return io_or_parse;
    } catch (const FormatError &e) {
        err << "error: malformed input: " << e.what() << '\n';
        return io_or_parse;
    } catch (const json::exception &e) {
        err << "error: malformed input: " << e.what() << '\n';
        return io_or_parse;
    } catch (const Error &e) {
        err << "error: " << e.what() << '\n';
        return semantic;
    }
}

void require_inputs(const RunManifest &m, std::size_t n) {
    if (m.inputs.size() != n) {
        throw InputError(m.command + ": expected " + std::to_string(n) + " input path(s)");
    }
}

json validate_program(const QuantumProgram &c, const RunManifest &m, bool &ok) {
    bool tp = is_trace_preserving(c, m.tol);
    auto verdict = is_positive_sampled(c, m.tol, m.seed);
    ok = tp && verdict.kind != PositivityVerdict::Kind::counterexample;
    return {
        {"dim", c.dim()},
        {"trace_preserving", tp},
        {"positivity", to_json(verdict)},
        {"ok", ok},
    };
}

}  // namespace

int cmd_validate(const RunManifest &m, std::ostream &out, std::ostream &err) {
    return guarded(
        [&] {
            m.tol.validate();
            require_inputs(m, 1);
            json j = load(m.inputs[0]);
            json report = manifest_json(m);
            bool ok = true;
            if (j.is_object() && j.contains("atoms")) {
                auto p = predicate_from_json(j);
                auto v = validate_predicate(p, m.tol);
                ok = v.ok();
                report["kind"] = "predicate";
                report["dim"] = p.dim();
                report["complete"] = ok && is_complete(p, m.tol);
                report["violations"] = to_json(v)["violations"];
            } else if (j.is_object() && j.contains("repr")) {
                auto c = program_from_json(j, m.tol);
                report["kind"] = "program";
                report["program"] = validate_program(c, m, ok);
            } else if (j.is_object() && j.contains("prog")) {
                auto t = triple_from_json(j, m.tol);
                auto pre = validate_predicate(t.pre, m.tol);
                auto post = validate_predicate(t.post, m.tol);
                bool prog_ok = true;
                report["kind"] = "triple";
                report["pre"] = to_json(pre);
                report["post"] = to_json(post);
                report["prog"] = validate_program(t.prog, m, prog_ok);
                ok = pre.ok() && post.ok() && prog_ok;
            } else {
                throw FormatError("expected a predicate, program or triple object");
            }
            report["ok"] = ok;
            emit(m, report, out);
            return ok ? Status::ok : semantic;
        },
        err);
}

int cmd_wp(const RunManifest &m, std::ostream &out, std::ostream &err) {
    (void)out;
    return guarded(
        [&] {
            m.tol.validate();
            require_inputs(m, 2);
            if (!m.out) {
                throw InputError("wp: --out PATH is required");
            }
            auto c = program_from_json(load(m.inputs[0]), m.tol);
            auto f = predicate_from_json(load(m.inputs[1]));
            if (c.dim() != f.dim()) {
                throw DimensionError(
                    "dimension mismatch: program dim " + std::to_string(c.dim()) + ", predicate dim " +
                    std::to_string(f.dim()));
            }
            auto audited = wp_audited(c, f, m.tol, m.seed);

            Rng rng(derive_seed(m.seed, 1));
            double max_residual = 0;
            for (std::size_t k = 0; k < kDualityStates; k++) {
                DensityState rho(random_density(c.dim(), rng), m.tol);
                for (double r : duality_residual(c, f, rho, m.tol)) {
                    max_residual = std::max(max_residual, r);
                }
            }

            json report = manifest_json(m);
            report["duality"] = {{"states", kDualityStates}, {"max_residual", max_residual}};
            report["input_complete"] = is_complete(f, m.tol);
            report["output_complete"] = is_complete(audited.result, m.tol);
            report["completely_positive"] = is_completely_positive(c, m.tol);
            report["positivity"] = to_json(audited.positivity);
            report["warnings"] = audited.warnings;

            write_file(*m.out, to_json(audited.result));
            write_file(*m.out + ".report.json", report);
            return Status::ok;
        },
        err);
}

int cmd_verify(const RunManifest &m, std::ostream &out, std::ostream &err) {
    return guarded(
        [&] {
            m.tol.validate();
            require_inputs(m, 1);
            auto t = triple_from_json(load(m.inputs[0]), m.tol);
            auto r = verify_triple(t, m.tol, m.seed);
            json report = manifest_json(m);
            report.update(to_json(r));
            emit(m, report, out);
            return r.holds() ? Status::ok : check_failed;
        },
        err);
}

int cmd_sat(const RunManifest &m, std::ostream &out, std::ostream &err) {
    return guarded(
        [&] {
            m.tol.validate();
            require_inputs(m, 2);
            auto rho = state_from_json(load(m.inputs[0]), m.tol);
            auto p = predicate_from_json(load(m.inputs[1]));
            if (rho.dim() != p.dim()) {
                throw DimensionError(
                    "dimension mismatch: state dim " + std::to_string(rho.dim()) + ", predicate dim " +
                    std::to_string(p.dim()));
            }
            auto s = sat(rho, p, m.tol);
            json report = manifest_json(m);
            report.update(to_json(s));
            report["total"] = s.total();
            emit(m, report, out);
            return Status::ok;
        },
        err);
}

int cmd_properties(
    const RunManifest &m,
    const std::string &suite,
    const std::vector<std::size_t> &dims,
    std::ostream &out,
    std::ostream &err) {
    return guarded(
        [&] {
            m.tol.validate();
            if (dims.empty()) {
                throw DomainError("properties: --dims must name at least one dimension");
            }
            for (auto d : dims) {
                if (d < 2 || d > kMaxDim) {
                    throw DomainError(
                        "properties: dimension " + std::to_string(d) + " outside [2, " + std::to_string(kMaxDim) +
                        "]");
                }
            }
            std::vector<Suite> suites;
            if (suite == "all") {
                suites = {Suite::duality, Suite::weakest, Suite::compose, Suite::orders};
            } else {
                for (auto s : {Suite::duality, Suite::weakest, Suite::compose, Suite::orders}) {
                    if (suite == to_string(s)) {
                        suites.push_back(s);
                    }
                }
                if (suites.empty()) {
                    throw DomainError("properties: unknown suite '" + suite + "'");
                }
            }

            json report = manifest_json(m);
            report["suite"] = suite;
            report["dims"] = dims;
            json campaigns = json::array();
            bool passed = true;
            for (auto s : suites) {
                auto r = run_campaign(s, dims, m.seed, m.tol);
                passed = passed && r.passed();
                campaigns.push_back(to_json(r));
            }
            report["campaigns"] = std::move(campaigns);
            report["passed"] = passed;
            emit(m, report, out);
            return passed ? Status::ok : check_failed;
        },
        err);
}

int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err, const char *env_seed) {
    CLI::App app{"qwp: weakest preconditions for quantum predicates and programs"};
    app.require_subcommand(1);
    app.fallthrough();

    RunManifest m;
    std::optional<std::uint64_t> seed;
    std::optional<std::string> out_path;
    std::string suite = "all";
    std::vector<std::size_t> dims{2, 3, 4};

    app.add_option("--seed", seed, "Seed for every sampled quantity (default: $QWP_SEED, then a fixed constant)");
    app.add_option("--eig-tol", m.tol.eig_tol, "Eigenvalue tolerance for PSD and order checks");
    app.add_option("--residual-tol", m.tol.residual_tol, "Tolerance for identities that should hold exactly");
    app.add_option("--samples", m.tol.sample_count, "Sample count for sampled checks and campaigns");
    app.add_option("--out", out_path, "Output path");

    auto *validate = app.add_subcommand("validate", "Check a predicate, program or triple file");
    validate->add_option("path", m.inputs)->required()->expected(1);
    auto *wp_cmd = app.add_subcommand("wp", "Write wp(program, predicate) to --out, with a .report.json sidecar");
    wp_cmd->add_option("paths", m.inputs, "PROGRAM PREDICATE")->required()->expected(2);
    auto *verify = app.add_subcommand("verify", "Check a Hoare triple file");
    verify->add_option("path", m.inputs)->required()->expected(1);
    auto *sat_cmd = app.add_subcommand("sat", "Satisfaction weights of a state for a predicate");
    sat_cmd->add_option("paths", m.inputs, "STATE PREDICATE")->required()->expected(2);
    auto *properties = app.add_subcommand("properties", "Run seeded property campaigns");
    properties->add_option("--suite", suite)
        ->check(CLI::IsMember({"duality", "weakest", "compose", "orders", "all"}));
    properties->add_option("--dims", dims)->delimiter(',');

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        return app.exit(e, out, err) == 0 ? Status::ok : io_or_parse;
    }

    if (seed) {
        m.seed = *seed;
    } else if (env_seed != nullptr && *env_seed != '\0') {
        std::string_view s(env_seed);
        auto [end, ec] = std::from_chars(s.data(), s.data() + s.size(), m.seed);
        if (ec != std::errc() || end != s.data() + s.size()) {
            err << "error: QWP_SEED is not an unsigned integer: " << s << '\n';
            return io_or_parse;
        }
    }
    m.out = out_path;
    m.command = app.get_subcommands().front()->get_name();

    if (m.command == "validate") {
        return cmd_validate(m, out, err);
    }
    if (m.command == "wp") {
        return cmd_wp(m, out, err);
    }
    if (m.command == "verify") {
        return cmd_verify(m, out, err);
    }
    if (m.command == "sat") {
        return cmd_sat(m, out, err);
    }
    return cmd_properties(m, suite, dims, out, err);
}

}  // namespace qwp::cli
