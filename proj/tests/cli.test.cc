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

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <sys/wait.h>

#include "commands.h"
#include "gtest/gtest.h"
#include "qwp/json_io.h"

using namespace qwp;
namespace fs = std::filesystem;

namespace {

struct Result {
    int status;
    std::string out;
    std::string err;
};

class Cli : public ::testing::Test {
   protected:
    fs::path dir;

    void SetUp() override {
        dir = fs::temp_directory_path() /
              ("qwp_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir);
        fs::create_directories(dir);
    }
    void TearDown() override {
        fs::remove_all(dir);
    }

    std::string write(const std::string &name, const std::string &text) {
        auto p = (dir / name).string();
        std::ofstream(p) << text;
        return p;
    }
    std::string write(const std::string &name, const json &j) {
        return write(name, j.dump());
    }
    static std::string read(const std::string &path) {
        std::stringstream s;
        s << std::ifstream(path).rdbuf();
        return s.str();
    }

    Result run(std::vector<std::string> args, const char *env_seed = nullptr) {
        args.insert(args.begin(), "qwp");
        std::vector<const char *> argv;
        for (const auto &a : args) {
            argv.push_back(a.c_str());
        }
        std::stringstream out, err;
        int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err, env_seed);
        return {status, out.str(), err.str()};
    }
};

const Complex I1(0, 1);

Predicate z_predicate() {
    return Predicate(OutcomeSpace({"0", "1"}), {ComplexMatrix::diagonal({1, 0}), ComplexMatrix::diagonal({0, 1})});
}

ComplexMatrix pauli_x() {
    return ComplexMatrix::from_rows({{0, 1}, {1, 0}});
}

}  // namespace

TEST_F(Cli, validate_status_codes) {
    auto good = run({"validate", write("z.json", to_json(z_predicate()))});
    EXPECT_EQ(good.status, 0);
    EXPECT_EQ(good.err, "");
    EXPECT_EQ(json::parse(good.out)["ok"], true);

    auto over = Predicate(
        OutcomeSpace({"a", "b"}), {ComplexMatrix::identity(2) * Complex(0.7), ComplexMatrix::identity(2) * Complex(0.7)});
    auto bad = run({"validate", write("over.json", to_json(over))});
    EXPECT_EQ(bad.status, 2);
    auto report = json::parse(bad.out);
    EXPECT_EQ(report["ok"], false);
    ASSERT_EQ(report["violations"].size(), 1u);
    EXPECT_NE(report["violations"][0]["message"].get<std::string>().find("F_total <= I"), std::string::npos);
    EXPECT_NE(report["violations"][0]["message"].get<std::string>().find("1.4"), std::string::npos);

    auto truncated = run({"validate", write("t.json", std::string("{\"atoms\": [\"a\",\n  \"b\""))});
    EXPECT_EQ(truncated.status, 1);
    EXPECT_NE(truncated.err.find(":2:"), std::string::npos) << truncated.err;

    EXPECT_EQ(run({"validate", (dir / "missing.json").string()}).status, 1);
    EXPECT_EQ(run({"validate", write("odd.json", std::string("[1, 2]"))}).status, 1);
}

TEST_F(Cli, validate_programs_and_triples) {
    auto t = run({"validate", write("t.json", to_json(transpose_program(2))), "--samples", "200"});
    EXPECT_EQ(t.status, 0);
    EXPECT_EQ(json::parse(t.out)["program"]["positivity"]["verdict"], "no_counterexample");

    json lossy{{"dim", 2}, {"repr", "super"}, {"payload", to_json(ComplexMatrix::identity(4) * Complex(0.5))}};
    auto l = run({"validate", write("l.json", lossy)});
    EXPECT_EQ(l.status, 2);
    EXPECT_EQ(json::parse(l.out)["program"]["trace_preserving"], false);

    HoareTriple triple(z_predicate(), identity_program(2), z_predicate());
    EXPECT_EQ(run({"validate", write("tr.json", to_json(triple))}).status, 0);
}

TEST_F(Cli, wp_identity_returns_input) {
    Rng rng(3);
    auto f = random_predicate(3, 3, false, rng);
    auto out = (dir / "w.json").string();
    auto r = run({"wp", write("id.json", to_json(identity_program(3))), write("f.json", to_json(f)), "--out", out});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "");
    EXPECT_EQ(r.err, "");
    auto w = predicate_from_json(json::parse(read(out)));
    for (std::size_t i = 0; i < 3; i++) {
        EXPECT_LE(max_abs_diff(w.effect(i), f.effect(i)), 1e-12);
    }
    auto report = json::parse(read(out + ".report.json"));
    EXPECT_EQ(report["duality"]["states"], 100);
    EXPECT_LE(report["duality"]["max_residual"].get<double>(), 1e-10);
    EXPECT_EQ(report["input_complete"], false);
    EXPECT_EQ(report["output_complete"], false);
    EXPECT_EQ(report["positivity"]["verdict"], "certified_cp");
    EXPECT_EQ(report["seed"], cli::kDefaultSeed);
    EXPECT_EQ(report["tolerances"]["eig_tol"], 1e-9);
}

TEST_F(Cli, wp_depolarizing_worked_example) {
    auto out = (dir / "w.json").string();
    json dep{{"dim", 2}, {"repr", "named"}, {"payload", {{"name", "depolarizing"}, {"p", 0.5}}}};
    auto r = run({"wp", write("d.json", dep), write("z.json", to_json(z_predicate())), "--out", out});
    ASSERT_EQ(r.status, 0) << r.err;
    auto w = predicate_from_json(json::parse(read(out)));
    EXPECT_LE(max_abs_diff(w.effect("0"), ComplexMatrix::diagonal({0.75, 0.25})), 1e-12);
    EXPECT_LE(max_abs_diff(w.effect("1"), ComplexMatrix::diagonal({0.25, 0.75})), 1e-12);
    EXPECT_EQ(json::parse(read(out + ".report.json"))["output_complete"], true);
}

TEST_F(Cli, wp_transpose_transposes_effects) {
    auto e = ComplexMatrix::from_rows({{0.5, 0.25 + 0.25 * I1}, {0.25 - 0.25 * I1, 0.5}});
    Predicate f(OutcomeSpace({"a", "b"}), {e, ComplexMatrix::identity(2) - e});
    auto out = (dir / "w.json").string();
    auto r = run({"wp", write("t.json", to_json(transpose_program(2))), write("f.json", to_json(f)), "--out", out});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.err, "");
    auto w = predicate_from_json(json::parse(read(out)));
    EXPECT_LE(max_abs_diff(w.effect("a"), e.transpose()), 1e-12);
    auto report = json::parse(read(out + ".report.json"));
    EXPECT_EQ(report["completely_positive"], false);
    EXPECT_EQ(report["positivity"]["verdict"], "no_counterexample");
    EXPECT_EQ(report["warnings"].size(), 1u);
}

TEST_F(Cli, wp_dim_mismatch_names_both_dims) {
    auto r = run(
        {"wp",
         write("p.json", to_json(identity_program(3))),
         write("z.json", to_json(z_predicate())),
         "--out",
         (dir / "w.json").string()});
    EXPECT_EQ(r.status, 2);
    EXPECT_NE(r.err.find("program dim 3"), std::string::npos) << r.err;
    EXPECT_NE(r.err.find("predicate dim 2"), std::string::npos) << r.err;
    EXPECT_FALSE(fs::exists(dir / "w.json"));
}

TEST_F(Cli, verify_status_codes) {
    auto holds = run({"verify", write("a.json", to_json(HoareTriple(z_predicate(), identity_program(2), z_predicate())))});
    EXPECT_EQ(holds.status, 0);
    EXPECT_EQ(holds.err, "");
    EXPECT_EQ(json::parse(holds.out)["verdict"], "holds");

    auto flip = run({"verify", write("b.json", to_json(HoareTriple(z_predicate(), unitary_program(pauli_x()), z_predicate())))});
    EXPECT_EQ(flip.status, 3);
    auto report = json::parse(flip.out);
    EXPECT_EQ(report["verdict"], "fails");
    auto witness = matrix_from_json(report["witness"]["state"]);
    EXPECT_LE(max_abs_diff(witness, ComplexMatrix::diagonal({1, 0})), 1e-12);

    json mismatched = to_json(HoareTriple(z_predicate(), identity_program(2), z_predicate()));
    mismatched["post"]["atoms"] = {"up", "down"};
    mismatched["post"]["effects"] = {{"up", mismatched["post"]["effects"]["0"]}, {"down", mismatched["post"]["effects"]["1"]}};
    EXPECT_EQ(run({"verify", write("c.json", mismatched)}).status, 2);

    EXPECT_EQ(run({"verify", write("d.json", std::string("{\"pre\": "))}).status, 1);
}

TEST_F(Cli, sat_weights) {
    auto r = run({"sat", write("rho.json", to_json(DensityState::maximally_mixed(2).matrix())), write("z.json", to_json(z_predicate()))});
    ASSERT_EQ(r.status, 0) << r.err;
    auto j = json::parse(r.out);
    EXPECT_EQ(j["weights"]["0"], 0.5);
    EXPECT_EQ(j["total"], 1.0);
    EXPECT_EQ(j["satisfied"], true);

    auto m = run({"sat", write("rho3.json", to_json(DensityState::maximally_mixed(3).matrix())), write("z2.json", to_json(z_predicate()))});
    EXPECT_EQ(m.status, 2);
}

TEST_F(Cli, properties_and_seeds) {
    auto a = run({"properties", "--suite", "orders", "--dims", "2,3", "--samples", "20", "--seed", "17"});
    ASSERT_EQ(a.status, 0) << a.err;
    EXPECT_EQ(a.err, "");
    auto j = json::parse(a.out);
    EXPECT_EQ(j["seed"], 17);
    EXPECT_EQ(j["passed"], true);
    EXPECT_EQ(j["campaigns"][0]["suite"], "orders");

    auto b = run({"properties", "--suite", "orders", "--dims", "2,3", "--samples", "20"}, "17");
    EXPECT_EQ(a.out, b.out);
    auto c = run({"properties", "--suite", "orders", "--dims", "2,3", "--samples", "20"});
    EXPECT_EQ(json::parse(c.out)["seed"], cli::kDefaultSeed);

    EXPECT_EQ(run({"properties", "--dims", "2,7"}).status, 2);
    EXPECT_EQ(run({"properties", "--dims", "1"}).status, 2);
    EXPECT_EQ(run({"properties", "--suite", "bogus"}).status, 1);
    EXPECT_EQ(run({"properties"}, "not-a-number").status, 1);
    EXPECT_EQ(run({"properties", "--samples", "0"}).status, 2);
}

TEST_F(Cli, properties_all_writes_out_file) {
    auto out = (dir / "r.json").string();
    auto r = run({"properties", "--suite", "all", "--dims", "2", "--samples", "20", "--out", out});
    ASSERT_EQ(r.status, 0) << r.err;
    EXPECT_EQ(r.out, "");
    auto j = json::parse(read(out));
    EXPECT_EQ(j["campaigns"].size(), 4u);
    auto again = run({"properties", "--suite", "all", "--dims", "2", "--samples", "20", "--out", out + "2"});
    EXPECT_EQ(read(out), read(out + "2"));
}

TEST_F(Cli, round_trip_through_wp_output) {
    Rng rng(9);
    auto c = random_cp_program(3, rng);
    auto f = random_predicate(3, 2, true, rng);
    auto out = (dir / "w.json").string();
    ASSERT_EQ(run({"wp", write("c.json", to_json(c)), write("f.json", to_json(f)), "--out", out}).status, 0);
    auto text = read(out);
    auto w = predicate_from_json(json::parse(text));
    EXPECT_EQ(to_json(w).dump(2) + "\n", text);
    auto direct = wp(c, f);
    for (std::size_t i = 0; i < 2; i++) {
        EXPECT_LE(max_abs_diff(w.effect(i), direct.effect(i)), 1e-15);
    }
}

TEST_F(Cli, binary_keeps_stderr_quiet_on_success) {
    auto z = write("z.json", to_json(z_predicate()));
    auto err = (dir / "err.txt").string();
    std::string cmd = std::string(QWP_CLI_PATH) + " validate " + z + " > /dev/null 2> " + err;
    int raw = std::system(cmd.c_str());
    ASSERT_NE(raw, -1);
    EXPECT_EQ(WEXITSTATUS(raw), 0);
    EXPECT_EQ(read(err), "");

    std::string env_cmd = "QWP_SEED=5 " + std::string(QWP_CLI_PATH) + " verify " +
                          write("t.json", to_json(HoareTriple(z_predicate(), unitary_program(pauli_x()), z_predicate()))) +
                          " > " + (dir / "v.json").string() + " 2> " + err;
    raw = std::system(env_cmd.c_str());
    EXPECT_EQ(WEXITSTATUS(raw), 3);
    EXPECT_EQ(json::parse(read((dir / "v.json").string()))["seed"], 5);
}
