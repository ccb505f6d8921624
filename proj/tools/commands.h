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

#ifndef QWP_TOOLS_COMMANDS_H
#define QWP_TOOLS_COMMANDS_H

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "qwp/tolerance.h"

namespace qwp::cli {

/// Exit statuses shared by every command.
enum Status : int {
    ok = 0,
    io_or_parse = 1,
    semantic = 2,
    check_failed = 3,
};

/// Seed used when neither --seed nor QWP_SEED is given.
constexpr std::uint64_t kDefaultSeed = 20260101;

/// Everything that determines a command's output. Two runs with equal
/// manifests write byte-identical files.
struct RunManifest {
    std::string command;
    std::vector<std::string> inputs;
    ToleranceConfig tol;
    std::uint64_t seed = kDefaultSeed;
    std::optional<std::string> out;
};

int cmd_validate(const RunManifest &m, std::ostream &out, std::ostream &err);
int cmd_wp(const RunManifest &m, std::ostream &out, std::ostream &err);
int cmd_verify(const RunManifest &m, std::ostream &out, std::ostream &err);
int cmd_sat(const RunManifest &m, std::ostream &out, std::ostream &err);
/// `suite` is one of duality, weakest, compose, orders, all.
int cmd_properties(
    const RunManifest &m,
    const std::string &suite,
    const std::vector<std::size_t> &dims,
    std::ostream &out,
    std::ostream &err);

/// Parses argv and dispatches. `env_seed` stands in for QWP_SEED.
int run(int argc, const char *const *argv, std::ostream &out, std::ostream &err, const char *env_seed);

}  // namespace qwp::cli

#endif  // QWP_TOOLS_COMMANDS_H
