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

#ifndef QWP_JSON_IO_H
#define QWP_JSON_IO_H

#include <nlohmann/json.hpp>

#include "qwp/campaigns.h"
#include "qwp/matrix.h"
#include "qwp/predicate.h"
#include "qwp/program.h"
#include "qwp/state.h"
#include "qwp/tolerance.h"
#include "qwp/wp.h"

// File formats. All matrices are row-major IEEE-754 doubles:
//
//   matrix     {"dim": d, "re": [[...], ...], "im": [[...], ...]}
//   predicate  {"atoms": ["a", ...], "effects": {"a": <matrix>, ...}}
//   sat        {"weights": {"a": w, ...}, "satisfied": bool}
//   program    {"dim": d, "repr": "kraus" | "super" | "choi" | "named",
//               "payload": ..., "label": str}
//                kraus  payload: [<matrix>, ...]
//                super  payload: <matrix> (d^2 x d^2, column-stacking vec)
//                choi   payload: <matrix> (d^2 x d^2, sum_ij C(|i><j|) (x) |i><j|)
//                named  payload: {"name": "identity" | "transpose"}
//                                {"name": "depolarizing", "p": x}
//                                {"name": "amplitude_damping", "gamma": x}
//   triple     {"pre": <predicate>, "prog": <program>, "post": <predicate>}
//
// Readers throw FormatError for structurally wrong input; semantic errors
// (mismatched dims, non-TP Choi, ...) surface as the library's own errors.

namespace qwp {

using json = nlohmann::json;

json to_json(const ComplexMatrix &m);
ComplexMatrix matrix_from_json(const json &j);

json to_json(const Predicate &p);
Predicate predicate_from_json(const json &j);

json to_json(const SatMeasure &s);

json to_json(const QuantumProgram &c);
QuantumProgram program_from_json(const json &j, const ToleranceConfig &tol = {});

json to_json(const HoareTriple &t);
HoareTriple triple_from_json(const json &j, const ToleranceConfig &tol = {});

DensityState state_from_json(const json &j, const ToleranceConfig &tol = {});

json to_json(const ToleranceConfig &tol);
json to_json(const ValidationReport &r);
json to_json(const PositivityVerdict &v);
json to_json(const VerificationReport &r);
json to_json(const WeakestReport &r);
json to_json(const CampaignReport &r);

}  // namespace qwp

#endif  // QWP_JSON_IO_H
