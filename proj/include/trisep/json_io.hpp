// Copyright 2026 The trisep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <string>

#include "json.hpp"
#include "trisep/faces.hpp"
#include "trisep/linalg.hpp"
#include "trisep/pptlab.hpp"
#include "trisep/verify.hpp"
#include "trisep/xstate.hpp"

namespace trisep::json_io {

using nlohmann::json;

/// {"dim": n, "re": [[...]], "im": [[...]]}, row-major.
json matrix_to_json(const ComplexMatrix& m);

/// Inverse of matrix_to_json. Throws MalformedInput if fields are missing,
/// ragged, non-numeric, or disagree with "dim".
ComplexMatrix matrix_from_json(const json& j);

json xstate_to_json(const XState& x);
json certificate_to_json(const DecompositionCertificate& cert);
json segment_to_json(const SegmentResult& seg);
json report_to_json(const Report& report);

}  // namespace trisep::json_io
