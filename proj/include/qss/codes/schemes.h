// Copyright 2026 The QSS Authors
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

#pragma once

#include <json.hpp>

#include "qss/codes/code_spec.h"

namespace qss {

/// The shared, lazily built scheme (thread-safe initialization).
const CodeSpec& get_code(Scheme scheme);

/// Builds a stabilizer scheme from its bundle entry: parses the encoder,
/// derives the syndrome generators and a table for every correctable
/// erasure of up to "max_erasure" qubits, and loads the stored tables.
CodeSpec build_stabilizer_code(Scheme scheme, const nlohmann::json& entry);
CodeSpec build_qutrit_code();

/// Subset whose decoder is used when `erased` has no table of its own: the
/// first stored table of the same size.
QubitList canonical_decoder_subset(const CodeSpec& code, const QubitList& erased);

}  // namespace qss
