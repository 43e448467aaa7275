// Copyright 2026 The lieplateau authors
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

#include <string>
#include <variant>

#include "lieplateau/dla.hpp"
#include "lieplateau/ideals.hpp"
#include "lieplateau/mixing.hpp"
#include "lieplateau/simulator.hpp"
#include "lieplateau/variance.hpp"

// vendor header is exposed as "json.hpp"
#include "json.hpp"

namespace lieplateau {

/// Thrown on malformed input files; the CLI maps it to the parse-error code.
struct ParseError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Operator text format: a header line `skew` or `hermitian`, then one term
/// per line as `<real coefficient> <pauli string over {I,X,Y,Z}>`.
/// Lines starting with `#` are comments.
using OperatorFile = std::variant<SkewOp, HermitianOp>;
OperatorFile parse_operator_text(const std::string& text);
OperatorFile load_operator_file(const std::string& path);
std::string format_operator_text(const SkewOp& a);
std::string format_operator_text(const HermitianOp& o);

nlohmann::json basis_to_json(const PauliDlaBasis& basis, const StructureData& s);
void basis_from_json(const nlohmann::json& j, PauliDlaBasis& basis, StructureData& s);

nlohmann::json ideals_to_json(const IdealDecomposition& dec);
IdealDecomposition ideals_from_json(const nlohmann::json& j);

nlohmann::json ansatz_to_json(const AnsatzSpec& spec);
AnsatzSpec ansatz_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VarianceReport& rep);
nlohmann::json estimate_to_json(const McEstimate& est);
nlohmann::json walk_to_json(const MomentWalk& walk, const StableRankReport& ranks);

/// State specs: "uniform", "hamming:K" (canonical pattern), or a literal
/// bitstring like "0101" (char 0 is qubit 1).
InitialState parse_state_spec(const std::string& spec, std::uint32_t n_qubits);

/// Compound observable specs: "hz:i,j" for (Z_i - Z_j)/4, "z:i" for Z_i/4,
/// "proj:<bitstring>" for a rank-one basis projector.
Observable parse_observable_spec(const std::string& spec, std::uint32_t n_qubits);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

}  // namespace lieplateau
