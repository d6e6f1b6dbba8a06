// Copyright 2026 The qdiscord Authors
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

#include "qdiscord/discord.hpp"
#include "qdiscord/measurements.hpp"
#include "qdiscord/stategen.hpp"
#include "qdiscord/states.hpp"
#include "qdiscord/theorems.hpp"

#include <json.hpp>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace qdiscord {

/// Malformed or invalid input file; the message names the offending location.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complex matrices are nested arrays of [re, im] pairs, row-major.
nlohmann::json matrix_to_json(const ComplexMatrix& m);
ComplexMatrix matrix_from_json(const nlohmann::json& j, const std::string& where);
nlohmann::json vector_to_json(const ComplexVector& v);

/// {"dims":[dA,dB],"matrix":[[[re,im],...],...]}, A index major.
nlohmann::json state_to_json(const DensityMatrix& rho);
DensityMatrix state_from_json(const nlohmann::json& j);

/// {"dim":d,"effects":[matrix,...]}
nlohmann::json povm_to_json(const Povm& p);
Povm povm_from_json(const nlohmann::json& j);

nlohmann::json dilation_to_json(const NeumarkDilation& d);

nlohmann::json genspec_to_json(const GenSpec& s);
GenSpec genspec_from_json(const nlohmann::json& j);

nlohmann::json config_to_json(const OptimizerConfig& c);
nlohmann::json verdict_to_json(const TheoremVerdict& v);
nlohmann::json measurement_to_json(const Measurement& m);

std::string read_file(const std::string& path);
/// Writes through a temporary file in the same directory, then renames.
void write_file_atomic(const std::string& path, const std::string& contents);
nlohmann::json parse_json(const std::string& text, const std::string& source);

/// FNV-1a 64-bit digest, hex encoded.
std::string digest(const std::string& bytes);

}  // namespace qdiscord
