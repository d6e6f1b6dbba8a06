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

#include "qdiscord/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>

namespace qdiscord {

using nlohmann::json;

namespace {

Complex complex_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InputError(where + ": expected [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Dims dims_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty integer array");
  Dims dims;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_number_integer() || j[i].get<long long>() < 1) {
      throw InputError(where + "[" + std::to_string(i) + "]: expected a positive integer");
    }
    dims.push_back(j[i].get<Eigen::Index>());
  }
  return dims;
}

const json& field(const json& j, const char* key, const std::string& where) {
  if (!j.is_object() || !j.contains(key)) throw InputError(where + ": missing field '" + key + "'");
  return j.at(key);
}

/// Names the worst non-Hermitian entry so the diagnostic points at the file.
std::string hermiticity_hint(const ComplexMatrix& m) {
  double worst = 0.0;
  Eigen::Index wi = 0, wj = 0;
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      const double e = std::abs(m(i, j) - std::conj(m(j, i)));
      if (e > worst) {
        worst = e;
        wi = i;
        wj = j;
      }
    }
  std::ostringstream os;
  os << "matrix[" << wi << "][" << wj << "] and matrix[" << wj << "][" << wi << "] are not conjugate (off by "
     << worst << ")";
  return os.str();
}

}  // namespace

json matrix_to_json(const ComplexMatrix& m) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back({m(i, j).real(), m(i, j).imag()});
    rows.push_back(std::move(row));
  }
  return rows;
}

json vector_to_json(const ComplexVector& v) {
  json out = json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back({v(i).real(), v(i).imag()});
  return out;
}

ComplexMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw InputError(where + ": expected a non-empty array of rows");
  const auto rows = static_cast<Eigen::Index>(j.size());
  if (!j[0].is_array()) throw InputError(where + "[0]: expected a row array");
  const auto cols = static_cast<Eigen::Index>(j[0].size());
  ComplexMatrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i) {
    const std::string rw = where + "[" + std::to_string(i) + "]";
    const json& row = j[static_cast<std::size_t>(i)];
    if (!row.is_array() || static_cast<Eigen::Index>(row.size()) != cols) {
      throw InputError(rw + ": expected " + std::to_string(cols) + " entries");
    }
    for (Eigen::Index c = 0; c < cols; ++c) {
      m(i, c) = complex_from_json(row[static_cast<std::size_t>(c)], rw + "[" + std::to_string(c) + "]");
    }
  }
  return m;
}

json state_to_json(const DensityMatrix& rho) { return json{{"dims", rho.dims()}, {"matrix", matrix_to_json(rho.matrix())}}; }

DensityMatrix state_from_json(const json& j) {
  const Dims dims = dims_from_json(field(j, "dims", "state"), "dims");
  const ComplexMatrix m = matrix_from_json(field(j, "matrix", "state"), "matrix");
  if (m.rows() != m.cols()) throw InputError("matrix: not square");
  if (hermiticity_residual(m) > 1e-9) throw InputError("matrix: not Hermitian; " + hermiticity_hint(m));
  try {
    return DensityMatrix(m, dims);
  } catch (const PreconditionError& e) {
    throw InputError(std::string("state: ") + e.what());
  }
}

json povm_to_json(const Povm& p) {
  json effects = json::array();
  for (const auto& m : p.effects()) effects.push_back(matrix_to_json(m));
  return json{{"dim", p.dim()}, {"effects", effects}};
}

Povm povm_from_json(const json& j) {
  const json& d = field(j, "dim", "povm");
  if (!d.is_number_integer() || d.get<long long>() < 1) throw InputError("dim: expected a positive integer");
  const auto dim = d.get<Eigen::Index>();
  const json& effects = field(j, "effects", "povm");
  if (!effects.is_array() || effects.empty()) throw InputError("effects: expected a non-empty array");
  std::vector<ComplexMatrix> ms;
  for (std::size_t i = 0; i < effects.size(); ++i) {
    const std::string where = "effects[" + std::to_string(i) + "]";
    ComplexMatrix m = matrix_from_json(effects[i], where);
    if (m.rows() != dim || m.cols() != dim) throw InputError(where + ": expected a " + std::to_string(dim) + "x" + std::to_string(dim) + " matrix");
    ms.push_back(std::move(m));
  }
  try {
    return Povm(std::move(ms));
  } catch (const PreconditionError& e) {
    throw InputError(std::string("povm: ") + e.what());
  }
}

json dilation_to_json(const NeumarkDilation& d) {
  json projectors = json::array();
  for (const auto& p : d.ancilla_projectors.projectors()) projectors.push_back(matrix_to_json(p));
  return json{{"dim_a", d.unitary.rows() / d.ancilla_dim},
              {"ancilla_dim", d.ancilla_dim},
              {"unitary", matrix_to_json(d.unitary)},
              {"ancilla_state", vector_to_json(d.ancilla_state.amplitudes())},
              {"ancilla_projectors", projectors}};
}

json genspec_to_json(const GenSpec& s) {
  return json{{"family", to_string(s.family)}, {"dims", s.dims},       {"block_dims", s.block_dims},
              {"weights", s.weights},          {"schmidt_weights", s.schmidt_weights},
              {"rank", s.rank},                {"bell_pair", s.bell_pair}, {"seed", s.seed}};
}

GenSpec genspec_from_json(const json& j) {
  if (!j.is_object()) throw InputError("genspec: expected an object");
  GenSpec s;
  try {
    s.family = family_from_string(field(j, "family", "genspec").get<std::string>());
    s.dims = dims_from_json(field(j, "dims", "genspec"), "dims");
    if (j.contains("block_dims")) s.block_dims = j.at("block_dims").get<std::vector<Eigen::Index>>();
    if (j.contains("weights")) s.weights = j.at("weights").get<std::vector<double>>();
    if (j.contains("schmidt_weights")) s.schmidt_weights = j.at("schmidt_weights").get<std::vector<double>>();
    if (j.contains("rank")) s.rank = j.at("rank").get<Eigen::Index>();
    if (j.contains("bell_pair")) s.bell_pair = j.at("bell_pair").get<bool>();
    if (j.contains("seed")) s.seed = j.at("seed").get<std::uint64_t>();
  } catch (const json::exception& e) {
    throw InputError(std::string("genspec: ") + e.what());
  } catch (const PreconditionError& e) {
    throw InputError(std::string("genspec: ") + e.what());
  }
  return s;
}

json config_to_json(const OptimizerConfig& c) {
  return json{{"seed", c.seed},
              {"starts", c.starts},
              {"max_iterations", c.max_iterations},
              {"function_tolerance", c.function_tolerance}};
}

json verdict_to_json(const TheoremVerdict& v) {
  json q = json::object();
  for (const auto& [k, x] : v.quantities) q[k] = x;
  return json{{"theorem", v.theorem_id},
              {"outcome", to_string(v.outcome)},
              {"passed", v.passed},
              {"max_discrepancy", v.max_discrepancy},
              {"tolerance", v.tolerance_used},
              {"quantities", q},
              {"note", v.note}};
}

json measurement_to_json(const Measurement& m) {
  if (const auto* pm = std::get_if<ProjectiveMeasurement>(&m)) {
    json ps = json::array();
    for (const auto& p : pm->projectors()) ps.push_back(matrix_to_json(p));
    return json{{"kind", "projective"}, {"projectors", ps}};
  }
  json out = povm_to_json(std::get<Povm>(m));
  out["kind"] = "povm";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot open '" + path + "'");
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

void write_file_atomic(const std::string& path, const std::string& contents) {
  const std::filesystem::path target(path);
  std::filesystem::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << contents;
    if (!out) throw InputError("write failed for '" + tmp.string() + "'");
  }
  std::filesystem::rename(tmp, target);
}

json parse_json(const std::string& text, const std::string& source) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(source + ": " + e.what());
  }
}

std::string digest(const std::string& bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

}  // namespace qdiscord
