// Copyright 2026 The nlco Authors.
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

#include "nlco/instance_io.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "json.hpp"

namespace nlco {

namespace {

using Json = nlohmann::json;

[[noreturn]] void FieldError(const std::string& path, const std::string& what) {
  throw Error(ErrorKind::kParse, "field '" + path + "': " + what);
}

const Json& Field(const Json& obj, const std::string& key,
                  const std::string& path) {
  if (!obj.is_object()) FieldError(path, "expected an object");
  auto it = obj.find(key);
  if (it == obj.end()) FieldError(path.empty() ? key : path + "." + key, "missing");
  return *it;
}

Integer ReadInteger(const Json& v, const std::string& path) {
  try {
    if (v.is_string()) return ParseInteger(v.get<std::string>());
    if (v.is_number_integer()) return ParseInteger(v.dump());
  } catch (const Error& e) {
    FieldError(path, e.what());
  }
  FieldError(path, "expected an integer (decimal string or JSON integer)");
}

std::string ReadString(const Json& v, const std::string& path) {
  if (!v.is_string()) FieldError(path, "expected a string");
  return v.get<std::string>();
}

std::size_t ReadSize(const Json& v, const std::string& path) {
  const Integer x = ReadInteger(v, path);
  if (sgn(x) < 0 || !x.fits_ulong_p()) FieldError(path, "expected a size");
  return x.get_ui();
}

IntVector ReadVector(const Json& v, const std::string& path) {
  if (!v.is_array()) FieldError(path, "expected an array");
  IntVector out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(ReadInteger(v[i], path + "[" + std::to_string(i) + "]"));
  }
  return out;
}

IntMatrix ReadMatrix(const Json& v, const std::string& path) {
  if (!v.is_array() || v.empty()) FieldError(path, "expected a non-empty array of rows");
  std::vector<IntVector> rows;
  for (std::size_t i = 0; i < v.size(); ++i) {
    rows.push_back(ReadVector(v[i], path + "[" + std::to_string(i) + "]"));
    if (rows.back().size() != rows.front().size()) {
      FieldError(path + "[" + std::to_string(i) + "]", "ragged matrix row");
    }
  }
  return IntMatrix::FromRows(rows);
}

Json WriteVector(std::span<const Integer> v) {
  Json out = Json::array();
  for (const Integer& x : v) out.push_back(x.get_str());
  return out;
}

Json WriteMatrix(const IntMatrix& m) {
  Json out = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) out.push_back(WriteVector(m.row(i)));
  return out;
}

}  // namespace

Instance parse_instance_text(std::string_view text) {
  Json doc;
  try {
    doc = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    throw Error(ErrorKind::kParse, e.what());
  }
  if (!doc.is_object()) throw Error(ErrorKind::kParse, "instance must be a JSON object");
  const std::string schema = ReadString(Field(doc, "schema", ""), "schema");
  if (schema != kInstanceSchema) {
    FieldError("schema", "unsupported '" + schema + "', expected " + kInstanceSchema);
  }

  Instance inst;
  const Json& feasible = Field(doc, "feasible", "");
  const std::string ftype = ReadString(Field(feasible, "type", "feasible"), "feasible.type");
  if (ftype == "explicit") {
    const std::size_t n = ReadSize(Field(feasible, "n", "feasible"), "feasible.n");
    const Integer beta = ReadInteger(Field(feasible, "beta", "feasible"), "feasible.beta");
    const Json& pts = Field(feasible, "points", "feasible");
    if (!pts.is_array()) FieldError("feasible.points", "expected an array");
    std::vector<IntVector> points;
    for (std::size_t k = 0; k < pts.size(); ++k) {
      points.push_back(ReadVector(pts[k], "feasible.points[" + std::to_string(k) + "]"));
    }
    inst.feasible = ExplicitFeasibleSet::Make(n, beta, std::move(points));
  } else if (ftype == "matroid-pair") {
    IntMatrix m1 = ReadMatrix(Field(feasible, "m1", "feasible"), "feasible.m1");
    IntMatrix m2 = ReadMatrix(Field(feasible, "m2", "feasible"), "feasible.m2");
    inst.feasible = VectorialMatroidPair(std::move(m1), std::move(m2));
  } else {
    FieldError("feasible.type", "unknown type '" + ftype + "'");
  }

  const Json& weights = Field(doc, "weights", "");
  const std::string wtype = ReadString(Field(weights, "type", "weights"), "weights.type");
  if (wtype == "dense") {
    inst.weights = GeneralizedUnaryWeights::Unary(
        ReadMatrix(Field(weights, "matrix", "weights"), "weights.matrix"));
    inst.dense_weights = true;
  } else if (wtype == "layers") {
    IntVector a = ReadVector(Field(weights, "a", "weights"), "weights.a");
    const Json& deltas = Field(weights, "deltas", "weights");
    if (!deltas.is_array()) FieldError("weights.deltas", "expected an array");
    std::vector<IntMatrix> layers;
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      layers.push_back(ReadMatrix(deltas[k], "weights.deltas[" + std::to_string(k) + "]"));
    }
    inst.weights = GeneralizedUnaryWeights(std::move(a), std::move(layers));
    inst.dense_weights = false;
  } else {
    FieldError("weights.type", "unknown type '" + wtype + "'");
  }

  inst.objective = ReadString(Field(doc, "objective", ""), "objective");
  const std::string sense = ReadString(Field(doc, "sense", ""), "sense");
  if (sense == "max") {
    inst.sense = Sense::kMax;
  } else if (sense == "min") {
    inst.sense = Sense::kMin;
  } else {
    FieldError("sense", "expected 'max' or 'min'");
  }
  if (auto it = doc.find("primary_objective"); it != doc.end() && !it->is_null()) {
    inst.primary_objective = ReadVector(*it, "primary_objective");
  }
  inst.validate();
  return inst;
}

Instance parse_instance(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::kParse, "cannot open instance file '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return parse_instance_text(buf.str());
  } catch (const Error& e) {
    throw Error(e.kind(), path + ": " + e.what());
  }
}

std::string serialize_instance(const Instance& instance) {
  Json doc;
  doc["schema"] = kInstanceSchema;
  Json feasible;
  if (instance.is_explicit()) {
    const ExplicitFeasibleSet& f = instance.explicit_set();
    feasible["type"] = "explicit";
    feasible["n"] = f.meta.n;
    feasible["beta"] = f.meta.beta.get_str();
    Json pts = Json::array();
    for (const IntVector& x : f.points) pts.push_back(WriteVector(x));
    feasible["points"] = std::move(pts);
  } else {
    feasible["type"] = "matroid-pair";
    feasible["m1"] = WriteMatrix(instance.pair().m1());
    feasible["m2"] = WriteMatrix(instance.pair().m2());
  }
  doc["feasible"] = std::move(feasible);

  Json weights;
  const GeneralizedUnaryWeights& w = instance.weights;
  if (instance.dense_weights && w.layers() == 1 && w.a()[0] == 1) {
    weights["type"] = "dense";
    weights["matrix"] = WriteMatrix(w.deltas()[0]);
  } else {
    weights["type"] = "layers";
    weights["a"] = WriteVector(w.a());
    Json deltas = Json::array();
    for (const IntMatrix& delta : w.deltas()) deltas.push_back(WriteMatrix(delta));
    weights["deltas"] = std::move(deltas);
  }
  doc["weights"] = std::move(weights);
  doc["objective"] = instance.objective;
  doc["sense"] = instance.sense == Sense::kMax ? "max" : "min";
  if (instance.primary_objective) {
    doc["primary_objective"] = WriteVector(*instance.primary_objective);
  }
  return doc.dump(2) + "\n";
}

std::uint64_t Fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string HexDigest(std::uint64_t value) {
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(value));
  return buf;
}

}  // namespace nlco
