#include "hardy/model_io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "hardy/errors.hpp"

namespace hardy {
namespace {

using nlohmann::json;

ComplexAmplitude complex_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
    throw InvalidModelError(where + ": expected a [re, im] pair");
  }
  return {j[0].get<double>(), j[1].get<double>()};
}

Qubit vector_from(const json& j, const std::string& where) {
  if (!j.is_array() || j.size() != 2) {
    throw InvalidModelError(where + ": expected a 2-component vector");
  }
  return {complex_from(j[0], where + "[0]"), complex_from(j[1], where + "[1]")};
}

const json& lookup(const json& doc, const std::string& side, const std::string& key) {
  const std::string dotted = side + "." + key;
  if (doc.contains(dotted)) return doc.at(dotted);
  if (doc.contains(side) && doc.at(side).is_object() && doc.at(side).contains(key)) {
    return doc.at(side).at(key);
  }
  throw InvalidModelError("model file is missing `" + dotted + "`");
}

MeasurementBasis basis_from(const json& doc, const std::string& side, const std::string& key) {
  const std::string where = side + "." + key;
  const json& rows = lookup(doc, side, key);
  if (!rows.is_array() || rows.size() != 2) {
    throw InvalidModelError(where + ": expected a 2x2 matrix (plus row, minus row)");
  }
  return MeasurementBasis(vector_from(rows[0], where + " plus"),
                          vector_from(rows[1], where + " minus"));
}

}  // namespace

HardyModel parse_model(std::string_view document) {
  json doc;
  try {
    doc = json::parse(document);
  } catch (const json::parse_error& e) {
    throw InvalidModelError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("amplitudes")) {
    throw InvalidModelError("model file is missing `amplitudes`");
  }
  const json& amps = doc.at("amplitudes");
  if (!amps.is_array() || amps.size() != 4) {
    throw InvalidModelError("`amplitudes` must hold 4 [re, im] pairs (order 00, 01, 10, 11)");
  }
  std::array<ComplexAmplitude, 4> a{};
  for (std::size_t i = 0; i < 4; ++i) a[i] = complex_from(amps[i], "amplitudes[" + std::to_string(i) + "]");

  BipartiteState state(a);
  ExperimentConfig config{{basis_from(doc, "left", "basis1"), basis_from(doc, "left", "basis2")},
                          {basis_from(doc, "right", "basis1"), basis_from(doc, "right", "basis2")}};
  return {state, config};
}

HardyModel load_model(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModelError("cannot open model file " + path.string());
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

}  // namespace hardy
