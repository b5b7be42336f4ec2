#pragma once

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "nodalcodes/bounds.hpp"
#include "nodalcodes/classify.hpp"
#include "nodalcodes/evencode.hpp"
#include "nodalcodes/nodal.hpp"
#include "nodalcodes/symmetroid.hpp"

namespace nodalcodes {

// JSON file formats. Every parser throws DataError on schema violations.
//
//   node file:   { "degree": 4, "field": "rational" | {"prime": 101},
//                  "surface": "<polynomial>" (optional), "nodes": [["1","0","1/2","0"], ...] }
//   code file:   { "mu": 12, "generators": [{"parity": "weak", "support": [0, 1, 2, 3, 4, 5]}] }
//   matrix file: { "prime": 101, "upper_triangle": ["x + 2*y", ...ten linear forms...] }

/// Reads and parses a JSON document; missing or malformed files throw DataError.
nlohmann::json read_json_file(const std::filesystem::path& path);
/// Whole file as text; throws DataError if it cannot be read.
std::string read_text_file(const std::filesystem::path& path);

NodeConfiguration parse_node_configuration(const nlohmann::json& j);
nlohmann::json to_json(const NodeConfiguration& cfg);

EvenSetCode parse_code(const nlohmann::json& j);
nlohmann::json to_json(const EvenSetCode& code);

SymmetricLinearMatrix parse_symmetric_matrix(const nlohmann::json& j);
nlohmann::json to_json(const SymmetricLinearMatrix& a);

nlohmann::json to_json(const DefectReport& r);
nlohmann::json to_json(const BoundReport& r);
nlohmann::json to_json(const ClassificationTable& t);
nlohmann::json weight_enumerator_json(const EvenSetCode& code);
nlohmann::json points_json(std::span<const FpPoint> points);

std::string hex_bytes(std::span<const std::uint8_t> bytes);

}  // namespace nodalcodes
