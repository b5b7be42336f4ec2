#include "nodalcodes/formats.hpp"

#include <fstream>
#include <sstream>

#include "nodalcodes/errors.hpp"

namespace nodalcodes {

using nlohmann::json;

namespace {

template <typename Fn>
auto guarded(const char* what, Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw DataError(std::string("invalid ") + what + ": " + e.what());
  }
}

const json& require(const json& j, const char* key, const char* what) {
  if (!j.is_object() || !j.contains(key)) {
    throw DataError(std::string(what) + " is missing \"" + key + "\"");
  }
  return j.at(key);
}

Field parse_field(const json& j) {
  if (j.is_string()) {
    if (j.get<std::string>() == "rational") return Field::rational();
    throw DataError("unknown field \"" + j.get<std::string>() + "\"");
  }
  if (j.is_object() && j.contains("prime")) {
    const auto p = j.at("prime").get<std::int64_t>();
    if (p <= 0) throw DataError("prime must be positive");
    try {
      return Field::prime(static_cast<std::uint64_t>(p));
    } catch (const DomainError& e) {
      throw DataError(e.what());
    }
  }
  throw DataError("field must be \"rational\" or {\"prime\": p}");
}

json field_json(Field f) {
  if (f.is_rational()) return "rational";
  return json{{"prime", f.modulus()}};
}

Scalar parse_coordinate(const json& j, Field field) {
  if (j.is_string()) return parse_scalar(j.get<std::string>(), field);
  if (j.is_number_integer()) return Scalar::from_integer(field, mpz_class(std::to_string(j.get<std::int64_t>())));
  throw DataError("coordinates must be strings like \"3/4\" or integers");
}

}  // namespace

json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw DataError("cannot parse " + path.string() + ": " + e.what());
  }
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw DataError("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

NodeConfiguration parse_node_configuration(const json& j) {
  return guarded("node file", [&] {
    const int degree = require(j, "degree", "node file").get<int>();
    const Field field = j.contains("field") ? parse_field(j.at("field")) : Field::rational();
    std::optional<HomogeneousForm> surface;
    if (j.contains("surface") && !j.at("surface").is_null()) {
      surface = parse_form(j.at("surface").get<std::string>(), field);
    }
    std::vector<Point> nodes;
    for (const json& row : require(j, "nodes", "node file")) {
      if (!row.is_array() || row.size() != 4) throw DataError("each node needs exactly 4 coordinates");
      Point p;
      for (std::size_t i = 0; i < 4; ++i) p[i] = parse_coordinate(row[i], field);
      nodes.push_back(std::move(p));
    }
    return make_node_configuration(degree, field, std::move(nodes), std::move(surface));
  });
}

json to_json(const NodeConfiguration& cfg) {
  json j{{"degree", cfg.degree}, {"field", field_json(cfg.field)}};
  if (cfg.surface) j["surface"] = to_string(*cfg.surface);
  json nodes = json::array();
  for (const Point& p : cfg.nodes) {
    json row = json::array();
    for (const Scalar& c : p) row.push_back(c.to_string());
    nodes.push_back(std::move(row));
  }
  j["nodes"] = std::move(nodes);
  return j;
}

EvenSetCode parse_code(const json& j) {
  return guarded("code file", [&] {
    const auto mu = require(j, "mu", "code file").get<std::int64_t>();
    if (mu < 0) throw DataError("mu must be non-negative");
    std::vector<EvenSetWord> words;
    for (const json& g : require(j, "generators", "code file")) {
      const std::string parity = require(g, "parity", "generator").get<std::string>();
      if (parity != "weak" && parity != "strict") {
        throw DataError("parity must be \"weak\" or \"strict\", got \"" + parity + "\"");
      }
      std::vector<std::size_t> support;
      for (const json& idx : require(g, "support", "generator")) {
        const auto i = idx.get<std::int64_t>();
        if (i < 0 || i >= mu) throw DataError("support index " + std::to_string(i) + " out of range");
        support.push_back(static_cast<std::size_t>(i));
      }
      words.push_back(EvenSetWord::from_indices(static_cast<std::size_t>(mu),
                                                parity == "weak" ? Parity::weak : Parity::strict, support));
    }
    return EvenSetCode::from_generators(static_cast<std::size_t>(mu), words);
  });
}

json to_json(const EvenSetCode& code) {
  json gens = json::array();
  for (const EvenSetWord& g : code.generators()) {
    gens.push_back({{"parity", to_string(g.parity())}, {"support", g.support().indices()}});
  }
  return json{{"mu", code.mu()}, {"generators", std::move(gens)}};
}

SymmetricLinearMatrix parse_symmetric_matrix(const json& j) {
  return guarded("matrix file", [&] {
    const auto p = require(j, "prime", "matrix file").get<std::int64_t>();
    if (p <= 2 || p >= (1 << 16)) throw DataError("matrix prime out of range");
    Field field;
    try {
      field = Field::prime(static_cast<std::uint64_t>(p));
    } catch (const DomainError& e) {
      throw DataError(e.what());
    }
    std::vector<HomogeneousForm> forms;
    for (const json& entry : require(j, "upper_triangle", "matrix file")) {
      forms.push_back(parse_form(entry.get<std::string>(), field));
    }
    return SymmetricLinearMatrix::from_forms(static_cast<std::uint32_t>(p), forms);
  });
}

json to_json(const SymmetricLinearMatrix& a) {
  json entries = json::array();
  for (std::size_t k = 0; k < 10; ++k) entries.push_back(to_string(a.entry_form(k)));
  return json{{"prime", a.prime()}, {"upper_triangle", std::move(entries)}};
}

json to_json(const DefectReport& r) {
  return json{{"b", r.b},         {"mu", r.mu},       {"m_degree", r.m_degree},
              {"dim_m", r.dim_m}, {"estimate", r.estimate}, {"defect", r.d}};
}

json to_json(const BoundReport& r) {
  return json{{"b", r.b},
              {"mu", r.mu},
              {"beauville", r.beauville},
              {"beauville_form", r.printed_closed_form ? "closed" : "b2"},
              {"improved", r.improved},
              {"miyaoka_max", r.miyaoka_max},
              {"jacobian_slice_dim", r.jacobian_slice_dim}};
}

json weight_enumerator_json(const EvenSetCode& code) {
  json out = json::object();
  for (const auto& [weight, count] : weight_enumerator(code)) {
    out[std::to_string(weight)] = {{"weak", count.weak}, {"strict", count.strict}};
  }
  return out;
}

std::string hex_bytes(std::span<const std::uint8_t> bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string s;
  for (std::uint8_t b : bytes) {
    s += kDigits[b >> 4];
    s += kDigits[b & 15];
  }
  return s;
}

json to_json(const ClassificationTable& t) {
  auto entry = [](const ClassifiedCode& c) {
    return json{{"profile", c.profile},
                {"dim", c.dim},
                {"strict_dim", c.strict_dim},
                {"canonical", hex_bytes(c.canonical)},
                {"weight_enumerator", weight_enumerator_json(c.code)},
                {"code", to_json(c.code)}};
  };
  json entries = json::array();
  for (const auto& c : t.entries) entries.push_back(entry(c));
  json out{{"mu", t.mu}, {"entries", std::move(entries)}};
  if (!t.excluded.empty()) {
    json excluded = json::array();
    for (const auto& c : t.excluded) excluded.push_back(entry(c));
    out["excluded"] = std::move(excluded);
  }
  return out;
}

json points_json(std::span<const FpPoint> points) {
  json out = json::array();
  for (const FpPoint& p : points) out.push_back({p[0], p[1], p[2], p[3]});
  return out;
}

}  // namespace nodalcodes
