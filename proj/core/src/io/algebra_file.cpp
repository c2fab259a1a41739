#include "lieprop/io/algebra_file.hpp"

#include <cstdio>
#include <fstream>
#include <limits>
#include <sstream>

#include <json.hpp>

#include "lieprop/errors.hpp"

namespace lieprop::io {

namespace {

using nlohmann::json;
using nlohmann::ordered_json;

std::string line_col(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t k = 0; k < byte && k < text.size(); ++k) {
    if (text[k] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return std::to_string(line) + ":" + std::to_string(col);
}

std::uint64_t index_value(const json& v, const std::string& where, std::uint64_t limit) {
  if (!v.is_number_unsigned() && !(v.is_number_integer() && v.get<std::int64_t>() >= 0))
    throw ParseError(where, "expected a nonnegative integer");
  const auto x = v.get<std::uint64_t>();
  if (x >= limit) throw ParseError(where, "index " + std::to_string(x) + " out of range");
  return x;
}

std::uint64_t index_key(const std::string& key, const std::string& where, std::uint64_t limit) {
  if (key.empty() || key.size() > 9 || key.find_first_not_of("0123456789") != std::string::npos ||
      (key.size() > 1 && key[0] == '0'))
    throw ParseError(where, "coordinate keys are decimal indices");
  const std::uint64_t x = std::stoull(key);
  if (x >= limit) throw ParseError(where, "index " + key + " out of range");
  return x;
}

FieldSpec parse_field(const json& f) {
  if (f.is_string() && f.get<std::string>() == "Q") return FieldSpec::rationals();
  if (f.is_object() && f.size() == 1 && f.contains("Fp")) {
    const json& p = f.at("Fp");
    if (!p.is_number_unsigned()) throw ParseError("/field/Fp", "expected a prime");
    try {
      return FieldSpec::prime(p.get<std::uint64_t>());
    } catch (const Error& e) {
      throw ParseError("/field/Fp", e.what());
    }
  }
  throw ParseError("/field", "expected \"Q\" or {\"Fp\": p}");
}

}  // namespace

LieAlgebra parse_algebra(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text.begin(), text.end());
  } catch (const json::parse_error& e) {
    throw ParseError(line_col(text, e.byte == 0 ? 0 : e.byte - 1), "syntax error");
  }
  if (!doc.is_object()) throw ParseError("", "top level must be an object");
  for (const auto& [key, _] : doc.items())
    if (key != "field" && key != "dim" && key != "labels" && key != "brackets")
      throw ParseError("/" + key, "unknown key");
  if (!doc.contains("field")) throw ParseError("/field", "missing");
  if (!doc.contains("dim")) throw ParseError("/dim", "missing");
  const FieldSpec field = parse_field(doc.at("field"));
  const std::size_t dim = index_value(doc.at("dim"), "/dim", 65);

  std::vector<std::string> labels;
  if (doc.contains("labels")) {
    const json& l = doc.at("labels");
    if (!l.is_array() || l.size() != dim) throw ParseError("/labels", "expected " + std::to_string(dim) + " strings");
    for (std::size_t k = 0; k < l.size(); ++k) {
      if (!l[k].is_string()) throw ParseError("/labels/" + std::to_string(k), "expected a string");
      labels.push_back(l[k].get<std::string>());
    }
  }

  std::vector<BracketEntry> brackets;
  if (doc.contains("brackets")) {
    const json& b = doc.at("brackets");
    if (!b.is_array()) throw ParseError("/brackets", "expected an array");
    std::vector<std::pair<std::size_t, std::size_t>> seen;
    for (std::size_t r = 0; r < b.size(); ++r) {
      const std::string at = "/brackets/" + std::to_string(r);
      const json& rec = b[r];
      if (!rec.is_object()) throw ParseError(at, "expected an object");
      for (const auto& [key, _] : rec.items())
        if (key != "i" && key != "j" && key != "v") throw ParseError(at + "/" + key, "unknown key");
      if (!rec.contains("i") || !rec.contains("j") || !rec.contains("v")) throw ParseError(at, "needs i, j and v");
      const std::size_t i = index_value(rec.at("i"), at + "/i", dim);
      const std::size_t j = index_value(rec.at("j"), at + "/j", dim);
      if (i >= j) throw ParseError(at, "requires i < j");
      if (std::find(seen.begin(), seen.end(), std::make_pair(i, j)) != seen.end())
        throw ParseError(at, "duplicate entry for (" + std::to_string(i) + ", " + std::to_string(j) + ")");
      seen.emplace_back(i, j);
      const json& v = rec.at("v");
      if (!v.is_object()) throw ParseError(at + "/v", "expected an object");
      Vec value = zero_vec(dim, field);
      for (const auto& [key, s] : v.items()) {
        const std::string where = at + "/v/" + key;
        const std::size_t k = index_key(key, where, dim);
        if (!s.is_string()) throw ParseError(where, "scalars are strings");
        try {
          value[k] = Scalar::parse(s.get<std::string>(), field);
        } catch (const NonCanonicalScalar& e) {
          throw NonCanonicalScalar(where + ": " + e.what());
        } catch (const BadScalar& e) {
          throw ParseError(where, e.what());
        }
      }
      brackets.push_back({i, j, std::move(value)});
    }
  }
  return LieAlgebra::validate(dim, field, std::move(brackets), std::move(labels));
}

LieAlgebra read_algebra_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError(path, "cannot open");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_algebra(buf.str());
}

std::string emit_algebra(const LieAlgebra& L) {
  ordered_json doc;
  if (L.field().is_rational())
    doc["field"] = "Q";
  else
    doc["field"] = ordered_json{{"Fp", L.field().characteristic()}};
  doc["dim"] = L.dim();
  if (L.has_custom_labels()) doc["labels"] = L.labels();
  ordered_json brackets = ordered_json::array();
  for (const BracketEntry& b : L.brackets()) {
    ordered_json v = ordered_json::object();
    for (std::size_t k = 0; k < b.value.size(); ++k)
      if (!b.value[k].is_zero()) v[std::to_string(k)] = b.value[k].str();
    brackets.push_back(ordered_json{{"i", b.i}, {"j", b.j}, {"v", std::move(v)}});
  }
  doc["brackets"] = std::move(brackets);
  return doc.dump(2) + "\n";
}

std::string fnv1a64(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char out[17];
  std::snprintf(out, sizeof out, "%016llx", static_cast<unsigned long long>(h));
  return out;
}

}  // namespace lieprop::io
