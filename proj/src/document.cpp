// Copyright 2026 The lcpnash Authors
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

#include "lcpnash/document.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"
#include "lcpnash/errors.hpp"

namespace lcpnash {

namespace {

using json = nlohmann::ordered_json;

struct Position {
  std::size_t line = 0;
  std::size_t column = 0;
};

Position position_of_offset(std::string_view text, std::size_t offset) {
  Position p{1, 1};
  for (std::size_t i = 0; i < offset && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++p.line;
      p.column = 1;
    } else {
      ++p.column;
    }
  }
  return p;
}

// The parser keeps no source positions, so values are located by their text.
Position locate(std::string_view text, const std::string& token) {
  const auto at = text.find(token);
  return at == std::string_view::npos ? Position{} : position_of_offset(text, at);
}

class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  [[noreturn]] void fail(const std::string& what, const std::string& token = {}) const {
    const Position p = token.empty() ? Position{} : locate(text_, token);
    throw ParseError(what, p.line, p.column);
  }

  Rational rational(const json& j, const std::string& where) const {
    if (j.is_string()) {
      const auto s = j.get<std::string>();
      try {
        return parse_rational(s);
      } catch (const std::invalid_argument& e) {
        fail(where + ": invalid rational \"" + s + "\" (" + e.what() + ")", j.dump());
      }
    }
    if (j.is_number_integer()) return Rational(j.dump());
    fail(where + ": expected a rational string, got " + j.dump(), j.dump());
  }

  Vector vector(const json& j, const std::string& where, std::size_t m) const {
    if (!j.is_array()) fail(where + ": expected an array");
    if (j.size() != m) fail(where + ": expected " + std::to_string(m) + " entries, got " + std::to_string(j.size()));
    Vector v(m);
    for (std::size_t i = 0; i < m; ++i) v[i] = rational(j[i], where + "[" + std::to_string(i) + "]");
    return v;
  }

  Matrix matrix(const json& j, const std::string& where) const {
    if (!j.is_array() || j.empty() || !j[0].is_array() || j[0].empty())
      fail(where + ": expected a nonempty array of rows");
    const std::size_t cols = j[0].size();
    Matrix out(j.size(), cols);
    for (std::size_t i = 0; i < j.size(); ++i) {
      const Vector row = vector(j[i], where + "[" + std::to_string(i) + "]", cols);
      for (std::size_t c = 0; c < cols; ++c) out(i, c) = row[c];
    }
    return out;
  }

  json parse() const {
    try {
      return json::parse(text_.begin(), text_.end());
    } catch (const json::parse_error& e) {
      const Position p = position_of_offset(text_, e.byte == 0 ? 0 : e.byte - 1);
      throw ParseError(std::string("malformed JSON: ") + e.what(), p.line, p.column);
    }
  }

 private:
  std::string_view text_;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot open " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

json to_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

}  // namespace

ExtendedInstance InstanceDocument::instance() const {
  LcpInstance base(M, q);
  return d ? ExtendedInstance(std::move(base), *d) : ExtendedInstance(std::move(base));
}

InstanceDocument parse_document(std::string_view text) {
  const Reader r(text);
  const json j = r.parse();
  if (!j.is_object()) r.fail("document must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (key != "m" && key != "M" && key != "q" && key != "d" && key != "beta")
      r.fail("unknown field \"" + key + "\"", "\"" + key + "\"");
  }
  for (const char* key : {"m", "M", "q"})
    if (!j.contains(key)) r.fail(std::string("missing field \"") + key + "\"");
  if (!j["m"].is_number_unsigned() || j["m"].get<std::size_t>() == 0) r.fail("m must be a positive integer", "\"m\"");
  const auto m = j["m"].get<std::size_t>();

  InstanceDocument doc;
  const json& rows = j["M"];
  if (!rows.is_array() || rows.size() != m) r.fail("M must have " + std::to_string(m) + " rows", "\"M\"");
  doc.M = Matrix(m, m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector row = r.vector(rows[i], "M[" + std::to_string(i) + "]", m);
    for (std::size_t c = 0; c < m; ++c) doc.M(i, c) = row[c];
  }
  doc.q = r.vector(j["q"], "q", m);
  if (j.contains("d")) doc.d = r.vector(j["d"], "d", m);
  if (j.contains("beta")) doc.beta = r.rational(j["beta"], "beta");
  return doc;
}

InstanceDocument load_document(const std::string& path) { return parse_document(read_file(path)); }

std::string serialize_document(const InstanceDocument& doc) {
  json j = json::object();
  j["m"] = doc.dim();
  json rows = json::array();
  for (std::size_t i = 0; i < doc.M.rows(); ++i) rows.push_back(to_json(doc.M.row(i)));
  j["M"] = rows;
  j["q"] = to_json(doc.q);
  if (doc.d) j["d"] = to_json(*doc.d);
  if (doc.beta) j["beta"] = to_string(*doc.beta);
  return j.dump(2) + "\n";
}

Vector parse_covering(std::string_view text) {
  const Reader r(text);
  const json j = r.parse();
  const json& arr = j.is_object() && j.contains("d") ? j["d"] : j;
  if (!arr.is_array()) r.fail("covering vector must be an array or an object with \"d\"");
  return r.vector(arr, "d", arr.size());
}

Vector load_covering(const std::string& path) { return parse_covering(read_file(path)); }

SymmetricGame parse_game(std::string_view text) {
  const Reader r(text);
  const json j = r.parse();
  if (!j.is_object()) r.fail("game document must be a JSON object");
  if (j.contains("C")) return SymmetricGame(r.matrix(j["C"], "C"));
  if (j.contains("A") && j.contains("B")) return symmetrize(r.matrix(j["A"], "A"), r.matrix(j["B"], "B"));
  r.fail("game document needs \"C\" or both \"A\" and \"B\"");
}

SymmetricGame load_game(const std::string& path) { return parse_game(read_file(path)); }

}  // namespace lcpnash
