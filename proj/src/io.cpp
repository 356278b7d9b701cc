#include "clutter/io.hpp"

#include <array>
#include <cctype>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

namespace clb {

using json = nlohmann::ordered_json;

ParseError::ParseError(int line, const std::string& what)
    : std::runtime_error(line > 0 ? "line " + std::to_string(line) + ": " + what
                                  : what),
      line_(line) {}

namespace {

struct Line {
  int number;                  // 1-based position in the input
  std::vector<int> values;     // parsed integers
  bool empty_face_dot;         // the line was a single `.`
};

// Split text into content lines: comments stripped, blanks dropped.
std::vector<Line> content_lines(const std::string& text) {
  std::vector<Line> out;
  std::istringstream in(text);
  std::string raw;
  int number = 0;
  while (std::getline(in, raw)) {
    ++number;
    auto hash = raw.find('#');
    if (hash != std::string::npos) raw.resize(hash);
    std::istringstream ls(raw);
    Line line{number, {}, false};
    std::string tok;
    while (ls >> tok) {
      if (tok == ".") {
        line.empty_face_dot = true;
        continue;
      }
      try {
        size_t used = 0;
        int v = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
        line.values.push_back(v);
      } catch (const std::exception&) {
        throw ParseError(number, "expected an integer, got '" + tok + "'");
      }
    }
    if (line.empty_face_dot && !line.values.empty())
      throw ParseError(number, "'.' cannot be mixed with vertices");
    if (line.empty_face_dot || !line.values.empty()) out.push_back(line);
  }
  return out;
}

Face face_from_line(const Line& line, int n) {
  if (line.empty_face_dot) return Face{};
  for (int v : line.values)
    if (v < 1 || v > n)
      throw ParseError(line.number, "vertex " + std::to_string(v) +
                                        " outside 1.." + std::to_string(n));
  try {
    return Face::from_vertices(line.values, n);
  } catch (const std::exception& e) {
    throw ParseError(line.number, e.what());
  }
}

// First marker comment (`# word`) in the text, if any.
std::string marker_comment(const std::string& text) {
  std::istringstream in(text);
  std::string raw;
  while (std::getline(in, raw)) {
    auto hash = raw.find('#');
    std::string before = raw.substr(0, hash == std::string::npos ? raw.size() : hash);
    bool blank_before = true;
    for (char ch : before)
      if (!std::isspace(static_cast<unsigned char>(ch))) blank_before = false;
    if (hash != std::string::npos && blank_before) {
      std::istringstream ms(raw.substr(hash + 1));
      std::string word;
      ms >> word;
      return word;
    }
    if (!blank_before) return "";  // content reached before any marker
  }
  return "";
}

bool looks_like_json(const std::string& text) {
  for (char ch : text) {
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    return ch == '{';
  }
  return false;
}

json parse_json_checked(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError(0, std::string("invalid JSON: ") + e.what());
  }
}

int json_int(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(0, std::string("missing integer field '") + key + "'");
  return j[key].get<int>();
}

std::vector<Face> json_faces(const json& j, const char* key, int n) {
  if (!j.contains(key) || !j[key].is_array())
    throw ParseError(0, std::string("missing array field '") + key + "'");
  std::vector<Face> out;
  for (const auto& entry : j[key]) {
    if (!entry.is_array()) throw ParseError(0, "face entries must be arrays");
    std::vector<int> verts;
    for (const auto& v : entry) {
      if (!v.is_number_integer())
        throw ParseError(0, "face vertices must be integers");
      int vi = v.get<int>();
      if (vi < 1 || vi > n)
        throw ParseError(0, "vertex " + std::to_string(vi) + " outside 1.." +
                                std::to_string(n));
      verts.push_back(vi);
    }
    try {
      out.push_back(Face::from_vertices(verts, n));
    } catch (const std::exception& e) {
      throw ParseError(0, e.what());
    }
  }
  return out;
}

json face_to_json(Face f) {
  json arr = json::array();
  for (int v : f.vertices()) arr.push_back(v);
  return arr;
}

void append_face_line(std::ostringstream& out, Face f) {
  if (f.size() == 0) {
    out << ".\n";
    return;
  }
  bool first = true;
  for (int v : f.vertices()) {
    if (!first) out << ' ';
    out << v;
    first = false;
  }
  out << '\n';
}

}  // namespace

UniformClutter parse_clutter(const std::string& text) {
  if (looks_like_json(text)) {
    json j = parse_json_checked(text);
    int n = json_int(j, "n");
    int d = json_int(j, "d");
    try {
      return UniformClutter(n, d, json_faces(j, "circuits", n));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(0, e.what());
    }
  }
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& header = lines.front();
  if (header.values.size() != 2)
    throw ParseError(header.number, "clutter header must be 'n d'");
  int n = header.values[0], d = header.values[1];
  std::vector<Face> circuits;
  for (size_t k = 1; k < lines.size(); ++k)
    circuits.push_back(face_from_line(lines[k], n));
  try {
    return UniformClutter(n, d, circuits);
  } catch (const std::exception& e) {
    throw ParseError(header.number, e.what());
  }
}

Ideal parse_ideal(const std::string& text) {
  if (looks_like_json(text)) {
    json j = parse_json_checked(text);
    int n = json_int(j, "n");
    try {
      return Ideal(n, json_faces(j, "generators", n));
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(0, e.what());
    }
  }
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& header = lines.front();
  if (header.values.size() != 1)
    throw ParseError(header.number, "ideal header must be a single 'n'");
  int n = header.values[0];
  std::vector<Face> gens;
  for (size_t k = 1; k < lines.size(); ++k)
    gens.push_back(face_from_line(lines[k], n));
  try {
    return Ideal(n, gens);
  } catch (const std::exception& e) {
    throw ParseError(header.number, e.what());
  }
}

SimplicialComplex parse_complex(const std::string& text) {
  if (looks_like_json(text)) {
    json j = parse_json_checked(text);
    int n = json_int(j, "n");
    try {
      auto faces = json_faces(j, "facets", n);
      if (faces.empty()) return SimplicialComplex::void_complex(n);
      return SimplicialComplex(n, faces);
    } catch (const ParseError&) {
      throw;
    } catch (const std::exception& e) {
      throw ParseError(0, e.what());
    }
  }
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  const Line& header = lines.front();
  if (header.values.size() != 1)
    throw ParseError(header.number, "complex header must be a single 'n'");
  int n = header.values[0];
  std::vector<Face> facets;
  for (size_t k = 1; k < lines.size(); ++k)
    facets.push_back(face_from_line(lines[k], n));
  try {
    if (facets.empty()) return SimplicialComplex::void_complex(n);
    return SimplicialComplex(n, facets);
  } catch (const std::exception& e) {
    throw ParseError(header.number, e.what());
  }
}

std::string emit_clutter(const UniformClutter& c) {
  std::ostringstream out;
  out << "# clutter\n" << c.n() << ' ' << c.d() << '\n';
  for (Face f : c.circuits()) append_face_line(out, f);
  return out.str();
}

std::string emit_ideal(const Ideal& i) {
  std::ostringstream out;
  out << "# ideal\n" << i.n() << '\n';
  for (Face f : i.gens()) append_face_line(out, f);
  return out.str();
}

std::string emit_complex(const SimplicialComplex& k) {
  std::ostringstream out;
  out << "# complex\n" << k.n() << '\n';
  if (k.is_void()) return out.str();
  for (Face f : k.facets()) append_face_line(out, f);
  return out.str();
}

std::string emit_clutter_json(const UniformClutter& c) {
  json j;
  j["n"] = c.n();
  j["d"] = c.d();
  json circuits = json::array();
  for (Face f : c.circuits()) circuits.push_back(face_to_json(f));
  j["circuits"] = circuits;
  return j.dump();
}

std::string emit_ideal_json(const Ideal& i) {
  json j;
  j["n"] = i.n();
  json gens = json::array();
  for (Face f : i.gens()) gens.push_back(face_to_json(f));
  j["generators"] = gens;
  return j.dump();
}

std::string emit_complex_json(const SimplicialComplex& k) {
  json j;
  j["n"] = k.n();
  json facets = json::array();
  if (!k.is_void())
    for (Face f : k.facets()) facets.push_back(face_to_json(f));
  j["facets"] = facets;
  return j.dump();
}

std::string emit_betti_table_json(const BettiTable& t) {
  json j;
  j["n"] = t.n;
  json entries = json::array();
  for (const auto& [key, count] : t.entries) {
    json e;
    e["i"] = key.first;
    e["W"] = face_to_json(Face{key.second});
    e["count"] = count;
    entries.push_back(e);
  }
  j["entries"] = entries;
  return j.dump();
}

BettiTable parse_betti_table(const std::string& text) {
  if (!looks_like_json(text))
    throw ParseError(0, "betti tables are parsed from JSON only");
  json j = parse_json_checked(text);
  int n = json_int(j, "n");
  if (n < 1 || n > 64) throw ParseError(0, "n must be in 1..64");
  BettiTable t;
  t.n = n;
  if (!j.contains("entries") || !j["entries"].is_array())
    throw ParseError(0, "missing array field 'entries'");
  for (const auto& e : j["entries"]) {
    if (!e.is_object()) throw ParseError(0, "entries must be objects");
    int i = json_int(e, "i");
    if (i < 0) throw ParseError(0, "homological degree must be >= 0");
    if (!e.contains("W") || !e["W"].is_array())
      throw ParseError(0, "entry is missing array field 'W'");
    std::vector<int> verts;
    for (const auto& v : e["W"]) {
      if (!v.is_number_integer())
        throw ParseError(0, "face vertices must be integers");
      int vi = v.get<int>();
      if (vi < 1 || vi > n)
        throw ParseError(0, "vertex " + std::to_string(vi) + " outside 1.." +
                                std::to_string(n));
      verts.push_back(vi);
    }
    if (!e.contains("count") || !e["count"].is_number_integer())
      throw ParseError(0, "entry is missing integer field 'count'");
    long long count = e["count"].get<long long>();
    if (count < 0) throw ParseError(0, "counts must be non-negative");
    try {
      t.add(i, Face::from_vertices(verts, n), count);
    } catch (const std::exception& ex) {
      throw ParseError(0, ex.what());
    }
  }
  return t;
}

std::string emit_betti_table_tsv(const BettiTable& t) {
  int pd = t.pd_quotient();
  auto reg = t.regularity();
  int rows = 0;  // rows run over j - i for the quotient: 0 .. reg(I) - 1
  if (reg && *reg > 0) rows = *reg - 1;
  std::ostringstream out;
  out << "j-i\\i";
  for (int i = 0; i <= pd; ++i) out << '\t' << i;
  out << '\n';
  for (int r = 0; r <= rows; ++r) {
    out << r;
    for (int i = 0; i <= pd; ++i) {
      long long v;
      if (i == 0) {
        v = (r == 0) ? 1 : 0;  // beta_{0,0} of the quotient
      } else {
        // beta_{i,j} of the quotient equals beta_{i-1,j} of the ideal.
        v = 0;
        for (const auto& [key, count] : t.entries) {
          if (key.first != i - 1) continue;
          if (Face{key.second}.size() - (i - 1) - 1 == r) v += count;
        }
      }
      out << '\t';
      if (v == 0)
        out << '.';
      else
        out << v;
    }
    out << '\n';
  }
  return out.str();
}

InputKind classify_input(const std::string& text, InputKind fallback) {
  if (looks_like_json(text)) {
    json j = parse_json_checked(text);
    if (j.contains("circuits")) return InputKind::clutter;
    if (j.contains("generators")) return InputKind::ideal;
    if (j.contains("facets")) return InputKind::complex_;
    throw ParseError(0, "JSON object has none of circuits/generators/facets");
  }
  std::string marker = marker_comment(text);
  if (marker == "clutter") return InputKind::clutter;
  if (marker == "ideal") return InputKind::ideal;
  if (marker == "complex") return InputKind::complex_;
  auto lines = content_lines(text);
  if (lines.empty()) throw ParseError(0, "empty input");
  if (lines.front().values.size() == 2) return InputKind::clutter;
  return fallback;
}

std::uint32_t crc32(const std::string& bytes) {
  static const auto table = [] {
    std::array<std::uint32_t, 256> t{};
    for (std::uint32_t i = 0; i < 256; ++i) {
      std::uint32_t c = i;
      for (int k = 0; k < 8; ++k)
        c = (c & 1u) ? 0xEDB88320u ^ (c >> 1) : (c >> 1);
      t[i] = c;
    }
    return t;
  }();
  std::uint32_t c = 0xFFFFFFFFu;
  for (unsigned char ch : bytes) c = table[(c ^ ch) & 0xFFu] ^ (c >> 8);
  return c ^ 0xFFFFFFFFu;
}

}  // namespace clb
