#include "sflat/io.hpp"

#include "sflat/errors.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace sflat {

using json = nlohmann::ordered_json;

PolytopeFile parse_polytope_json(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw FileFormatError(std::string("polytope file: invalid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FileFormatError("polytope file: top level must be an object");
  PolytopeFile f;
  if (doc.contains("name")) {
    if (!doc["name"].is_string()) throw FileFormatError("polytope file: name must be a string");
    f.name = doc["name"].get<std::string>();
  }
  if (!doc.contains("dim") || !doc["dim"].is_number_integer())
    throw FileFormatError("polytope file: dim must be an integer");
  f.dim = doc["dim"].get<int>();
  if (f.dim < 1) throw FileFormatError("polytope file: dim must be positive");
  if (!doc.contains("points") || !doc["points"].is_array() || doc["points"].empty())
    throw FileFormatError("polytope file: points must be a nonempty array");
  int record = 0;
  for (const auto& row : doc["points"]) {
    ++record;
    if (!row.is_array() || static_cast<int>(row.size()) != f.dim)
      throw FileFormatError("polytope file: point " + std::to_string(record) + " must have dim=" +
                            std::to_string(f.dim) + " entries");
    LatticePoint p;
    for (const auto& v : row) {
      if (!v.is_number_integer())
        throw FileFormatError("polytope file: point " + std::to_string(record) +
                              " has a non-integer coordinate");
      p.push_back(Int(v.get<long long>()));
    }
    f.points.push_back(std::move(p));
  }
  return f;
}

PolytopeFile read_polytope_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw FileFormatError("cannot open polytope file: " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse_polytope_json(buf.str());
}

std::string polytope_file_to_json(const PolytopeFile& f) {
  json doc = json::object();
  if (f.name) doc["name"] = *f.name;
  doc["dim"] = f.dim;
  json pts = json::array();
  for (const auto& p : f.points) {
    json row = json::array();
    for (const Int& c : p) {
      long long v;
      if (!fits_int64(c, v)) throw FileFormatError("polytope file: coordinate too large to serialize");
      row.push_back(v);
    }
    pts.push_back(std::move(row));
  }
  doc["points"] = std::move(pts);
  return doc.dump(2) + "\n";
}

void write_polytope_file(const std::string& path, const PolytopeFile& f) {
  std::ofstream out(path);
  if (!out) throw FileFormatError("cannot write polytope file: " + path);
  out << polytope_file_to_json(f);
}

LatticePolytope to_polytope(const PolytopeFile& f) {
  return LatticePolytope::from_points(f.dim, f.points);
}

}  // namespace sflat
