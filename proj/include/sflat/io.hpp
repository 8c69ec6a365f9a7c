#pragma once

#include "sflat/polytope.hpp"

#include <optional>
#include <string>

namespace sflat {

// On-disk polytope document: a single JSON object with keys `name`
// (optional), `dim`, `points`. Integer coordinates only; floats rejected.
struct PolytopeFile {
  std::optional<std::string> name;
  int dim = 0;
  std::vector<LatticePoint> points;
};

PolytopeFile read_polytope_file(const std::string& path);         // FileFormatError on bad input
PolytopeFile parse_polytope_json(const std::string& text);
std::string polytope_file_to_json(const PolytopeFile& f);         // canonical serialization
void write_polytope_file(const std::string& path, const PolytopeFile& f);

LatticePolytope to_polytope(const PolytopeFile& f);

}  // namespace sflat
