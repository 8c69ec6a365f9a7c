#pragma once

#include "sflat/numeric.hpp"
#include "sflat/point.hpp"

#include <functional>
#include <vector>

namespace sflat {

// One inequality coeffs . y <= bound over Z^d.
struct Halfspace {
  std::vector<Int> coeffs;
  Int bound;

  bool operator==(const Halfspace&) const = default;
};

// Conjunction of integer halfspaces in a common dimension.
struct HalfspaceSystem {
  int dim = 0;
  std::vector<Halfspace> rows;

  bool contains(const std::vector<Int>& y) const;
  bool contains(const std::vector<Rat>& y) const;
};

// Enumerates the integer points of box ∩ system in lex order. The scan walks
// the prefix grid and solves the admissible interval of the last coordinate
// per fiber from the inequalities, so cost scales with the number of fibers,
// not candidate points. Exponential in dim by nature; fine at desk scale.
void scan_lattice_points(const HalfspaceSystem& sys, const std::vector<Int>& box_lo,
                         const std::vector<Int>& box_hi,
                         const std::function<void(const std::vector<Int>&)>& emit);

}  // namespace sflat
