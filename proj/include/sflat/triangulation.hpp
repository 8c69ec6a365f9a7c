#pragma once

#include "sflat/polytope.hpp"

#include <utility>

namespace sflat {

// Lattice simplex: affinely independent vertices, stored lex-ascending.
class Simplex {
 public:
  explicit Simplex(std::vector<LatticePoint> verts);

  int ambient_dim() const { return static_cast<int>(verts_[0].size()); }
  int affine_dim() const { return static_cast<int>(verts_.size()) - 1; }
  const std::vector<LatticePoint>& vertices() const { return verts_; }

  bool operator==(const Simplex&) const = default;

 private:
  std::vector<LatticePoint> verts_;
};

// Coefficients of a point over one simplex's vertices: nonnegative, summing
// to mass, reconstructing the point exactly. simplex_index refers into the
// triangulation that produced it (-1 for standalone use).
struct BarycentricCoords {
  int simplex_index = -1;
  Rat mass;
  std::vector<Rat> coefficients;
};

namespace detail {

// Exact containment/coordinate machinery for one full-dimensional lattice
// simplex in hull coordinates. The adjugate rows turn barycentric coordinate
// queries into integer dot products scaled by |det|.
struct CellGeometry {
  std::vector<std::vector<Int>> verts;  // d+1 points in Z^d, cell vertex order
  std::vector<Int> bbox_lo, bbox_hi;
  Int abs_det;
  std::vector<std::vector<Int>> scaled_rows;  // row i gives |det| * lambda_{i+1}

  static CellGeometry build(std::vector<std::vector<Int>> verts);
  // Mass-1 coordinates; nullopt when the point is outside the cell.
  std::optional<std::vector<Rat>> barycentric(const RatPoint& y) const;
  bool bbox_may_contain(const RatPoint& y) const;
};

}  // namespace detail

// Triangulation of a lattice polytope into empty simplices covering it,
// every lattice point of K a cell vertex. Cells are listed in construction
// order, which is the canonical order for point location ties.
class Triangulation {
 public:
  const LatticePolytope& polytope() const { return poly_; }
  const std::vector<Simplex>& simplices() const { return cells_; }

  // Mass-1 witness over K's vertex indices for a lattice point of K, read
  // off the vertex-only placing triangulation kept from construction.
  ConvexCoeffs vertex_witness(const LatticePoint& w) const;

 private:
  LatticePolytope poly_;
  std::vector<Simplex> cells_;
  std::vector<detail::CellGeometry> cell_geo_;       // aligned with cells_
  std::vector<std::vector<int>> vertex_cells_;       // placing cells, K-vertex indices
  std::vector<detail::CellGeometry> vertex_cell_geo_;

  friend Triangulation empty_triangulation(const LatticePolytope& k);
  friend std::pair<int, BarycentricCoords> locate(const Triangulation& t, const RatPoint& q);
};

// Places the points in the given insertion order and returns the cells as
// index tuples. Points must be full-dimensional in Z^dim taken together.
std::vector<std::vector<int>> place_triangulation(const std::vector<std::vector<Int>>& pts,
                                                  int dim, const std::vector<int>& order);

// Vertex placing in lex order, then stellar subdivision at the lex-smallest
// non-vertex lattice point of the first non-empty cell, repeated until every
// cell is an empty simplex. Deterministic.
Triangulation empty_triangulation(const LatticePolytope& k);

// First simplex in canonical order containing q, with exact mass-1
// coordinates. Throws MembershipError when q is outside K.
std::pair<int, BarycentricCoords> locate(const Triangulation& t, const RatPoint& q);

// The unique coefficients of x over the simplex vertices with sum m.
// Throws MembershipError when x lies outside m * simplex.
BarycentricCoords barycentric(const Simplex& s, const RatPoint& x, int m);
BarycentricCoords barycentric(const Simplex& s, const LatticePoint& x, int m);

RatPoint reconstruct(const Simplex& s, const BarycentricCoords& coords);

// |det| of the edge matrix in a lattice basis of the affine span's lattice
// (product of the nonzero Smith divisors); 1 for unimodular simplices.
Int normalized_volume(const Simplex& s);

// Normalized volume of the polytope: cell volumes of a vertex placing
// triangulation, summed.
Int normalized_volume(const LatticePolytope& k);

}  // namespace sflat
