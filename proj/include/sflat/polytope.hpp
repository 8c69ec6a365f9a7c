#pragma once

#include "sflat/linalg.hpp"
#include "sflat/point.hpp"
#include "sflat/scan.hpp"

#include <map>
#include <optional>

namespace sflat {

// Witness that a point lies in mass * K: nonnegative coefficients over the
// polytope's vertex indices summing to mass exactly.
struct ConvexCoeffs {
  Rat mass;
  std::map<int, Rat> terms;

  Rat coefficient_sum() const;
  bool operator==(const ConvexCoeffs&) const = default;
};

// Lattice polytope in extreme-point representation. Construction derives,
// once, the exact geometry every query reuses: a lattice-preserving change
// of coordinates onto the affine span (via Smith normal form) and the facet
// halfspaces of the polytope in those coordinates. All state is immutable
// after construction, so instances can be shared across threads freely.
class LatticePolytope {
 public:
  static LatticePolytope from_points(const PointSet& s);
  static LatticePolytope from_points(int ambient_dim, std::vector<LatticePoint> pts);

  int ambient_dim() const { return dim_; }
  int affine_dim() const { return affine_dim_; }
  const PointSet& vertices() const { return vertices_; }
  const LatticePoint& base_vertex() const { return vertices_[0]; }

  // Hull coordinates: y = head of U (x - v0), a bijection between the
  // lattice of the affine span and Z^d.
  const std::vector<std::vector<Int>>& vertex_hull_coords() const { return hull_coords_; }
  const HalfspaceSystem& hull_facets() const { return facets_; }
  const IntMatrix& hull_transform() const { return to_hull_; }  // U

  // Maps hull coordinates of a point of mK back to ambient space.
  LatticePoint ambient_from_hull(const std::vector<Int>& y, const Int& dilation) const;
  // Maps a direction vector (difference) out of hull coordinates.
  LatticePoint ambient_vector_from_hull(const std::vector<Int>& y) const;

  // Hull coordinates of an ambient point of mK; nullopt when the point is
  // off the affine span of mK (or not a lattice point of the span).
  std::optional<std::vector<Int>> hull_coords(const LatticePoint& x, const Int& dilation) const;
  std::optional<RatPoint> hull_coords(const RatPoint& x, const Rat& dilation) const;

  // Fast exact membership x ∈ mK (no witness). The witness-producing route
  // is member() below; the two are checked against each other in tests.
  bool contains(const LatticePoint& x, const Int& dilation) const;
  bool contains(const RatPoint& x, const Rat& dilation) const;

 private:
  int dim_ = 0;
  int affine_dim_ = 0;
  PointSet vertices_;
  IntMatrix to_hull_;    // U
  IntMatrix from_hull_;  // U^{-1}
  std::vector<std::vector<Int>> hull_coords_;
  HalfspaceSystem facets_;  // facets of K in hull coordinates (dilation 1)
};

// The points of s not expressible as a convex combination of the others;
// exactly the vertex set of cvx s.
PointSet extreme_points(const PointSet& s);

// Rank of the difference set of s; 0 for a single point.
int affine_dim(const PointSet& s);

// Exact rational feasibility with witness: coefficients λ ≥ 0 over the
// vertices with Σλ = m and Σλv = x, found by enumerating affinely
// independent vertex subsets in ascending size, lexicographic order.
std::optional<ConvexCoeffs> member(const LatticePolytope& k, const RatPoint& x, int m);
std::optional<ConvexCoeffs> member(const LatticePolytope& k, const LatticePoint& x, int m);

// Checks a witness by exact substitution.
bool witness_verifies(const LatticePolytope& k, const RatPoint& x, const Rat& mass,
                      const ConvexCoeffs& coeffs);

// Rewrites a valid witness onto an affinely independent support (at most
// affine_dim + 1 vertices), preserving mass and the represented point.
ConvexCoeffs caratheodory_reduce(const LatticePolytope& k, const RatPoint& x,
                                 const ConvexCoeffs& coeffs);

// Exactly mK ∩ Z^n, lex-sorted: a bounding-box scan in hull coordinates
// filtered by the facet system. Exponential in affine dimension.
PointSet lattice_points(const LatticePolytope& k, int m);

// True iff the only lattice points of K are its extreme points.
bool is_empty_polytope(const LatticePolytope& k);

// True iff the differences of K ∩ Z^n generate Z^n as a group (all Smith
// divisors 1 at full rank).
bool is_projectively_faithful(const LatticePolytope& k);

// Facet halfspaces of a full-dimensional point configuration in Z^dim,
// by brute force over vertex subsets. Deterministic canonical output.
HalfspaceSystem brute_force_facets(const std::vector<std::vector<Int>>& pts, int dim);

}  // namespace sflat
