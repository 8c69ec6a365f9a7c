#pragma once

#include "sflat/polytope.hpp"

#include <string>

namespace sflat {

// Lattice cone at a vertex: C_v is the monoid of sums of translated lattice
// points of K. phi is an exact integer functional, positive on every nonzero
// generator, which bounds summand counts and makes membership decidable.
class VertexCone {
 public:
  static VertexCone at_vertex(const LatticePolytope& k, int vertex_index);

  const LatticePolytope& polytope() const { return poly_; }
  int vertex_index() const { return vertex_index_; }
  const LatticePoint& vertex() const { return vertex_; }
  const PointSet& generators() const { return generators_; }  // includes 0
  const std::vector<Int>& phi() const { return phi_; }        // ambient functional
  const Int& delta() const { return delta_; }                 // min phi over nonzero generators

  Int phi_value(const LatticePoint& y) const;  // y in translated coordinates
  // Largest phi over the nonzero generators (0 for a point polytope).
  const Int& max_generator_phi() const { return max_phi_; }

 private:
  LatticePolytope poly_;
  int vertex_index_ = 0;
  LatticePoint vertex_;
  PointSet generators_;
  std::vector<Int> phi_;
  Int delta_ = 1;
  Int max_phi_ = 0;

  // Hull-coordinate machinery for the bounded scans.
  std::vector<Int> vertex_hull_;
  HalfspaceSystem cone_;                       // facets of K tight at v, translated
  std::vector<Int> phi_hull_;
  std::vector<std::vector<Int>> gens_hull_;    // nonzero generators
  std::vector<LatticePoint> gens_ambient_;     // aligned with gens_hull_
  std::vector<std::vector<Int>> rays_hull_;    // vertex directions
  std::vector<Int> ray_phi_;

  friend class ConeSearch;
};

// A lattice point of the rational cone at v that is not in C_v, together
// with a verified multiple that is.
struct HoleReport {
  LatticePoint vertex;
  LatticePoint hole;  // translated coordinates (relative to the vertex)
  Int multiplier;
  std::vector<LatticePoint> multiple_summands;  // certificate for multiplier * hole
  Int scan_bound;
};

// Decides y ∈ C_v; explicit generator summands on success.
std::optional<std::vector<LatticePoint>> cone_member(const VertexCone& c, const LatticePoint& y);

// All holes with phi(x) <= bound, in lex scan order. Conclusive within the
// scanned region.
std::vector<HoleReport> cone_holes(const VertexCone& c, const Int& bound);

// True iff x (nonzero, in the lattice cone) admits no splitting x = y + z
// with y, z nonzero lattice points of the rational cone.
bool is_atom(const VertexCone& c, const LatticePoint& x);

enum class SolidityVerdict { Solid, NotSolid, LocallySolidYes, LocallySolidNo, Unknown };

struct SolidityReport {
  SolidityVerdict verdict = SolidityVerdict::Unknown;
  std::optional<int> witness_m;                // failing m, or the certifying m
  std::optional<LatticePoint> witness_point;   // lex-min failing point
  std::optional<HoleReport> hole;
  std::string note;
};

// Checks mK ∩ Z^n = m(K ∩ Z^n) for m = 2 .. d-1 (d = affine dimension);
// decisive, since the decomposition theorem extends equality upward. The
// range is empty for d <= 2.
SolidityReport is_solid(const LatticePolytope& k);

// Whether mK ∩ Z^n = m(K ∩ Z^n), for each m = 1 .. m_max.
std::vector<std::pair<int, bool>> equality_profile(const LatticePolytope& k, int m_max);

struct EffortBudget {
  int m_max = 6;
  Int hole_bound = 0;  // 0: per-cone default 2 (d+1) max phi
};

// Semi-decision both ways within the budget. YES needs projective
// faithfulness (the equality criterion is only valid then); a hole is a NO
// regardless; otherwise UNKNOWN.
SolidityReport locally_solid_check(const LatticePolytope& k, const EffortBudget& effort);

// The sharpness family: cvx{0, e_1, ..., e_{n-1}, (a(1), ..., a(n-1), d)}.
struct Example4Params {
  int n = 4;
  std::vector<Int> a;  // n-1 entries, 0 < a(i) < d
  Int d = 4;           // sum a(i) < d

  void validate() const;  // reports the violated constraint
};

LatticePolytope example4_polytope(const Example4Params& p);

struct SharpnessReport {
  bool one_in_lower;        // 1 ∈ (n-1)K ∩ Z^n
  bool one_not_in_lower2;   // 1 ∉ (n-2)K
  Rat mass;                 // unique barycentric mass of 1
  Rat expected_mass;        // n-1 - (sum a - 1)/d
  bool mass_matches;
  bool one_is_atom;

  bool all_pass() const { return one_in_lower && one_not_in_lower2 && mass_matches && one_is_atom; }
};

SharpnessReport verify_example4_sharpness(const Example4Params& p);

}  // namespace sflat
