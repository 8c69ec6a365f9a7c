#pragma once

#include "sflat/triangulation.hpp"

namespace sflat {

// Certified decomposition of x in mK: x = head + Σ parts with every part a
// lattice point of K, head integral, and head_witness certifying
// head ∈ head_dilation * K.
struct Decomposition {
  LatticePoint target;
  int dilation = 0;
  LatticePoint head;
  int head_dilation = 0;
  ConvexCoeffs head_witness;  // over K's vertex indices
  std::vector<LatticePoint> parts;  // lex-sorted multiset, size dilation - head_dilation
};

// Effective mode peels down to affine_dim - 1 (the sharper bound within the
// affine span); ambient mode re-merges parts into the head until the head
// dilation is ambient_dim - 1, mirroring the ambient statement.
enum class DecomposeMode { Effective, Ambient };

// One vertex-peeling step: removes one lattice point z of the simplex from
// x, leaving valid coordinates of x - z with mass m - 1. Case split:
// basepoint when the non-base coefficients sum to at most m - 1, otherwise
// the lex-greatest vertex with coefficient >= 1. Raises EmptinessViolated
// in the residual case, which cannot occur for an empty simplex.
std::pair<LatticePoint, BarycentricCoords> peel_vertex(const Simplex& s,
                                                       const BarycentricCoords& coords);

Decomposition decompose(const LatticePolytope& k, const Triangulation& t, const LatticePoint& x,
                        int m, DecomposeMode mode = DecomposeMode::Effective);
Decomposition decompose(const LatticePolytope& k, const LatticePoint& x, int m,
                        DecomposeMode mode = DecomposeMode::Effective);

// Re-verification used before any decomposition is trusted or printed:
// parts in K ∩ Z^n, head witness by exact substitution, sum equals target.
// k_points must be lattice_points(k, 1).
bool decomposition_verifies(const LatticePolytope& k, const PointSet& k_points,
                            const Decomposition& d);

struct IdentityReport {
  bool holds = false;
  std::optional<LatticePoint> counterexample;  // lex-min point of the symmetric difference
  size_t lhs_size = 0;
  size_t rhs_size = 0;
};

// mK ∩ Z^n = (n-1)K ∩ Z^n + (m-n+1)(K ∩ Z^n), m >= n-1 (ambient n).
IdentityReport verify_eq2(const LatticePolytope& k, int m);

// mK ∩ Z^n = nK ∩ Z^n + (m-n)(K ∩ Z^n), m >= n; at m = n the sumset term
// degenerates and the right side is nK ∩ Z^n exactly.
IdentityReport verify_eq1(const LatticePolytope& k, int m);

// For an empty simplex of affine dimension d >= 2:
// dK ∩ Z^n = (d-1)K ∩ Z^n + K ∩ Z^n.
IdentityReport verify_lemma2(const LatticePolytope& k);

}  // namespace sflat
