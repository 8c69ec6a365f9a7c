#include "sflat/decompose.hpp"

#include "sflat/errors.hpp"

#include <algorithm>

namespace sflat {

std::pair<LatticePoint, BarycentricCoords> peel_vertex(const Simplex& s,
                                                       const BarycentricCoords& coords) {
  const int d = s.affine_dim();
  if (static_cast<int>(coords.coefficients.size()) != d + 1)
    throw std::invalid_argument("peel_vertex: coefficient count mismatch");
  if (!is_integer(coords.mass) || coords.mass < Rat(std::max(d, 1)))
    throw std::invalid_argument("peel_vertex: mass must be an integer >= max(dim, 1)");
  Rat total = 0;
  for (const Rat& c : coords.coefficients) {
    if (c < 0) throw std::invalid_argument("peel_vertex: negative coefficient");
    total += c;
  }
  if (total != coords.mass) throw std::invalid_argument("peel_vertex: coefficients do not sum to mass");

  const Rat m = coords.mass;
  Rat nonbase = m - coords.coefficients[0];

  BarycentricCoords next = coords;
  next.mass = m - 1;
  if (nonbase <= m - 1) {
    next.coefficients[0] -= 1;
    return {s.vertices()[0], std::move(next)};
  }
  for (int i = d; i >= 1; --i) {
    if (coords.coefficients[i] >= 1) {
      next.coefficients[i] -= 1;
      return {s.vertices()[i], std::move(next)};
    }
  }
  // All non-base coefficients below 1 yet summing above m-1 forces m = d and
  // a non-vertex lattice point inside the simplex (Lemma 2's contradiction).
  throw EmptinessViolated("peel_vertex: case split fell through; simplex is not empty");
}

namespace {

ConvexCoeffs compose_head_witness(const Triangulation& t, const Simplex& cell,
                                  const BarycentricCoords& coords,
                                  const std::vector<LatticePoint>& merged) {
  ConvexCoeffs out;
  out.mass = coords.mass + Rat(static_cast<int>(merged.size()));
  for (size_t i = 0; i < cell.vertices().size(); ++i) {
    const Rat& c = coords.coefficients[i];
    if (c == 0) continue;
    ConvexCoeffs w = t.vertex_witness(cell.vertices()[i]);
    for (const auto& [idx, mu] : w.terms) out.terms[idx] += c * mu;
  }
  for (const auto& p : merged) {
    ConvexCoeffs w = t.vertex_witness(p);
    for (const auto& [idx, mu] : w.terms) out.terms[idx] += mu;
  }
  return out;
}

}  // namespace

Decomposition decompose(const LatticePolytope& k, const Triangulation& t, const LatticePoint& x,
                        int m, DecomposeMode mode) {
  if (static_cast<int>(x.size()) != k.ambient_dim())
    throw DimensionMismatch("decompose: dimension mismatch");
  if (m < 1) throw std::invalid_argument("decompose: dilation must be >= 1");
  if (!k.contains(x, Int(m))) throw MembershipError("decompose: point not in mK");

  const int d = k.affine_dim();
  const int n = k.ambient_dim();
  const int eff_target = std::min(m, std::max(d - 1, 0));
  const int head_target = mode == DecomposeMode::Effective ? eff_target : std::min(m, n - 1);

  RatPoint q(x.size());
  for (size_t i = 0; i < x.size(); ++i) q[i] = Rat(x[i]) / Rat(m);
  auto [cell_index, bc] = locate(t, q);
  const Simplex& cell = t.simplices()[cell_index];
  bc.mass = m;
  for (Rat& c : bc.coefficients) c *= m;

  std::vector<LatticePoint> parts;
  while (bc.mass > Rat(eff_target)) {
    auto [z, next] = peel_vertex(cell, bc);
    parts.push_back(std::move(z));
    bc = std::move(next);
  }
  std::sort(parts.begin(), parts.end());

  // Ambient mode folds the first few parts back into the head; each merged
  // lattice point raises the head dilation by one and stays certified.
  std::vector<LatticePoint> merged;
  if (head_target > eff_target) {
    const int extra = std::min<int>(head_target - eff_target, static_cast<int>(parts.size()));
    merged.assign(parts.begin(), parts.begin() + extra);
    parts.erase(parts.begin(), parts.begin() + extra);
  }

  Decomposition out;
  out.target = x;
  out.dilation = m;
  out.head_dilation = eff_target + static_cast<int>(merged.size());
  RatPoint head_rat = reconstruct(cell, bc);
  LatticePoint head = to_lattice(head_rat);
  for (const auto& p : merged) head = add(head, p);
  out.head = std::move(head);
  out.head_witness = compose_head_witness(t, cell, bc, merged);
  out.parts = std::move(parts);

  // Internal re-verification on the cheap membership oracle; the PointSet
  // route in decomposition_verifies stays available as the offline check.
  LatticePoint sum = out.head;
  for (const auto& p : out.parts) {
    if (!k.contains(p, Int(1))) throw std::logic_error("decompose: part escaped K");
    sum = add(sum, p);
  }
  bool head_ok;
  if (out.head_dilation == 0) {
    head_ok = std::all_of(out.head.begin(), out.head.end(), [](const Int& c) { return c == 0; }) &&
              out.head_witness.mass == 0 && out.head_witness.coefficient_sum() == 0;
  } else {
    head_ok = witness_verifies(k, to_rat(out.head), Rat(out.head_dilation), out.head_witness);
  }
  if (sum != x || !head_ok) throw std::logic_error("decompose: result failed re-verification");
  return out;
}

Decomposition decompose(const LatticePolytope& k, const LatticePoint& x, int m,
                        DecomposeMode mode) {
  Triangulation t = empty_triangulation(k);
  return decompose(k, t, x, m, mode);
}

bool decomposition_verifies(const LatticePolytope& k, const PointSet& k_points,
                            const Decomposition& d) {
  if (static_cast<int>(d.parts.size()) != d.dilation - d.head_dilation) return false;
  if (d.head_dilation < 0 || d.head_dilation > d.dilation) return false;
  LatticePoint sum = d.head;
  for (const auto& p : d.parts) {
    if (!k_points.contains(p)) return false;
    sum = add(sum, p);
  }
  if (sum != d.target) return false;
  if (d.head_dilation == 0) {
    // 0K = {0}: the head must vanish and the witness must be empty-sum.
    for (const Int& c : d.head) {
      if (c != 0) return false;
    }
    return d.head_witness.mass == 0 && d.head_witness.coefficient_sum() == 0;
  }
  return witness_verifies(k, to_rat(d.head), Rat(d.head_dilation), d.head_witness);
}

namespace {

IdentityReport compare_sets(const PointSet& lhs, const PointSet& rhs) {
  IdentityReport rep;
  rep.lhs_size = lhs.size();
  rep.rhs_size = rhs.size();
  rep.holds = lhs == rhs;
  if (!rep.holds) {
    PointSet d1 = set_difference(lhs, rhs);
    PointSet d2 = set_difference(rhs, lhs);
    if (d1.empty()) rep.counterexample = d2[0];
    else if (d2.empty()) rep.counterexample = d1[0];
    else rep.counterexample = std::min(d1[0], d2[0]);
  }
  return rep;
}

PointSet zero_set(int dim) { return PointSet(dim, {LatticePoint(dim, Int(0))}); }

}  // namespace

IdentityReport verify_eq2(const LatticePolytope& k, int m) {
  const int n = k.ambient_dim();
  if (m < n - 1) throw std::domain_error("verify_eq2: m must be at least n-1");
  PointSet lhs = lattice_points(k, m);
  PointSet rhs = n >= 2 ? lattice_points(k, n - 1) : zero_set(n);
  PointSet s1 = lattice_points(k, 1);
  for (int i = 0; i < m - n + 1; ++i) rhs = minkowski_sum(rhs, s1);
  return compare_sets(lhs, rhs);
}

IdentityReport verify_eq1(const LatticePolytope& k, int m) {
  const int n = k.ambient_dim();
  if (m < n) throw std::domain_error("verify_eq1: m must be at least n");
  PointSet lhs = lattice_points(k, m);
  PointSet rhs = lattice_points(k, n);
  PointSet s1 = lattice_points(k, 1);
  for (int i = 0; i < m - n; ++i) rhs = minkowski_sum(rhs, s1);
  return compare_sets(lhs, rhs);
}

IdentityReport verify_lemma2(const LatticePolytope& k) {
  const int d = k.affine_dim();
  if (static_cast<int>(k.vertices().size()) != d + 1)
    throw std::invalid_argument("verify_lemma2: polytope is not a simplex");
  if (d < 2) throw std::invalid_argument("verify_lemma2: affine dimension must be >= 2");
  if (!is_empty_polytope(k)) throw std::invalid_argument("verify_lemma2: simplex is not empty");
  PointSet lhs = lattice_points(k, d);
  PointSet rhs = minkowski_sum(lattice_points(k, d - 1), lattice_points(k, 1));
  return compare_sets(lhs, rhs);
}

}  // namespace sflat
