#include "sflat/triangulation.hpp"

#include "sflat/errors.hpp"

#include <algorithm>
#include <list>
#include <map>
#include <numeric>

namespace sflat {

Simplex::Simplex(std::vector<LatticePoint> verts) : verts_(std::move(verts)) {
  if (verts_.empty()) throw std::invalid_argument("Simplex: no vertices");
  const int n = static_cast<int>(verts_[0].size());
  for (const auto& v : verts_)
    if (static_cast<int>(v.size()) != n) throw DimensionMismatch("Simplex: ragged vertices");
  std::sort(verts_.begin(), verts_.end());
  const int count = static_cast<int>(verts_.size());
  IntMatrix m(n + 1, count);
  for (int c = 0; c < count; ++c) {
    for (int r = 0; r < n; ++r) m.at(r, c) = verts_[c][r];
    m.at(n, c) = 1;
  }
  if (int_rank(m) != count)
    throw std::invalid_argument("Simplex: vertices not affinely independent");
}

namespace detail {

namespace {

// adj(M) with adj(M) * M = det(M) * I, via cofactors. Desk-scale sizes.
IntMatrix adjugate(const IntMatrix& m) {
  const int n = m.rows;
  IntMatrix adj(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      IntMatrix minor(n - 1, n - 1);
      int rr = 0;
      for (int r = 0; r < n; ++r) {
        if (r == j) continue;
        int cc = 0;
        for (int c = 0; c < n; ++c) {
          if (c == i) continue;
          minor.at(rr, cc++) = m.at(r, c);
        }
        ++rr;
      }
      Int d = int_det(minor);
      adj.at(i, j) = ((i + j) % 2 == 0) ? d : -d;
    }
  return adj;
}

}  // namespace

CellGeometry CellGeometry::build(std::vector<std::vector<Int>> verts) {
  CellGeometry g;
  g.verts = std::move(verts);
  const int d = static_cast<int>(g.verts.size()) - 1;
  g.bbox_lo.assign(d, Int(0));
  g.bbox_hi.assign(d, Int(0));
  for (int j = 0; j < d; ++j) {
    Int mn = g.verts[0][j], mx = mn;
    for (const auto& v : g.verts) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    g.bbox_lo[j] = mn;
    g.bbox_hi[j] = mx;
  }
  IntMatrix m(d, d);
  for (int c = 0; c < d; ++c)
    for (int r = 0; r < d; ++r) m.at(r, c) = g.verts[c + 1][r] - g.verts[0][r];
  Int det = int_det(m);
  if (det == 0) throw std::logic_error("CellGeometry: degenerate cell");
  IntMatrix adj = adjugate(m);
  g.abs_det = abs(det);
  g.scaled_rows.assign(d, std::vector<Int>(d));
  const int sign = det < 0 ? -1 : 1;
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) g.scaled_rows[i][j] = sign * adj.at(i, j);
  return g;
}

bool CellGeometry::bbox_may_contain(const RatPoint& y) const {
  for (size_t j = 0; j < bbox_lo.size(); ++j)
    if (y[j] < Rat(bbox_lo[j]) || y[j] > Rat(bbox_hi[j])) return false;
  return true;
}

std::optional<std::vector<Rat>> CellGeometry::barycentric(const RatPoint& y) const {
  const int d = static_cast<int>(verts.size()) - 1;
  std::vector<Rat> lam(d + 1);
  Rat used = 0;
  for (int i = 0; i < d; ++i) {
    Rat u = 0;
    for (int j = 0; j < d; ++j) u += Rat(scaled_rows[i][j]) * (y[j] - Rat(verts[0][j]));
    if (u < 0) return std::nullopt;
    lam[i + 1] = u / Rat(abs_det);
    used += lam[i + 1];
  }
  if (used > 1) return std::nullopt;
  lam[0] = Rat(1) - used;
  return lam;
}

}  // namespace detail

namespace {

int detail_dim(const detail::CellGeometry& g) { return static_cast<int>(g.verts.size()) - 1; }

}  // namespace

std::vector<std::vector<int>> place_triangulation(const std::vector<std::vector<Int>>& pts,
                                                  int dim, const std::vector<int>& order) {
  if (order.empty()) throw std::invalid_argument("place_triangulation: empty order");
  std::vector<std::vector<int>> cells;
  std::vector<int> inserted;

  auto affine_rank = [&](const std::vector<int>& ids, int extra) {
    std::vector<std::vector<Int>> diffs;
    for (size_t i = 1; i < ids.size(); ++i) diffs.push_back(sub(pts[ids[i]], pts[ids[0]]));
    if (extra >= 0) diffs.push_back(sub(pts[extra], pts[ids[0]]));
    if (diffs.empty()) return 0;
    return int_rank(IntMatrix::from_columns(diffs));
  };

  for (int t : order) {
    if (inserted.empty()) {
      cells.push_back({t});
      inserted.push_back(t);
      continue;
    }
    const int r = affine_rank(inserted, -1);
    const bool grows = affine_rank(inserted, t) > r;
    if (grows) {
      for (auto& c : cells) {
        c.push_back(t);
        std::sort(c.begin(), c.end());
      }
    } else {
      // Boundary facets are the (r-1)-faces lying in exactly one cell; a
      // facet is visible from the new point exactly when the barycentric
      // coordinate of the point at the omitted vertex is negative.
      std::map<std::vector<int>, int> facet_count;
      for (const auto& c : cells)
        for (size_t omit = 0; omit < c.size(); ++omit) {
          std::vector<int> f;
          for (size_t i = 0; i < c.size(); ++i)
            if (i != omit) f.push_back(c[i]);
          ++facet_count[f];
        }
      std::vector<std::vector<int>> fresh;
      for (const auto& c : cells) {
        RatMatrix sys(dim + 1, static_cast<int>(c.size()));
        for (size_t col = 0; col < c.size(); ++col) {
          for (int row = 0; row < dim; ++row) sys.at(row, static_cast<int>(col)) = pts[c[col]][row];
          sys.at(dim, static_cast<int>(col)) = 1;
        }
        std::vector<Rat> rhs;
        for (int row = 0; row < dim; ++row) rhs.push_back(Rat(pts[t][row]));
        rhs.push_back(1);
        RatSolveResult sol = rat_solve(sys, rhs);
        if (!sol.unique())
          throw std::logic_error("place_triangulation: cell lost affine independence");
        for (size_t omit = 0; omit < c.size(); ++omit) {
          if (sol.solution[omit] >= 0) continue;
          std::vector<int> f;
          for (size_t i = 0; i < c.size(); ++i)
            if (i != omit) f.push_back(c[i]);
          if (facet_count[f] != 1) continue;
          f.push_back(t);
          std::sort(f.begin(), f.end());
          fresh.push_back(std::move(f));
        }
      }
      cells.insert(cells.end(), fresh.begin(), fresh.end());
    }
    inserted.push_back(t);
  }
  return cells;
}

namespace {

using detail::CellGeometry;

// Lattice points of one full-dimensional cell in hull coordinates. The
// barycentric sign conditions are themselves the facet halfspaces.
std::vector<std::vector<Int>> cell_lattice_points(const CellGeometry& g) {
  const int d = detail_dim(g);
  HalfspaceSystem sys;
  sys.dim = d;
  std::vector<Int> sum_rows(d, Int(0));
  for (int i = 0; i < d; ++i) {
    std::vector<Int> neg(d);
    Int rhs = 0;
    for (int j = 0; j < d; ++j) {
      neg[j] = -g.scaled_rows[i][j];
      rhs -= g.scaled_rows[i][j] * g.verts[0][j];
      sum_rows[j] += g.scaled_rows[i][j];
    }
    sys.rows.push_back({std::move(neg), -rhs});  // lambda_{i+1} >= 0
  }
  Int total_rhs = g.abs_det;
  for (int j = 0; j < d; ++j) total_rhs += sum_rows[j] * g.verts[0][j];
  sys.rows.push_back({sum_rows, total_rhs});  // lambda_0 >= 0
  std::vector<std::vector<Int>> out;
  scan_lattice_points(sys, g.bbox_lo, g.bbox_hi,
                      [&](const std::vector<Int>& y) { out.push_back(y); });
  return out;
}

}  // namespace

Triangulation empty_triangulation(const LatticePolytope& k) {
  Triangulation t;
  t.poly_ = k;
  const int d = k.affine_dim();
  const int nv = static_cast<int>(k.vertices().size());

  std::vector<std::vector<Int>> points = k.vertex_hull_coords();
  std::vector<int> order(nv);
  std::iota(order.begin(), order.end(), 0);
  t.vertex_cells_ = place_triangulation(points, d, order);
  for (const auto& c : t.vertex_cells_) {
    std::vector<std::vector<Int>> vs;
    for (int i : c) vs.push_back(points[i]);
    t.vertex_cell_geo_.push_back(CellGeometry::build(std::move(vs)));
  }

  struct QCell {
    std::vector<int> idx;
    CellGeometry geo;
  };
  std::list<QCell> queue;
  for (size_t ci = 0; ci < t.vertex_cells_.size(); ++ci)
    queue.push_back({t.vertex_cells_[ci], t.vertex_cell_geo_[ci]});

  std::vector<LatticePoint> ambient(nv);
  for (int i = 0; i < nv; ++i) ambient[i] = k.vertices()[i];

  auto find_or_add = [&](const std::vector<Int>& y) {
    for (size_t i = 0; i < points.size(); ++i)
      if (points[i] == y) return static_cast<int>(i);
    points.push_back(y);
    ambient.push_back(k.ambient_from_hull(y, 1));
    return static_cast<int>(points.size()) - 1;
  };

  auto make_cell = [&](const std::vector<int>& idx) {
    std::vector<std::vector<Int>> vs;
    for (int i : idx) vs.push_back(points[i]);
    return QCell{idx, CellGeometry::build(std::move(vs))};
  };

  // Splits one cell at an interior-or-face point: cone from the point over
  // every facet not containing it.
  auto subdivide_at = [&](const QCell& cell, int w_idx,
                          const std::vector<Rat>& lam) {
    std::vector<QCell> out;
    for (size_t i = 0; i < cell.idx.size(); ++i) {
      if (lam[i] == 0) continue;  // facet opposite i contains the point
      std::vector<int> fresh;
      for (size_t j = 0; j < cell.idx.size(); ++j)
        if (j != i) fresh.push_back(cell.idx[j]);
      fresh.push_back(w_idx);
      std::sort(fresh.begin(), fresh.end());
      out.push_back(make_cell(fresh));
    }
    return out;
  };

  std::vector<std::vector<int>> final_cells;
  while (!queue.empty()) {
    QCell cell = std::move(queue.front());
    queue.pop_front();
    std::vector<std::vector<Int>> inside = cell_lattice_points(cell.geo);
    // Non-vertex lattice points, keyed by ambient lex order.
    bool has_w = false;
    std::vector<Int> w_hull;
    LatticePoint w_amb;
    for (const auto& y : inside) {
      if (std::find(cell.geo.verts.begin(), cell.geo.verts.end(), y) != cell.geo.verts.end())
        continue;
      LatticePoint amb = k.ambient_from_hull(y, 1);
      if (!has_w || amb < w_amb) {
        has_w = true;
        w_hull = y;
        w_amb = std::move(amb);
      }
    }
    if (!has_w) {
      final_cells.push_back(cell.idx);
      continue;
    }
    const int w_idx = find_or_add(w_hull);
    RatPoint w_rat = to_rat(w_hull);
    std::list<QCell> next;
    auto lam0 = cell.geo.barycentric(w_rat);
    for (auto& piece : subdivide_at(cell, w_idx, *lam0)) next.push_back(std::move(piece));
    // The point may sit on faces shared with cells still pending; those must
    // split too to keep the complex conforming. Verified-empty cells cannot
    // contain it (it would be a non-vertex lattice point of an empty cell).
    for (auto& q : queue) {
      if (!q.geo.bbox_may_contain(w_rat)) {
        next.push_back(std::move(q));
        continue;
      }
      auto lam = q.geo.barycentric(w_rat);
      if (!lam) {
        next.push_back(std::move(q));
        continue;
      }
      for (auto& piece : subdivide_at(q, w_idx, *lam)) next.push_back(std::move(piece));
    }
    queue = std::move(next);
  }

  for (const auto& idx : final_cells) {
    std::vector<std::pair<LatticePoint, std::vector<Int>>> pairs;
    for (int i : idx) pairs.push_back({ambient[i], points[i]});
    std::sort(pairs.begin(), pairs.end());
    std::vector<LatticePoint> amb_sorted;
    std::vector<std::vector<Int>> hull_sorted;
    for (auto& [a, h] : pairs) {
      amb_sorted.push_back(std::move(a));
      hull_sorted.push_back(std::move(h));
    }
    t.cells_.push_back(Simplex(std::move(amb_sorted)));
    t.cell_geo_.push_back(CellGeometry::build(std::move(hull_sorted)));
  }
  return t;
}

std::pair<int, BarycentricCoords> locate(const Triangulation& t, const RatPoint& q) {
  auto y = t.poly_.hull_coords(q, Rat(1));
  if (!y) throw MembershipError("locate: point outside K (off the affine span)");
  for (size_t i = 0; i < t.cell_geo_.size(); ++i) {
    const auto& geo = t.cell_geo_[i];
    if (!geo.bbox_may_contain(*y)) continue;
    auto lam = geo.barycentric(*y);
    if (!lam) continue;
    BarycentricCoords bc;
    bc.simplex_index = static_cast<int>(i);
    bc.mass = 1;
    bc.coefficients = std::move(*lam);
    return {static_cast<int>(i), std::move(bc)};
  }
  throw MembershipError("locate: point outside K");
}

ConvexCoeffs Triangulation::vertex_witness(const LatticePoint& w) const {
  auto y = poly_.hull_coords(w, Int(1));
  if (y) {
    RatPoint yr = to_rat(*y);
    for (size_t ci = 0; ci < vertex_cell_geo_.size(); ++ci) {
      if (!vertex_cell_geo_[ci].bbox_may_contain(yr)) continue;
      auto lam = vertex_cell_geo_[ci].barycentric(yr);
      if (!lam) continue;
      ConvexCoeffs out;
      out.mass = 1;
      for (size_t j = 0; j < vertex_cells_[ci].size(); ++j)
        if ((*lam)[j] != 0) out.terms[vertex_cells_[ci][j]] = (*lam)[j];
      return out;
    }
  }
  throw MembershipError("vertex_witness: point not in K");
}

BarycentricCoords barycentric(const Simplex& s, const RatPoint& x, int m) {
  if (static_cast<int>(x.size()) != s.ambient_dim())
    throw DimensionMismatch("barycentric: dimension mismatch");
  if (m < 1) throw std::invalid_argument("barycentric: dilation must be >= 1");
  const int n = s.ambient_dim();
  const int count = static_cast<int>(s.vertices().size());
  RatMatrix sys(n + 1, count);
  for (int c = 0; c < count; ++c) {
    for (int r = 0; r < n; ++r) sys.at(r, c) = s.vertices()[c][r];
    sys.at(n, c) = 1;
  }
  std::vector<Rat> rhs(x);
  rhs.push_back(m);
  RatSolveResult sol = rat_solve(sys, rhs);
  if (!sol.unique()) throw MembershipError("barycentric: point outside the dilated simplex");
  for (const Rat& v : sol.solution)
    if (v < 0) throw MembershipError("barycentric: point outside the dilated simplex");
  BarycentricCoords bc;
  bc.mass = m;
  bc.coefficients = std::move(sol.solution);
  return bc;
}

BarycentricCoords barycentric(const Simplex& s, const LatticePoint& x, int m) {
  return barycentric(s, to_rat(x), m);
}

RatPoint reconstruct(const Simplex& s, const BarycentricCoords& coords) {
  RatPoint acc(s.ambient_dim(), Rat(0));
  for (size_t i = 0; i < s.vertices().size(); ++i)
    for (int j = 0; j < s.ambient_dim(); ++j)
      acc[j] += coords.coefficients[i] * Rat(s.vertices()[i][j]);
  return acc;
}

Int normalized_volume(const Simplex& s) {
  const int d = s.affine_dim();
  if (d == 0) return 1;
  std::vector<std::vector<Int>> diffs;
  for (int i = 1; i <= d; ++i) diffs.push_back(sub(s.vertices()[i], s.vertices()[0]));
  std::vector<Int> div = snf_divisors(IntMatrix::from_columns(diffs));
  Int vol = 1;
  for (const Int& v : div)
    if (v != 0) vol *= v;
  return vol;
}

Int normalized_volume(const LatticePolytope& k) {
  const int d = k.affine_dim();
  if (d == 0) return 1;
  std::vector<int> order(k.vertices().size());
  std::iota(order.begin(), order.end(), 0);
  auto cells = place_triangulation(k.vertex_hull_coords(), d, order);
  Int total = 0;
  for (const auto& c : cells) {
    IntMatrix m(d, d);
    for (int col = 1; col <= d; ++col)
      for (int row = 0; row < d; ++row)
        m.at(row, col - 1) = k.vertex_hull_coords()[c[col]][row] - k.vertex_hull_coords()[c[0]][row];
    total += abs(int_det(m));
  }
  return total;
}

}  // namespace sflat
