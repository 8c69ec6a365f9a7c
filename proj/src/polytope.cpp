#include "sflat/polytope.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace sflat {

Rat ConvexCoeffs::coefficient_sum() const {
  Rat s = 0;
  for (const auto& [idx, c] : terms) s += c;
  return s;
}

namespace {

// Lexicographic subset enumeration: calls fn for every size-k index subset
// of {0..n-1} until fn returns true; returns whether some call did.
bool for_each_combination(int n, int k, const std::function<bool(const std::vector<int>&)>& fn) {
  if (k > n || k < 0) return false;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  for (;;) {
    if (fn(idx)) return true;
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return false;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Solves Σ λ_i p_i = target, Σ λ_i = mass, λ ≥ 0 with support on an
// affinely independent subset of the given points (Carathéodory search,
// sizes ascending, subsets lexicographic). Returns (indices, coefficients).
std::optional<std::pair<std::vector<int>, std::vector<Rat>>> convex_combination(
    const std::vector<LatticePoint>& points, const RatPoint& target, const Rat& mass) {
  const int n = static_cast<int>(target.size());
  const int count = static_cast<int>(points.size());
  if (mass == 0) {
    for (const Rat& t : target)
      if (t != 0) return std::nullopt;
    return std::make_pair(std::vector<int>{}, std::vector<Rat>{});
  }
  std::optional<std::pair<std::vector<int>, std::vector<Rat>>> found;
  const int max_size = std::min(count, n + 1);
  for (int s = 1; s <= max_size && !found; ++s) {
    for_each_combination(count, s, [&](const std::vector<int>& idx) {
      RatMatrix sys(n + 1, s);
      for (int c = 0; c < s; ++c) {
        for (int r = 0; r < n; ++r) sys.at(r, c) = points[idx[c]][r];
        sys.at(n, c) = 1;
      }
      std::vector<Rat> rhs(target);
      rhs.push_back(mass);
      RatSolveResult sol = rat_solve(sys, rhs);
      if (!sol.unique()) return false;  // dependent subset or no solution
      for (const Rat& v : sol.solution)
        if (v < 0) return false;
      found = std::make_pair(idx, std::move(sol.solution));
      return true;
    });
  }
  return found;
}

}  // namespace

LatticePolytope LatticePolytope::from_points(int ambient_dim, std::vector<LatticePoint> pts) {
  return from_points(PointSet(ambient_dim, std::move(pts)));
}

LatticePolytope LatticePolytope::from_points(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("LatticePolytope: empty point set");
  if (s.ambient_dim() < 1) throw std::invalid_argument("LatticePolytope: ambient dim must be >= 1");
  LatticePolytope k;
  k.dim_ = s.ambient_dim();
  k.vertices_ = extreme_points(s);

  const int n = k.dim_;
  const int nv = static_cast<int>(k.vertices_.size());
  const LatticePoint& v0 = k.vertices_[0];

  if (nv == 1) {
    k.affine_dim_ = 0;
    k.to_hull_ = IntMatrix::identity(n);
    k.from_hull_ = IntMatrix::identity(n);
    k.hull_coords_.assign(1, {});
    k.facets_.dim = 0;
    return k;
  }

  std::vector<std::vector<Int>> diffs;
  for (int i = 1; i < nv; ++i) diffs.push_back(sub(k.vertices_[i], v0));
  IntMatrix d = IntMatrix::from_columns(diffs);
  const int rank = int_rank(d);
  k.affine_dim_ = rank;

  if (rank == n) {
    k.to_hull_ = IntMatrix::identity(n);
    k.from_hull_ = IntMatrix::identity(n);
  } else {
    SmithDecomposition smith = smith_decompose(d);
    k.to_hull_ = std::move(smith.u);
    k.from_hull_ = std::move(smith.u_inv);
  }

  k.hull_coords_.resize(nv);
  for (int i = 0; i < nv; ++i) {
    std::vector<Int> w = k.to_hull_.apply(sub(k.vertices_[i], v0));
    for (int j = rank; j < n; ++j)
      if (w[j] != 0) throw std::logic_error("hull transform failed to flatten span");
    w.resize(rank);
    k.hull_coords_[i] = std::move(w);
  }

  k.facets_ = brute_force_facets(k.hull_coords_, rank);
  return k;
}

HalfspaceSystem brute_force_facets(const std::vector<std::vector<Int>>& pts, int dim) {
  HalfspaceSystem sys;
  sys.dim = dim;
  if (dim == 0) return sys;
  const int count = static_cast<int>(pts.size());
  std::set<std::pair<std::vector<Int>, Int>> seen;
  for_each_combination(count, dim, [&](const std::vector<int>& idx) {
    std::vector<std::vector<Int>> rows;
    for (int i = 1; i < dim; ++i) rows.push_back(sub(pts[idx[i]], pts[idx[0]]));
    std::vector<Int> g = orthogonal_vector(rows, dim);
    bool zero = true;
    for (const Int& v : g)
      if (v != 0) {
        zero = false;
        break;
      }
    if (zero) return false;  // subset not spanning a hyperplane
    make_primitive(g);
    Int b = dot(g, pts[idx[0]]);
    int above = 0, below = 0;
    for (const auto& p : pts) {
      Int s = dot(g, p);
      if (s > b) ++above;
      else if (s < b) ++below;
    }
    if (above > 0 && below > 0) return false;  // not supporting
    if (above > 0) {
      for (Int& v : g) v = -v;
      b = -b;
    }
    seen.insert({std::move(g), std::move(b)});
    return false;  // keep enumerating
  });
  for (const auto& [g, b] : seen) sys.rows.push_back({g, b});
  return sys;
}

LatticePoint LatticePolytope::ambient_from_hull(const std::vector<Int>& y, const Int& dilation) const {
  LatticePoint x = scale(dilation, base_vertex());
  return add(x, ambient_vector_from_hull(y));
}

LatticePoint LatticePolytope::ambient_vector_from_hull(const std::vector<Int>& y) const {
  LatticePoint x(dim_, Int(0));
  for (int j = 0; j < affine_dim_; ++j)
    for (int r = 0; r < dim_; ++r) x[r] += from_hull_.at(r, j) * y[j];
  return x;
}

std::optional<std::vector<Int>> LatticePolytope::hull_coords(const LatticePoint& x,
                                                             const Int& dilation) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("hull_coords: dimension mismatch");
  std::vector<Int> w = to_hull_.apply(sub(x, scale(dilation, base_vertex())));
  for (int j = affine_dim_; j < dim_; ++j)
    if (w[j] != 0) return std::nullopt;
  w.resize(affine_dim_);
  return w;
}

std::optional<RatPoint> LatticePolytope::hull_coords(const RatPoint& x, const Rat& dilation) const {
  if (static_cast<int>(x.size()) != dim_)
    throw std::invalid_argument("hull_coords: dimension mismatch");
  RatPoint diff(dim_);
  for (int i = 0; i < dim_; ++i) diff[i] = x[i] - dilation * Rat(base_vertex()[i]);
  RatPoint w(dim_);
  for (int r = 0; r < dim_; ++r) {
    Rat s = 0;
    for (int c = 0; c < dim_; ++c) s += Rat(to_hull_.at(r, c)) * diff[c];
    w[r] = s;
  }
  for (int j = affine_dim_; j < dim_; ++j)
    if (w[j] != 0) return std::nullopt;
  w.resize(affine_dim_);
  return w;
}

bool LatticePolytope::contains(const LatticePoint& x, const Int& dilation) const {
  auto y = hull_coords(x, dilation);
  if (!y) return false;
  for (const auto& row : facets_.rows)
    if (dot(row.coeffs, *y) > dilation * row.bound) return false;
  return true;
}

bool LatticePolytope::contains(const RatPoint& x, const Rat& dilation) const {
  auto y = hull_coords(x, dilation);
  if (!y) return false;
  for (const auto& row : facets_.rows) {
    Rat s = 0;
    for (int j = 0; j < affine_dim_; ++j) s += Rat(row.coeffs[j]) * (*y)[j];
    if (s > dilation * Rat(row.bound)) return false;
  }
  return true;
}

PointSet extreme_points(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("extreme_points: empty input");
  std::vector<LatticePoint> extremes;
  for (size_t i = 0; i < s.size(); ++i) {
    std::vector<LatticePoint> others;
    others.reserve(s.size() - 1);
    for (size_t j = 0; j < s.size(); ++j)
      if (j != i) others.push_back(s[j]);
    if (others.empty() || !convex_combination(others, to_rat(s[i]), 1))
      extremes.push_back(s[i]);
  }
  return PointSet(s.ambient_dim(), std::move(extremes));
}

int affine_dim(const PointSet& s) {
  if (s.empty()) throw std::invalid_argument("affine_dim: empty input");
  if (s.size() == 1) return 0;
  std::vector<std::vector<Int>> diffs;
  for (size_t i = 1; i < s.size(); ++i) diffs.push_back(sub(s[i], s[0]));
  return int_rank(IntMatrix::from_columns(diffs));
}

std::optional<ConvexCoeffs> member(const LatticePolytope& k, const RatPoint& x, int m) {
  if (static_cast<int>(x.size()) != k.ambient_dim())
    throw std::invalid_argument("member: dimension mismatch");
  if (m < 1) throw std::invalid_argument("member: dilation must be >= 1");
  auto combo = convex_combination(k.vertices().points(), x, Rat(m));
  if (!combo) return std::nullopt;
  ConvexCoeffs coeffs;
  coeffs.mass = m;
  for (size_t i = 0; i < combo->first.size(); ++i) coeffs.terms[combo->first[i]] = combo->second[i];
  if (!witness_verifies(k, x, Rat(m), coeffs))
    throw std::logic_error("member: produced witness failed substitution");
  return coeffs;
}

std::optional<ConvexCoeffs> member(const LatticePolytope& k, const LatticePoint& x, int m) {
  return member(k, to_rat(x), m);
}

bool witness_verifies(const LatticePolytope& k, const RatPoint& x, const Rat& mass,
                      const ConvexCoeffs& coeffs) {
  if (coeffs.mass != mass) return false;
  Rat total = 0;
  RatPoint acc(k.ambient_dim(), Rat(0));
  for (const auto& [idx, c] : coeffs.terms) {
    if (idx < 0 || idx >= static_cast<int>(k.vertices().size())) return false;
    if (c < 0) return false;
    total += c;
    for (int j = 0; j < k.ambient_dim(); ++j) acc[j] += c * Rat(k.vertices()[idx][j]);
  }
  if (total != mass) return false;
  for (int j = 0; j < k.ambient_dim(); ++j)
    if (acc[j] != x[j]) return false;
  return true;
}

ConvexCoeffs caratheodory_reduce(const LatticePolytope& k, const RatPoint& x,
                                 const ConvexCoeffs& coeffs) {
  if (!witness_verifies(k, x, coeffs.mass, coeffs))
    throw std::invalid_argument("caratheodory_reduce: invalid input witness");

  auto support_of = [](const std::map<int, Rat>& terms) {
    std::vector<int> sup;
    for (const auto& [idx, c] : terms) sup.push_back(idx);
    return sup;
  };
  auto independent = [&](const std::vector<int>& sup) {
    if (sup.empty()) return true;
    IntMatrix m(k.ambient_dim() + 1, static_cast<int>(sup.size()));
    for (size_t c = 0; c < sup.size(); ++c) {
      for (int r = 0; r < k.ambient_dim(); ++r) m.at(r, static_cast<int>(c)) = k.vertices()[sup[c]][r];
      m.at(k.ambient_dim(), static_cast<int>(c)) = 1;
    }
    return int_rank(m) == static_cast<int>(sup.size());
  };

  if (independent(support_of(coeffs.terms))) return coeffs;

  ConvexCoeffs cur = coeffs;
  // Drop zero coefficients, then repeatedly cancel an affine dependence of
  // the support. Each round zeroes at least one coefficient.
  for (auto it = cur.terms.begin(); it != cur.terms.end();)
    it = (it->second == 0) ? cur.terms.erase(it) : std::next(it);
  for (;;) {
    std::vector<int> sup = support_of(cur.terms);
    if (independent(sup)) break;
    IntMatrix m(k.ambient_dim() + 1, static_cast<int>(sup.size()));
    for (size_t c = 0; c < sup.size(); ++c) {
      for (int r = 0; r < k.ambient_dim(); ++r) m.at(r, static_cast<int>(c)) = k.vertices()[sup[c]][r];
      m.at(k.ambient_dim(), static_cast<int>(c)) = 1;
    }
    std::vector<Rat> dep = *kernel_vector(m);
    bool has_positive = false;
    for (const Rat& v : dep)
      if (v > 0) {
        has_positive = true;
        break;
      }
    if (!has_positive)
      for (Rat& v : dep) v = -v;
    // Largest step keeping all coefficients nonnegative.
    bool first = true;
    Rat t;
    for (size_t i = 0; i < sup.size(); ++i) {
      if (dep[i] <= 0) continue;
      Rat cand = cur.terms[sup[i]] / dep[i];
      if (first || cand < t) {
        t = cand;
        first = false;
      }
    }
    for (size_t i = 0; i < sup.size(); ++i) cur.terms[sup[i]] -= t * dep[i];
    for (auto it = cur.terms.begin(); it != cur.terms.end();)
      it = (it->second == 0) ? cur.terms.erase(it) : std::next(it);
  }
  if (!witness_verifies(k, x, cur.mass, cur))
    throw std::logic_error("caratheodory_reduce: reduction broke the witness");
  return cur;
}

PointSet lattice_points(const LatticePolytope& k, int m) {
  if (m < 1) throw std::invalid_argument("lattice_points: dilation must be >= 1");
  const int d = k.affine_dim();
  const Int dil(m);
  if (d == 0) return PointSet(k.ambient_dim(), {scale(dil, k.base_vertex())});

  HalfspaceSystem sys;
  sys.dim = d;
  for (const auto& row : k.hull_facets().rows) sys.rows.push_back({row.coeffs, dil * row.bound});

  std::vector<Int> lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    Int mn = k.vertex_hull_coords()[0][j], mx = mn;
    for (const auto& c : k.vertex_hull_coords()) {
      if (c[j] < mn) mn = c[j];
      if (c[j] > mx) mx = c[j];
    }
    lo[j] = dil * mn;
    hi[j] = dil * mx;
  }

  std::vector<LatticePoint> pts;
  scan_lattice_points(sys, lo, hi,
                      [&](const std::vector<Int>& y) { pts.push_back(k.ambient_from_hull(y, dil)); });
  return PointSet(k.ambient_dim(), std::move(pts));
}

bool is_empty_polytope(const LatticePolytope& k) {
  return lattice_points(k, 1).size() == k.vertices().size();
}

bool is_projectively_faithful(const LatticePolytope& k) {
  PointSet s = lattice_points(k, 1);
  if (s.size() < 2) return false;
  std::vector<std::vector<Int>> diffs;
  for (size_t i = 1; i < s.size(); ++i) diffs.push_back(sub(s[i], s[0]));
  std::vector<Int> divisors = snf_divisors(IntMatrix::from_columns(diffs));
  int nonzero = 0;
  for (const Int& v : divisors) {
    if (v == 0) continue;
    if (v != 1) return false;
    ++nonzero;
  }
  return nonzero == k.ambient_dim();
}

}  // namespace sflat
