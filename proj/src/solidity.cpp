#include "sflat/solidity.hpp"

#include "sflat/errors.hpp"

#include <algorithm>
#include <map>

namespace sflat {

VertexCone VertexCone::at_vertex(const LatticePolytope& k, int vertex_index) {
  if (vertex_index < 0 || vertex_index >= static_cast<int>(k.vertices().size()))
    throw std::invalid_argument("VertexCone: vertex index out of range");
  VertexCone c;
  c.poly_ = k;
  c.vertex_index_ = vertex_index;
  c.vertex_ = k.vertices()[vertex_index];
  c.vertex_hull_ = k.vertex_hull_coords()[vertex_index];

  const int n = k.ambient_dim();
  const int d = k.affine_dim();

  PointSet s1 = lattice_points(k, 1);
  std::vector<LatticePoint> translated;
  for (const auto& w : s1) translated.push_back(sub(w, c.vertex_));
  c.generators_ = PointSet(n, std::move(translated));

  c.cone_.dim = d;
  std::vector<Int> phi_hull(d, Int(0));
  for (const auto& row : k.hull_facets().rows) {
    if (dot(row.coeffs, c.vertex_hull_) != row.bound) continue;  // not tight at v
    std::vector<Int> g = row.coeffs;
    for (int j = 0; j < d; ++j) phi_hull[j] -= g[j];
    c.cone_.rows.push_back({std::move(g), Int(0)});
  }

  // Ambient functional f with f = phi_hull composed with the hull transform,
  // then made primitive. Every nonzero generator keeps a positive integer
  // value: f(g) was positive before the division and the gcd divides it.
  std::vector<Int> f(n, Int(0));
  for (int r = 0; r < n; ++r) {
    Int s = 0;
    for (int j = 0; j < d; ++j) s += phi_hull[j] * k.hull_transform().at(j, r);
    f[r] = s;
  }
  make_primitive(f);
  c.phi_ = std::move(f);

  // phi in hull coordinates, rescaled consistently with the primitive f.
  c.phi_hull_.assign(d, Int(0));
  for (int j = 0; j < d; ++j) {
    std::vector<Int> unit(d, Int(0));
    unit[j] = 1;
    c.phi_hull_[j] = dot(c.phi_, k.ambient_vector_from_hull(unit));
  }

  bool first = true;
  for (size_t i = 0; i < c.generators_.size(); ++i) {
    const LatticePoint& g = c.generators_[i];
    if (std::all_of(g.begin(), g.end(), [](const Int& v) { return v == 0; })) continue;
    Int val = dot(c.phi_, g);
    if (val < 1) throw std::logic_error("VertexCone: functional not positive on a generator");
    if (val > c.max_phi_) c.max_phi_ = val;
    if (first || val < c.delta_) c.delta_ = val;
    first = false;
    auto y = k.hull_coords(add(c.vertex_, g), Int(1));
    std::vector<Int> gh(d);
    for (int j = 0; j < d; ++j) gh[j] = (*y)[j] - c.vertex_hull_[j];
    c.gens_hull_.push_back(std::move(gh));
    c.gens_ambient_.push_back(g);
  }
  if (first) c.delta_ = 1;

  for (int i = 0; i < static_cast<int>(k.vertices().size()); ++i) {
    if (i == vertex_index) continue;
    std::vector<Int> ray(d);
    for (int j = 0; j < d; ++j) ray[j] = k.vertex_hull_coords()[i][j] - c.vertex_hull_[j];
    Int pv = dot(c.phi_hull_, ray);
    if (pv < 1) throw std::logic_error("VertexCone: ray with nonpositive phi");
    c.rays_hull_.push_back(std::move(ray));
    c.ray_phi_.push_back(pv);
  }
  return c;
}

Int VertexCone::phi_value(const LatticePoint& y) const {
  return dot(phi_, y);
}

// Shared machinery for the bounded cone searches: rational-cone tests,
// memoized monoid reachability with summand recovery, and region scans.
class ConeSearch {
 public:
  explicit ConeSearch(const VertexCone& c) : c_(c) {}

  const VertexCone& cone() const { return c_; }

  bool in_rational_cone(const std::vector<Int>& z) const {
    for (const auto& row : c_.cone_.rows)
      if (dot(row.coeffs, z) > 0) return false;
    return true;
  }

  Int phi_hull(const std::vector<Int>& z) const { return dot(c_.phi_hull_, z); }

  // Hull coordinates of a translated lattice vector; nullopt off the span
  // lattice (such a point is never in the rational cone).
  std::optional<std::vector<Int>> hull_vector(const LatticePoint& y) const {
    auto w = c_.poly_.hull_coords(add(c_.vertex_, y), Int(1));
    if (!w) return std::nullopt;
    std::vector<Int> z(c_.poly_.affine_dim());
    for (int j = 0; j < c_.poly_.affine_dim(); ++j) z[j] = (*w)[j] - c_.vertex_hull_[j];
    return z;
  }

  // z ∈ monoid of nonzero generators? Memoized over hull coordinates.
  bool reachable(const std::vector<Int>& z) {
    bool zero = std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; });
    if (zero) return true;
    auto it = memo_.find(z);
    if (it != memo_.end()) return it->second >= 0;
    memo_[z] = -2;  // in progress marker; phi strictly decreases, no cycles
    int found = -1;
    for (size_t gi = 0; gi < c_.gens_hull_.size(); ++gi) {
      std::vector<Int> rest = z;
      bool ok = true;
      for (size_t j = 0; j < rest.size(); ++j) rest[j] -= c_.gens_hull_[gi][j];
      if (!in_rational_cone(rest)) ok = false;
      if (ok && reachable(rest)) {
        found = static_cast<int>(gi);
        break;
      }
    }
    memo_[z] = found;
    return found >= 0;
  }

  // Generator summands for a reachable z, ambient translated coordinates.
  std::vector<LatticePoint> summands(std::vector<Int> z) {
    std::vector<LatticePoint> out;
    for (;;) {
      bool zero = std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; });
      if (zero) break;
      if (!reachable(z)) throw std::logic_error("summands: not reachable");
      int gi = memo_.at(z);
      out.push_back(c_.gens_ambient_[gi]);
      for (size_t j = 0; j < z.size(); ++j) z[j] -= c_.gens_hull_[gi][j];
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Lattice points of the rational cone with phi <= bound, lex order in
  // hull coordinates.
  std::vector<std::vector<Int>> region(const Int& bound) {
    const int d = c_.poly_.affine_dim();
    if (d == 0) return {{}};
    std::vector<Int> lo(d, Int(0)), hi(d, Int(0));
    for (size_t i = 0; i < c_.rays_hull_.size(); ++i) {
      for (int j = 0; j < d; ++j) {
        // extreme scaled ray coordinate: bound * ray_j / phi(ray)
        Int num = bound * c_.rays_hull_[i][j];
        Int f = floor_div(num, c_.ray_phi_[i]);
        Int cdiv = ceil_div(num, c_.ray_phi_[i]);
        if (f < lo[j]) lo[j] = f;
        if (cdiv > hi[j]) hi[j] = cdiv;
      }
    }
    HalfspaceSystem sys = c_.cone_;
    sys.rows.push_back({c_.phi_hull_, bound});
    std::vector<std::vector<Int>> out;
    scan_lattice_points(sys, lo, hi, [&](const std::vector<Int>& y) { out.push_back(y); });
    return out;
  }

  LatticePoint ambient_vector(const std::vector<Int>& z) const {
    return c_.poly_.ambient_vector_from_hull(z);
  }

  // Rational conic representation over an independent subset of the vertex
  // rays; clearing denominators certifies a multiple inside the monoid.
  std::pair<Int, std::vector<LatticePoint>> multiple_certificate(const std::vector<Int>& z) {
    const int d = c_.poly_.affine_dim();
    const int nrays = static_cast<int>(c_.rays_hull_.size());
    std::vector<int> idx;
    std::function<std::optional<std::pair<Int, std::vector<LatticePoint>>>(int, int)> search =
        [&](int start, int remaining) -> std::optional<std::pair<Int, std::vector<LatticePoint>>> {
      if (remaining == 0) {
        IntMatrix m(d, static_cast<int>(idx.size()));
        for (size_t col = 0; col < idx.size(); ++col)
          for (int row = 0; row < d; ++row) m.at(row, static_cast<int>(col)) = c_.rays_hull_[idx[col]][row];
        RatSolveResult sol = rat_solve(m, z);
        if (!sol.unique()) return std::nullopt;
        for (const Rat& v : sol.solution)
          if (v < 0) return std::nullopt;
        Int k = 1;
        for (const Rat& v : sol.solution) k = boost::multiprecision::lcm(k, denominator(v));
        if (k == 1) k = 2;  // z itself not in the monoid, so force a proper multiple
        std::vector<LatticePoint> sums;
        for (size_t col = 0; col < idx.size(); ++col) {
          Int times = numerator(sol.solution[col] * Rat(k));
          LatticePoint g = ambient_vector(c_.rays_hull_[idx[col]]);
          for (Int t = 0; t < times; ++t) sums.push_back(g);
        }
        std::sort(sums.begin(), sums.end());
        return std::make_pair(k, sums);
      }
      for (int i = start; i <= nrays - remaining; ++i) {
        idx.push_back(i);
        auto r = search(i + 1, remaining - 1);
        idx.pop_back();
        if (r) return r;
      }
      return std::nullopt;
    };
    for (int size = 1; size <= std::min(d, nrays); ++size) {
      auto r = search(0, size);
      if (r) return *r;
    }
    throw std::logic_error("multiple_certificate: no conic representation found");
  }

 private:
  const VertexCone& c_;
  std::map<std::vector<Int>, int> memo_;  // first workable generator, -1 none
};

std::optional<std::vector<LatticePoint>> cone_member(const VertexCone& c, const LatticePoint& y) {
  if (static_cast<int>(y.size()) != c.polytope().ambient_dim())
    throw DimensionMismatch("cone_member: dimension mismatch");
  ConeSearch search(c);
  auto z = search.hull_vector(y);
  if (!z) return std::nullopt;
  if (!search.in_rational_cone(*z)) return std::nullopt;
  if (!search.reachable(*z)) return std::nullopt;
  return search.summands(*z);
}

std::vector<HoleReport> cone_holes(const VertexCone& c, const Int& bound) {
  if (bound < 1) throw std::invalid_argument("cone_holes: bound must be >= 1");
  std::vector<HoleReport> out;
  ConeSearch search(c);
  for (const auto& z : search.region(bound)) {
    bool zero = std::all_of(z.begin(), z.end(), [](const Int& v) { return v == 0; });
    if (zero) continue;
    if (search.reachable(z)) continue;
    HoleReport hr;
    hr.vertex = c.vertex();
    hr.hole = search.ambient_vector(z);
    hr.scan_bound = bound;
    // Small multipliers via the decision procedure first, then the generic
    // denominator-clearing certificate.
    bool found = false;
    for (Int k = 2; k <= 8 && !found; ++k) {
      std::vector<Int> kz(z.size());
      for (size_t j = 0; j < z.size(); ++j) kz[j] = k * z[j];
      if (search.reachable(kz)) {
        hr.multiplier = k;
        hr.multiple_summands = search.summands(kz);
        found = true;
      }
    }
    if (!found) {
      auto [k, sums] = search.multiple_certificate(z);
      hr.multiplier = k;
      hr.multiple_summands = std::move(sums);
    }
    out.push_back(std::move(hr));
  }
  return out;
}

bool is_atom(const VertexCone& c, const LatticePoint& x) {
  ConeSearch search(c);
  auto z = search.hull_vector(x);
  if (!z || !search.in_rational_cone(*z))
    throw std::invalid_argument("is_atom: point not in the lattice cone");
  bool zero = std::all_of(z->begin(), z->end(), [](const Int& v) { return v == 0; });
  if (zero) throw std::invalid_argument("is_atom: zero is not eligible");
  Int budget = search.phi_hull(*z) - 1;
  for (const auto& y : search.region(budget)) {
    if (std::all_of(y.begin(), y.end(), [](const Int& v) { return v == 0; })) continue;
    std::vector<Int> rest(z->size());
    for (size_t j = 0; j < rest.size(); ++j) rest[j] = (*z)[j] - y[j];
    if (std::all_of(rest.begin(), rest.end(), [](const Int& v) { return v == 0; })) continue;
    if (search.in_rational_cone(rest)) return false;
  }
  return true;
}

SolidityReport is_solid(const LatticePolytope& k) {
  SolidityReport rep;
  const int d = k.affine_dim();
  PointSet s1 = lattice_points(k, 1);
  PointSet fold = s1;
  for (int m = 2; m <= d - 1; ++m) {
    fold = minkowski_sum(fold, s1);
    PointSet sm = lattice_points(k, m);
    if (sm != fold) {
      rep.verdict = SolidityVerdict::NotSolid;
      rep.witness_m = m;
      rep.witness_point = set_difference(sm, fold)[0];
      return rep;
    }
  }
  rep.verdict = SolidityVerdict::Solid;
  if (d <= 2) rep.note = "vacuous range: affine dimension <= 2";
  return rep;
}

std::vector<std::pair<int, bool>> equality_profile(const LatticePolytope& k, int m_max) {
  if (m_max < 1) throw std::invalid_argument("equality_profile: m_max must be >= 1");
  std::vector<std::pair<int, bool>> out;
  PointSet s1 = lattice_points(k, 1);
  PointSet fold = s1;
  out.push_back({1, true});
  for (int m = 2; m <= m_max; ++m) {
    fold = minkowski_sum(fold, s1);
    out.push_back({m, lattice_points(k, m) == fold});
  }
  return out;
}

SolidityReport locally_solid_check(const LatticePolytope& k, const EffortBudget& effort) {
  SolidityReport rep;
  const int n = k.ambient_dim();
  const bool faithful = is_projectively_faithful(k);

  if (faithful) {
    PointSet s1 = lattice_points(k, 1);
    PointSet fold = s1;
    for (int m = 1; m <= effort.m_max; ++m) {
      if (m > 1) fold = minkowski_sum(fold, s1);
      if (m < n - 1) continue;
      if (lattice_points(k, m) == fold) {
        rep.verdict = SolidityVerdict::LocallySolidYes;
        rep.witness_m = m;
        return rep;
      }
    }
  }

  for (int vi = 0; vi < static_cast<int>(k.vertices().size()); ++vi) {
    VertexCone cone = VertexCone::at_vertex(k, vi);
    Int bound = effort.hole_bound;
    if (bound == 0) {
      bound = Int(2) * (k.affine_dim() + 1) * cone.max_generator_phi();
      if (bound < 1) bound = 1;
    }
    auto holes = cone_holes(cone, bound);
    if (!holes.empty()) {
      rep.verdict = SolidityVerdict::LocallySolidNo;
      rep.hole = holes.front();
      return rep;
    }
  }

  rep.verdict = SolidityVerdict::Unknown;
  rep.note = faithful ? "budget exhausted: no certifying m, no hole found"
                      : "not projectively faithful: equality criterion inapplicable; no hole found";
  return rep;
}

void Example4Params::validate() const {
  if (n < 4) throw std::invalid_argument("example4: n must be >= 4");
  if (static_cast<int>(a.size()) != n - 1)
    throw std::invalid_argument("example4: a must have n-1 entries");
  Int sum = 0;
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] <= 0)
      throw std::invalid_argument("example4: a(" + std::to_string(i + 1) + ") must be positive");
    if (a[i] >= d)
      throw std::invalid_argument("example4: a(" + std::to_string(i + 1) + ") must be below d");
    sum += a[i];
  }
  if (sum >= d) throw std::invalid_argument("example4: sum of a must be below d");
}

LatticePolytope example4_polytope(const Example4Params& p) {
  p.validate();
  std::vector<LatticePoint> pts;
  pts.push_back(LatticePoint(p.n, Int(0)));
  for (int i = 0; i < p.n - 1; ++i) {
    LatticePoint e(p.n, Int(0));
    e[i] = 1;
    pts.push_back(std::move(e));
  }
  LatticePoint apex(p.n);
  for (int i = 0; i < p.n - 1; ++i) apex[i] = p.a[i];
  apex[p.n - 1] = p.d;
  pts.push_back(std::move(apex));
  return LatticePolytope::from_points(p.n, std::move(pts));
}

SharpnessReport verify_example4_sharpness(const Example4Params& p) {
  p.validate();
  LatticePolytope k = example4_polytope(p);
  LatticePoint one(p.n, Int(1));

  SharpnessReport rep;
  rep.one_in_lower = member(k, one, p.n - 1).has_value();
  rep.one_not_in_lower2 = !member(k, one, p.n - 2).has_value();

  // Unique nonzero-vertex representation: 1 = sum c_v v over the n linearly
  // independent nonzero vertices; the mass is sum c_v.
  std::vector<std::vector<Rat>> cols;
  for (const auto& v : k.vertices()) {
    if (std::all_of(v.begin(), v.end(), [](const Int& c) { return c == 0; })) continue;
    cols.push_back(to_rat(v));
  }
  RatMatrix m = RatMatrix::from_columns(cols);
  RatSolveResult sol = rat_solve(m, to_rat(one));
  if (!sol.unique()) throw std::logic_error("example4: vertex system not invertible");
  rep.mass = 0;
  for (const Rat& c : sol.solution) rep.mass += c;
  Int asum = 0;
  for (const Int& ai : p.a) asum += ai;
  rep.expected_mass = Rat(p.n - 1) - Rat(asum - 1) / Rat(p.d);
  rep.mass_matches = rep.mass == rep.expected_mass;

  int zero_index = -1;
  for (size_t i = 0; i < k.vertices().size(); ++i)
    if (std::all_of(k.vertices()[i].begin(), k.vertices()[i].end(),
                    [](const Int& c) { return c == 0; })) {
      zero_index = static_cast<int>(i);
      break;
    }
  VertexCone cone = VertexCone::at_vertex(k, zero_index);
  rep.one_is_atom = is_atom(cone, one);
  return rep;
}

}  // namespace sflat
