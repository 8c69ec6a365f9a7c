#include "sflat/corpus.hpp"

#include <stdexcept>

namespace sflat {

void RunConfig::validate() const {
  if (count < 1) throw std::invalid_argument("config: count must be >= 1");
  if (dim_min < 1 || dim_min > dim_max) throw std::invalid_argument("config: bad dim range");
  if (pts_min < 1 || pts_min > pts_max) throw std::invalid_argument("config: bad point-count range");
  if (coord_min > coord_max) throw std::invalid_argument("config: bad coordinate range");
  if (m_max < 1) throw std::invalid_argument("config: m_max must be >= 1");
  if (hole_bound < 0) throw std::invalid_argument("config: hole bound must be >= 0");
}

long long Rng::uniform(long long lo, long long hi) {
  if (lo > hi) throw std::invalid_argument("Rng::uniform: empty range");
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long long>(next());  // full 64-bit range
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              (std::numeric_limits<std::uint64_t>::max() % span);
  for (;;) {
    std::uint64_t v = next();
    if (v < limit) return lo + static_cast<long long>(v % span);
  }
}

LatticePolytope random_polytope(Rng& rng, const RunConfig& cfg) {
  const int dim = static_cast<int>(rng.uniform(cfg.dim_min, cfg.dim_max));
  const int npts = static_cast<int>(rng.uniform(cfg.pts_min, cfg.pts_max));
  std::vector<LatticePoint> pts;
  for (int i = 0; i < npts; ++i) {
    LatticePoint p(dim);
    for (int j = 0; j < dim; ++j) p[j] = Int(rng.uniform(cfg.coord_min, cfg.coord_max));
    pts.push_back(std::move(p));
  }
  return LatticePolytope::from_points(dim, std::move(pts));
}

std::vector<LatticePolytope> generate_corpus(const RunConfig& cfg) {
  cfg.validate();
  Rng rng(cfg.seed);
  std::vector<LatticePolytope> out;
  out.reserve(cfg.count);
  for (int i = 0; i < cfg.count; ++i) out.push_back(random_polytope(rng, cfg));
  return out;
}

LatticePolytope random_empty_simplex(Rng& rng, int dim, int coord_min, int coord_max) {
  if (dim < 1) throw std::invalid_argument("random_empty_simplex: dim must be >= 1");
  for (;;) {
    std::vector<LatticePoint> pts;
    for (int i = 0; i < dim + 1; ++i) {
      LatticePoint p(dim);
      for (int j = 0; j < dim; ++j) p[j] = Int(rng.uniform(coord_min, coord_max));
      pts.push_back(std::move(p));
    }
    PointSet s(dim, pts);
    if (static_cast<int>(s.size()) != dim + 1) continue;
    if (affine_dim(s) != dim) continue;
    LatticePolytope k = LatticePolytope::from_points(s);
    if (is_empty_polytope(k)) return k;
  }
}

}  // namespace sflat
