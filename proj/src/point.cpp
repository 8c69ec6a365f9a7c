#include "sflat/point.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace sflat {

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("point add: dimension mismatch");
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
  return r;
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  if (a.size() != b.size()) throw std::invalid_argument("point sub: dimension mismatch");
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

LatticePoint scale(const Int& k, const LatticePoint& a) {
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
  return r;
}

Int dot(const std::vector<Int>& a, const std::vector<Int>& b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot: dimension mismatch");
  Int s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

RatPoint to_rat(const LatticePoint& a) {
  RatPoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  return r;
}

LatticePoint to_lattice(const RatPoint& a) {
  LatticePoint r(a.size());
  for (size_t i = 0; i < a.size(); ++i) {
    if (!is_integer(a[i])) throw std::invalid_argument("to_lattice: non-integral coordinate");
    r[i] = numerator(a[i]);
  }
  return r;
}

std::string format_point(const LatticePoint& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += to_string(p[i]);
  }
  return s;
}

std::string format_point(const RatPoint& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += ',';
    s += to_string(p[i]);
  }
  return s;
}

LatticePoint parse_point(const std::string& csv) {
  LatticePoint p;
  std::stringstream ss(csv);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(0, tok.find_first_not_of(" \t"));
    if (!tok.empty()) tok.erase(tok.find_last_not_of(" \t") + 1);
    if (tok.empty()) throw std::invalid_argument("parse_point: empty coordinate in '" + csv + "'");
    for (char ch : tok.substr(tok[0] == '-' ? 1 : 0))
      if (!std::isdigit(static_cast<unsigned char>(ch)))
        throw std::invalid_argument("parse_point: bad coordinate '" + tok + "'");
    p.emplace_back(tok);
  }
  if (p.empty()) throw std::invalid_argument("parse_point: empty point");
  return p;
}

PointSet::PointSet(int ambient_dim, std::vector<LatticePoint> points) : dim_(ambient_dim) {
  for (const auto& p : points)
    if (static_cast<int>(p.size()) != dim_)
      throw std::invalid_argument("PointSet: point dimension mismatch");
  std::sort(points.begin(), points.end());
  points.erase(std::unique(points.begin(), points.end()), points.end());
  pts_ = std::move(points);
}

bool PointSet::contains(const LatticePoint& p) const {
  return std::binary_search(pts_.begin(), pts_.end(), p);
}

namespace {

// Packing fast path for sumsets: maps each point into one uint64 key (lex
// order preserved) when the coordinate ranges allow it. Falls back to
// generic sort+unique on vectors otherwise.
struct PackScheme {
  std::vector<Int> lo;
  std::vector<unsigned long long> stride;
  bool ok = false;
};

PackScheme plan_packing(const PointSet& a, const PointSet& b) {
  PackScheme ps;
  const int dim = a.ambient_dim();
  if (a.empty() || b.empty()) return ps;
  std::vector<Int> lo(dim), hi(dim);
  for (int j = 0; j < dim; ++j) {
    Int la = a[0][j], ha = a[0][j], lb = b[0][j], hb = b[0][j];
    for (const auto& p : a) {
      if (p[j] < la) la = p[j];
      if (p[j] > ha) ha = p[j];
    }
    for (const auto& p : b) {
      if (p[j] < lb) lb = p[j];
      if (p[j] > hb) hb = p[j];
    }
    lo[j] = la + lb;
    hi[j] = ha + hb;
  }
  Int capacity = 1;
  long long tmp;
  for (int j = 0; j < dim; ++j) {
    capacity *= (hi[j] - lo[j] + 1);
    if (capacity > Int("9223372036854775807")) return ps;
    if (!fits_int64(lo[j], tmp) || !fits_int64(hi[j], tmp)) return ps;
  }
  for (const auto& p : a)
    for (int j = 0; j < dim; ++j)
      if (!fits_int64(p[j], tmp)) return ps;
  for (const auto& p : b)
    for (int j = 0; j < dim; ++j)
      if (!fits_int64(p[j] - lo[j], tmp)) return ps;
  ps.lo = std::move(lo);
  ps.stride.assign(dim, 1);
  // Big-endian strides so key order equals lex order.
  unsigned long long s = 1;
  for (int j = dim - 1; j >= 0; --j) {
    ps.stride[j] = s;
    long long w;
    fits_int64(hi[j] - ps.lo[j] + 1, w);
    s *= static_cast<unsigned long long>(w);
  }
  ps.ok = true;
  return ps;
}

}  // namespace

PointSet minkowski_sum(const PointSet& a, const PointSet& b) {
  if (a.ambient_dim() != b.ambient_dim())
    throw std::invalid_argument("minkowski_sum: dimension mismatch");
  const int dim = a.ambient_dim();
  if (a.empty() || b.empty()) return PointSet(dim);

  PackScheme ps = plan_packing(a, b);
  if (ps.ok) {
    std::vector<unsigned long long> keys;
    keys.reserve(a.size() * b.size());
    std::vector<unsigned long long> akeys(a.size()), bkeys(b.size());
    // key(a+b) splits per operand because the packing map is affine; the
    // mixed-radix key of the sum is always in range, so the unsigned
    // wraparound of intermediate terms cancels exactly.
    for (size_t i = 0; i < a.size(); ++i) {
      unsigned long long k = 0;
      for (int j = 0; j < dim; ++j) {
        long long off;
        fits_int64(a[i][j], off);
        k += ps.stride[j] * static_cast<unsigned long long>(off);
      }
      akeys[i] = k;
    }
    for (size_t i = 0; i < b.size(); ++i) {
      unsigned long long k = 0;
      for (int j = 0; j < dim; ++j) {
        long long off;
        fits_int64(b[i][j] - ps.lo[j], off);
        k += ps.stride[j] * static_cast<unsigned long long>(off);
      }
      bkeys[i] = k;
    }
    for (auto ka : akeys)
      for (auto kb : bkeys) keys.push_back(ka + kb);
    std::sort(keys.begin(), keys.end());
    keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
    std::vector<LatticePoint> out;
    out.reserve(keys.size());
    for (auto k : keys) {
      LatticePoint p(dim);
      for (int j = 0; j < dim; ++j) {
        unsigned long long q = k / ps.stride[j];
        k %= ps.stride[j];
        p[j] = ps.lo[j] + Int(q);
      }
      out.push_back(std::move(p));
    }
    return PointSet(dim, std::move(out));
  }

  std::set<LatticePoint> acc;
  for (const auto& pa : a)
    for (const auto& pb : b) acc.insert(add(pa, pb));
  return PointSet(dim, std::vector<LatticePoint>(acc.begin(), acc.end()));
}

PointSet k_fold_sumset(const PointSet& a, int k) {
  if (k < 1) throw std::invalid_argument("k_fold_sumset: k must be >= 1");
  PointSet acc = a;
  for (int i = 1; i < k; ++i) acc = minkowski_sum(acc, a);
  return acc;
}

PointSet set_difference(const PointSet& a, const PointSet& b) {
  std::vector<LatticePoint> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return PointSet(a.ambient_dim(), std::move(out));
}

}  // namespace sflat
