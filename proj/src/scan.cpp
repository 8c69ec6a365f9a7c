#include "sflat/scan.hpp"

#include <stdexcept>

namespace sflat {

bool HalfspaceSystem::contains(const std::vector<Int>& y) const {
  for (const auto& h : rows)
    if (dot(h.coeffs, y) > h.bound) return false;
  return true;
}

bool HalfspaceSystem::contains(const std::vector<Rat>& y) const {
  for (const auto& h : rows) {
    Rat s = 0;
    for (size_t j = 0; j < y.size(); ++j) s += Rat(h.coeffs[j]) * y[j];
    if (s > Rat(h.bound)) return false;
  }
  return true;
}

namespace {

struct ScanCtx {
  const HalfspaceSystem& sys;
  const std::vector<Int>& lo;
  const std::vector<Int>& hi;
  const std::function<void(const std::vector<Int>&)>& emit;
  // last index with a nonzero coefficient, per row; -1 for constant rows
  std::vector<int> last_nz;
  std::vector<Int> partial;  // per row, dot product of the fixed prefix
  std::vector<Int> point;
};

void scan_rec(ScanCtx& c, int depth) {
  const int d = c.sys.dim;
  if (depth == d - 1) {
    // Solve the admissible interval for the final coordinate.
    Int lo = c.lo[depth], hi = c.hi[depth];
    for (size_t r = 0; r < c.sys.rows.size(); ++r) {
      const auto& row = c.sys.rows[r];
      const Int& g = row.coeffs[depth];
      Int rhs = row.bound - c.partial[r];
      if (g == 0) {
        if (rhs < 0) return;  // prefix already infeasible
      } else if (g > 0) {
        Int ub = floor_div(rhs, g);
        if (ub < hi) hi = ub;
      } else {
        Int lb = ceil_div(rhs, g);
        if (lb > lo) lo = lb;
      }
      if (lo > hi) return;
    }
    for (Int v = lo; v <= hi; ++v) {
      c.point[depth] = v;
      c.emit(c.point);
    }
    return;
  }
  for (Int v = c.lo[depth]; v <= c.hi[depth]; ++v) {
    c.point[depth] = v;
    bool feasible = true;
    for (size_t r = 0; r < c.sys.rows.size(); ++r) {
      c.partial[r] += c.sys.rows[r].coeffs[depth] * v;
      // Rows fully determined by this prefix prune the whole subtree.
      if (c.last_nz[r] <= depth && c.partial[r] > c.sys.rows[r].bound) feasible = false;
    }
    if (feasible) scan_rec(c, depth + 1);
    for (size_t r = 0; r < c.sys.rows.size(); ++r)
      c.partial[r] -= c.sys.rows[r].coeffs[depth] * v;
  }
}

}  // namespace

void scan_lattice_points(const HalfspaceSystem& sys, const std::vector<Int>& box_lo,
                         const std::vector<Int>& box_hi,
                         const std::function<void(const std::vector<Int>&)>& emit) {
  const int d = sys.dim;
  if (static_cast<int>(box_lo.size()) != d || static_cast<int>(box_hi.size()) != d)
    throw std::invalid_argument("scan_lattice_points: box dimension mismatch");
  for (const auto& row : sys.rows)
    if (static_cast<int>(row.coeffs.size()) != d)
      throw std::invalid_argument("scan_lattice_points: row dimension mismatch");
  if (d == 0) {
    if (sys.contains(std::vector<Int>{})) emit({});
    return;
  }
  for (int j = 0; j < d; ++j)
    if (box_lo[j] > box_hi[j]) return;

  ScanCtx c{sys, box_lo, box_hi, emit, {}, {}, {}};
  c.last_nz.assign(sys.rows.size(), -1);
  for (size_t r = 0; r < sys.rows.size(); ++r)
    for (int j = d - 1; j >= 0; --j)
      if (sys.rows[r].coeffs[j] != 0) {
        c.last_nz[r] = j;
        break;
      }
  c.partial.assign(sys.rows.size(), Int(0));
  c.point.assign(d, Int(0));
  // Constant rows decide feasibility up front.
  for (size_t r = 0; r < sys.rows.size(); ++r)
    if (c.last_nz[r] == -1 && sys.rows[r].bound < 0) return;
  scan_rec(c, 0);
}

}  // namespace sflat
