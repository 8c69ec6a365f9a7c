#pragma once

#include "sflat/numeric.hpp"

#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace sflat {

// Points are plain coordinate vectors; std::vector already provides the
// lexicographic order used as the canonical order everywhere.
using LatticePoint = std::vector<Int>;
using RatPoint = std::vector<Rat>;

LatticePoint add(const LatticePoint& a, const LatticePoint& b);
LatticePoint sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint scale(const Int& k, const LatticePoint& a);
Int dot(const std::vector<Int>& a, const std::vector<Int>& b);

RatPoint to_rat(const LatticePoint& a);
// Exact conversion; throws when some coordinate is non-integral.
LatticePoint to_lattice(const RatPoint& a);

std::string format_point(const LatticePoint& p);  // "1,2,3"
std::string format_point(const RatPoint& p);
LatticePoint parse_point(const std::string& csv);  // inverse of format_point

// Lex-sorted, deduplicated finite set of lattice points sharing one ambient
// dimension. Equality of sets is plain sequence equality.
class PointSet {
 public:
  PointSet() = default;
  explicit PointSet(int ambient_dim) : dim_(ambient_dim) {}
  PointSet(int ambient_dim, std::vector<LatticePoint> points);

  int ambient_dim() const { return dim_; }
  bool empty() const { return pts_.empty(); }
  size_t size() const { return pts_.size(); }
  const LatticePoint& operator[](size_t i) const { return pts_[i]; }
  const std::vector<LatticePoint>& points() const { return pts_; }

  bool contains(const LatticePoint& p) const;  // binary search

  auto begin() const { return pts_.begin(); }
  auto end() const { return pts_.end(); }

  bool operator==(const PointSet&) const = default;

 private:
  int dim_ = 0;
  std::vector<LatticePoint> pts_;  // strictly ascending lex
};

// {a + b | a in A, b in B}; dimensions must match.
PointSet minkowski_sum(const PointSet& a, const PointSet& b);

// A + A + ... + A (k times), k >= 1. Not the scalar dilate.
PointSet k_fold_sumset(const PointSet& a, int k);

PointSet set_difference(const PointSet& a, const PointSet& b);

}  // namespace sflat
