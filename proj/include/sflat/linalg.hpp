#pragma once

#include "sflat/numeric.hpp"

#include <optional>
#include <vector>

namespace sflat {

// Dense rectangular matrix over Int / Rat. Row-major, desk-scale.
struct IntMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Int> a;

  IntMatrix() = default;
  IntMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static IntMatrix identity(int n);
  static IntMatrix from_columns(const std::vector<std::vector<Int>>& columns);
  static IntMatrix from_rows(const std::vector<std::vector<Int>>& rows);

  std::vector<Int> column(int c) const;
  std::vector<Int> apply(const std::vector<Int>& x) const;  // matrix * vector

  bool operator==(const IntMatrix&) const = default;
};

struct RatMatrix {
  int rows = 0;
  int cols = 0;
  std::vector<Rat> a;

  RatMatrix() = default;
  RatMatrix(int r, int c) : rows(r), cols(c), a(static_cast<size_t>(r) * c) {}

  Rat& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Rat& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }

  static RatMatrix from_columns(const std::vector<std::vector<Rat>>& columns);
  static RatMatrix from_int(const IntMatrix& m);
};

enum class SolveOutcome { Unique, Inconsistent, Underdetermined };

struct RatSolveResult {
  SolveOutcome outcome = SolveOutcome::Inconsistent;
  std::vector<Rat> solution;  // populated iff outcome == Unique

  bool unique() const { return outcome == SolveOutcome::Unique; }
};

// Solves A x = b exactly. Fraction-free elimination with canonical pivot
// choice (first nonzero by row-major order), so identical inputs always
// take identical elimination paths.
RatSolveResult rat_solve(const RatMatrix& A, const std::vector<Rat>& b);
RatSolveResult rat_solve(const IntMatrix& A, const std::vector<Int>& b);

// Exact determinant of a square matrix (Bareiss).
Int int_det(const IntMatrix& M);

// Rank over Q of an integer matrix.
int int_rank(const IntMatrix& M);

// Diagonal of the Smith normal form: nonnegative, d_i | d_{i+1}, zeros last.
// Length is min(rows, cols).
std::vector<Int> snf_divisors(const IntMatrix& M);

// Full decomposition S = U * M * V with U, V unimodular. V is not needed by
// any caller and is not tracked; u_inv is U^{-1}. The first `rank` columns
// of u_inv are a basis of the saturation span_R(M) ∩ Z^rows.
struct SmithDecomposition {
  std::vector<Int> divisors;
  IntMatrix u;      // rows x rows
  IntMatrix u_inv;  // rows x rows
  int rank = 0;
};

SmithDecomposition smith_decompose(const IntMatrix& M);

// Canonical nontrivial kernel vector of M (first free column set to 1),
// or nullopt when M has full column rank.
std::optional<std::vector<Rat>> kernel_vector(const IntMatrix& M);

// Integer vector orthogonal to d-1 row vectors in Z^d (generalized cross
// product via cofactor expansion). Zero vector iff the rows are dependent.
std::vector<Int> orthogonal_vector(const std::vector<std::vector<Int>>& rows, int dim);

// Divides by the gcd of the entries; zero vectors pass through. The sign is
// left untouched.
void make_primitive(std::vector<Int>& v);

}  // namespace sflat
