#include "sflat/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace sflat {

IntMatrix IntMatrix::identity(int n) {
  IntMatrix m(n, n);
  for (int i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<Int>>& columns) {
  if (columns.empty()) return IntMatrix();
  IntMatrix m(static_cast<int>(columns[0].size()), static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols; ++c) {
    if (static_cast<int>(columns[c].size()) != m.rows)
      throw std::invalid_argument("from_columns: ragged input");
    for (int r = 0; r < m.rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<Int>>& rows) {
  if (rows.empty()) return IntMatrix();
  IntMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (int r = 0; r < m.rows; ++r) {
    if (static_cast<int>(rows[r].size()) != m.cols)
      throw std::invalid_argument("from_rows: ragged input");
    for (int c = 0; c < m.cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

std::vector<Int> IntMatrix::column(int c) const {
  std::vector<Int> v(rows);
  for (int r = 0; r < rows; ++r) v[r] = at(r, c);
  return v;
}

std::vector<Int> IntMatrix::apply(const std::vector<Int>& x) const {
  if (static_cast<int>(x.size()) != cols) throw std::invalid_argument("apply: size mismatch");
  std::vector<Int> y(rows);
  for (int r = 0; r < rows; ++r) {
    Int s = 0;
    for (int c = 0; c < cols; ++c) s += at(r, c) * x[c];
    y[r] = s;
  }
  return y;
}

RatMatrix RatMatrix::from_columns(const std::vector<std::vector<Rat>>& columns) {
  if (columns.empty()) return RatMatrix();
  RatMatrix m(static_cast<int>(columns[0].size()), static_cast<int>(columns.size()));
  for (int c = 0; c < m.cols; ++c) {
    if (static_cast<int>(columns[c].size()) != m.rows)
      throw std::invalid_argument("from_columns: ragged input");
    for (int r = 0; r < m.rows; ++r) m.at(r, c) = columns[c][r];
  }
  return m;
}

RatMatrix RatMatrix::from_int(const IntMatrix& m) {
  RatMatrix q(m.rows, m.cols);
  for (size_t i = 0; i < m.a.size(); ++i) q.a[i] = m.a[i];
  return q;
}

namespace {

// Clears denominators row-wise so the elimination can stay over Int.
// Multiplying a row of [A | b] by a positive integer preserves solutions.
void build_integer_tableau(const RatMatrix& A, const std::vector<Rat>& b,
                           std::vector<std::vector<Int>>& t) {
  t.assign(A.rows, std::vector<Int>(A.cols + 1));
  for (int r = 0; r < A.rows; ++r) {
    Int lcm = 1;
    for (int c = 0; c < A.cols; ++c) {
      Int d = denominator(A.at(r, c));
      lcm = boost::multiprecision::lcm(lcm, d);
    }
    lcm = boost::multiprecision::lcm(lcm, denominator(b[r]));
    for (int c = 0; c < A.cols; ++c) {
      const Rat& q = A.at(r, c);
      t[r][c] = numerator(q) * (lcm / denominator(q));
    }
    t[r][A.cols] = numerator(b[r]) * (lcm / denominator(b[r]));
  }
}

// Fraction-free (Bareiss) forward elimination on an integer tableau.
// Returns the pivot column for each pivot row.
std::vector<int> bareiss_forward(std::vector<std::vector<Int>>& t, int ncols_a) {
  const int nrows = static_cast<int>(t.size());
  const int width = nrows ? static_cast<int>(t[0].size()) : 0;
  std::vector<int> pivot_cols;
  Int prev = 1;
  int prow = 0;
  for (int col = 0; col < ncols_a && prow < nrows; ++col) {
    int sel = -1;
    for (int r = prow; r < nrows; ++r)
      if (t[r][col] != 0) { sel = r; break; }
    if (sel < 0) continue;
    if (sel != prow) std::swap(t[sel], t[prow]);
    const Int p = t[prow][col];
    for (int r = prow + 1; r < nrows; ++r) {
      const Int f = t[r][col];
      for (int c = col; c < width; ++c)
        t[r][c] = (p * t[r][c] - f * t[prow][c]) / prev;
    }
    prev = p;
    pivot_cols.push_back(col);
    ++prow;
  }
  return pivot_cols;
}

}  // namespace

RatSolveResult rat_solve(const RatMatrix& A, const std::vector<Rat>& b) {
  if (static_cast<int>(b.size()) != A.rows)
    throw std::invalid_argument("rat_solve: dimension mismatch between A and b");
  RatSolveResult res;
  if (A.cols == 0) {
    for (const Rat& v : b)
      if (v != 0) return res;  // inconsistent
    res.outcome = SolveOutcome::Unique;
    return res;
  }
  std::vector<std::vector<Int>> t;
  build_integer_tableau(A, b, t);
  std::vector<int> pivots = bareiss_forward(t, A.cols);
  const int nrows = A.rows;
  const int rank = static_cast<int>(pivots.size());
  for (int r = rank; r < nrows; ++r)
    if (t[r][A.cols] != 0) return res;  // 0 = nonzero row
  if (rank < A.cols) {
    res.outcome = SolveOutcome::Underdetermined;
    return res;
  }
  // Back substitution; rank == cols, pivots strictly increasing.
  std::vector<Rat> x(A.cols);
  for (int i = rank - 1; i >= 0; --i) {
    const int col = pivots[i];
    Rat s = t[i][A.cols];
    for (int c = col + 1; c < A.cols; ++c) s -= Rat(t[i][c]) * x[c];
    x[col] = s / Rat(t[i][col]);
  }
  res.outcome = SolveOutcome::Unique;
  res.solution = std::move(x);
  return res;
}

RatSolveResult rat_solve(const IntMatrix& A, const std::vector<Int>& b) {
  RatMatrix aq = RatMatrix::from_int(A);
  std::vector<Rat> bq(b.begin(), b.end());
  return rat_solve(aq, bq);
}

Int int_det(const IntMatrix& M) {
  if (M.rows != M.cols) throw std::invalid_argument("int_det: non-square input");
  const int n = M.rows;
  if (n == 0) return 1;
  std::vector<std::vector<Int>> t(n, std::vector<Int>(n));
  for (int r = 0; r < n; ++r)
    for (int c = 0; c < n; ++c) t[r][c] = M.at(r, c);
  Int prev = 1;
  int sign = 1;
  for (int k = 0; k < n - 1; ++k) {
    if (t[k][k] == 0) {
      int sel = -1;
      for (int r = k + 1; r < n; ++r)
        if (t[r][k] != 0) { sel = r; break; }
      if (sel < 0) return 0;
      std::swap(t[sel], t[k]);
      sign = -sign;
    }
    for (int r = k + 1; r < n; ++r)
      for (int c = k + 1; c < n; ++c)
        t[r][c] = (t[k][k] * t[r][c] - t[r][k] * t[k][c]) / prev;
    prev = t[k][k];
  }
  return sign * t[n - 1][n - 1];
}

int int_rank(const IntMatrix& M) {
  if (M.rows == 0 || M.cols == 0) return 0;
  std::vector<std::vector<Int>> t(M.rows, std::vector<Int>(M.cols + 1));
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) t[r][c] = M.at(r, c);
  return static_cast<int>(bareiss_forward(t, M.cols).size());
}

namespace {

struct SmithState {
  std::vector<std::vector<Int>> s;
  IntMatrix u, u_inv;
  int rows, cols;
  bool track;

  SmithState(const IntMatrix& m, bool track_transforms)
      : rows(m.rows), cols(m.cols), track(track_transforms) {
    s.assign(rows, std::vector<Int>(cols));
    for (int r = 0; r < rows; ++r)
      for (int c = 0; c < cols; ++c) s[r][c] = m.at(r, c);
    if (track) {
      u = IntMatrix::identity(rows);
      u_inv = IntMatrix::identity(rows);
    }
  }

  // Row ops act on S and U; the inverse op acts on columns of u_inv so that
  // u_inv stays exactly U^{-1}. Column ops touch only S (V is untracked).
  void swap_rows(int i, int j) {
    if (i == j) return;
    std::swap(s[i], s[j]);
    if (!track) return;
    for (int c = 0; c < rows; ++c) std::swap(u.at(i, c), u.at(j, c));
    for (int r = 0; r < rows; ++r) std::swap(u_inv.at(r, i), u_inv.at(r, j));
  }
  void add_row(int src, int dst, const Int& f) {  // row_dst += f * row_src
    if (f == 0) return;
    for (int c = 0; c < cols; ++c) s[dst][c] += f * s[src][c];
    if (!track) return;
    for (int c = 0; c < rows; ++c) u.at(dst, c) += f * u.at(src, c);
    for (int r = 0; r < rows; ++r) u_inv.at(r, src) -= f * u_inv.at(r, dst);
  }
  void negate_row(int i) {
    for (int c = 0; c < cols; ++c) s[i][c] = -s[i][c];
    if (!track) return;
    for (int c = 0; c < rows; ++c) u.at(i, c) = -u.at(i, c);
    for (int r = 0; r < rows; ++r) u_inv.at(r, i) = -u_inv.at(r, i);
  }
  void swap_cols(int i, int j) {
    if (i == j) return;
    for (int r = 0; r < rows; ++r) std::swap(s[r][i], s[r][j]);
  }
  void add_col(int src, int dst, const Int& f) {  // col_dst += f * col_src
    if (f == 0) return;
    for (int r = 0; r < rows; ++r) s[r][dst] += f * s[r][src];
  }
};

// Smallest nonzero |entry| in the trailing submatrix, row-major tie-break.
bool find_pivot(const SmithState& st, int t, int& pr, int& pc) {
  bool found = false;
  Int best = 0;
  for (int r = t; r < st.rows; ++r)
    for (int c = t; c < st.cols; ++c) {
      if (st.s[r][c] == 0) continue;
      Int v = abs(st.s[r][c]);
      if (!found || v < best) {
        found = true;
        best = v;
        pr = r;
        pc = c;
      }
    }
  return found;
}

void smith_reduce(SmithState& st) {
  const int n = std::min(st.rows, st.cols);
  for (int t = 0; t < n; ++t) {
    int pr, pc;
    if (!find_pivot(st, t, pr, pc)) break;
    st.swap_rows(t, pr);
    st.swap_cols(t, pc);
    for (;;) {
      // Clear column t and row t with floor-quotient updates; a nonzero
      // remainder becomes a strictly smaller pivot, so this terminates.
      bool dirty = false;
      for (int r = t + 1; r < st.rows; ++r) {
        if (st.s[r][t] == 0) continue;
        Int q = floor_div(st.s[r][t], st.s[t][t]);
        st.add_row(t, r, -q);
        if (st.s[r][t] != 0) {
          st.swap_rows(t, r);
          dirty = true;
        }
      }
      if (dirty) continue;
      for (int c = t + 1; c < st.cols; ++c) {
        if (st.s[t][c] == 0) continue;
        Int q = floor_div(st.s[t][c], st.s[t][t]);
        st.add_col(t, c, -q);
        if (st.s[t][c] != 0) {
          st.swap_cols(t, c);
          dirty = true;
        }
      }
      if (dirty) continue;
      // Divisibility pass: drag a non-multiple into row t and restart.
      bool fixed = true;
      for (int r = t + 1; r < st.rows && fixed; ++r)
        for (int c = t + 1; c < st.cols && fixed; ++c)
          if (st.s[r][c] % st.s[t][t] != 0) {
            st.add_row(r, t, 1);
            fixed = false;
          }
      if (fixed) break;
    }
    if (st.s[t][t] < 0) st.negate_row(t);
  }
}

}  // namespace

std::vector<Int> snf_divisors(const IntMatrix& M) {
  if (M.rows == 0 || M.cols == 0) throw std::invalid_argument("snf_divisors: empty input");
  SmithState st(M, false);
  smith_reduce(st);
  const int n = std::min(M.rows, M.cols);
  std::vector<Int> d(n);
  for (int i = 0; i < n; ++i) d[i] = st.s[i][i];
  return d;
}

SmithDecomposition smith_decompose(const IntMatrix& M) {
  if (M.rows == 0 || M.cols == 0) throw std::invalid_argument("smith_decompose: empty input");
  SmithState st(M, true);
  smith_reduce(st);
  SmithDecomposition out;
  const int n = std::min(M.rows, M.cols);
  out.divisors.resize(n);
  for (int i = 0; i < n; ++i) {
    out.divisors[i] = st.s[i][i];
    if (out.divisors[i] != 0) out.rank = i + 1;
  }
  out.u = std::move(st.u);
  out.u_inv = std::move(st.u_inv);
  return out;
}

std::optional<std::vector<Rat>> kernel_vector(const IntMatrix& M) {
  std::vector<std::vector<Int>> t(M.rows, std::vector<Int>(M.cols + 1));
  for (int r = 0; r < M.rows; ++r)
    for (int c = 0; c < M.cols; ++c) t[r][c] = M.at(r, c);
  std::vector<int> pivots = bareiss_forward(t, M.cols);
  if (static_cast<int>(pivots.size()) == M.cols) return std::nullopt;
  int free_col = 0;
  while (free_col < M.cols &&
         std::find(pivots.begin(), pivots.end(), free_col) != pivots.end())
    ++free_col;
  std::vector<Rat> x(M.cols);
  x[free_col] = 1;
  for (int i = static_cast<int>(pivots.size()) - 1; i >= 0; --i) {
    const int col = pivots[i];
    if (col > free_col) continue;  // x[col] stays 0 beyond the free column
    Rat s = 0;
    for (int c = col + 1; c < M.cols; ++c) s -= Rat(t[i][c]) * x[c];
    x[col] = s / Rat(t[i][col]);
  }
  return x;
}

std::vector<Int> orthogonal_vector(const std::vector<std::vector<Int>>& rows, int dim) {
  if (static_cast<int>(rows.size()) != dim - 1)
    throw std::invalid_argument("orthogonal_vector: need dim-1 rows");
  std::vector<Int> normal(dim);
  for (int j = 0; j < dim; ++j) {
    IntMatrix minor(dim - 1, dim - 1);
    for (int r = 0; r < dim - 1; ++r) {
      int cc = 0;
      for (int c = 0; c < dim; ++c) {
        if (c == j) continue;
        minor.at(r, cc++) = rows[r][c];
      }
    }
    Int d = int_det(minor);
    normal[j] = (j % 2 == 0) ? d : -d;
  }
  return normal;
}

void make_primitive(std::vector<Int>& v) {
  Int g = 0;
  for (const Int& x : v) g = boost::multiprecision::gcd(g, x);
  if (g <= 1) return;
  for (Int& x : v) x /= g;
}

}  // namespace sflat
