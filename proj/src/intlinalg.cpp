#include "torimax/intlinalg.hpp"

#include <algorithm>
#include <cassert>
#include <cstddef>
#include <stdexcept>

namespace torimax {

Int determinant(IntMat a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  for (const auto& row : a)
    if (row.size() != n) throw std::logic_error("determinant: non-square matrix");

  int sign = 1;
  Int prev = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t r = k + 1;
      while (r < n && a[r][k] == 0) ++r;
      if (r == n) return 0;
      std::swap(a[k], a[r]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev; // exact by Bareiss
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int matrix_rank(const IntMat& a) {
  if (a.empty() || a[0].empty()) return 0;
  const std::size_t rows = a.size(), cols = a[0].size();
  // Rational Gaussian elimination.
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols));
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rat(a[i][j]);
  int rank = 0;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[row], m[piv]);
    for (std::size_t i = row + 1; i < rows; ++i) {
      if (m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (std::size_t j = col; j < cols; ++j) m[i][j] -= f * m[row][j];
    }
    ++row;
    ++rank;
  }
  return rank;
}

std::vector<IntVec> integer_kernel(const IntMat& a) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  if (rows == 0) throw std::logic_error("integer_kernel: column count unknown for empty matrix");

  IntMat b = a;
  // T accumulates the column operations applied to b.
  IntMat t(cols, IntVec(cols, 0));
  for (std::size_t j = 0; j < cols; ++j) t[j][j] = 1;

  auto col_axpy = [&](std::size_t dst, std::size_t src, const Int& q) {
    // column dst -= q * column src
    for (std::size_t i = 0; i < rows; ++i) b[i][dst] -= q * b[i][src];
    for (std::size_t i = 0; i < cols; ++i) t[i][dst] -= q * t[i][src];
  };
  auto col_swap = [&](std::size_t x, std::size_t y) {
    if (x == y) return;
    for (std::size_t i = 0; i < rows; ++i) std::swap(b[i][x], b[i][y]);
    for (std::size_t i = 0; i < cols; ++i) std::swap(t[i][x], t[i][y]);
  };

  std::size_t lead = 0;
  for (std::size_t row = 0; row < rows && lead < cols; ++row) {
    for (;;) {
      std::size_t best = cols;
      for (std::size_t j = lead; j < cols; ++j) {
        if (b[row][j] == 0) continue;
        if (best == cols || abs(b[row][j]) < abs(b[row][best])) best = j;
      }
      if (best == cols) break; // row already clear
      bool others = false;
      for (std::size_t j = lead; j < cols; ++j) {
        if (j == best || b[row][j] == 0) continue;
        others = true;
        Int q = b[row][j] / b[row][best]; // truncated: remainder strictly smaller
        if (q != 0) col_axpy(j, best, q);
        else {
          // |b[row][j]| < |b[row][best]| cannot happen (best is min); equal magnitudes
          // with opposite signs give q = -1 after truncation? trunc(-1) = -1, fine.
        }
      }
      if (!others) {
        col_swap(best, lead);
        ++lead;
        break;
      }
    }
  }

  std::vector<IntVec> kernel;
  for (std::size_t j = lead; j < cols; ++j) {
    IntVec v(cols);
    for (std::size_t i = 0; i < cols; ++i) v[i] = t[i][j];
    // sign-normalize
    for (const Int& x : v) {
      if (x != 0) {
        if (x < 0)
          for (Int& y : v) y = -y;
        break;
      }
    }
    kernel.push_back(std::move(v));
  }
  std::sort(kernel.begin(), kernel.end());
  return kernel;
}

std::optional<std::vector<Rat>> solve_full_rank(const IntMat& a, const IntVec& b) {
  const std::size_t rows = a.size();
  const std::size_t cols = rows == 0 ? 0 : a[0].size();
  std::vector<std::vector<Rat>> m(rows, std::vector<Rat>(cols + 1));
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) m[i][j] = Rat(a[i][j]);
    m[i][cols] = Rat(b[i]);
  }
  std::size_t row = 0;
  std::vector<std::size_t> pivot_rows;
  for (std::size_t col = 0; col < cols && row < rows; ++col) {
    std::size_t piv = row;
    while (piv < rows && m[piv][col] == 0) ++piv;
    if (piv == rows) throw std::logic_error("solve_full_rank: rank-deficient matrix");
    std::swap(m[row], m[piv]);
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col] / m[row][col];
      for (std::size_t j = col; j <= cols; ++j) m[i][j] -= f * m[row][j];
    }
    pivot_rows.push_back(row);
    ++row;
  }
  for (std::size_t i = row; i < rows; ++i)
    if (m[i][cols] != 0) return std::nullopt; // inconsistent
  std::vector<Rat> x(cols);
  for (std::size_t col = 0; col < cols; ++col) x[col] = m[col][cols] / m[col][col];
  return x;
}

IntVec cofactor_normal(const IntMat& rows, int d) {
  if (d < 1) throw std::logic_error("cofactor_normal: bad dimension");
  if (rows.size() != static_cast<std::size_t>(d - 1))
    throw std::logic_error("cofactor_normal: need d-1 rows");
  IntVec normal(d);
  for (int j = 0; j < d; ++j) {
    IntMat minor;
    minor.reserve(rows.size());
    for (const auto& r : rows) {
      IntVec mr;
      mr.reserve(d - 1);
      for (int c = 0; c < d; ++c)
        if (c != j) mr.push_back(r[c]);
      minor.push_back(std::move(mr));
    }
    Int det = determinant(std::move(minor));
    normal[j] = (j % 2 == 0) ? det : -det;
  }
  return normal;
}

namespace {
void minors_rec(const IntMat& rows, std::size_t r, std::size_t c, std::size_t start,
                std::vector<std::size_t>& pick, Int& g) {
  if (pick.size() == r) {
    IntMat sq(r, IntVec(r));
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) sq[i][j] = rows[i][pick[j]];
    g = gcd_nonneg(g, determinant(std::move(sq)));
    return;
  }
  for (std::size_t j = start; j + (r - pick.size()) <= c; ++j) {
    pick.push_back(j);
    minors_rec(rows, r, c, j + 1, pick, g);
    pick.pop_back();
  }
}
} // namespace

Int maximal_minor_gcd(const IntMat& rows) {
  const std::size_t r = rows.size();
  if (r == 0) return 1;
  const std::size_t c = rows[0].size();
  if (r > c) throw std::logic_error("maximal_minor_gcd: more rows than columns");
  Int g = 0;
  std::vector<std::size_t> pick;
  minors_rec(rows, r, c, 0, pick, g);
  return g;
}

std::pair<Int, std::pair<Int, Int>> extended_gcd(Int a, Int b) {
  Int old_r = a, r = b;
  Int old_s = 1, s = 0;
  Int old_t = 0, t = 1;
  while (r != 0) {
    Int q = old_r / r;
    Int tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  return {old_r, {old_s, old_t}};
}

std::optional<IntVec> complete_to_unimodular(const std::vector<IntVec>& cols) {
  if (cols.empty()) return std::nullopt;
  const std::size_t n = cols[0].size();
  if (cols.size() != n - 1) return std::nullopt;

  // w_j = cofactor of entry (j, n) in [cols | b]; then det[cols | b] = <b, w>.
  IntVec w(n);
  for (std::size_t j = 0; j < n; ++j) {
    IntMat minor(n - 1, IntVec(n - 1));
    std::size_t ri = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == j) continue;
      for (std::size_t k = 0; k + 1 < n; ++k) minor[ri][k] = cols[k][i];
      ++ri;
    }
    Int det = determinant(std::move(minor));
    w[j] = ((j + n) % 2 == 0) ? -det : det; // Laplace sign along the last column
  }
  if (content(w) != 1) return std::nullopt;

  // Find b with <b, w> = 1 by folding extended gcds.
  IntVec b(n, 0);
  Int g = 0;
  for (std::size_t j = 0; j < n; ++j) {
    if (w[j] == 0) continue;
    if (g == 0) {
      auto [gg, st] = extended_gcd(w[j], 0);
      g = gg;
      b[j] = st.first;
    } else {
      auto [gg, st] = extended_gcd(g, w[j]);
      for (std::size_t i = 0; i < j; ++i) b[i] *= st.first;
      b[j] = st.second;
      g = gg;
    }
    if (g == 1) break;
  }
  if (g != 1) return std::nullopt;
  // <b, w> = 1 up to the sign folded into extended_gcd; fix if negative.
  Int check = dot(b, w);
  if (check == -1)
    for (Int& x : b) x = -x;
  else if (check != 1)
    return std::nullopt;
  return b;
}

IntMat unimodular_inverse(const IntMat& m) {
  const std::size_t n = m.size();
  Int det = determinant(m);
  if (det != 1 && det != -1) throw std::logic_error("unimodular_inverse: |det| != 1");
  IntMat inv(n, IntVec(n));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      IntMat minor(n - 1, IntVec(n - 1));
      std::size_t ri = 0;
      for (std::size_t r = 0; r < n; ++r) {
        if (r == j) continue; // adjugate: cofactor C_{j,i}
        std::size_t ci = 0;
        for (std::size_t c = 0; c < n; ++c) {
          if (c == i) continue;
          minor[ri][ci++] = m[r][c];
        }
        ++ri;
      }
      Int cof = determinant(std::move(minor));
      if ((i + j) % 2 == 1) cof = -cof;
      inv[i][j] = cof * det; // division by det == multiplication when det = +-1
    }
  }
  return inv;
}

IntMat transpose(const IntMat& a) {
  if (a.empty()) return {};
  IntMat t(a[0].size(), IntVec(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a[0].size(); ++j) t[j][i] = a[i][j];
  return t;
}

IntMat mat_mul(const IntMat& a, const IntMat& b) {
  const std::size_t n = a.size(), k = b.size(), m = b.empty() ? 0 : b[0].size();
  IntMat c(n, IntVec(m, 0));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t p = 0; p < k; ++p) {
      if (a[i][p] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][p] * b[p][j];
    }
  return c;
}

IntVec mat_vec(const IntMat& a, const IntVec& x) {
  IntVec y(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) y[i] += a[i][j] * x[j];
  return y;
}

Int dot(const IntVec& a, const IntVec& b) {
  Int s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVec vec_sub(const IntVec& a, const IntVec& b) {
  IntVec r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
  return r;
}

} // namespace torimax
