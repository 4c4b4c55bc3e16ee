#include "purelie/lattice.hpp"

#include <algorithm>
#include <numeric>

namespace purelie {

IntMatrix::IntMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

IntMatrix IntMatrix::from_rows(const std::vector<std::vector<long long>>& rows) {
  std::vector<IntVector> big;
  for (const auto& r : rows) big.emplace_back(r.begin(), r.end());
  return from_rows(big);
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows) {
  if (rows.empty()) return IntMatrix(0, 0);
  IntMatrix m(rows.size(), rows.front().size());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != m.cols_) throw InvalidInput("ragged matrix rows");
    for (std::size_t c = 0; c < m.cols_; ++c) m(r, c) = rows[r][c];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<std::vector<long long>>& cols) {
  return from_rows(cols).transpose();
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntVector IntMatrix::row(std::size_t r) const {
  return IntVector(entries_.begin() + r * cols_, entries_.begin() + (r + 1) * cols_);
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

IntMatrix IntMatrix::select_columns(const IndexSet& cols) const {
  IntMatrix m(rows_, cols.size());
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols.size(); ++k) m(r, k) = (*this)(r, cols[k]);
  return m;
}

IntMatrix IntMatrix::select_rows(const IndexSet& rows) const {
  IntMatrix m(rows.size(), cols_);
  for (std::size_t k = 0; k < rows.size(); ++k)
    for (std::size_t c = 0; c < cols_; ++c) m(k, c) = (*this)(rows[k], c);
  return m;
}

IntMatrix IntMatrix::transpose() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

namespace {

std::vector<RatVector> to_rational_rows(const IntMatrix& m) {
  std::vector<RatVector> rows(m.rows(), RatVector(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) rows[r][c] = Rational(m(r, c));
  return rows;
}

// Reduces rows in place to echelon form; returns pivot columns.
std::vector<std::size_t> echelon(std::vector<RatVector>& rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t ncols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < ncols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t k = r + 1; k < rows.size(); ++k) {
      if (rows[k][c] == 0) continue;
      Rational f = rows[k][c] / rows[r][c];
      for (std::size_t j = c; j < ncols; ++j) rows[k][j] -= f * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const std::vector<RatVector>& rows) {
  auto copy = rows;
  return echelon(copy).size();
}

std::size_t rank(const IntMatrix& m) {
  auto rows = to_rational_rows(m);
  return echelon(rows).size();
}

IndexSet independent_rows(const IntMatrix& m) {
  IndexSet chosen;
  std::vector<RatVector> basis;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    auto trial = basis;
    RatVector row(m.cols());
    for (std::size_t c = 0; c < m.cols(); ++c) row[c] = Rational(m(r, c));
    trial.push_back(row);
    if (rank(trial) == trial.size()) {
      basis = std::move(trial);
      chosen.push_back(r);
    }
  }
  return chosen;
}

BigInt dot(const IntVector& a, const IntVector& b) {
  BigInt s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

IntVector make_primitive(IntVector v) {
  BigInt g = 0;
  for (const auto& x : v) g = boost::multiprecision::gcd(g, x);
  if (g == 0) return v;
  for (auto& x : v) x /= g;
  auto first = std::find_if(v.begin(), v.end(), [](const BigInt& x) { return x != 0; });
  if (*first < 0)
    for (auto& x : v) x = -x;
  return v;
}

IntVector make_primitive(const RatVector& v) {
  BigInt l = 1;
  for (const auto& x : v) l = boost::multiprecision::lcm(l, boost::multiprecision::denominator(x));
  IntVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i)
    out[i] = boost::multiprecision::numerator(v[i]) * (l / boost::multiprecision::denominator(v[i]));
  return make_primitive(std::move(out));
}

std::vector<IntVector> integer_kernel_basis(const IntMatrix& m) {
  // Unimodular column operations bring M to column echelon form; the
  // transformation columns beyond the pivots span the kernel lattice.
  const std::size_t n = m.cols();
  IntMatrix a = m;
  IntMatrix u = IntMatrix::identity(n);
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t r = 0; r < a.rows(); ++r) std::swap(a(r, i), a(r, j));
    for (std::size_t r = 0; r < n; ++r) std::swap(u(r, i), u(r, j));
  };
  auto sub_col = [&](std::size_t dst, std::size_t src, const BigInt& q) {
    for (std::size_t r = 0; r < a.rows(); ++r) a(r, dst) -= q * a(r, src);
    for (std::size_t r = 0; r < n; ++r) u(r, dst) -= q * u(r, src);
  };
  std::size_t p = 0;
  for (std::size_t r = 0; r < a.rows() && p < n; ++r) {
    for (;;) {
      std::size_t best = n;
      for (std::size_t c = p; c < n; ++c)
        if (a(r, c) != 0 && (best == n || abs(a(r, c)) < abs(a(r, best)))) best = c;
      if (best == n) break;
      swap_cols(p, best);
      bool done = true;
      for (std::size_t c = p + 1; c < n; ++c) {
        if (a(r, c) == 0) continue;
        sub_col(c, p, a(r, c) / a(r, p));
        if (a(r, c) != 0) done = false;
      }
      if (done) {
        ++p;
        break;
      }
    }
  }
  std::vector<IntVector> basis;
  for (std::size_t c = p; c < n; ++c) basis.push_back(make_primitive(u.column(c)));
  std::sort(basis.begin(), basis.end());
  return basis;
}

std::optional<RatVector> find_nonneg_solution(const std::vector<RatVector>& a, const RatVector& b) {
  const std::size_t m = a.size();
  const std::size_t n = m == 0 ? 0 : a.front().size();
  if (m == 0) return RatVector{};
  // Tableau columns: n structural, m artificial, then the right-hand side.
  const std::size_t width = n + m + 1;
  std::vector<RatVector> t(m, RatVector(width));
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) {
    const bool flip = b[i] < 0;
    for (std::size_t j = 0; j < n; ++j) t[i][j] = flip ? Rational(-a[i][j]) : a[i][j];
    t[i][n + i] = 1;
    t[i][n + m] = flip ? Rational(-b[i]) : b[i];
    basis[i] = n + i;
  }
  // Reduced costs for minimizing the sum of artificials.
  RatVector cost(width);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < width; ++j)
      if (j < n || j == n + m) cost[j] -= t[i][j];

  for (;;) {
    std::size_t enter = width;
    for (std::size_t j = 0; j < n + m; ++j)
      if (cost[j] < 0) {
        enter = j;
        break;
      }
    if (enter == width) break;
    std::size_t leave = m;
    Rational best_ratio;
    for (std::size_t i = 0; i < m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rational ratio = t[i][n + m] / t[i][enter];
      if (leave == m || ratio < best_ratio || (ratio == best_ratio && basis[i] < basis[leave])) {
        leave = i;
        best_ratio = ratio;
      }
    }
    if (leave == m) break;  // unbounded cannot happen in phase one
    Rational piv = t[leave][enter];
    for (auto& x : t[leave]) x /= piv;
    for (std::size_t i = 0; i < m; ++i) {
      if (i == leave || t[i][enter] == 0) continue;
      Rational f = t[i][enter];
      for (std::size_t j = 0; j < width; ++j) t[i][j] -= f * t[leave][j];
    }
    Rational f = cost[enter];
    for (std::size_t j = 0; j < width; ++j) cost[j] -= f * t[leave][j];
    basis[leave] = enter;
  }
  if (cost[n + m] != 0) return std::nullopt;
  RatVector x(n);
  for (std::size_t i = 0; i < m; ++i)
    if (basis[i] < n) x[basis[i]] = t[i][n + m];
  return x;
}

bool feasible_nonneg_combination(const IntVector& target, const std::vector<IntVector>& generators) {
  if (std::all_of(target.begin(), target.end(), [](const BigInt& x) { return x == 0; })) return true;
  if (generators.empty()) return false;
  std::vector<RatVector> a(target.size(), RatVector(generators.size()));
  RatVector b(target.size());
  for (std::size_t i = 0; i < target.size(); ++i) {
    b[i] = Rational(target[i]);
    for (std::size_t j = 0; j < generators.size(); ++j) a[i][j] = Rational(generators[j][i]);
  }
  return find_nonneg_solution(a, b).has_value();
}

IndexSet positivizable_support(const IntMatrix& w, const IndexSet& zero_set) {
  IndexSet free;
  for (std::size_t j = 0; j < w.cols(); ++j)
    if (std::find(zero_set.begin(), zero_set.end(), j) == zero_set.end()) free.push_back(j);
  IndexSet support;
  for (std::size_t k = 0; k < free.size(); ++k) {
    const std::size_t j = free[k];
    if (std::find(support.begin(), support.end(), j) != support.end()) continue;
    // W u = 0 restricted to the free columns, plus u_j = 1.
    std::vector<RatVector> a(w.rows() + 1, RatVector(free.size()));
    RatVector b(w.rows() + 1);
    for (std::size_t r = 0; r < w.rows(); ++r)
      for (std::size_t c = 0; c < free.size(); ++c) a[r][c] = Rational(w(r, free[c]));
    a[w.rows()][k] = 1;
    b[w.rows()] = 1;
    auto sol = find_nonneg_solution(a, b);
    if (!sol) continue;
    // Every coordinate positive in this witness is positivizable too.
    for (std::size_t c = 0; c < free.size(); ++c)
      if ((*sol)[c] > 0 && std::find(support.begin(), support.end(), free[c]) == support.end())
        support.push_back(free[c]);
  }
  std::sort(support.begin(), support.end());
  return support;
}

std::size_t cone_dim(const IntMatrix& w, const IndexSet& zero_set) {
  // A point positive on the whole positivizable support is relatively interior,
  // so the span is the kernel of W restricted to that support.
  IndexSet support = positivizable_support(w, zero_set);
  return support.size() - rank(w.select_columns(support));
}

std::optional<IntVector> primitive_normal(const std::vector<RatVector>& vectors, std::size_t ambient_dim) {
  if (ambient_dim == 0) return std::nullopt;
  std::vector<RatVector> rows = vectors;
  auto pivots = echelon(rows);
  if (pivots.size() + 1 != ambient_dim) return std::nullopt;
  // Back-substitute with the single free column set to 1.
  std::size_t free_col = 0;
  while (std::find(pivots.begin(), pivots.end(), free_col) != pivots.end()) ++free_col;
  RatVector x(ambient_dim);
  x[free_col] = 1;
  for (std::size_t k = pivots.size(); k-- > 0;) {
    const std::size_t c = pivots[k];
    Rational s = 0;
    for (std::size_t j = c + 1; j < ambient_dim; ++j) s += rows[k][j] * x[j];
    x[c] = -s / rows[k][c];
  }
  return make_primitive(x);
}

std::optional<IntVector> primitive_normal(const std::vector<IntVector>& vectors, std::size_t ambient_dim) {
  std::vector<RatVector> rows;
  for (const auto& v : vectors) {
    RatVector r(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) r[i] = Rational(v[i]);
    rows.push_back(std::move(r));
  }
  return primitive_normal(rows, ambient_dim);
}

}  // namespace purelie
