#include "bhf/f2.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>
#include <stdexcept>

namespace bhf {

F2Matrix::F2Matrix(int rows, int cols)
    : rows_(rows), cols_(cols), words_((cols + 63) / 64), data_(static_cast<size_t>(rows) * words_, 0) {}

bool F2Matrix::get(int r, int c) const {
  return (data_[static_cast<size_t>(r) * words_ + c / 64] >> (c % 64)) & 1;
}

void F2Matrix::set(int r, int c, bool v) {
  uint64_t& w = data_[static_cast<size_t>(r) * words_ + c / 64];
  uint64_t m = uint64_t(1) << (c % 64);
  if (v)
    w |= m;
  else
    w &= ~m;
}

void F2Matrix::add_row(int dst, int src) {
  uint64_t* d = &data_[static_cast<size_t>(dst) * words_];
  const uint64_t* s = &data_[static_cast<size_t>(src) * words_];
  for (int i = 0; i < words_; ++i) d[i] ^= s[i];
}

std::vector<int> F2Matrix::row_reduce() {
  std::vector<int> pivots;
  int r = 0;
  for (int c = 0; c < cols_ && r < rows_; ++c) {
    int piv = -1;
    for (int i = r; i < rows_; ++i)
      if (get(i, c)) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != r)
      for (int w = 0; w < words_; ++w)
        std::swap(data_[static_cast<size_t>(piv) * words_ + w], data_[static_cast<size_t>(r) * words_ + w]);
    for (int i = 0; i < rows_; ++i)
      if (i != r && get(i, c)) add_row(i, r);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

int F2Matrix::rank() const {
  F2Matrix copy = *this;
  return static_cast<int>(copy.row_reduce().size());
}

std::vector<std::vector<bool>> F2Matrix::kernel_basis() const {
  F2Matrix red = *this;
  std::vector<int> pivots = red.row_reduce();
  std::vector<bool> is_pivot(cols_, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<std::vector<bool>> basis;
  for (int c = 0; c < cols_; ++c) {
    if (is_pivot[c]) continue;
    std::vector<bool> v(cols_, false);
    v[c] = true;
    for (size_t i = 0; i < pivots.size(); ++i)
      if (red.get(static_cast<int>(i), c)) v[pivots[i]] = true;
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<bool>> F2Matrix::solve(const std::vector<bool>& b) const {
  assert(static_cast<int>(b.size()) == rows_);
  F2Matrix aug(rows_, cols_ + 1);
  for (int r = 0; r < rows_; ++r) {
    for (int w = 0; w < words_; ++w) aug.data_[static_cast<size_t>(r) * aug.words_ + w] = data_[static_cast<size_t>(r) * words_ + w];
    aug.set(r, cols_, b[r]);
  }
  std::vector<int> pivots = aug.row_reduce();
  std::vector<bool> x(cols_, false);
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols_) return std::nullopt;  // pivot in the constant column
    x[pivots[i]] = aug.get(static_cast<int>(i), cols_);
  }
  return x;
}

int f2_rank_of_columns(const std::vector<std::vector<int>>& columns, int nrows) {
  if (columns.empty() || nrows == 0) return 0;
  F2Matrix m(static_cast<int>(columns.size()), nrows);
  for (size_t c = 0; c < columns.size(); ++c)
    for (int r : columns[c]) m.set(static_cast<int>(c), r, !m.get(static_cast<int>(c), r));
  return m.rank();
}

// --- integer linear algebra ---

namespace {

// Column-reduces (a | I) so kernel columns can be read off where a's columns
// become zero. All sizes here are tiny; overflow is not a concern in practice.
struct ColReduction {
  IntMat a;        // rows x cols, mutated
  IntMat tracker;  // cols x cols identity, mutated alongside
};

ColReduction column_reduce(const IntMat& input) {
  ColReduction cr;
  cr.a = input;
  int rows = static_cast<int>(cr.a.size());
  int cols = rows ? static_cast<int>(cr.a[0].size()) : 0;
  if (!rows && !input.empty()) cols = 0;
  cr.tracker.assign(cols, std::vector<long long>(cols, 0));
  for (int i = 0; i < cols; ++i) cr.tracker[i][i] = 1;

  auto col_addmul = [&](int dst, int src, long long f) {
    for (int r = 0; r < rows; ++r) cr.a[r][dst] += f * cr.a[r][src];
    for (int r = 0; r < cols; ++r) cr.tracker[r][dst] += f * cr.tracker[r][src];
  };
  auto col_swap = [&](int i, int j) {
    for (int r = 0; r < rows; ++r) std::swap(cr.a[r][i], cr.a[r][j]);
    for (int r = 0; r < cols; ++r) std::swap(cr.tracker[r][i], cr.tracker[r][j]);
  };

  int lead = 0;
  for (int r = 0; r < rows && lead < cols; ++r) {
    // gcd-reduce row r across columns lead..cols-1
    while (true) {
      int nz = -1;
      for (int c = lead; c < cols; ++c)
        if (cr.a[r][c] != 0 && (nz < 0 || std::abs(cr.a[r][c]) < std::abs(cr.a[r][nz]))) nz = c;
      if (nz < 0) break;
      col_swap(lead, nz);
      bool clean = true;
      for (int c = lead + 1; c < cols; ++c) {
        if (cr.a[r][c] == 0) continue;
        long long q = cr.a[r][c] / cr.a[r][lead];
        col_addmul(c, lead, -q);
        if (cr.a[r][c] != 0) clean = false;
      }
      if (clean) {
        ++lead;
        break;
      }
    }
  }
  return cr;
}

}  // namespace

std::vector<std::vector<long long>> int_kernel_basis(const IntMat& a) {
  if (a.empty()) return {};
  int cols = static_cast<int>(a[0].size());
  ColReduction cr = column_reduce(a);
  std::vector<std::vector<long long>> basis;
  int rows = static_cast<int>(a.size());
  for (int c = 0; c < cols; ++c) {
    bool zero = true;
    for (int r = 0; r < rows; ++r)
      if (cr.a[r][c] != 0) zero = false;
    if (!zero) continue;
    std::vector<long long> v(cols);
    for (int r = 0; r < cols; ++r) v[r] = cr.tracker[r][c];
    bool nz = false;
    for (long long x : v) nz |= (x != 0);
    if (nz) basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<long long>> int_solve(const IntMat& a, const std::vector<long long>& b) {
  if (a.empty()) return std::vector<long long>{};
  int rows = static_cast<int>(a.size());
  int cols = static_cast<int>(a[0].size());
  // Solve via column reduction of a with the tracker; forward-substitute b.
  ColReduction cr = column_reduce(a);
  std::vector<long long> rhs = b;
  std::vector<long long> y(cols, 0);  // coefficients in reduced-column basis
  // The reduced matrix has a staircase shape by construction: for each reduced
  // column (left to right) find its topmost nonzero row and eliminate.
  int c = 0;
  for (int r = 0; r < rows && c < cols; ++r) {
    if (cr.a[r][c] == 0) continue;
    if (rhs[r] % cr.a[r][c] != 0) {
      // move on: later columns are zero in this row, so unsolvable here
      return std::nullopt;
    }
    long long q = rhs[r] / cr.a[r][c];
    y[c] = q;
    for (int rr = 0; rr < rows; ++rr) rhs[rr] -= q * cr.a[rr][c];
    ++c;
  }
  for (int r = 0; r < rows; ++r)
    if (rhs[r] != 0) return std::nullopt;
  std::vector<long long> x(cols, 0);
  for (int i = 0; i < cols; ++i)
    if (y[i] != 0)
      for (int r = 0; r < cols; ++r) x[r] += y[i] * cr.tracker[r][i];
  return x;
}

namespace {

// Exact rational scalar for the small simplex below.
struct Rat {
  long long n = 0, d = 1;
  static long long gcd(long long a, long long b) {
    a = std::abs(a);
    b = std::abs(b);
    while (b) {
      long long t = a % b;
      a = b;
      b = t;
    }
    return a;
  }
  void norm() {
    if (d < 0) {
      n = -n;
      d = -d;
    }
    long long g = gcd(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    if (n == 0) d = 1;
  }
  Rat() = default;
  Rat(long long a) : n(a), d(1) {}
  Rat(long long a, long long b) : n(a), d(b) { norm(); }
  Rat operator+(const Rat& o) const { return Rat(n * o.d + o.n * d, d * o.d); }
  Rat operator-(const Rat& o) const { return Rat(n * o.d - o.n * d, d * o.d); }
  Rat operator*(const Rat& o) const { return Rat(n * o.n, d * o.d); }
  Rat operator/(const Rat& o) const { return Rat(n * o.d, d * o.n); }
  bool operator==(const Rat& o) const { return n == o.n && d == o.d; }
  bool operator<(const Rat& o) const { return (__int128)n * o.d < (__int128)o.n * d; }
  bool operator>(const Rat& o) const { return o < *this; }
  bool neg() const { return n < 0; }
  bool pos() const { return n > 0; }
  bool zero() const { return n == 0; }
};

}  // namespace

bool positive_orthogonal_vector_exists(const std::vector<std::vector<long long>>& lattice, int dim,
                                       std::vector<long long>* witness_area) {
  // Want w in Q^dim, w_j >= 1, with w . v = 0 for each lattice vector v.
  // Phase-one simplex on: minimize sum of artificial variables for the
  // equality constraints, over w_j = 1 + u_j, u_j >= 0.
  // Constraint for v:  sum_j v_j u_j = -sum_j v_j.
  int m = static_cast<int>(lattice.size());
  if (m == 0) {
    if (witness_area) witness_area->assign(dim, 1);
    return true;
  }
  int n = dim;  // u variables
  // tableau rows: constraints; columns: u_0..u_{n-1}, slack-free, artificial per row, rhs
  std::vector<std::vector<Rat>> t(m, std::vector<Rat>(n + m + 1));
  std::vector<int> basis(m);
  for (int i = 0; i < m; ++i) {
    long long rhs = 0;
    for (int j = 0; j < n; ++j) rhs -= lattice[i][j];
    long long sign = rhs >= 0 ? 1 : -1;
    for (int j = 0; j < n; ++j) t[i][j] = Rat(sign * lattice[i][j]);
    t[i][n + i] = Rat(1);
    t[i][n + m] = Rat(sign * rhs);
    basis[i] = n + i;
  }
  // objective: minimize sum of artificials -> row of reduced costs
  std::vector<Rat> obj(n + m + 1);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= n + m; ++j) obj[j] = obj[j] - t[i][j];
  for (int i = 0; i < m; ++i) obj[n + i] = Rat(0);

  auto pivot = [&](int pr, int pc) {
    Rat p = t[pr][pc];
    for (int j = 0; j <= n + m; ++j) t[pr][j] = t[pr][j] / p;
    for (int i = 0; i < m; ++i) {
      if (i == pr || t[i][pc].zero()) continue;
      Rat f = t[i][pc];
      for (int j = 0; j <= n + m; ++j) t[i][j] = t[i][j] - f * t[pr][j];
    }
    if (!obj[pc].zero()) {
      Rat f = obj[pc];
      for (int j = 0; j <= n + m; ++j) obj[j] = obj[j] - f * t[pr][j];
    }
    basis[pr] = pc;
  };

  for (int iter = 0; iter < 10000; ++iter) {
    int pc = -1;
    for (int j = 0; j < n + m; ++j)
      if (obj[j].neg()) {
        pc = j;
        break;
      }
    if (pc < 0) break;
    int pr = -1;
    Rat best;
    for (int i = 0; i < m; ++i) {
      if (!t[i][pc].pos()) continue;
      Rat ratio = t[i][n + m] / t[i][pc];
      if (pr < 0 || ratio < best) {
        pr = i;
        best = ratio;
      }
    }
    if (pr < 0) break;  // unbounded; cannot happen for phase one
    pivot(pr, pc);
  }
  // feasible iff optimum of artificial sum is 0
  Rat value = obj[n + m];
  bool ok = value.zero();
  if (ok && witness_area) {
    std::vector<Rat> u(n, Rat(0));
    for (int i = 0; i < m; ++i)
      if (basis[i] < n) u[basis[i]] = t[i][n + m];
    long long lcm = 1;
    for (const Rat& r : u) lcm = lcm / Rat::gcd(lcm, r.d) * r.d;
    witness_area->assign(n, 0);
    for (int j = 0; j < n; ++j) (*witness_area)[j] = lcm + u[j].n * (lcm / u[j].d);
  }
  return ok;
}

std::optional<std::vector<long long>> one_signed_combination(
    const std::vector<std::vector<long long>>& lattice, int dim, int bound) {
  int r = static_cast<int>(lattice.size());
  if (r == 0) return std::nullopt;
  std::vector<int> coeff(r, -bound);
  while (true) {
    bool allzero = true;
    for (int c : coeff) allzero &= (c == 0);
    if (!allzero) {
      std::vector<long long> v(dim, 0);
      for (int i = 0; i < r; ++i)
        for (int j = 0; j < dim; ++j) v[j] += coeff[i] * lattice[i][j];
      bool has_pos = false, has_neg = false, nz = false;
      for (long long x : v) {
        has_pos |= x > 0;
        has_neg |= x < 0;
        nz |= x != 0;
      }
      if (nz && !(has_pos && has_neg)) return v;
    }
    int i = 0;
    while (i < r && coeff[i] == bound) coeff[i++] = -bound;
    if (i == r) return std::nullopt;
    ++coeff[i];
  }
}

}  // namespace bhf
