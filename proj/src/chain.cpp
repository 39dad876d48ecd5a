#include "bhf/chain.hpp"

#include <set>

namespace bhf {

bool ChainComplex::d_squared_zero() const {
  for (int i = 0; i < dim(); ++i) {
    std::set<int> acc;
    for (int j : differential[i])
      for (int k : differential[j]) {
        auto it = acc.find(k);
        if (it == acc.end())
          acc.insert(k);
        else
          acc.erase(it);
      }
    if (!acc.empty()) return false;
  }
  return true;
}

int ChainComplex::homology_rank() const {
  int r = f2_rank_of_columns(differential, dim());
  return dim() - 2 * r;
}

std::vector<std::vector<int>> ChainComplex::homology_representatives() const {
  int n = dim();
  F2Matrix d(n, n);  // row r of d = differential of basis r (as row vector)
  for (int i = 0; i < n; ++i)
    for (int j : differential[i]) d.set(i, j, !d.get(i, j));
  // kernel of d^T ... we need cycles: vectors x with sum x_i d(e_i) = 0,
  // i.e. x in the kernel of the transpose acting on coordinates.
  F2Matrix dt(n, n);
  for (int i = 0; i < n; ++i)
    for (int j : differential[i]) dt.set(j, i, !dt.get(j, i));
  std::vector<std::vector<bool>> cycles = dt.kernel_basis();
  // reduce cycles modulo boundaries: row reduce [boundaries; cycles] and keep
  // cycle rows that add pivots
  std::vector<std::vector<bool>> boundaries;
  for (int i = 0; i < n; ++i) {
    std::vector<bool> b(n, false);
    bool nz = false;
    for (int j : differential[i]) {
      b[j] = !b[j];
      nz = true;
    }
    if (nz) boundaries.push_back(std::move(b));
  }
  F2Matrix m(static_cast<int>(boundaries.size() + cycles.size()), n);
  int row = 0;
  for (const auto& b : boundaries) {
    for (int c = 0; c < n; ++c) m.set(row, c, b[c]);
    ++row;
  }
  int first_cycle_row = row;
  for (const auto& c : cycles) {
    for (int cc = 0; cc < n; ++cc) m.set(row, cc, c[cc]);
    ++row;
  }
  // incremental rank: a cycle row contributes iff it grows the rank
  std::vector<std::vector<int>> reps;
  F2Matrix acc(0, 0);
  auto rank_upto = [&](int upto) {
    F2Matrix sub(upto, n);
    for (int r = 0; r < upto; ++r)
      for (int c = 0; c < n; ++c) sub.set(r, c, m.get(r, c));
    return sub.rank();
  };
  int base = rank_upto(first_cycle_row);
  int cur = base;
  for (size_t i = 0; i < cycles.size(); ++i) {
    int nr = rank_upto(first_cycle_row + static_cast<int>(i) + 1);
    if (nr > cur) {
      std::vector<int> rep;
      for (int c = 0; c < n; ++c)
        if (cycles[i][c]) rep.push_back(c);
      reps.push_back(std::move(rep));
      cur = nr;
    }
  }
  return reps;
}

}  // namespace bhf
