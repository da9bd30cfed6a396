#include "cusp/linalg.hpp"

namespace cusp {

std::vector<int> rref(const FiniteField* F, FqMat& m, int ncols) {
  std::vector<int> piv;
  std::size_t row = 0;
  for (int col = 0; col < ncols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[sel], m[row]);
    fe li = F->inv(m[row][col]);
    for (auto& x : m[row]) x = F->mul(x, li);
    for (std::size_t r = 0; r < m.size(); ++r) {
      if (r == row || m[r][col] == 0) continue;
      fe c = m[r][col];
      for (int k = 0; k < ncols; ++k) m[r][k] = F->sub(m[r][k], F->mul(c, m[row][k]));
    }
    piv.push_back(col);
    ++row;
  }
  m.resize(row);
  return piv;
}

int rank(const FiniteField* F, FqMat m, int ncols) { return static_cast<int>(rref(F, m, ncols).size()); }

FqMat nullspace(const FiniteField* F, FqMat m, int ncols) {
  auto piv = rref(F, m, ncols);
  std::vector<int> where(ncols, -1);
  for (std::size_t i = 0; i < piv.size(); ++i) where[piv[i]] = static_cast<int>(i);
  FqMat out;
  for (int free = 0; free < ncols; ++free) {
    if (where[free] >= 0) continue;
    FqVec v(ncols, 0);
    v[free] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = F->neg(m[i][free]);
    out.push_back(std::move(v));
  }
  return out;
}

bool in_span(const FiniteField* F, const FqMat& rows, const FqVec& v) {
  SpanBuilder sb(F, static_cast<int>(v.size()));
  for (const auto& r : rows) sb.insert(r);
  auto rem = sb.reduce(v);
  for (auto x : rem)
    if (x) return false;
  return true;
}

FqVec SpanBuilder::reduce(FqVec v) const {
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    fe c = v[piv_[i]];
    if (c == 0) continue;
    for (int k = 0; k < n_; ++k) v[k] = F_->sub(v[k], F_->mul(c, rows_[i][k]));
  }
  return v;
}

bool SpanBuilder::insert(const FqVec& v0) {
  FqVec v = reduce(v0);
  int p = -1;
  for (int k = 0; k < n_; ++k)
    if (v[k]) {
      p = k;
      break;
    }
  if (p < 0) return false;
  fe li = F_->inv(v[p]);
  for (auto& x : v) x = F_->mul(x, li);
  for (auto& r : rows_) {
    fe c = r[p];
    if (c == 0) continue;
    for (int k = 0; k < n_; ++k) r[k] = F_->sub(r[k], F_->mul(c, v[k]));
  }
  rows_.push_back(std::move(v));
  piv_.push_back(p);
  return true;
}

}  // namespace cusp
