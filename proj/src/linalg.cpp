#include "pckit/linalg.hpp"

namespace pckit {

int rref_in_place(DenseMat& m, std::vector<int>* pivot_cols) {
  require(m.ring.is_field(), Err::WrongKind, "row reduction needs field coefficients");
  int rank = 0;
  for (int col = 0; col < m.cols && rank < m.rows; ++col) {
    int pivot = -1;
    for (int i = rank; i < m.rows; ++i)
      if (!is_zero(m.at(i, col))) {
        pivot = i;
        break;
      }
    if (pivot < 0) continue;
    if (pivot != rank)
      for (int j = 0; j < m.cols; ++j) std::swap(m.at(pivot, j), m.at(rank, j));
    RingElem inv = rinv(m.at(rank, col));
    for (int j = col; j < m.cols; ++j) m.at(rank, j) = rmul(inv, m.at(rank, j));
    for (int i = 0; i < m.rows; ++i) {
      if (i == rank || is_zero(m.at(i, col))) continue;
      RingElem c = m.at(i, col);
      for (int j = col; j < m.cols; ++j)
        m.at(i, j) = rsub(m.at(i, j), rmul(c, m.at(rank, j)));
    }
    if (pivot_cols) pivot_cols->push_back(col);
    ++rank;
  }
  return rank;
}

int rank(DenseMat m) { return rref_in_place(m); }

std::vector<std::vector<RingElem>> kernel_basis(const DenseMat& mat) {
  DenseMat m = mat;
  std::vector<int> pivots;
  int rk = rref_in_place(&m == &mat ? m : m, &pivots);
  std::vector<bool> is_pivot(static_cast<size_t>(m.cols), false);
  for (int c : pivots) is_pivot[static_cast<size_t>(c)] = true;
  std::vector<std::vector<RingElem>> basis;
  for (int freecol = 0; freecol < m.cols; ++freecol) {
    if (is_pivot[static_cast<size_t>(freecol)]) continue;
    std::vector<RingElem> v(static_cast<size_t>(m.cols), ring_zero(m.ring));
    v[static_cast<size_t>(freecol)] = ring_one(m.ring);
    for (int r = 0; r < rk; ++r) {
      int pc = pivots[static_cast<size_t>(r)];
      v[static_cast<size_t>(pc)] = rneg(m.at(r, freecol));
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<std::vector<RingElem>> solve_linear(DenseMat m, std::vector<RingElem> b) {
  require(static_cast<int>(b.size()) == m.rows, Err::RankMismatch, "rhs length mismatch");
  DenseMat aug(m.ring, m.rows, m.cols + 1);
  for (int i = 0; i < m.rows; ++i) {
    for (int j = 0; j < m.cols; ++j) aug.at(i, j) = m.at(i, j);
    aug.at(i, m.cols) = b[static_cast<size_t>(i)];
  }
  std::vector<int> pivots;
  rref_in_place(aug, &pivots);
  for (int c : pivots)
    if (c == m.cols) return std::nullopt;  // inconsistent
  std::vector<RingElem> x(static_cast<size_t>(m.cols), ring_zero(m.ring));
  for (size_t r = 0; r < pivots.size(); ++r)
    x[static_cast<size_t>(pivots[r])] = aug.at(static_cast<int>(r), m.cols);
  return x;
}

}  // namespace pckit
