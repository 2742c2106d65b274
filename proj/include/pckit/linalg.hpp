#pragma once

#include <optional>
#include <vector>

#include "pckit/ring.hpp"

namespace pckit {

// Rectangular matrices over a field, used for the exact linear algebra behind
// conjugacy searches, invariant-subspace hunting and cochain ranks.
struct DenseMat {
  RingSpec ring;
  int rows{0}, cols{0};
  std::vector<RingElem> a;

  DenseMat() = default;
  DenseMat(const RingSpec& r, int nr, int nc)
      : ring(r), rows(nr), cols(nc), a(static_cast<size_t>(nr) * static_cast<size_t>(nc), ring_zero(r)) {}

  RingElem& at(int i, int j) { return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)]; }
  const RingElem& at(int i, int j) const {
    return a[static_cast<size_t>(i) * static_cast<size_t>(cols) + static_cast<size_t>(j)];
  }
};

// Reduced row echelon form in place; returns rank. Field coefficients only.
int rref_in_place(DenseMat& m, std::vector<int>* pivot_cols = nullptr);

int rank(DenseMat m);

// Basis of { x : M x = 0 }.
std::vector<std::vector<RingElem>> kernel_basis(const DenseMat& m);

// One solution of M x = b, if any.
std::optional<std::vector<RingElem>> solve_linear(DenseMat m, std::vector<RingElem> b);

}  // namespace pckit
