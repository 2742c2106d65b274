#pragma once

#include <vector>

#include "pckit/ring.hpp"

namespace pckit {

// Dense square matrices over a coefficient ring, row-major.
struct Mat {
  RingSpec ring;
  int d{0};
  std::vector<RingElem> e;

  Mat() = default;
  Mat(const RingSpec& r, int dim) : ring(r), d(dim), e(static_cast<size_t>(dim * dim), ring_zero(r)) {}

  RingElem& at(int i, int j) { return e[static_cast<size_t>(i * d + j)]; }
  const RingElem& at(int i, int j) const { return e[static_cast<size_t>(i * d + j)]; }

  bool operator==(const Mat&) const = default;
};

Mat mat_identity(const RingSpec& ring, int d);
Mat mat_from_ints(const RingSpec& ring, const std::vector<std::vector<int64_t>>& rows);

Mat mat_mul(const Mat& a, const Mat& b);
Mat mat_add(const Mat& a, const Mat& b);
Mat mat_sub(const Mat& a, const Mat& b);
Mat mat_neg(const Mat& a);
Mat mat_scale(const RingElem& s, const Mat& a);
Mat mat_transpose(const Mat& a);
Mat mat_pow(const Mat& a, int64_t e);

// Signed characteristic polynomial coefficients (sigma_1, ..., sigma_d) with
// det(tI - M) = sum_i (-1)^i sigma_i t^{d-i}; sigma_1 = trace, sigma_d = det.
// Berkowitz recursion, division-free, valid over any commutative ring.
std::vector<RingElem> char_poly_sigmas(const Mat& m);

RingElem mat_trace(const Mat& m);
RingElem mat_det(const Mat& m);
bool mat_invertible(const Mat& m);
Mat mat_inverse(const Mat& m);  // throws NonInvertible

Mat kron(const Mat& a, const Mat& b);
Mat block_diag(const Mat& a, const Mat& b);

// Maps elements entrywise through embed_extension.
Mat mat_embed_extension(const Mat& m, int32_t k);

// sigma-vector of the inverse from the sigma-vector of the element:
// sigma_i(M^-1) = sigma_{d-i}(M) / sigma_d(M), sigma_0 = 1.
std::vector<RingElem> sigmas_of_inverse(const std::vector<RingElem>& s);

}  // namespace pckit
