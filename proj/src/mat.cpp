#include "pckit/mat.hpp"

namespace pckit {

Mat mat_identity(const RingSpec& ring, int d) {
  Mat m(ring, d);
  for (int i = 0; i < d; ++i) m.at(i, i) = ring_one(ring);
  return m;
}

Mat mat_from_ints(const RingSpec& ring, const std::vector<std::vector<int64_t>>& rows) {
  int d = static_cast<int>(rows.size());
  Mat m(ring, d);
  for (int i = 0; i < d; ++i) {
    require(static_cast<int>(rows[static_cast<size_t>(i)].size()) == d, Err::SchemaError,
            "matrix rows must be square");
    for (int j = 0; j < d; ++j)
      m.at(i, j) = ring_from_int(ring, rows[static_cast<size_t>(i)][static_cast<size_t>(j)]);
  }
  return m;
}

static void check_compat(const Mat& a, const Mat& b) {
  require(a.ring == b.ring && a.d == b.d, Err::IncompatibleContexts,
          "matrix operands disagree in ring or size");
}

Mat mat_mul(const Mat& a, const Mat& b) {
  check_compat(a, b);
  Mat c(a.ring, a.d);
  for (int i = 0; i < a.d; ++i)
    for (int k = 0; k < a.d; ++k) {
      const RingElem& aik = a.at(i, k);
      if (is_zero(aik)) continue;
      for (int j = 0; j < a.d; ++j)
        c.at(i, j) = radd(c.at(i, j), rmul(aik, b.at(k, j)));
    }
  return c;
}

Mat mat_add(const Mat& a, const Mat& b) {
  check_compat(a, b);
  Mat c(a.ring, a.d);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = radd(a.e[i], b.e[i]);
  return c;
}

Mat mat_sub(const Mat& a, const Mat& b) {
  check_compat(a, b);
  Mat c(a.ring, a.d);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = rsub(a.e[i], b.e[i]);
  return c;
}

Mat mat_neg(const Mat& a) {
  Mat c(a.ring, a.d);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = rneg(a.e[i]);
  return c;
}

Mat mat_scale(const RingElem& s, const Mat& a) {
  Mat c(a.ring, a.d);
  for (size_t i = 0; i < a.e.size(); ++i) c.e[i] = rmul(s, a.e[i]);
  return c;
}

Mat mat_transpose(const Mat& a) {
  Mat c(a.ring, a.d);
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j) c.at(j, i) = a.at(i, j);
  return c;
}

Mat mat_pow(const Mat& a, int64_t e) {
  if (e < 0) return mat_pow(mat_inverse(a), -e);
  Mat acc = mat_identity(a.ring, a.d);
  Mat base = a;
  while (e > 0) {
    if (e & 1) acc = mat_mul(acc, base);
    base = mat_mul(base, base);
    e >>= 1;
  }
  return acc;
}

std::vector<RingElem> char_poly_sigmas(const Mat& m) {
  const RingSpec& R = m.ring;
  int n = m.d;
  require(n >= 1, Err::SchemaError, "empty matrix");
  if (n == 1) return {m.at(0, 0)};
  if (n == 2)
    return {radd(m.at(0, 0), m.at(1, 1)),
            rsub(rmul(m.at(0, 0), m.at(1, 1)), rmul(m.at(0, 1), m.at(1, 0)))};
  // Berkowitz: V_r holds the coefficients (c_0=1, c_1, ..., c_r) of
  // det(tI - A_r) for the leading principal r x r submatrix A_r.
  std::vector<RingElem> v = {ring_one(R), rneg(m.at(0, 0))};
  for (int r = 1; r < n; ++r) {
    // first column of the (r+2) x (r+1) Toeplitz matrix
    std::vector<RingElem> t(static_cast<size_t>(r + 2), ring_zero(R));
    t[0] = ring_one(R);
    t[1] = rneg(m.at(r, r));
    // t[k] = -(Row * A^{k-2} * Col) for k = 2..r+1
    std::vector<RingElem> w(static_cast<size_t>(r));  // starts as Col, then A*Col, ...
    for (int i = 0; i < r; ++i) w[static_cast<size_t>(i)] = m.at(i, r);
    for (int k = 2; k <= r + 1; ++k) {
      RingElem dot = ring_zero(R);
      for (int i = 0; i < r; ++i) dot = radd(dot, rmul(m.at(r, i), w[static_cast<size_t>(i)]));
      t[static_cast<size_t>(k)] = rneg(dot);
      if (k <= r) {
        std::vector<RingElem> w2(static_cast<size_t>(r), ring_zero(R));
        for (int i = 0; i < r; ++i)
          for (int j = 0; j < r; ++j)
            w2[static_cast<size_t>(i)] = radd(w2[static_cast<size_t>(i)], rmul(m.at(i, j), w[static_cast<size_t>(j)]));
        w = w2;
      }
    }
    std::vector<RingElem> v2(static_cast<size_t>(r + 2), ring_zero(R));
    for (int i = 0; i < r + 2; ++i)
      for (int j = 0; j <= std::min(i, r); ++j)
        v2[static_cast<size_t>(i)] =
            radd(v2[static_cast<size_t>(i)], rmul(t[static_cast<size_t>(i - j)], v[static_cast<size_t>(j)]));
    v = v2;
  }
  // det(tI - M) = sum_i v[i] t^{n-i}; sigma_i = (-1)^i v[i]
  std::vector<RingElem> sigmas(static_cast<size_t>(n), ring_zero(R));
  for (int i = 1; i <= n; ++i) {
    sigmas[static_cast<size_t>(i - 1)] = (i % 2 == 1) ? rneg(v[static_cast<size_t>(i)]) : v[static_cast<size_t>(i)];
  }
  return sigmas;
}

RingElem mat_trace(const Mat& m) {
  RingElem t = ring_zero(m.ring);
  for (int i = 0; i < m.d; ++i) t = radd(t, m.at(i, i));
  return t;
}

RingElem mat_det(const Mat& m) { return char_poly_sigmas(m).back(); }

bool mat_invertible(const Mat& m) { return is_unit(mat_det(m)); }

Mat mat_inverse(const Mat& m) {
  // Cayley-Hamilton: M (M^{d-1} - s1 M^{d-2} + ... + (-1)^{d-1} s_{d-1} I)
  //                = (-1)^{d-1} s_d I
  auto s = char_poly_sigmas(m);
  require(is_unit(s.back()), Err::NonInvertible, "determinant is not a unit");
  int d = m.d;
  Mat acc(m.ring, d);
  Mat p = mat_identity(m.ring, d);  // M^0
  // sum_{k=0}^{d-1} (-1)^k s_k M^{d-1-k}, built as s-weighted powers
  std::vector<Mat> powers;
  powers.push_back(p);
  for (int k = 1; k <= d - 1; ++k) powers.push_back(mat_mul(powers.back(), m));
  for (int k = 0; k <= d - 1; ++k) {
    RingElem coef = (k == 0) ? ring_one(m.ring) : s[static_cast<size_t>(k - 1)];
    if (k % 2 == 1) coef = rneg(coef);
    acc = mat_add(acc, mat_scale(coef, powers[static_cast<size_t>(d - 1 - k)]));
  }
  RingElem scale = rinv(s.back());
  if (d % 2 == 0) scale = rneg(scale);
  return mat_scale(scale, acc);
}

Mat kron(const Mat& a, const Mat& b) {
  require(a.ring == b.ring, Err::IncompatibleContexts, "Kronecker factors over different rings");
  Mat c(a.ring, a.d * b.d);
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j)
      for (int k = 0; k < b.d; ++k)
        for (int l = 0; l < b.d; ++l)
          c.at(i * b.d + k, j * b.d + l) = rmul(a.at(i, j), b.at(k, l));
  return c;
}

Mat block_diag(const Mat& a, const Mat& b) {
  require(a.ring == b.ring, Err::IncompatibleContexts, "blocks over different rings");
  Mat c(a.ring, a.d + b.d);
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j) c.at(i, j) = a.at(i, j);
  for (int i = 0; i < b.d; ++i)
    for (int j = 0; j < b.d; ++j) c.at(a.d + i, a.d + j) = b.at(i, j);
  return c;
}

Mat mat_embed_extension(const Mat& m, int32_t k) {
  Mat c(RingSpec::fq(m.ring.p, m.ring.f * k), m.d);
  for (size_t i = 0; i < m.e.size(); ++i) c.e[i] = embed_extension(m.e[i], k);
  return c;
}

std::vector<RingElem> sigmas_of_inverse(const std::vector<RingElem>& s) {
  int d = static_cast<int>(s.size());
  RingElem det_inv = rinv(s.back());
  std::vector<RingElem> out(static_cast<size_t>(d));
  for (int i = 1; i <= d; ++i) {
    RingElem num = (i == d) ? ring_one(s[0].spec) : s[static_cast<size_t>(d - i - 1)];
    out[static_cast<size_t>(i - 1)] = rmul(num, det_inv);
  }
  return out;
}

}  // namespace pckit
