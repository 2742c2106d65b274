#pragma once

// Test-only oracles, kept independent of the library's computation paths.

#include <vector>

#include "pckit/mat.hpp"
#include "pckit/ring.hpp"

namespace pckit::oracle {

// polynomials over a ring, low coefficient first
using RPoly = std::vector<RingElem>;

inline RPoly rpoly_add(const RPoly& a, const RPoly& b) {
  RPoly c(std::max(a.size(), b.size()));
  const RingSpec& s = a.empty() ? b[0].spec : a[0].spec;
  for (size_t i = 0; i < c.size(); ++i) {
    RingElem v = ring_zero(s);
    if (i < a.size()) v = radd(v, a[i]);
    if (i < b.size()) v = radd(v, b[i]);
    c[i] = v;
  }
  return c;
}

inline RPoly rpoly_mul(const RPoly& a, const RPoly& b) {
  if (a.empty() || b.empty()) return {};
  RPoly c(a.size() + b.size() - 1, ring_zero(a[0].spec));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = radd(c[i + j], rmul(a[i], b[j]));
  return c;
}

// Laplace expansion along the first column of a matrix of polynomials.
inline RPoly poly_det(const std::vector<std::vector<RPoly>>& m) {
  size_t n = m.size();
  if (n == 1) return m[0][0];
  RPoly acc;
  for (size_t i = 0; i < n; ++i) {
    std::vector<std::vector<RPoly>> minor;
    for (size_t r = 0; r < n; ++r) {
      if (r == i) continue;
      std::vector<RPoly> row;
      for (size_t c = 1; c < n; ++c) row.push_back(m[r][c]);
      minor.push_back(row);
    }
    RPoly term = rpoly_mul(m[i][0], poly_det(minor));
    if (i % 2 == 1)
      for (auto& x : term) x = rneg(x);
    acc = acc.empty() ? term : rpoly_add(acc, term);
  }
  return acc;
}

// char_poly oracle: expand det(tI - M) by cofactors over R[t] and read off
// the signed coefficients (sigma_1, ..., sigma_d).
inline std::vector<RingElem> charpoly_cofactor(const Mat& m) {
  const RingSpec& s = m.ring;
  std::vector<std::vector<RPoly>> a(static_cast<size_t>(m.d),
                                    std::vector<RPoly>(static_cast<size_t>(m.d)));
  for (int i = 0; i < m.d; ++i)
    for (int j = 0; j < m.d; ++j) {
      RPoly p = {rneg(m.at(i, j))};
      if (i == j) p.push_back(ring_one(s));
      a[static_cast<size_t>(i)][static_cast<size_t>(j)] = p;
    }
  RPoly det = poly_det(a);
  det.resize(static_cast<size_t>(m.d + 1), ring_zero(s));
  std::vector<RingElem> sigmas(static_cast<size_t>(m.d));
  for (int i = 1; i <= m.d; ++i) {
    RingElem c = det[static_cast<size_t>(m.d - i)];
    sigmas[static_cast<size_t>(i - 1)] = (i % 2 == 1) ? rneg(c) : c;
  }
  return sigmas;
}

inline RingElem det_cofactor(const Mat& m) {
  std::vector<std::vector<RPoly>> a(static_cast<size_t>(m.d),
                                    std::vector<RPoly>(static_cast<size_t>(m.d)));
  for (int i = 0; i < m.d; ++i)
    for (int j = 0; j < m.d; ++j) a[static_cast<size_t>(i)][static_cast<size_t>(j)] = {m.at(i, j)};
  return poly_det(a)[0];
}

// exhaustive multiplicative inverse, for tiny rings
inline bool find_inverse_exhaustive(const RingElem& x, RingElem* out) {
  for (int64_t i = 0; i < x.spec.size(); ++i) {
    RingElem y = ring_decode(x.spec, i);
    if (is_one(rmul(x, y))) {
      *out = y;
      return true;
    }
  }
  return false;
}

}  // namespace pckit::oracle
