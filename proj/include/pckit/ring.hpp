#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "pckit/error.hpp"

namespace pckit {

// Exact arithmetic in the coefficient rings: finite fields F_{p^f},
// truncations Z/p^r, and dual numbers F_{p^f}[eps] with eps^2 = 0.
//
// F_{p^f} is F_p[x]/(m(x)) where m is the least monic irreducible of degree f
// under the encoding m(x) = x^f + sum c_i x^i |-> sum c_i p^i. Elements are
// canonical coefficient vectors (c_0, ..., c_{f-1}).

enum class RingKind { Fq, ZmodPr, Dual };

struct RingSpec {
  RingKind kind{RingKind::Fq};
  int64_t p{2};
  int32_t f{1};  // extension degree (Fq and the Dual base field)
  int32_t r{1};  // truncation exponent (ZmodPr)

  static RingSpec fq(int64_t p, int32_t f = 1);
  static RingSpec zmod(int64_t p, int32_t r);
  static RingSpec dual(int64_t p, int32_t f = 1);

  int64_t size() const;            // number of elements
  int64_t characteristic() const;  // p, or p^r for ZmodPr viewed additively on 1
  bool is_field() const { return kind == RingKind::Fq; }
  RingSpec base_field() const;  // Dual -> Fq base; Fq -> itself
  std::string to_string() const;

  bool operator==(const RingSpec&) const = default;
};

inline constexpr int kMaxCoeffs = 8;

// Canonical payload: Fq uses c[0..f-1], ZmodPr uses c[0], Dual uses
// c[0..f-1] (value part) and c[f..2f-1] (eps part). Unused slots stay zero so
// structural equality is exact.
struct RingElem {
  RingSpec spec;
  std::array<int64_t, kMaxCoeffs> c{};

  bool operator==(const RingElem&) const = default;
};

int payload_len(const RingSpec& s);

RingElem ring_zero(const RingSpec& s);
RingElem ring_one(const RingSpec& s);
RingElem ring_from_int(const RingSpec& s, int64_t v);

RingElem radd(const RingElem& a, const RingElem& b);
RingElem rsub(const RingElem& a, const RingElem& b);
RingElem rneg(const RingElem& a);
RingElem rmul(const RingElem& a, const RingElem& b);
RingElem rinv(const RingElem& a);  // throws NonUnit
RingElem rpow(const RingElem& a, int64_t e);

bool is_zero(const RingElem& a);
bool is_one(const RingElem& a);
bool is_unit(const RingElem& a);

// Dual-number accessors (value + eps*part).
RingElem dual_make(const RingElem& value, const RingElem& eps_part);
RingElem dual_value(const RingElem& a);
RingElem dual_eps(const RingElem& a);

// Unique (q-1)-torsion lift of a nonzero residue of F_p into Z/p^r, computed
// by iterating a |-> a^p to stabilization. Throws ZeroResidue.
RingElem teichmueller(const RingSpec& zmod_spec, const RingElem& residue);

// Ring homomorphism F_{p^f} -> F_{p^{fk}} sending the canonical generator to
// the least root of the degree-f defining polynomial in the big field.
RingElem embed_extension(const RingElem& x, int32_t k);

// Reduction Z/p^r -> F_p on c[0].
RingElem zmod_residue(const RingElem& x);

// Deterministic enumeration (index <-> element bijection, 0 = zero elem).
int64_t ring_encode(const RingElem& x);
RingElem ring_decode(const RingSpec& s, int64_t code);
std::vector<RingElem> enumerate_ring(const RingSpec& s);

// Defining polynomial of F_{p^f}: monic, returned as f+1 coefficients
// (c_0, ..., c_{f-1}, 1).
std::vector<int64_t> defining_poly(int64_t p, int32_t f);

bool is_prime(int64_t n);

}  // namespace pckit
