#include "pckit/ring.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <numeric>
#include <sstream>

namespace pckit {

namespace {

int64_t mod(int64_t a, int64_t m) {
  int64_t v = a % m;
  return v < 0 ? v + m : v;
}

int64_t ipow(int64_t b, int64_t e) {
  int64_t v = 1;
  for (int64_t i = 0; i < e; ++i) v *= b;
  return v;
}

// --- dense polynomial arithmetic over F_p (coefficient vectors, low first) ---

using Poly = std::vector<int64_t>;

int pdeg(const Poly& a) {
  for (int i = static_cast<int>(a.size()) - 1; i >= 0; --i)
    if (a[i] != 0) return i;
  return -1;
}

Poly ptrim(Poly a) {
  a.resize(static_cast<size_t>(pdeg(a) + 1));
  return a;
}

Poly pmul(const Poly& a, const Poly& b, int64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < b.size(); ++j) c[i + j] = mod(c[i + j] + a[i] * b[j], p);
  }
  return ptrim(c);
}

Poly padd(const Poly& a, const Poly& b, int64_t p) {
  Poly c(std::max(a.size(), b.size()), 0);
  for (size_t i = 0; i < c.size(); ++i) {
    int64_t v = (i < a.size() ? a[i] : 0) + (i < b.size() ? b[i] : 0);
    c[i] = mod(v, p);
  }
  return ptrim(c);
}

Poly pscale(const Poly& a, int64_t s, int64_t p) {
  Poly c(a.size());
  for (size_t i = 0; i < a.size(); ++i) c[i] = mod(a[i] * s, p);
  return ptrim(c);
}

int64_t inv_mod_prime(int64_t a, int64_t p) {
  a = mod(a, p);
  require(a != 0, Err::NonUnit, "0 has no inverse mod " + std::to_string(p));
  int64_t t = 0, newt = 1, r = p, newr = a;
  while (newr != 0) {
    int64_t q = r / newr;
    std::swap(t -= q * newt, newt);
    std::swap(r -= q * newr, newr);
  }
  return mod(t, p);
}

// a mod b, b nonzero, over F_p
Poly pmod(Poly a, const Poly& b, int64_t p) {
  int db = pdeg(b);
  int64_t lead_inv = inv_mod_prime(b[static_cast<size_t>(db)], p);
  while (pdeg(a) >= db) {
    int da = pdeg(a);
    int64_t coef = mod(a[static_cast<size_t>(da)] * lead_inv, p);
    for (int i = 0; i <= db; ++i)
      a[static_cast<size_t>(da - db + i)] =
          mod(a[static_cast<size_t>(da - db + i)] - coef * b[static_cast<size_t>(i)], p);
  }
  return ptrim(a);
}

// extended euclid: returns g = gcd(a,b) monic, and u with u*a = g mod b
std::pair<Poly, Poly> pgcdext(Poly a, Poly b, int64_t p) {
  Poly u0 = {1}, u1 = {};
  while (pdeg(b) >= 0) {
    // divide a by b
    Poly q;
    Poly rem = a;
    int db = pdeg(b);
    int64_t lead_inv = inv_mod_prime(b[static_cast<size_t>(db)], p);
    q.assign(static_cast<size_t>(std::max(pdeg(rem) - db + 1, 1)), 0);
    while (pdeg(rem) >= db) {
      int dr = pdeg(rem);
      int64_t coef = mod(rem[static_cast<size_t>(dr)] * lead_inv, p);
      q[static_cast<size_t>(dr - db)] = coef;
      for (int i = 0; i <= db; ++i)
        rem[static_cast<size_t>(dr - db + i)] =
            mod(rem[static_cast<size_t>(dr - db + i)] - coef * b[static_cast<size_t>(i)], p);
    }
    rem = ptrim(rem);
    Poly u2 = padd(u0, pscale(pmul(ptrim(q), u1, p), p - 1, p), p);
    a = b;
    b = rem;
    u0 = u1;
    u1 = u2;
  }
  if (pdeg(a) >= 0 && a[static_cast<size_t>(pdeg(a))] != 1) {
    int64_t s = inv_mod_prime(a[static_cast<size_t>(pdeg(a))], p);
    a = pscale(a, s, p);
    u0 = pscale(u0, s, p);
  }
  return {a, u0};
}

struct FieldKey {
  int64_t p;
  int32_t f;
  bool operator<(const FieldKey& o) const { return std::tie(p, f) < std::tie(o.p, o.f); }
};

std::mutex g_cache_mu;
std::map<FieldKey, Poly> g_defpoly;
// powers beta^0..beta^{f-1} of the canonical image of the F_{p^f} generator
// inside F_{p^{fk}}, stored as raw payloads of length f*k
std::map<std::pair<FieldKey, int32_t>, std::vector<Poly>> g_embed_powers;

// fixed-size field context for the multiplication fast path
struct FieldCtx {
  int64_t p{0};
  int32_t f{0};
  std::array<int64_t, kMaxCoeffs> m{};  // non-leading defpoly coefficients
};

const Poly& cached_defpoly(int64_t p, int32_t f);

const FieldCtx& field_ctx(int64_t p, int32_t f) {
  thread_local std::map<FieldKey, FieldCtx> memo;
  auto it = memo.find({p, f});
  if (it != memo.end()) return it->second;
  const Poly& dp = cached_defpoly(p, f);
  FieldCtx ctx;
  ctx.p = p;
  ctx.f = f;
  for (int32_t i = 0; i < f; ++i) ctx.m[static_cast<size_t>(i)] = dp[static_cast<size_t>(i)];
  return memo.emplace(FieldKey{p, f}, ctx).first->second;
}

// out = a*b mod (defpoly, p); a, b, out are length-f coefficient slices that
// may alias only if distinct from each other
void fq_mul_fast(const int64_t* a, const int64_t* b, int64_t* out, const FieldCtx& ctx) {
  int64_t buf[2 * kMaxCoeffs] = {0};
  const int f = ctx.f;
  const int64_t p = ctx.p;
  for (int i = 0; i < f; ++i) {
    if (a[i] == 0) continue;
    for (int j = 0; j < f; ++j) buf[i + j] += a[i] * b[j];
  }
  for (int k = 2 * f - 2; k >= f; --k) {
    int64_t v = mod(buf[k], p);
    if (v == 0) continue;
    for (int i = 0; i < f; ++i) buf[k - f + i] -= v * ctx.m[static_cast<size_t>(i)];
  }
  for (int i = 0; i < f; ++i) out[i] = mod(buf[i], p);
}

bool poly_irreducible(const Poly& m, int64_t p, int32_t f) {
  if (f == 1) return true;
  // trial division by every monic polynomial of degree 1..f/2
  for (int32_t d = 1; 2 * d <= f; ++d) {
    int64_t count = ipow(p, d);
    for (int64_t enc = 0; enc < count; ++enc) {
      Poly div(static_cast<size_t>(d + 1), 0);
      int64_t e = enc;
      for (int32_t i = 0; i < d; ++i) {
        div[static_cast<size_t>(i)] = e % p;
        e /= p;
      }
      div[static_cast<size_t>(d)] = 1;
      if (pdeg(pmod(m, div, p)) < 0) return false;
    }
  }
  return true;
}

const Poly& cached_defpoly(int64_t p, int32_t f) {
  std::lock_guard<std::mutex> lk(g_cache_mu);
  auto it = g_defpoly.find({p, f});
  if (it != g_defpoly.end()) return it->second;
  int64_t count = ipow(p, f);
  for (int64_t enc = 0; enc < count; ++enc) {
    Poly m(static_cast<size_t>(f + 1), 0);
    int64_t e = enc;
    for (int32_t i = 0; i < f; ++i) {
      m[static_cast<size_t>(i)] = e % p;
      e /= p;
    }
    m[static_cast<size_t>(f)] = 1;
    if (poly_irreducible(m, p, f)) {
      return g_defpoly.emplace(FieldKey{p, f}, std::move(m)).first->second;
    }
  }
  fail(Err::Internal, "no irreducible polynomial found");
}

Poly fq_payload(const RingElem& x, int32_t f) {
  Poly a(static_cast<size_t>(f));
  for (int32_t i = 0; i < f; ++i) a[static_cast<size_t>(i)] = x.c[static_cast<size_t>(i)];
  return ptrim(a);
}

void store_payload(RingElem& x, const Poly& a, int offset = 0) {
  for (size_t i = 0; i < a.size(); ++i) x.c[i + static_cast<size_t>(offset)] = a[i];
}

Poly fq_mul_raw(const Poly& a, const Poly& b, int64_t p, const Poly& m) {
  return pmod(pmul(a, b, p), m, p);
}

Poly fq_inv_raw(const Poly& a, int64_t p, const Poly& m) {
  if (pdeg(a) < 0) fail(Err::NonUnit, "0 is not invertible");
  auto [g, u] = pgcdext(a, m, p);
  require(pdeg(g) == 0, Err::NonUnit, "element shares a factor with the modulus");
  return pmod(u, m, p);
}

// evaluate poly at a field element given its power table
Poly eval_with_powers(const Poly& coeffs, const std::vector<Poly>& powers, int64_t p,
                      const Poly& m) {
  Poly acc;
  for (size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    acc = padd(acc, pscale(powers[i], coeffs[i], p), p);
  }
  return pmod(acc, m, p);
}

const std::vector<Poly>& cached_embed_powers(int64_t p, int32_t f, int32_t k) {
  auto key = std::make_pair(FieldKey{p, f}, k);
  {
    std::lock_guard<std::mutex> lk(g_cache_mu);
    auto it = g_embed_powers.find(key);
    if (it != g_embed_powers.end()) return it->second;
  }
  const Poly small = cached_defpoly(p, f);
  const Poly big = cached_defpoly(p, f * k);
  // least root of `small` in F_{p^{fk}}, by payload encoding order
  int64_t q_big = ipow(p, f * k);
  for (int64_t enc = 0; enc < q_big; ++enc) {
    Poly beta(static_cast<size_t>(f * k), 0);
    int64_t e = enc;
    for (int32_t i = 0; i < f * k; ++i) {
      beta[static_cast<size_t>(i)] = e % p;
      e /= p;
    }
    beta = ptrim(beta);
    Poly val = eval_with_powers(small, [&] {
      std::vector<Poly> pw(small.size());
      pw[0] = {1};
      for (size_t i = 1; i < small.size(); ++i) pw[i] = fq_mul_raw(pw[i - 1], beta, p, big);
      return pw;
    }(), p, big);
    if (pdeg(val) < 0) {
      std::vector<Poly> powers(static_cast<size_t>(f));
      powers[0] = {1};
      for (int32_t i = 1; i < f; ++i)
        powers[static_cast<size_t>(i)] = fq_mul_raw(powers[static_cast<size_t>(i - 1)], beta, p, big);
      std::lock_guard<std::mutex> lk(g_cache_mu);
      return g_embed_powers.emplace(key, std::move(powers)).first->second;
    }
  }
  fail(Err::Internal, "defining polynomial has no root in its extension");
}

void check_same_spec(const RingElem& a, const RingElem& b) {
  require(a.spec == b.spec, Err::IncompatibleContexts,
          "ring elements from different specs: " + a.spec.to_string() + " vs " +
              b.spec.to_string());
}

}  // namespace

bool is_prime(int64_t n) {
  if (n < 2) return false;
  for (int64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

RingSpec RingSpec::fq(int64_t p, int32_t f) {
  require(is_prime(p), Err::SchemaError, "p must be prime, got " + std::to_string(p));
  require(f >= 1 && f <= kMaxCoeffs, Err::SchemaError, "extension degree out of range");
  RingSpec s;
  s.kind = RingKind::Fq;
  s.p = p;
  s.f = f;
  s.r = 0;
  return s;
}

RingSpec RingSpec::zmod(int64_t p, int32_t r) {
  require(is_prime(p), Err::SchemaError, "p must be prime, got " + std::to_string(p));
  require(r >= 1, Err::SchemaError, "truncation exponent must be >= 1");
  double bits = r * std::log2(static_cast<double>(p));
  require(bits < 31, Err::SchemaError, "p^r too large");
  RingSpec s;
  s.kind = RingKind::ZmodPr;
  s.p = p;
  s.f = 0;
  s.r = r;
  return s;
}

RingSpec RingSpec::dual(int64_t p, int32_t f) {
  require(is_prime(p), Err::SchemaError, "p must be prime, got " + std::to_string(p));
  require(f >= 1 && 2 * f <= kMaxCoeffs, Err::SchemaError, "extension degree out of range");
  RingSpec s;
  s.kind = RingKind::Dual;
  s.p = p;
  s.f = f;
  s.r = 0;
  return s;
}

int64_t RingSpec::size() const {
  switch (kind) {
    case RingKind::Fq: return ipow(p, f);
    case RingKind::ZmodPr: return ipow(p, r);
    case RingKind::Dual: return ipow(p, 2 * f);
  }
  return 0;
}

int64_t RingSpec::characteristic() const { return kind == RingKind::ZmodPr ? ipow(p, r) : p; }

RingSpec RingSpec::base_field() const {
  require(kind != RingKind::ZmodPr, Err::WrongKind, "Z/p^r has no base field");
  return RingSpec::fq(p, f);
}

std::string RingSpec::to_string() const {
  std::ostringstream os;
  switch (kind) {
    case RingKind::Fq:
      os << "F_" << ipow(p, f);
      break;
    case RingKind::ZmodPr:
      os << "Z/" << ipow(p, r);
      break;
    case RingKind::Dual:
      os << "F_" << ipow(p, f) << "[eps]";
      break;
  }
  return os.str();
}

int payload_len(const RingSpec& s) {
  switch (s.kind) {
    case RingKind::Fq: return s.f;
    case RingKind::ZmodPr: return 1;
    case RingKind::Dual: return 2 * s.f;
  }
  return 0;
}

RingElem ring_zero(const RingSpec& s) {
  RingElem x;
  x.spec = s;
  return x;
}

RingElem ring_one(const RingSpec& s) {
  RingElem x = ring_zero(s);
  x.c[0] = 1;
  return x;
}

RingElem ring_from_int(const RingSpec& s, int64_t v) {
  RingElem x = ring_zero(s);
  x.c[0] = mod(v, s.characteristic());
  return x;
}

RingElem radd(const RingElem& a, const RingElem& b) {
  check_same_spec(a, b);
  RingElem x = ring_zero(a.spec);
  int64_t m = a.spec.characteristic();
  for (int i = 0; i < payload_len(a.spec); ++i)
    x.c[static_cast<size_t>(i)] = mod(a.c[static_cast<size_t>(i)] + b.c[static_cast<size_t>(i)], m);
  return x;
}

RingElem rsub(const RingElem& a, const RingElem& b) { return radd(a, rneg(b)); }

RingElem rneg(const RingElem& a) {
  RingElem x = ring_zero(a.spec);
  int64_t m = a.spec.characteristic();
  for (int i = 0; i < payload_len(a.spec); ++i)
    x.c[static_cast<size_t>(i)] = mod(-a.c[static_cast<size_t>(i)], m);
  return x;
}

RingElem rmul(const RingElem& a, const RingElem& b) {
  check_same_spec(a, b);
  const RingSpec& s = a.spec;
  RingElem x = ring_zero(s);
  switch (s.kind) {
    case RingKind::ZmodPr: {
      x.c[0] = mod(a.c[0] * b.c[0], s.characteristic());
      break;
    }
    case RingKind::Fq: {
      if (s.f == 1) {
        x.c[0] = mod(a.c[0] * b.c[0], s.p);
        break;
      }
      fq_mul_fast(a.c.data(), b.c.data(), x.c.data(), field_ctx(s.p, s.f));
      break;
    }
    case RingKind::Dual: {
      // (a0 + a1 eps)(b0 + b1 eps) = a0 b0 + (a0 b1 + a1 b0) eps
      if (s.f == 1) {
        x.c[0] = mod(a.c[0] * b.c[0], s.p);
        x.c[1] = mod(a.c[0] * b.c[1] + a.c[1] * b.c[0], s.p);
        break;
      }
      const FieldCtx& ctx = field_ctx(s.p, s.f);
      fq_mul_fast(a.c.data(), b.c.data(), x.c.data(), ctx);
      int64_t t1[kMaxCoeffs], t2[kMaxCoeffs];
      fq_mul_fast(a.c.data(), b.c.data() + s.f, t1, ctx);
      fq_mul_fast(a.c.data() + s.f, b.c.data(), t2, ctx);
      for (int32_t i = 0; i < s.f; ++i)
        x.c[static_cast<size_t>(s.f + i)] = mod(t1[i] + t2[i], s.p);
      break;
    }
  }
  return x;
}

RingElem rinv(const RingElem& a) {
  const RingSpec& s = a.spec;
  RingElem x = ring_zero(s);
  switch (s.kind) {
    case RingKind::ZmodPr: {
      require(a.c[0] % s.p != 0, Err::NonUnit,
              std::to_string(a.c[0]) + " is not a unit in " + s.to_string());
      x.c[0] = [&] {
        int64_t m = s.characteristic(), t = 0, newt = 1, r0 = m, newr = a.c[0];
        while (newr != 0) {
          int64_t q = r0 / newr;
          std::swap(t -= q * newt, newt);
          std::swap(r0 -= q * newr, newr);
        }
        return mod(t, m);
      }();
      break;
    }
    case RingKind::Fq: {
      const Poly& m = cached_defpoly(s.p, s.f);
      store_payload(x, fq_inv_raw(fq_payload(a, s.f), s.p, m));
      break;
    }
    case RingKind::Dual: {
      // (a0 + a1 eps)^-1 = a0^-1 - a0^-2 a1 eps
      RingElem v = dual_value(a);
      require(!is_zero(v), Err::NonUnit, "value part is 0 in " + s.to_string());
      RingElem vi = rinv(v);
      RingElem e = rneg(rmul(rmul(vi, vi), dual_eps(a)));
      return dual_make(vi, e);
    }
  }
  return x;
}

RingElem rpow(const RingElem& a, int64_t e) {
  if (e < 0) return rpow(rinv(a), -e);
  RingElem acc = ring_one(a.spec);
  RingElem base = a;
  while (e > 0) {
    if (e & 1) acc = rmul(acc, base);
    base = rmul(base, base);
    e >>= 1;
  }
  return acc;
}

bool is_zero(const RingElem& a) {
  for (int i = 0; i < payload_len(a.spec); ++i)
    if (a.c[static_cast<size_t>(i)] != 0) return false;
  return true;
}

bool is_one(const RingElem& a) { return a == ring_one(a.spec); }

bool is_unit(const RingElem& a) {
  switch (a.spec.kind) {
    case RingKind::Fq: return !is_zero(a);
    case RingKind::ZmodPr: return a.c[0] % a.spec.p != 0;
    case RingKind::Dual: return !is_zero(dual_value(a));
  }
  return false;
}

RingElem dual_make(const RingElem& value, const RingElem& eps_part) {
  require(value.spec.kind == RingKind::Fq && value.spec == eps_part.spec,
          Err::IncompatibleContexts, "dual parts must share a base field");
  RingElem x = ring_zero(RingSpec::dual(value.spec.p, value.spec.f));
  for (int32_t i = 0; i < value.spec.f; ++i) {
    x.c[static_cast<size_t>(i)] = value.c[static_cast<size_t>(i)];
    x.c[static_cast<size_t>(value.spec.f + i)] = eps_part.c[static_cast<size_t>(i)];
  }
  return x;
}

RingElem dual_value(const RingElem& a) {
  require(a.spec.kind == RingKind::Dual, Err::WrongKind, "not a dual number");
  RingElem v = ring_zero(a.spec.base_field());
  for (int32_t i = 0; i < a.spec.f; ++i) v.c[static_cast<size_t>(i)] = a.c[static_cast<size_t>(i)];
  return v;
}

RingElem dual_eps(const RingElem& a) {
  require(a.spec.kind == RingKind::Dual, Err::WrongKind, "not a dual number");
  RingElem v = ring_zero(a.spec.base_field());
  for (int32_t i = 0; i < a.spec.f; ++i)
    v.c[static_cast<size_t>(i)] = a.c[static_cast<size_t>(a.spec.f + i)];
  return v;
}

RingElem teichmueller(const RingSpec& zmod_spec, const RingElem& residue) {
  require(zmod_spec.kind == RingKind::ZmodPr, Err::WrongKind, "target must be Z/p^r");
  require(residue.spec == RingSpec::fq(zmod_spec.p, 1), Err::WrongKind,
          "residue must lie in F_p");
  require(!is_zero(residue), Err::ZeroResidue, "0 has no Teichmueller lift");
  RingElem a = ring_from_int(zmod_spec, residue.c[0]);
  for (int iter = 0; iter < 200; ++iter) {
    RingElem b = rpow(a, zmod_spec.p);
    if (b == a) return a;
    a = b;
  }
  fail(Err::Internal, "Teichmueller iteration failed to stabilize");
}

RingElem embed_extension(const RingElem& x, int32_t k) {
  require(x.spec.kind == RingKind::Fq, Err::WrongKind, "embedding is defined on F_q");
  require(k >= 1 && x.spec.f * k <= kMaxCoeffs, Err::SchemaError, "extension degree out of range");
  RingSpec big = RingSpec::fq(x.spec.p, x.spec.f * k);
  if (k == 1) return x;
  const auto& powers = cached_embed_powers(x.spec.p, x.spec.f, k);
  Poly acc;
  for (int32_t i = 0; i < x.spec.f; ++i) {
    if (x.c[static_cast<size_t>(i)] == 0) continue;
    acc = padd(acc, pscale(powers[static_cast<size_t>(i)], x.c[static_cast<size_t>(i)], x.spec.p),
               x.spec.p);
  }
  RingElem y = ring_zero(big);
  store_payload(y, acc);
  return y;
}

RingElem zmod_residue(const RingElem& x) {
  require(x.spec.kind == RingKind::ZmodPr, Err::WrongKind, "not a Z/p^r element");
  return ring_from_int(RingSpec::fq(x.spec.p, 1), x.c[0]);
}

int64_t ring_encode(const RingElem& x) {
  int64_t base = x.spec.kind == RingKind::ZmodPr ? x.spec.characteristic() : x.spec.p;
  int64_t enc = 0;
  for (int i = payload_len(x.spec) - 1; i >= 0; --i) enc = enc * base + x.c[static_cast<size_t>(i)];
  return enc;
}

RingElem ring_decode(const RingSpec& s, int64_t code) {
  int64_t base = s.kind == RingKind::ZmodPr ? s.characteristic() : s.p;
  RingElem x = ring_zero(s);
  for (int i = 0; i < payload_len(s); ++i) {
    x.c[static_cast<size_t>(i)] = code % base;
    code /= base;
  }
  return x;
}

std::vector<RingElem> enumerate_ring(const RingSpec& s) {
  std::vector<RingElem> out;
  out.reserve(static_cast<size_t>(s.size()));
  for (int64_t i = 0; i < s.size(); ++i) out.push_back(ring_decode(s, i));
  return out;
}

std::vector<int64_t> defining_poly(int64_t p, int32_t f) { return cached_defpoly(p, f); }

}  // namespace pckit
