#include "pckit/reconstruct.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <random>
#include <thread>

namespace pckit {

namespace {

int64_t ipow64(int64_t b, int32_t e) {
  int64_t v = 1;
  for (int32_t i = 0; i < e; ++i) v *= b;
  return v;
}

void check_comparable(const Representation& a, const Representation& b) {
  require(a.group->same_table(*b.group), Err::IncompatibleContexts,
          "representations of different groups");
  require(a.kind == b.kind, Err::IncompatibleContexts, "representations of different kinds");
  require(a.ring == b.ring, Err::IncompatibleContexts, "representations over different rings");
}

}  // namespace

ConjugacyResult brute_conjugacy(const Representation& a, const Representation& b,
                                int32_t ext_degree, int64_t search_cap, int32_t jobs) {
  check_comparable(a, b);
  require(a.ring.is_field(), Err::WrongKind, "conjugacy search needs field coefficients");
  require(ext_degree >= 1 && ext_degree <= 3, Err::SchemaError, "extension degree must be 1..3");
  int d = a.kind.d();
  const auto& gens = a.group->generators();

  for (int32_t k = 1; k <= ext_degree; ++k) {
    if (a.ring.f * k > kMaxCoeffs) break;
    RingSpec rk = RingSpec::fq(a.ring.p, a.ring.f * k);
    std::vector<Mat> agens, bgens;
    for (int g : gens) {
      agens.push_back(k == 1 ? a.at(g) : mat_embed_extension(a.at(g), k));
      bgens.push_back(k == 1 ? b.at(g) : mat_embed_extension(b.at(g), k));
    }
    // {g : g A = B g for all generator pairs (A, B)}, as a linear system in
    // the d^2 entries of g
    DenseMat sys(rk, static_cast<int>(gens.size()) * d * d, d * d);
    for (size_t gi = 0; gi < gens.size(); ++gi) {
      const Mat& A = agens[gi];
      const Mat& B = bgens[gi];
      for (int i = 0; i < d; ++i)
        for (int j = 0; j < d; ++j) {
          int row = static_cast<int>(gi) * d * d + i * d + j;
          for (int l = 0; l < d; ++l) {
            sys.at(row, i * d + l) = radd(sys.at(row, i * d + l), A.at(l, j));
            sys.at(row, l * d + j) = rsub(sys.at(row, l * d + j), B.at(i, l));
          }
        }
    }
    auto basis = kernel_basis(sys);
    int w = static_cast<int>(basis.size());
    if (w == 0) continue;
    int64_t qk = rk.size();
    double total = 1;
    for (int i = 0; i < w; ++i) total *= static_cast<double>(qk);
    require(total <= static_cast<double>(search_cap), Err::SearchSpaceTooLarge,
            "intertwiner space of dimension " + std::to_string(w) + " over " + rk.to_string() +
                " exceeds the search cap");
    int64_t count = static_cast<int64_t>(total);

    auto candidate_at = [&](int64_t code) {
      Mat g(rk, d);
      int64_t c = code;
      for (int i = 0; i < w; ++i) {
        int64_t digit = c % qk;
        c /= qk;
        if (digit == 0) continue;
        RingElem coef = ring_decode(rk, digit);
        for (int j = 0; j < d * d; ++j)
          g.e[static_cast<size_t>(j)] =
              radd(g.e[static_cast<size_t>(j)], rmul(coef, basis[static_cast<size_t>(i)][static_cast<size_t>(j)]));
      }
      return g;
    };

    int nthreads = std::max(1, std::min<int>(jobs, 16));
    std::vector<int64_t> local_found(static_cast<size_t>(nthreads), -1);
    auto scan = [&](int t) {
      int64_t lo = 1 + (count - 1) * t / nthreads;
      int64_t hi = 1 + (count - 1) * (t + 1) / nthreads;
      for (int64_t code = lo; code < hi; ++code) {
        Mat g = candidate_at(code);
        if (!mat_invertible(g)) continue;
        if (!identity_component_member(a.kind, g)) continue;
        local_found[static_cast<size_t>(t)] = code;
        return;
      }
    };
    if (nthreads == 1) {
      scan(0);
    } else {
      std::vector<std::thread> threads;
      for (int t = 0; t < nthreads; ++t) threads.emplace_back(scan, t);
      for (auto& th : threads) th.join();
    }
    int64_t best = -1;
    for (int64_t c : local_found)
      if (c >= 0 && (best < 0 || c < best)) best = c;
    if (best >= 0) {
      Mat g = candidate_at(best);
      Mat ginv = mat_inverse(g);
      for (int e = 0; e < a.group->order(); ++e) {
        Mat ae = k == 1 ? a.at(e) : mat_embed_extension(a.at(e), k);
        Mat be = k == 1 ? b.at(e) : mat_embed_extension(b.at(e), k);
        require(mat_mul(mat_mul(g, ae), ginv) == be, Err::Internal,
                "conjugator fails outside the generating set");
      }
      return {true, g, k};
    }
  }
  return {false, Mat{}, ext_degree};
}

namespace {

// reduce v against an RREF basis (rows with unit pivots); true iff v lies in
// the row span
bool in_rref_span(std::vector<RingElem> v, const std::vector<std::vector<RingElem>>& rows,
                  const std::vector<int>& pivots) {
  for (size_t r = 0; r < rows.size(); ++r) {
    const RingElem c = v[static_cast<size_t>(pivots[r])];  // copy: v is modified below
    if (is_zero(c)) continue;
    for (size_t j = 0; j < v.size(); ++j)
      v[j] = rsub(v[j], rmul(c, rows[r][j]));
  }
  for (const auto& x : v)
    if (!is_zero(x)) return false;
  return true;
}

std::vector<RingElem> apply_mat(const Mat& a, const std::vector<RingElem>& v) {
  std::vector<RingElem> out(static_cast<size_t>(a.d), ring_zero(a.ring));
  for (int i = 0; i < a.d; ++i)
    for (int j = 0; j < a.d; ++j)
      out[static_cast<size_t>(i)] =
          radd(out[static_cast<size_t>(i)], rmul(a.at(i, j), v[static_cast<size_t>(j)]));
  return out;
}

}  // namespace

std::vector<std::vector<std::vector<RingElem>>> invariant_subspaces(const Representation& rho,
                                                                    int dim) {
  require(rho.ring.is_field(), Err::WrongKind, "subspace search needs field coefficients");
  int d = rho.dim();
  require(dim >= 1 && dim <= d, Err::SchemaError, "dimension out of range");
  std::vector<Mat> gens;
  for (int g : rho.group->generators()) gens.push_back(rho.at(g));

  std::vector<std::vector<std::vector<RingElem>>> out;
  // choose pivot columns
  std::vector<int> pivots(static_cast<size_t>(dim));
  std::function<void(int, int)> choose = [&](int start, int idx) {
    if (idx == dim) {
      // free positions: (r, j) with j > pivots[r], j not a pivot
      std::vector<std::pair<int, int>> free_pos;
      for (int r = 0; r < dim; ++r)
        for (int j = pivots[static_cast<size_t>(r)] + 1; j < d; ++j) {
          bool is_piv = false;
          for (int s = 0; s < dim; ++s)
            if (pivots[static_cast<size_t>(s)] == j) is_piv = true;
          if (!is_piv) free_pos.push_back({r, j});
        }
      int64_t q = rho.ring.size();
      int64_t count = ipow64(q, static_cast<int32_t>(free_pos.size()));
      for (int64_t code = 0; code < count; ++code) {
        std::vector<std::vector<RingElem>> rows(
            static_cast<size_t>(dim), std::vector<RingElem>(static_cast<size_t>(d), ring_zero(rho.ring)));
        for (int r = 0; r < dim; ++r)
          rows[static_cast<size_t>(r)][static_cast<size_t>(pivots[static_cast<size_t>(r)])] =
              ring_one(rho.ring);
        int64_t c = code;
        for (const auto& [r, j] : free_pos) {
          rows[static_cast<size_t>(r)][static_cast<size_t>(j)] = ring_decode(rho.ring, c % q);
          c /= q;
        }
        bool invariant = true;
        for (const Mat& A : gens) {
          for (int r = 0; r < dim && invariant; ++r)
            if (!in_rref_span(apply_mat(A, rows[static_cast<size_t>(r)]), rows, pivots))
              invariant = false;
          if (!invariant) break;
        }
        if (invariant) out.push_back(rows);
      }
      return;
    }
    for (int c = start; c < d; ++c) {
      pivots[static_cast<size_t>(idx)] = c;
      choose(c + 1, idx + 1);
    }
  };
  choose(0, 0);
  return out;
}

namespace {

// representation restricted to an invariant subspace, in the given basis
Representation sub_rep(const Representation& rho, const std::vector<std::vector<RingElem>>& basis,
                       const GroupKind& kind) {
  int d = rho.dim();
  int k = static_cast<int>(basis.size());
  DenseMat bmat(rho.ring, d, k);
  for (int j = 0; j < k; ++j)
    for (int i = 0; i < d; ++i) bmat.at(i, j) = basis[static_cast<size_t>(j)][static_cast<size_t>(i)];
  std::vector<Mat> gen_images;
  for (int g : rho.group->generators()) {
    Mat s(rho.ring, k);
    for (int j = 0; j < k; ++j) {
      auto img = apply_mat(rho.at(g), basis[static_cast<size_t>(j)]);
      auto coords = solve_linear(bmat, img);
      require(coords.has_value(), Err::Internal, "subspace is not invariant");
      for (int i = 0; i < k; ++i) s.at(i, j) = (*coords)[static_cast<size_t>(i)];
    }
    gen_images.push_back(std::move(s));
  }
  return rep_from_generator_images(rho.group, kind, rho.ring, gen_images);
}

// completes the basis columns to a full invertible matrix using standard
// vectors, then conjugates; returns (sub_block, quotient_block) images
std::pair<Representation, Representation> split_along(const Representation& rho,
                                                      const std::vector<std::vector<RingElem>>& basis) {
  int d = rho.dim();
  int k = static_cast<int>(basis.size());
  // P columns: basis vectors then greedy standard completion
  std::vector<std::vector<RingElem>> cols = basis;
  for (int i = 0; i < d && static_cast<int>(cols.size()) < d; ++i) {
    std::vector<RingElem> e(static_cast<size_t>(d), ring_zero(rho.ring));
    e[static_cast<size_t>(i)] = ring_one(rho.ring);
    cols.push_back(e);
    DenseMat test(rho.ring, static_cast<int>(cols.size()), d);
    for (size_t r = 0; r < cols.size(); ++r)
      for (int j = 0; j < d; ++j) test.at(static_cast<int>(r), j) = cols[r][static_cast<size_t>(j)];
    if (rank(test) < static_cast<int>(cols.size())) cols.pop_back();
  }
  require(static_cast<int>(cols.size()) == d, Err::Internal, "basis completion failed");
  Mat p(rho.ring, d);
  for (int j = 0; j < d; ++j)
    for (int i = 0; i < d; ++i) p.at(i, j) = cols[static_cast<size_t>(j)][static_cast<size_t>(i)];
  Mat pinv = mat_inverse(p);

  std::vector<Mat> sub_images, quot_images;
  for (int e = 0; e < rho.group->order(); ++e) {
    Mat c = mat_mul(mat_mul(pinv, rho.at(e)), p);
    Mat s(rho.ring, k), q(rho.ring, d - k);
    for (int i = 0; i < k; ++i)
      for (int j = 0; j < k; ++j) s.at(i, j) = c.at(i, j);
    for (int i = 0; i < d - k; ++i)
      for (int j = 0; j < d - k; ++j) q.at(i, j) = c.at(k + i, k + j);
    for (int i = 0; i < d - k; ++i)
      for (int j = 0; j < k; ++j)
        require(is_zero(c.at(k + i, j)), Err::Internal, "subspace is not invariant");
    sub_images.push_back(std::move(s));
    quot_images.push_back(std::move(q));
  }
  auto sub = rep_from_images(rho.group, GroupKind::make(Flavor::GL, k), rho.ring,
                             std::move(sub_images));
  auto quot = rep_from_images(rho.group, GroupKind::make(Flavor::GL, d - k), rho.ring,
                              std::move(quot_images));
  return {std::move(sub), std::move(quot)};
}

void check_jh_budget(const Representation& rho) {
  require(rho.ring.is_field(), Err::WrongKind, "decomposition needs field coefficients");
  require(rho.dim() <= 4 && rho.ring.size() <= 9, Err::BudgetExceeded,
          "subspace enumeration budget is d <= 4, q <= 9");
}

Representation as_gl(const Representation& rho) {
  if (rho.kind.flavor == Flavor::GL) return rho;
  return rep_from_images(rho.group, GroupKind::make(Flavor::GL, rho.dim()), rho.ring,
                         rho.images);
}

}  // namespace

bool is_irreducible(const Representation& rho) {
  for (int k = 1; k < rho.dim(); ++k)
    if (!invariant_subspaces(rho, k).empty()) return false;
  return true;
}

std::vector<Representation> jordan_holder(const Representation& rho, uint64_t seed) {
  check_jh_budget(rho);
  int d = rho.dim();
  std::vector<std::vector<std::vector<RingElem>>> candidates;
  for (int k = 1; k < d; ++k) {
    auto subs = invariant_subspaces(rho, k);
    candidates.insert(candidates.end(), subs.begin(), subs.end());
  }
  if (candidates.empty()) return {as_gl(rho)};
  size_t pick = 0;
  if (seed != 0) {
    std::mt19937_64 rng(seed);
    pick = static_cast<size_t>(rng() % candidates.size());
  }
  auto [sub, quot] = split_along(rho, candidates[pick]);
  uint64_t s1 = seed == 0 ? 0 : seed * 6364136223846793005ULL + 1442695040888963407ULL;
  uint64_t s2 = seed == 0 ? 0 : s1 * 6364136223846793005ULL + 1442695040888963407ULL;
  auto left = jordan_holder(sub, s1);
  auto right = jordan_holder(quot, s2);
  left.insert(left.end(), right.begin(), right.end());
  return left;
}

Representation semisimplify(const Representation& rho, uint64_t seed) {
  auto factors = jordan_holder(rho, seed);
  std::stable_sort(factors.begin(), factors.end(),
                   [](const Representation& x, const Representation& y) {
                     if (x.dim() != y.dim()) return x.dim() < y.dim();
                     return fingerprint_key(from_rep(x)) < fingerprint_key(from_rep(y));
                   });
  Representation acc = factors[0];
  for (size_t i = 1; i < factors.size(); ++i) acc = direct_sum_rep(acc, factors[i]);
  return acc;
}

bool is_completely_reducible(const Representation& rho) {
  switch (rho.kind.flavor) {
    case Flavor::GL:
    case Flavor::SL: {
      Representation gl = as_gl(rho);
      return brute_conjugacy(gl, semisimplify(gl), 1).found;
    }
    case Flavor::Sp: {
      require(rho.ring.p > 2, Err::UnsupportedFlavor,
              "symplectic complete reducibility needs p > 2");
      return is_completely_reducible(as_gl(rho));
    }
    default:
      fail(Err::UnsupportedFlavor,
           "complete reducibility is implemented for GL, SL and Sp flavors");
  }
}

namespace {

using Basis = std::vector<std::vector<RingElem>>;

RingElem form_value(const Mat& g, const std::vector<RingElem>& u, const std::vector<RingElem>& v) {
  RingElem acc = ring_zero(g.ring);
  for (int i = 0; i < g.d; ++i)
    for (int j = 0; j < g.d; ++j)
      acc = radd(acc, rmul(u[static_cast<size_t>(i)], rmul(g.at(i, j), v[static_cast<size_t>(j)])));
  return acc;
}

Mat gram_on(const Mat& g, const Basis& basis) {
  Mat out(g.ring, static_cast<int>(basis.size()));
  for (size_t i = 0; i < basis.size(); ++i)
    for (size_t j = 0; j < basis.size(); ++j)
      out.at(static_cast<int>(i), static_cast<int>(j)) = form_value(g, basis[i], basis[j]);
  return out;
}

std::vector<Basis> irreducible_invariant_subspaces(const Representation& rho) {
  std::vector<Basis> out;
  for (int k = 1; k <= rho.dim(); ++k) {
    if (k == rho.dim()) break;
    for (auto& u : invariant_subspaces(rho, k)) {
      auto restricted = sub_rep(rho, u, GroupKind::make(Flavor::GL, k));
      if (is_irreducible(restricted)) out.push_back(u);
    }
  }
  return out;
}

Basis orthocomplement(const Mat& g, const Basis& basis) {
  DenseMat sys(g.ring, static_cast<int>(basis.size()), g.d);
  for (size_t r = 0; r < basis.size(); ++r)
    for (int j = 0; j < g.d; ++j) {
      RingElem acc = ring_zero(g.ring);
      for (int i = 0; i < g.d; ++i)
        acc = radd(acc, rmul(basis[r][static_cast<size_t>(i)], g.at(i, j)));
      sys.at(static_cast<int>(r), j) = acc;
    }
  return kernel_basis(sys);
}

// symplectic basis (e_1..e_a, f_1..f_a) of a nondegenerate alternating form
// on the span of the given basis
Basis symplectic_basis(const Mat& g, Basis pool) {
  std::vector<std::vector<RingElem>> es, fs;
  while (!pool.empty()) {
    // drop dependent / zero vectors from the pool
    std::vector<std::vector<RingElem>> clean;
    for (auto& v : pool) {
      DenseMat t2(g.ring, static_cast<int>(clean.size()) + 1, g.d);
      for (size_t r = 0; r < clean.size(); ++r)
        for (int j = 0; j < g.d; ++j) t2.at(static_cast<int>(r), j) = clean[r][static_cast<size_t>(j)];
      for (int j = 0; j < g.d; ++j) t2.at(static_cast<int>(clean.size()), j) = v[static_cast<size_t>(j)];
      if (rank(t2) == static_cast<int>(clean.size()) + 1) clean.push_back(v);
    }
    pool = std::move(clean);
    if (pool.empty()) break;
    auto e = pool[0];
    // find a partner with nonzero pairing
    int partner = -1;
    for (size_t i = 1; i < pool.size(); ++i)
      if (!is_zero(form_value(g, e, pool[i]))) {
        partner = static_cast<int>(i);
        break;
      }
    require(partner >= 0, Err::Internal, "form is degenerate on the summand");
    auto f = pool[static_cast<size_t>(partner)];
    RingElem scale = rinv(form_value(g, e, f));
    for (auto& x : f) x = rmul(scale, x);
    // project the rest into the orthogonal complement of span(e, f)
    std::vector<std::vector<RingElem>> rest;
    for (size_t i = 1; i < pool.size(); ++i) {
      if (static_cast<int>(i) == partner) continue;
      auto v = pool[i];
      RingElem cf = form_value(g, v, f);   // coefficient of e
      RingElem ce = form_value(g, v, e);   // coefficient of f (with sign)
      for (size_t j = 0; j < v.size(); ++j) {
        v[j] = rsub(v[j], rmul(cf, e[j]));
        v[j] = radd(v[j], rmul(ce, f[j]));
      }
      rest.push_back(std::move(v));
    }
    es.push_back(std::move(e));
    fs.push_back(std::move(f));
    pool = std::move(rest);
  }
  Basis out = es;
  out.insert(out.end(), fs.begin(), fs.end());
  return out;
}

void decompose_rec(const Representation& t, const Mat& g,
                   std::vector<SymplecticSummand>* out) {
  int w = t.dim();
  if (w == 0) return;
  auto irreducibles = irreducible_invariant_subspaces(t);
  if (irreducibles.empty()) {
    // t itself is irreducible and the form is nondegenerate
    Basis full;
    for (int i = 0; i < w; ++i) {
      std::vector<RingElem> e(static_cast<size_t>(w), ring_zero(t.ring));
      e[static_cast<size_t>(i)] = ring_one(t.ring);
      full.push_back(std::move(e));
    }
    Basis symp = symplectic_basis(g, full);
    auto sp = sub_rep(t, symp, GroupKind::make(Flavor::Sp, w / 2));
    out->push_back({SummandType::IrreducibleSymplectic, std::move(sp), std::nullopt});
    return;
  }
  // a GL-irreducible with nondegenerate restricted form, if one exists
  for (const Basis& u : irreducibles) {
    Mat gu = gram_on(g, u);
    if (!is_unit(mat_det(gu))) continue;
    Basis symp = symplectic_basis(g, u);
    auto sp = sub_rep(t, symp, GroupKind::make(Flavor::Sp, static_cast<int32_t>(u.size()) / 2));
    out->push_back({SummandType::IrreducibleSymplectic, std::move(sp), std::nullopt});
    Basis comp = orthocomplement(g, u);
    if (!comp.empty()) {
      auto rest = sub_rep(t, comp, GroupKind::make(Flavor::GL, static_cast<int32_t>(comp.size())));
      decompose_rec(rest, gram_on(g, comp), out);
    }
    return;
  }
  // all irreducibles are totally isotropic: find a dual pair W, W'
  const Basis& wbasis = irreducibles[0];
  size_t k = wbasis.size();
  for (size_t ci = 1; ci < irreducibles.size(); ++ci) {
    const Basis& ubasis = irreducibles[ci];
    if (ubasis.size() != k) continue;
    Mat pairing(t.ring, static_cast<int>(k));
    for (size_t i = 0; i < k; ++i)
      for (size_t j = 0; j < k; ++j)
        pairing.at(static_cast<int>(i), static_cast<int>(j)) = form_value(g, wbasis[i], ubasis[j]);
    if (!is_unit(mat_det(pairing))) continue;
    // dual basis w'_j = sum_l u_l (P^{-1})_{lj}
    Mat pinv = mat_inverse(pairing);
    Basis dual(k, std::vector<RingElem>(static_cast<size_t>(t.dim()), ring_zero(t.ring)));
    for (size_t j = 0; j < k; ++j)
      for (size_t l = 0; l < k; ++l)
        for (int x = 0; x < t.dim(); ++x)
          dual[j][static_cast<size_t>(x)] =
              radd(dual[j][static_cast<size_t>(x)],
                   rmul(pinv.at(static_cast<int>(l), static_cast<int>(j)), ubasis[l][static_cast<size_t>(x)]));
    Basis pair_basis = wbasis;
    pair_basis.insert(pair_basis.end(), dual.begin(), dual.end());
    Mat gram = gram_on(g, pair_basis);
    require(gram == symplectic_J(t.ring, static_cast<int32_t>(k)), Err::Internal,
            "pair basis does not carry the hyperbolic form");
    auto sp = sub_rep(t, pair_basis, GroupKind::make(Flavor::Sp, static_cast<int32_t>(k)));
    auto wrep = sub_rep(t, wbasis, GroupKind::make(Flavor::GL, static_cast<int32_t>(k)));
    out->push_back({SummandType::PairType, std::move(sp), std::move(wrep)});
    Basis comp = orthocomplement(g, pair_basis);
    if (!comp.empty()) {
      auto rest = sub_rep(t, comp, GroupKind::make(Flavor::GL, static_cast<int32_t>(comp.size())));
      decompose_rec(rest, gram_on(g, comp), out);
    }
    return;
  }
  fail(Err::Internal, "no isotropic dual partner found for an isotropic irreducible");
}

}  // namespace

std::vector<SymplecticSummand> symplectic_decompose(const Representation& rho) {
  require(rho.kind.flavor == Flavor::Sp, Err::WrongKind, "input must be symplectic");
  require(rho.ring.p > 2, Err::CharTwo, "symplectic decomposition needs p > 2");
  require(is_completely_reducible(rho), Err::NotSemisimple,
          "symplectic decomposition needs a semisimple input");
  std::vector<SymplecticSummand> out;
  decompose_rec(as_gl(rho), symplectic_J(rho.ring, rho.kind.n), &out);
  return out;
}

Representation reassemble_summands(const std::vector<SymplecticSummand>& summands) {
  require(!summands.empty(), Err::SchemaError, "nothing to reassemble");
  Representation acc = summands[0].sp_rep;
  for (size_t i = 1; i < summands.size(); ++i)
    acc = sp_direct_sum_rep(acc, summands[i].sp_rep);
  return acc;
}

}  // namespace pckit
