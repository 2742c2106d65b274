#include "pckit/rawtable.hpp"

#include <sstream>

namespace pckit {

int64_t tuple_code(const GroupPtr& g, const std::vector<int>& tuple) {
  int64_t code = 0;
  for (auto it = tuple.rbegin(); it != tuple.rend(); ++it) code = code * g->order() + *it;
  return code;
}

int RawTable::index_of(int32_t m, const InvariantSymbol& sym) const {
  const auto& map = sym_index[static_cast<size_t>(m - 1)];
  auto it = map.find(invariant_code(sym));
  require(it != map.end(), Err::Internal,
          "table has no symbol " + invariant_to_string(sym) + " at arity " + std::to_string(m));
  return it->second;
}

size_t RawTable::entry_count() const {
  size_t n = 0;
  for (const auto& v : values) n += v.size();
  return n;
}

namespace {

std::vector<int> decode_tuple(const GroupPtr& g, int32_t m, int64_t code) {
  std::vector<int> t(static_cast<size_t>(m));
  for (int32_t i = 0; i < m; ++i) {
    t[static_cast<size_t>(i)] = static_cast<int>(code % g->order());
    code /= g->order();
  }
  return t;
}

struct EvalCache {
  const Representation* rho;
  std::vector<Mat> star;  // form-twisted transpose per element

  explicit EvalCache(const Representation& r) : rho(&r) {
    if (r.kind.is_symplectic())
      for (const Mat& m : r.images) star.push_back(symplectic_transpose(m, r.kind.n));
    else if (r.kind.is_orthogonal())
      for (const Mat& m : r.images) star.push_back(mat_transpose(m));
  }

  const Mat& lookup(const DecLetter& l, const std::vector<int>& tuple) const {
    int e = tuple[static_cast<size_t>(l.slot - 1)];
    switch (l.dec) {
      case Decoration::Plain: return rho->at(e);
      case Decoration::Inverse: return rho->at(rho->group->inv(e));
      case Decoration::Star: return star[static_cast<size_t>(e)];
    }
    return rho->at(e);
  }
};

}  // namespace

RawTable raw_table_from_rep(const Representation& rho, int32_t M, int32_t L) {
  require(M >= 1 && M <= 3 && L >= 1 && L <= 4, Err::BudgetExceeded,
          "raw tables support M <= 3, L <= 4");
  RawTable t;
  t.group = rho.group;
  t.kind = rho.kind;
  t.ring = rho.ring;
  t.M = M;
  t.L = L;
  EvalCache cache(rho);
  int N = rho.group->order();
  std::vector<RingElem> sims;
  if (rho.kind.has_similitude())
    for (const Mat& m : rho.images) sims.push_back(similitude(rho.kind, m));
  std::vector<RingElem> detinvs;
  for (const Mat& m : rho.images) detinvs.push_back(rinv(mat_det(m)));

  for (int32_t m = 1; m <= M; ++m) {
    t.symbols.push_back(all_word_symbols(rho.kind, m, L));
    const auto& syms = t.symbols.back();
    std::unordered_map<uint64_t, int> index;
    index.reserve(syms.size() * 2);
    for (size_t i = 0; i < syms.size(); ++i)
      index.emplace(invariant_code(syms[i]), static_cast<int>(i));
    t.sym_index.push_back(std::move(index));
    int64_t tuples = 1;
    for (int32_t i = 0; i < m; ++i) tuples *= N;
    t.tuples.push_back(tuples);
    std::vector<RingElem> vals(syms.size() * static_cast<size_t>(tuples), ring_zero(rho.ring));

    const auto words = all_decorated_words(rho.kind, m, L);
    const int dn = rho.kind.d();
    std::vector<RingElem> siminvs;
    if (rho.kind.has_similitude())
      for (const RingElem& s : sims) siminvs.push_back(rinv(s));

    for (int64_t tc = 0; tc < tuples; ++tc) {
      std::vector<int> tuple = decode_tuple(t.group, m, tc);
      // walk the word tree with a product stack: each word extends the
      // longest shared prefix of its predecessor by a single letter
      std::vector<Mat> prod_stack = {mat_identity(rho.ring, dn)};
      std::vector<DecLetter> letters;
      for (size_t wi = 0; wi < words.size(); ++wi) {
        const auto& w = words[wi];
        size_t cp = 0;
        while (cp < letters.size() && cp < w.size() && letters[cp] == w[cp]) ++cp;
        letters.resize(cp);
        prod_stack.resize(cp + 1);
        while (letters.size() < w.size()) {
          const DecLetter& l = w[letters.size()];
          prod_stack.push_back(mat_mul(prod_stack.back(), cache.lookup(l, tuple)));
          letters.push_back(l);
        }
        auto sigmas = char_poly_sigmas(prod_stack.back());
        for (int32_t i = 0; i < dn; ++i)
          vals[(wi * static_cast<size_t>(dn) + static_cast<size_t>(i)) *
                   static_cast<size_t>(tuples) +
               static_cast<size_t>(tc)] = sigmas[static_cast<size_t>(i)];
      }
      // det^{-1} / sim^{+-1} tail symbols
      for (size_t si = words.size() * static_cast<size_t>(dn); si < syms.size(); ++si) {
        const InvariantSymbol& sym = syms[si];
        int e = tuple[static_cast<size_t>(sym.slot - 1)];
        RingElem v = ring_zero(rho.ring);
        switch (sym.kind) {
          case InvKind::DetInverse: v = detinvs[static_cast<size_t>(e)]; break;
          case InvKind::Similitude: v = sims[static_cast<size_t>(e)]; break;
          case InvKind::SimilitudeInverse: v = siminvs[static_cast<size_t>(e)]; break;
          case InvKind::SigmaOfWord:
            fail(Err::Internal, "word symbol after the word block");
        }
        vals[si * static_cast<size_t>(tuples) + static_cast<size_t>(tc)] = v;
      }
    }
    // the symbol layout must match the word walk
    for (size_t wi = 0; wi < words.size(); ++wi)
      require(syms[wi * static_cast<size_t>(dn)].word == words[wi], Err::Internal,
              "symbol enumeration out of sync with the word enumeration");
    t.values.push_back(std::move(vals));
  }
  return t;
}

const RingElem& table_value(const RawTable& t, const InvariantSymbol& sym,
                            const std::vector<int>& tuple) {
  return t.at(sym.m, t.index_of(sym.m, sym), tuple_code(t.group, tuple));
}

std::vector<TableEntryRef> all_entries(const RawTable& t) {
  std::vector<TableEntryRef> out;
  out.reserve(t.entry_count());
  for (int32_t m = 1; m <= t.M; ++m)
    for (size_t si = 0; si < t.symbols[static_cast<size_t>(m - 1)].size(); ++si)
      for (int64_t tc = 0; tc < t.tuples[static_cast<size_t>(m - 1)]; ++tc)
        out.push_back({m, static_cast<int>(si), tc});
  return out;
}

namespace {

InvariantSymbol relabel(const InvariantSymbol& f, const std::vector<int32_t>& zeta, int32_t n) {
  InvariantSymbol g = f;
  g.m = n;
  if (f.kind == InvKind::SigmaOfWord) {
    for (DecLetter& l : g.word) l.slot = zeta[static_cast<size_t>(l.slot - 1)];
  } else {
    g.slot = zeta[static_cast<size_t>(f.slot - 1)];
  }
  return g;
}

// hat substitution: slot m expands to (slot m) * (slot m+1)
bool hat_symbol(const InvariantSymbol& f, int32_t L, InvariantSymbol* out) {
  if (f.kind != InvKind::SigmaOfWord) return false;
  InvariantSymbol g = f;
  g.m = f.m + 1;
  g.word.clear();
  for (const DecLetter& l : f.word) {
    if (l.slot != f.m) {
      g.word.push_back(l);
      continue;
    }
    switch (l.dec) {
      case Decoration::Plain:
        g.word.push_back({f.m, Decoration::Plain});
        g.word.push_back({f.m + 1, Decoration::Plain});
        break;
      case Decoration::Inverse:
        g.word.push_back({f.m + 1, Decoration::Inverse});
        g.word.push_back({f.m, Decoration::Inverse});
        break;
      case Decoration::Star:
        g.word.push_back({f.m + 1, Decoration::Star});
        g.word.push_back({f.m, Decoration::Star});
        break;
    }
  }
  if (static_cast<int32_t>(g.word.size()) > L) return false;
  *out = g;
  return true;
}

std::string tuple_str(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

}  // namespace

AxiomReport verify_axioms(const RawTable& t) {
  int N = t.group->order();
  // condition (1): index substitutions
  for (int32_t m = 1; m <= t.M; ++m) {
    const auto& fsyms = t.symbols[static_cast<size_t>(m - 1)];
    for (int32_t n = 1; n <= t.M; ++n) {
      int64_t tuples = t.tuples[static_cast<size_t>(n - 1)];
      int64_t zeta_count = 1;
      for (int32_t i = 0; i < m; ++i) zeta_count *= n;
      for (int64_t zc = 0; zc < zeta_count; ++zc) {
        std::vector<int32_t> zeta(static_cast<size_t>(m));
        int64_t z = zc;
        for (int32_t i = 0; i < m; ++i) {
          zeta[static_cast<size_t>(i)] = static_cast<int32_t>(z % n) + 1;
          z /= n;
        }
        // pulled-back tuple codes, shared across all symbols of arity m
        std::vector<int64_t> pulled(static_cast<size_t>(tuples));
        for (int64_t tc = 0; tc < tuples; ++tc) {
          std::vector<int> gamma = decode_tuple(t.group, n, tc);
          int64_t code = 0;
          for (int32_t i = m - 1; i >= 0; --i)
            code = code * N + gamma[static_cast<size_t>(zeta[static_cast<size_t>(i)] - 1)];
          pulled[static_cast<size_t>(tc)] = code;
        }
        for (size_t fi = 0; fi < fsyms.size(); ++fi) {
          const InvariantSymbol& f = fsyms[fi];
          int fz_idx = t.index_of(n, relabel(f, zeta, n));
          const RingElem* lhs_base =
              &t.at(n, fz_idx, 0);
          const RingElem* rhs_base = &t.at(m, static_cast<int>(fi), 0);
          for (int64_t tc = 0; tc < tuples; ++tc) {
            if (!(lhs_base[tc] == rhs_base[pulled[static_cast<size_t>(tc)]])) {
              AxiomReport r;
              r.pass = false;
              r.condition = "(1)";
              r.invariant = invariant_to_string(f);
              r.tuple = decode_tuple(t.group, n, tc);
              std::ostringstream os;
              os << "zeta=[";
              for (int32_t i = 0; i < m; ++i)
                os << (i ? "," : "") << zeta[static_cast<size_t>(i)];
              os << "] relabeled " << invariant_to_string(relabel(f, zeta, n)) << " at "
                 << tuple_str(r.tuple) << " disagrees with " << invariant_to_string(f) << " at "
                 << tuple_str(decode_tuple(t.group, m, pulled[static_cast<size_t>(tc)]));
              r.detail = os.str();
              return r;
            }
          }
        }
      }
    }
  }
  // condition (2): multiply the last two arguments
  for (int32_t m = 1; m < t.M; ++m) {
    const auto& fsyms = t.symbols[static_cast<size_t>(m - 1)];
    int64_t tuples = t.tuples[static_cast<size_t>(m)];  // arity m+1
    // folded tuple codes (gamma_1, ..., gamma_m * gamma_{m+1})
    std::vector<int64_t> folded(static_cast<size_t>(tuples));
    for (int64_t tc = 0; tc < tuples; ++tc) {
      std::vector<int> gamma = decode_tuple(t.group, m + 1, tc);
      std::vector<int> f(gamma.begin(), gamma.end() - 1);
      f.back() = t.group->mul(gamma[static_cast<size_t>(m - 1)], gamma[static_cast<size_t>(m)]);
      folded[static_cast<size_t>(tc)] = tuple_code(t.group, f);
    }
    for (size_t fi = 0; fi < fsyms.size(); ++fi) {
      const InvariantSymbol& f = fsyms[fi];
      InvariantSymbol fhat;
      if (!hat_symbol(f, t.L, &fhat)) continue;
      int fhat_idx = t.index_of(m + 1, fhat);
      const RingElem* lhs_base = &t.at(m + 1, fhat_idx, 0);
      const RingElem* rhs_base = &t.at(m, static_cast<int>(fi), 0);
      for (int64_t tc = 0; tc < tuples; ++tc) {
        if (!(lhs_base[tc] == rhs_base[folded[static_cast<size_t>(tc)]])) {
          AxiomReport r;
          r.pass = false;
          r.condition = "(2)";
          r.invariant = invariant_to_string(f);
          r.tuple = decode_tuple(t.group, m + 1, tc);
          std::ostringstream os;
          os << invariant_to_string(fhat) << " at " << tuple_str(r.tuple)
             << " disagrees with " << invariant_to_string(f) << " at "
             << tuple_str(decode_tuple(t.group, m, folded[static_cast<size_t>(tc)]));
          r.detail = os.str();
          return r;
        }
      }
    }
  }
  return {};
}

}  // namespace pckit
