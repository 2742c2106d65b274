#include "pckit/invariants.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <sstream>

namespace pckit {

std::string invariant_to_string(const InvariantSymbol& s) {
  std::ostringstream os;
  switch (s.kind) {
    case InvKind::SigmaOfWord: {
      os << "s" << s.i << "[";
      bool first = true;
      for (const DecLetter& l : s.word) {
        if (!first) os << " ";
        os << l.slot;
        if (l.dec == Decoration::Inverse) os << "^-1";
        if (l.dec == Decoration::Star) os << "^*";
        first = false;
      }
      os << "]";
      break;
    }
    case InvKind::DetInverse: os << "detinv(" << s.slot << ")"; break;
    case InvKind::Similitude: os << "sim(" << s.slot << ")"; break;
    case InvKind::SimilitudeInverse: os << "siminv(" << s.slot << ")"; break;
  }
  return os.str();
}

uint64_t invariant_code(const InvariantSymbol& s) {
  require(s.m <= 4 && static_cast<int>(s.word.size()) <= 4, Err::BudgetExceeded,
          "symbol packing supports arity <= 4 and length <= 4");
  uint64_t code = static_cast<uint64_t>(s.kind) & 0x3;
  code |= static_cast<uint64_t>(s.m & 0x7) << 2;
  switch (s.kind) {
    case InvKind::SigmaOfWord: {
      code |= static_cast<uint64_t>(s.i & 0xf) << 5;
      code |= static_cast<uint64_t>(s.word.size() & 0x7) << 9;
      uint64_t letters = 0;
      for (size_t k = 0; k < s.word.size(); ++k) {
        uint64_t l = static_cast<uint64_t>((s.word[k].slot - 1) * 3 +
                                           static_cast<int>(s.word[k].dec));
        letters |= l << (4 * k);
      }
      code |= letters << 12;
      break;
    }
    default:
      code |= static_cast<uint64_t>(s.slot & 0xf) << 5;
      break;
  }
  return code;
}

namespace {

bool word_decorations_allowed(const GroupKind& kind) {
  return kind.flavor != Flavor::GL && kind.flavor != Flavor::SL;
}

int32_t sigma_max(const GroupKind& kind) {
  // det is constantly 1 on SL, so the top coefficient is dropped there
  return kind.flavor == Flavor::SL ? kind.d() - 1 : kind.d();
}

Decoration flip(Decoration d) {
  switch (d) {
    case Decoration::Plain: return Decoration::Inverse;
    case Decoration::Inverse: return Decoration::Plain;
    case Decoration::Star: return Decoration::Star;
  }
  return d;
}

std::vector<DecLetter> reverse_star(const std::vector<DecLetter>& w) {
  std::vector<DecLetter> out;
  for (auto it = w.rbegin(); it != w.rend(); ++it) out.push_back({it->slot, flip(it->dec)});
  return out;
}

std::vector<DecLetter> canonical_word(const std::vector<DecLetter>& w, bool use_reversal) {
  std::vector<DecLetter> best = w;
  auto consider = [&](std::vector<DecLetter> cand) {
    for (size_t r = 0; r < cand.size(); ++r) {
      std::rotate(cand.begin(), cand.begin() + 1, cand.end());
      if (cand < best) best = cand;
    }
  };
  consider(w);
  if (use_reversal) consider(reverse_star(w));
  return best;
}

void enumerate_words(const GroupKind& kind, int32_t m, int32_t L,
                     const std::function<void(const std::vector<DecLetter>&)>& emit) {
  std::vector<Decoration> decs = {Decoration::Plain};
  if (word_decorations_allowed(kind)) decs.push_back(Decoration::Inverse);
  std::vector<DecLetter> letters;
  for (int32_t s = 1; s <= m; ++s)
    for (Decoration d : decs) letters.push_back({s, d});
  std::vector<DecLetter> w;
  std::function<void()> rec = [&]() {
    if (!w.empty()) emit(w);
    if (static_cast<int32_t>(w.size()) == L) return;
    for (const DecLetter& l : letters) {
      w.push_back(l);
      rec();
      w.pop_back();
    }
  };
  rec();
}

}  // namespace

std::vector<InvariantSymbol> generator_set(const GroupKind& kind, int32_t m, int32_t L) {
  require(L >= 1, Err::SchemaError, "word length budget must be >= 1");
  require(m >= 1 && m <= 4 && L <= 4, Err::BudgetExceeded, "arity/length beyond packing budget");
  std::vector<InvariantSymbol> out;
  bool use_reversal = kind.is_symplectic() || kind.is_orthogonal();
  std::set<std::vector<DecLetter>> seen;
  enumerate_words(kind, m, L, [&](const std::vector<DecLetter>& w) {
    auto canon = canonical_word(w, use_reversal);
    if (!seen.insert(canon).second) return;
    for (int32_t i = 1; i <= sigma_max(kind); ++i) {
      InvariantSymbol s;
      s.kind = InvKind::SigmaOfWord;
      s.m = m;
      s.word = canon;
      s.i = i;
      out.push_back(std::move(s));
    }
  });
  if (kind.flavor == Flavor::GL)
    for (int32_t j = 1; j <= m; ++j)
      out.push_back({InvKind::DetInverse, m, {}, 1, j});
  if (kind.has_similitude())
    for (int32_t j = 1; j <= m; ++j) {
      out.push_back({InvKind::Similitude, m, {}, 1, j});
      out.push_back({InvKind::SimilitudeInverse, m, {}, 1, j});
    }
  return out;
}

std::vector<std::vector<DecLetter>> all_decorated_words(const GroupKind& kind, int32_t m,
                                                        int32_t L) {
  require(m >= 1 && m <= 4 && L >= 1 && L <= 4, Err::BudgetExceeded,
          "arity/length beyond packing budget");
  std::vector<std::vector<DecLetter>> out;
  enumerate_words(kind, m, L, [&](const std::vector<DecLetter>& w) { out.push_back(w); });
  return out;
}

std::vector<InvariantSymbol> all_word_symbols(const GroupKind& kind, int32_t m, int32_t L) {
  require(m >= 1 && m <= 4 && L >= 1 && L <= 4, Err::BudgetExceeded,
          "arity/length beyond packing budget");
  std::vector<InvariantSymbol> out;
  for (const auto& w : all_decorated_words(kind, m, L)) {
    for (int32_t i = 1; i <= kind.d(); ++i) {
      InvariantSymbol s;
      s.kind = InvKind::SigmaOfWord;
      s.m = m;
      s.word = w;
      s.i = i;
      out.push_back(std::move(s));
    }
  }
  if (kind.flavor == Flavor::GL)
    for (int32_t j = 1; j <= m; ++j) out.push_back({InvKind::DetInverse, m, {}, 1, j});
  if (kind.has_similitude())
    for (int32_t j = 1; j <= m; ++j) {
      out.push_back({InvKind::Similitude, m, {}, 1, j});
      out.push_back({InvKind::SimilitudeInverse, m, {}, 1, j});
    }
  return out;
}

RingElem evaluate(const GroupKind& kind, const InvariantSymbol& inv,
                  const std::vector<Mat>& mats) {
  require(static_cast<int32_t>(mats.size()) == inv.m, Err::RankMismatch,
          "tuple length does not match symbol arity");
  for (const Mat& m : mats)
    require(m.d == kind.d(), Err::IncompatibleContexts, "matrix size does not match kind");
  const RingSpec& ring = mats[0].ring;
  switch (inv.kind) {
    case InvKind::SigmaOfWord: {
      require(inv.i >= 1 && inv.i <= kind.d(), Err::SchemaError, "sigma index out of range");
      Mat prod = mat_identity(ring, kind.d());
      for (const DecLetter& l : inv.word) {
        const Mat& x = mats[static_cast<size_t>(l.slot - 1)];
        switch (l.dec) {
          case Decoration::Plain:
            prod = mat_mul(prod, x);
            break;
          case Decoration::Inverse: {
            require(mat_invertible(x), Err::NonInvertibleSlot,
                    "slot " + std::to_string(l.slot) + " is not invertible");
            prod = mat_mul(prod, mat_inverse(x));
            break;
          }
          case Decoration::Star: {
            if (kind.is_symplectic())
              prod = mat_mul(prod, symplectic_transpose(x, kind.n));
            else if (kind.is_orthogonal())
              prod = mat_mul(prod, mat_transpose(x));
            else
              fail(Err::WrongKind, "star decoration needs a symplectic or orthogonal context");
            break;
          }
        }
      }
      return char_poly_sigmas(prod)[static_cast<size_t>(inv.i - 1)];
    }
    case InvKind::DetInverse: {
      RingElem det = mat_det(mats[static_cast<size_t>(inv.slot - 1)]);
      require(is_unit(det), Err::NonInvertibleSlot, "slot determinant is not a unit");
      return rinv(det);
    }
    case InvKind::Similitude:
      return similitude(kind, mats[static_cast<size_t>(inv.slot - 1)]);
    case InvKind::SimilitudeInverse:
      return rinv(similitude(kind, mats[static_cast<size_t>(inv.slot - 1)]));
  }
  fail(Err::Internal, "unhandled invariant kind");
}

}  // namespace pckit
