#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pckit/groupkind.hpp"

namespace pckit {

// Decorations a matrix slot can carry inside an invariant word. Star is the
// form-twisted transpose (J M^T J^{-1} in symplectic context, M^T in
// orthogonal context) and only meaningful there.
enum class Decoration { Plain, Inverse, Star };

struct DecLetter {
  int32_t slot{1};  // 1-based
  Decoration dec{Decoration::Plain};
  bool operator==(const DecLetter&) const = default;
  auto operator<=>(const DecLetter&) const = default;
};

enum class InvKind { SigmaOfWord, DetInverse, Similitude, SimilitudeInverse };

struct InvariantSymbol {
  InvKind kind{InvKind::SigmaOfWord};
  int32_t m{1};                 // arity (number of matrix slots)
  std::vector<DecLetter> word;  // SigmaOfWord only
  int32_t i{1};                 // sigma index, SigmaOfWord only
  int32_t slot{1};              // DetInverse / Similitude / SimilitudeInverse

  bool operator==(const InvariantSymbol&) const = default;
};

std::string invariant_to_string(const InvariantSymbol& s);

// Packed code for fast table keys; words up to length 4 over up to 4 slots.
uint64_t invariant_code(const InvariantSymbol& s);

// The generating set of the invariant algebra at arity m, word length <= L:
// sigma_i of decorated words plus det^{-1} per slot (GL) and sim^{+-1} per
// slot (GSp/GO). Words are deduplicated up to cyclic rotation and the
// reversal symmetry sigma_i(w) = sigma_i(reverse-star(w)) where that symmetry
// holds (symplectic/orthogonal flavors).
std::vector<InvariantSymbol> generator_set(const GroupKind& kind, int32_t m, int32_t L);

// Same enumeration without deduplication; index set of RawTable audits.
std::vector<InvariantSymbol> all_word_symbols(const GroupKind& kind, int32_t m, int32_t L);

// The decorated words behind all_word_symbols, in the same (depth-first)
// order: symbol k*d + (i-1) is sigma_i of word k.
std::vector<std::vector<DecLetter>> all_decorated_words(const GroupKind& kind, int32_t m,
                                                        int32_t L);

RingElem evaluate(const GroupKind& kind, const InvariantSymbol& inv,
                  const std::vector<Mat>& mats);

}  // namespace pckit
