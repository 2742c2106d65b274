#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "pckit/error.hpp"

namespace pckit {

// Letters are (index >= 1, sign +-1); words are kept freely reduced.
struct Letter {
  int32_t index{1};
  int32_t sign{1};
  bool operator==(const Letter&) const = default;
};

struct Word {
  std::vector<Letter> letters;
  bool operator==(const Word&) const = default;
};

Word reduce(Word w);
Word word_concat(const Word& a, const Word& b);
Word word_inverse(const Word& w);
Word word_from_letters(std::initializer_list<std::pair<int, int>> ls);
std::string word_to_string(const Word& w);   // "x1*x2^-1", "1" for the empty word
Word word_from_string(const std::string& s);

// Homomorphism FG(m) -> FG(n) as the tuple of images of x_1..x_m.
struct FreeHom {
  int32_t m{0};  // source rank
  int32_t n{0};  // target rank
  std::vector<Word> images;

  bool operator==(const FreeHom&) const = default;
};

FreeHom free_hom(int32_t m, int32_t n, std::vector<Word> images);

// (alpha o beta)(x_i) = alpha(beta(x_i)).
FreeHom compose(const FreeHom& alpha, const FreeHom& beta);

Word apply_to_word(const FreeHom& alpha, const Word& w);

// Generic group operations used to evaluate words on tuples.
template <class T>
struct GroupOps {
  using Elem = T;
  virtual ~GroupOps() = default;
  virtual T mul(const T& a, const T& b) const = 0;
  virtual T inv(const T& a) const = 0;
  virtual T id() const = 0;
};

template <class T>
T eval_word(const Word& w, const GroupOps<T>& ops, const std::vector<T>& gamma) {
  T acc = ops.id();
  for (const Letter& l : w.letters) {
    require(l.index >= 1 && l.index <= static_cast<int32_t>(gamma.size()), Err::RankMismatch,
            "letter index out of range");
    const T& g = gamma[static_cast<size_t>(l.index - 1)];
    acc = ops.mul(acc, l.sign > 0 ? g : ops.inv(g));
  }
  return acc;
}

// The induced map Gamma^n -> Gamma^m of alpha : FG(m) -> FG(n).
template <class T>
std::vector<T> substitute(const FreeHom& alpha, const GroupOps<T>& ops,
                          const std::vector<T>& gamma) {
  require(static_cast<int32_t>(gamma.size()) == alpha.n, Err::RankMismatch,
          "tuple length " + std::to_string(gamma.size()) + " != target rank " +
              std::to_string(alpha.n));
  std::vector<T> out;
  out.reserve(static_cast<size_t>(alpha.m));
  for (const Word& w : alpha.images) out.push_back(eval_word(w, ops, gamma));
  return out;
}

// One factor of an inv-generation decomposition: a positive map, possibly
// marked as formally inverted, in which case the explicit inverse is stored
// and used for evaluation.
struct InvGenFactor {
  FreeHom map;
  bool inverted{false};
  FreeHom inverse_map;
};

bool is_type1(const FreeHom& h);  // every image a single positive letter
bool is_type2(const FreeHom& h);  // x_i -> x_i (i < m), x_m -> x_m x_{m+1}

// Writes alpha as a composition of type-(1) maps, type-(2) maps and formal
// inverses of elementary positive Nielsen automorphisms. Factors are listed
// outermost-first; evaluating their tuple maps in list order reproduces the
// tuple map of alpha.
std::vector<InvGenFactor> decompose_invgen(const FreeHom& alpha);

template <class T>
std::vector<T> eval_factors(const std::vector<InvGenFactor>& fs, const GroupOps<T>& ops,
                            const std::vector<T>& gamma) {
  std::vector<T> t = gamma;
  for (const InvGenFactor& f : fs) t = substitute(f.inverted ? f.inverse_map : f.map, ops, t);
  return t;
}

}  // namespace pckit
