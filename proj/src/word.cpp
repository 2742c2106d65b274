#include "pckit/word.hpp"

#include <sstream>

namespace pckit {

Word reduce(Word w) {
  std::vector<Letter> out;
  for (const Letter& l : w.letters) {
    if (!out.empty() && out.back().index == l.index && out.back().sign == -l.sign)
      out.pop_back();
    else
      out.push_back(l);
  }
  w.letters = std::move(out);
  return w;
}

Word word_concat(const Word& a, const Word& b) {
  Word w = a;
  w.letters.insert(w.letters.end(), b.letters.begin(), b.letters.end());
  return reduce(w);
}

Word word_inverse(const Word& w) {
  Word v;
  for (auto it = w.letters.rbegin(); it != w.letters.rend(); ++it)
    v.letters.push_back({it->index, -it->sign});
  return v;
}

Word word_from_letters(std::initializer_list<std::pair<int, int>> ls) {
  Word w;
  for (auto [i, s] : ls) w.letters.push_back({i, s});
  return reduce(w);
}

std::string word_to_string(const Word& w) {
  if (w.letters.empty()) return "1";
  std::ostringstream os;
  bool first = true;
  for (const Letter& l : w.letters) {
    if (!first) os << "*";
    os << "x" << l.index;
    if (l.sign < 0) os << "^-1";
    first = false;
  }
  return os.str();
}

Word word_from_string(const std::string& s) {
  Word w;
  if (s == "1" || s.empty()) return w;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, '*')) {
    require(!tok.empty() && tok[0] == 'x', Err::ParseError, "bad word token '" + tok + "'");
    size_t pos = 1;
    size_t caret = tok.find('^');
    std::string idx_str = tok.substr(pos, caret == std::string::npos ? std::string::npos : caret - pos);
    int32_t idx = 0;
    try {
      idx = static_cast<int32_t>(std::stol(idx_str));
    } catch (...) {
      fail(Err::ParseError, "bad letter index in '" + tok + "'");
    }
    require(idx >= 1, Err::ParseError, "letter index must be >= 1");
    int64_t exp = 1;
    if (caret != std::string::npos) {
      try {
        exp = std::stol(tok.substr(caret + 1));
      } catch (...) {
        fail(Err::ParseError, "bad exponent in '" + tok + "'");
      }
    }
    int32_t sign = exp >= 0 ? 1 : -1;
    for (int64_t i = 0; i < (exp >= 0 ? exp : -exp); ++i) w.letters.push_back({idx, sign});
  }
  return reduce(w);
}

FreeHom free_hom(int32_t m, int32_t n, std::vector<Word> images) {
  require(m >= 0 && n >= 0, Err::SchemaError, "ranks must be non-negative");
  require(static_cast<int32_t>(images.size()) == m, Err::RankMismatch,
          "need exactly m image words");
  FreeHom h;
  h.m = m;
  h.n = n;
  h.images.reserve(images.size());
  for (auto& w : images) {
    Word r = reduce(std::move(w));
    for (const Letter& l : r.letters)
      require(l.index >= 1 && l.index <= n, Err::RankMismatch,
              "image uses letter outside 1..n");
    h.images.push_back(std::move(r));
  }
  return h;
}

Word apply_to_word(const FreeHom& alpha, const Word& w) {
  Word out;
  for (const Letter& l : w.letters) {
    require(l.index >= 1 && l.index <= alpha.m, Err::RankMismatch, "letter outside source rank");
    const Word& img = alpha.images[static_cast<size_t>(l.index - 1)];
    Word piece = l.sign > 0 ? img : word_inverse(img);
    out.letters.insert(out.letters.end(), piece.letters.begin(), piece.letters.end());
  }
  return reduce(out);
}

FreeHom compose(const FreeHom& alpha, const FreeHom& beta) {
  require(beta.n == alpha.m, Err::RankMismatch,
          "composition ranks do not match: beta target " + std::to_string(beta.n) +
              " vs alpha source " + std::to_string(alpha.m));
  std::vector<Word> images;
  images.reserve(static_cast<size_t>(beta.m));
  for (const Word& w : beta.images) images.push_back(apply_to_word(alpha, w));
  return free_hom(beta.m, alpha.n, std::move(images));
}

bool is_type1(const FreeHom& h) {
  for (const Word& w : h.images)
    if (w.letters.size() != 1 || w.letters[0].sign != 1) return false;
  return true;
}

bool is_type2(const FreeHom& h) {
  if (h.n != h.m + 1) return false;
  for (int32_t i = 0; i < h.m - 1; ++i)
    if (h.images[static_cast<size_t>(i)] != word_from_letters({{i + 1, 1}})) return false;
  return h.m >= 1 &&
         h.images[static_cast<size_t>(h.m - 1)] == word_from_letters({{h.m, 1}, {h.m + 1, 1}});
}

namespace {

// builder emitting elementary factors while tracking the register count
struct FactorProgram {
  std::vector<InvGenFactor> factors;
  int32_t cur;

  explicit FactorProgram(int32_t n) : cur(n) {}

  // type-1 map FG(cur+1) -> FG(cur): append a copy of register idx
  void dup(int32_t idx) {
    std::vector<Word> images;
    for (int32_t i = 1; i <= cur; ++i) images.push_back(word_from_letters({{i, 1}}));
    images.push_back(word_from_letters({{idx, 1}}));
    factors.push_back({free_hom(cur + 1, cur, std::move(images)), false, {}});
    ++cur;
  }

  // type-1 map FG(cur-1) -> FG(cur): forget the last register
  void drop_last() {
    std::vector<Word> images;
    for (int32_t i = 1; i < cur; ++i) images.push_back(word_from_letters({{i, 1}}));
    factors.push_back({free_hom(cur - 1, cur, std::move(images)), false, {}});
    --cur;
  }

  // type-2 map FG(cur-1) -> FG(cur): merge the last two registers
  void merge_last_two() {
    std::vector<Word> images;
    for (int32_t i = 1; i < cur - 1; ++i) images.push_back(word_from_letters({{i, 1}}));
    images.push_back(word_from_letters({{cur - 1, 1}, {cur, 1}}));
    factors.push_back({free_hom(cur - 1, cur, std::move(images)), false, {}});
    --cur;
  }

  // inverse of the Nielsen automorphism x_j -> x_j x_k: register j <- j * k^-1
  void mul_inv_into(int32_t j, int32_t k) {
    std::vector<Word> fwd, back;
    for (int32_t i = 1; i <= cur; ++i) {
      if (i == j) {
        fwd.push_back(word_from_letters({{j, 1}, {k, 1}}));
        back.push_back(word_from_letters({{j, 1}, {k, -1}}));
      } else {
        fwd.push_back(word_from_letters({{i, 1}}));
        back.push_back(word_from_letters({{i, 1}}));
      }
    }
    factors.push_back({free_hom(cur, cur, std::move(fwd)), true, free_hom(cur, cur, std::move(back))});
  }

  // replace the last register by its inverse
  void invert_last() {
    dup(cur);                   // (..., z, z)
    mul_inv_into(cur - 1, cur); // (..., 1, z)
    mul_inv_into(cur - 1, cur); // (..., z^-1, z)
    drop_last();                // (..., z^-1)
  }
};

}  // namespace

std::vector<InvGenFactor> decompose_invgen(const FreeHom& alpha) {
  if (is_type1(alpha) || is_type2(alpha)) return {{alpha, false, {}}};
  require(alpha.n >= 1, Err::RankMismatch, "target rank 0 cannot be decomposed");

  FactorProgram prog(alpha.n);
  // build output i at register alpha.n + i, keeping the originals in place
  for (const Word& w : alpha.images) {
    if (w.letters.empty()) {
      prog.dup(1);
      prog.dup(1);
      prog.mul_inv_into(prog.cur - 1, prog.cur);  // gamma_1 * gamma_1^-1 = 1
      prog.drop_last();
      continue;
    }
    bool first = true;
    for (const Letter& l : w.letters) {
      if (first) {
        prog.dup(l.index);
        if (l.sign < 0) prog.invert_last();
        first = false;
        continue;
      }
      prog.dup(l.index);  // (..., acc, gamma_idx)
      if (l.sign > 0) {
        prog.merge_last_two();
      } else {
        prog.mul_inv_into(prog.cur - 1, prog.cur);
        prog.drop_last();
      }
    }
  }
  // final projection onto the built outputs
  std::vector<Word> proj;
  for (int32_t i = 1; i <= alpha.m; ++i) proj.push_back(word_from_letters({{alpha.n + i, 1}}));
  prog.factors.push_back({free_hom(alpha.m, prog.cur, std::move(proj)), false, {}});
  return prog.factors;
}

}  // namespace pckit
