#pragma once

#include "affbraid/braid_word.hpp"
#include "affbraid/laurent.hpp"
#include "affbraid/temperley_lieb.hpp"

#include <numeric>
#include <random>
#include <vector>

namespace affbraid::testing {

inline BraidWord W(std::string_view text) { return parse(text); }

/// Uniform letter of the formal alphabet of (kind, rank).
inline BraidLetter random_letter(std::mt19937_64& rng, GroupKind kind, int rank) {
  const int extra = kind == GroupKind::A ? 0 : 1;
  std::uniform_int_distribution<int> gen(1, rank + extra);
  std::uniform_int_distribution<int> coin(0, 1);
  const int g = gen(rng);
  const int sign = coin(rng) == 0 ? 1 : -1;
  if (g <= rank) return sigma(g, sign);
  return kind == GroupKind::B ? tee(sign) : agen(rank + 1, sign);
}

inline BraidWord random_word(std::mt19937_64& rng, GroupKind kind, int rank, int length) {
  std::vector<BraidLetter> letters;
  for (int i = 0; i < length; ++i) letters.push_back(random_letter(rng, kind, rank));
  return BraidWord(kind, rank, letters);
}

inline int random_int(std::mt19937_64& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

/// Kauffman bracket of a braid closure by summing over all 2^c smoothings,
/// counting loops with a union-find over the points (level, position).
inline LaurentPoly state_sum_bracket(const BraidWord& w) {
  const int m = w.rank() + 1;
  const auto letters = w.letters();
  const int c = static_cast<int>(letters.size());
  const int points = (c + 1) * m;
  auto id = [m](int level, int pos) { return level * m + pos; };
  const LaurentPoly d = LaurentPoly::monomial(-1, 2) + LaurentPoly::monomial(-1, -2);
  LaurentPoly total;
  for (std::uint64_t state = 0; state < (std::uint64_t{1} << c); ++state) {
    std::vector<int> parent(static_cast<std::size_t>(points));
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](int x) {
      while (parent[static_cast<std::size_t>(x)] != x) {
        parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
        x = parent[static_cast<std::size_t>(x)];
      }
      return x;
    };
    auto unite = [&](int a, int b) { parent[static_cast<std::size_t>(find(a))] = find(b); };
    int exponent = 0;
    for (int k = 0; k < c; ++k) {
      const int i = letters[static_cast<std::size_t>(k)].gen.index - 1;
      const int sign = letters[static_cast<std::size_t>(k)].sign;
      const bool vertical = ((state >> k) & 1U) == 0;
      for (int p = 0; p < m; ++p) {
        if (p != i && p != i + 1) unite(id(k, p), id(k + 1, p));
      }
      if (vertical) {
        unite(id(k, i), id(k + 1, i));
        unite(id(k, i + 1), id(k + 1, i + 1));
        exponent += sign;
      } else {
        unite(id(k, i), id(k, i + 1));
        unite(id(k + 1, i), id(k + 1, i + 1));
        exponent -= sign;
      }
    }
    for (int p = 0; p < m; ++p) unite(id(0, p), id(c, p));
    int loops = 0;
    for (int x = 0; x < points; ++x) {
      if (find(x) == x) ++loops;
    }
    total += LaurentPoly::A(exponent) * d.pow(static_cast<unsigned>(loops - 1));
  }
  return total;
}

} // namespace affbraid::testing
