#pragma once

#include <map>
#include <set>
#include <vector>

#include "heis/group.hpp"
#include "heis/rng.hpp"

namespace heis::testing {

// Independent oracle: exact distances by exhaustive enumeration of all words
// of length <= R over S = {a, a^-1, b, b^-1}. Exponential in R; use R <= 6.
inline std::map<GroupElement, int> enumerate_words(int R) {
  std::map<GroupElement, int> dist;
  dist[identity()] = 0;
  std::vector<GroupElement> layer{identity()};
  const Letter letters[4] = {Letter::A, Letter::AInv, Letter::B, Letter::BInv};
  for (int r = 1; r <= R; ++r) {
    std::vector<GroupElement> next;
    for (const GroupElement& g : layer) {
      for (Letter s : letters) {
        GroupElement h = mul(g, letter_element(s));
        if (dist.emplace(h, r).second) next.push_back(h);
      }
    }
    layer.swap(next);
  }
  return dist;
}

inline GroupElement random_element(Rng& rng, int64_t coord_range) {
  return {rng.uniform_int(-coord_range, coord_range),
          rng.uniform_int(-coord_range, coord_range),
          rng.uniform_int(-coord_range, coord_range)};
}

inline Word random_word(Rng& rng, int max_len) {
  Word w;
  int len = static_cast<int>(rng.uniform_int(0, max_len));
  for (int i = 0; i < len; ++i) {
    w.push_back(static_cast<Letter>(rng.uniform_int(0, 3)));
  }
  return w;
}

}  // namespace heis::testing
