#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace heis {

// Integer Heisenberg coordinates in the upper-triangular matrix model:
//   (x, y, z)  <->  [[1, x, z], [0, 1, y], [0, 0, 1]]
// so that (x1,y1,z1)*(x2,y2,z2) = (x1+x2, y1+y2, z1+z2+x1*y2) and the
// commutator c = [a,b] lands at (0,0,1).
struct GroupElement {
  int64_t x = 0;
  int64_t y = 0;
  int64_t z = 0;

  friend auto operator<=>(const GroupElement&, const GroupElement&) = default;
};

// Overflow guard. z grows quadratically with word length, so it gets the
// wide bound; products stay exactly representable in signed 128-bit
// intermediates well before these limits are reached.
inline constexpr int64_t kCoordLimitXY = int64_t{1} << 30;
inline constexpr int64_t kCoordLimitZ = int64_t{1} << 60;

GroupElement identity();
GroupElement gen_a();
GroupElement gen_b();
GroupElement gen_c();  // c = [a,b] = (0,0,1)

GroupElement mul(const GroupElement& g, const GroupElement& h);
GroupElement inv(const GroupElement& g);
// Closed form (n*x, n*y, n*z + n(n-1)/2 * x*y); n may be negative.
GroupElement pow(const GroupElement& g, int64_t n);
GroupElement commutator(const GroupElement& g, const GroupElement& h);

enum class Letter : uint8_t { A, AInv, B, BInv };
using Word = std::vector<Letter>;

GroupElement letter_element(Letter s);
Letter letter_inverse(Letter s);
GroupElement word_eval(const Word& w);

// Textual element literal "x,y,z" (signed decimals) used by CLI and files.
std::string to_string(const GroupElement& g);
GroupElement parse_element(std::string_view text);

struct GroupElementHash {
  size_t operator()(const GroupElement& g) const {
    uint64_t h = 0x9e3779b97f4a7c15ULL;
    for (uint64_t v : {static_cast<uint64_t>(g.x), static_cast<uint64_t>(g.y),
                       static_cast<uint64_t>(g.z)}) {
      h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    }
    return static_cast<size_t>(h);
  }
};

}  // namespace heis
