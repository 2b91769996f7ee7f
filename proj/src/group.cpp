#include "heis/group.hpp"

#include <charconv>
#include <cstdlib>

#include "heis/errors.hpp"

namespace heis {

namespace {

using i128 = __int128;

int64_t narrow_xy(i128 v, const char* what) {
  if (v > kCoordLimitXY || v < -kCoordLimitXY) {
    throw CoordinateOverflow(std::string(what) + ": |x|,|y| guard exceeded");
  }
  return static_cast<int64_t>(v);
}

int64_t narrow_z(i128 v, const char* what) {
  if (v > kCoordLimitZ || v < -kCoordLimitZ) {
    throw CoordinateOverflow(std::string(what) + ": |z| guard exceeded");
  }
  return static_cast<int64_t>(v);
}

}  // namespace

GroupElement identity() { return {0, 0, 0}; }
GroupElement gen_a() { return {1, 0, 0}; }
GroupElement gen_b() { return {0, 1, 0}; }
GroupElement gen_c() { return {0, 0, 1}; }

GroupElement mul(const GroupElement& g, const GroupElement& h) {
  i128 x = i128(g.x) + h.x;
  i128 y = i128(g.y) + h.y;
  i128 z = i128(g.z) + h.z + i128(g.x) * h.y;
  return {narrow_xy(x, "mul"), narrow_xy(y, "mul"), narrow_z(z, "mul")};
}

GroupElement inv(const GroupElement& g) {
  i128 z = i128(g.x) * g.y - g.z;
  return {narrow_xy(-i128(g.x), "inv"), narrow_xy(-i128(g.y), "inv"),
          narrow_z(z, "inv")};
}

GroupElement pow(const GroupElement& g, int64_t n) {
  i128 x = i128(n) * g.x;
  i128 y = i128(n) * g.y;
  // n(n-1)/2 is always integral; compute the halving on the even factor.
  i128 half = (n % 2 == 0) ? i128(n / 2) * (n - 1) : i128(n) * ((n - 1) / 2);
  i128 z = i128(n) * g.z + half * (i128(g.x) * g.y);
  return {narrow_xy(x, "pow"), narrow_xy(y, "pow"), narrow_z(z, "pow")};
}

GroupElement commutator(const GroupElement& g, const GroupElement& h) {
  return mul(mul(g, h), mul(inv(g), inv(h)));
}

GroupElement letter_element(Letter s) {
  switch (s) {
    case Letter::A:
      return gen_a();
    case Letter::AInv:
      return inv(gen_a());
    case Letter::B:
      return gen_b();
    case Letter::BInv:
      return inv(gen_b());
  }
  return identity();
}

Letter letter_inverse(Letter s) {
  switch (s) {
    case Letter::A:
      return Letter::AInv;
    case Letter::AInv:
      return Letter::A;
    case Letter::B:
      return Letter::BInv;
    case Letter::BInv:
      return Letter::B;
  }
  return Letter::A;
}

GroupElement word_eval(const Word& w) {
  GroupElement g = identity();
  for (Letter s : w) g = mul(g, letter_element(s));
  return g;
}

std::string to_string(const GroupElement& g) {
  return std::to_string(g.x) + "," + std::to_string(g.y) + "," +
         std::to_string(g.z);
}

GroupElement parse_element(std::string_view text) {
  int64_t vals[3];
  const char* p = text.data();
  const char* end = text.data() + text.size();
  for (int i = 0; i < 3; ++i) {
    auto [next, ec] = std::from_chars(p, end, vals[i]);
    if (ec != std::errc{}) {
      throw std::invalid_argument("bad element literal: " + std::string(text));
    }
    p = next;
    if (i < 2) {
      if (p == end || *p != ',') {
        throw std::invalid_argument("bad element literal: " +
                                    std::string(text));
      }
      ++p;
    }
  }
  if (p != end) {
    throw std::invalid_argument("bad element literal: " + std::string(text));
  }
  GroupElement g{vals[0], vals[1], vals[2]};
  if (std::abs(g.x) > kCoordLimitXY || std::abs(g.y) > kCoordLimitXY ||
      std::abs(g.z) > kCoordLimitZ) {
    throw CoordinateOverflow("parse_element: literal outside guard");
  }
  return g;
}

}  // namespace heis
