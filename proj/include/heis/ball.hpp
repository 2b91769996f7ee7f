#pragma once

#include <cstdint>
#include <optional>
#include <ostream>
#include <utility>
#include <vector>

#include "heis/flat_map.hpp"
#include "heis/group.hpp"

namespace heis {

// Packed 64-bit key for BFS visited sets: 16 bits each for x,y (offset
// binary, |x|,|y| < 2^15) and 32 bits for z (|z| < 2^31). The all-zero key
// is unreachable because the x field always carries the 2^15 offset.
inline bool packable(const GroupElement& g) {
  return g.x > -(1 << 15) && g.x < (1 << 15) && g.y > -(1 << 15) &&
         g.y < (1 << 15) && g.z > -(int64_t{1} << 31) &&
         g.z < (int64_t{1} << 31);
}

inline uint64_t pack_key(const GroupElement& g) {
  uint64_t ux = static_cast<uint64_t>(g.x + (1 << 15)) & 0xffff;
  uint64_t uy = static_cast<uint64_t>(g.y + (1 << 15)) & 0xffff;
  uint64_t uz = static_cast<uint64_t>(g.z + (int64_t{1} << 31)) & 0xffffffff;
  return (ux << 48) | (uy << 32) | uz;
}

inline GroupElement unpack_key(uint64_t key) {
  int64_t x = static_cast<int64_t>((key >> 48) & 0xffff) - (1 << 15);
  int64_t y = static_cast<int64_t>((key >> 32) & 0xffff) - (1 << 15);
  int64_t z = static_cast<int64_t>(key & 0xffffffff) - (int64_t{1} << 31);
  return {x, y, z};
}

// Memory budget for BFS tables, in bytes. Default 8 GiB, overridable with
// the HEIS_MEM_BUDGET environment variable (plain bytes or K/M/G suffix).
size_t memory_budget();

// Exact ball {g : d_W(e,g) <= R} with its distance table.
class Ball {
 public:
  int radius() const { return radius_; }
  size_t size() const { return table_.size(); }
  const std::vector<size_t>& layer_sizes() const { return layers_; }

  std::optional<int> distance(const GroupElement& g) const {
    if (!packable(g)) return std::nullopt;
    int d = table_.find(pack_key(g));
    if (d < 0) return std::nullopt;
    return d;
  }

  bool contains(const GroupElement& g) const {
    return distance(g).has_value();
  }

  template <class F>
  void for_each(F&& fn) const {
    table_.for_each([&](uint64_t key, uint8_t d) {
      fn(unpack_key(key), static_cast<int>(d));
    });
  }

  // Rows sorted by (dist, x, y, z) for reproducible dumps.
  std::vector<std::pair<GroupElement, int>> sorted_entries() const;

 private:
  friend Ball ball(int);
  FlatMap64 table_;
  std::vector<size_t> layers_;  // layers_[r] = |{g : d(g) = r}|
  int radius_ = 0;
};

// Exact distances by BFS layering over S = {a, a^-1, b, b^-1}.
Ball ball(int R);

// d_W(e,g) if <= maxR, nullopt otherwise. Runs a targeted bidirectional
// search when maxR > 30; plain layered BFS below that.
std::optional<int> dist(const GroupElement& g, int maxR);

// d_W(x,y) = dist(x^-1 y) by left invariance.
std::optional<int> dist_pair(const GroupElement& x, const GroupElement& y,
                             int maxR);

struct GrowthReport {
  int rmin = 0;
  int rmax = 0;
  std::vector<size_t> sizes;  // |B_R| for R = rmin..rmax
  double slope = 0.0;         // least-squares slope of log|B_R| vs log R
};

GrowthReport growth_report(int rmin, int rmax);

// d_W(c^k, e) for k = 1..K. profile[k-1] is the distance of c^k.
std::vector<int> central_profile(int K);

// CSV dump: header "x,y,z,dist", rows sorted by (dist,x,y,z).
void write_ball_csv(const Ball& b, std::ostream& out);

}  // namespace heis
