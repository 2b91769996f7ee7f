#include "heis/ball.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <limits>
#include <stdexcept>
#include <unordered_map>

#include "heis/errors.hpp"

namespace heis {

namespace {

const GroupElement kGens[4] = {{1, 0, 0}, {-1, 0, 0}, {0, 1, 0}, {0, -1, 0}};

// Neighbor g*s without the generic overflow checks; BFS radii keep
// coordinates far inside the guard.
inline GroupElement step(const GroupElement& g, const GroupElement& s) {
  return {g.x + s.x, g.y + s.y, g.z + s.z + g.x * s.y};
}

void check_budget(size_t bytes, const char* what) {
  if (bytes > memory_budget()) {
    throw BudgetExceeded(std::string(what) + ": would exceed memory budget");
  }
}

}  // namespace

size_t memory_budget() {
  // Read fresh each call so HEIS_MEM_BUDGET can be adjusted by a caller.
  const char* env = std::getenv("HEIS_MEM_BUDGET");
  if (env == nullptr || *env == '\0') return size_t{8} << 30;
  char* end = nullptr;
  unsigned long long v = std::strtoull(env, &end, 10);
  if (end != nullptr) {
    switch (*end) {
      case 'k':
      case 'K':
        v <<= 10;
        break;
      case 'm':
      case 'M':
        v <<= 20;
        break;
      case 'g':
      case 'G':
        v <<= 30;
        break;
      default:
        break;
    }
  }
  return static_cast<size_t>(v);
}

Ball ball(int R) {
  if (R < 0) throw std::invalid_argument("ball: radius must be nonnegative");
  if (R > 255) {
    throw std::invalid_argument("ball: radius above supported table range");
  }
  // Up-front projection from |B_R| ~ 0.44 R^4; the per-layer checks below
  // still govern, this just fails fast on hopeless radii.
  double projected = 0.4 * std::pow(static_cast<double>(R), 4.0) * 18.0;
  if (R >= 8 && projected > static_cast<double>(memory_budget())) {
    throw BudgetExceeded("ball: projected table exceeds memory budget");
  }
  Ball b;
  b.radius_ = R;
  b.table_.insert_if_absent(pack_key(identity()), 0);
  b.layers_.assign(1, 1);
  std::vector<GroupElement> frontier{identity()};
  std::vector<GroupElement> next;
  for (int r = 1; r <= R; ++r) {
    check_budget(b.table_.bytes() * 2 +
                     frontier.size() * 10 * sizeof(GroupElement),
                 "ball");
    next.clear();
    for (const GroupElement& g : frontier) {
      for (const GroupElement& s : kGens) {
        GroupElement h = step(g, s);
        if (b.table_.insert_if_absent(pack_key(h), static_cast<uint8_t>(r))) {
          next.push_back(h);
        }
      }
    }
    b.layers_.push_back(next.size());
    frontier.swap(next);
  }
  return b;
}

std::vector<std::pair<GroupElement, int>> Ball::sorted_entries() const {
  std::vector<std::pair<GroupElement, int>> rows;
  rows.reserve(size());
  for_each([&](const GroupElement& g, int d) { rows.emplace_back(g, d); });
  std::sort(rows.begin(), rows.end(), [](const auto& a, const auto& b) {
    if (a.second != b.second) return a.second < b.second;
    return a.first < b.first;
  });
  return rows;
}

namespace {

std::optional<int> dist_forward(const GroupElement& target, int maxR) {
  FlatMap64 seen;
  seen.insert_if_absent(pack_key(identity()), 0);
  std::vector<GroupElement> frontier{identity()}, next;
  for (int r = 1; r <= maxR; ++r) {
    check_budget(seen.bytes() * 2, "dist");
    next.clear();
    for (const GroupElement& g : frontier) {
      for (const GroupElement& s : kGens) {
        GroupElement h = step(g, s);
        if (seen.insert_if_absent(pack_key(h), static_cast<uint8_t>(r))) {
          if (h == target) return r;
          next.push_back(h);
        }
      }
    }
    frontier.swap(next);
    if (frontier.empty()) break;
  }
  return std::nullopt;
}

struct Side {
  FlatMap64 seen;
  std::vector<GroupElement> frontier;
  int radius = 0;
};

// Layer-synchronous bidirectional BFS. Every newly labeled node is checked
// against the opposite map; once radius_a + radius_b reaches the best
// candidate no shorter path can exist.
std::optional<int> dist_bidirectional(const GroupElement& target, int maxR) {
  Side from_e, from_g;
  from_e.seen.insert_if_absent(pack_key(identity()), 0);
  from_e.frontier.push_back(identity());
  from_g.seen.insert_if_absent(pack_key(target), 0);
  from_g.frontier.push_back(target);

  int best = std::numeric_limits<int>::max();
  while (from_e.radius + from_g.radius < maxR &&
         best > from_e.radius + from_g.radius) {
    Side* pick = &from_e;
    if (from_e.frontier.empty()) {
      pick = &from_g;
    } else if (!from_g.frontier.empty() &&
               from_g.frontier.size() < from_e.frontier.size()) {
      pick = &from_g;
    }
    Side& grow = *pick;
    Side& other = (&grow == &from_e) ? from_g : from_e;
    if (grow.frontier.empty()) break;
    check_budget(from_e.seen.bytes() * 2 + from_g.seen.bytes() * 2, "dist");
    int r = ++grow.radius;
    if (r > 255) throw BudgetExceeded("dist: search radius above table range");
    std::vector<GroupElement> next;
    for (const GroupElement& g : grow.frontier) {
      for (const GroupElement& s : kGens) {
        GroupElement h = step(g, s);
        if (grow.seen.insert_if_absent(pack_key(h),
                                       static_cast<uint8_t>(r))) {
          int d_other = other.seen.find(pack_key(h));
          if (d_other >= 0) best = std::min(best, r + d_other);
          next.push_back(h);
        }
      }
    }
    grow.frontier.swap(next);
  }
  if (best <= maxR) return best;
  return std::nullopt;
}

}  // namespace

std::optional<int> dist(const GroupElement& g, int maxR) {
  if (maxR < 0) return std::nullopt;
  if (g == identity()) return 0;
  if (maxR > 510) {
    throw std::invalid_argument("dist: maxR above supported range");
  }
  // Coordinates outside the packed range force distance > 510 already.
  if (!packable(g)) return std::nullopt;
  // Cheap abelianized lower bound: every step moves x or y by one.
  if (std::abs(g.x) + std::abs(g.y) > maxR) return std::nullopt;
  if (maxR <= 30) return dist_forward(g, maxR);
  return dist_bidirectional(g, maxR);
}

std::optional<int> dist_pair(const GroupElement& x, const GroupElement& y,
                             int maxR) {
  return dist(mul(inv(x), y), maxR);
}

GrowthReport growth_report(int rmin, int rmax) {
  if (rmin < 1 || rmin >= rmax) {
    throw std::invalid_argument("growth_report: need 1 <= rmin < rmax");
  }
  Ball b = ball(rmax);
  GrowthReport rep;
  rep.rmin = rmin;
  rep.rmax = rmax;
  std::vector<size_t> cumulative(rmax + 1, 0);
  size_t acc = 0;
  for (int r = 0; r <= rmax; ++r) {
    acc += b.layer_sizes()[r];
    cumulative[r] = acc;
  }
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  int n = 0;
  for (int r = rmin; r <= rmax; ++r) {
    rep.sizes.push_back(cumulative[r]);
    double lx = std::log(static_cast<double>(r));
    double ly = std::log(static_cast<double>(cumulative[r]));
    sx += lx;
    sy += ly;
    sxx += lx * lx;
    sxy += lx * ly;
    ++n;
  }
  rep.slope = (n * sxy - sx * sy) / (n * sxx - sx * sx);
  return rep;
}

std::vector<int> central_profile(int K) {
  if (K < 1) throw std::invalid_argument("central_profile: K must be >= 1");
  int r0 = 2 * static_cast<int>(std::ceil(std::sqrt(static_cast<double>(K)))) +
           2;
  for (;; r0 += 2) {
    Ball b = ball(r0);
    // Bucket the table by (x,y) column; within a column,
    // d(c^k) = min over z-pairs at difference k of the two distances.
    std::unordered_map<uint32_t, std::vector<std::pair<int32_t, uint8_t>>>
        columns;
    b.for_each([&](const GroupElement& g, int d) {
      uint32_t key = (static_cast<uint32_t>(g.x + (1 << 15)) << 16) |
                     static_cast<uint32_t>(g.y + (1 << 15));
      columns[key].emplace_back(static_cast<int32_t>(g.z),
                                static_cast<uint8_t>(d));
    });
    std::vector<int> profile(K + 1, std::numeric_limits<int>::max());
    for (auto& [key, col] : columns) {
      std::sort(col.begin(), col.end());
      for (size_t i = 0; i < col.size(); ++i) {
        for (size_t j = i + 1; j < col.size(); ++j) {
          int k = col[j].first - col[i].first;
          if (k > K) break;
          int cand = col[i].second + col[j].second;
          if (cand < profile[k]) profile[k] = cand;
        }
      }
    }
    bool complete = true;
    for (int k = 1; k <= K; ++k) {
      if (profile[k] == std::numeric_limits<int>::max()) {
        complete = false;
        break;
      }
    }
    if (complete) {
      return std::vector<int>(profile.begin() + 1, profile.end());
    }
  }
}

void write_ball_csv(const Ball& b, std::ostream& out) {
  out << "x,y,z,dist\n";
  for (const auto& [g, d] : b.sorted_entries()) {
    out << g.x << ',' << g.y << ',' << g.z << ',' << d << '\n';
  }
}

}  // namespace heis
