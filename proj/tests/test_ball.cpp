#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <set>
#include <sstream>

#include "heis/ball.hpp"
#include "heis/errors.hpp"
#include "heis/rng.hpp"
#include "support.hpp"

using namespace heis;

TEST_CASE("ball(1) contents") {
  Ball b = ball(1);
  CHECK(b.size() == 5);
  CHECK(b.distance(identity()) == 0);
  CHECK(b.distance(gen_a()) == 1);
  CHECK(b.distance(inv(gen_a())) == 1);
  CHECK(b.distance(gen_b()) == 1);
  CHECK(b.distance(inv(gen_b())) == 1);
  CHECK_FALSE(b.distance(gen_c()).has_value());
}

TEST_CASE("ball agrees with exhaustive word enumeration up to R=3") {
  for (int R = 0; R <= 3; ++R) {
    auto oracle = testing::enumerate_words(R);
    Ball b = ball(R);
    CHECK(b.size() == oracle.size());
    for (const auto& [g, d] : oracle) {
      auto got = b.distance(g);
      REQUIRE(got.has_value());
      CHECK(*got == d);
    }
  }
  CHECK(ball(2).size() == 17);
}

TEST_CASE("ball(4) holds the commutator at distance 4") {
  Ball b = ball(4);
  CHECK(b.distance(gen_c()) == 4);
}

TEST_CASE("ball table structure") {
  Ball b = ball(6);
  // Every element has a neighbor one layer down, and inverses sit at the
  // same distance.
  b.for_each([&](const GroupElement& g, int d) {
    CHECK(b.distance(inv(g)) == d);
    if (d == 0) return;
    bool has_parent = false;
    for (Letter s : {Letter::A, Letter::AInv, Letter::B, Letter::BInv}) {
      auto nd = b.distance(mul(g, letter_element(s)));
      if (nd && *nd == d - 1) has_parent = true;
    }
    CHECK(has_parent);
  });
}

TEST_CASE("dist basics") {
  CHECK(dist(identity(), 0) == 0);
  CHECK(dist(pow(gen_c(), 4), 8) == 8);
  CHECK(dist(GroupElement{2, 0, 0}, 4) == 2);
  CHECK_FALSE(dist(gen_c(), 3).has_value());
  CHECK(dist(gen_c(), 4) == 4);
}

TEST_CASE("bidirectional dist matches table distances") {
  Ball b = ball(12);
  Rng rng(11);
  auto entries = b.sorted_entries();
  for (int i = 0; i < 300; ++i) {
    const auto& [g, d] = entries[rng.uniform_int(0, entries.size() - 1)];
    // maxR > 30 forces the bidirectional path.
    CHECK(dist(g, 40) == d);
  }
  CHECK(dist(pow(gen_c(), 100), 40) == 40);  // c^{10^2} at 4*10
}

TEST_CASE("word metric identities d(c^{n^2}) = 4n") {
  for (int n = 1; n <= 5; ++n) {
    CHECK(dist(pow(gen_c(), int64_t(n) * n), 4 * n) == 4 * n);
    CHECK_FALSE(dist(pow(gen_c(), int64_t(n) * n), 4 * n - 1).has_value());
  }
}

TEST_CASE("triangle inequality inside ball(12)") {
  Ball b = ball(12);
  Ball big = ball(24);
  auto entries = b.sorted_entries();
  Rng rng(12);
  for (int i = 0; i < 10000; ++i) {
    const GroupElement x = entries[rng.uniform_int(0, entries.size() - 1)].first;
    const GroupElement y = entries[rng.uniform_int(0, entries.size() - 1)].first;
    const GroupElement z = entries[rng.uniform_int(0, entries.size() - 1)].first;
    auto dxz = big.distance(mul(inv(x), z));
    auto dxy = big.distance(mul(inv(x), y));
    auto dyz = big.distance(mul(inv(y), z));
    REQUIRE(dxz.has_value());
    REQUIRE(dxy.has_value());
    REQUIRE(dyz.has_value());
    CHECK(*dxz <= *dxy + *dyz);
  }
}

TEST_CASE("left invariance") {
  Ball big = ball(20);
  Rng rng(13);
  auto small = ball(6).sorted_entries();
  for (int i = 0; i < 500; ++i) {
    const GroupElement x = small[rng.uniform_int(0, small.size() - 1)].first;
    const GroupElement y = small[rng.uniform_int(0, small.size() - 1)].first;
    const GroupElement g = small[rng.uniform_int(0, small.size() - 1)].first;
    auto base = big.distance(mul(inv(x), y));
    auto shifted = big.distance(mul(inv(mul(g, x)), mul(g, y)));
    REQUIRE(base.has_value());
    REQUIRE(shifted.has_value());
    CHECK(*base == *shifted);
  }
}

TEST_CASE("layer sizes reproducible") {
  Ball b1 = ball(10);
  Ball b2 = ball(10);
  CHECK(b1.layer_sizes() == b2.layer_sizes());
  CHECK(b1.size() == b2.size());
}

TEST_CASE("growth report") {
  GrowthReport rep = growth_report(1, 8);
  CHECK(rep.sizes.front() == 5);
  CHECK(rep.sizes[1] == 17);
  for (size_t i = 1; i < rep.sizes.size(); ++i) {
    CHECK(rep.sizes[i] > rep.sizes[i - 1]);
  }
  GrowthReport wide = growth_report(8, 16);
  CHECK(wide.slope > 3.5);
  CHECK(wide.slope < 4.5);
  CHECK_THROWS_AS(growth_report(5, 5), std::invalid_argument);
}

TEST_CASE("central profile") {
  auto profile = central_profile(16);
  CHECK(profile[0] == 4);   // d(c) = 4
  CHECK(profile[3] == 8);   // d(c^4) = 8
  CHECK(profile[8] == 12);  // d(c^9) = 12
  CHECK(profile[15] == 16);

  // Oracle: every value must match a direct targeted search.
  for (int k = 1; k <= 16; ++k) {
    CHECK(dist(pow(gen_c(), k), 40) == profile[k - 1]);
  }

  // Triangle bound |profile[k+j^2] - profile[k]| <= 4j.
  auto prof = central_profile(60);
  for (int k = 1; k <= 40; ++k) {
    for (int j = 1; j * j + k <= 60; ++j) {
      CHECK(std::abs(prof[k + j * j - 1] - prof[k - 1]) <= 4 * j);
    }
  }
}

TEST_CASE("central profile sqrt window") {
  auto prof = central_profile(400);
  double lo = 1e9, hi = 0;
  for (int k = 16; k <= 400; ++k) {
    double ratio = prof[k - 1] / std::sqrt(static_cast<double>(k));
    lo = std::min(lo, ratio);
    hi = std::max(hi, ratio);
  }
  CHECK(hi / lo <= 3.0);
}

TEST_CASE("csv dump is sorted and complete") {
  Ball b = ball(2);
  std::ostringstream out;
  write_ball_csv(b, out);
  std::istringstream in(out.str());
  std::string line;
  std::getline(in, line);
  CHECK(line == "x,y,z,dist");
  int rows = 0;
  int last_dist = -1;
  while (std::getline(in, line)) {
    ++rows;
    auto comma = line.rfind(',');
    int d = std::stoi(line.substr(comma + 1));
    CHECK(d >= last_dist);
    last_dist = d;
  }
  CHECK(rows == 17);
}

TEST_CASE("memory budget rejects runaway radii") {
  // The up-front estimate for ball(220) exceeds the default 8 GiB budget.
  CHECK_THROWS_AS(ball(220), BudgetExceeded);
  CHECK_THROWS_AS(ball(-1), std::invalid_argument);
  CHECK_THROWS_AS(ball(300), std::invalid_argument);

  setenv("HEIS_MEM_BUDGET", "100000", 1);
  CHECK_THROWS_AS(ball(40), BudgetExceeded);
  CHECK_THROWS_AS(dist(GroupElement{30, 30, 200}, 80), BudgetExceeded);
  unsetenv("HEIS_MEM_BUDGET");
  CHECK(ball(4).size() > 0);
}
