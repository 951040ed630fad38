#include <gtest/gtest.h>

#include <set>

#include "gexp/errors.hpp"
#include "gexp/rootdata.hpp"

using namespace gexp;

namespace {

Weight W(std::initializer_list<int> doubled) { return Weight(std::vector<int>(doubled)); }

struct Case {
  Family f;
  int n;
};

std::vector<Case> all_small() {
  return {{Family::A, 1}, {Family::A, 2}, {Family::A, 3}, {Family::B, 2}, {Family::B, 3}, {Family::B, 4},
          {Family::C, 2}, {Family::C, 3}, {Family::C, 4}, {Family::D, 3}, {Family::D, 4}, {Family::D, 5},
          {Family::G2, 2}};
}

}  // namespace

TEST(RootData, RhoExamples) {
  EXPECT_EQ(build_root_datum(Family::C, 3).rho, W({6, 4, 2}));
  EXPECT_EQ(build_root_datum(Family::B, 3).rho, W({5, 3, 1}));
  EXPECT_EQ(build_root_datum(Family::D, 4).rho, W({6, 4, 2, 0}));
}

TEST(RootData, RankPolicy) {
  EXPECT_THROW(build_root_datum(Family::B, 1), ConfigError);
  EXPECT_THROW(build_root_datum(Family::D, 2), ConfigError);
  EXPECT_THROW(build_root_datum(Family::G2, 3), ConfigError);
  EXPECT_NO_THROW(build_subsystem_datum(Family::B, 1));
  EXPECT_NO_THROW(build_subsystem_datum(Family::D, 2));
}

TEST(RootData, Invariants) {
  for (auto [f, n] : all_small()) {
    RootDatum d = build_root_datum(f, n);
    SCOPED_TRACE(d.name());
    std::size_t expected = 0;
    switch (f) {
      case Family::A: expected = static_cast<std::size_t>(n * (n + 1) / 2); break;
      case Family::B:
      case Family::C: expected = static_cast<std::size_t>(n * n); break;
      case Family::D: expected = static_cast<std::size_t>(n * (n - 1)); break;
      case Family::G2: expected = 6; break;
    }
    EXPECT_EQ(d.positive_roots.size(), expected);

    Weight sum = Weight::zero(static_cast<std::size_t>(d.dim));
    for (const auto& r : d.positive_roots) sum += r;
    EXPECT_EQ(d.canon(sum), d.canon(2 * d.rho));

    // rho is the sum of fundamental weights
    Weight fsum = Weight::zero(static_cast<std::size_t>(d.dim));
    for (const auto& w : d.fundamental_weights) fsum += w;
    EXPECT_EQ(d.canon(fsum), d.rho);

    // fundamental weights are dual to the simple coroots
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) EXPECT_EQ(d.simple_pairing(d.fundamental_weights[i], j), i == j ? 1 : 0);

    // theta is the unique dominant long root and dominates every positive root
    int dominant_long = 0;
    for (const auto& r : d.positive_roots) {
      auto c = d.simple_coords(d.canon(d.theta - r));
      ASSERT_TRUE(c.has_value());
      for (int x : *c) EXPECT_GE(x, 0);
      if (d.is_dominant(d.canon(r)) && d.form(r, r) == d.form(d.theta, d.theta)) ++dominant_long;
    }
    EXPECT_EQ(dominant_long, 1);
    if (d.theta_short) {
      int dominant_short = 0;
      for (const auto& r : d.positive_roots)
        if (d.is_dominant(r) && d.form(r, r) < d.form(d.theta, d.theta)) {
          ++dominant_short;
          EXPECT_EQ(r, *d.theta_short);
        }
      EXPECT_EQ(dominant_short, 1);
    }

    // every positive root has nonnegative simple coordinates; their sum of
    // simple coordinates of theta plus one is the Coxeter number
    auto ct = d.simple_coords(d.theta);
    int height = 0;
    for (int x : *ct) height += x;
    EXPECT_EQ(height + 1, d.coxeter_number);

    // sum of exponents = number of positive roots
    int esum = 0;
    for (int e : d.exponents) esum += e;
    EXPECT_EQ(static_cast<std::size_t>(esum), d.positive_roots.size());

    // orbit of a regular weight has |W| elements
    EXPECT_EQ(d.orbit(d.rho).size(), d.weyl_group_order());
  }
}

TEST(RootData, ExponentsBC) {
  EXPECT_EQ(build_root_datum(Family::B, 4).exponents, (std::vector<int>{1, 3, 5, 7}));
  EXPECT_EQ(build_root_datum(Family::C, 3).exponents, (std::vector<int>{1, 3, 5}));
  EXPECT_EQ(build_root_datum(Family::D, 4).exponents, (std::vector<int>{1, 3, 3, 5}));
}

TEST(RootData, RhoShort) {
  // B_n: short roots are e_i, so rho_s = (e_1 + ... + e_n)/2
  EXPECT_EQ(build_root_datum(Family::B, 3).rho_short, W({1, 1, 1}));
  // C_n: short roots e_i +- e_j, rho_s = (n-1, n-2, ..., 0)
  EXPECT_EQ(build_root_datum(Family::C, 3).rho_short, W({4, 2, 0}));
  EXPECT_EQ(build_root_datum(Family::G2, 2).rho_short, W({0, -2, 2}));
  EXPECT_EQ(build_root_datum(Family::D, 4).rho_short, build_root_datum(Family::D, 4).rho);
}

TEST(RootData, WeightFromFundamental) {
  EXPECT_EQ(weight_from_fundamental(build_root_datum(Family::C, 3), {0, 0, 2}), W({4, 4, 4}));
  EXPECT_EQ(weight_from_fundamental(build_root_datum(Family::B, 3), {4, 0, 2}), W({10, 2, 2}));
  EXPECT_EQ(weight_from_fundamental(build_root_datum(Family::B, 3), {0, 0, 2}), W({2, 2, 2}));
  EXPECT_THROW(weight_from_fundamental(build_root_datum(Family::B, 3), {1, 0}), ConfigError);
  RootDatum d4 = build_root_datum(Family::D, 4);
  EXPECT_EQ(weight_from_fundamental(d4, {0, 0, 1, 0}), W({1, 1, 1, -1}));
  EXPECT_FALSE(d4.is_dominant(weight_from_fundamental(d4, {1, -1, 0, 0})));
}

TEST(RootData, ReduceExamples) {
  RootDatum b6 = build_root_datum(Family::B, 6);
  auto r = reduce_to_dominant(b6, W({0, 0, -2, 2, 0, 0}));
  ASSERT_TRUE(r.has_value());
  EXPECT_TRUE(r->lambda.is_zero());
  EXPECT_EQ(r->sign, -1);

  RootDatum b2 = build_root_datum(Family::B, 2);
  EXPECT_FALSE(reduce_to_dominant(b2, W({-2, 0})).has_value());

  for (auto [f, n] : all_small()) {
    RootDatum d = build_root_datum(f, n);
    Weight lam = weight_from_fundamental(d, std::vector<int>(static_cast<std::size_t>(n), 1));
    auto rr = reduce_to_dominant(d, lam);
    ASSERT_TRUE(rr.has_value());
    EXPECT_EQ(rr->lambda, lam);
    EXPECT_EQ(rr->sign, 1);
  }
}

// Dot action: for every w reached by simple reflections, w.(lambda) = w(lambda+rho)-rho
// reduces back to lambda with sign (-1)^length, where length parity is tracked
// along the reflection word.
TEST(RootData, DotActionRoundTrip) {
  for (auto [f, n] : all_small()) {
    if (n > 3) continue;
    RootDatum d = build_root_datum(f, n);
    std::vector<std::vector<int>> coeffs = {std::vector<int>(static_cast<std::size_t>(n), 0),
                                            std::vector<int>(static_cast<std::size_t>(n), 1)};
    coeffs[1][0] = 2;
    for (const auto& c : coeffs) {
      Weight lam = weight_from_fundamental(d, c);
      Weight v = lam + d.rho;
      // breadth-first over the orbit of the regular vector v, remembering parity
      std::set<std::pair<Weight, int>> seen{{v, 1}};
      std::vector<std::pair<Weight, int>> frontier{{v, 1}};
      while (!frontier.empty()) {
        std::vector<std::pair<Weight, int>> next;
        for (const auto& [x, s] : frontier)
          for (int i = 0; i < n; ++i) {
            Weight y = d.simple_reflect(x, i);
            bool known = false;
            for (const auto& e : seen)
              if (e.first == y) known = true;
            if (!known) {
              seen.insert({y, -s});
              next.push_back({y, -s});
            }
          }
        frontier = std::move(next);
      }
      EXPECT_EQ(seen.size(), d.weyl_group_order());
      for (const auto& [x, s] : seen) {
        auto r = reduce_to_dominant(d, d.canon(x - d.rho));
        ASSERT_TRUE(r.has_value());
        EXPECT_EQ(r->lambda, lam);
        EXPECT_EQ(r->sign, s);
      }
    }
  }
}

TEST(RootData, SimpleCoords) {
  RootDatum c3 = build_root_datum(Family::C, 3);
  EXPECT_EQ(*c3.simple_coords(c3.theta), (std::vector<int>{2, 2, 1}));
  EXPECT_FALSE(c3.simple_coords(W({2, 0, 0})).has_value());
  RootDatum d4 = build_root_datum(Family::D, 4);
  EXPECT_EQ(*d4.simple_coords(d4.theta), (std::vector<int>{1, 2, 1, 1}));
  EXPECT_FALSE(d4.simple_coords(W({1, 1, 1, 1})).has_value());
  RootDatum g2 = build_root_datum(Family::G2, 2);
  EXPECT_EQ(*g2.simple_coords(g2.theta), (std::vector<int>{3, 2}));
  RootDatum b3 = build_root_datum(Family::B, 3);
  EXPECT_EQ(*b3.simple_coords(b3.theta), (std::vector<int>{1, 2, 2}));
  RootDatum a2 = build_root_datum(Family::A, 2);
  EXPECT_EQ(*a2.simple_coords(a2.theta), (std::vector<int>{1, 1}));
  EXPECT_FALSE(a2.simple_coords(a2.fundamental_weights[0]).has_value());
}

TEST(RootData, Labels) {
  RootDatum b3 = build_root_datum(Family::B, 3);
  EXPECT_EQ(b3.fundamental_label(weight_from_fundamental(b3, {4, 0, 2})), "4w1+2w3");
  EXPECT_EQ(b3.fundamental_label(Weight::zero(3)), "0");
  EXPECT_EQ(b3.rho.to_string(), "(5/2,3/2,1/2)");
}
