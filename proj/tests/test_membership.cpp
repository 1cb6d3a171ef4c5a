#include <doctest.h>

#include <random>

#include "sweep.hpp"
#include "wsg/gaps.hpp"
#include "wsg/maximal_elements.hpp"
#include "wsg/membership.hpp"
#include "wsg/numerical_semigroup.hpp"

using namespace wsg;

namespace {

using V = PointVector;

// Absolute maximal elements with shifts in [-2, 2]^m.
std::vector<PointVector> absolute_sample(const DerivedConstants& dc, std::int64_t m) {
  std::vector<PointVector> out;
  std::vector<std::int64_t> k(m, -2);
  while (true) {
    out.push_back(realize(dc, m, MaximalElement::translation(k)));
    for (const auto ip : index_pairs(dc)) out.push_back(realize(dc, m, MaximalElement::absolute(ip, k)));
    std::int64_t t = 0;
    while (t < m && k[t] == 2) k[t++] = -2;
    if (t == m) break;
    ++k[t];
  }
  return out;
}

}  // namespace

TEST_CASE("lub") {
  CHECK(lub(std::vector<V>{{-9, 9}, {0, 0}}) == V{0, 9});
  CHECK(lub(std::vector<V>{{19, 1}, {1, 19}}) == V{19, 19});
  CHECK(lub(std::vector<V>{{4, -2, 7}}) == V{4, -2, 7});
  CHECK_THROWS_AS(lub(std::vector<V>{}), Error);
  CHECK_THROWS_AS(lub(std::vector<V>{{1, 2}, {1, 2, 3}}), Error);
}

TEST_CASE("coordinate witnesses") {
  const auto ys = make_y(2, 3, 1);
  auto w = coordinate_witness(ys, 1, V{0, 9}, 1);
  REQUIRE(w.has_value());
  CHECK(w->kind == MaximalElement::Kind::Translation);
  CHECK(w->shifts == std::vector<std::int64_t>{1});
  CHECK(realize(ys, 1, *w) == V{-9, 9});

  CHECK_FALSE(coordinate_witness(ys, 1, V{1, 1}, 1).has_value());
  CHECK_FALSE(coordinate_witness(make_x(2, 1, 1, 3, 1), 1, V{2, 0}, 0).has_value());

  w = coordinate_witness(ys, 1, V{19, 1}, 0);
  REQUIRE(w.has_value());
  CHECK(realize(ys, 1, *w) == V{19, 1});

  CHECK_THROWS_AS(coordinate_witness(ys, 1, V{1, 1, 1}, 0), Error);
  CHECK_THROWS_AS(coordinate_witness(ys, 3, V{1, 1, 1, 1}, 0), Error);
}

TEST_CASE("membership verdicts") {
  const auto ys = make_y(2, 3, 1);
  auto verdict = in_generalized_semigroup(ys, 1, V{19, 1});
  CHECK(verdict.member);
  CHECK(verdict.witnesses.size() == 2);
  CHECK_FALSE(verdict.failing_coordinate.has_value());

  verdict = in_generalized_semigroup(ys, 1, V{1, 1});
  CHECK_FALSE(verdict.member);
  REQUIRE(verdict.failing_coordinate.has_value());
  CHECK(*verdict.failing_coordinate == 1);

  CHECK(in_weierstrass_semigroup(ys, 1, V{0, 9}));
  CHECK_FALSE(in_weierstrass_semigroup(ys, 1, V{1, 1}));
  CHECK_FALSE(in_weierstrass_semigroup(ys, 1, V{-9, 9}));
  CHECK(in_generalized_semigroup(ys, 1, V{-9, 9}).member);

  for (const auto& dc : testing::sweep())
    for (std::int64_t m = 1; m <= dc.max_m; ++m) {
      CHECK(in_generalized_semigroup(dc, m, V(m + 1)).member);
      V big(m + 1);
      big[0] = dc.frobenius + 1;
      CHECK(in_weierstrass_semigroup(dc, m, big));
    }
}

TEST_CASE("witnesses are dominated and agree at their coordinate") {
  for (const auto& dc : testing::sweep_with_genus_at_most(60))
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(dc.max_m, 2); ++m) {
      const GeneralizedSemigroup hs(dc, m);
      for_each_in_simplex(m + 1, 2 * dc.genus, [&](const PointVector& alpha) {
        for (std::size_t r = 0; r <= static_cast<std::size_t>(m); ++r) {
          const auto w = hs.witness(alpha, r);
          if (!w) continue;
          const auto gamma = realize(dc, m, *w);
          REQUIRE(gamma[r] == alpha[r]);
          REQUIRE(gamma.dominated_by(alpha));
        }
        const auto verdict = hs.test(alpha);
        if (verdict.member) {
          std::vector<PointVector> ws;
          for (const auto& w : verdict.witnesses) ws.push_back(realize(dc, m, w));
          REQUIRE(lub(ws) == alpha);
        }
      });
    }
}

TEST_CASE("soundness: absolute maximal elements are members and their own witnesses") {
  for (const auto& dc : testing::sweep_with_genus_at_most(60))
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(dc.max_m, 2); ++m) {
      const GeneralizedSemigroup hs(dc, m);
      for (const auto& gamma : absolute_sample(dc, m)) {
        const auto verdict = hs.test(gamma);
        REQUIRE(verdict.member);
        for (const auto& w : verdict.witnesses) REQUIRE(realize(dc, m, w) == gamma);
      }
    }
}

TEST_CASE("additive and lub closure of members") {
  std::mt19937_64 rng(20261018);
  for (const auto& dc : testing::sweep_with_genus_at_most(60))
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(dc.max_m, 2); ++m) {
      const GeneralizedSemigroup hs(dc, m);
      const auto sample = absolute_sample(dc, m);
      std::uniform_int_distribution<std::size_t> pick(0, sample.size() - 1);
      for (int trial = 0; trial < 400; ++trial) {
        const auto& a = sample[pick(rng)];
        const auto& b = sample[pick(rng)];
        V sum(a.size());
        for (std::size_t k = 0; k < a.size(); ++k) sum[k] = a[k] + b[k];
        REQUIRE(hs.contains(sum));
        const std::vector<V> pair{a, b};
        REQUIRE(hs.contains(lub(pair)));
      }
    }
}

TEST_CASE("every nonnegative vector of degree at least 2g is a member") {
  for (const auto& dc : testing::sweep_with_genus_at_most(60))
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(dc.max_m, 2); ++m) {
      const GeneralizedSemigroup hs(dc, m);
      for_each_in_simplex(m + 1, 2 * dc.genus + 2, [&](const PointVector& alpha) {
        if (alpha.degree() >= 2 * dc.genus) REQUIRE(hs.contains_classical(alpha));
      });
    }
}

TEST_CASE("the first axis is the one-point semigroup") {
  for (const auto& dc : testing::sweep())
    for (std::int64_t m = 1; m <= std::min<std::int64_t>(dc.max_m, 2); ++m) {
      const auto ns = NumericalSemigroup::from_generators(dc.generators());
      const GeneralizedSemigroup hs(dc, m);
      for (std::int64_t x = 0; x <= 2 * dc.genus; ++x) {
        V alpha(m + 1);
        alpha[0] = x;
        REQUIRE(hs.contains(alpha) == ns.contains(x));
      }
    }
}

TEST_CASE("gaps at the first affine point") {
  CHECK(one_point_gaps_at_affine_point(make_x(2, 1, 1, 3, 1)) == std::vector<std::int64_t>{1, 2, 4});
  CHECK(one_point_gaps_at_affine_point(make_y(2, 3, 1)) == std::vector<std::int64_t>{1, 2, 3, 4, 5, 7, 10, 11, 13, 19});
  CHECK(one_point_gaps_at_affine_point(make_y(2, 3, 3)).size() == 1);
  for (const auto& dc : testing::sweep())
    CHECK(static_cast<std::int64_t>(one_point_gaps_at_affine_point(dc).size()) == dc.genus);
}

TEST_CASE("dropping the translation family loses members") {
  const auto ys = make_y(2, 3, 1);
  const GeneralizedSemigroup crippled(ys, 1, FamilySelection{true, false});
  CHECK_FALSE(crippled.contains(V{-9, 9}));
  CHECK_FALSE(crippled.contains(V{0, 9}));
  CHECK(crippled.contains(V{19, 1}));
}
