#include "chowlab/errors.hpp"
#include "chowlab/invariant.hpp"
#include "chowlab/linalg.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace chowlab;

namespace {

AlgebraPresentation ab_ring(Coefficients ring) { return swap_polynomial_ring(0, 1, ring, 4).ring; }

}  // namespace

TEST(SpanMembership, IntegerHandExamples) {
  const auto a = ab_ring(Coefficients::Z);
  const std::vector<Element> span{parse_element(a, "a1^2 + b1^2"), parse_element(a, "2*a1*b1")};
  const auto yes = span_membership(a, parse_element(a, "2*a1*b1"), span);
  EXPECT_TRUE(yes.member);
  ASSERT_EQ(yes.coefficients.size(), 2u);
  EXPECT_EQ(yes.coefficients[0], 0);
  EXPECT_EQ(yes.coefficients[1], 1);
  EXPECT_FALSE(span_membership(a, parse_element(a, "a1*b1"), span).member);
  // Over F2 the second spanner vanishes and a1*b1 stays outside.
  const auto f = ab_ring(Coefficients::F2);
  EXPECT_FALSE(span_membership(f, parse_element(f, "a1*b1"), {parse_element(f, "a1^2 + b1^2")}).member);
}

TEST(SpanMembership, ZeroTarget) {
  const auto a = ab_ring(Coefficients::Z);
  const auto r = span_membership(a, a.zero(), {parse_element(a, "a1"), parse_element(a, "b1")});
  EXPECT_TRUE(r.member);
  for (const auto& c : r.coefficients) EXPECT_EQ(c, 0);
}

TEST(SpanMembership, MixedDegreesRejected) {
  const auto a = ab_ring(Coefficients::Z);
  EXPECT_THROW(span_membership(a, parse_element(a, "a1"), {parse_element(a, "a1^2")}), UsageError);
  EXPECT_THROW(span_membership(a, parse_element(a, "a1 + a1^2"), {}), UsageError);
}

TEST(SpanMembership, CoefficientsReconstructTarget) {
  const auto a = swap_polynomial_ring(0, 2, Coefficients::Z, 4).ring;
  std::mt19937 rng(3);
  const auto basis = degree_basis(a, 3).monomials;
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Element> spanners;
    Element target;
    for (int s = 0; s < 4; ++s) {
      Element x;
      for (int t = 0; t < 3; ++t) x.add_term(basis[rng() % basis.size()], static_cast<int>(rng() % 7) - 3, Coefficients::Z);
      spanners.push_back(x);
      target = a.add(target, a.scale(x, static_cast<int>(rng() % 5) - 2));
    }
    const auto r = span_membership(a, target, spanners);
    ASSERT_TRUE(r.member);
    Element back;
    for (std::size_t i = 0; i < spanners.size(); ++i) back = a.add(back, a.scale(spanners[i], r.coefficients[i]));
    EXPECT_EQ(back, target);
  }
}

// Rank over F2 against the size of the span found by listing all subset sums.
TEST(Echelon, F2RankMatchesSpanSize) {
  std::mt19937 rng(17);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t cols = 1 + rng() % 9, rows = 1 + rng() % 7;
    Echelon e(Coefficients::F2, cols);
    std::vector<std::uint32_t> masks;
    for (std::size_t r = 0; r < rows; ++r) {
      std::uint32_t mask = rng() & ((1u << cols) - 1);
      SparseVector v;
      for (std::size_t c = 0; c < cols; ++c)
        if (mask >> c & 1) v.push_back({c, 1});
      e.insert(v);
      masks.push_back(mask);
    }
    std::set<std::uint32_t> span;
    for (std::uint32_t s = 0; s < (1u << rows); ++s) {
      std::uint32_t x = 0;
      for (std::size_t r = 0; r < rows; ++r)
        if (s >> r & 1) x ^= masks[r];
      span.insert(x);
    }
    EXPECT_EQ(std::size_t{1} << e.rank(), span.size());
  }
}

TEST(Echelon, IntegerRelationsVanish) {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t cols = 2 + rng() % 3, rows = 2 + rng() % 4;
    Echelon e(Coefficients::Z, cols, rows);
    std::vector<std::vector<int>> dense(rows, std::vector<int>(cols));
    for (std::size_t r = 0; r < rows; ++r) {
      SparseVector v;
      for (std::size_t c = 0; c < cols; ++c) {
        dense[r][c] = static_cast<int>(rng() % 7) - 3;
        if (dense[r][c] != 0) v.push_back({c, dense[r][c]});
      }
      e.insert(v, r);
    }
    EXPECT_EQ(e.rank() + e.relations().size(), rows);
    for (const auto& rel : e.relations()) {
      EXPECT_FALSE(rel.empty());
      for (std::size_t c = 0; c < cols; ++c) {
        Integer s = 0;
        for (const auto& [r, k] : rel) s += k * dense[r][c];
        EXPECT_EQ(s, 0);
      }
    }
  }
}

TEST(Echelon, IntegerLatticeNotSpan) {
  Echelon e(Coefficients::Z, 1);
  e.insert({{0, 2}});
  EXPECT_FALSE(e.contains({{0, 1}}));
  EXPECT_TRUE(e.contains({{0, 6}}));
  e.insert({{0, 3}});
  EXPECT_TRUE(e.contains({{0, 1}}));
}

TEST(ExtendedGcd, Bezout) {
  std::mt19937 rng(31);
  for (int i = 0; i < 100; ++i) {
    const Integer a = static_cast<int>(rng() % 2001) - 1000, b = static_cast<int>(rng() % 2001) - 1000;
    Integer s, t;
    const Integer g = extended_gcd(a, b, s, t);
    EXPECT_GE(g, 0);
    EXPECT_EQ(s * a + t * b, g);
    if (g != 0) {
      EXPECT_EQ(a % g, 0);
      EXPECT_EQ(b % g, 0);
    }
  }
}
