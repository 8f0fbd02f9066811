#include "chowlab/errors.hpp"
#include "chowlab/invariant.hpp"
#include "chowlab/linalg.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace chowlab;

namespace {

std::set<std::string> formatted(const AlgebraPresentation& a, const std::vector<Element>& xs) {
  std::set<std::string> out;
  for (const auto& x : xs) out.insert(format(a, x));
  return out;
}

// Number of monomials of degree d in v variables.
std::size_t monomial_count(std::size_t v, std::uint32_t d) {
  if (v == 0) return d == 0 ? 1 : 0;
  std::size_t out = 0;
  for (std::uint32_t k = 0; k <= d; ++k) out += monomial_count(v - 1, d - k);
  return out;
}

// Degree d lattice spanned by `xs` equals the lattice spanned by `ys`.
bool same_span(const AlgebraPresentation& a, const std::vector<Element>& xs, const std::vector<Element>& ys) {
  for (const auto& x : xs)
    if (!span_membership(a, x, ys).member) return false;
  for (const auto& y : ys)
    if (!span_membership(a, y, xs).member) return false;
  return true;
}

}  // namespace

TEST(InvariantBasis, HandExamples) {
  const auto [a, sigma] = swap_polynomial_ring(0, 1, Coefficients::Z, 6);
  EXPECT_EQ(formatted(a, invariant_basis(sigma, a, 1)), formatted(a, {parse_element(a, "a1 + b1")}));
  EXPECT_EQ(formatted(a, invariant_basis(sigma, a, 2)),
            formatted(a, {parse_element(a, "a1*b1"), parse_element(a, "a1^2 + b1^2")}));
  const auto [t, tau] = swap_polynomial_ring(1, 0, Coefficients::Z, 6);
  for (std::uint32_t d = 0; d <= 6; ++d) {
    const auto basis = invariant_basis(tau, t, d);
    ASSERT_EQ(basis.size(), 1u);
    EXPECT_EQ(basis[0], t.power(t.generator_element("t"), d));
  }
}

TEST(InvariantBasis, OrbitCounting) {
  for (std::uint32_t k = 0; k <= 1; ++k)
    for (std::uint32_t r = 0; r <= 3; ++r) {
      const auto [a, sigma] = swap_polynomial_ring(k, r, Coefficients::Z, 6);
      for (std::uint32_t d = 0; d <= 6; ++d) {
        const std::size_t total = monomial_count(k + 2 * r, d);
        // Fixed monomials have equal a_i and b_i exponents.
        std::size_t fixed = 0;
        for (std::uint32_t s = 0; 2 * s <= d; ++s) fixed += monomial_count(k, d - 2 * s) * monomial_count(r, s);
        EXPECT_EQ(invariant_basis(sigma, a, d).size(), fixed + (total - fixed) / 2) << k << " " << r << " " << d;
      }
    }
}

TEST(NormImage, HandExamples) {
  const auto [z, sz] = swap_polynomial_ring(0, 1, Coefficients::Z, 6);
  EXPECT_TRUE(same_span(z, norm_image_basis(sz, z, 2),
                        {parse_element(z, "a1^2 + b1^2"), parse_element(z, "2*a1*b1")}));
  EXPECT_TRUE(same_span(z, norm_image_basis(sz, z, 0), {z.constant(2)}));
  const auto [f, sf] = swap_polynomial_ring(0, 1, Coefficients::F2, 6);
  EXPECT_TRUE(same_span(f, norm_image_basis(sf, f, 2), {parse_element(f, "a1^2 + b1^2")}));
}

TEST(NormImage, InsideInvariantsAndAnIdeal) {
  std::mt19937 rng(41);
  for (auto ring : {Coefficients::Z, Coefficients::F2}) {
    const auto [a, sigma] = swap_polynomial_ring(1, 2, ring, 6);
    for (std::uint32_t d = 0; d <= 6; ++d) {
      const auto inv = invariant_basis(sigma, a, d);
      const auto norms = norm_image_basis(sigma, a, d);
      for (const auto& x : inv) EXPECT_EQ(sigma.apply(a, x), x);
      for (const auto& nu : norms) EXPECT_TRUE(span_membership(a, nu, inv).member);
    }
    for (int trial = 0; trial < 20; ++trial) {
      const std::uint32_t dx = rng() % 3, dn = 1 + rng() % 3;
      const auto inv = invariant_basis(sigma, a, dx);
      const auto norms = norm_image_basis(sigma, a, dn);
      if (inv.empty() || norms.empty()) continue;
      const Element prod = a.multiply(inv[rng() % inv.size()], norms[rng() % norms.size()]);
      EXPECT_TRUE(span_membership(a, prod, norm_image_basis(sigma, a, dx + dn)).member);
    }
  }
}

TEST(SwapInvolution, InvolutiveAndMultiplicative) {
  std::mt19937 rng(43);
  for (auto ring : {Coefficients::Z, Coefficients::F2}) {
    const auto [a, sigma] = swap_polynomial_ring(1, 3, ring, 6);
    for (int i = 0; i < 30; ++i) {
      const Element x = chowlab::testing::random_element(a, rng, 3);
      const Element y = chowlab::testing::random_element(a, rng, 3);
      EXPECT_EQ(sigma.apply(a, sigma.apply(a, x)), x);
      EXPECT_EQ(sigma.apply(a, a.multiply(x, y)), a.multiply(sigma.apply(a, x), sigma.apply(a, y)));
    }
  }
}

TEST(SwapInvolution, MustPartitionGenerators) {
  const auto [a, sigma] = swap_polynomial_ring(1, 1, Coefficients::Z, 4);
  EXPECT_THROW(SwapInvolution({{"a1", "b1"}}, {}).permutation(a), ConfigurationError);
  EXPECT_THROW(SwapInvolution({{"a1", "b1"}}, {"zz"}).permutation(a), Error);
}

TEST(QuotientGeneration, LemmaSInstances) {
  for (auto ring : {Coefficients::Z, Coefficients::F2})
    for (std::uint32_t r = 0; r <= 3; ++r) {
      const auto [a, sigma] = swap_polynomial_ring(0, r, ring, 6);
      std::vector<Element> gens;
      for (std::uint32_t i = 1; i <= r; ++i)
        gens.push_back(parse_element(a, "a" + std::to_string(i) + "*b" + std::to_string(i)));
      EXPECT_TRUE(quotient_generation_check(sigma, a, gens, 6).pass) << "r=" << r;
    }
}

TEST(QuotientGeneration, EmptyGeneratorsFailWithWitness) {
  const auto [a, sigma] = swap_polynomial_ring(0, 1, Coefficients::Z, 6);
  const auto rep = quotient_generation_check(sigma, a, {}, 2);
  EXPECT_FALSE(rep.pass);
  ASSERT_EQ(rep.degrees.size(), 3u);
  EXPECT_TRUE(rep.degrees[0].pass);
  EXPECT_TRUE(rep.degrees[1].pass);
  ASSERT_FALSE(rep.degrees[2].pass);
  ASSERT_TRUE(rep.degrees[2].witness.has_value());
  EXPECT_EQ(format(a, *rep.degrees[2].witness), "a1*b1");
}

TEST(QuotientGeneration, CodimTwoInstances) {
  EXPECT_TRUE(codim_le2_generation_check(0, 3, 6).pass);
  EXPECT_TRUE(codim_le2_generation_check(1, 2, 6).pass);
  EXPECT_TRUE(codim_le2_generation_check(0, 0, 6).pass);
  EXPECT_TRUE(codim_le2_generation_check(1, 3, 6, Coefficients::F2).pass);
}

TEST(QuotientGeneration, RemarkWitness) {
  const auto w = non_generation_witness();
  EXPECT_FALSE(w.p_in_low_degree_subring);
  EXPECT_TRUE(w.twice_p_in_low_degree_subring);
  EXPECT_TRUE(w.twice_p_in_norm_image);
  EXPECT_TRUE(w.p_in_norm_image);
  EXPECT_EQ(w.p, parse_element(w.ring, "a1*a2*a3 + b1*b2*b3"));
}
