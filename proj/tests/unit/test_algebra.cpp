#include "chowlab/algebra.hpp"
#include "chowlab/errors.hpp"
#include "chowlab/grassmann.hpp"
#include "chowlab/invariant.hpp"
#include "chowlab/json_io.hpp"
#include "chowlab/weil.hpp"

#include "helpers.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace chowlab;
using chowlab::testing::random_element;
using chowlab::testing::random_homogeneous;

namespace {

Element el(const AlgebraPresentation& a, const char* text) { return parse_element(a, text); }

// Every exponent vector of degree d allowed by the power bounds, found by
// brute-force recursion over the generators.
std::set<Exponents> enumerate_normal(const AlgebraPresentation& a, std::uint32_t d) {
  std::set<Exponents> out;
  if (a.truncation() && d > *a.truncation()) return out;
  Exponents e(a.num_generators(), 0);
  auto rec = [&](auto&& self, std::size_t i, std::uint32_t left) -> void {
    if (i == e.size()) {
      if (left == 0) out.insert(e);
      return;
    }
    const auto& g = a.generator(i);
    for (std::uint32_t k = 0; k * g.degree <= left; ++k) {
      if (g.power_bound && k >= *g.power_bound) break;
      e[i] = k;
      self(self, i + 1, left - k * g.degree);
    }
    e[i] = 0;
  };
  rec(rec, 0, d);
  return out;
}

std::vector<AlgebraPresentation> shipped(Coefficients ring) {
  std::vector<AlgebraPresentation> out;
  out.push_back(max_orth_ring(4));
  out.push_back(max_orth_ring(6));
  out.push_back(prev_max_orth_ring(2).ring);
  out.push_back(odd_norm_quotient_model(2));
  out.push_back(build_double_bundle(2, ring, 8).ring);
  out.push_back(swap_polynomial_ring(1, 2, ring, 6).ring);
  return out;
}

}  // namespace

TEST(NormalForm, MaxOrthSquares) {
  const auto a = max_orth_ring(4);
  EXPECT_EQ(a.normal_form(std::map<std::string, std::uint32_t>{{"e1", 2}}), el(a, "e2"));
  EXPECT_TRUE(a.normal_form(std::map<std::string, std::uint32_t>{{"e3", 2}}).is_zero());
  EXPECT_EQ(a.normal_form(std::map<std::string, std::uint32_t>{{"e3", 1}}), el(a, "e3"));
  // e1^4 = e2^2 = e4 = 0 in N = 4
  EXPECT_TRUE(a.normal_form(std::map<std::string, std::uint32_t>{{"e1", 4}}).is_zero());
  EXPECT_EQ(a.normal_form(std::map<std::string, std::uint32_t>{{"e1", 3}}), el(a, "e1*e2"));
}

TEST(NormalForm, UnknownGeneratorRejected) {
  const auto a = max_orth_ring(4);
  EXPECT_THROW(a.normal_form(std::map<std::string, std::uint32_t>{{"e9", 1}}), PresentationError);
  EXPECT_THROW(a.generator_element("x"), PresentationError);
}

TEST(Multiply, HandExamples) {
  const auto a = max_orth_ring(4);
  const Element e1 = el(a, "e1");
  EXPECT_EQ(a.multiply(e1, a.one()), e1);
  EXPECT_EQ(a.multiply(e1, e1), el(a, "e2"));
  EXPECT_EQ(a.multiply(el(a, "e1 + e2"), e1), el(a, "e2 + e1*e2"));
  EXPECT_TRUE(a.multiply(el(a, "e2"), el(a, "e2")).is_zero());
}

TEST(Multiply, F2CoefficientsAreOne) {
  const auto a = max_orth_ring(5);
  std::mt19937 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Element x = a.multiply(random_element(a, rng, 6), random_element(a, rng, 6));
    for (const auto& [m, c] : x.terms()) EXPECT_EQ(c, 1);
  }
}

TEST(DegreeBasis, HandExamples) {
  const auto a = max_orth_ring(4);
  const auto b3 = degree_basis(a, 3);
  ASSERT_EQ(b3.monomials.size(), 2u);
  std::set<std::string> names;
  for (const auto& m : b3.monomials) names.insert(format(a, a.monomial_element(m)));
  EXPECT_EQ(names, (std::set<std::string>{"e3", "e1*e2"}));
  const auto b6 = degree_basis(a, 6);
  ASSERT_EQ(b6.monomials.size(), 1u);
  EXPECT_EQ(format(a, a.monomial_element(b6.monomials[0])), "e1*e2*e3");
  EXPECT_EQ(degree_basis(a, 0).monomials.size(), 1u);
  EXPECT_TRUE(degree_basis(a, 7).monomials.empty());
}

TEST(DegreeBasis, MatchesExhaustiveEnumeration) {
  for (auto ring : {Coefficients::Z, Coefficients::F2})
    for (const auto& a : shipped(ring))
      for (std::uint32_t d = 0; d <= 10; ++d) {
        const auto basis = degree_basis(a, d);
        std::set<Exponents> got;
        for (const auto& m : basis.monomials) {
          EXPECT_EQ(m.degree, d);
          EXPECT_TRUE(a.is_normal(m.exponents));
          got.insert(m.exponents);
        }
        EXPECT_EQ(got.size(), basis.monomials.size()) << "duplicates in degree " << d;
        EXPECT_EQ(got, enumerate_normal(a, d)) << "degree " << d;
        EXPECT_TRUE(std::is_sorted(basis.monomials.begin(), basis.monomials.end()));
      }
}

TEST(Poincare, MaxOrth) {
  EXPECT_EQ(poincare(max_orth_ring(4)), (PoincarePolynomial{1, 1, 1, 2, 1, 1, 1}));
  EXPECT_EQ(poincare(max_orth_ring(6)).rank(), 32);
  EXPECT_EQ(poincare(max_orth_ring(4)), PoincarePolynomial::exterior({1, 2, 3}));
}

TEST(Poincare, DualityOfMaxOrth) {
  for (std::uint32_t N = 1; N <= 8; ++N) {
    const auto p = poincare(max_orth_ring(N));
    const long D = static_cast<long>(N * (N - 1) / 2);
    EXPECT_EQ(p.degree(), D);
    EXPECT_EQ(p.rank(), std::int64_t{1} << (N - 1));
    for (long d = 0; d <= D; ++d)
      EXPECT_EQ(p[static_cast<std::size_t>(d)], p[static_cast<std::size_t>(D - d)]) << "N=" << N << " d=" << d;
  }
}

TEST(Poincare, EmptyPresentation) {
  const AlgebraPresentation a({}, Coefficients::Z, std::nullopt);
  EXPECT_EQ(poincare(a), PoincarePolynomial{1});
}

TEST(Presentation, ValidationErrors) {
  // Unbounded generator without truncation has infinite bases.
  EXPECT_THROW(AlgebraPresentation({{"x", 1, std::nullopt, {}}}, Coefficients::Z, std::nullopt), ConfigurationError);
  EXPECT_THROW(AlgebraPresentation({{"x", 1, 2, {}}, {"x", 2, 2, {}}}, Coefficients::Z, std::nullopt),
               PresentationError);
  // x^2 -> y with deg y = 3 is not homogeneous.
  EXPECT_THROW(AlgebraPresentation({{"x", 1, 2, {{1, {0, 1}}}}, {"y", 3, 2, {}}}, Coefficients::Z, std::nullopt),
               PresentationError);
  // x^2 -> x^2 does not terminate.
  EXPECT_THROW(AlgebraPresentation({{"x", 1, 2, {{1, {2}}}}}, Coefficients::Z, std::nullopt), PresentationError);
}

TEST(Truncation, ProjectsToZero) {
  const auto [a, sigma] = swap_polynomial_ring(0, 1, Coefficients::Z, 3);
  const Element x = el(a, "a1^2");
  EXPECT_TRUE(a.multiply(x, x).is_zero());
  EXPECT_FALSE(a.multiply(x, el(a, "b1")).is_zero());
}

class RingAxioms : public ::testing::TestWithParam<Coefficients> {};

TEST_P(RingAxioms, AssociativeCommutativeDistributive) {
  std::mt19937 rng(2024);
  for (const auto& a : shipped(GetParam())) {
    const std::uint32_t top = std::min<std::uint32_t>(a.top_degree(), 6);
    for (int i = 0; i < 25; ++i) {
      const Element x = random_element(a, rng, top);
      const Element y = random_element(a, rng, top);
      const Element z = random_element(a, rng, top);
      EXPECT_EQ(a.multiply(a.multiply(x, y), z), a.multiply(x, a.multiply(y, z)));
      EXPECT_EQ(a.multiply(x, y), a.multiply(y, x));
      EXPECT_EQ(a.multiply(x, a.add(y, z)), a.add(a.multiply(x, y), a.multiply(x, z)));
    }
  }
}

TEST_P(RingAxioms, DegreeAdditivity) {
  std::mt19937 rng(99);
  for (const auto& a : shipped(GetParam())) {
    for (int i = 0; i < 25; ++i) {
      const std::uint32_t dx = rng() % 4, dy = rng() % 4;
      const Element p = a.multiply(random_homogeneous(a, rng, dx), random_homogeneous(a, rng, dy));
      for (const auto& [m, c] : p.terms()) EXPECT_EQ(m.degree, dx + dy);
    }
  }
}

TEST_P(RingAxioms, RewritingTerminatesInNormalForm) {
  std::mt19937 rng(5);
  for (const auto& a : shipped(GetParam())) {
    for (int i = 0; i < 40; ++i) {
      Exponents raw(a.num_generators());
      for (auto& e : raw) e = rng() % 4;
      const Element nf = a.normal_form(raw);
      for (const auto& [m, c] : nf.terms()) EXPECT_TRUE(a.is_normal(m.exponents));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Coefficients, RingAxioms, ::testing::Values(Coefficients::Z, Coefficients::F2));

TEST(Json, PresentationRoundTrip) {
  for (const auto& a : shipped(Coefficients::Z)) {
    const auto j = to_json(a);
    const auto b = presentation_from_json(j);
    EXPECT_EQ(to_json(b), j);
    EXPECT_EQ(poincare(a), poincare(b));
  }
}

TEST(Json, ElementRoundTrip) {
  std::mt19937 rng(11);
  const auto R = build_double_bundle(2, Coefficients::Z, 8);
  for (int i = 0; i < 20; ++i) {
    const Element x = random_element(R.ring, rng, 5);
    EXPECT_EQ(element_from_json(R.ring, to_json(R.ring, x)), x);
    EXPECT_EQ(parse_element(R.ring, format(R.ring, x)), x);
  }
}

TEST(Json, MalformedPresentation) {
  EXPECT_THROW(presentation_from_json(nlohmann::json::parse(R"({"coefficients":"Q","generators":[]})")), Error);
  EXPECT_THROW(parse_element(max_orth_ring(3), "e1 +"), UsageError);
}
