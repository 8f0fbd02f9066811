#include "chowlab/errors.hpp"
#include "chowlab/finite_field.hpp"
#include "chowlab/motive.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

using namespace chowlab;

namespace {

// All vectors of K^n, visited as flat index tuples.
template <class F>
void for_each_vector(std::uint32_t q, std::size_t n, F&& f) {
  std::vector<std::uint32_t> v(n, 0);
  while (true) {
    f(v);
    std::size_t i = 0;
    while (i < n && ++v[i] == q) v[i++] = 0;
    if (i == n) return;
  }
}

bool nonzero(const std::vector<std::uint32_t>& v) {
  for (auto x : v)
    if (x) return true;
  return false;
}

}  // namespace

TEST(PrimeField, Arithmetic) {
  EXPECT_THROW(PrimeField(4), DomainError);
  EXPECT_THROW(PrimeField(257), DomainError);
  for (std::uint32_t p : {2u, 3u, 5u, 7u}) {
    const PrimeField F(p);
    for (std::uint32_t x = 1; x < p; ++x) EXPECT_EQ(F.mul(x, F.inv(x)), 1u);
    EXPECT_THROW(F.inv(0), DomainError);
    std::uint32_t squares = 0;
    for (std::uint32_t x = 1; x < p; ++x) squares += F.is_square(x);
    EXPECT_EQ(squares, p == 2 ? 1 : (p - 1) / 2);
  }
}

TEST(QuadExtField, ConjugationAndNorm) {
  for (std::uint32_t p : {2u, 3u, 5u}) {
    const QuadExtField K(p);
    ASSERT_EQ(K.order(), p * p);
    for (std::uint32_t x = 0; x < K.order(); ++x) {
      EXPECT_EQ(K.conj(K.conj(x)), x);
      EXPECT_EQ(K.conj(x) == x, K.in_base(x));
      EXPECT_TRUE(K.in_base(K.mul(x, K.conj(x))));
      // Frobenius by repeated multiplication.
      std::uint32_t pw = 1;
      for (std::uint32_t k = 0; k < p; ++k) pw = K.mul(pw, x);
      EXPECT_EQ(K.conj(x), pw);
      if (x) EXPECT_EQ(K.mul(x, K.inv(x)), 1u);
      for (std::uint32_t y = 0; y < K.order(); ++y) {
        EXPECT_EQ(K.conj(K.mul(x, y)), K.mul(K.conj(x), K.conj(y)));
        EXPECT_EQ(K.conj(K.add(x, y)), K.add(K.conj(x), K.conj(y)));
      }
    }
    // Norm is onto the nonzero base elements.
    std::set<std::uint32_t> norms;
    for (std::uint32_t x = 1; x < K.order(); ++x) norms.insert(K.norm(x));
    EXPECT_EQ(norms.size(), p - 1);
  }
}

TEST(HermitianSpace, FormIsHermitian) {
  std::mt19937 rng(61);
  for (std::uint32_t p : {2u, 3u}) {
    const HermitianSpace h(p, std::vector<std::uint32_t>(3, p - 1));
    const auto& K = h.field();
    for (int i = 0; i < 200; ++i) {
      std::vector<std::uint32_t> v(3), w(3);
      for (auto& x : v) x = rng() % K.order();
      for (auto& x : w) x = rng() % K.order();
      EXPECT_EQ(h.form(w, v), K.conj(h.form(v, w)));
      EXPECT_TRUE(K.in_base(h.form(v, v)));
    }
  }
}

TEST(HermitianSpace, JsonAndValidation) {
  const auto h = HermitianSpace::from_json(nlohmann::json::parse(R"({"p":3,"n":2,"diag":[1,2]})"));
  EXPECT_EQ(h.dimension(), 2u);
  EXPECT_EQ(HermitianSpace::from_json(h.to_json()).diag(), h.diag());
  EXPECT_THROW(HermitianSpace::from_json(nlohmann::json::parse(R"({"p":3,"n":3,"diag":[1,2]})")), UsageError);
  EXPECT_THROW(HermitianSpace(3, {1, 0}), DomainError);
}

TEST(WittIndex, Hermitian) {
  EXPECT_EQ(witt_index_hermitian(HermitianSpace(2, {1, 1})), 1);
  EXPECT_EQ(witt_index_hermitian(HermitianSpace(3, {1})), 0);
  EXPECT_EQ(witt_index_hermitian(HermitianSpace(2, {1})), 0);
  EXPECT_EQ(witt_index_hermitian(HermitianSpace(3, {1, 1, 1})), 1);
  EXPECT_EQ(witt_index_hermitian(HermitianSpace(3, {1, 2, 1, 2})), 2);
}

TEST(TraceQuadratic, NormFormAndWittIndex) {
  const auto q1 = trace_quadratic(HermitianSpace(3, {1}));
  EXPECT_EQ(q1.dimension(), 2u);
  EXPECT_TRUE(q1.nondegenerate());
  EXPECT_EQ(witt_index_quadratic(q1), 0);
  const QuadExtField K(3);
  for (std::uint32_t x0 = 0; x0 < 3; ++x0)
    for (std::uint32_t x1 = 0; x1 < 3; ++x1) EXPECT_EQ(q1.value({x0, x1}), K.norm(K.make(x0, x1)));

  const auto q0 = trace_quadratic(HermitianSpace(2, {}));
  EXPECT_EQ(q0.dimension(), 0u);
  EXPECT_EQ(witt_index_quadratic(trace_quadratic(HermitianSpace(2, {1, 1}))), 2);
  EXPECT_EQ(witt_index_quadratic(trace_quadratic(HermitianSpace(3, {1, 1, 1}))), 2);
}

TEST(QuadraticSpace, PolarAndDegeneracy) {
  const auto h = QuadraticSpace::hyperbolic(2, 2);
  EXPECT_TRUE(h.nondegenerate());
  EXPECT_EQ(h.value({1, 1, 0, 0}), 1u);
  EXPECT_EQ(h.polar({1, 0, 0, 0}, {0, 1, 0, 0}), 1u);
  // x0^2 on F_3^2 is degenerate.
  EXPECT_FALSE(QuadraticSpace(3, 2, {1, 0, 0, 0}).nondegenerate());
}

TEST(Counts, HandExamples) {
  EXPECT_EQ(count_isotropic(HermitianSpace(2, {1, 1}), 1), 3u);
  EXPECT_EQ(count_isotropic(HermitianSpace(2, {1, 1, 1}), 1), 9u);
  EXPECT_EQ(count_isotropic(HermitianSpace(2, {1, 1, 1, 1}), 2), 27u);
  EXPECT_EQ(count_isotropic(HermitianSpace(3, {1, 1}), 0), 1u);
  EXPECT_EQ(count_isotropic(HermitianSpace(3, {1, 1}), 1), 4u);
  EXPECT_EQ(count_singular(QuadraticSpace::hyperbolic(2, 2), 1), 9u);
}

// Totally isotropic lines counted from isotropic vectors directly.
TEST(Counts, LinesAgainstVectorCount) {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 3; ++n) {
      const HermitianSpace h(p, std::vector<std::uint32_t>(n, 1));
      const auto q = h.field().order();
      unsigned long long vectors = 0;
      for_each_vector(q, n, [&](const std::vector<std::uint32_t>& v) { vectors += nonzero(v) && h.form(v, v) == 0; });
      EXPECT_EQ(count_isotropic(h, 1), vectors / (q - 1)) << p << " " << n;

      const auto tq = trace_quadratic(h);
      unsigned long long singular = 0;
      for_each_vector(p, 2 * n, [&](const std::vector<std::uint32_t>& v) { singular += nonzero(v) && tq.value(v) == 0; });
      EXPECT_EQ(count_singular(tq, 1), singular / (p - 1)) << p << " " << n;
    }
}

TEST(Counts, MatchEssentialPoincareForEveryDiagonal) {
  for (std::uint32_t p : {2u, 3u})
    for (std::size_t n = 1; n <= 4; ++n)
      for (std::uint32_t d = 1; d < p; ++d) {
        std::vector<std::uint32_t> diag(n, 1);
        diag.back() = d;
        const HermitianSpace h(p, diag);
        for (int r = 0; r <= static_cast<int>(n) / 2; ++r)
          EXPECT_EQ(static_cast<std::int64_t>(count_isotropic(h, r)),
                    essential_poincare(static_cast<int>(n), r).evaluate(p));
      }
  for (int r = 0; r <= 2; ++r)
    EXPECT_EQ(static_cast<std::int64_t>(count_isotropic(HermitianSpace(2, {1, 1, 1, 1, 1}), r)),
              essential_poincare(5, r).evaluate(2));
}

TEST(OrthCountPolynomial, HandExamplesAndEnumeration) {
  EXPECT_EQ(orth_count_polynomial(2, 1), (PoincarePolynomial{1, 2, 1}));
  EXPECT_EQ(orth_count_polynomial(4, 0), PoincarePolynomial{1});
  EXPECT_EQ(orth_count_polynomial(3, 1).evaluate(2), 35);
  for (std::uint32_t p : {2u, 3u})
    for (int N = 1; N <= 3; ++N)
      for (int m = 0; m <= N; ++m)
        EXPECT_EQ(static_cast<std::int64_t>(count_singular(QuadraticSpace::hyperbolic(p, N), m)),
                  orth_count_polynomial(N, m).evaluate(p))
            << p << " " << N << " " << m;
}

TEST(Jacobson, HandExamples) {
  EXPECT_TRUE(jacobson_check(HermitianSpace(3, {1, 1}), HermitianSpace(3, {1, 2})));
  EXPECT_TRUE(jacobson_check(HermitianSpace(3, {1}), HermitianSpace(3, {2})));
  EXPECT_TRUE(jacobson_check(HermitianSpace(2, {1, 1, 1}), HermitianSpace(2, {1, 1, 1})));
  EXPECT_TRUE(jacobson_check(HermitianSpace(3, {1}), HermitianSpace(3, {1, 1})));
  EXPECT_THROW(jacobson_check(HermitianSpace(3, {1}), HermitianSpace(2, {1})), UsageError);
}

TEST(Budget, ExceededIsAnError) {
  try {
    count_isotropic(HermitianSpace(3, {1, 1, 1, 1}), 2, 50);
    FAIL() << "expected ResourceError";
  } catch (const ResourceError& e) {
    EXPECT_EQ(e.budget(), 50u);
  }
}
