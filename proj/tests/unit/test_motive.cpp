#include "chowlab/errors.hpp"
#include "chowlab/integer.hpp"
#include "chowlab/motive.hpp"

#include <gtest/gtest.h>

using namespace chowlab;

namespace {

PoincarePolynomial exterior_step(int first, int last) {
  std::vector<std::size_t> degs;
  for (int d = first; d <= last; d += 2) degs.push_back(static_cast<std::size_t>(d));
  return PoincarePolynomial::exterior(degs);
}

// Number of totally isotropic r-subspaces of a nondegenerate hermitian space
// of dimension n over F_{q^2}:
//   prod_{i=n-2r+1}^{n} (q^i - (-1)^i) / prod_{i=1}^{r} (q^{2i} - 1).
Integer unitary_count(int n, int r, int q) {
  Integer num = 1, den = 1;
  for (int i = n - 2 * r + 1; i <= n; ++i) num *= boost::multiprecision::pow(Integer(q), i) - (i % 2 ? -1 : 1);
  for (int i = 1; i <= r; ++i) den *= boost::multiprecision::pow(Integer(q), 2 * i) - 1;
  EXPECT_EQ(num % den, 0);
  return num / den;
}

Integer evaluate(const PoincarePolynomial& p, int q) {
  Integer out = 0, pw = 1;
  for (auto c : p.coefficients()) {
    out += pw * c;
    pw *= q;
  }
  return out;
}

}  // namespace

TEST(Dimensions, Unitary) {
  EXPECT_EQ(dim_unitary(4, 2), 4);
  EXPECT_EQ(dim_unitary(7, 0), 0);
  EXPECT_EQ(dim_unitary(6, 3), 9);
  EXPECT_EQ(dim_unitary(4, 1), 5);
  EXPECT_THROW(dim_unitary(3, 2), DomainError);
}

TEST(Dimensions, Orthogonal) {
  EXPECT_EQ(dim_orthogonal(3, 1), 4);
  EXPECT_EQ(dim_orthogonal(5, 0), 0);
  EXPECT_EQ(dim_orthogonal(3, 2), 5);
  EXPECT_EQ(dim_orthogonal(4, 3), 9);
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(dim_orthogonal(n, n), n * (n - 1) / 2);
  EXPECT_THROW(dim_orthogonal(3, 4), DomainError);
}

TEST(DecomposeStep, HandExamples) {
  const Motive m21 = decompose_step(2, 1);
  ASSERT_EQ(m21.summands().size(), 2u);
  EXPECT_EQ(m21.summands()[0].atom, Atom::essential(0, 0));
  EXPECT_EQ(m21.summands()[0].shift, 0u);
  EXPECT_EQ(m21.summands()[1].shift, 1u);

  const Motive m42 = decompose_step(4, 2);
  ASSERT_EQ(m42.summands().size(), 2u);
  EXPECT_EQ(m42.summands()[0].atom, Atom::essential(2, 1));
  EXPECT_EQ(m42.summands()[1].atom, Atom::essential(2, 1));
  EXPECT_EQ(m42.summands()[1].shift, 3u);

  const Motive m41 = decompose_step(4, 1);
  ASSERT_EQ(m41.summands().size(), 3u);
  EXPECT_EQ(m41.summands()[0].atom, Atom::essential(2, 0));
  EXPECT_EQ(m41.summands()[1].atom, Atom::essential(2, 1));
  EXPECT_EQ(m41.summands()[1].shift, 2u);
  EXPECT_EQ(m41.summands()[2].shift, 5u);

  EXPECT_EQ(decompose_step(5, 0).summands().size(), 1u);
  EXPECT_THROW(decompose_step(3, 2), DomainError);
}

TEST(EssentialPoincare, HandExamples) {
  EXPECT_EQ(essential_poincare(2, 1), (PoincarePolynomial{1, 1}));
  EXPECT_EQ(essential_poincare(3, 1), (PoincarePolynomial{1, 0, 0, 1}));
  EXPECT_EQ(essential_poincare(4, 2), (PoincarePolynomial{1, 1, 0, 1, 1}));
  EXPECT_EQ(essential_poincare(1, 0), PoincarePolynomial{1});
  EXPECT_THROW(essential_poincare(2, 2), DomainError);
}

TEST(EssentialPoincare, PalindromicWithUnitaryDimension) {
  for (int n = 0; n <= 12; ++n)
    for (int r = 0; r <= n / 2; ++r) {
      const auto e = essential_poincare(n, r);
      EXPECT_EQ(e[0], 1);
      EXPECT_EQ(e.degree(), dim_unitary(n, r));
      EXPECT_TRUE(e.is_palindromic()) << n << " " << r;
    }
}

TEST(EssentialPoincare, ClosedForms) {
  for (int r = 1; r <= 4; ++r) {
    EXPECT_EQ(essential_poincare(2 * r, r), exterior_step(1, 2 * r - 1)) << r;
    EXPECT_EQ(essential_poincare(2 * r + 1, r), exterior_step(3, 2 * r + 1)) << r;
  }
}

// Point counts of unitary grassmannians over F_{q^2} from the classical
// product formula, for prime powers q that the enumerator never reaches.
TEST(EssentialPoincare, MatchesUnitaryPointCountFormula) {
  for (int q : {2, 3, 4, 5, 7})
    for (int n = 0; n <= 12; ++n)
      for (int r = 0; r <= n / 2; ++r) EXPECT_EQ(evaluate(essential_poincare(n, r), q), unitary_count(n, r, q)) << n << r << q;
}

TEST(SplitQuadric, HandExamples) {
  EXPECT_EQ(split_quadric_poincare(1), PoincarePolynomial{2});
  EXPECT_EQ(split_quadric_poincare(2), (PoincarePolynomial{1, 2, 1}));
  EXPECT_EQ(split_quadric_poincare(3), (PoincarePolynomial{1, 1, 2, 1, 1}));
}

TEST(Kvadrika, EvenResidualVanishes) {
  for (int n = 2; n <= 10; n += 2) {
    const auto rep = kvadrika_check(n);
    EXPECT_TRUE(rep.binding);
    EXPECT_TRUE(rep.residual.is_zero()) << n;
    EXPECT_TRUE(rep.pass);
  }
  EXPECT_EQ(split_quadric_poincare(4), (PoincarePolynomial{1, 1}) * essential_poincare(4, 1));
}

TEST(Kvadrika, OddResidualIsTwoPoints) {
  for (int n = 3; n <= 9; n += 2) {
    const auto rep = kvadrika_check(n);
    EXPECT_FALSE(rep.binding);
    EXPECT_EQ(rep.residual, Polynomial::monomial(static_cast<std::size_t>(n - 1), 2)) << n;
  }
}

TEST(DvaMr, HandExamples) {
  const auto r42 = dvaMr_check(4, 2);
  ASSERT_EQ(r42.cases.size(), 2u);
  EXPECT_EQ(r42.cases[0].m, 3);
  EXPECT_EQ(r42.cases[0].shift, 5);
  EXPECT_TRUE(r42.pass);

  const auto r21 = dvaMr_check(2, 1);
  EXPECT_TRUE(r21.cases[1].skipped);
  EXPECT_TRUE(r21.pass);

  const auto r31 = dvaMr_check(3, 1);
  EXPECT_EQ(r31.cases[0].m, 1);
  EXPECT_EQ(r31.cases[0].shift, 1);
  EXPECT_EQ(r31.cases[0].lhs, (PoincarePolynomial{1, 1, 0, 1, 1}));
  EXPECT_EQ(r31.cases[0].rhs, (PoincarePolynomial{1, 1, 2, 1, 1}));
  EXPECT_TRUE(r31.cases[0].dominated.value_or(false));
}

TEST(DvaMr, PositivityUpToTwelve) {
  for (int n = 2; n <= 12; ++n)
    for (int r = 1; r <= n / 2; ++r) {
      const auto rep = dvaMr_check(n, r, false);
      for (const auto& c : rep.cases)
        if (!c.skipped) EXPECT_GT(c.shift, 0) << n << " " << r << " m=" << c.m;
      EXPECT_TRUE(rep.pass);
    }
}

TEST(JInvariant, MinimalSets) {
  EXPECT_EQ(j_min(8), (std::vector<int>{0, 2, 4, 6}));
  EXPECT_EQ(j_min(2), (std::vector<int>{0}));
  EXPECT_THROW(j_min(5), DomainError);
  // 9 = 15 - 6 at n = 6
  EXPECT_EQ(dim_orthogonal(6, 6) - (0 + 2 + 4), 9);
  for (int n = 2; n <= 20; n += 2) EXPECT_TRUE(cd2_identity_check(n)) << n;
}

TEST(WittDecompose, HandExamples) {
  // No splitting step: the essential part plus the symbolic Spec K bucket.
  const Motive id = witt_decompose_whole(5, 2, 0);
  ASSERT_EQ(id.summands().size(), 2u);
  EXPECT_EQ(id.summands()[0].atom, Atom::essential(5, 2));
  EXPECT_EQ(id.summands()[0].shift, 0u);
  EXPECT_TRUE(id.has_residual());
  const Motive point = witt_decompose_whole(5, 0, 0);
  ASSERT_EQ(point.summands().size(), 1u);
  EXPECT_FALSE(point.has_residual());

  const Motive m31 = witt_decompose_whole(3, 1, 1);
  ASSERT_EQ(m31.summands().size(), 3u);
  EXPECT_EQ(m31.summands()[0].atom, Atom::tate());
  EXPECT_EQ(m31.summands()[1].atom, Atom::tate());
  EXPECT_EQ(m31.summands()[1].shift, 3u);
  EXPECT_EQ(m31.summands()[2].atom, Atom::spec_k());
  EXPECT_FALSE(m31.summands()[2].shift.has_value());

  const Motive m41 = witt_decompose_whole(4, 1, 1);
  ASSERT_EQ(m41.summands().size(), 4u);
  EXPECT_EQ(m41.summands()[0].atom, Atom::tate());
  EXPECT_EQ(m41.summands()[1].atom, Atom::essential(2, 1));
  EXPECT_EQ(m41.summands()[1].shift, 2u);
  EXPECT_EQ(m41.summands()[2].atom, Atom::tate());
  EXPECT_EQ(m41.summands()[2].shift, 5u);
  EXPECT_EQ(m41.summands()[3].atom, Atom::spec_k());
  EXPECT_THROW(witt_decompose_whole(4, 1, 3), DomainError);
}

TEST(WittDecompose, FullySplitRealizesEssential) {
  for (int n = 0; n <= 10; ++n)
    for (int r = 0; r <= n / 2; ++r)
      EXPECT_EQ(witt_decompose_whole(n, r, n / 2).realize(), essential_poincare(n, r)) << n << " " << r;
}

TEST(Atom, Validation) {
  EXPECT_THROW(Atom::essential(3, 2), DomainError);
  EXPECT_EQ(Atom::essential(4, 0).to_string(), "Essential(4,0)");
  EXPECT_EQ(Atom::spec_k().to_string(), "SpecK");
}
