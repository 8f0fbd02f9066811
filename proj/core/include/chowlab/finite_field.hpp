#pragma once

// Finite models of a quadratic extension K/F with F = F_p, diagonal hermitian
// forms over K, their trace quadratic forms over F, and exhaustive
// enumeration of totally isotropic / totally singular subspaces.

#include "chowlab/poincare.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <utility>
#include <vector>

namespace chowlab {

/// Default hard cap on enumeration nodes.
inline constexpr unsigned long long kDefaultEnumerationBudget = 200'000'000ULL;

class PrimeField {
 public:
  /// Throws DomainError unless p is a prime below 256.
  explicit PrimeField(std::uint32_t p);

  std::uint32_t p() const { return p_; }
  std::uint32_t add(std::uint32_t x, std::uint32_t y) const { return (x + y) % p_; }
  std::uint32_t sub(std::uint32_t x, std::uint32_t y) const { return (x + p_ - y) % p_; }
  std::uint32_t mul(std::uint32_t x, std::uint32_t y) const { return (x * y) % p_; }
  std::uint32_t neg(std::uint32_t x) const { return (p_ - x) % p_; }
  /// Throws DomainError on zero.
  std::uint32_t inv(std::uint32_t x) const;
  std::uint32_t normalize(long long x) const;
  bool is_square(std::uint32_t x) const;

 private:
  std::uint32_t p_;
};

/// F_p[x]/(x^2 + a x + b) for the lexicographically first irreducible monic
/// quadratic. Element x0 + x1*theta is encoded as x0 + p*x1.
class QuadExtField {
 public:
  using Elem = std::uint32_t;

  explicit QuadExtField(std::uint32_t p);

  const PrimeField& base() const { return base_; }
  std::uint32_t p() const { return base_.p(); }
  std::uint32_t order() const { return q_; }
  /// (a, b) with modulus x^2 + a x + b.
  std::pair<std::uint32_t, std::uint32_t> modulus() const { return {a_, b_}; }

  Elem make(std::uint32_t x0, std::uint32_t x1) const { return x0 + base_.p() * x1; }
  std::uint32_t re(Elem z) const { return z % base_.p(); }
  std::uint32_t im(Elem z) const { return z / base_.p(); }
  bool in_base(Elem z) const { return im(z) == 0; }

  Elem add(Elem x, Elem y) const { return add_[x * q_ + y]; }
  Elem sub(Elem x, Elem y) const { return add_[x * q_ + neg_[y]]; }
  Elem mul(Elem x, Elem y) const { return mul_[x * q_ + y]; }
  Elem neg(Elem x) const { return neg_[x]; }
  /// Frobenius x -> x^p.
  Elem conj(Elem x) const { return conj_[x]; }
  /// Throws DomainError on zero.
  Elem inv(Elem x) const;
  /// x * conj(x), an element of F_p.
  std::uint32_t norm(Elem x) const { return re(mul(x, conj(x))); }

 private:
  PrimeField base_;
  std::uint32_t q_;
  std::uint32_t a_ = 0;
  std::uint32_t b_ = 0;
  std::vector<Elem> add_, mul_, neg_, conj_;
};

/// h(v, w) = sum_i d_i v_i conj(w_i) with nonzero d_i in F_p.
class HermitianSpace {
 public:
  /// Throws DomainError on a zero or out-of-range diagonal entry.
  HermitianSpace(std::uint32_t p, std::vector<std::uint32_t> diag);

  const QuadExtField& field() const { return field_; }
  std::size_t dimension() const { return diag_.size(); }
  const std::vector<std::uint32_t>& diag() const { return diag_; }

  QuadExtField::Elem form(const std::vector<QuadExtField::Elem>& v,
                          const std::vector<QuadExtField::Elem>& w) const;

  /// {"p":int,"n":int,"diag":[ints]}; throws UsageError when malformed.
  static HermitianSpace from_json(const nlohmann::json& j);
  nlohmann::json to_json() const;

 private:
  QuadExtField field_;
  std::vector<std::uint32_t> diag_;
};

/// Quadratic form on F_p^dim given by an upper-triangular coefficient
/// matrix: q(v) = sum_{i<=j} c_ij v_i v_j.
class QuadraticSpace {
 public:
  QuadraticSpace(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> upper);

  /// sum_i x_{2i} x_{2i+1} on F_p^{2N}.
  static QuadraticSpace hyperbolic(std::uint32_t p, std::size_t N);

  const PrimeField& field() const { return field_; }
  std::size_t dimension() const { return dim_; }
  std::uint32_t coefficient(std::size_t i, std::size_t j) const { return c_[i * dim_ + j]; }

  std::uint32_t value(const std::vector<std::uint32_t>& v) const;
  /// b(v, w) = q(v + w) - q(v) - q(w).
  std::uint32_t polar(const std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& w) const;

  /// Odd p: det of the polar matrix is nonzero. p = 2: q is anisotropic on
  /// the radical of the polar form.
  bool nondegenerate() const;

 private:
  PrimeField field_;
  std::size_t dim_;
  std::vector<std::uint32_t> c_;
};

/// q(v) = h(v, v) over the F_p-basis {1, theta} of each coordinate.
/// Throws InternalError if the result is degenerate.
QuadraticSpace trace_quadratic(const HermitianSpace& h);

int witt_index_hermitian(const HermitianSpace& h, unsigned long long budget = kDefaultEnumerationBudget);
int witt_index_quadratic(const QuadraticSpace& q, unsigned long long budget = kDefaultEnumerationBudget);

/// Number of totally isotropic r-dimensional K-subspaces.
unsigned long long count_isotropic(const HermitianSpace& h, int r,
                                   unsigned long long budget = kDefaultEnumerationBudget);
/// Number of totally singular m-dimensional F-subspaces.
unsigned long long count_singular(const QuadraticSpace& q, int m,
                                  unsigned long long budget = kDefaultEnumerationBudget);

/// P(q) = prod_{i<m} (q^{N-i} - 1)(q^{N-i-1} + 1) / (q^{i+1} - 1); P(p) counts
/// totally singular m-subspaces of the split 2N-dimensional form over F_p.
PoincarePolynomial orth_count_polynomial(int N, int m);

/// Trace forms have equal dimension and Witt index iff the hermitian forms do.
bool jacobson_check(const HermitianSpace& h1, const HermitianSpace& h2,
                    unsigned long long budget = kDefaultEnumerationBudget);

}  // namespace chowlab
