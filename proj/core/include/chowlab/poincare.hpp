#pragma once

#include <cstdint>
#include <initializer_list>
#include <string>
#include <vector>

namespace chowlab {

/// Dense univariate polynomial in q with signed integer coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  Polynomial(std::initializer_list<std::int64_t> coefficients);
  explicit Polynomial(std::vector<std::int64_t> coefficients);

  /// q^d
  static Polynomial monomial(std::size_t d, std::int64_t c = 1);

  const std::vector<std::int64_t>& coefficients() const { return c_; }
  std::int64_t operator[](std::size_t d) const { return d < c_.size() ? c_[d] : 0; }
  bool is_zero() const { return c_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const { return static_cast<long>(c_.size()) - 1; }

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);

  /// Exact division; throws InternalError when the remainder is nonzero or
  /// the divisor is not monic up to sign.
  Polynomial exact_divide(const Polynomial& divisor) const;

  std::int64_t evaluate(std::int64_t q) const;
  bool operator==(const Polynomial&) const = default;

  std::string to_string() const;

 private:
  void trim();
  std::vector<std::int64_t> c_;
};

/// Generating polynomial of graded ranks: nonnegative coefficients, trailing
/// zeros trimmed.
class PoincarePolynomial {
 public:
  PoincarePolynomial() = default;
  PoincarePolynomial(std::initializer_list<std::int64_t> coefficients);
  explicit PoincarePolynomial(std::vector<std::int64_t> coefficients);
  /// Throws DomainError on a negative coefficient.
  explicit PoincarePolynomial(const Polynomial& p);

  static PoincarePolynomial monomial(std::size_t d, std::int64_t c = 1);
  /// prod_i (1 + q^{d_i})
  static PoincarePolynomial exterior(const std::vector<std::size_t>& degrees);

  const std::vector<std::int64_t>& coefficients() const { return p_.coefficients(); }
  std::int64_t operator[](std::size_t d) const { return p_[d]; }
  bool is_zero() const { return p_.is_zero(); }
  long degree() const { return p_.degree(); }

  /// Sum of coefficients.
  std::int64_t rank() const { return p_.evaluate(1); }
  std::int64_t evaluate(std::int64_t q) const { return p_.evaluate(q); }

  /// p_d = p_{deg - d} for every d.
  bool is_palindromic() const;
  /// Coefficientwise comparison with `other`.
  bool dominated_by(const PoincarePolynomial& other) const;
  PoincarePolynomial shifted(std::size_t k) const;

  const Polynomial& polynomial() const { return p_; }

  PoincarePolynomial& operator+=(const PoincarePolynomial& o);
  friend PoincarePolynomial operator+(PoincarePolynomial a, const PoincarePolynomial& b) { return a += b; }
  friend PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b);
  bool operator==(const PoincarePolynomial&) const = default;

  std::string to_string() const { return p_.to_string(); }

 private:
  Polynomial p_;
};

}  // namespace chowlab
