#pragma once

// Graded commutative algebras presented by generators and pure-power rewrite
// rules g^k -> replacement, over F2 or Z, optionally truncated above a degree.

#include "chowlab/integer.hpp"
#include "chowlab/poincare.hpp"

#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chowlab {

using Exponents = std::vector<std::uint32_t>;

/// A monomial in the generators of one presentation. Ordered by degree first,
/// then lexicographically by exponent vector (generators in declaration order).
struct Monomial {
  std::uint32_t degree = 0;
  Exponents exponents;

  auto operator<=>(const Monomial&) const = default;
  bool operator==(const Monomial&) const = default;
};

/// Finite sum of monomials with nonzero coefficients.
class Element {
 public:
  using Terms = std::map<Monomial, Integer>;

  Element() = default;

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// True for zero and for sums of monomials of a single degree.
  bool is_homogeneous() const;
  /// Degree of a nonzero homogeneous element.
  std::optional<std::uint32_t> degree() const;

  /// Adds c*m, reducing the coefficient in `ring` and dropping zeros.
  void add_term(const Monomial& m, const Integer& c, Coefficients ring);

  /// Coefficient of m (zero when absent).
  Integer coefficient(const Monomial& m) const;

  bool operator==(const Element&) const = default;

 private:
  Terms terms_;
};

struct RawTerm {
  Integer coefficient;
  Exponents exponents;
};

/// One generator: its degree and, when power-bounded, the rule
/// name^power_bound -> replacement.
struct GeneratorSpec {
  std::string name;
  std::uint32_t degree = 1;
  std::optional<std::uint32_t> power_bound;
  std::vector<RawTerm> replacement;
};

class AlgebraPresentation {
 public:
  /// Validates the generator list (distinct names, homogeneous replacements,
  /// terminating rules, finite per-degree bases). Throws PresentationError or
  /// ConfigurationError.
  AlgebraPresentation(std::vector<GeneratorSpec> generators, Coefficients ring,
                      std::optional<std::uint32_t> truncation);

  std::size_t num_generators() const { return generators_.size(); }
  const std::vector<GeneratorSpec>& generators() const { return generators_; }
  const GeneratorSpec& generator(std::size_t i) const { return generators_.at(i); }
  std::size_t index_of(std::string_view name) const;
  Coefficients coefficients() const { return ring_; }
  std::optional<std::uint32_t> truncation() const { return truncation_; }

  /// Largest degree in which a normal-form monomial can be nonzero.
  std::uint32_t top_degree() const;

  std::uint32_t degree_of(const Exponents& e) const;
  bool is_normal(const Exponents& e) const;
  Monomial monomial(Exponents e) const;

  Element zero() const { return {}; }
  Element one() const;
  Element constant(const Integer& c) const;
  Element generator_element(std::string_view name) const;
  Element monomial_element(const Monomial& m) const;

  /// Rewrite-normal form of a raw product of generators. Throws InternalError
  /// if more than `fuel` rewrite steps are needed.
  Element normal_form(const Exponents& raw, std::uint64_t fuel = kDefaultFuel) const;
  Element normal_form(const std::map<std::string, std::uint32_t>& raw) const;

  Element add(const Element& x, const Element& y) const;
  Element subtract(const Element& x, const Element& y) const;
  Element scale(const Element& x, const Integer& c) const;
  Element multiply(const Element& x, const Element& y) const;
  Element power(const Element& x, std::uint32_t k) const;
  Element product(const std::vector<Element>& factors) const;

  /// Element with every coefficient reduced into this presentation's ring and
  /// every monomial normalized.
  Element normalize(const Element& x) const;

  static constexpr std::uint64_t kDefaultFuel = 50'000'000;

 private:
  struct Cache;

  Element rewrite(const Exponents& raw, std::uint64_t& fuel) const;

  std::vector<GeneratorSpec> generators_;
  Coefficients ring_;
  std::optional<std::uint32_t> truncation_;
  std::shared_ptr<Cache> cache_;
};

struct DegreeBasis {
  std::uint32_t degree = 0;
  std::vector<Monomial> monomials;
};

/// All normal-form monomials of degree d in canonical order.
DegreeBasis degree_basis(const AlgebraPresentation& a, std::uint32_t d);

/// Ranks of the graded components up to `up_to`.
PoincarePolynomial poincare(const AlgebraPresentation& a, std::uint32_t up_to);
PoincarePolynomial poincare(const AlgebraPresentation& a);

Element normal_form(const AlgebraPresentation& a, const Exponents& raw);
Element multiply(const AlgebraPresentation& a, const Element& x, const Element& y);

/// Human-readable form such as "e1*e2 + 2*a^2*b".
std::string format(const AlgebraPresentation& a, const Element& x);

/// Parses the output of format(); coefficients are integers, factors are
/// generator names with optional ^exponent.
Element parse_element(const AlgebraPresentation& a, std::string_view text);

}  // namespace chowlab
