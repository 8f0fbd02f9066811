#pragma once

// Mod-2 Chow ring models of split maximal orthogonal grassmannians, their
// subrings generated by chosen classes, annihilators of the class [X_r], and
// the quotient comparisons for even and odd hermitian dimension.

#include "chowlab/algebra.hpp"
#include "chowlab/invariant.hpp"
#include "chowlab/poincare.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <vector>

namespace chowlab {

/// F2[e1..e_{N-1}] with e_i^2 = e_{2i} (zero once 2i > N-1). N >= 1.
AlgebraPresentation max_orth_ring(std::uint32_t N);

struct PrevMaxOrthRing {
  std::uint32_t r = 0;
  /// Generators e (e^{2r+1} = 0) and e1..e_{2r} with e_i^2 = e_{2i}.
  AlgebraPresentation ring;
  /// e1 -> e + e1, all other generators fixed, extended to normal monomials
  /// by substitution. This is additive and involutive but not multiplicative:
  /// sigma(e1)^2 = e^2 + e2 while sigma(e1^2) = e2.
  Involution sigma;
};

PrevMaxOrthRing prev_max_orth_ring(std::uint32_t r);

/// F2[e2..e_{2r}] with e_i^2 = e_{2i} (zero once 2i > 2r).
AlgebraPresentation odd_norm_quotient_model(std::uint32_t r);

/// Degreewise bases of the unital subring generated by homogeneous elements,
/// up to the ambient top degree.
class SubringClosure {
 public:
  /// Throws UsageError on a non-homogeneous or zero generator.
  SubringClosure(AlgebraPresentation ambient, std::vector<Element> generators);

  const AlgebraPresentation& ambient() const { return ambient_; }
  const std::vector<Element>& generators() const { return generators_; }
  std::uint32_t top_degree() const { return static_cast<std::uint32_t>(basis_.size() - 1); }
  /// Empty above the top degree.
  const std::vector<Element>& basis(std::uint32_t d) const;
  PoincarePolynomial poincare() const;

 private:
  AlgebraPresentation ambient_;
  std::vector<Element> generators_;
  std::vector<std::vector<Element>> basis_;
};

std::vector<Element> subring_basis(const AlgebraPresentation& ambient, const std::vector<Element>& generators,
                                   std::uint32_t d);

enum class Parity { Even, Odd };

struct XrClass {
  AlgebraPresentation ring;
  Element cls;
  std::uint32_t codimension = 0;
};

/// Even: e2 e4 ... e_{2r-2} in max_orth_ring(2r). Odd: e2 e4 ... e_{2r} in
/// odd_norm_quotient_model(r). Throws DomainError for r = 0 and
/// InternalError if the product vanishes.
XrClass class_Xr(std::uint32_t r, Parity parity);

/// Generators e2, e4, ..., e_{2r-2} of max_orth_ring(2r).
std::vector<Element> even_generators(const AlgebraPresentation& a, std::uint32_t r);

/// The degree r(r-1) part of the subring of max_orth_ring(2r) generated by
/// even generators is one-dimensional and spanned by [X_r].
bool uniqueness_in_codim(std::uint32_t N, std::uint32_t r);

struct AnnihilatorComponent {
  std::uint32_t degree = 0;
  /// Dimension of the domain in this degree (ring or subring).
  std::size_t domain_dimension = 0;
  /// Rank of multiplication by x on the domain.
  std::size_t image_rank = 0;
  std::vector<Element> basis;
};

/// Kernel of multiplication by a nonzero homogeneous x, degree by degree,
/// optionally restricted to a subring. Throws UsageError for x = 0 or a
/// non-homogeneous x.
std::vector<AnnihilatorComponent> annihilator(const AlgebraPresentation& a, const Element& x,
                                              const SubringClosure* restrict_to = nullptr);

/// Poincare polynomial of domain / kernel.
PoincarePolynomial quotient_poincare(const std::vector<AnnihilatorComponent>& ann);

/// max_orth_ring(2r) / Ann([X_r]). Throws DomainError unless N = 2r >= 2.
PoincarePolynomial isochow_quotient(std::uint32_t N, std::uint32_t r);

/// e_i^2 annihilates [X_r] in max_orth_ring(2r) for every odd i < 2r.
bool odd_generators_square_to_zero(std::uint32_t r);

struct ReadingComparison {
  PoincarePolynomial candidate;
  bool graded = false;
  bool rank_only = false;
};

struct OddCaseReport {
  std::uint32_t r = 0;
  /// (1 + sigma) span equals e * <e, e2, ..., e_{2r}> in every degree.
  bool norm_image_is_e_ideal = false;
  std::vector<std::uint32_t> norm_mismatch_degrees;
  /// The norm span lies inside <e, e2, ..., e_{2r}>.
  bool norms_in_subring = false;
  /// <e, e2, ..., e_{2r}> modulo norms, computed in PrevMaxOrthRing.
  PoincarePolynomial norm_quotient;
  PoincarePolynomial model;
  bool model_matches_norm_quotient = false;
  Element cls;
  std::uint32_t codimension = 0;
  /// The even subring of the model is one-dimensional in the class's degree.
  bool class_unique = false;
  /// Annihilator of the class in the whole model, and the quotient.
  PoincarePolynomial annihilator_quotient;
  /// The annihilator equals the ideal generated by e2, ..., e_{2r}.
  bool annihilator_is_even_ideal = false;
  /// Same quotient taken inside the even subring.
  PoincarePolynomial even_subring_quotient;
  ReadingComparison printed;   // exterior on degrees 3, 5, ..., 2r-1
  ReadingComparison extended;  // exterior on degrees 3, 5, ..., 2r+1
  ReadingComparison essential; // essential_poincare(2r+1, r)

  nlohmann::json to_json() const;
};

OddCaseReport odd_case_pipeline(std::uint32_t r);

/// 1 when the discriminant is trivial, 2 otherwise.
int disc_generator_multiplier(bool disc_trivial);

}  // namespace chowlab
