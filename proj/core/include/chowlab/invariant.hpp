#pragma once

// Invariants of a variable-swapping involution on a presented ring, norm
// images (1 + sigma), and degreewise checks that a quotient modulo norms is
// generated by given invariant elements.

#include "chowlab/algebra.hpp"
#include "chowlab/report.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace chowlab {

/// Degree-preserving involution given by the images of the generators and
/// extended to normal-form monomials by substitution. For a map compatible
/// with the rewrite rules this is a ring automorphism; otherwise it is only
/// additive.
class Involution {
 public:
  Involution(const AlgebraPresentation& a, std::vector<Element> images);

  const std::vector<Element>& images() const { return images_; }
  Element apply(const AlgebraPresentation& a, const Element& x) const;

 private:
  std::vector<Element> images_;
};

/// sigma exchanging each listed pair of generators and fixing the rest.
class SwapInvolution {
 public:
  SwapInvolution(std::vector<std::pair<std::string, std::string>> pairs, std::vector<std::string> fixed);

  const std::vector<std::pair<std::string, std::string>>& pairs() const { return pairs_; }
  const std::vector<std::string>& fixed() const { return fixed_; }

  /// Generator permutation induced on `a`. Throws ConfigurationError unless
  /// pairs and fixed partition the generators, paired generators share a
  /// degree, and the rewrite rules are exchanged by the swap.
  std::vector<std::size_t> permutation(const AlgebraPresentation& a) const;

  static Monomial apply(const std::vector<std::size_t>& perm, const Monomial& m);
  Element apply(const AlgebraPresentation& a, const Element& x) const;
  Involution as_involution(const AlgebraPresentation& a) const;

 private:
  std::vector<std::pair<std::string, std::string>> pairs_;
  std::vector<std::string> fixed_;
};

struct SwapRing {
  AlgebraPresentation ring;
  SwapInvolution sigma;
};

/// R[t_1..t_k, a_1, b_1, ..., a_r, b_r] with every variable of degree 1,
/// truncated at `truncation`, sigma swapping a_i and b_i.
SwapRing swap_polynomial_ring(std::uint32_t k_fixed, std::uint32_t r_pairs, Coefficients ring,
                              std::uint32_t truncation);

struct NormData {
  std::uint32_t degree = 0;
  /// sigma-fixed monomials and orbit sums m + sigma(m).
  std::vector<Element> invariant_basis;
  /// m + sigma(m) over all degree-d monomials m (zero images omitted).
  std::vector<Element> norm_basis;
};

std::vector<Element> invariant_basis(const SwapInvolution& sigma, const AlgebraPresentation& a, std::uint32_t d);
std::vector<Element> norm_image_basis(const SwapInvolution& sigma, const AlgebraPresentation& a, std::uint32_t d);
NormData norm_data(const SwapInvolution& sigma, const AlgebraPresentation& a, std::uint32_t d);

/// All products of the given homogeneous elements (with repetition) of total
/// degree d; {1} for d = 0.
std::vector<Element> generator_products(const AlgebraPresentation& a, const std::vector<Element>& generators,
                                        std::uint32_t d);

/// For each d <= max_degree, checks that products of `generators` together
/// with the norm image span the invariant lattice of degree d. A failing
/// degree carries the first invariant basis element outside the span.
CheckReport quotient_generation_check(const SwapInvolution& sigma, const AlgebraPresentation& a,
                                      const std::vector<Element>& generators, std::uint32_t max_degree);

/// quotient_generation_check on swap_polynomial_ring(k_fixed, r_pairs) with
/// generators {t} and {a_i b_i}.
CheckReport codim_le2_generation_check(std::uint32_t k_fixed, std::uint32_t r_pairs, std::uint32_t max_degree,
                                       Coefficients ring = Coefficients::Z);

/// The invariant P = a1 a2 a3 + b1 b2 b3 over Z with r = 3.
struct NonGenerationWitness {
  AlgebraPresentation ring;
  Element p;
  /// P in the degree-3 part of the subring generated by invariants of degree <= 2.
  bool p_in_low_degree_subring = false;
  /// 2P in that same span.
  bool twice_p_in_low_degree_subring = false;
  /// (1 + sigma)P = 2P lies in the norm image.
  bool twice_p_in_norm_image = false;
  /// P itself is a norm: (1 + sigma)(a1 a2 a3).
  bool p_in_norm_image = false;
};

NonGenerationWitness non_generation_witness();

}  // namespace chowlab
