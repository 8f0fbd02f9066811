#pragma once

// Split model of the Weil transfer of a projective bundle: two projective
// bundles over a base with Chern classes c_i and c'_i, exchanged by an
// involution, and degreewise checks that the invariants modulo norms form a
// free module on 1, c, ..., c^{r-1} over the base invariants.

#include "chowlab/algebra.hpp"
#include "chowlab/invariant.hpp"
#include "chowlab/report.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <vector>

namespace chowlab {

struct DoubleBundleRing {
  std::uint32_t r = 0;
  std::uint32_t D = 0;
  /// Generators a, b, c1..cr, c1'..cr' with
  /// a^r = sum_{i=1}^r (-1)^{i+1} c_i a^{r-i} and the same for b with c'_i.
  AlgebraPresentation ring;
  /// a <-> b, c_i <-> c'_i.
  SwapInvolution sigma;
  /// a*b
  Element c;
};

/// Throws ConfigurationError when r = 0 or D < 2r.
DoubleBundleRing build_double_bundle(std::uint32_t r, Coefficients ring, std::uint32_t D);

/// sum_{i=0}^r c_i c'_i c^{r-i} with c_0 = c'_0 = 1, in normal form.
Element product_relation(const DoubleBundleRing& R);

/// product_relation(R) lies in the degree-2r norm span.
bool product_relation_check(const DoubleBundleRing& R);

struct FreenessReport {
  /// Invariants lie in norms + sum_{k<r} (base invariants) c^k.
  CheckReport spanning;
  /// A combination sum_{k<r} beta_k c^k of base invariants lies in the norm
  /// span only when every beta_k is a base norm.
  CheckReport freeness;
  /// Number of free module generators c^0..c^{r-1}.
  std::uint32_t rank = 0;
  bool pass = true;
  nlohmann::json to_json() const;
};

/// Degrees 0..D-2r. `extra_relations` (sigma-invariant, homogeneous) are added
/// to the norm span after multiplication by all invariants, which lets a
/// mutated ring be tested.
FreenessReport freeness_check(const DoubleBundleRing& R, const std::vector<Element>& extra_relations = {});

/// Quotient generation of the base invariants modulo norms by {c_i c'_i},
/// degrees 0..max_degree.
CheckReport base_generation_check(std::uint32_t r, Coefficients ring, std::uint32_t max_degree);

}  // namespace chowlab
