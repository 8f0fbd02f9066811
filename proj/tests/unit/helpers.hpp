#pragma once

#include "chowlab/algebra.hpp"

#include <random>
#include <vector>

namespace chowlab::testing {

// Random element with up to `terms` monomials drawn from degrees 0..max_degree.
inline Element random_element(const AlgebraPresentation& a, std::mt19937& rng, std::uint32_t max_degree,
                              int terms = 4) {
  Element x;
  std::uniform_int_distribution<std::uint32_t> deg(0, max_degree);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < terms; ++t) {
    const auto basis = degree_basis(a, deg(rng));
    if (basis.monomials.empty()) continue;
    std::uniform_int_distribution<std::size_t> pick(0, basis.monomials.size() - 1);
    x.add_term(basis.monomials[pick(rng)], coeff(rng), a.coefficients());
  }
  return x;
}

// Random homogeneous element of degree d.
inline Element random_homogeneous(const AlgebraPresentation& a, std::mt19937& rng, std::uint32_t d, int terms = 3) {
  Element x;
  const auto basis = degree_basis(a, d);
  if (basis.monomials.empty()) return x;
  std::uniform_int_distribution<std::size_t> pick(0, basis.monomials.size() - 1);
  std::uniform_int_distribution<int> coeff(-3, 3);
  for (int t = 0; t < terms; ++t) x.add_term(basis.monomials[pick(rng)], coeff(rng), a.coefficients());
  return x;
}

}  // namespace chowlab::testing
