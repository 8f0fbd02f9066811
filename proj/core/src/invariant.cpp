#include "chowlab/invariant.hpp"

#include "chowlab/errors.hpp"
#include "chowlab/linalg.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace chowlab {

// ---------------------------------------------------------------- Involution

Involution::Involution(const AlgebraPresentation& a, std::vector<Element> images) : images_(std::move(images)) {
  if (images_.size() != a.num_generators())
    throw ConfigurationError("involution must give one image per generator");
  for (std::size_t i = 0; i < images_.size(); ++i) {
    auto d = images_[i].degree();
    if (!d || *d != a.generator(i).degree)
      throw ConfigurationError("image of '" + a.generator(i).name + "' is not homogeneous of the generator's degree");
  }
}

Element Involution::apply(const AlgebraPresentation& a, const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    Element term = a.constant(c);
    for (std::size_t i = 0; i < m.exponents.size(); ++i)
      for (std::uint32_t k = 0; k < m.exponents[i]; ++k) term = a.multiply(term, images_[i]);
    out = a.add(out, term);
  }
  return out;
}

// ---------------------------------------------------------------- SwapInvolution

SwapInvolution::SwapInvolution(std::vector<std::pair<std::string, std::string>> pairs, std::vector<std::string> fixed)
    : pairs_(std::move(pairs)), fixed_(std::move(fixed)) {}

std::vector<std::size_t> SwapInvolution::permutation(const AlgebraPresentation& a) const {
  const std::size_t n = a.num_generators();
  std::vector<std::size_t> perm(n, n);
  auto locate = [&](const std::string& name) {
    try {
      return a.index_of(name);
    } catch (const PresentationError&) {
      throw ConfigurationError("involution names unknown generator '" + name + "'");
    }
  };
  auto assign = [&](std::size_t i, std::size_t j) {
    if (perm[i] != n) throw ConfigurationError("generator '" + a.generator(i).name + "' listed twice in involution");
    perm[i] = j;
  };
  for (const auto& [x, y] : pairs_) {
    const std::size_t i = locate(x), j = locate(y);
    if (i == j) throw ConfigurationError("involution pairs a generator with itself");
    if (a.generator(i).degree != a.generator(j).degree)
      throw ConfigurationError("involution pairs generators of different degrees");
    assign(i, j);
    assign(j, i);
  }
  for (const auto& f : fixed_) {
    const std::size_t i = locate(f);
    assign(i, i);
  }
  for (std::size_t i = 0; i < n; ++i)
    if (perm[i] == n) throw ConfigurationError("involution does not cover generator '" + a.generator(i).name + "'");

  // The swap must carry each rewrite rule onto the rule of the image generator.
  for (std::size_t i = 0; i < n; ++i) {
    const auto& gi = a.generator(i);
    const auto& gj = a.generator(perm[i]);
    if (gi.power_bound != gj.power_bound) throw ConfigurationError("involution does not preserve power bounds");
    std::map<Exponents, Integer> lhs, rhs;
    for (const auto& t : gi.replacement) {
      Exponents e(n);
      for (std::size_t k = 0; k < n; ++k) e[perm[k]] = t.exponents[k];
      lhs[e] += t.coefficient;
    }
    for (const auto& t : gj.replacement) rhs[t.exponents] += t.coefficient;
    std::erase_if(lhs, [&](const auto& kv) { return reduce(kv.second, a.coefficients()) == 0; });
    std::erase_if(rhs, [&](const auto& kv) { return reduce(kv.second, a.coefficients()) == 0; });
    if (lhs != rhs) throw ConfigurationError("involution does not exchange the rewrite rules of '" + gi.name + "'");
  }
  return perm;
}

Monomial SwapInvolution::apply(const std::vector<std::size_t>& perm, const Monomial& m) {
  Monomial out{m.degree, Exponents(m.exponents.size(), 0)};
  for (std::size_t k = 0; k < perm.size(); ++k) out.exponents[perm[k]] = m.exponents[k];
  return out;
}

Element SwapInvolution::apply(const AlgebraPresentation& a, const Element& x) const {
  const auto perm = permutation(a);
  Element out;
  for (const auto& [m, c] : x.terms()) out.add_term(apply(perm, m), c, a.coefficients());
  return out;
}

Involution SwapInvolution::as_involution(const AlgebraPresentation& a) const {
  const auto perm = permutation(a);
  std::vector<Element> images;
  for (std::size_t i = 0; i < perm.size(); ++i) images.push_back(a.generator_element(a.generator(perm[i]).name));
  return Involution(a, std::move(images));
}

SwapRing swap_polynomial_ring(std::uint32_t k_fixed, std::uint32_t r_pairs, Coefficients ring,
                              std::uint32_t truncation) {
  std::vector<GeneratorSpec> gens;
  std::vector<std::string> fixed;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (std::uint32_t i = 1; i <= k_fixed; ++i) {
    const std::string name = k_fixed == 1 ? "t" : "t" + std::to_string(i);
    gens.push_back({name, 1, std::nullopt, {}});
    fixed.push_back(name);
  }
  for (std::uint32_t i = 1; i <= r_pairs; ++i) {
    const std::string a = "a" + std::to_string(i), b = "b" + std::to_string(i);
    gens.push_back({a, 1, std::nullopt, {}});
    gens.push_back({b, 1, std::nullopt, {}});
    pairs.emplace_back(a, b);
  }
  return {AlgebraPresentation(std::move(gens), ring, truncation), SwapInvolution(std::move(pairs), std::move(fixed))};
}

// ---------------------------------------------------------------- invariants and norms

namespace {

std::vector<std::size_t> checked_permutation(const SwapInvolution& sigma, const AlgebraPresentation& a,
                                             const std::vector<Monomial>& basis) {
  auto perm = sigma.permutation(a);
  for (const auto& m : basis)
    if (!a.is_normal(SwapInvolution::apply(perm, m).exponents))
      throw ConfigurationError("involution does not permute the normal-form monomials");
  return perm;
}

}  // namespace

NormData norm_data(const SwapInvolution& sigma, const AlgebraPresentation& a, std::uint32_t d) {
  const auto basis = degree_basis(a, d).monomials;
  const auto perm = checked_permutation(sigma, a, basis);
  NormData out{d, {}, {}};
  const Coefficients ring = a.coefficients();
  for (const auto& m : basis) {
    const Monomial s = SwapInvolution::apply(perm, m);
    Element norm;
    norm.add_term(m, 1, ring);
    norm.add_term(s, 1, ring);
    if (s == m) {
      out.invariant_basis.push_back(a.monomial_element(m));
    } else if (m < s) {
      out.invariant_basis.push_back(norm);
    }
    if (!norm.is_zero()) out.norm_basis.push_back(std::move(norm));
  }
  return out;
}

std::vector<Element> invariant_basis(const SwapInvolution& sigma, const AlgebraPresentation& a, std::uint32_t d) {
  return norm_data(sigma, a, d).invariant_basis;
}

std::vector<Element> norm_image_basis(const SwapInvolution& sigma, const AlgebraPresentation& a, std::uint32_t d) {
  return norm_data(sigma, a, d).norm_basis;
}

namespace {

void products_rec(const AlgebraPresentation& a, const std::vector<Element>& gens, const std::vector<std::uint32_t>& degs,
                  std::size_t i, std::uint32_t remaining, const Element& acc, std::vector<Element>& out) {
  if (remaining == 0) {
    if (!acc.is_zero()) out.push_back(acc);
    return;
  }
  if (i == gens.size()) return;
  products_rec(a, gens, degs, i + 1, remaining, acc, out);
  Element cur = acc;
  for (std::uint32_t used = degs[i]; used <= remaining; used += degs[i]) {
    cur = a.multiply(cur, gens[i]);
    if (cur.is_zero()) break;
    products_rec(a, gens, degs, i + 1, remaining - used, cur, out);
  }
}

}  // namespace

std::vector<Element> generator_products(const AlgebraPresentation& a, const std::vector<Element>& generators,
                                        std::uint32_t d) {
  std::vector<Element> gens;
  std::vector<std::uint32_t> degs;
  for (const auto& g : generators) {
    if (g.is_zero()) continue;
    auto deg = g.degree();
    if (!deg || *deg == 0) throw UsageError("generators must be homogeneous of positive degree");
    gens.push_back(g);
    degs.push_back(*deg);
  }
  std::vector<Element> out;
  products_rec(a, gens, degs, 0, d, a.one(), out);
  return out;
}

CheckReport quotient_generation_check(const SwapInvolution& sigma, const AlgebraPresentation& a,
                                      const std::vector<Element>& generators, std::uint32_t max_degree) {
  for (const auto& g : generators)
    if (!g.is_homogeneous() || sigma.apply(a, g) != g)
      throw UsageError("quotient generation check needs homogeneous sigma-invariant generators");
  CheckReport report;
  report.check = "quotient_generation";
  report.ring = a;
  report.params = {{"coefficients", to_string(a.coefficients())},
                   {"max_degree", max_degree},
                   {"generators", generators.size()}};
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    const NormData nd = norm_data(sigma, a, d);
    MonomialIndex index(degree_basis(a, d).monomials);
    Echelon ech(a.coefficients(), index.size());
    for (const auto& n : nd.norm_basis) ech.insert(index.to_vector(n));
    for (const auto& p : generator_products(a, generators, d)) ech.insert(index.to_vector(p));
    DegreeVerdict v{d, true, std::nullopt};
    for (const auto& inv : nd.invariant_basis) {
      if (!ech.contains(index.to_vector(inv))) {
        v.pass = false;
        v.witness = inv;
        break;
      }
    }
    report.record(std::move(v));
  }
  return report;
}

CheckReport codim_le2_generation_check(std::uint32_t k_fixed, std::uint32_t r_pairs, std::uint32_t max_degree,
                                       Coefficients ring) {
  if (k_fixed > 1) throw UsageError("codim_le2_generation_check supports at most one fixed variable");
  auto [a, sigma] = swap_polynomial_ring(k_fixed, r_pairs, ring, max_degree);
  std::vector<Element> gens;
  if (k_fixed == 1) gens.push_back(a.generator_element("t"));
  for (std::uint32_t i = 1; i <= r_pairs; ++i)
    gens.push_back(a.multiply(a.generator_element("a" + std::to_string(i)), a.generator_element("b" + std::to_string(i))));
  CheckReport report = quotient_generation_check(sigma, a, gens, max_degree);
  report.check = "codim_le2_generation";
  report.params["k_fixed"] = k_fixed;
  report.params["r_pairs"] = r_pairs;
  return report;
}

NonGenerationWitness non_generation_witness() {
  auto [a, sigma] = swap_polynomial_ring(0, 3, Coefficients::Z, 3);
  const Element p = a.add(a.normal_form({{"a1", 1}, {"a2", 1}, {"a3", 1}}), a.normal_form({{"b1", 1}, {"b2", 1}, {"b3", 1}}));

  const auto inv1 = invariant_basis(sigma, a, 1);
  const auto inv2 = invariant_basis(sigma, a, 2);
  std::vector<Element> low;
  for (const auto& x : inv1)
    for (const auto& y : inv1)
      for (const auto& z : inv1) low.push_back(a.product({x, y, z}));
  for (const auto& x : inv1)
    for (const auto& y : inv2) low.push_back(a.multiply(x, y));

  NonGenerationWitness out{a, p};
  out.p_in_low_degree_subring = span_membership(a, p, low).member;
  const Element twice = a.scale(p, 2);
  out.twice_p_in_low_degree_subring = span_membership(a, twice, low).member;
  const auto norms = norm_image_basis(sigma, a, 3);
  const Element image = a.add(p, sigma.apply(a, p));
  out.twice_p_in_norm_image = image == twice && span_membership(a, image, norms).member;
  out.p_in_norm_image = span_membership(a, p, norms).member;
  return out;
}

}  // namespace chowlab
