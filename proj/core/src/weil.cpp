#include "chowlab/weil.hpp"

#include "chowlab/errors.hpp"
#include "chowlab/linalg.hpp"

#include <string>

namespace chowlab {

namespace {

std::string c_name(std::uint32_t i, bool primed) { return "c" + std::to_string(i) + (primed ? "'" : ""); }

// Generator order: a, b, c1..cr, c1'..cr'.
std::size_t c_index(std::uint32_t r, std::uint32_t i, bool primed) { return 2 + (primed ? r : 0) + (i - 1); }

bool is_base(const Monomial& m) { return m.exponents[0] == 0 && m.exponents[1] == 0; }

bool is_base(const Element& x) {
  for (const auto& [m, c] : x.terms())
    if (!is_base(m)) return false;
  return true;
}

std::vector<Element> base_only(const std::vector<Element>& xs) {
  std::vector<Element> out;
  for (const auto& x : xs)
    if (is_base(x)) out.push_back(x);
  return out;
}

}  // namespace

DoubleBundleRing build_double_bundle(std::uint32_t r, Coefficients ring, std::uint32_t D) {
  if (r == 0) throw ConfigurationError("double bundle needs rank r >= 1");
  if (D < 2 * r) throw ConfigurationError("double bundle needs truncation D >= 2r");
  const std::size_t total = 2 + 2 * r;
  std::vector<GeneratorSpec> gens;
  for (std::size_t fiber = 0; fiber < 2; ++fiber) {
    const bool primed = fiber == 1;
    GeneratorSpec g{primed ? "b" : "a", 1, r, {}};
    for (std::uint32_t i = 1; i <= r; ++i) {
      Exponents e(total, 0);
      e[fiber] = r - i;
      e[c_index(r, i, primed)] = 1;
      g.replacement.push_back({i % 2 == 1 ? Integer(1) : Integer(-1), e});
    }
    gens.push_back(std::move(g));
  }
  for (bool primed : {false, true})
    for (std::uint32_t i = 1; i <= r; ++i) gens.push_back({c_name(i, primed), i, std::nullopt, {}});

  AlgebraPresentation a(std::move(gens), ring, D);
  std::vector<std::pair<std::string, std::string>> pairs{{"a", "b"}};
  for (std::uint32_t i = 1; i <= r; ++i) pairs.push_back({c_name(i, false), c_name(i, true)});
  SwapInvolution sigma(std::move(pairs), {});
  sigma.permutation(a);
  Element c = a.multiply(a.generator_element("a"), a.generator_element("b"));
  return {r, D, std::move(a), std::move(sigma), std::move(c)};
}

Element product_relation(const DoubleBundleRing& R) {
  const auto& a = R.ring;
  Element sum;
  for (std::uint32_t i = 0; i <= R.r; ++i) {
    Element coeff = a.one();
    if (i > 0) coeff = a.multiply(a.generator_element(c_name(i, false)), a.generator_element(c_name(i, true)));
    sum = a.add(sum, a.multiply(coeff, a.power(R.c, R.r - i)));
  }
  return sum;
}

bool product_relation_check(const DoubleBundleRing& R) {
  const Element rel = product_relation(R);
  return span_membership(R.ring, rel, norm_image_basis(R.sigma, R.ring, 2 * R.r)).member;
}

nlohmann::json FreenessReport::to_json() const {
  return {{"spanning", spanning.to_json()}, {"freeness", freeness.to_json()}, {"rank", rank}, {"pass", pass}};
}

FreenessReport freeness_check(const DoubleBundleRing& R, const std::vector<Element>& extra_relations) {
  const auto& A = R.ring;
  const Coefficients ring = A.coefficients();
  std::vector<std::uint32_t> rel_degrees;
  for (const auto& rel : extra_relations) {
    auto d = rel.degree();
    if (rel.is_zero() || !d || R.sigma.apply(A, rel) != rel)
      throw UsageError("extra relations must be nonzero, homogeneous and sigma-invariant");
    rel_degrees.push_back(*d);
  }

  FreenessReport rep;
  rep.rank = R.r;
  const nlohmann::json params = {{"r", R.r},
                                 {"D", R.D},
                                 {"coefficients", to_string(ring)},
                                 {"extra_relations", extra_relations.size()}};
  rep.spanning.check = "weil_spanning";
  rep.spanning.params = params;
  rep.spanning.ring = A;
  rep.freeness.check = "weil_freeness";
  rep.freeness.params = params;
  rep.freeness.ring = A;

  std::vector<Element> c_powers{A.one()};
  for (std::uint32_t k = 1; k < R.r; ++k) c_powers.push_back(A.multiply(c_powers.back(), R.c));

  for (std::uint32_t d = 0; d + 2 * R.r <= R.D; ++d) {
    const NormData nd = norm_data(R.sigma, A, d);
    std::vector<Element> lattice = nd.norm_basis;
    for (std::size_t j = 0; j < extra_relations.size(); ++j) {
      if (rel_degrees[j] > d) continue;
      for (const auto& inv : invariant_basis(R.sigma, A, d - rel_degrees[j])) {
        Element p = A.multiply(extra_relations[j], inv);
        if (!p.is_zero()) lattice.push_back(std::move(p));
      }
    }

    struct Source {
      std::uint32_t k;
      Element beta;
      Element value;
    };
    std::vector<Source> sources;
    for (std::uint32_t k = 0; k < R.r && 2 * k <= d; ++k)
      for (auto& beta : base_only(invariant_basis(R.sigma, A, d - 2 * k))) {
        Element value = A.multiply(beta, c_powers[k]);
        sources.push_back({k, std::move(beta), std::move(value)});
      }

    MonomialIndex index(degree_basis(A, d).monomials);
    Echelon ech(ring, index.size(), lattice.size() + sources.size());
    for (std::size_t j = 0; j < lattice.size(); ++j) ech.insert(index.to_vector(lattice[j]), j);
    for (std::size_t i = 0; i < sources.size(); ++i) ech.insert(index.to_vector(sources[i].value), lattice.size() + i);

    DegreeVerdict span_v{d, true, std::nullopt};
    for (const auto& inv : nd.invariant_basis)
      if (!ech.contains(index.to_vector(inv))) {
        span_v.pass = false;
        span_v.witness = inv;
        break;
      }
    rep.spanning.record(std::move(span_v));

    DegreeVerdict free_v{d, true, std::nullopt};
    for (const auto& rel : ech.relations()) {
      // Coefficients of the relation on the sources, grouped by power of c.
      std::vector<Element> beta(R.r);
      Element combination;
      for (const auto& [t, coeff] : rel) {
        if (t < lattice.size()) continue;
        const Source& s = sources[t - lattice.size()];
        beta[s.k] = A.add(beta[s.k], A.scale(s.beta, coeff));
        combination = A.add(combination, A.scale(s.value, coeff));
      }
      bool trivial = true;
      for (std::uint32_t k = 0; k < R.r && trivial; ++k) {
        if (beta[k].is_zero()) continue;
        const auto base_norms = base_only(norm_image_basis(R.sigma, A, d - 2 * k));
        trivial = span_membership(A, beta[k], base_norms).member;
      }
      if (!trivial) {
        free_v.pass = false;
        free_v.witness = combination;
        break;
      }
    }
    rep.freeness.record(std::move(free_v));
  }
  rep.pass = rep.spanning.pass && rep.freeness.pass;
  return rep;
}

CheckReport base_generation_check(std::uint32_t r, Coefficients ring, std::uint32_t max_degree) {
  std::vector<GeneratorSpec> gens;
  for (bool primed : {false, true})
    for (std::uint32_t i = 1; i <= r; ++i) gens.push_back({c_name(i, primed), i, std::nullopt, {}});
  AlgebraPresentation a(std::move(gens), ring, max_degree);
  std::vector<std::pair<std::string, std::string>> pairs;
  std::vector<Element> products;
  for (std::uint32_t i = 1; i <= r; ++i) {
    pairs.push_back({c_name(i, false), c_name(i, true)});
    products.push_back(a.multiply(a.generator_element(c_name(i, false)), a.generator_element(c_name(i, true))));
  }
  SwapInvolution sigma(std::move(pairs), {});
  CheckReport rep = quotient_generation_check(sigma, a, products, max_degree);
  rep.check = "weil_base_generation";
  rep.params["r"] = r;
  return rep;
}

}  // namespace chowlab
