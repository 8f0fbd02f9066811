#include "chowlab/grassmann.hpp"

#include "chowlab/errors.hpp"
#include "chowlab/json_io.hpp"
#include "chowlab/linalg.hpp"
#include "chowlab/motive.hpp"

#include <string>

namespace chowlab {

namespace {

std::string e_name(std::uint32_t i) { return "e" + std::to_string(i); }

// e_first .. e_last with e_i^2 = e_{2i}, or 0 once 2i > last.
std::vector<GeneratorSpec> square_chain(std::uint32_t first, std::uint32_t last, std::size_t offset,
                                        std::size_t total) {
  std::vector<GeneratorSpec> gens;
  for (std::uint32_t i = first; i <= last; ++i) {
    GeneratorSpec g{e_name(i), i, 2, {}};
    if (2 * i <= last) {
      Exponents ex(total, 0);
      ex[offset + (2 * i - first)] = 1;
      g.replacement.push_back({1, ex});
    }
    gens.push_back(std::move(g));
  }
  return gens;
}

std::size_t span_rank(const AlgebraPresentation& a, const std::vector<Element>& xs) {
  return span_basis(a, xs).size();
}

bool same_span(const AlgebraPresentation& a, const std::vector<Element>& x, const std::vector<Element>& y) {
  std::vector<Element> both = x;
  both.insert(both.end(), y.begin(), y.end());
  const std::size_t rx = span_rank(a, x);
  return rx == span_rank(a, y) && rx == span_rank(a, both);
}

std::vector<Element> monomial_elements(const AlgebraPresentation& a, std::uint32_t d) {
  std::vector<Element> out;
  for (const auto& m : degree_basis(a, d).monomials) out.push_back(a.monomial_element(m));
  return out;
}

std::uint32_t homogeneous_degree(const Element& x, const char* what) {
  auto d = x.degree();
  if (x.is_zero() || !d) throw UsageError(std::string(what) + " must be a nonzero homogeneous element");
  return *d;
}

ReadingComparison compare(const PoincarePolynomial& computed, PoincarePolynomial candidate) {
  ReadingComparison c;
  c.graded = computed == candidate;
  c.rank_only = computed.rank() == candidate.rank();
  c.candidate = std::move(candidate);
  return c;
}

nlohmann::json reading_json(const ReadingComparison& c) {
  return {{"candidate", c.candidate.coefficients()}, {"graded", c.graded}, {"rank_only", c.rank_only}};
}

}  // namespace

AlgebraPresentation max_orth_ring(std::uint32_t N) {
  if (N < 1) throw DomainError("max_orth_ring needs N >= 1");
  return AlgebraPresentation(square_chain(1, N - 1, 0, N - 1), Coefficients::F2, std::nullopt);
}

PrevMaxOrthRing prev_max_orth_ring(std::uint32_t r) {
  if (r < 1) throw DomainError("prev_max_orth_ring needs r >= 1");
  const std::size_t total = 1 + 2 * r;
  std::vector<GeneratorSpec> gens{{"e", 1, 2 * r + 1, {}}};
  for (auto& g : square_chain(1, 2 * r, 1, total)) gens.push_back(std::move(g));
  AlgebraPresentation ring(std::move(gens), Coefficients::F2, std::nullopt);

  std::vector<Element> images;
  for (std::size_t i = 0; i < ring.num_generators(); ++i)
    images.push_back(ring.generator_element(ring.generator(i).name));
  images[ring.index_of("e1")] = ring.add(ring.generator_element("e"), ring.generator_element("e1"));
  Involution sigma(ring, std::move(images));
  return {r, std::move(ring), std::move(sigma)};
}

AlgebraPresentation odd_norm_quotient_model(std::uint32_t r) {
  if (r < 1) throw DomainError("odd_norm_quotient_model needs r >= 1");
  return AlgebraPresentation(square_chain(2, 2 * r, 0, 2 * r - 1), Coefficients::F2, std::nullopt);
}

SubringClosure::SubringClosure(AlgebraPresentation ambient, std::vector<Element> generators)
    : ambient_(std::move(ambient)), generators_(std::move(generators)) {
  std::vector<std::uint32_t> degs;
  for (const auto& g : generators_) degs.push_back(homogeneous_degree(g, "subring generator"));
  const std::uint32_t top = ambient_.top_degree();
  basis_.assign(top + 1, {});
  basis_[0] = span_basis(ambient_, {ambient_.one()});
  for (std::uint32_t d = 1; d <= top; ++d) {
    std::vector<Element> products;
    for (std::size_t i = 0; i < generators_.size(); ++i) {
      if (degs[i] > d) continue;
      for (const auto& b : basis_[d - degs[i]]) {
        Element p = ambient_.multiply(generators_[i], b);
        if (!p.is_zero()) products.push_back(std::move(p));
      }
    }
    basis_[d] = span_basis(ambient_, products);
  }
}

const std::vector<Element>& SubringClosure::basis(std::uint32_t d) const {
  static const std::vector<Element> empty;
  return d < basis_.size() ? basis_[d] : empty;
}

PoincarePolynomial SubringClosure::poincare() const {
  std::vector<std::int64_t> c;
  for (const auto& b : basis_) c.push_back(static_cast<std::int64_t>(b.size()));
  return PoincarePolynomial(std::move(c));
}

std::vector<Element> subring_basis(const AlgebraPresentation& ambient, const std::vector<Element>& generators,
                                   std::uint32_t d) {
  return SubringClosure(ambient, generators).basis(d);
}

XrClass class_Xr(std::uint32_t r, Parity parity) {
  if (r < 1) throw DomainError("class_Xr needs r >= 1");
  AlgebraPresentation ring = parity == Parity::Even ? max_orth_ring(2 * r) : odd_norm_quotient_model(r);
  const std::uint32_t last = parity == Parity::Even ? 2 * r - 2 : 2 * r;
  Element cls = ring.one();
  std::uint32_t codim = 0;
  for (std::uint32_t i = 2; i <= last; i += 2) {
    cls = ring.multiply(cls, ring.generator_element(e_name(i)));
    codim += i;
  }
  if (cls.is_zero()) throw InternalError("class [X_r] vanishes");
  return {std::move(ring), std::move(cls), codim};
}

std::vector<Element> even_generators(const AlgebraPresentation& a, std::uint32_t r) {
  std::vector<Element> out;
  for (std::uint32_t i = 2; i + 2 <= 2 * r; i += 2) out.push_back(a.generator_element(e_name(i)));
  return out;
}

bool uniqueness_in_codim(std::uint32_t N, std::uint32_t r) {
  if (r < 1 || N != 2 * r) throw DomainError("uniqueness_in_codim needs N = 2r >= 2");
  const XrClass x = class_Xr(r, Parity::Even);
  const SubringClosure sub(x.ring, even_generators(x.ring, r));
  const auto& basis = sub.basis(x.codimension);
  return basis.size() == 1 && same_span(x.ring, basis, {x.cls});
}

std::vector<AnnihilatorComponent> annihilator(const AlgebraPresentation& a, const Element& x,
                                              const SubringClosure* restrict_to) {
  const std::uint32_t dx = homogeneous_degree(x, "annihilated element");
  const std::uint32_t top = restrict_to ? restrict_to->top_degree() : a.top_degree();
  std::vector<AnnihilatorComponent> out;
  for (std::uint32_t d = 0; d <= top; ++d) {
    const std::vector<Element> domain = restrict_to ? restrict_to->basis(d) : monomial_elements(a, d);
    MonomialIndex target;
    if (d + dx <= a.top_degree()) target = MonomialIndex(degree_basis(a, d + dx).monomials);
    Echelon ech(a.coefficients(), target.size(), domain.size());
    for (std::size_t i = 0; i < domain.size(); ++i) ech.insert(target.to_vector(a.multiply(x, domain[i])), i);
    AnnihilatorComponent comp{d, domain.size(), ech.rank(), {}};
    for (const auto& rel : ech.relations()) {
      Element k;
      for (const auto& [i, c] : rel) k = a.add(k, a.scale(domain[i], c));
      comp.basis.push_back(std::move(k));
    }
    out.push_back(std::move(comp));
  }
  return out;
}

PoincarePolynomial quotient_poincare(const std::vector<AnnihilatorComponent>& ann) {
  std::vector<std::int64_t> c;
  for (const auto& comp : ann) c.push_back(static_cast<std::int64_t>(comp.domain_dimension - comp.basis.size()));
  return PoincarePolynomial(std::move(c));
}

PoincarePolynomial isochow_quotient(std::uint32_t N, std::uint32_t r) {
  if (r < 1 || N != 2 * r) throw DomainError("isochow_quotient needs N = 2r >= 2");
  const XrClass x = class_Xr(r, Parity::Even);
  return quotient_poincare(annihilator(x.ring, x.cls));
}

bool odd_generators_square_to_zero(std::uint32_t r) {
  const XrClass x = class_Xr(r, Parity::Even);
  for (std::uint32_t i = 1; i < 2 * r; i += 2) {
    const Element e = x.ring.generator_element(e_name(i));
    if (!x.ring.multiply(x.ring.multiply(e, e), x.cls).is_zero()) return false;
  }
  return true;
}

nlohmann::json OddCaseReport::to_json() const {
  const AlgebraPresentation model_ring = odd_norm_quotient_model(r);
  return {{"r", r},
          {"norm_image_is_e_ideal", norm_image_is_e_ideal},
          {"norm_mismatch_degrees", norm_mismatch_degrees},
          {"norms_in_subring", norms_in_subring},
          {"norm_quotient", norm_quotient.coefficients()},
          {"model", model.coefficients()},
          {"model_matches_norm_quotient", model_matches_norm_quotient},
          {"class", format(model_ring, cls)},
          {"codimension", codimension},
          {"class_unique", class_unique},
          {"annihilator_quotient", annihilator_quotient.coefficients()},
          {"annihilator_is_even_ideal", annihilator_is_even_ideal},
          {"even_subring_quotient", even_subring_quotient.coefficients()},
          {"printed_reading", reading_json(printed)},
          {"extended_reading", reading_json(extended)},
          {"essential", reading_json(essential)}};
}

OddCaseReport odd_case_pipeline(std::uint32_t r) {
  OddCaseReport rep;
  rep.r = r;
  const PrevMaxOrthRing prev = prev_max_orth_ring(r);
  const AlgebraPresentation& A = prev.ring;

  std::vector<Element> sub_gens{A.generator_element("e")};
  for (std::uint32_t i = 2; i <= 2 * r; ++i) sub_gens.push_back(A.generator_element(e_name(i)));
  const SubringClosure sub(A, sub_gens);
  const Element e = A.generator_element("e");

  rep.norm_image_is_e_ideal = true;
  rep.norms_in_subring = true;
  std::vector<std::int64_t> quotient;
  for (std::uint32_t d = 0; d <= A.top_degree(); ++d) {
    std::vector<Element> norms;
    for (const auto& m : degree_basis(A, d).monomials) {
      const Element x = A.monomial_element(m);
      Element n = A.add(x, prev.sigma.apply(A, x));
      if (!n.is_zero()) norms.push_back(std::move(n));
    }
    std::vector<Element> e_multiples;
    if (d >= 1)
      for (const auto& b : sub.basis(d - 1)) {
        Element p = A.multiply(e, b);
        if (!p.is_zero()) e_multiples.push_back(std::move(p));
      }
    if (!same_span(A, norms, e_multiples)) {
      rep.norm_image_is_e_ideal = false;
      rep.norm_mismatch_degrees.push_back(d);
    }
    const std::size_t rank_sub = sub.basis(d).size();
    std::vector<Element> both = sub.basis(d);
    both.insert(both.end(), norms.begin(), norms.end());
    if (span_rank(A, both) != rank_sub) rep.norms_in_subring = false;
    quotient.push_back(static_cast<std::int64_t>(rank_sub) - static_cast<std::int64_t>(span_rank(A, norms)));
  }
  // Negative entries would only arise if the norms left the subring.
  for (auto& c : quotient)
    if (c < 0) c = 0;
  rep.norm_quotient = PoincarePolynomial(std::move(quotient));

  const XrClass x = class_Xr(r, Parity::Odd);
  const AlgebraPresentation& M = x.ring;
  rep.model = poincare(M);
  rep.model_matches_norm_quotient = rep.model == rep.norm_quotient;
  rep.cls = x.cls;
  rep.codimension = x.codimension;

  std::vector<Element> evens;
  for (std::uint32_t i = 2; i <= 2 * r; i += 2) evens.push_back(M.generator_element(e_name(i)));
  const SubringClosure even_sub(M, evens);
  const auto& at_codim = even_sub.basis(x.codimension);
  rep.class_unique = at_codim.size() == 1 && same_span(M, at_codim, {x.cls});

  const auto ann = annihilator(M, x.cls);
  rep.annihilator_quotient = quotient_poincare(ann);
  rep.annihilator_is_even_ideal = true;
  for (const auto& comp : ann) {
    std::vector<Element> ideal;
    for (std::uint32_t i = 2; i <= 2 * r; i += 2) {
      if (i > comp.degree) break;
      const Element g = M.generator_element(e_name(i));
      for (const auto& m : monomial_elements(M, comp.degree - i)) {
        Element p = M.multiply(g, m);
        if (!p.is_zero()) ideal.push_back(std::move(p));
      }
    }
    if (!same_span(M, ideal, comp.basis)) rep.annihilator_is_even_ideal = false;
  }
  rep.even_subring_quotient = quotient_poincare(annihilator(M, x.cls, &even_sub));

  std::vector<std::size_t> printed_degrees, extended_degrees;
  for (std::uint32_t k = 3; k + 1 <= 2 * r; k += 2) printed_degrees.push_back(k);
  for (std::uint32_t k = 3; k <= 2 * r + 1; k += 2) extended_degrees.push_back(k);
  rep.printed = compare(rep.annihilator_quotient, PoincarePolynomial::exterior(printed_degrees));
  rep.extended = compare(rep.annihilator_quotient, PoincarePolynomial::exterior(extended_degrees));
  rep.essential = compare(rep.annihilator_quotient, essential_poincare(static_cast<int>(2 * r + 1), static_cast<int>(r)));
  return rep;
}

int disc_generator_multiplier(bool disc_trivial) { return disc_trivial ? 1 : 2; }

}  // namespace chowlab
