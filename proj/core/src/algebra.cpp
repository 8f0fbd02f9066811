#include "chowlab/algebra.hpp"

#include "chowlab/errors.hpp"

#include <algorithm>
#include <cctype>
#include <mutex>
#include <numeric>
#include <sstream>

namespace chowlab {

// ---------------------------------------------------------------- Element

bool Element::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.begin()->first.degree == terms_.rbegin()->first.degree;
}

std::optional<std::uint32_t> Element::degree() const {
  if (terms_.empty() || !is_homogeneous()) return std::nullopt;
  return terms_.begin()->first.degree;
}

void Element::add_term(const Monomial& m, const Integer& c, Coefficients ring) {
  if (c == 0) return;
  auto [it, inserted] = terms_.try_emplace(m, 0);
  it->second = reduce(it->second + c, ring);
  if (it->second == 0) terms_.erase(it);
}

Integer Element::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Integer(0) : it->second;
}

// ---------------------------------------------------------------- presentation

struct AlgebraPresentation::Cache {
  std::mutex mutex;
  std::map<Exponents, Element> normal_forms;
};

namespace {

std::uint32_t weighted_degree(const std::vector<GeneratorSpec>& gens, const Exponents& e) {
  std::uint32_t d = 0;
  for (std::size_t i = 0; i < gens.size(); ++i) d += gens[i].degree * e[i];
  return d;
}

}  // namespace

AlgebraPresentation::AlgebraPresentation(std::vector<GeneratorSpec> generators, Coefficients ring,
                                         std::optional<std::uint32_t> truncation)
    : generators_(std::move(generators)), ring_(ring), truncation_(truncation), cache_(std::make_shared<Cache>()) {
  const std::size_t n = generators_.size();
  for (std::size_t i = 0; i < n; ++i) {
    const auto& g = generators_[i];
    if (g.name.empty()) throw PresentationError("generator with empty name");
    if (g.degree == 0) throw PresentationError("generator '" + g.name + "' must have positive degree");
    for (std::size_t j = 0; j < i; ++j)
      if (generators_[j].name == g.name) throw PresentationError("duplicate generator name '" + g.name + "'");
  }
  bool unbounded = false;
  for (std::size_t i = 0; i < n; ++i) {
    auto& g = generators_[i];
    if (!g.power_bound) {
      unbounded = true;
      if (!g.replacement.empty())
        throw PresentationError("generator '" + g.name + "' has a replacement but no power bound");
      continue;
    }
    const std::uint32_t k = *g.power_bound;
    if (k == 0) throw PresentationError("generator '" + g.name + "' has power bound 0");
    const std::uint32_t target_degree = k * g.degree;
    for (auto& t : g.replacement) {
      if (t.exponents.size() != n)
        throw PresentationError("replacement of '" + g.name + "' has wrong exponent vector length");
      t.coefficient = reduce(t.coefficient, ring_);
      if (weighted_degree(generators_, t.exponents) != target_degree)
        throw PresentationError("replacement of '" + g.name + "' is not homogeneous of degree " +
                                std::to_string(target_degree));
      const std::uint32_t factors = std::accumulate(t.exponents.begin(), t.exponents.end(), 0u);
      if (t.exponents[i] >= k || factors > k)
        throw PresentationError("rewrite rule for '" + g.name + "' does not decrease the monomial");
    }
    std::erase_if(g.replacement, [](const RawTerm& t) { return t.coefficient == 0; });
  }
  if (unbounded && !truncation_)
    throw ConfigurationError("power-unbounded generators require a finite truncation degree");
}

std::size_t AlgebraPresentation::index_of(std::string_view name) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].name == name) return i;
  throw PresentationError("unknown generator '" + std::string(name) + "'");
}

std::uint32_t AlgebraPresentation::top_degree() const {
  std::uint32_t top = 0;
  bool bounded = true;
  for (const auto& g : generators_) {
    if (!g.power_bound) {
      bounded = false;
      break;
    }
    top += (*g.power_bound - 1) * g.degree;
  }
  if (!bounded) return *truncation_;
  return truncation_ ? std::min(top, *truncation_) : top;
}

std::uint32_t AlgebraPresentation::degree_of(const Exponents& e) const {
  if (e.size() != generators_.size()) throw PresentationError("exponent vector has wrong length");
  return weighted_degree(generators_, e);
}

bool AlgebraPresentation::is_normal(const Exponents& e) const {
  for (std::size_t i = 0; i < generators_.size(); ++i)
    if (generators_[i].power_bound && e[i] >= *generators_[i].power_bound) return false;
  return !truncation_ || degree_of(e) <= *truncation_;
}

Monomial AlgebraPresentation::monomial(Exponents e) const {
  const auto d = degree_of(e);
  return Monomial{d, std::move(e)};
}

Element AlgebraPresentation::one() const { return constant(1); }

Element AlgebraPresentation::constant(const Integer& c) const {
  Element x;
  x.add_term(Monomial{0, Exponents(generators_.size(), 0)}, c, ring_);
  return x;
}

Element AlgebraPresentation::generator_element(std::string_view name) const {
  Exponents e(generators_.size(), 0);
  e[index_of(name)] = 1;
  return normal_form(e);
}

Element AlgebraPresentation::monomial_element(const Monomial& m) const {
  Element x;
  x.add_term(m, 1, ring_);
  return x;
}

Element AlgebraPresentation::normal_form(const Exponents& raw, std::uint64_t fuel) const {
  if (raw.size() != generators_.size()) throw PresentationError("exponent vector has wrong length");
  return rewrite(raw, fuel);
}

Element AlgebraPresentation::normal_form(const std::map<std::string, std::uint32_t>& raw) const {
  Exponents e(generators_.size(), 0);
  for (const auto& [name, k] : raw) e[index_of(name)] += k;
  return normal_form(e);
}

Element AlgebraPresentation::rewrite(const Exponents& raw, std::uint64_t& fuel) const {
  const std::uint32_t d = weighted_degree(generators_, raw);
  if (truncation_ && d > *truncation_) return {};
  std::size_t pos = generators_.size();
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].power_bound && raw[i] >= *generators_[i].power_bound) {
      pos = i;
      break;
    }
  }
  if (pos == generators_.size()) {
    Element x;
    x.add_term(Monomial{d, raw}, 1, ring_);
    return x;
  }
  {
    std::lock_guard lock(cache_->mutex);
    auto it = cache_->normal_forms.find(raw);
    if (it != cache_->normal_forms.end()) return it->second;
  }
  if (fuel == 0) throw InternalError("rewrite fuel exhausted");
  --fuel;
  const auto& g = generators_[pos];
  Exponents rest = raw;
  rest[pos] -= *g.power_bound;
  Element out;
  for (const auto& t : g.replacement) {
    Exponents e = rest;
    for (std::size_t i = 0; i < e.size(); ++i) e[i] += t.exponents[i];
    const Element part = rewrite(e, fuel);
    for (const auto& [m, c] : part.terms()) out.add_term(m, c * t.coefficient, ring_);
  }
  std::lock_guard lock(cache_->mutex);
  cache_->normal_forms.emplace(raw, out);
  return out;
}

Element AlgebraPresentation::add(const Element& x, const Element& y) const {
  Element out = x;
  for (const auto& [m, c] : y.terms()) out.add_term(m, c, ring_);
  return out;
}

Element AlgebraPresentation::subtract(const Element& x, const Element& y) const {
  Element out = x;
  for (const auto& [m, c] : y.terms()) out.add_term(m, -c, ring_);
  return out;
}

Element AlgebraPresentation::scale(const Element& x, const Integer& c) const {
  Element out;
  for (const auto& [m, a] : x.terms()) out.add_term(m, a * c, ring_);
  return out;
}

Element AlgebraPresentation::multiply(const Element& x, const Element& y) const {
  Element out;
  Exponents e(generators_.size());
  for (const auto& [mx, cx] : x.terms()) {
    for (const auto& [my, cy] : y.terms()) {
      if (truncation_ && mx.degree + my.degree > *truncation_) continue;
      for (std::size_t i = 0; i < e.size(); ++i) e[i] = mx.exponents[i] + my.exponents[i];
      const Integer c = cx * cy;
      const Element nf = normal_form(e);
      for (const auto& [m, a] : nf.terms()) out.add_term(m, a * c, ring_);
    }
  }
  return out;
}

Element AlgebraPresentation::power(const Element& x, std::uint32_t k) const {
  Element out = one();
  for (std::uint32_t i = 0; i < k; ++i) out = multiply(out, x);
  return out;
}

Element AlgebraPresentation::product(const std::vector<Element>& factors) const {
  Element out = one();
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

Element AlgebraPresentation::normalize(const Element& x) const {
  Element out;
  for (const auto& [m, c] : x.terms()) {
    const Element nf = normal_form(m.exponents);
    for (const auto& [n, a] : nf.terms()) out.add_term(n, a * c, ring_);
  }
  return out;
}

// ---------------------------------------------------------------- bases

namespace {

void enumerate(const AlgebraPresentation& a, std::size_t i, std::uint32_t remaining, Exponents& e,
               std::vector<Monomial>& out) {
  if (i == a.num_generators()) {
    if (remaining == 0) out.push_back(a.monomial(e));
    return;
  }
  const auto& g = a.generator(i);
  std::uint32_t max_k = remaining / g.degree;
  if (g.power_bound) max_k = std::min(max_k, *g.power_bound - 1);
  for (std::uint32_t k = 0; k <= max_k; ++k) {
    e[i] = k;
    enumerate(a, i + 1, remaining - k * g.degree, e, out);
  }
  e[i] = 0;
}

}  // namespace

DegreeBasis degree_basis(const AlgebraPresentation& a, std::uint32_t d) {
  DegreeBasis basis{d, {}};
  if (a.truncation() && d > *a.truncation()) return basis;
  Exponents e(a.num_generators(), 0);
  enumerate(a, 0, d, e, basis.monomials);
  std::sort(basis.monomials.begin(), basis.monomials.end());
  return basis;
}

PoincarePolynomial poincare(const AlgebraPresentation& a, std::uint32_t up_to) {
  std::vector<std::int64_t> c;
  for (std::uint32_t d = 0; d <= up_to; ++d) c.push_back(static_cast<std::int64_t>(degree_basis(a, d).monomials.size()));
  return PoincarePolynomial(std::move(c));
}

PoincarePolynomial poincare(const AlgebraPresentation& a) { return poincare(a, a.top_degree()); }

Element normal_form(const AlgebraPresentation& a, const Exponents& raw) { return a.normal_form(raw); }

Element multiply(const AlgebraPresentation& a, const Element& x, const Element& y) { return a.multiply(x, y); }

// ---------------------------------------------------------------- text

std::string format(const AlgebraPresentation& a, const Element& x) {
  if (x.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : x.terms()) {
    Integer abs_c = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) out << "-";
    } else {
      out << (c < 0 ? " - " : " + ");
    }
    first = false;
    std::vector<std::string> factors;
    for (std::size_t i = 0; i < m.exponents.size(); ++i) {
      if (m.exponents[i] == 0) continue;
      std::string f = a.generator(i).name;
      if (m.exponents[i] > 1) f += "^" + std::to_string(m.exponents[i]);
      factors.push_back(std::move(f));
    }
    if (factors.empty()) {
      out << abs_c;
      continue;
    }
    if (abs_c != 1) out << abs_c << "*";
    for (std::size_t i = 0; i < factors.size(); ++i) out << (i ? "*" : "") << factors[i];
  }
  return out.str();
}

namespace {

std::string trim(std::string_view s) {
  std::size_t b = 0, e = s.size();
  while (b < e && std::isspace(static_cast<unsigned char>(s[b]))) ++b;
  while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1]))) --e;
  return std::string(s.substr(b, e - b));
}

Element parse_term(const AlgebraPresentation& a, const std::string& term, bool negative) {
  Integer coeff = negative ? -1 : 1;
  Exponents e(a.num_generators(), 0);
  std::stringstream ss(term);
  std::string factor;
  while (std::getline(ss, factor, '*')) {
    factor = trim(factor);
    if (factor.empty()) throw UsageError("empty factor in '" + term + "'");
    if (std::isdigit(static_cast<unsigned char>(factor[0]))) {
      coeff *= Integer(factor);
      continue;
    }
    std::uint32_t k = 1;
    std::string name = factor;
    if (auto caret = factor.find('^'); caret != std::string::npos) {
      name = trim(factor.substr(0, caret));
      k = static_cast<std::uint32_t>(std::stoul(factor.substr(caret + 1)));
    }
    e[a.index_of(name)] += k;
  }
  return a.scale(a.normal_form(e), coeff);
}

}  // namespace

Element parse_element(const AlgebraPresentation& a, std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw UsageError("empty element");
  if (s == "0") return {};
  Element out;
  std::string cur;
  bool negative = false;
  auto flush = [&] {
    const std::string t = trim(cur);
    if (t.empty()) throw UsageError("malformed element '" + s + "'");
    out = a.add(out, parse_term(a, t, negative));
    cur.clear();
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const char ch = s[i];
    if ((ch == '+' || ch == '-') && i > 0 && s[i - 1] != '^') {
      flush();
      negative = ch == '-';
    } else if (ch == '-' && i == 0) {
      negative = true;
    } else {
      cur += ch;
    }
  }
  flush();
  return out;
}

}  // namespace chowlab
