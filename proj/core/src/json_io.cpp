#include "chowlab/json_io.hpp"

#include "chowlab/errors.hpp"

#include <limits>

namespace chowlab {

using nlohmann::json;

json integer_to_json(const Integer& x) {
  if (x >= std::numeric_limits<std::int64_t>::min() && x <= std::numeric_limits<std::int64_t>::max())
    return static_cast<std::int64_t>(x);
  return x.str();
}

Integer integer_from_json(const json& j) {
  if (j.is_number_integer()) return Integer(j.get<std::int64_t>());
  if (j.is_string()) return Integer(j.get<std::string>());
  throw PresentationError("expected an integer, got " + j.dump());
}

namespace {

json exponents_to_json(const AlgebraPresentation& a, const Exponents& e) {
  json m = json::object();
  for (std::size_t i = 0; i < e.size(); ++i)
    if (e[i] != 0) m[a.generator(i).name] = e[i];
  return m;
}

Exponents exponents_from_json(const std::vector<std::string>& names, const json& j) {
  if (!j.is_object()) throw PresentationError("monomial must be a JSON object");
  Exponents e(names.size(), 0);
  for (const auto& [name, k] : j.items()) {
    std::size_t i = 0;
    while (i < names.size() && names[i] != name) ++i;
    if (i == names.size()) throw PresentationError("unknown generator '" + name + "'");
    e[i] += k.get<std::uint32_t>();
  }
  return e;
}

}  // namespace

json to_json(const AlgebraPresentation& a) {
  json gens = json::array();
  for (const auto& g : a.generators()) {
    json rep = json::array();
    for (const auto& t : g.replacement) rep.push_back(json::array({integer_to_json(t.coefficient), exponents_to_json(a, t.exponents)}));
    gens.push_back({{"name", g.name},
                    {"degree", g.degree},
                    {"power_bound", g.power_bound ? json(*g.power_bound) : json(nullptr)},
                    {"replacement", rep}});
  }
  return {{"coefficients", to_string(a.coefficients())},
          {"truncation", a.truncation() ? json(*a.truncation()) : json(nullptr)},
          {"generators", gens}};
}

AlgebraPresentation presentation_from_json(const json& j) {
  try {
    const std::string ring = j.at("coefficients").get<std::string>();
    if (ring != "F2" && ring != "Z") throw PresentationError("coefficients must be \"F2\" or \"Z\"");
    std::optional<std::uint32_t> truncation;
    if (!j.at("truncation").is_null()) truncation = j.at("truncation").get<std::uint32_t>();
    std::vector<std::string> names;
    for (const auto& g : j.at("generators")) names.push_back(g.at("name").get<std::string>());
    std::vector<GeneratorSpec> gens;
    for (const auto& g : j.at("generators")) {
      GeneratorSpec spec;
      spec.name = g.at("name").get<std::string>();
      spec.degree = g.at("degree").get<std::uint32_t>();
      if (g.contains("power_bound") && !g.at("power_bound").is_null()) spec.power_bound = g.at("power_bound").get<std::uint32_t>();
      if (g.contains("replacement")) {
        for (const auto& t : g.at("replacement")) {
          if (!t.is_array() || t.size() != 2) throw PresentationError("replacement term must be [coeff, monomial]");
          spec.replacement.push_back({integer_from_json(t[0]), exponents_from_json(names, t[1])});
        }
      }
      gens.push_back(std::move(spec));
    }
    return AlgebraPresentation(std::move(gens), ring == "F2" ? Coefficients::F2 : Coefficients::Z, truncation);
  } catch (const json::exception& e) {
    throw PresentationError(std::string("malformed presentation JSON: ") + e.what());
  }
}

json to_json(const AlgebraPresentation& a, const Element& x) {
  json out = json::array();
  for (const auto& [m, c] : x.terms()) out.push_back(json::array({integer_to_json(c), exponents_to_json(a, m.exponents)}));
  return out;
}

Element element_from_json(const AlgebraPresentation& a, const json& j) {
  if (!j.is_array()) throw PresentationError("element must be a JSON array");
  std::vector<std::string> names;
  for (const auto& g : a.generators()) names.push_back(g.name);
  Element out;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2) throw PresentationError("element term must be [coeff, monomial]");
    out = a.add(out, a.scale(a.normal_form(exponents_from_json(names, t[1])), integer_from_json(t[0])));
  }
  return out;
}

json to_json(const PoincarePolynomial& p) { return p.coefficients().empty() ? json::array() : json(p.coefficients()); }

json to_json(const Polynomial& p) { return p.coefficients().empty() ? json::array() : json(p.coefficients()); }

}  // namespace chowlab
