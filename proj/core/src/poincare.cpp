#include "chowlab/poincare.hpp"

#include "chowlab/errors.hpp"

#include <algorithm>
#include <sstream>

namespace chowlab {

Polynomial::Polynomial(std::initializer_list<std::int64_t> coefficients) : c_(coefficients) { trim(); }

Polynomial::Polynomial(std::vector<std::int64_t> coefficients) : c_(std::move(coefficients)) { trim(); }

Polynomial Polynomial::monomial(std::size_t d, std::int64_t c) {
  std::vector<std::int64_t> v(d + 1, 0);
  v[d] = c;
  return Polynomial(std::move(v));
}

void Polynomial::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), 0);
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<std::int64_t> out(a.c_.size() + b.c_.size() - 1, 0);
  for (std::size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i] == 0) continue;
    for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
  }
  return Polynomial(std::move(out));
}

Polynomial Polynomial::exact_divide(const Polynomial& divisor) const {
  if (divisor.is_zero()) throw InternalError("polynomial division by zero");
  const std::int64_t lead = divisor.c_.back();
  if (lead != 1 && lead != -1) throw InternalError("polynomial divisor must have leading coefficient +-1");
  if (is_zero()) return {};
  if (degree() < divisor.degree()) throw InternalError("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
  std::vector<std::int64_t> rem = c_;
  std::vector<std::int64_t> quot(c_.size() - divisor.c_.size() + 1, 0);
  for (std::size_t k = quot.size(); k-- > 0;) {
    const std::int64_t q = rem[k + divisor.c_.size() - 1] * lead;
    quot[k] = q;
    for (std::size_t j = 0; j < divisor.c_.size(); ++j) rem[k + j] -= q * divisor.c_[j];
  }
  if (std::any_of(rem.begin(), rem.end(), [](std::int64_t x) { return x != 0; }))
    throw InternalError("inexact polynomial division: " + to_string() + " / " + divisor.to_string());
  return Polynomial(std::move(quot));
}

std::int64_t Polynomial::evaluate(std::int64_t q) const {
  std::int64_t acc = 0;
  for (std::size_t k = c_.size(); k-- > 0;) acc = acc * q + c_[k];
  return acc;
}

std::string Polynomial::to_string() const {
  if (c_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t d = 0; d < c_.size(); ++d) {
    std::int64_t c = c_[d];
    if (c == 0) continue;
    if (!first) out << (c < 0 ? " - " : " + ");
    else if (c < 0) out << "-";
    first = false;
    std::int64_t a = c < 0 ? -c : c;
    if (d == 0) {
      out << a;
      continue;
    }
    if (a != 1) out << a << "*";
    out << "q";
    if (d > 1) out << "^" << d;
  }
  return out.str();
}

PoincarePolynomial::PoincarePolynomial(std::initializer_list<std::int64_t> coefficients)
    : PoincarePolynomial(Polynomial(coefficients)) {}

PoincarePolynomial::PoincarePolynomial(std::vector<std::int64_t> coefficients)
    : PoincarePolynomial(Polynomial(std::move(coefficients))) {}

PoincarePolynomial::PoincarePolynomial(const Polynomial& p) : p_(p) {
  for (auto c : p_.coefficients())
    if (c < 0) throw DomainError("Poincare polynomial with negative coefficient: " + p.to_string());
}

PoincarePolynomial PoincarePolynomial::monomial(std::size_t d, std::int64_t c) {
  return PoincarePolynomial(Polynomial::monomial(d, c));
}

PoincarePolynomial PoincarePolynomial::exterior(const std::vector<std::size_t>& degrees) {
  PoincarePolynomial out{1};
  for (auto d : degrees) out = out * (PoincarePolynomial{1} + monomial(d));
  return out;
}

bool PoincarePolynomial::is_palindromic() const {
  const auto& c = coefficients();
  return std::equal(c.begin(), c.end(), c.rbegin());
}

bool PoincarePolynomial::dominated_by(const PoincarePolynomial& other) const {
  for (std::size_t d = 0; d < coefficients().size(); ++d)
    if ((*this)[d] > other[d]) return false;
  return true;
}

PoincarePolynomial PoincarePolynomial::shifted(std::size_t k) const {
  return PoincarePolynomial(p_ * Polynomial::monomial(k));
}

PoincarePolynomial& PoincarePolynomial::operator+=(const PoincarePolynomial& o) {
  p_ += o.p_;
  return *this;
}

PoincarePolynomial operator*(const PoincarePolynomial& a, const PoincarePolynomial& b) {
  return PoincarePolynomial(a.p_ * b.p_);
}

}  // namespace chowlab
