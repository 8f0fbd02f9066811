#include "chowlab/motive.hpp"

#include "chowlab/errors.hpp"
#include "chowlab/finite_field.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace chowlab {

namespace {

bool in_range(int n, int r) { return n >= 0 && r >= 0 && r <= n / 2; }

std::string range_message(int n, int r) {
  return "need 0 <= r <= n/2, got n=" + std::to_string(n) + " r=" + std::to_string(r);
}

}  // namespace

Atom Atom::essential(int n, int r) {
  if (!in_range(n, r)) throw DomainError("Essential atom: " + range_message(n, r));
  return {Kind::Essential, n, r};
}

std::string Atom::to_string() const {
  switch (kind) {
    case Kind::Tate:
      return "Tate";
    case Kind::SpecK:
      return "SpecK";
    case Kind::Essential:
      return "Essential(" + std::to_string(n) + "," + std::to_string(r) + ")";
  }
  return "?";
}

namespace {

// By shift, the residual bucket last.
bool summand_before(const Summand& x, const Summand& y) {
  if (x.shift.has_value() != y.shift.has_value()) return x.shift.has_value();
  if (x.shift != y.shift) return *x.shift < *y.shift;
  return x.atom < y.atom;
}

}  // namespace

Motive::Motive(std::vector<Summand> summands) : summands_(std::move(summands)) {
  std::sort(summands_.begin(), summands_.end(), summand_before);
}

void Motive::add(Summand s) {
  summands_.insert(std::upper_bound(summands_.begin(), summands_.end(), s, summand_before), s);
}

bool Motive::has_residual() const {
  return std::any_of(summands_.begin(), summands_.end(), [](const Summand& s) { return !s.shift; });
}

PoincarePolynomial Motive::realize() const {
  PoincarePolynomial out;
  for (const auto& s : summands_) {
    if (!s.shift) continue;
    switch (s.atom.kind) {
      case Atom::Kind::Tate:
        out += PoincarePolynomial::monomial(*s.shift);
        break;
      case Atom::Kind::SpecK:
        // Over a splitting field Spec K is two points.
        out += PoincarePolynomial::monomial(*s.shift, 2);
        break;
      case Atom::Kind::Essential:
        out += essential_poincare(s.atom.n, s.atom.r).shifted(*s.shift);
        break;
    }
  }
  return out;
}

nlohmann::json Motive::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& s : summands_) {
    nlohmann::json shift = nullptr;
    if (s.shift) shift = *s.shift;
    arr.push_back({{"atom", s.atom.to_string()}, {"shift", shift}});
  }
  return arr;
}

std::int64_t dim_unitary(int n, int r) {
  if (!in_range(n, r)) throw DomainError("dim_unitary: " + range_message(n, r));
  return static_cast<std::int64_t>(r) * (2 * static_cast<std::int64_t>(n) - 3 * r);
}

std::int64_t dim_orthogonal(int n, int m) {
  if (n < 0 || m < 0 || m > n)
    throw DomainError("dim_orthogonal: need 0 <= m <= n, got n=" + std::to_string(n) + " m=" + std::to_string(m));
  return static_cast<std::int64_t>(m) * (4 * static_cast<std::int64_t>(n) - 3 * m - 1) / 2;
}

Motive decompose_step(int n, int r) {
  if (!in_range(n, r)) throw DomainError("decompose_step: " + range_message(n, r));
  if (r == 0) return Motive({{Atom::tate(), 0}});
  const int n2 = n - 2;
  const std::int64_t d = dim_unitary(n, r);
  Motive out;
  if (in_range(n2, r - 1)) {
    const auto j = static_cast<std::uint32_t>(d - dim_unitary(n2, r - 1));
    out.add({Atom::essential(n2, r - 1), 0});
    out.add({Atom::essential(n2, r - 1), j});
  }
  if (in_range(n2, r)) {
    const auto i = static_cast<std::uint32_t>((d - dim_unitary(n2, r)) / 2);
    out.add({Atom::essential(n2, r), i});
  }
  return out;
}

PoincarePolynomial essential_poincare(int n, int r) {
  if (!in_range(n, r)) throw DomainError("essential_poincare: " + range_message(n, r));
  if (r == 0) return PoincarePolynomial{1};

  static std::mutex mutex;
  static std::map<std::pair<int, int>, PoincarePolynomial> cache;
  {
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find({n, r});
    if (it != cache.end()) return it->second;
  }
  const PoincarePolynomial value = decompose_step(n, r).realize();
  std::lock_guard<std::mutex> lock(mutex);
  return cache.emplace(std::make_pair(n, r), value).first->second;
}

PoincarePolynomial split_quadric_poincare(int n) {
  if (n < 1) throw DomainError("split_quadric_poincare needs n >= 1");
  PoincarePolynomial out;
  for (int d = 0; d <= 2 * n - 2; ++d) out += PoincarePolynomial::monomial(static_cast<std::size_t>(d));
  return out + PoincarePolynomial::monomial(static_cast<std::size_t>(n - 1));
}

Motive witt_decompose_whole(int n, int r, int witt_h) {
  if (witt_h < 0 || witt_h > n / 2)
    throw DomainError("witt_decompose_whole: need 0 <= witt_h <= n/2, got " + std::to_string(witt_h));
  if (!in_range(n, r)) return Motive();

  // Whole motives M(X_s) of the current form, with their shifts.
  std::vector<std::pair<int, std::uint32_t>> whole{{r, 0}};
  int dim = n;
  bool residual = false;
  for (int step = 0; step < witt_h; ++step) {
    std::vector<std::pair<int, std::uint32_t>> next;
    for (const auto& [s, shift] : whole) {
      if (s == 0) {
        next.push_back({0, shift});
        continue;
      }
      residual = true;
      const Motive pieces = decompose_step(dim, s);
      for (const auto& piece : pieces.summands()) next.push_back({piece.atom.r, shift + *piece.shift});
    }
    whole = std::move(next);
    dim -= 2;
  }
  Motive out;
  for (const auto& [s, shift] : whole) {
    if (s == 0) {
      out.add({Atom::tate(), shift});
    } else {
      out.add({Atom::essential(dim, s), shift});
      residual = true;
    }
  }
  if (residual) out.add({Atom::spec_k(), std::nullopt});
  return out;
}

nlohmann::json KvadrikaReport::to_json() const {
  return {{"n", n}, {"residual", residual.coefficients()}, {"binding", binding}, {"pass", pass}};
}

KvadrikaReport kvadrika_check(int n) {
  if (n < 2) throw DomainError("kvadrika_check needs n >= 2");
  KvadrikaReport rep;
  rep.n = n;
  rep.residual = split_quadric_poincare(n).polynomial() -
                 (Polynomial{1, 1} * essential_poincare(n, 1).polynomial());
  rep.binding = n % 2 == 0;
  rep.pass = !rep.binding || rep.residual.is_zero();
  return rep;
}

PoincarePolynomial split_orthogonal_grassmannian_poincare(int N, int m) {
  const PoincarePolynomial all = orth_count_polynomial(N, m);
  if (m != N || N == 0) return all;
  std::vector<std::int64_t> half;
  for (auto c : all.coefficients()) {
    if (c % 2 != 0) throw InternalError("maximal orthogonal grassmannian count is not split evenly");
    half.push_back(c / 2);
  }
  return PoincarePolynomial(std::move(half));
}

nlohmann::json DvaMrReport::to_json() const {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& c : cases) {
    nlohmann::json j = {{"m", c.m}, {"skipped", c.skipped}};
    if (!c.skipped) {
      j["shift"] = c.shift;
      j["positive"] = c.positive;
      j["dominated"] = c.dominated ? nlohmann::json(*c.dominated) : nlohmann::json(nullptr);
      if (c.dominated) {
        j["lhs"] = c.lhs.coefficients();
        j["rhs"] = c.rhs.coefficients();
      }
    }
    arr.push_back(std::move(j));
  }
  return {{"n", n}, {"r", r}, {"cases", arr}, {"pass", pass}};
}

DvaMrReport dvaMr_check(int n, int r, bool with_dominance) {
  if (r < 1 || r > n / 2) throw DomainError("dvaMr_check: need 1 <= r <= n/2");
  DvaMrReport rep;
  rep.n = n;
  rep.r = r;
  for (int m : {2 * r - 1, 2 * r}) {
    DvaMrCase c;
    c.m = m;
    if (m == 2 * r && n == 2) {
      c.skipped = true;
      rep.cases.push_back(c);
      continue;
    }
    c.shift = dim_orthogonal(n, m) - dim_unitary(n, r);
    c.positive = c.shift > 0;
    if (with_dominance && c.positive) {
      const auto e = essential_poincare(n, r);
      c.lhs = e + e.shifted(static_cast<std::size_t>(c.shift));
      c.rhs = split_orthogonal_grassmannian_poincare(n, m);
      c.dominated = c.lhs.dominated_by(c.rhs);
    }
    rep.pass = rep.pass && c.positive && c.dominated.value_or(true);
    rep.cases.push_back(c);
  }
  return rep;
}

std::vector<int> j_min(int n) {
  if (n < 2 || n % 2 != 0) throw DomainError("j_min needs even n >= 2");
  std::vector<int> out;
  for (int k = 0; k <= n - 2; k += 2) out.push_back(k);
  return out;
}

bool cd2_identity_check(int n) {
  const auto J = j_min(n);
  std::int64_t sum = 0;
  for (int k : J) sum += k;
  const std::int64_t dim_y = dim_orthogonal(n, n);
  const std::int64_t cd2 = dim_y - sum;
  const std::int64_t quarter = static_cast<std::int64_t>(n) * n / 4;
  return dim_y == static_cast<std::int64_t>(n) * (n - 1) / 2 && quarter == dim_y - sum &&
         cd2 == dim_unitary(n, n / 2) && dim_unitary(n, n / 2) == quarter;
}

}  // namespace chowlab
