#include "chowlab/finite_field.hpp"

#include "chowlab/errors.hpp"

#include <string>

namespace chowlab {

namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// Rank of a square matrix over F_p (row-major, destroyed).
std::size_t rank_mod_p(const PrimeField& f, std::vector<std::vector<std::uint32_t>> m) {
  std::size_t rank = 0;
  const std::size_t rows = m.size();
  const std::size_t cols = rows == 0 ? 0 : m[0].size();
  for (std::size_t c = 0; c < cols && rank < rows; ++c) {
    std::size_t piv = rank;
    while (piv < rows && m[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    std::swap(m[piv], m[rank]);
    const std::uint32_t inv = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < rows; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint32_t k = m[r][c];
      for (std::size_t j = 0; j < cols; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[rank][j]));
    }
    ++rank;
  }
  return rank;
}

// Kernel basis of a square matrix over F_p.
std::vector<std::vector<std::uint32_t>> kernel_mod_p(const PrimeField& f, std::vector<std::vector<std::uint32_t>> m) {
  const std::size_t n = m.size();
  std::vector<long> pivot_of_col(n, -1);
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < n; ++c) {
    std::size_t piv = rank;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) continue;
    std::swap(m[piv], m[rank]);
    const std::uint32_t inv = f.inv(m[rank][c]);
    for (auto& x : m[rank]) x = f.mul(x, inv);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == rank || m[r][c] == 0) continue;
      const std::uint32_t k = m[r][c];
      for (std::size_t j = 0; j < n; ++j) m[r][j] = f.sub(m[r][j], f.mul(k, m[rank][j]));
    }
    pivot_of_col[c] = static_cast<long>(rank);
    ++rank;
  }
  std::vector<std::vector<std::uint32_t>> out;
  for (std::size_t free = 0; free < n; ++free) {
    if (pivot_of_col[free] >= 0) continue;
    std::vector<std::uint32_t> v(n, 0);
    v[free] = 1;
    for (std::size_t c = 0; c < n; ++c)
      if (pivot_of_col[c] >= 0) v[c] = f.neg(m[static_cast<std::size_t>(pivot_of_col[c])][free]);
    out.push_back(std::move(v));
  }
  return out;
}

// Depth-first enumeration of reduced echelon bases of m-dimensional subspaces
// of F^dim (|F| = order, elements encoded 0..order-1 with 0 and 1 the field's
// zero and one). `ok(rows, k, v)` decides whether v may extend rows[0..k).
template <class Ok>
class SubspaceSearch {
 public:
  SubspaceSearch(std::size_t dim, std::uint32_t order, std::size_t m, unsigned long long budget, Ok ok)
      : dim_(dim), order_(order), m_(m), budget_(budget), ok_(std::move(ok)), rows_(m), pivots_(m) {}

  unsigned long long count() {
    first_only_ = false;
    found_ = 0;
    choose_pivots(0, 0);
    return found_;
  }

  bool exists() {
    first_only_ = true;
    found_ = 0;
    return choose_pivots(0, 0);
  }

 private:
  bool choose_pivots(std::size_t start, std::size_t k) {
    if (k == m_) return fill(0);
    for (std::size_t c = start; c + (m_ - k) <= dim_; ++c) {
      pivots_[k] = c;
      if (choose_pivots(c + 1, k + 1)) return true;
    }
    return false;
  }

  bool fill(std::size_t k) {
    if (k == m_) {
      ++found_;
      return first_only_;
    }
    std::vector<std::size_t> free;
    for (std::size_t j = pivots_[k] + 1; j < dim_; ++j) {
      bool is_pivot = false;
      for (std::size_t i = 0; i < m_; ++i) is_pivot = is_pivot || pivots_[i] == j;
      if (!is_pivot) free.push_back(j);
    }
    std::vector<std::uint32_t> v(dim_, 0);
    v[pivots_[k]] = 1;
    while (true) {
      if (++nodes_ > budget_)
        throw ResourceError("subspace enumeration exceeded budget of " + std::to_string(budget_) + " nodes",
                            budget_);
      if (ok_(rows_, k, v)) {
        rows_[k] = v;
        if (fill(k + 1)) return true;
      }
      std::size_t i = 0;
      while (i < free.size()) {
        if (++v[free[i]] < order_) break;
        v[free[i]] = 0;
        ++i;
      }
      if (i == free.size()) break;
    }
    return false;
  }

  std::size_t dim_;
  std::uint32_t order_;
  std::size_t m_;
  unsigned long long budget_;
  Ok ok_;
  std::vector<std::vector<std::uint32_t>> rows_;
  std::vector<std::size_t> pivots_;
  bool first_only_ = false;
  unsigned long long found_ = 0;
  unsigned long long nodes_ = 0;
};

template <class Ok>
SubspaceSearch<Ok> make_search(std::size_t dim, std::uint32_t order, std::size_t m, unsigned long long budget, Ok ok) {
  return SubspaceSearch<Ok>(dim, order, m, budget, std::move(ok));
}

auto hermitian_predicate(const HermitianSpace& h) {
  return [&h](const std::vector<std::vector<std::uint32_t>>& rows, std::size_t k, const std::vector<std::uint32_t>& v) {
    if (h.form(v, v) != 0) return false;
    for (std::size_t i = 0; i < k; ++i)
      if (h.form(v, rows[i]) != 0) return false;
    return true;
  };
}

auto quadratic_predicate(const QuadraticSpace& q) {
  return [&q](const std::vector<std::vector<std::uint32_t>>& rows, std::size_t k, const std::vector<std::uint32_t>& v) {
    if (q.value(v) != 0) return false;
    for (std::size_t i = 0; i < k; ++i)
      if (q.polar(v, rows[i]) != 0) return false;
    return true;
  };
}

}  // namespace

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (p >= 256 || !is_prime(p)) throw DomainError("not a supported prime: " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t x) const {
  if (x % p_ == 0) throw DomainError("inverse of zero in F_" + std::to_string(p_));
  for (std::uint32_t y = 1; y < p_; ++y)
    if (mul(x, y) == 1) return y;
  throw InternalError("no inverse found");
}

std::uint32_t PrimeField::normalize(long long x) const {
  long long r = x % static_cast<long long>(p_);
  if (r < 0) r += p_;
  return static_cast<std::uint32_t>(r);
}

bool PrimeField::is_square(std::uint32_t x) const {
  for (std::uint32_t y = 0; y < p_; ++y)
    if (mul(y, y) == x % p_) return true;
  return false;
}

QuadExtField::QuadExtField(std::uint32_t p) : base_(p), q_(p * p) {
  bool found = false;
  for (std::uint32_t a = 0; a < p && !found; ++a)
    for (std::uint32_t b = 0; b < p && !found; ++b) {
      bool has_root = false;
      for (std::uint32_t x = 0; x < p; ++x)
        has_root = has_root || (x * x + a * x + b) % p == 0;
      if (!has_root) {
        a_ = a;
        b_ = b;
        found = true;
      }
    }
  if (!found) throw InternalError("no irreducible quadratic found");

  add_.resize(q_ * q_);
  mul_.resize(q_ * q_);
  neg_.resize(q_);
  conj_.resize(q_);
  const auto& f = base_;
  for (Elem x = 0; x < q_; ++x) {
    neg_[x] = make(f.neg(re(x)), f.neg(im(x)));
    for (Elem y = 0; y < q_; ++y) {
      add_[x * q_ + y] = make(f.add(re(x), re(y)), f.add(im(x), im(y)));
      // theta^2 = -a theta - b
      const std::uint32_t x0 = re(x), x1 = im(x), y0 = re(y), y1 = im(y);
      const std::uint32_t t2 = f.mul(x1, y1);
      const std::uint32_t c0 = f.sub(f.mul(x0, y0), f.mul(t2, b_));
      const std::uint32_t c1 = f.sub(f.add(f.mul(x0, y1), f.mul(x1, y0)), f.mul(t2, a_));
      mul_[x * q_ + y] = make(c0, c1);
    }
  }
  for (Elem x = 0; x < q_; ++x) {
    Elem acc = 1;
    for (std::uint32_t k = 0; k < p; ++k) acc = mul(acc, x);
    conj_[x] = acc;
  }
}

QuadExtField::Elem QuadExtField::inv(Elem x) const {
  if (x == 0) throw DomainError("inverse of zero in F_" + std::to_string(q_));
  for (Elem y = 1; y < q_; ++y)
    if (mul(x, y) == 1) return y;
  throw InternalError("no inverse found");
}

HermitianSpace::HermitianSpace(std::uint32_t p, std::vector<std::uint32_t> diag) : field_(p), diag_(std::move(diag)) {
  for (auto d : diag_)
    if (d == 0 || d >= p) throw DomainError("hermitian diagonal entries must be nonzero residues mod " + std::to_string(p));
}

QuadExtField::Elem HermitianSpace::form(const std::vector<QuadExtField::Elem>& v,
                                        const std::vector<QuadExtField::Elem>& w) const {
  QuadExtField::Elem acc = 0;
  for (std::size_t i = 0; i < diag_.size(); ++i) {
    if (v[i] == 0 || w[i] == 0) continue;
    acc = field_.add(acc, field_.mul(diag_[i], field_.mul(v[i], field_.conj(w[i]))));
  }
  return acc;
}

HermitianSpace HermitianSpace::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("p") || !j.contains("diag")) throw UsageError("form spec needs \"p\" and \"diag\"");
  try {
    auto p = j.at("p").get<std::uint32_t>();
    auto diag = j.at("diag").get<std::vector<std::uint32_t>>();
    if (j.contains("n") && j.at("n").get<std::size_t>() != diag.size())
      throw UsageError("form spec: n does not match the diagonal length");
    return HermitianSpace(p, std::move(diag));
  } catch (const nlohmann::json::exception& e) {
    throw UsageError(std::string("form spec: ") + e.what());
  } catch (const DomainError& e) {
    throw UsageError(std::string("form spec: ") + e.what());
  }
}

nlohmann::json HermitianSpace::to_json() const {
  return {{"p", field_.p()}, {"n", diag_.size()}, {"diag", diag_}};
}

QuadraticSpace::QuadraticSpace(std::uint32_t p, std::size_t dim, std::vector<std::uint32_t> upper)
    : field_(p), dim_(dim), c_(std::move(upper)) {
  if (c_.size() != dim * dim) throw UsageError("quadratic form matrix has wrong size");
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j < dim; ++j) {
      c_[i * dim + j] %= p;
      if (j < i && c_[i * dim + j] != 0) throw UsageError("quadratic form matrix must be upper triangular");
    }
}

QuadraticSpace QuadraticSpace::hyperbolic(std::uint32_t p, std::size_t N) {
  std::vector<std::uint32_t> c(4 * N * N, 0);
  for (std::size_t i = 0; i < N; ++i) c[(2 * i) * 2 * N + 2 * i + 1] = 1;
  return QuadraticSpace(p, 2 * N, std::move(c));
}

std::uint32_t QuadraticSpace::value(const std::vector<std::uint32_t>& v) const {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < dim_; ++i) {
    if (v[i] == 0) continue;
    for (std::size_t j = i; j < dim_; ++j) {
      const std::uint32_t c = c_[i * dim_ + j];
      if (c == 0 || v[j] == 0) continue;
      acc = field_.add(acc, field_.mul(c, field_.mul(v[i], v[j])));
    }
  }
  return acc;
}

std::uint32_t QuadraticSpace::polar(const std::vector<std::uint32_t>& v, const std::vector<std::uint32_t>& w) const {
  std::uint32_t acc = 0;
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      const std::uint32_t c = c_[i * dim_ + j];
      if (c == 0) continue;
      const std::uint32_t t = i == j ? field_.mul(2, field_.mul(v[i], w[i]))
                                     : field_.add(field_.mul(v[i], w[j]), field_.mul(v[j], w[i]));
      acc = field_.add(acc, field_.mul(c, t));
    }
  return acc;
}

bool QuadraticSpace::nondegenerate() const {
  std::vector<std::vector<std::uint32_t>> b(dim_, std::vector<std::uint32_t>(dim_, 0));
  for (std::size_t i = 0; i < dim_; ++i)
    for (std::size_t j = i; j < dim_; ++j) {
      const std::uint32_t c = c_[i * dim_ + j];
      if (i == j) {
        b[i][i] = field_.mul(2, c);
      } else {
        b[i][j] = c;
        b[j][i] = c;
      }
    }
  if (field_.p() != 2) return rank_mod_p(field_, b) == dim_;
  const auto radical = kernel_mod_p(field_, b);
  // q restricted to the radical is additive in characteristic 2; it must
  // have no nonzero zero there.
  const std::size_t k = radical.size();
  if (k > 20) return false;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<std::uint32_t> v(dim_, 0);
    for (std::size_t i = 0; i < k; ++i)
      if (mask >> i & 1)
        for (std::size_t j = 0; j < dim_; ++j) v[j] ^= radical[i][j];
    if (value(v) == 0) return false;
  }
  return true;
}

QuadraticSpace trace_quadratic(const HermitianSpace& h) {
  const auto& K = h.field();
  const std::uint32_t p = K.p();
  const std::size_t n = h.dimension();
  const std::size_t dim = 2 * n;
  // Coordinate 2i is the F_p-part of v_i, coordinate 2i+1 its theta-part.
  auto lift = [&](const std::vector<std::uint32_t>& x) {
    std::vector<QuadExtField::Elem> v(n);
    for (std::size_t i = 0; i < n; ++i) v[i] = K.make(x[2 * i], x[2 * i + 1]);
    return v;
  };
  auto q = [&](const std::vector<std::uint32_t>& x) {
    const auto v = lift(x);
    const auto z = h.form(v, v);
    if (!K.in_base(z)) throw InternalError("h(v, v) outside the base field");
    return K.re(z);
  };
  const PrimeField& f = K.base();
  std::vector<std::uint32_t> c(dim * dim, 0);
  std::vector<std::uint32_t> qi(dim);
  for (std::size_t i = 0; i < dim; ++i) {
    std::vector<std::uint32_t> e(dim, 0);
    e[i] = 1;
    qi[i] = q(e);
    c[i * dim + i] = qi[i];
  }
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = i + 1; j < dim; ++j) {
      std::vector<std::uint32_t> e(dim, 0);
      e[i] = 1;
      e[j] = 1;
      c[i * dim + j] = f.sub(f.sub(q(e), qi[i]), qi[j]);
    }
  QuadraticSpace out(p, dim, std::move(c));
  if (!out.nondegenerate()) throw InternalError("trace form is degenerate");
  return out;
}

int witt_index_hermitian(const HermitianSpace& h, unsigned long long budget) {
  int m = 0;
  while (static_cast<std::size_t>(m) < h.dimension()) {
    auto s = make_search(h.dimension(), h.field().order(), m + 1, budget, hermitian_predicate(h));
    if (!s.exists()) break;
    ++m;
  }
  return m;
}

int witt_index_quadratic(const QuadraticSpace& q, unsigned long long budget) {
  int m = 0;
  while (static_cast<std::size_t>(m) < q.dimension()) {
    auto s = make_search(q.dimension(), q.field().p(), m + 1, budget, quadratic_predicate(q));
    if (!s.exists()) break;
    ++m;
  }
  return m;
}

unsigned long long count_isotropic(const HermitianSpace& h, int r, unsigned long long budget) {
  if (r < 0) throw DomainError("subspace dimension must be nonnegative");
  if (static_cast<std::size_t>(r) > h.dimension()) return 0;
  auto s = make_search(h.dimension(), h.field().order(), static_cast<std::size_t>(r), budget, hermitian_predicate(h));
  return s.count();
}

unsigned long long count_singular(const QuadraticSpace& q, int m, unsigned long long budget) {
  if (m < 0) throw DomainError("subspace dimension must be nonnegative");
  if (static_cast<std::size_t>(m) > q.dimension()) return 0;
  auto s = make_search(q.dimension(), q.field().p(), static_cast<std::size_t>(m), budget, quadratic_predicate(q));
  return s.count();
}

PoincarePolynomial orth_count_polynomial(int N, int m) {
  if (N < 0 || m < 0 || m > N) throw DomainError("orth_count_polynomial needs 0 <= m <= N");
  Polynomial num{1};
  for (int i = 0; i < m; ++i) {
    const auto a = static_cast<std::size_t>(N - i);
    num = num * (Polynomial::monomial(a) - Polynomial{1}) * (Polynomial::monomial(a - 1) + Polynomial{1});
  }
  for (int i = 0; i < m; ++i)
    num = num.exact_divide(Polynomial::monomial(static_cast<std::size_t>(i + 1)) - Polynomial{1});
  return PoincarePolynomial(num);
}

bool jacobson_check(const HermitianSpace& h1, const HermitianSpace& h2, unsigned long long budget) {
  if (h1.field().p() != h2.field().p()) throw UsageError("jacobson_check needs forms over the same field");
  const auto q1 = trace_quadratic(h1);
  const auto q2 = trace_quadratic(h2);
  const bool quadratic_same =
      q1.dimension() == q2.dimension() && witt_index_quadratic(q1, budget) == witt_index_quadratic(q2, budget);
  const bool hermitian_same =
      h1.dimension() == h2.dimension() && witt_index_hermitian(h1, budget) == witt_index_hermitian(h2, budget);
  return quadratic_same == hermitian_same;
}

}  // namespace chowlab
