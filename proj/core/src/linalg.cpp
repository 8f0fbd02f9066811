#include "chowlab/linalg.hpp"

#include "chowlab/errors.hpp"

#include <algorithm>
#include <bit>

namespace chowlab {

namespace {

/// ca*a + cb*b, dropping zeros.
SparseVector combine(const Integer& ca, const SparseVector& a, const Integer& cb, const SparseVector& b) {
  SparseVector out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].first < b[j].first)) {
      if (ca != 0) out.emplace_back(a[i].first, ca * a[i].second);
      ++i;
    } else if (i == a.size() || b[j].first < a[i].first) {
      if (cb != 0) out.emplace_back(b[j].first, cb * b[j].second);
      ++j;
    } else {
      Integer v = ca * a[i].second + cb * b[j].second;
      if (v != 0) out.emplace_back(a[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

SparseVector negated(SparseVector v) {
  for (auto& [i, c] : v) c = -c;
  return v;
}

std::size_t words_for(std::size_t bits) { return (bits + 63) / 64; }

std::optional<std::size_t> lowest_bit(const std::vector<std::uint64_t>& w) {
  for (std::size_t k = 0; k < w.size(); ++k)
    if (w[k] != 0) return k * 64 + static_cast<std::size_t>(std::countr_zero(w[k]));
  return std::nullopt;
}

bool all_zero(const std::vector<std::uint64_t>& w) {
  return std::all_of(w.begin(), w.end(), [](std::uint64_t x) { return x == 0; });
}

void xor_into(std::vector<std::uint64_t>& dst, const std::vector<std::uint64_t>& src) {
  for (std::size_t k = 0; k < dst.size(); ++k) dst[k] ^= src[k];
}

std::vector<std::uint64_t> to_bits(const SparseVector& v, std::size_t bits) {
  std::vector<std::uint64_t> w(words_for(bits), 0);
  for (const auto& [i, c] : v) {
    if (i >= bits) throw UsageError("vector index out of range");
    if (c % 2 != 0) w[i / 64] ^= std::uint64_t{1} << (i % 64);
  }
  return w;
}

SparseVector from_bits(const std::vector<std::uint64_t>& w) {
  SparseVector out;
  for (std::size_t k = 0; k < w.size(); ++k) {
    std::uint64_t x = w[k];
    while (x != 0) {
      const int b = std::countr_zero(x);
      out.emplace_back(k * 64 + static_cast<std::size_t>(b), Integer(1));
      x &= x - 1;
    }
  }
  return out;
}

}  // namespace

Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t) {
  Integer old_r = a, r = b, old_s = 1, s1 = 0, old_t = 0, t1 = 1;
  while (r != 0) {
    Integer q = old_r / r;
    Integer tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s1;
    old_s = s1;
    s1 = tmp;
    tmp = old_t - q * t1;
    old_t = t1;
    t1 = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_s = -old_s;
    old_t = -old_t;
  }
  s = old_s;
  t = old_t;
  return old_r;
}

Echelon::Echelon(Coefficients ring, std::size_t columns, std::size_t tags)
    : ring_(ring), columns_(columns), tags_(tags), pivot_row_(columns, -1) {}

void Echelon::insert(const SparseVector& row, std::optional<std::size_t> tag) {
  if (tag && *tag >= tags_) throw UsageError("tag index out of range");
  for (const auto& [i, c] : row)
    if (i >= columns_) throw UsageError("row index out of range");
  if (ring_ == Coefficients::F2) {
    F2Row r{to_bits(row, columns_), std::vector<std::uint64_t>(words_for(tags_), 0)};
    if (tag) r.tag[*tag / 64] |= std::uint64_t{1} << (*tag % 64);
    insert_f2(std::move(r));
  } else {
    ZRow r{row, {}};
    std::erase_if(r.main, [](const auto& e) { return e.second == 0; });
    if (tag) r.tag.emplace_back(*tag, Integer(1));
    insert_z(std::move(r));
  }
}

void Echelon::insert_f2(F2Row row) {
  while (true) {
    auto lead = lowest_bit(row.main);
    if (!lead) {
      if (!all_zero(row.tag)) relations_.push_back(from_bits(row.tag));
      return;
    }
    const long p = pivot_row_[*lead];
    if (p < 0) {
      pivot_row_[*lead] = static_cast<long>(f2_rows_.size());
      f2_rows_.push_back(std::move(row));
      return;
    }
    xor_into(row.main, f2_rows_[p].main);
    xor_into(row.tag, f2_rows_[p].tag);
  }
}

void Echelon::insert_z(ZRow v) {
  while (true) {
    if (v.main.empty()) {
      if (!v.tag.empty()) relations_.push_back(std::move(v.tag));
      return;
    }
    const std::size_t c = v.main.front().first;
    const long p = pivot_row_[c];
    if (p < 0) {
      if (v.main.front().second < 0) {
        v.main = negated(std::move(v.main));
        v.tag = negated(std::move(v.tag));
      }
      pivot_row_[c] = static_cast<long>(z_rows_.size());
      z_rows_.push_back(std::move(v));
      return;
    }
    ZRow& b = z_rows_[p];
    const Integer a = v.main.front().second;
    const Integer bc = b.main.front().second;
    if (a % bc == 0) {
      const Integer q = a / bc;
      v.main = combine(1, v.main, -q, b.main);
      v.tag = combine(1, v.tag, -q, b.tag);
      continue;
    }
    Integer s, t;
    const Integer g = extended_gcd(bc, a, s, t);
    const Integer bq = bc / g, aq = a / g;
    ZRow nb{combine(s, b.main, t, v.main), combine(s, b.tag, t, v.tag)};
    ZRow nv{combine(aq, b.main, -bq, v.main), combine(aq, b.tag, -bq, v.tag)};
    b = std::move(nb);
    v = std::move(nv);
  }
}

Echelon::Reduction Echelon::reduce(const SparseVector& target) const {
  Reduction out;
  if (ring_ == Coefficients::F2) {
    auto main = to_bits(target, columns_);
    std::vector<std::uint64_t> acc(words_for(tags_), 0);
    while (auto lead = lowest_bit(main)) {
      const long p = pivot_row_[*lead];
      if (p < 0) return out;
      xor_into(main, f2_rows_[p].main);
      xor_into(acc, f2_rows_[p].tag);
    }
    out.member = true;
    out.coefficients = from_bits(acc);
    return out;
  }
  SparseVector t = target;
  std::erase_if(t, [](const auto& e) { return e.second == 0; });
  SparseVector acc;
  while (!t.empty()) {
    const std::size_t c = t.front().first;
    if (c >= columns_) throw UsageError("vector index out of range");
    const long p = pivot_row_[c];
    if (p < 0) return out;
    const ZRow& b = z_rows_[p];
    const Integer& bc = b.main.front().second;
    if (t.front().second % bc != 0) return out;
    const Integer q = t.front().second / bc;
    t = combine(1, t, -q, b.main);
    acc = combine(1, acc, q, b.tag);
  }
  out.member = true;
  out.coefficients = std::move(acc);
  return out;
}

std::size_t Echelon::rank() const { return ring_ == Coefficients::F2 ? f2_rows_.size() : z_rows_.size(); }

std::vector<SparseVector> Echelon::rows() const {
  std::vector<SparseVector> out;
  for (std::size_t c : pivots()) {
    const long p = pivot_row_[c];
    out.push_back(ring_ == Coefficients::F2 ? from_bits(f2_rows_[p].main) : z_rows_[p].main);
  }
  return out;
}

Integer Echelon::pivot_product() const {
  Integer out = 1;
  if (ring_ == Coefficients::F2) return out;
  for (const auto& r : z_rows_) out *= r.main.front().second;
  return out;
}

std::vector<std::size_t> Echelon::pivots() const {
  std::vector<std::size_t> out;
  for (std::size_t c = 0; c < columns_; ++c)
    if (pivot_row_[c] >= 0) out.push_back(c);
  return out;
}

// ---------------------------------------------------------------- MonomialIndex

MonomialIndex::MonomialIndex(std::vector<Monomial> monomials) : monomials_(std::move(monomials)) {
  for (std::size_t i = 0; i < monomials_.size(); ++i) position_.emplace(monomials_[i], i);
}

std::optional<std::size_t> MonomialIndex::find(const Monomial& m) const {
  auto it = position_.find(m);
  if (it == position_.end()) return std::nullopt;
  return it->second;
}

SparseVector MonomialIndex::to_vector(const Element& x) const {
  SparseVector v;
  v.reserve(x.size());
  for (const auto& [m, c] : x.terms()) {
    auto i = find(m);
    if (!i) throw UsageError("element has a monomial outside the index");
    v.emplace_back(*i, c);
  }
  std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
  return v;
}

Element MonomialIndex::to_element(const SparseVector& v, Coefficients ring) const {
  Element x;
  for (const auto& [i, c] : v) x.add_term(monomials_.at(i), c, ring);
  return x;
}

// ---------------------------------------------------------------- span helpers

namespace {

MonomialIndex common_index(const Element& target, const std::vector<Element>& elements) {
  std::optional<std::uint32_t> degree;
  auto visit = [&](const Element& x) {
    if (x.is_zero()) return;
    auto d = x.degree();
    if (!d) throw UsageError("span computation requires homogeneous elements");
    if (degree && *degree != *d) throw UsageError("span computation mixes degrees");
    degree = d;
  };
  visit(target);
  for (const auto& x : elements) visit(x);
  std::vector<Monomial> ms;
  for (const auto& [m, c] : target.terms()) ms.push_back(m);
  for (const auto& x : elements)
    for (const auto& [m, c] : x.terms()) ms.push_back(m);
  std::sort(ms.begin(), ms.end());
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  return MonomialIndex(std::move(ms));
}

}  // namespace

MembershipResult span_membership(const AlgebraPresentation& a, const Element& target,
                                 const std::vector<Element>& spanners) {
  MonomialIndex index = common_index(target, spanners);
  Echelon ech(a.coefficients(), index.size(), spanners.size());
  for (std::size_t i = 0; i < spanners.size(); ++i) ech.insert(index.to_vector(spanners[i]), i);
  auto red = ech.reduce(index.to_vector(target));
  MembershipResult out;
  out.member = red.member;
  if (red.member) {
    out.coefficients.assign(spanners.size(), 0);
    for (const auto& [i, c] : red.coefficients) out.coefficients[i] = reduce(c, a.coefficients());
  }
  return out;
}

std::vector<Element> span_basis(const AlgebraPresentation& a, const std::vector<Element>& elements) {
  MonomialIndex index = common_index(Element{}, elements);
  Echelon ech(a.coefficients(), index.size());
  for (const auto& x : elements) ech.insert(index.to_vector(x));
  std::vector<Element> out;
  for (const auto& row : ech.rows()) out.push_back(index.to_element(row, a.coefficients()));
  return out;
}

}  // namespace chowlab
