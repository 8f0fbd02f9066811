#pragma once

// Row echelon forms over F2 (packed bit rows) and over Z (sparse rows,
// extended-gcd row operations). Rows may carry a tag vector recording which
// combination of inserted spanners they are, so membership tests can return
// witness coefficients and vanishing rows yield the relation lattice.

#include "chowlab/algebra.hpp"
#include "chowlab/integer.hpp"

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace chowlab {

/// Sparse integer vector, strictly increasing indices, no zero entries.
using SparseVector = std::vector<std::pair<std::size_t, Integer>>;

class Echelon {
 public:
  /// `columns` is the ambient dimension; `tags` the number of spanners whose
  /// combinations are tracked (0 disables tracking).
  Echelon(Coefficients ring, std::size_t columns, std::size_t tags = 0);

  /// Inserts a row; with tracking enabled, `tag` names the spanner index.
  void insert(const SparseVector& row, std::optional<std::size_t> tag = std::nullopt);

  struct Reduction {
    bool member = false;
    /// Coefficients over the tagged spanners (only with tracking enabled).
    SparseVector coefficients;
  };
  Reduction reduce(const SparseVector& target) const;
  bool contains(const SparseVector& target) const { return reduce(target).member; }

  std::size_t rank() const;
  Coefficients ring() const { return ring_; }
  std::size_t columns() const { return columns_; }

  /// Echelon rows spanning the inserted rows (a basis over the ring).
  std::vector<SparseVector> rows() const;
  /// Tag vectors of the inserted combinations that vanished: a basis of the
  /// relation module among tagged spanners.
  const std::vector<SparseVector>& relations() const { return relations_; }
  /// Product of the absolute values of the pivots (1 over F2).
  Integer pivot_product() const;
  /// Pivot columns in increasing order.
  std::vector<std::size_t> pivots() const;

 private:
  struct ZRow {
    SparseVector main;
    SparseVector tag;
  };
  struct F2Row {
    std::vector<std::uint64_t> main;
    std::vector<std::uint64_t> tag;
  };

  void insert_z(ZRow row);
  void insert_f2(F2Row row);

  Coefficients ring_;
  std::size_t columns_;
  std::size_t tags_;
  std::vector<long> pivot_row_;
  std::vector<ZRow> z_rows_;
  std::vector<F2Row> f2_rows_;
  std::vector<SparseVector> relations_;
};

/// Column indexing of a list of monomials (typically one degree basis).
class MonomialIndex {
 public:
  MonomialIndex() = default;
  explicit MonomialIndex(std::vector<Monomial> monomials);

  std::size_t size() const { return monomials_.size(); }
  const std::vector<Monomial>& monomials() const { return monomials_; }
  std::optional<std::size_t> find(const Monomial& m) const;

  /// Throws UsageError if x has a monomial outside the index.
  SparseVector to_vector(const Element& x) const;
  Element to_element(const SparseVector& v, Coefficients ring) const;

 private:
  std::vector<Monomial> monomials_;
  std::map<Monomial, std::size_t> position_;
};

struct MembershipResult {
  bool member = false;
  /// One coefficient per spanner when member.
  std::vector<Integer> coefficients;
};

/// Decides whether `target` lies in the span (over F2) or the lattice (over Z)
/// generated by `spanners`. All nonzero inputs must be homogeneous of one
/// degree; otherwise UsageError.
MembershipResult span_membership(const AlgebraPresentation& a, const Element& target,
                                 const std::vector<Element>& spanners);

/// Basis (over the presentation's ring) of the span of homogeneous elements
/// of one degree, in echelon form.
std::vector<Element> span_basis(const AlgebraPresentation& a, const std::vector<Element>& elements);

/// Extended gcd: returns g = gcd(a, b) >= 0 with s*a + t*b = g.
Integer extended_gcd(const Integer& a, const Integer& b, Integer& s, Integer& t);

}  // namespace chowlab
