#pragma once

// Bookkeeping for motives of unitary grassmannians X_r of an n-dimensional
// hermitian form: the isotropic decomposition recursion, Tate realizations
// of essential motives, dimension formulas and the numeric identities that
// relate X_r to the orthogonal grassmannians Y_m of the trace form.

#include "chowlab/poincare.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chowlab {

struct Atom {
  enum class Kind { Tate, SpecK, Essential };
  Kind kind = Kind::Tate;
  int n = 0;
  int r = 0;

  static Atom tate() { return {}; }
  static Atom spec_k() { return {Kind::SpecK, 0, 0}; }
  /// Throws DomainError outside 0 <= r <= n/2. Essential(n, 0) realizes as
  /// the Tate motive but keeps its label.
  static Atom essential(int n, int r);

  std::string to_string() const;
  auto operator<=>(const Atom&) const = default;
};

struct Summand {
  Atom atom;
  /// Unset for the residual bucket of Spec K shifts, which are not determined.
  std::optional<std::uint32_t> shift;

  auto operator<=>(const Summand&) const = default;
};

/// Finite multiset of shifted atoms, sorted by shift with the residual last.
class Motive {
 public:
  Motive() = default;
  explicit Motive(std::vector<Summand> summands);

  const std::vector<Summand>& summands() const { return summands_; }
  void add(Summand s);
  bool has_residual() const;

  /// Sum of the Tate realizations of all atoms with known shifts; the Spec K
  /// residual contributes nothing.
  PoincarePolynomial realize() const;

  nlohmann::json to_json() const;
  bool operator==(const Motive&) const = default;

 private:
  std::vector<Summand> summands_;
};

/// dim X_r = r(2n - 3r), for 0 <= r <= n/2.
std::int64_t dim_unitary(int n, int r);
/// dim Y_m = m(4n - 3m - 1)/2 for a 2n-dimensional quadratic form, 0 <= m <= n.
std::int64_t dim_orthogonal(int n, int m);

/// M_r = M'_{r-1} + M'_r(i) + M'_{r-1}(j) for a form with one hyperbolic plane
/// split off; out-of-range summands vanish. r = 0 gives the Tate motive.
Motive decompose_step(int n, int r);

/// Tate polynomial of the essential motive over a splitting field.
PoincarePolynomial essential_poincare(int n, int r);

/// Cell count of the split quadric of a 2n-dimensional form.
PoincarePolynomial split_quadric_poincare(int n);

/// Applies the whole-motive decomposition witt_h times.
Motive witt_decompose_whole(int n, int r, int witt_h);

struct KvadrikaReport {
  int n = 0;
  /// split_quadric_poincare(n) - (1 + q) essential_poincare(n, 1)
  Polynomial residual;
  /// Binding for even n; odd n is recorded only.
  bool binding = true;
  bool pass = true;
  nlohmann::json to_json() const;
};

KvadrikaReport kvadrika_check(int n);

struct DvaMrCase {
  int m = 0;
  bool skipped = false;
  std::int64_t shift = 0;  // dim Y_m - dim X_r
  bool positive = false;
  /// Set when dominance was evaluated.
  std::optional<bool> dominated;
  PoincarePolynomial lhs;  // essential_poincare(n, r) * (1 + q^shift)
  PoincarePolynomial rhs;  // split orthogonal grassmannian
};

struct DvaMrReport {
  int n = 0;
  int r = 0;
  std::vector<DvaMrCase> cases;
  bool pass = true;
  nlohmann::json to_json() const;
};

/// Positivity of both shifts and, when with_dominance, coefficientwise
/// dominance of M_r + M_r(shift) in the split grassmannian Y_m for m = 2r-1
/// and m = 2r (the latter skipped for n = 2).
DvaMrReport dvaMr_check(int n, int r, bool with_dominance = true);

/// Poincare polynomial of one connected component of the split orthogonal
/// grassmannian Y_m of a 2N-dimensional form (Y_N has two components).
PoincarePolynomial split_orthogonal_grassmannian_poincare(int N, int m);

/// {0, 2, ..., n-2} for even n >= 2.
std::vector<int> j_min(int n);
/// n^2/4 = n(n-1)/2 - sum J and cd_2(Y_n) = dim Y_n - sum J = dim X_{n/2}.
bool cd2_identity_check(int n);

}  // namespace chowlab
