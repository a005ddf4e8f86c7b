#pragma once

// Exact arithmetic on unimodular symmetric integer forms, i.e. intersection
// forms of closed simply-connected 4-manifolds, and on integral degree-2
// cohomology classes of those manifolds.
//
// Convention: a cohomology class c is stored by its pairings with the chosen
// homology basis, p_i = <c, e_i>. These are the coordinates of c in the dual
// basis, so the divisibility of c is gcd(p) and the Poincare dual of c has
// coordinates Q^{-1} p.

#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace fiveclass::forms {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;
using Matrix = std::vector<std::vector<Integer>>;

/// Determinant by fraction-free (Bareiss) elimination. Throws InvalidForm if
/// the matrix is not square or is empty.
Integer determinant(const Matrix& m);

/// Succeeds iff `m` is a non-empty square symmetric matrix with |det| = 1.
/// Throws NotSymmetric, NotUnimodular (message carries |det|) or InvalidForm.
void validate(const Matrix& m);

enum class NamedBlock { Plus, Minus, Hyperbolic, E8, NegE8 };

/// Parses "1", "-1", "H", "E8", "-E8".
NamedBlock parse_block(const std::string& name);
std::string block_name(NamedBlock b);

class IntersectionForm {
 public:
  /// Validating constructor.
  explicit IntersectionForm(Matrix m);

  static IntersectionForm block(NamedBlock b);
  static IntersectionForm from_blocks(std::span<const NamedBlock> blocks);
  static IntersectionForm diagonal(std::span<const int> entries);

  IntersectionForm direct_sum(const IntersectionForm& other) const;

  /// U^T Q U for a unimodular integer matrix U (validated).
  IntersectionForm change_basis(const Matrix& u) const;

  std::size_t rank() const { return matrix_.size(); }
  const Integer& operator()(std::size_t i, std::size_t j) const {
    return matrix_[i][j];
  }
  const Matrix& matrix() const { return matrix_; }

  friend bool operator==(const IntersectionForm&,
                         const IntersectionForm&) = default;

 private:
  Matrix matrix_;
};

class CohomologyClass {
 public:
  CohomologyClass() = default;
  explicit CohomologyClass(std::vector<Integer> pairings)
      : pairings_(std::move(pairings)) {}

  static CohomologyClass zero(std::size_t n) {
    return CohomologyClass(std::vector<Integer>(n, 0));
  }

  std::size_t size() const { return pairings_.size(); }
  const std::vector<Integer>& pairings() const { return pairings_; }
  const Integer& operator[](std::size_t i) const { return pairings_[i]; }

  CohomologyClass operator-() const;
  CohomologyClass scaled(const Integer& k) const;
  /// Exact division by k; throws InvalidForm when some entry is not
  /// divisible.
  CohomologyClass divided(const Integer& k) const;
  /// Pairing vector extended by `extra` zeros (class pulled back to a
  /// direct sum with a form on which it vanishes).
  CohomologyClass extended(std::size_t extra) const;
  /// Pairings against the basis columns of U: U^T p.
  CohomologyClass transported(const Matrix& u) const;

  friend bool operator==(const CohomologyClass&,
                         const CohomologyClass&) = default;

 private:
  std::vector<Integer> pairings_;
};

/// Number of positive minus number of negative squares, by exact Lagrange
/// diagonalization over Q.
int signature(const IntersectionForm& q);

bool is_even(const IntersectionForm& q);

/// gcd of the pairings; 0 for the zero class.
Integer divisibility(const CohomologyClass& c);

/// <c^2, [X]> = p^T Q^{-1} p. Throws InvalidForm on a length mismatch.
Integer square(const IntersectionForm& q, const CohomologyClass& c);

/// True iff c reduces mod 2 to w2, i.e. p_i = Q_ii (mod 2) for all i.
bool is_characteristic(const IntersectionForm& q, const CohomologyClass& c);

/// Exact solution of Q x = p (Q unimodular, so x is integral).
std::vector<Integer> solve(const IntersectionForm& q,
                           std::span<const Integer> rhs);

}  // namespace fiveclass::forms
