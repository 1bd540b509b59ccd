#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "tppforge/rng.hpp"
#include "tppforge/tpp.hpp"

namespace tppforge {

// An element of the integer group ring: a finite formal sum of group
// elements with 64-bit signed coefficients, kept in canonical sparse form
// (no stored zeros). All arithmetic is overflow-checked.
class GroupRingElement {
 public:
  explicit GroupRingElement(const Group& group) : group_(&group) {}

  // The formal generator 1*element.
  static GroupRingElement basis(const Group& group, int element);

  const Group& group() const noexcept { return *group_; }
  long long coeff(int element) const;
  void add(int element, long long delta);
  int support_size() const { return static_cast<int>(coeffs_.size()); }
  const std::map<int, long long>& coeffs() const noexcept { return coeffs_; }

  friend bool operator==(const GroupRingElement& a, const GroupRingElement& b) {
    return a.group_ == b.group_ && a.coeffs_ == b.coeffs_;
  }

 private:
  const Group* group_;
  std::map<int, long long> coeffs_;
};

GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b);

// Convolution product: c[g] = sum over h*k = g of a[h]*b[k]. Bilinear and
// associative; basis(identity) is the unit. Throws ArgumentError when the
// operands belong to different Group instances, ArithmeticError on
// coefficient overflow.
GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b);

// An integer matrix whose rows and columns are labeled by group element
// indices (duplicate-free lists). Entries are stored dense, row-major.
class IndexedMatrix {
 public:
  IndexedMatrix(std::vector<int> row_labels, std::vector<int> col_labels);

  int rows() const noexcept { return static_cast<int>(row_labels_.size()); }
  int cols() const noexcept { return static_cast<int>(col_labels_.size()); }
  const std::vector<int>& row_labels() const noexcept { return row_labels_; }
  const std::vector<int>& col_labels() const noexcept { return col_labels_; }

  long long& at(int i, int j) { return entries_[index(i, j)]; }
  long long at(int i, int j) const { return entries_[index(i, j)]; }

  friend bool operator==(const IndexedMatrix& a, const IndexedMatrix& b) {
    return a.row_labels_ == b.row_labels_ && a.col_labels_ == b.col_labels_ &&
           a.entries_ == b.entries_;
  }

 private:
  std::size_t index(int i, int j) const;

  std::vector<int> row_labels_, col_labels_;
  std::vector<long long> entries_;
};

// Multiplies A (rows labeled by S, columns by T) with B (rows labeled by
// T in the same order, columns by U) through the group ring:
//
//   Abar = sum A[s,t] * basis(s^-1 t),   Bbar = sum B[t,u] * basis(t^-1 u),
//   C[s,u] = coefficient of s^-1 u in ring_mul(Abar, Bbar).
//
// For a triple satisfying the TPP this equals the schoolbook product
// exactly, for every integer matrix pair: the TPP is precisely the
// condition that no two embedded terms collide on the same group element.
// Embedding and read-off keys are asserted collision-free as a guard
// against table bugs.
//
// Throws PreconditionError when the triple fails tpp_check, ArgumentError
// on label mismatches, ArithmeticError on overflow.
IndexedMatrix matmul_via_group(const IndexedMatrix& a, const IndexedMatrix& b,
                               const TppTriple& triple);

// Plain O(n^3) product; requires a.col_labels() == b.row_labels().
IndexedMatrix schoolbook_matmul(const IndexedMatrix& a, const IndexedMatrix& b);

// Random matrix with entries drawn from [lo, hi].
IndexedMatrix random_matrix(std::vector<int> row_labels, std::vector<int> col_labels,
                            SplitMix64& rng, long long lo = -100, long long hi = 100);

struct CollisionWitness {
  IndexedMatrix lhs, rhs;  // the matrix pair whose product came out wrong
  int row_label, col_label;
  long long via_group, schoolbook;
};

// Runs the group-ring multiplication pipeline without the TPP
// precondition (and without the collision asserts) on up to `trials`
// seeded random matrix pairs, returning the first read-off/schoolbook
// mismatch. A triple passing tpp_check never yields a witness; for a
// failing triple a witness exists, but random trials can miss it.
std::optional<CollisionWitness> collision_witness(const TppTriple& triple, int trials,
                                                  std::uint64_t seed = kDefaultSeed);

}  // namespace tppforge
