#pragma once

#include <string>
#include <vector>

#include "tppforge/errors.hpp"

namespace tppforge {

// Orders up to this are always checked for associativity (O(n^3)); above
// it the check can be skipped via GroupBuildOptions.
inline constexpr int kAssociativityCheckThreshold = 256;

// Largest order representable as a dense Cayley table in this library.
inline constexpr int kMaxGroupOrder = 4096;

struct GroupBuildOptions {
  // Skip the O(n^3) associativity validation when the order exceeds
  // kAssociativityCheckThreshold. Ignored at or below the threshold.
  bool skip_associativity_above_threshold = false;
};

// A finite group on dense element indices 0..n-1, stored as a full Cayley
// table with a precomputed inverse table. Index 0 is always the identity.
//
// Construction validates every axiom: identity row/column, the Latin
// square property of rows and columns, two-sided inverses, and
// associativity. A Group is immutable afterwards and safe to share among
// concurrent readers.
class Group {
 public:
  static constexpr int kIdentity = 0;

  // `table` is row-major with table[g*order + h] = g*h. Throws
  // ConstructionError naming the first violated axiom and witnesses.
  Group(std::string name, int order, std::vector<int> table,
        const GroupBuildOptions& options = {});

  int order() const noexcept { return order_; }
  const std::string& name() const noexcept { return name_; }

  int mul(int g, int h) const {
    check_index(g);
    check_index(h);
    return table_[static_cast<std::size_t>(g) * order_ + h];
  }

  int inverse(int g) const {
    check_index(g);
    return inv_[g];
  }

 private:
  void check_index(int g) const {
    if (g < 0 || g >= order_)
      throw ArgumentError("element index " + std::to_string(g) +
                          " out of range for group of order " +
                          std::to_string(order_));
  }

  std::string name_;
  int order_ = 0;
  std::vector<int> table_;  // row-major order*order
  std::vector<int> inv_;
};

// Builds a group from a specification string:
//
//   cyclic:n       order n, n >= 1; element i is the residue i, addition mod n
//   dihedral:n     order 2n, n >= 3; indices 0..n-1 are the rotations r^i,
//                  indices n..2n-1 are the reflections r^j*f, with the
//                  relation f*r = r^-1*f
//   symmetric:n    order n!, 1 <= n <= 6; permutations of {0..n-1} indexed
//                  in lexicographic one-line order; the product p*q is the
//                  composition x -> p(q(x)) (right factor applied first)
//   klein4         C2 x C2; index(a,b) = 2a+b, so the table is XOR
//   quaternion8    {1,i,j,k,-1,-i,-j,-k} in that index order
//   product:A,B    direct product; index(a,b) = a*|B| + b
//   <path>         a Cayley table file (see read_cayley_table_file in io.hpp)
//
// Enumeration orders are fixed, so two builds from the same spec yield
// identical tables. Throws ConstructionError for unknown families,
// malformed files, or tables failing validation.
Group build_group(const std::string& spec, const GroupBuildOptions& options = {});

// The fixed built-in list of group specifications, all of order <= 24:
// cyclic:1..8, klein4, quaternion8, dihedral:3..12, symmetric:3..4, and
// three direct products. Every entry builds without error.
std::vector<std::string> catalog();

}  // namespace tppforge
