#pragma once

#include <bit>
#include <cstdint>
#include <initializer_list>
#include <vector>

#include "tppforge/group.hpp"

namespace tppforge {

// A subset of a group's elements as a fixed-width bit set over element
// indices. Sets carry the order of the group they belong to, so mixing
// sets from different groups is a detected error rather than silent
// index aliasing. All binary operations require matching orders.
class ElementSet {
 public:
  explicit ElementSet(int group_order);

  static ElementSet of(int group_order, std::initializer_list<int> elements);
  static ElementSet full(int group_order);

  int group_order() const noexcept { return order_; }
  int size() const noexcept;
  bool empty() const noexcept { return size() == 0; }

  bool contains(int e) const {
    check_element(e);
    return (bits_[static_cast<std::size_t>(e) >> 6] >> (e & 63)) & 1u;
  }

  void insert(int e) {
    check_element(e);
    bits_[static_cast<std::size_t>(e) >> 6] |= std::uint64_t{1} << (e & 63);
  }

  void erase(int e) {
    check_element(e);
    bits_[static_cast<std::size_t>(e) >> 6] &= ~(std::uint64_t{1} << (e & 63));
  }

  // Pure variants: the receiver is left unchanged.
  ElementSet inserted(int e) const;
  ElementSet erased(int e) const;

  // Smallest member; throws DomainError on the empty set.
  int min_element() const;

  std::vector<int> elements() const;

  // Calls f(e) for each member in increasing index order.
  template <class F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < bits_.size(); ++w) {
      std::uint64_t word = bits_[w];
      while (word != 0) {
        int b = std::countr_zero(word);
        f(static_cast<int>(w * 64) + b);
        word &= word - 1;
      }
    }
  }

  int intersection_size(const ElementSet& other) const;

  friend ElementSet operator|(const ElementSet& a, const ElementSet& b);
  friend ElementSet operator&(const ElementSet& a, const ElementSet& b);
  friend bool operator==(const ElementSet& a, const ElementSet& b) {
    return a.order_ == b.order_ && a.bits_ == b.bits_;
  }

 private:
  void check_element(int e) const {
    if (e < 0 || e >= order_)
      throw ArgumentError("element index " + std::to_string(e) +
                          " out of range for set over order " +
                          std::to_string(order_));
  }
  void check_same_order(const ElementSet& other) const;

  int order_;
  std::vector<std::uint64_t> bits_;
};

// Ascending-element lexicographic comparison; shorter prefixes sort first.
bool lex_less(const ElementSet& a, const ElementSet& b);

// Q(X) = { x * y^-1 : x, y in X }, the right quotient of X. The result
// contains the identity, equals its own element-wise inverse image, and
// has at least |X| elements. Computed by the plain O(|X|^2) double loop.
//
// Throws DomainError for empty X and ArgumentError when the set's order
// does not match the group's.
ElementSet right_quotient(const Group& group, const ElementSet& x);

}  // namespace tppforge
