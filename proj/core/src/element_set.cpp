#include "tppforge/element_set.hpp"

#include <algorithm>

namespace tppforge {

ElementSet::ElementSet(int group_order) : order_(group_order) {
  if (group_order <= 0)
    throw ArgumentError("set requires a positive group order, got " +
                        std::to_string(group_order));
  bits_.assign((static_cast<std::size_t>(group_order) + 63) / 64, 0);
}

ElementSet ElementSet::of(int group_order, std::initializer_list<int> elements) {
  ElementSet s(group_order);
  for (int e : elements) s.insert(e);
  return s;
}

ElementSet ElementSet::full(int group_order) {
  ElementSet s(group_order);
  for (int e = 0; e < group_order; ++e) s.insert(e);
  return s;
}

int ElementSet::size() const noexcept {
  int count = 0;
  for (std::uint64_t w : bits_) count += std::popcount(w);
  return count;
}

ElementSet ElementSet::inserted(int e) const {
  ElementSet copy = *this;
  copy.insert(e);
  return copy;
}

ElementSet ElementSet::erased(int e) const {
  ElementSet copy = *this;
  copy.erase(e);
  return copy;
}

int ElementSet::min_element() const {
  for (std::size_t w = 0; w < bits_.size(); ++w)
    if (bits_[w] != 0) return static_cast<int>(w * 64) + std::countr_zero(bits_[w]);
  throw DomainError("min_element of empty set");
}

std::vector<int> ElementSet::elements() const {
  std::vector<int> out;
  out.reserve(static_cast<std::size_t>(size()));
  for_each([&](int e) { out.push_back(e); });
  return out;
}

int ElementSet::intersection_size(const ElementSet& other) const {
  check_same_order(other);
  int count = 0;
  for (std::size_t w = 0; w < bits_.size(); ++w)
    count += std::popcount(bits_[w] & other.bits_[w]);
  return count;
}

void ElementSet::check_same_order(const ElementSet& other) const {
  if (order_ != other.order_)
    throw ArgumentError("set order mismatch: " + std::to_string(order_) + " vs " +
                        std::to_string(other.order_));
}

ElementSet operator|(const ElementSet& a, const ElementSet& b) {
  a.check_same_order(b);
  ElementSet out = a;
  for (std::size_t w = 0; w < out.bits_.size(); ++w) out.bits_[w] |= b.bits_[w];
  return out;
}

ElementSet operator&(const ElementSet& a, const ElementSet& b) {
  a.check_same_order(b);
  ElementSet out = a;
  for (std::size_t w = 0; w < out.bits_.size(); ++w) out.bits_[w] &= b.bits_[w];
  return out;
}

bool lex_less(const ElementSet& a, const ElementSet& b) {
  std::vector<int> ea = a.elements(), eb = b.elements();
  return std::lexicographical_compare(ea.begin(), ea.end(), eb.begin(), eb.end());
}

ElementSet right_quotient(const Group& group, const ElementSet& x) {
  if (x.group_order() != group.order())
    throw ArgumentError("set over order " + std::to_string(x.group_order()) +
                        " does not belong to group '" + group.name() +
                        "' of order " + std::to_string(group.order()));
  if (x.empty()) throw DomainError("right quotient of empty set undefined");

  std::vector<int> members = x.elements();
  ElementSet q(group.order());
  for (int a : members) {
    for (int b : members) q.insert(group.mul(a, group.inverse(b)));
  }
  return q;
}

}  // namespace tppforge
