#pragma once

#include <cstdint>

#include "tppforge/element_set.hpp"
#include "tppforge/group.hpp"

namespace tppforge {

// Three nonempty subsets S, T, U of one group. The triple does not own
// the group and must not outlive it.
class TppTriple {
 public:
  TppTriple(const Group& group, ElementSet s, ElementSet t, ElementSet u);

  const Group& group() const noexcept { return *group_; }
  const ElementSet& s() const noexcept { return s_; }
  const ElementSet& t() const noexcept { return t_; }
  const ElementSet& u() const noexcept { return u_; }

  std::int64_t size_product() const {
    return static_cast<std::int64_t>(s_.size()) * t_.size() * u_.size();
  }

  friend bool operator==(const TppTriple& a, const TppTriple& b) {
    return a.s_ == b.s_ && a.t_ == b.t_ && a.u_ == b.u_;
  }

 private:
  const Group* group_;
  ElementSet s_, t_, u_;
};

// Canonical ordering: by (|S|, |T|, |U|), then lexicographically by the
// elements of S, T, U.
bool triple_less(const TppTriple& a, const TppTriple& b);

struct BoundsReport {
  int sum_sizes;    // |S| + |T| + |U|
  int sum_q_sizes;  // |Q(S)| + |Q(T)| + |Q(U)|
  int limit;        // |G| + 2
  bool murthy_ok;   // sum_sizes <= limit
  bool q_bound_ok;  // sum_q_sizes <= limit
};

// Triple product property: for s in Q(S), t in Q(T), u in Q(U), the
// equation s*t*u = 1 holds only for s = t = u = 1.
//
// Implemented as a pair loop over the two smallest quotients with the
// third factor forced (s*t*u = 1 determines any one factor from the
// other two), which is an exact reformulation of the triple loop.
bool tpp_check(const TppTriple& triple);

// Right-translates each set so it contains the identity: X -> X*x0^-1
// where the anchor x0 is the identity if present, else the smallest
// element. Preserves the three cardinalities and the three right
// quotients, so the result still satisfies the TPP, and its pairwise
// intersections are exactly {identity}. Idempotent.
//
// Throws PreconditionError when the input fails tpp_check: the pairwise
// singleton-intersection guarantee only holds for TPP triples.
TppTriple normalize(const TppTriple& triple);

// |S∩T| <= 1, |T∩U| <= 1, |S∩U| <= 1. Necessary for the TPP, not
// sufficient.
bool minimal_disjointness_ok(const TppTriple& triple);

// Q(S)∩Q(T) = Q(T)∩Q(U) = Q(S)∩Q(U) = {identity}. Necessary for the
// TPP, not sufficient.
bool q_intersections_trivial(const TppTriple& triple);

// Both additive bounds against |G| + 2. Any TPP triple satisfies both;
// sum_sizes <= sum_q_sizes always.
BoundsReport bounds(const TppTriple& triple);

}  // namespace tppforge
