#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "tppforge/tpp.hpp"

namespace tppforge {

// Which necessary-condition filters may kill a subtree during the search.
// `none` explores the whole normalized candidate space and is the
// brute-force baseline the other modes are checked against. `all` adds
// the pairwise-disjointness and trivial-Q-intersection filters on top of
// both additive bounds.
enum class Pruning { kNone, kMurthy, kQBound, kAll };

std::string to_string(Pruning mode);
std::optional<Pruning> parse_pruning(const std::string& text);

struct SearchConfig {
  Pruning pruning = Pruning::kQBound;
  std::optional<double> time_limit_seconds;
  // Only triples with |S|*|T|*|U| >= min_product are reported; subtrees
  // that provably cannot reach it are cut. A static threshold, so reports
  // do not depend on worker scheduling.
  std::int64_t min_product = 1;
  int worker_count = 1;
};

struct PruneCounts {
  std::uint64_t murthy = 0;          // |S|+|T|+|U| > |G|+2
  std::uint64_t q_bound = 0;         // |Q(S)|+|Q(T)|+|Q(U)| > |G|+2
  std::uint64_t disjointness = 0;    // some |X ∩ Y| > 1
  std::uint64_t q_intersection = 0;  // some Q(X) ∩ Q(Y) beyond the identity
  std::uint64_t min_product = 0;     // optimistic completion below min_product
};

struct SearchReport {
  // Every triple here passes tpp_check and is normalized (identity in all
  // three sets, pairwise intersections exactly {identity}). Deduplicated,
  // in canonical triple_less order. Empty when nothing reached
  // min_product; best_product is 0 in that case.
  std::vector<TppTriple> best_triples;
  std::int64_t best_product = 0;
  std::uint64_t nodes_visited = 0;
  PruneCounts nodes_pruned_by_rule;
  bool completed = false;  // false when the time limit cut the run short
  double elapsed_seconds = 0.0;
};

// Exhaustive branch-and-bound maximization of |S|*|T|*|U| over the TPP
// triples of the group.
//
// The enumeration covers normalized triples only (identity seeded into
// S, T, U; other elements pairwise disjoint; ascending insertion within a
// set; fixed S, T, U round order), which is lossless: every TPP triple
// translates to a normalized one of the same sizes. Each node of the
// tree is one candidate triple, so with pruning `none` the visited-node
// count is exactly the size of the normalized candidate space.
//
// Filters only ever kill subtrees that cannot contain a TPP triple, so
// best_triples and best_product are identical for every pruning mode and
// worker count, and node counts are deterministic (root subtrees are
// statically partitioned across workers and all counters merged by sum).
SearchReport search_max_triple(const Group& group, const SearchConfig& config = {});

inline constexpr int kDefaultEnumerationCap = 12;

// Streams every normalized TPP triple of the group exactly once, in a
// stable canonical order (depth-first preorder of the insertion tree;
// the trivial triple comes first). Return false from the visitor to stop
// early.
//
// Deliberately simple: no incremental state, a full tpp_check at every
// node, descending only below nodes that pass (an extension can never
// repair a failing triple, since quotients only grow). This is the
// ground-truth oracle the search is tested against.
//
// Throws CapError when the group order exceeds `order_cap`.
void enumerate_all_tpp(const Group& group,
                       const std::function<bool(const TppTriple&)>& visit,
                       int order_cap = kDefaultEnumerationCap);

// Convenience: collects the full enumeration.
std::vector<TppTriple> all_tpp_triples(const Group& group,
                                       int order_cap = kDefaultEnumerationCap);

}  // namespace tppforge
