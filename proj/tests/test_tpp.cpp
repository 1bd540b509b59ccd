#include <doctest.h>

#include <vector>

#include "tppforge/rng.hpp"
#include "tppforge/search.hpp"
#include "tppforge/tpp.hpp"

using namespace tppforge;

namespace {

// Reference check: the full triple loop over the three quotients.
bool triple_loop_tpp(const TppTriple& tr) {
  const Group& g = tr.group();
  std::vector<int> qs = right_quotient(g, tr.s()).elements();
  std::vector<int> qt = right_quotient(g, tr.t()).elements();
  std::vector<int> qu = right_quotient(g, tr.u()).elements();
  for (int s : qs)
    for (int t : qt)
      for (int u : qu)
        if (g.mul(g.mul(s, t), u) == Group::kIdentity &&
            !(s == Group::kIdentity && t == Group::kIdentity && u == Group::kIdentity))
          return false;
  return true;
}

ElementSet random_nonempty_subset(SplitMix64& rng, int order) {
  ElementSet s(order);
  for (int e = 0; e < order; ++e)
    if (rng.below(3) == 0) s.insert(e);
  if (s.empty()) s.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(order))));
  return s;
}

ElementSet translate(const Group& g, const ElementSet& x, int by) {
  ElementSet out(g.order());
  x.for_each([&](int e) { out.insert(g.mul(e, by)); });
  return out;
}

}  // namespace

TEST_CASE("triple construction validates inputs") {
  Group z4 = build_group("cyclic:4");
  CHECK_THROWS_AS(TppTriple(z4, ElementSet(4), ElementSet::of(4, {0}), ElementSet::of(4, {0})),
                  ArgumentError);
  CHECK_THROWS_AS(TppTriple(z4, ElementSet::of(5, {0}), ElementSet::of(4, {0}),
                            ElementSet::of(4, {0})),
                  ArgumentError);
}

TEST_CASE("tpp_check examples") {
  Group z1 = build_group("cyclic:1");
  CHECK(tpp_check(TppTriple(z1, ElementSet::of(1, {0}), ElementSet::of(1, {0}),
                            ElementSet::of(1, {0}))));

  Group z5 = build_group("cyclic:5");
  CHECK(tpp_check(TppTriple(z5, ElementSet::full(5), ElementSet::of(5, {0}),
                            ElementSet::of(5, {0}))));

  Group z2 = build_group("cyclic:2");
  CHECK_FALSE(tpp_check(TppTriple(z2, ElementSet::of(2, {0, 1}), ElementSet::of(2, {0, 1}),
                                  ElementSet::of(2, {0}))));
}

TEST_CASE("pair loop agrees with the triple loop oracle") {
  SplitMix64 rng(7);
  std::vector<Group> groups;
  for (const std::string& spec : catalog()) {
    Group g = build_group(spec);
    if (g.order() <= 8) groups.push_back(std::move(g));
  }
  int true_count = 0;
  for (int trial = 0; trial < 600; ++trial) {
    const Group& g = groups[trial % groups.size()];
    TppTriple tr(g, random_nonempty_subset(rng, g.order()),
                 random_nonempty_subset(rng, g.order()),
                 random_nonempty_subset(rng, g.order()));
    bool fast = tpp_check(tr);
    CHECK(fast == triple_loop_tpp(tr));
    if (fast) ++true_count;
  }
  // The sample must exercise both outcomes.
  CHECK(true_count > 0);
  CHECK(true_count < 600);
}

TEST_CASE("tpp_check is invariant under right translation") {
  SplitMix64 rng(11);
  Group d4 = build_group("dihedral:4");
  for (int trial = 0; trial < 100; ++trial) {
    ElementSet s = random_nonempty_subset(rng, 8);
    ElementSet t = random_nonempty_subset(rng, 8);
    ElementSet u = random_nonempty_subset(rng, 8);
    bool base = tpp_check(TppTriple(d4, s, t, u));
    int by = static_cast<int>(rng.below(8));
    CHECK(tpp_check(TppTriple(d4, translate(d4, s, by), t, u)) == base);
    CHECK(tpp_check(TppTriple(d4, s, translate(d4, t, by), u)) == base);
    CHECK(tpp_check(TppTriple(d4, s, t, translate(d4, u, by))) == base);
  }
}

TEST_CASE("normalize examples") {
  Group z6 = build_group("cyclic:6");

  TppTriple shifted(z6, ElementSet::of(6, {2, 3}), ElementSet::of(6, {0}),
                    ElementSet::of(6, {0}));
  TppTriple norm = normalize(shifted);
  CHECK(norm.s() == ElementSet::of(6, {0, 1}));
  CHECK(norm.t() == ElementSet::of(6, {0}));
  CHECK(norm.u() == ElementSet::of(6, {0}));

  // Already normalized: unchanged.
  CHECK(normalize(norm) == norm);

  Group z2 = build_group("cyclic:2");
  TppTriple bad(z2, ElementSet::of(2, {0, 1}), ElementSet::of(2, {0, 1}),
                ElementSet::of(2, {0}));
  CHECK_THROWS_AS(normalize(bad), PreconditionError);
}

TEST_CASE("normalize preserves the triple's structure") {
  SplitMix64 rng(23);
  for (const char* spec : {"cyclic:6", "dihedral:3", "quaternion8"}) {
    Group g = build_group(spec);
    for (const TppTriple& tr : all_tpp_triples(g)) {
      // De-normalize by random right translations; quotients are untouched,
      // so the TPP survives and normalize's precondition holds.
      TppTriple moved(g, translate(g, tr.s(), static_cast<int>(rng.below(g.order()))),
                      translate(g, tr.t(), static_cast<int>(rng.below(g.order()))),
                      translate(g, tr.u(), static_cast<int>(rng.below(g.order()))));
      TppTriple norm = normalize(moved);

      CHECK(tpp_check(norm));
      CHECK(norm.s().size() == tr.s().size());
      CHECK(norm.t().size() == tr.t().size());
      CHECK(norm.u().size() == tr.u().size());
      CHECK(right_quotient(g, norm.s()) == right_quotient(g, moved.s()));
      CHECK(right_quotient(g, norm.t()) == right_quotient(g, moved.t()));
      CHECK(right_quotient(g, norm.u()) == right_quotient(g, moved.u()));
      CHECK(norm.s().contains(Group::kIdentity));
      CHECK(norm.t().contains(Group::kIdentity));
      CHECK(norm.u().contains(Group::kIdentity));
      CHECK((norm.s() & norm.t()) == ElementSet::of(g.order(), {Group::kIdentity}));
      CHECK((norm.t() & norm.u()) == ElementSet::of(g.order(), {Group::kIdentity}));
      CHECK((norm.s() & norm.u()) == ElementSet::of(g.order(), {Group::kIdentity}));
      CHECK(normalize(norm) == norm);
    }
  }
}

TEST_CASE("necessary-condition predicates") {
  Group z6 = build_group("cyclic:6");
  TppTriple trivial(z6, ElementSet::of(6, {0}), ElementSet::of(6, {0}),
                    ElementSet::of(6, {0}));
  CHECK(minimal_disjointness_ok(trivial));
  CHECK(q_intersections_trivial(trivial));

  TppTriple overlap(z6, ElementSet::of(6, {0, 1, 2}), ElementSet::of(6, {0, 1, 3}),
                    ElementSet::of(6, {0}));
  CHECK_FALSE(minimal_disjointness_ok(overlap));

  Group z2 = build_group("cyclic:2");
  TppTriple bad(z2, ElementSet::of(2, {0, 1}), ElementSet::of(2, {0, 1}),
                ElementSet::of(2, {0}));
  CHECK_FALSE(q_intersections_trivial(bad));
}

TEST_CASE("bounds report") {
  Group z6 = build_group("cyclic:6");

  TppTriple trivial(z6, ElementSet::of(6, {0}), ElementSet::of(6, {0}),
                    ElementSet::of(6, {0}));
  BoundsReport b = bounds(trivial);
  CHECK(b.sum_sizes == 3);
  CHECK(b.sum_q_sizes == 3);
  CHECK(b.limit == 8);
  CHECK(b.murthy_ok);
  CHECK(b.q_bound_ok);

  // S = G, T = U = {identity} attains both bounds with equality.
  for (const char* spec : {"cyclic:6", "dihedral:4", "symmetric:3"}) {
    Group g = build_group(spec);
    TppTriple tight(g, ElementSet::full(g.order()), ElementSet::of(g.order(), {0}),
                    ElementSet::of(g.order(), {0}));
    CHECK(tpp_check(tight));
    BoundsReport tb = bounds(tight);
    CHECK(tb.sum_sizes == g.order() + 2);
    CHECK(tb.sum_q_sizes == g.order() + 2);
    CHECK(tb.murthy_ok);
    CHECK(tb.q_bound_ok);
  }

  // sum_sizes <= sum_q_sizes on arbitrary triples.
  SplitMix64 rng(5);
  Group q8 = build_group("quaternion8");
  for (int trial = 0; trial < 200; ++trial) {
    TppTriple tr(q8, random_nonempty_subset(rng, 8), random_nonempty_subset(rng, 8),
                 random_nonempty_subset(rng, 8));
    BoundsReport rb = bounds(tr);
    CHECK(rb.sum_sizes <= rb.sum_q_sizes);
  }
}
