#include "tppforge/tpp.hpp"

#include <algorithm>
#include <array>
#include <utility>
#include <vector>

namespace tppforge {

TppTriple::TppTriple(const Group& group, ElementSet s, ElementSet t, ElementSet u)
    : group_(&group), s_(std::move(s)), t_(std::move(t)), u_(std::move(u)) {
  for (const ElementSet* x : {&s_, &t_, &u_}) {
    if (x->group_order() != group.order())
      throw ArgumentError("triple set over order " + std::to_string(x->group_order()) +
                          " does not belong to group '" + group.name() + "' of order " +
                          std::to_string(group.order()));
    if (x->empty()) throw ArgumentError("triple sets must be nonempty");
  }
}

bool triple_less(const TppTriple& a, const TppTriple& b) {
  auto sizes = [](const TppTriple& x) {
    return std::array<int, 3>{x.s().size(), x.t().size(), x.u().size()};
  };
  auto sa = sizes(a), sb = sizes(b);
  if (sa != sb) return sa < sb;
  if (!(a.s() == b.s())) return lex_less(a.s(), b.s());
  if (!(a.t() == b.t())) return lex_less(a.t(), b.t());
  return lex_less(a.u(), b.u());
}

namespace {

// True when s*t*u = 1 has no solution over A x B x C other than the
// all-identity one. A, B, C are quotient sets, so each contains the
// identity. The pair loop runs over the two smallest of the three sets;
// the remaining factor is forced by the other two.
bool only_trivial_identity_product(const Group& g, const ElementSet& qs,
                                   const ElementSet& qt, const ElementSet& qu) {
  const int id = Group::kIdentity;
  std::int64_t st = static_cast<std::int64_t>(qs.size()) * qt.size();
  std::int64_t tu = static_cast<std::int64_t>(qt.size()) * qu.size();
  std::int64_t su = static_cast<std::int64_t>(qs.size()) * qu.size();

  bool ok = true;
  if (st <= tu && st <= su) {
    // u forced to (s*t)^-1
    qs.for_each([&](int s) {
      if (!ok) return;
      qt.for_each([&](int t) {
        if (ok && (s != id || t != id) && qu.contains(g.inverse(g.mul(s, t)))) ok = false;
      });
    });
  } else if (tu <= su) {
    // s forced to (t*u)^-1
    qt.for_each([&](int t) {
      if (!ok) return;
      qu.for_each([&](int u) {
        if (ok && (t != id || u != id) && qs.contains(g.inverse(g.mul(t, u)))) ok = false;
      });
    });
  } else {
    // t forced to s^-1 * u^-1
    qs.for_each([&](int s) {
      if (!ok) return;
      qu.for_each([&](int u) {
        if (ok && (s != id || u != id) && qt.contains(g.mul(g.inverse(s), g.inverse(u)))) ok = false;
      });
    });
  }
  return ok;
}

ElementSet translate_right(const Group& g, const ElementSet& x, int by) {
  ElementSet out(g.order());
  x.for_each([&](int e) { out.insert(g.mul(e, by)); });
  return out;
}

}  // namespace

bool tpp_check(const TppTriple& triple) {
  const Group& g = triple.group();
  ElementSet qs = right_quotient(g, triple.s());
  ElementSet qt = right_quotient(g, triple.t());
  ElementSet qu = right_quotient(g, triple.u());
  return only_trivial_identity_product(g, qs, qt, qu);
}

TppTriple normalize(const TppTriple& triple) {
  if (!tpp_check(triple))
    throw PreconditionError("normalize requires a triple satisfying the TPP");
  const Group& g = triple.group();
  auto anchor = [&](const ElementSet& x) {
    return x.contains(Group::kIdentity) ? Group::kIdentity : x.min_element();
  };
  return TppTriple(g,
                   translate_right(g, triple.s(), g.inverse(anchor(triple.s()))),
                   translate_right(g, triple.t(), g.inverse(anchor(triple.t()))),
                   translate_right(g, triple.u(), g.inverse(anchor(triple.u()))));
}

bool minimal_disjointness_ok(const TppTriple& triple) {
  return triple.s().intersection_size(triple.t()) <= 1 &&
         triple.t().intersection_size(triple.u()) <= 1 &&
         triple.s().intersection_size(triple.u()) <= 1;
}

bool q_intersections_trivial(const TppTriple& triple) {
  const Group& g = triple.group();
  ElementSet qs = right_quotient(g, triple.s());
  ElementSet qt = right_quotient(g, triple.t());
  ElementSet qu = right_quotient(g, triple.u());
  // Quotients always share the identity, so trivial means size exactly 1.
  return qs.intersection_size(qt) == 1 && qt.intersection_size(qu) == 1 &&
         qs.intersection_size(qu) == 1;
}

BoundsReport bounds(const TppTriple& triple) {
  const Group& g = triple.group();
  BoundsReport r{};
  r.sum_sizes = triple.s().size() + triple.t().size() + triple.u().size();
  r.sum_q_sizes = right_quotient(g, triple.s()).size() +
                  right_quotient(g, triple.t()).size() +
                  right_quotient(g, triple.u()).size();
  r.limit = g.order() + 2;
  r.murthy_ok = r.sum_sizes <= r.limit;
  r.q_bound_ok = r.sum_q_sizes <= r.limit;
  return r;
}

}  // namespace tppforge
