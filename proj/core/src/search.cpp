#include "tppforge/search.hpp"

#include <algorithm>
#include <cassert>
#include <chrono>
#include <exception>
#include <thread>
#include <utility>

namespace tppforge {

namespace {

using Clock = std::chrono::steady_clock;

// Sets are extended in the fixed round order S, T, U: once T holds a
// non-identity element, S is frozen, and so on. The phase together with
// the frontier (largest element of the active set) makes every normalized
// triple reachable by exactly one insertion sequence, so tree nodes and
// candidate triples are in bijection.
enum SetId : int { kSetS = 0, kSetT = 1, kSetU = 2 };

struct Node {
  ElementSet s, t, u;
  ElementSet qs, qt, qu;
  bool feasible;  // incrementally maintained TPP status of (s, t, u)
  int phase;
  int frontier;

  explicit Node(const Group& g)
      : s(ElementSet::of(g.order(), {Group::kIdentity})),
        t(s),
        u(s),
        qs(s),
        qt(s),
        qu(s),
        feasible(true),
        phase(kSetS),
        frontier(0) {}
};

struct Accum {
  std::uint64_t visited = 0;
  PruneCounts pruned;
  std::int64_t best = 0;
  std::vector<TppTriple> ties;
  bool timed_out = false;
};

struct Ctx {
  const Group& g;
  Pruning mode;
  std::int64_t min_product;
  std::optional<Clock::time_point> deadline;
  int limit;  // |G| + 2
};

// Inserts e into the chosen set, updates that set's quotient with the
// products of e against the existing members, and re-checks feasibility
// against the newly added quotient elements only. New TPP violations must
// involve a new quotient element, so this keeps `feasible` exact.
void extend(const Ctx& c, Node& nd, int which, int e) {
  const Group& g = c.g;
  ElementSet& base = which == kSetS ? nd.s : which == kSetT ? nd.t : nd.u;
  ElementSet& q = which == kSetS ? nd.qs : which == kSetT ? nd.qt : nd.qu;

  std::vector<int> fresh;
  base.for_each([&](int y) {
    int a = g.mul(e, g.inverse(y));
    if (!q.contains(a)) {
      q.insert(a);
      fresh.push_back(a);
    }
    int b = g.mul(y, g.inverse(e));
    if (!q.contains(b)) {
      q.insert(b);
      fresh.push_back(b);
    }
  });
  base.insert(e);
  nd.phase = which;
  nd.frontier = e;

  if (!nd.feasible || fresh.empty()) return;
  // A fresh quotient element is never the identity, so any product
  // landing back on the identity is a genuine violation.
  bool bad = false;
  switch (which) {
    case kSetS:
      for (int a : fresh) {
        nd.qt.for_each([&](int t) {
          if (!bad && nd.qu.contains(g.inverse(g.mul(a, t)))) bad = true;
        });
        if (bad) break;
      }
      break;
    case kSetT:
      for (int a : fresh) {
        nd.qs.for_each([&](int s) {
          if (!bad && nd.qu.contains(g.inverse(g.mul(s, a)))) bad = true;
        });
        if (bad) break;
      }
      break;
    default:
      for (int a : fresh) {
        nd.qs.for_each([&](int s) {
          if (!bad && nd.qt.contains(g.mul(g.inverse(s), g.inverse(a)))) bad = true;
        });
        if (bad) break;
      }
      break;
  }
  if (bad) nd.feasible = false;
}

// Largest product reachable from this node: current sizes plus what the
// per-set candidate pools can still contribute, within the shared budget
// of unused elements (which is exactly the |G|+2 envelope).
std::int64_t optimistic_product(const Ctx& c, const Node& nd) {
  ElementSet used = nd.s | nd.t | nd.u;
  int n = c.g.order();
  auto avail_above = [&](int from) {
    int count = 0;
    for (int e = from + 1; e < n; ++e)
      if (!used.contains(e)) ++count;
    return count;
  };
  int a = nd.s.size(), b = nd.t.size(), d = nd.u.size();
  int ms = nd.phase == kSetS ? avail_above(nd.frontier) : 0;
  int mt = nd.phase <= kSetT ? avail_above(nd.phase == kSetT ? nd.frontier : 0) : 0;
  int mu = avail_above(nd.phase == kSetU ? nd.frontier : 0);
  int budget = c.limit - (a + b + d);

  std::int64_t best = 0;
  for (int x = 0; x <= std::min(ms, budget); ++x)
    for (int y = 0; y <= std::min(mt, budget - x); ++y) {
      int z = std::min(mu, budget - x - y);
      std::int64_t p = static_cast<std::int64_t>(a + x) * (b + y) * (d + z);
      best = std::max(best, p);
    }
  return best;
}

void record_candidate(const Ctx& c, const Node& nd, Accum& acc) {
  std::int64_t p =
      static_cast<std::int64_t>(nd.s.size()) * nd.t.size() * nd.u.size();
  if (p < c.min_product) return;
  if (!acc.ties.empty() && p < acc.best) return;
  TppTriple cand(c.g, nd.s, nd.t, nd.u);
  // Full re-verification: the incremental flag is an optimization, the
  // from-scratch check decides what gets reported.
  bool verified = tpp_check(cand);
  assert(verified == nd.feasible);
  if (!verified) return;
  if (acc.ties.empty() || p > acc.best) {
    acc.best = p;
    acc.ties.clear();
  }
  acc.ties.push_back(std::move(cand));
}

// Counting, filters and candidate recording for one node. Returns false
// when the subtree below it must not be explored (pruned or timed out).
bool process_node(const Ctx& c, const Node& nd, Accum& acc) {
  if (c.deadline && Clock::now() >= *c.deadline) {
    acc.timed_out = true;
    return false;
  }
  ++acc.visited;

  if (c.mode == Pruning::kMurthy || c.mode == Pruning::kAll) {
    if (nd.s.size() + nd.t.size() + nd.u.size() > c.limit) {
      ++acc.pruned.murthy;
      return false;
    }
  }
  if (c.mode == Pruning::kQBound || c.mode == Pruning::kAll) {
    if (nd.qs.size() + nd.qt.size() + nd.qu.size() > c.limit) {
      ++acc.pruned.q_bound;
      return false;
    }
  }
  if (c.mode == Pruning::kAll) {
    if (nd.s.intersection_size(nd.t) > 1 || nd.t.intersection_size(nd.u) > 1 ||
        nd.s.intersection_size(nd.u) > 1) {
      ++acc.pruned.disjointness;
      return false;
    }
    if (nd.qs.intersection_size(nd.qt) > 1 ||
        nd.qt.intersection_size(nd.qu) > 1 ||
        nd.qs.intersection_size(nd.qu) > 1) {
      ++acc.pruned.q_intersection;
      return false;
    }
  }
  if (c.min_product > 1 && optimistic_product(c, nd) < c.min_product) {
    ++acc.pruned.min_product;
    return false;
  }

  if (nd.feasible) record_candidate(c, nd, acc);
  return true;
}

// Children in canonical order: extensions of S (ascending), then T, then
// U. The callback returns false to stop early.
template <class F>
void for_each_child(const Ctx& c, const Node& nd, F&& f) {
  ElementSet used = nd.s | nd.t | nd.u;
  int n = c.g.order();
  if (nd.phase == kSetS)
    for (int e = nd.frontier + 1; e < n; ++e)
      if (!used.contains(e)) {
        Node child = nd;
        extend(c, child, kSetS, e);
        if (!f(std::move(child))) return;
      }
  if (nd.phase <= kSetT) {
    int from = nd.phase == kSetT ? nd.frontier : 0;
    for (int e = from + 1; e < n; ++e)
      if (!used.contains(e)) {
        Node child = nd;
        extend(c, child, kSetT, e);
        if (!f(std::move(child))) return;
      }
  }
  int from = nd.phase == kSetU ? nd.frontier : 0;
  for (int e = from + 1; e < n; ++e)
    if (!used.contains(e)) {
      Node child = nd;
      extend(c, child, kSetU, e);
      if (!f(std::move(child))) return;
    }
}

// Depth-first walk; returns false only on timeout.
bool dfs(const Ctx& c, const Node& nd, Accum& acc) {
  if (!process_node(c, nd, acc)) return !acc.timed_out;
  bool alive = true;
  for_each_child(c, nd, [&](Node child) {
    alive = dfs(c, child, acc);
    return alive;
  });
  return alive;
}

void merge_into(Accum& dst, Accum& src) {
  dst.visited += src.visited;
  dst.pruned.murthy += src.pruned.murthy;
  dst.pruned.q_bound += src.pruned.q_bound;
  dst.pruned.disjointness += src.pruned.disjointness;
  dst.pruned.q_intersection += src.pruned.q_intersection;
  dst.pruned.min_product += src.pruned.min_product;
  dst.timed_out = dst.timed_out || src.timed_out;
  if (src.ties.empty()) return;
  if (dst.ties.empty() || src.best > dst.best) {
    dst.best = src.best;
    dst.ties = std::move(src.ties);
  } else if (src.best == dst.best) {
    for (TppTriple& t : src.ties) dst.ties.push_back(std::move(t));
  }
}

}  // namespace

std::string to_string(Pruning mode) {
  switch (mode) {
    case Pruning::kNone: return "none";
    case Pruning::kMurthy: return "murthy";
    case Pruning::kQBound: return "q-bound";
    case Pruning::kAll: return "all";
  }
  return "?";
}

std::optional<Pruning> parse_pruning(const std::string& text) {
  if (text == "none") return Pruning::kNone;
  if (text == "murthy") return Pruning::kMurthy;
  if (text == "q-bound") return Pruning::kQBound;
  if (text == "all") return Pruning::kAll;
  return std::nullopt;
}

SearchReport search_max_triple(const Group& group, const SearchConfig& config) {
  if (config.worker_count < 1)
    throw ArgumentError("worker_count must be >= 1, got " +
                        std::to_string(config.worker_count));
  if (config.min_product < 1)
    throw ArgumentError("min_product must be >= 1, got " +
                        std::to_string(config.min_product));
  if (config.time_limit_seconds && *config.time_limit_seconds < 0)
    throw ArgumentError("time limit must be >= 0");

  auto start = Clock::now();
  Ctx c{group, config.pruning, config.min_product, std::nullopt, group.order() + 2};
  if (config.time_limit_seconds)
    c.deadline = start + std::chrono::duration_cast<Clock::duration>(
                             std::chrono::duration<double>(*config.time_limit_seconds));

  Accum acc;
  Node root(group);
  if (process_node(c, root, acc)) {
    std::vector<Node> tasks;
    for_each_child(c, root, [&](Node child) {
      tasks.push_back(std::move(child));
      return true;
    });

    int workers = std::min<int>(config.worker_count,
                                std::max<int>(1, static_cast<int>(tasks.size())));
    if (workers <= 1) {
      bool alive = true;
      for (Node& task : tasks)
        if (alive) alive = dfs(c, task, acc);
    } else {
      // Static round-robin assignment of root subtrees; every counter is
      // merged by sum, so the report does not depend on scheduling.
      std::vector<Accum> per_worker(workers);
      std::vector<std::exception_ptr> errors(workers);
      std::vector<std::thread> threads;
      threads.reserve(workers);
      for (int w = 0; w < workers; ++w)
        threads.emplace_back([&, w] {
          try {
            bool alive = true;
            for (std::size_t i = w; i < tasks.size(); i += workers)
              if (alive) alive = dfs(c, tasks[i], per_worker[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      for (std::thread& th : threads) th.join();
      for (std::exception_ptr& ep : errors)
        if (ep) std::rethrow_exception(ep);
      for (Accum& wa : per_worker) merge_into(acc, wa);
    }
  }

  SearchReport report;
  report.nodes_visited = acc.visited;
  report.nodes_pruned_by_rule = acc.pruned;
  report.completed = !acc.timed_out;
  report.best_product = acc.ties.empty() ? 0 : acc.best;
  std::sort(acc.ties.begin(), acc.ties.end(), triple_less);
  acc.ties.erase(std::unique(acc.ties.begin(), acc.ties.end()), acc.ties.end());
  report.best_triples = std::move(acc.ties);
  report.elapsed_seconds =
      std::chrono::duration<double>(Clock::now() - start).count();
  return report;
}

void enumerate_all_tpp(const Group& group,
                       const std::function<bool(const TppTriple&)>& visit,
                       int order_cap) {
  if (order_cap < 1)
    throw ArgumentError("enumeration cap must be >= 1, got " +
                        std::to_string(order_cap));
  if (group.order() > order_cap)
    throw CapError("group order " + std::to_string(group.order()) +
                   " exceeds enumeration cap " + std::to_string(order_cap));

  struct Walker {
    const Group& g;
    const std::function<bool(const TppTriple&)>& visit;

    bool go(const ElementSet& s, const ElementSet& t, const ElementSet& u,
            int phase, int frontier) {
      TppTriple cand(g, s, t, u);
      // Extensions only grow quotients, so nothing below a failing node
      // can pass.
      if (!tpp_check(cand)) return true;
      if (!visit(cand)) return false;
      ElementSet used = s | t | u;
      int n = g.order();
      if (phase == kSetS)
        for (int e = frontier + 1; e < n; ++e)
          if (!used.contains(e))
            if (!go(s.inserted(e), t, u, kSetS, e)) return false;
      if (phase <= kSetT) {
        int from = phase == kSetT ? frontier : 0;
        for (int e = from + 1; e < n; ++e)
          if (!used.contains(e))
            if (!go(s, t.inserted(e), u, kSetT, e)) return false;
      }
      int from = phase == kSetU ? frontier : 0;
      for (int e = from + 1; e < n; ++e)
        if (!used.contains(e))
          if (!go(s, t, u.inserted(e), kSetU, e)) return false;
      return true;
    }
  };

  ElementSet id = ElementSet::of(group.order(), {Group::kIdentity});
  Walker{group, visit}.go(id, id, id, kSetS, 0);
}

std::vector<TppTriple> all_tpp_triples(const Group& group, int order_cap) {
  std::vector<TppTriple> out;
  enumerate_all_tpp(
      group,
      [&](const TppTriple& t) {
        out.push_back(t);
        return true;
      },
      order_cap);
  return out;
}

}  // namespace tppforge
