// tppforge: verify, normalize, search and realize triple-product-property
// triples in small finite groups.

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "tppforge/io.hpp"
#include "tppforge/realize.hpp"
#include "tppforge/search.hpp"
#include "tppforge/tpp.hpp"

namespace {

using namespace tppforge;

constexpr int kExitTrue = 0;
constexpr int kExitCheckedFalse = 1;
constexpr int kExitUsage = 2;
constexpr int kExitRuntime = 3;

std::string csv(const ElementSet& set) {
  std::string out;
  set.for_each([&](int e) {
    if (!out.empty()) out += ',';
    out += std::to_string(e);
  });
  return out;
}

const char* yn(bool v) { return v ? "true" : "false"; }

int enumeration_cap() {
  const char* v = std::getenv("TPPFORGE_ENUM_CAP");
  if (v == nullptr) return kDefaultEnumerationCap;
  try {
    std::size_t used = 0;
    int cap = std::stoi(v, &used);
    if (used != std::string(v).size() || cap < 1) throw std::invalid_argument(v);
    return cap;
  } catch (const std::exception&) {
    throw ArgumentError("TPPFORGE_ENUM_CAP must be a positive integer, got '" +
                        std::string(v) + "'");
  }
}

struct PruneCountFields {
  const PruneCounts& p;
};

std::ostream& operator<<(std::ostream& os, const PruneCountFields& f) {
  return os << "pruned_murthy=" << f.p.murthy << " pruned_qbound=" << f.p.q_bound
            << " pruned_disjoint=" << f.p.disjointness
            << " pruned_qinter=" << f.p.q_intersection
            << " pruned_minprod=" << f.p.min_product;
}

int cmd_check(const std::string& group_spec, const std::string& triple_path, bool quiet) {
  Group group = build_group(group_spec);
  TppTriple triple = read_triple_file(triple_path, group);

  bool tpp = tpp_check(triple);
  bool disjoint = minimal_disjointness_ok(triple);
  bool qinter = q_intersections_trivial(triple);
  BoundsReport b = bounds(triple);

  std::cout << "group: " << group.name() << "\n"
            << "order: " << group.order() << "\n"
            << "S: " << set_literal(triple.s()) << "\n"
            << "T: " << set_literal(triple.t()) << "\n"
            << "U: " << set_literal(triple.u()) << "\n"
            << "tpp: " << yn(tpp) << "\n"
            << "minimal_disjointness_ok: " << yn(disjoint) << "\n"
            << "q_intersections_trivial: " << yn(qinter) << "\n"
            << "sum_sizes: " << b.sum_sizes << "\n"
            << "sum_q_sizes: " << b.sum_q_sizes << "\n"
            << "limit: " << b.limit << "\n"
            << "murthy_ok: " << yn(b.murthy_ok) << "\n"
            << "q_bound_ok: " << yn(b.q_bound_ok) << "\n";
  if (!quiet)
    std::cout << "RESULT cmd=check group=" << group.name() << " tpp=" << yn(tpp)
              << " disjoint_ok=" << yn(disjoint) << " qinter_ok=" << yn(qinter)
              << " sum_sizes=" << b.sum_sizes << " sum_q_sizes=" << b.sum_q_sizes
              << " limit=" << b.limit << " murthy_ok=" << yn(b.murthy_ok)
              << " q_bound_ok=" << yn(b.q_bound_ok) << " S=" << csv(triple.s())
              << " T=" << csv(triple.t()) << " U=" << csv(triple.u()) << "\n";
  return tpp ? kExitTrue : kExitCheckedFalse;
}

int cmd_normalize(const std::string& group_spec, const std::string& triple_path,
                  bool quiet) {
  Group group = build_group(group_spec);
  TppTriple triple = read_triple_file(triple_path, group);
  TppTriple normalized = normalize(triple);
  std::cout << triple_file_text(normalized);
  if (!quiet)
    std::cout << "RESULT cmd=normalize group=" << group.name()
              << " S=" << csv(normalized.s()) << " T=" << csv(normalized.t())
              << " U=" << csv(normalized.u()) << "\n";
  return kExitTrue;
}

void print_search_report(const Group& group, const SearchConfig& config,
                         const SearchReport& report) {
  std::cout << "group: " << group.name() << "\n"
            << "order: " << group.order() << "\n"
            << "pruning: " << to_string(config.pruning) << "\n"
            << "workers: " << config.worker_count << "\n"
            << "min_product: " << config.min_product << "\n"
            << "completed: " << yn(report.completed) << "\n"
            << "nodes_visited: " << report.nodes_visited << "\n"
            << "pruned_murthy: " << report.nodes_pruned_by_rule.murthy << "\n"
            << "pruned_q_bound: " << report.nodes_pruned_by_rule.q_bound << "\n"
            << "pruned_disjointness: " << report.nodes_pruned_by_rule.disjointness << "\n"
            << "pruned_q_intersection: " << report.nodes_pruned_by_rule.q_intersection << "\n"
            << "pruned_min_product: " << report.nodes_pruned_by_rule.min_product << "\n"
            << "best_product: " << report.best_product << "\n"
            << "best_triples: " << report.best_triples.size() << "\n";
  for (const TppTriple& t : report.best_triples)
    std::cout << "triple: S={" << set_literal(t.s()) << "} T={" << set_literal(t.t())
              << "} U={" << set_literal(t.u()) << "}\n";
  std::cout << "elapsed: " << report.elapsed_seconds << "s\n";
}

int cmd_search(const std::string& group_spec, const SearchConfig& config, bool quiet) {
  Group group = build_group(group_spec);
  SearchReport report = search_max_triple(group, config);
  print_search_report(group, config, report);
  if (!quiet)
    for (const TppTriple& t : report.best_triples)
      std::cout << "RESULT cmd=search group=" << group.name()
                << " prune=" << to_string(config.pruning)
                << " completed=" << yn(report.completed)
                << " product=" << report.best_product << " S=" << csv(t.s())
                << " T=" << csv(t.t()) << " U=" << csv(t.u())
                << " nodes=" << report.nodes_visited << " "
                << PruneCountFields{report.nodes_pruned_by_rule} << "\n";
  return report.completed ? kExitTrue : kExitRuntime;
}

int cmd_realize(const std::string& group_spec, const std::string& triple_path,
                const std::string& a_path, const std::string& b_path, bool quiet) {
  Group group = build_group(group_spec);
  TppTriple triple = read_triple_file(triple_path, group);
  IndexedMatrix a = read_matrix_file(a_path);
  IndexedMatrix b = read_matrix_file(b_path);

  IndexedMatrix via = matmul_via_group(a, b, triple);
  IndexedMatrix school = schoolbook_matmul(a, b);
  bool match = via == school;

  std::cout << matrix_file_text(via);
  std::cout << (match ? "MATCH" : "MISMATCH") << "\n";
  if (!quiet)
    std::cout << "RESULT cmd=realize group=" << group.name()
              << " match=" << yn(match) << " rows=" << via.rows()
              << " cols=" << via.cols() << "\n";
  return match ? kExitTrue : kExitRuntime;
}

int cmd_sweep(int max_order, Pruning prune, std::uint64_t seed, bool quiet) {
  int cap = enumeration_cap();
  if (max_order > cap)
    throw CapError("--max-order " + std::to_string(max_order) +
                   " exceeds enumeration cap " + std::to_string(cap) +
                   " (override with TPPFORGE_ENUM_CAP)");

  SplitMix64 rng(seed);
  int groups_run = 0;
  for (const std::string& spec : catalog()) {
    Group group = build_group(spec);
    if (group.order() > max_order) continue;
    ++groups_run;

    SearchConfig config;
    config.pruning = prune;
    SearchReport report = search_max_triple(group, config);

    std::string failure;
    for (const TppTriple& t : report.best_triples) {
      if (!tpp_check(t)) {
        failure = "tpp_check failed";
      } else {
        BoundsReport b = bounds(t);
        if (!b.murthy_ok || !b.q_bound_ok) failure = "bounds violated";
      }
      if (failure.empty()) {
        IndexedMatrix a = random_matrix(t.s().elements(), t.t().elements(), rng);
        IndexedMatrix b2 = random_matrix(t.t().elements(), t.u().elements(), rng);
        if (!(matmul_via_group(a, b2, t) == schoolbook_matmul(a, b2)))
          failure = "realization mismatch";
      }
      if (!failure.empty()) {
        std::cerr << "sweep: verification failed for group " << group.name()
                  << " triple S={" << set_literal(t.s()) << "} T={"
                  << set_literal(t.t()) << "} U={" << set_literal(t.u())
                  << "}: " << failure << "\n";
        return kExitRuntime;
      }
    }

    std::cout << group.name() << " order=" << group.order()
              << " best_product=" << report.best_product
              << " triples=" << report.best_triples.size()
              << " nodes=" << report.nodes_visited << " verify=OK\n";
    if (!quiet) {
      const TppTriple& first = report.best_triples.front();
      std::cout << "RESULT cmd=sweep group=" << group.name()
                << " order=" << group.order() << " product=" << report.best_product
                << " triples=" << report.best_triples.size()
                << " nodes=" << report.nodes_visited << " "
                << PruneCountFields{report.nodes_pruned_by_rule}
                << " S=" << csv(first.s()) << " T=" << csv(first.t())
                << " U=" << csv(first.u()) << " verify=ok\n";
    }
  }
  std::cout << "sweep: " << groups_run << " groups verified, all OK\n";
  return kExitTrue;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"triple product property toolkit for small finite groups"};
  app.require_subcommand(1);

  bool quiet = false;
  app.add_flag("--quiet", quiet, "suppress machine-readable RESULT lines");

  std::string group_spec, triple_path, a_path, b_path;

  CLI::App* check = app.add_subcommand("check", "verify the TPP and report bounds");
  check->add_option("group", group_spec, "group specification")->required();
  check->add_option("triple", triple_path, "triple file (three set lines: S, T, U)")
      ->required();

  CLI::App* normalize =
      app.add_subcommand("normalize", "translate a TPP triple into normalized form");
  normalize->add_option("group", group_spec, "group specification")->required();
  normalize->add_option("triple", triple_path, "triple file")->required();

  std::string prune_name = "q-bound";
  double time_limit = -1.0;
  int workers = 1;
  std::int64_t min_product = 1;
  CLI::App* search =
      app.add_subcommand("search", "find the TPP triples maximizing |S|*|T|*|U|");
  search->add_option("group", group_spec, "group specification")->required();
  search->add_option("--prune", prune_name, "pruning rules: none, murthy, q-bound, all")
      ->check(CLI::IsMember({"none", "murthy", "q-bound", "all"}));
  search->add_option("--time-limit", time_limit, "wall-clock limit in seconds")
      ->check(CLI::NonNegativeNumber);
  search->add_option("--workers", workers, "parallel workers")
      ->check(CLI::PositiveNumber);
  search->add_option("--min-product", min_product, "report only products >= this")
      ->check(CLI::PositiveNumber);

  CLI::App* realize = app.add_subcommand(
      "realize", "multiply matrices through the group ring and compare to schoolbook");
  realize->add_option("group", group_spec, "group specification")->required();
  realize->add_option("triple", triple_path, "triple file")->required();
  realize->add_option("matrix-a", a_path, "left matrix file (S x T)")->required();
  realize->add_option("matrix-b", b_path, "right matrix file (T x U)")->required();

  int max_order = 8;
  std::uint64_t seed = tppforge::kDefaultSeed;
  std::string sweep_prune_name = "q-bound";
  CLI::App* sweep = app.add_subcommand(
      "sweep", "search every catalog group and verify the maxima end to end");
  sweep->add_option("--max-order", max_order, "largest group order to include")
      ->check(CLI::PositiveNumber);
  sweep->add_option("--prune", sweep_prune_name, "pruning rules: none, murthy, q-bound, all")
      ->check(CLI::IsMember({"none", "murthy", "q-bound", "all"}));
  sweep->add_option("--seed", seed, "seed for the realization spot checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  try {
    if (app.got_subcommand(check)) return cmd_check(group_spec, triple_path, quiet);
    if (app.got_subcommand(normalize))
      return cmd_normalize(group_spec, triple_path, quiet);
    if (app.got_subcommand(search)) {
      SearchConfig config;
      config.pruning = *parse_pruning(prune_name);
      if (time_limit >= 0) config.time_limit_seconds = time_limit;
      config.worker_count = workers;
      config.min_product = min_product;
      return cmd_search(group_spec, config, quiet);
    }
    if (app.got_subcommand(realize))
      return cmd_realize(group_spec, triple_path, a_path, b_path, quiet);
    if (app.got_subcommand(sweep))
      return cmd_sweep(max_order, *parse_pruning(sweep_prune_name), seed, quiet);
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckedFalse;
  } catch (const ArithmeticError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  } catch (const ConstructionError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ArgumentError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitRuntime;
  }
  return kExitUsage;
}
