#include "tppforge/group.hpp"

#include <algorithm>
#include <filesystem>
#include <map>
#include <utility>

#include "tppforge/io.hpp"

namespace tppforge {

namespace {

std::string axiom_error(const std::string& name, const std::string& detail) {
  return "group '" + name + "' failed validation: " + detail;
}

void validate_table(const std::string& name, int n, const std::vector<int>& table,
                    const GroupBuildOptions& options) {
  if (n <= 0)
    throw ConstructionError(axiom_error(name, "order must be positive, got " +
                                                  std::to_string(n)));
  if (n > kMaxGroupOrder)
    throw ConstructionError(axiom_error(
        name, "order " + std::to_string(n) + " exceeds supported maximum " +
                  std::to_string(kMaxGroupOrder)));
  if (table.size() != static_cast<std::size_t>(n) * n)
    throw ConstructionError(axiom_error(
        name, "table has " + std::to_string(table.size()) + " entries, expected " +
                  std::to_string(static_cast<std::size_t>(n) * n)));

  auto at = [&](int g, int h) { return table[static_cast<std::size_t>(g) * n + h]; };

  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int v = at(g, h);
      if (v < 0 || v >= n)
        throw ConstructionError(axiom_error(
            name, "entry out of range: table[" + std::to_string(g) + "][" +
                      std::to_string(h) + "] = " + std::to_string(v)));
    }

  // Index 0 must be the two-sided identity.
  for (int g = 0; g < n; ++g) {
    if (at(0, g) != g)
      throw ConstructionError(axiom_error(
          name, "element 0 is not a left identity: table[0][" + std::to_string(g) +
                    "] = " + std::to_string(at(0, g))));
    if (at(g, 0) != g)
      throw ConstructionError(axiom_error(
          name, "element 0 is not a right identity: table[" + std::to_string(g) +
                    "][0] = " + std::to_string(at(g, 0))));
  }

  // Latin square: every row and column is a permutation of 0..n-1.
  std::vector<int> seen(n, -1);
  for (int g = 0; g < n; ++g) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int h = 0; h < n; ++h) {
      int v = at(g, h);
      if (seen[v] >= 0)
        throw ConstructionError(axiom_error(
            name, "not a Latin square: row " + std::to_string(g) + " repeats entry " +
                      std::to_string(v) + " (columns " + std::to_string(seen[v]) +
                      " and " + std::to_string(h) + ")"));
      seen[v] = h;
    }
  }
  for (int h = 0; h < n; ++h) {
    std::fill(seen.begin(), seen.end(), -1);
    for (int g = 0; g < n; ++g) {
      int v = at(g, h);
      if (seen[v] >= 0)
        throw ConstructionError(axiom_error(
            name, "not a Latin square: column " + std::to_string(h) +
                      " repeats entry " + std::to_string(v) + " (rows " +
                      std::to_string(seen[v]) + " and " + std::to_string(g) + ")"));
      seen[v] = g;
    }
  }

  bool check_assoc = n <= kAssociativityCheckThreshold ||
                     !options.skip_associativity_above_threshold;
  if (check_assoc) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b) {
        int ab = at(a, b);
        for (int c = 0; c < n; ++c)
          if (at(ab, c) != at(a, at(b, c)))
            throw ConstructionError(axiom_error(
                name, "not associative: (a*b)*c != a*(b*c) at a=" +
                          std::to_string(a) + " b=" + std::to_string(b) +
                          " c=" + std::to_string(c)));
      }
  }
}

std::vector<int> cyclic_table(int n) {
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) table[static_cast<std::size_t>(a) * n + b] = (a + b) % n;
  return table;
}

// Order 2n. Rotations first: index i < n is r^i, index n+j is r^j*f.
std::vector<int> dihedral_table(int n) {
  int order = 2 * n;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  auto set = [&](int g, int h, int v) { table[static_cast<std::size_t>(g) * order + h] = v; };
  for (int a = 0; a < n; ++a)
    for (int b = 0; b < n; ++b) {
      set(a, b, (a + b) % n);              // r^a * r^b
      set(a, n + b, n + (a + b) % n);      // r^a * r^b f
      set(n + a, b, n + (a - b + n) % n);  // r^a f * r^b = r^(a-b) f
      set(n + a, n + b, (a - b + n) % n);  // r^a f * r^b f = r^(a-b)
    }
  return table;
}

std::vector<int> symmetric_table(int n, int& order_out) {
  std::vector<std::vector<int>> perms;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  do {
    perms.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));

  std::map<std::vector<int>, int> rank;
  for (int i = 0; i < static_cast<int>(perms.size()); ++i) rank[perms[i]] = i;

  int order = static_cast<int>(perms.size());
  order_out = order;
  std::vector<int> table(static_cast<std::size_t>(order) * order);
  std::vector<int> composed(n);
  for (int a = 0; a < order; ++a)
    for (int b = 0; b < order; ++b) {
      // (p*q)(x) = p(q(x))
      for (int x = 0; x < n; ++x) composed[x] = perms[a][perms[b][x]];
      table[static_cast<std::size_t>(a) * order + b] = rank[composed];
    }
  return table;
}

std::vector<int> quaternion_table() {
  // Element = sign*4 + base with base in {1,i,j,k}.
  static constexpr int kBase[4][4] = {
      {0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int kSign[4][4] = {
      {0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  std::vector<int> table(64);
  for (int g = 0; g < 8; ++g)
    for (int h = 0; h < 8; ++h) {
      int sg = g / 4, bg = g % 4, sh = h / 4, bh = h % 4;
      int sign = (sg + sh + kSign[bg][bh]) % 2;
      table[static_cast<std::size_t>(g) * 8 + h] = sign * 4 + kBase[bg][bh];
    }
  return table;
}

std::vector<int> product_table(const Group& a, const Group& b) {
  int na = a.order(), nb = b.order();
  long long order = static_cast<long long>(na) * nb;
  if (order > kMaxGroupOrder)
    throw ConstructionError("product order " + std::to_string(order) +
                            " exceeds supported maximum " + std::to_string(kMaxGroupOrder));
  int n = static_cast<int>(order);
  std::vector<int> table(static_cast<std::size_t>(n) * n);
  for (int g = 0; g < n; ++g)
    for (int h = 0; h < n; ++h) {
      int ga = g / nb, gb = g % nb, ha = h / nb, hb = h % nb;
      table[static_cast<std::size_t>(g) * n + h] = a.mul(ga, ha) * nb + b.mul(gb, hb);
    }
  return table;
}

constexpr const char* kKnownFamilies =
    "cyclic:<n>, dihedral:<n>, symmetric:<n>, klein4, quaternion8, "
    "product:<spec>,<spec>, or a Cayley table file path";

// Recursive-descent parser over a spec string. A spec ends at the end of
// input or at a ',' separating the factors of a product.
class SpecParser {
 public:
  SpecParser(const std::string& text, const GroupBuildOptions& options)
      : text_(text), options_(options) {}

  Group parse_all() {
    Group g = parse_spec();
    if (pos_ != text_.size())
      throw ConstructionError("trailing characters in group spec '" + text_ +
                              "' at position " + std::to_string(pos_));
    return g;
  }

 private:
  Group parse_spec() {
    if (consume("cyclic:")) {
      int n = parse_int("cyclic");
      if (n < 1) throw ConstructionError("cyclic:<n> requires n >= 1, got " + std::to_string(n));
      if (n > kMaxGroupOrder)
        throw ConstructionError("cyclic:" + std::to_string(n) + " exceeds supported maximum order");
      return Group("cyclic:" + std::to_string(n), n, cyclic_table(n), options_);
    }
    if (consume("dihedral:")) {
      int n = parse_int("dihedral");
      if (n < 3) throw ConstructionError("dihedral:<n> requires n >= 3, got " + std::to_string(n));
      if (2 * n > kMaxGroupOrder)
        throw ConstructionError("dihedral:" + std::to_string(n) + " exceeds supported maximum order");
      return Group("dihedral:" + std::to_string(n), 2 * n, dihedral_table(n), options_);
    }
    if (consume("symmetric:")) {
      int n = parse_int("symmetric");
      if (n < 1 || n > 6)
        throw ConstructionError("symmetric:<n> requires 1 <= n <= 6, got " + std::to_string(n));
      int order = 0;
      std::vector<int> table = symmetric_table(n, order);
      return Group("symmetric:" + std::to_string(n), order, std::move(table), options_);
    }
    if (consume_word("klein4"))
      return Group("klein4", 4, product_table(trivial_factor(2), trivial_factor(2)), options_);
    if (consume_word("quaternion8"))
      return Group("quaternion8", 8, quaternion_table(), options_);
    if (consume("product:")) {
      Group a = parse_spec();
      if (!consume(","))
        throw ConstructionError("product spec expects ',' between factors in '" + text_ + "'");
      Group b = parse_spec();
      return Group("product:" + a.name() + "," + b.name(), a.order() * b.order(),
                   product_table(a, b), options_);
    }
    return parse_file_spec();
  }

  Group parse_file_spec() {
    // Everything up to the next ',' (or end of input) is a file path.
    std::size_t end = text_.find(',', pos_);
    if (end == std::string::npos) end = text_.size();
    std::string path = text_.substr(pos_, end - pos_);
    pos_ = end;
    if (path.empty()) throw ConstructionError("empty group spec");

    if (!std::filesystem::exists(path)) {
      std::size_t colon = path.find(':');
      bool family_like = colon != std::string::npos &&
                         path.find('/') == std::string::npos &&
                         path.find('.') == std::string::npos;
      if (family_like)
        throw ConstructionError("unknown group family '" + path.substr(0, colon) +
                                "' (known: " + std::string(kKnownFamilies) + ")");
      throw ConstructionError("group spec '" + path +
                              "' is not a known family and no such file exists (known: " +
                              std::string(kKnownFamilies) + ")");
    }
    CayleyTableData data = read_cayley_table_file(path);
    return Group(path, data.order, std::move(data.table), options_);
  }

  bool consume(const std::string& prefix) {
    if (text_.compare(pos_, prefix.size(), prefix) == 0) {
      pos_ += prefix.size();
      return true;
    }
    return false;
  }

  // Matches `word` only when followed by end of input or ','.
  bool consume_word(const std::string& word) {
    if (text_.compare(pos_, word.size(), word) != 0) return false;
    std::size_t after = pos_ + word.size();
    if (after != text_.size() && text_[after] != ',') return false;
    pos_ = after;
    return true;
  }

  int parse_int(const std::string& family) {
    std::size_t start = pos_;
    while (pos_ < text_.size() && text_[pos_] >= '0' && text_[pos_] <= '9') ++pos_;
    if (pos_ == start)
      throw ConstructionError(family + ":<n> requires an integer parameter in '" + text_ + "'");
    long long v = 0;
    for (std::size_t i = start; i < pos_; ++i) {
      v = v * 10 + (text_[i] - '0');
      if (v > kMaxGroupOrder * 2LL) return static_cast<int>(kMaxGroupOrder * 2LL);
    }
    return static_cast<int>(v);
  }

  Group trivial_factor(int n) {
    return Group("cyclic:" + std::to_string(n), n, cyclic_table(n), options_);
  }

  const std::string& text_;
  std::size_t pos_ = 0;
  GroupBuildOptions options_;
};

}  // namespace

Group::Group(std::string name, int order, std::vector<int> table,
             const GroupBuildOptions& options)
    : name_(std::move(name)), order_(order), table_(std::move(table)) {
  validate_table(name_, order_, table_, options);
  inv_.assign(order_, -1);
  auto at = [&](int g, int h) { return table_[static_cast<std::size_t>(g) * order_ + h]; };
  for (int g = 0; g < order_; ++g) {
    for (int h = 0; h < order_; ++h)
      if (at(g, h) == kIdentity) {
        inv_[g] = h;
        break;
      }
    // The Latin square property guarantees a right inverse exists; require
    // it to be two-sided.
    if (at(inv_[g], g) != kIdentity)
      throw ConstructionError(axiom_error(
          name_, "no two-sided inverse for element " + std::to_string(g) + ": " +
                     std::to_string(g) + "*" + std::to_string(inv_[g]) +
                     " = 0 but " + std::to_string(inv_[g]) + "*" +
                     std::to_string(g) + " = " +
                     std::to_string(at(inv_[g], g))));
  }
}

Group build_group(const std::string& spec, const GroupBuildOptions& options) {
  return SpecParser(spec, options).parse_all();
}

std::vector<std::string> catalog() {
  std::vector<std::string> specs;
  for (int n = 1; n <= 8; ++n) specs.push_back("cyclic:" + std::to_string(n));
  specs.push_back("klein4");
  specs.push_back("quaternion8");
  for (int n = 3; n <= 12; ++n) specs.push_back("dihedral:" + std::to_string(n));
  for (int n = 3; n <= 4; ++n) specs.push_back("symmetric:" + std::to_string(n));
  specs.push_back("product:cyclic:2,cyclic:4");
  specs.push_back("product:cyclic:3,cyclic:3");
  specs.push_back("product:cyclic:2,symmetric:3");
  return specs;
}

}  // namespace tppforge
