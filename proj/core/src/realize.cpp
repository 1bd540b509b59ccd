#include "tppforge/realize.hpp"

#include <string>
#include <unordered_set>
#include <utility>

namespace tppforge {

namespace {

long long checked_add(long long a, long long b) {
  long long r = 0;
  if (__builtin_add_overflow(a, b, &r))
    throw ArithmeticError("64-bit coefficient overflow in addition");
  return r;
}

long long checked_mul(long long a, long long b) {
  long long r = 0;
  if (__builtin_mul_overflow(a, b, &r))
    throw ArithmeticError("64-bit coefficient overflow in multiplication");
  return r;
}

void require_same_group(const GroupRingElement& a, const GroupRingElement& b) {
  if (&a.group() != &b.group())
    throw ArgumentError("group ring operands belong to different group instances");
}

void require_labels_match_set(const std::vector<int>& labels, const ElementSet& set,
                              const std::string& what) {
  bool ok = static_cast<int>(labels.size()) == set.size();
  if (ok)
    for (int e : labels)
      if (e < 0 || e >= set.group_order() || !set.contains(e)) {
        ok = false;
        break;
      }
  if (!ok)
    throw ArgumentError(what + " labels do not match the corresponding triple set");
}

// Abar = sum A[s,t]*basis(s^-1 t). With check_unique, repeated embedding
// keys raise an error; the TPP guarantees they cannot repeat, so a hit
// means a broken group table.
GroupRingElement embed_left(const Group& g, const IndexedMatrix& a, bool check_unique) {
  GroupRingElement out(g);
  ElementSet seen(g.order());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) {
      int key = g.mul(g.inverse(a.row_labels()[i]), a.col_labels()[j]);
      if (check_unique) {
        if (seen.contains(key))
          throw Error("embedding key collision on left factor (group table bug?)");
        seen.insert(key);
      }
      out.add(key, a.at(i, j));
    }
  return out;
}

GroupRingElement embed_right(const Group& g, const IndexedMatrix& b, bool check_unique) {
  GroupRingElement out(g);
  ElementSet seen(g.order());
  for (int i = 0; i < b.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      int key = g.mul(g.inverse(b.row_labels()[i]), b.col_labels()[j]);
      if (check_unique) {
        if (seen.contains(key))
          throw Error("embedding key collision on right factor (group table bug?)");
        seen.insert(key);
      }
      out.add(key, b.at(i, j));
    }
  return out;
}

IndexedMatrix read_off(const Group& g, const GroupRingElement& product,
                       const std::vector<int>& row_labels,
                       const std::vector<int>& col_labels, bool check_unique) {
  IndexedMatrix c(row_labels, col_labels);
  ElementSet seen(g.order());
  for (int i = 0; i < c.rows(); ++i)
    for (int j = 0; j < c.cols(); ++j) {
      int key = g.mul(g.inverse(row_labels[i]), col_labels[j]);
      if (check_unique) {
        if (seen.contains(key))
          throw Error("read-off key collision (group table bug?)");
        seen.insert(key);
      }
      c.at(i, j) = product.coeff(key);
    }
  return c;
}

IndexedMatrix multiply_through_ring(const IndexedMatrix& a, const IndexedMatrix& b,
                                    const TppTriple& triple, bool check_unique) {
  const Group& g = triple.group();
  GroupRingElement abar = embed_left(g, a, check_unique);
  GroupRingElement bbar = embed_right(g, b, check_unique);
  GroupRingElement p = ring_mul(abar, bbar);
  return read_off(g, p, a.row_labels(), b.col_labels(), check_unique);
}

}  // namespace

GroupRingElement GroupRingElement::basis(const Group& group, int element) {
  GroupRingElement e(group);
  e.add(element, 1);
  return e;
}

long long GroupRingElement::coeff(int element) const {
  auto it = coeffs_.find(element);
  return it == coeffs_.end() ? 0 : it->second;
}

void GroupRingElement::add(int element, long long delta) {
  if (element < 0 || element >= group_->order())
    throw ArgumentError("element index " + std::to_string(element) +
                        " out of range for group of order " +
                        std::to_string(group_->order()));
  if (delta == 0) return;
  auto [it, inserted] = coeffs_.try_emplace(element, 0);
  it->second = checked_add(it->second, delta);
  if (it->second == 0) coeffs_.erase(it);
}

GroupRingElement ring_add(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a, b);
  GroupRingElement out = a;
  for (const auto& [e, c] : b.coeffs()) out.add(e, c);
  return out;
}

GroupRingElement ring_mul(const GroupRingElement& a, const GroupRingElement& b) {
  require_same_group(a, b);
  const Group& g = a.group();
  GroupRingElement out(g);
  for (const auto& [h, ch] : a.coeffs())
    for (const auto& [k, ck] : b.coeffs()) out.add(g.mul(h, k), checked_mul(ch, ck));
  return out;
}

IndexedMatrix::IndexedMatrix(std::vector<int> row_labels, std::vector<int> col_labels)
    : row_labels_(std::move(row_labels)), col_labels_(std::move(col_labels)) {
  for (const std::vector<int>* labels : {&row_labels_, &col_labels_}) {
    std::unordered_set<int> uniq(labels->begin(), labels->end());
    if (uniq.size() != labels->size())
      throw ArgumentError("matrix label list contains duplicates");
  }
  entries_.assign(row_labels_.size() * col_labels_.size(), 0);
}

std::size_t IndexedMatrix::index(int i, int j) const {
  if (i < 0 || i >= rows() || j < 0 || j >= cols())
    throw ArgumentError("matrix position (" + std::to_string(i) + "," +
                        std::to_string(j) + ") out of range for " +
                        std::to_string(rows()) + "x" + std::to_string(cols()));
  return static_cast<std::size_t>(i) * col_labels_.size() + j;
}

IndexedMatrix matmul_via_group(const IndexedMatrix& a, const IndexedMatrix& b,
                               const TppTriple& triple) {
  require_labels_match_set(a.row_labels(), triple.s(), "left matrix row");
  require_labels_match_set(a.col_labels(), triple.t(), "left matrix column");
  require_labels_match_set(b.row_labels(), triple.t(), "right matrix row");
  require_labels_match_set(b.col_labels(), triple.u(), "right matrix column");
  if (a.col_labels() != b.row_labels())
    throw ArgumentError("inner labels disagree: left matrix columns and right "
                        "matrix rows must list T in the same order");
  if (!tpp_check(triple))
    throw PreconditionError("matmul_via_group requires a triple satisfying the TPP");
  return multiply_through_ring(a, b, triple, /*check_unique=*/true);
}

IndexedMatrix schoolbook_matmul(const IndexedMatrix& a, const IndexedMatrix& b) {
  if (a.col_labels() != b.row_labels())
    throw ArgumentError("inner labels disagree in schoolbook product");
  IndexedMatrix c(a.row_labels(), b.col_labels());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < b.cols(); ++j) {
      long long acc = 0;
      for (int k = 0; k < a.cols(); ++k)
        acc = checked_add(acc, checked_mul(a.at(i, k), b.at(k, j)));
      c.at(i, j) = acc;
    }
  return c;
}

IndexedMatrix random_matrix(std::vector<int> row_labels, std::vector<int> col_labels,
                            SplitMix64& rng, long long lo, long long hi) {
  IndexedMatrix m(std::move(row_labels), std::move(col_labels));
  for (int i = 0; i < m.rows(); ++i)
    for (int j = 0; j < m.cols(); ++j) m.at(i, j) = rng.between(lo, hi);
  return m;
}

std::optional<CollisionWitness> collision_witness(const TppTriple& triple, int trials,
                                                  std::uint64_t seed) {
  SplitMix64 rng(seed);
  std::vector<int> s = triple.s().elements();
  std::vector<int> t = triple.t().elements();
  std::vector<int> u = triple.u().elements();
  for (int trial = 0; trial < trials; ++trial) {
    IndexedMatrix a = random_matrix(s, t, rng);
    IndexedMatrix b = random_matrix(t, u, rng);
    IndexedMatrix via = multiply_through_ring(a, b, triple, /*check_unique=*/false);
    IndexedMatrix school = schoolbook_matmul(a, b);
    for (int i = 0; i < via.rows(); ++i)
      for (int j = 0; j < via.cols(); ++j)
        if (via.at(i, j) != school.at(i, j))
          return CollisionWitness{std::move(a), std::move(b), s[i], u[j],
                                  via.at(i, j), school.at(i, j)};
  }
  return std::nullopt;
}

}  // namespace tppforge
