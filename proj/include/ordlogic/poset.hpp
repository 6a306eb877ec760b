#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlogic {

enum class PosetErrorKind {
  CycleDetected,
  ReflexivePair,
  UnknownElement,
  BoundViolation,
  EmptyElements,
  EmptyOperand,
  UnboundedPoset,
};

struct PosetError : std::runtime_error {
  PosetErrorKind kind;
  PosetError(PosetErrorKind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}
};

// Finite strict partial order. The full transitive closure is stored,
// so every relational query is O(1); elements iterate in lexicographic
// identifier order, which is the tie-break order everywhere downstream.
// Immutable after construction; all operations are pure.
class Poset {
 public:
  static Poset build(std::vector<std::string> elements,
                     const std::vector<std::pair<std::string, std::string>>& strict_pairs,
                     std::optional<std::string> bottom = std::nullopt,
                     std::optional<std::string> top = std::nullopt);

  int size() const { return static_cast<int>(names_.size()); }
  const std::vector<std::string>& elements() const { return names_; }
  const std::string& name(int i) const { return names_[i]; }
  int index_of(const std::string& name) const;  // UnknownElement

  bool lt(int a, int b) const { return lt_[a][b]; }
  bool leq(int a, int b) const { return a == b || lt_[a][b]; }
  bool comparable(int a, int b) const { return a == b || lt_[a][b] || lt_[b][a]; }

  std::optional<int> bottom() const { return bottom_; }
  std::optional<int> top() const { return top_; }
  bool bounded() const { return bottom_.has_value() && top_.has_value(); }

  // x and y have no common lower bound except bottom; with bottom
  // absent, no common strict lower bound at all.
  bool disjoint(int x, int y) const;

  // All strict pairs of the closure, lexicographic by names.
  std::vector<std::pair<std::string, std::string>> closed_pairs() const;

 private:
  std::vector<std::string> names_;
  std::vector<std::vector<char>> lt_;
  std::optional<int> bottom_, top_;
};

// Subsets of a poset's carrier are sorted unique index vectors.
using ElemSet = std::vector<int>;

ElemSet full_set(const Poset& p);
ElemSet make_set(const Poset& p, const std::vector<std::string>& names);
std::vector<std::string> set_names(const Poset& p, const ElemSet& xs);

ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_intersect(const ElemSet& a, const ElemSet& b);
ElemSet set_minus(const ElemSet& a, const ElemSet& b);
bool set_contains(const ElemSet& a, int x);
bool subset_of(const ElemSet& a, const ElemSet& b);

// min(X) / max(X): members with no strictly smaller / larger member in X.
ElemSet min_max(const Poset& p, const ElemSet& xs, bool want_max);

// X <= Y iff every x in X lies below some y in Y.
bool set_leq(const Poset& p, const ElemSet& xs, const ElemSet& ys);
// X < Y additionally requires x < y for every y in Y and x in X^y.
bool set_lt(const Poset& p, const ElemSet& xs, const ElemSet& ys);

}  // namespace ordlogic
