#include "ordlogic/poset.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ordlogic {

Poset Poset::build(std::vector<std::string> elements,
                   const std::vector<std::pair<std::string, std::string>>& strict_pairs,
                   std::optional<std::string> bottom, std::optional<std::string> top) {
  if (elements.empty())
    throw PosetError(PosetErrorKind::EmptyElements, "poset needs at least one element");
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());

  Poset p;
  p.names_ = std::move(elements);
  int n = p.size();
  std::map<std::string, int> index;
  for (int i = 0; i < n; ++i) index[p.names_[i]] = i;

  auto lookup = [&](const std::string& name) {
    auto it = index.find(name);
    if (it == index.end())
      throw PosetError(PosetErrorKind::UnknownElement, "unknown element: " + name);
    return it->second;
  };

  p.lt_.assign(n, std::vector<char>(n, 0));
  for (const auto& [a, b] : strict_pairs) {
    int ia = lookup(a), ib = lookup(b);
    if (ia == ib)
      throw PosetError(PosetErrorKind::ReflexivePair, "reflexive pair: " + a + " < " + b);
    p.lt_[ia][ib] = 1;
  }
  if (bottom) {
    int ib = lookup(*bottom);
    p.bottom_ = ib;
    for (int i = 0; i < n; ++i)
      if (i != ib) p.lt_[ib][i] = 1;
  }
  if (top) {
    int it = lookup(*top);
    p.top_ = it;
    for (int i = 0; i < n; ++i)
      if (i != it) p.lt_[i][it] = 1;
  }
  if (p.bottom_ && p.top_ && *p.bottom_ == *p.top_)
    throw PosetError(PosetErrorKind::BoundViolation, "bottom equals top");

  // Warshall closure.
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (p.lt_[i][k])
        for (int j = 0; j < n; ++j)
          if (p.lt_[k][j]) p.lt_[i][j] = 1;

  for (int i = 0; i < n; ++i)
    if (p.lt_[i][i])
      throw PosetError(PosetErrorKind::CycleDetected,
                       "cycle through element: " + p.names_[i]);

  if (p.bottom_)
    for (int i = 0; i < n; ++i)
      if (i != *p.bottom_ && !p.lt_[*p.bottom_][i])
        throw PosetError(PosetErrorKind::BoundViolation,
                         "declared bottom not below " + p.names_[i]);
  if (p.top_)
    for (int i = 0; i < n; ++i)
      if (i != *p.top_ && !p.lt_[i][*p.top_])
        throw PosetError(PosetErrorKind::BoundViolation,
                         "declared top not above " + p.names_[i]);
  return p;
}

int Poset::index_of(const std::string& name) const {
  auto it = std::lower_bound(names_.begin(), names_.end(), name);
  if (it == names_.end() || *it != name)
    throw PosetError(PosetErrorKind::UnknownElement, "unknown element: " + name);
  return static_cast<int>(it - names_.begin());
}

bool Poset::disjoint(int x, int y) const {
  int n = size();
  if (bottom_) {
    for (int a = 0; a < n; ++a)
      if (a != *bottom_ && leq(a, x) && leq(a, y)) return false;
    return true;
  }
  for (int a = 0; a < n; ++a)
    if (lt(a, x) && lt(a, y)) return false;
  return true;
}

std::vector<std::pair<std::string, std::string>> Poset::closed_pairs() const {
  std::vector<std::pair<std::string, std::string>> out;
  for (int i = 0; i < size(); ++i)
    for (int j = 0; j < size(); ++j)
      if (lt_[i][j]) out.emplace_back(names_[i], names_[j]);
  std::sort(out.begin(), out.end());
  return out;
}

ElemSet full_set(const Poset& p) {
  ElemSet xs(p.size());
  for (int i = 0; i < p.size(); ++i) xs[i] = i;
  return xs;
}

ElemSet make_set(const Poset& p, const std::vector<std::string>& names) {
  std::set<int> s;
  for (const auto& n : names) s.insert(p.index_of(n));
  return {s.begin(), s.end()};
}

std::vector<std::string> set_names(const Poset& p, const ElemSet& xs) {
  std::vector<std::string> out;
  out.reserve(xs.size());
  for (int i : xs) out.push_back(p.name(i));
  return out;
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet set_intersect(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

ElemSet set_minus(const ElemSet& a, const ElemSet& b) {
  ElemSet out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

bool set_contains(const ElemSet& a, int x) {
  return std::binary_search(a.begin(), a.end(), x);
}

bool subset_of(const ElemSet& a, const ElemSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

ElemSet min_max(const Poset& p, const ElemSet& xs, bool want_max) {
  ElemSet out;
  for (int x : xs) {
    bool dominated = false;
    for (int y : xs) {
      if (want_max ? p.lt(x, y) : p.lt(y, x)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) out.push_back(x);
  }
  return out;
}

bool set_leq(const Poset& p, const ElemSet& xs, const ElemSet& ys) {
  for (int x : xs) {
    bool ok = false;
    for (int y : ys)
      if (p.leq(x, y)) {
        ok = true;
        break;
      }
    if (!ok) return false;
  }
  return true;
}

bool set_lt(const Poset& p, const ElemSet& xs, const ElemSet& ys) {
  if (!set_leq(p, xs, ys)) return false;
  for (int y : ys)
    for (int x : xs)
      if (p.leq(x, y) && !p.lt(x, y)) return false;
  return true;
}

}  // namespace ordlogic
