#include "ordlogic/order_measure.hpp"

#include <algorithm>
#include <cassert>
#include <numeric>

namespace ordlogic {

std::vector<int> heights(const Poset& p) {
  int n = p.size();
  std::vector<int> ht(n, 0);
  // longest path in the comparability DAG; process in a linear extension
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (p.lt(a, b)) return true;
    if (p.lt(b, a)) return false;
    return a < b;
  });
  for (int x : order)
    for (int y : order)
      if (p.lt(y, x)) ht[x] = std::max(ht[x], ht[y] + 1);
  return ht;
}

HeightProfile height_profile(const Poset& p) {
  if (!p.bounded())
    throw PosetError(PosetErrorKind::UnboundedPoset,
                     "height profile needs a bounded poset");
  HeightProfile hp;
  int n = p.size();
  hp.ht = heights(p);
  hp.ht_top = hp.ht[*p.top()];
  // t via longest upward chain, computed against the dual order
  {
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) {
      if (p.lt(b, a)) return true;
      if (p.lt(a, b)) return false;
      return a < b;
    });
    std::vector<int> up(n, 0);
    for (int x : order)
      for (int y : order)
        if (p.lt(x, y)) up[x] = std::max(up[x], up[y] + 1);
    hp.t = up;
  }
  hp.rht.reserve(n);
  hp.ratio.reserve(n);
  hp.pr.reserve(n);
  for (int x = 0; x < n; ++x) {
    hp.rht.push_back(Rat(hp.ht[x], hp.ht_top));
    int b = hp.ht[x], t = hp.t[x];
    hp.ratio.push_back(b + t == 0 ? Rat(0) : Rat(b, b + t));
    int c = 0;
    for (int y = 0; y < n; ++y)
      if (p.comparable(x, y)) ++c;
    hp.pr.push_back(Rat(c, n));
  }
  return hp;
}

namespace {

ElemSet extremal_ht(const Poset& p, const ElemSet& xs, bool want_max) {
  auto ht = heights(p);
  int best = want_max ? -1 : 1 << 30;
  for (int x : xs) best = want_max ? std::max(best, ht[x]) : std::min(best, ht[x]);
  ElemSet out;
  for (int x : xs)
    if (ht[x] == best) out.push_back(x);
  return out;
}

}  // namespace

ElemSet maxht_set(const Poset& p, const ElemSet& xs) { return extremal_ht(p, xs, true); }
ElemSet minht_set(const Poset& p, const ElemSet& xs) { return extremal_ht(p, xs, false); }

ElemSet dd_op(const Poset& p, const ElemSet& xs, const ElemSet* ys, DdOp which) {
  if (!p.bounded())
    throw PosetError(PosetErrorKind::UnboundedPoset, "double-primed ops need bounds");
  switch (which) {
    case DdOp::Meet2p:
      return maxht_set(p, op_meet(p, xs, *ys, OpVariant::Plain));
    case DdOp::Join2p:
      return minht_set(p, op_join(p, xs, *ys, OpVariant::Plain));
    case DdOp::Neg2p:
      return maxht_set(p, op_neg(p, xs, OpVariant::Plain));
  }
  return {};
}

Rat prob(const Poset& p, const ElemSet& xs, ProbMode mode) {
  if (!p.bounded())
    throw PosetError(PosetErrorKind::UnboundedPoset, "prob needs a bounded poset");
  auto ht = heights(p);
  if (mode == ProbMode::MaxHt) {
    if (xs.empty())
      throw PosetError(PosetErrorKind::EmptyOperand, "prob(maxht) of empty set");
    int best = 0;
    for (int x : xs) best = std::max(best, ht[x]);
    return Rat(best, ht[*p.top()]);
  }
  long long sum = 0, total = 0;
  for (int x : xs) sum += ht[x];
  for (int x = 0; x < p.size(); ++x) total += ht[x];
  return Rat(sum, total);
}

IndependenceVerdict independence(const Poset& p, const ElemSet& a, const ElemSet& b,
                                 IndMode mode) {
  IndependenceVerdict v;
  ElemSet ab = op_meet(p, a, b, OpVariant::Plain);
  v.p_a = prob(p, a, ProbMode::MaxHt);
  v.p_b = prob(p, b, ProbMode::MaxHt);
  v.p_ab = prob(p, ab, ProbMode::MaxHt);
  if (mode == IndMode::Product) {
    v.independent = v.p_ab == v.p_a * v.p_b;
    return v;
  }
  ElemSet na = op_neg(p, a, OpVariant::Plain);
  Rat p_na = prob(p, na, ProbMode::MaxHt);
  if (v.p_a == Rat(0) || p_na == Rat(0))
    throw PosetError(PosetErrorKind::EmptyOperand,
                     "degenerate conditioning: P(A) or P(!A) is zero");
  Rat alpha = v.p_b;
  Rat lhs = v.p_ab / v.p_a;
  Rat rhs = prob(p, op_meet(p, na, b, OpVariant::Plain), ProbMode::MaxHt) / p_na;
  v.independent = (lhs == alpha) || (lhs < alpha && rhs >= alpha) ||
                  (lhs > alpha && rhs <= alpha);
  return v;
}

Poset product_order(const Poset& p1, const Poset& p2,
                    const std::map<std::string, Rat>& values1,
                    const std::map<std::string, Rat>& values2) {
  std::vector<std::string> elems;
  std::vector<std::pair<std::string, Rat>> sums;
  for (const auto& a : p1.elements())
    for (const auto& b : p2.elements()) {
      std::string name = "(" + a + "," + b + ")";
      elems.push_back(name);
      sums.emplace_back(name, values1.at(a) + values2.at(b));
    }
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [na, va] : sums)
    for (const auto& [nb, vb] : sums)
      if (va < vb) pairs.emplace_back(na, nb);
  // declare bounds when the sum order has unique extrema
  std::optional<std::string> bot, top;
  {
    Rat lo = sums[0].second, hi = sums[0].second;
    for (const auto& [n, v] : sums) {
      lo = std::min(lo, v);
      hi = std::max(hi, v);
    }
    int nlo = 0, nhi = 0;
    std::string blo, bhi;
    for (const auto& [n, v] : sums) {
      if (v == lo) { ++nlo; blo = n; }
      if (v == hi) { ++nhi; bhi = n; }
    }
    if (nlo == 1 && !(nhi == 1 && blo == bhi)) bot = blo;
    if (nhi == 1 && !(nlo == 1 && blo == bhi)) top = bhi;
  }
  return Poset::build(std::move(elems), pairs, bot, top);
}

// ---------------------------------------------------------------------------
// Size translation

Rat SizeTranslation::relative_size(int elem) const {
  if (universe.empty()) return Rat(0);
  return Rat(card(elem), static_cast<long long>(universe.size()));
}

SizeTranslation size_translation(const Poset& p) {
  int n = p.size();
  SizeTranslation st;
  st.tokens.assign(n, {});
  int counter = 0;
  auto fresh = [&](int elem) {
    return "a_" + p.name(elem) + "_" + std::to_string(++counter);
  };
  auto subset = [](const std::vector<std::string>& a, const std::vector<std::string>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  auto insert_token = [](std::vector<std::string>& v, const std::string& t) {
    v.insert(std::lower_bound(v.begin(), v.end(), t), t);
  };

  // topological order by longest-path rank, lexicographic tie-break
  // (element indices are already lexicographic by name)
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  auto ht = heights(p);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (ht[a] != ht[b]) return ht[a] < ht[b];
    return a < b;
  });

  std::vector<int> minimals;
  for (int x = 0; x < n; ++x) {
    bool minimal = true;
    for (int y = 0; y < n; ++y)
      if (p.lt(y, x)) minimal = false;
    if (minimal) minimals.push_back(x);
  }
  std::vector<char> built(n, 0);
  for (int x : order) {
    if (std::find(minimals.begin(), minimals.end(), x) != minimals.end()) {
      if (minimals.size() == 1) {
        st.tokens[x] = {};
      } else {
        st.tokens[x] = {fresh(x)};
      }
      built[x] = 1;
      continue;
    }
    // maximal strict predecessors
    std::vector<int> preds;
    for (int y = 0; y < n; ++y) {
      if (!p.lt(y, x)) continue;
      bool maximal = true;
      for (int z = 0; z < n; ++z)
        if (p.lt(y, z) && p.lt(z, x)) maximal = false;
      if (maximal) preds.push_back(y);
    }
    if (preds.size() == 1) {
      st.tokens[x] = st.tokens[preds[0]];
      insert_token(st.tokens[x], fresh(x));
    } else {
      std::vector<std::string> u;
      for (int y : preds)
        for (const auto& t : st.tokens[y])
          if (!std::binary_search(u.begin(), u.end(), t)) insert_token(u, t);
      bool dominated = false;
      for (int z = 0; z < n && !dominated; ++z)
        if (built[z] && !p.leq(z, x) && subset(u, st.tokens[z])) dominated = true;
      if (dominated) insert_token(u, fresh(x));
      st.tokens[x] = std::move(u);
    }
    built[x] = 1;
  }

  // repair pass: restore mutual non-inclusion for incomparable pairs by
  // adding a fresh token to the smaller set and everything above it
  bool changed = true;
  while (changed) {
    changed = false;
    for (int x = 0; x < n && !changed; ++x)
      for (int z = 0; z < n && !changed; ++z) {
        if (x == z || p.comparable(x, z)) continue;
        if (subset(st.tokens[x], st.tokens[z])) {
          std::string t = fresh(x);
          insert_token(st.tokens[x], t);
          for (int y = 0; y < n; ++y)
            if (p.lt(x, y)) insert_token(st.tokens[y], t);
          changed = true;
        }
      }
  }
  std::vector<std::string> u;
  for (const auto& ts : st.tokens)
    for (const auto& t : ts)
      if (!std::binary_search(u.begin(), u.end(), t))
        u.insert(std::lower_bound(u.begin(), u.end(), t), t);
  st.universe = std::move(u);
  return st;
}

// ---------------------------------------------------------------------------
// Core

namespace {

void check_core_args(const CoreParams& params, const std::set<std::string>& x) {
  if (x.empty() || x.size() >= params.universe.size())
    throw std::runtime_error("degenerate set: core needs empty != X != U");
}

std::map<std::string, Rat> depth_table(const CoreParams& params,
                                       const std::set<std::string>& x) {
  std::map<std::string, Rat> depth;
  for (const auto& e : x) {
    bool first = true;
    Rat best;
    for (const auto& u : params.universe) {
      if (x.count(u)) continue;
      Rat d = params.distance(e, u);
      if (first || d < best) {
        best = d;
        first = false;
      }
    }
    depth[e] = best;
  }
  return depth;
}

}  // namespace

CoreResult core(const CoreParams& params, const std::set<std::string>& x) {
  check_core_args(params, x);
  CoreResult res;
  res.depth = depth_table(params, x);
  res.set_depth = Rat(0);
  for (const auto& [e, d] : res.depth) res.set_depth = std::max(res.set_depth, d);
  Rat bar = res.set_depth / params.m;
  for (const auto& [e, d] : res.depth)
    if (d >= bar) res.core.insert(e);
  res.degenerate_singleton = x.size() == 1;
  return res;
}

CoreLayers core_layers(const CoreParams& params, const std::set<std::string>& x) {
  check_core_args(params, x);
  CoreLayers out;
  std::set<std::string> xs = x;
  std::set<std::string> ys;
  for (const auto& u : params.universe)
    if (!x.count(u)) ys.insert(u);
  while (!xs.empty()) {
    // z := elements of X closest to Y (the revision operator Y (*) X)
    bool first = true;
    Rat best;
    for (const auto& e : xs)
      for (const auto& y : ys) {
        Rat d = params.distance(e, y);
        if (first || d < best) {
          best = d;
          first = false;
        }
      }
    std::set<std::string> z;
    for (const auto& e : xs) {
      for (const auto& y : ys)
        if (params.distance(e, y) == best) {
          z.insert(e);
          break;
        }
    }
    out.layers.push_back(z);
    if (z == xs) break;
    for (const auto& e : z) {
      xs.erase(e);
      ys.insert(e);
    }
  }
  // inner half: layers n/2 (rounded up) through n
  size_t count = out.layers.size();
  size_t start = (count - 1 + 1) / 2;  // index ceil((n)/2) with n = count-1
  for (size_t i = start; i < count; ++i)
    out.core.insert(out.layers[i].begin(), out.layers[i].end());
  return out;
}

// ---------------------------------------------------------------------------
// Set means

MeanRow score_candidate(const std::vector<std::set<std::string>>& sets,
                        const std::set<std::string>& z) {
  MeanRow row;
  row.z = z;
  for (const auto& a : sets) {
    int in = 0, ex = 0;
    for (const auto& e : z)
      if (!a.count(e)) ++in;
    for (const auto& e : a)
      if (!z.count(e)) ++ex;
    row.interior.push_back(in);
    row.exterior.push_back(ex);
  }
  return row;
}

std::vector<MeanRow> set_mean(const std::vector<std::set<std::string>>& sets,
                              MeanScheme scheme, const MeanOptions& opt) {
  if (sets.size() < 2) throw std::runtime_error("set_mean needs at least two sets");
  std::vector<std::string> universe;
  {
    std::set<std::string> u;
    for (const auto& a : sets) u.insert(a.begin(), a.end());
    universe.assign(u.begin(), u.end());
  }
  std::vector<Rat> w = opt.set_weights;
  if (w.empty()) w.assign(sets.size(), Rat(1));

  auto key = [&](const MeanRow& row) -> std::vector<Rat> {
    Rat si(0), se(0), sq(0);
    Rat dmax(0), dmin;
    bool first = true;
    for (size_t i = 0; i < sets.size(); ++i) {
      Rat in(row.interior[i]), ex(row.exterior[i]);
      si += w[i] * in;
      se += w[i] * ex;
      Rat d = in + ex;
      sq += w[i] * d * d;
      if (first || d < dmin) dmin = d;
      if (first || d > dmax) dmax = d;
      first = false;
    }
    switch (scheme) {
      case MeanScheme::InteriorLex:
        return {si, se};
      case MeanScheme::ExteriorLex:
        return {se, si};
      case MeanScheme::Weighted:
        return {opt.w_interior * si + opt.w_exterior * se};
      case MeanScheme::Squared:
        return {sq};
      case MeanScheme::Equalized:
        return {dmax - dmin, si + se};
    }
    return {};
  };

  std::vector<MeanRow> best;
  std::vector<Rat> best_key;
  size_t n = universe.size();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n); ++mask) {
    std::set<std::string> z;
    for (size_t i = 0; i < n; ++i)
      if (mask & (uint64_t{1} << i)) z.insert(universe[i]);
    MeanRow row = score_candidate(sets, z);
    auto k = key(row);
    if (best.empty() || k < best_key) {
      best = {row};
      best_key = k;
    } else if (k == best_key) {
      best.push_back(row);
    }
  }
  return best;
}

std::set<std::string> revision_mean(
    const std::vector<std::set<std::string>>& sets,
    const std::function<Rat(const std::string&, const std::string&)>& distance) {
  // A (*) B: the members of B globally closest to A
  auto revise = [&](const std::set<std::string>& a,
                    const std::set<std::string>& b) -> std::set<std::string> {
    bool first = true;
    Rat best;
    for (const auto& x : a)
      for (const auto& y : b) {
        Rat d = distance(x, y);
        if (first || d < best) {
          best = d;
          first = false;
        }
      }
    std::set<std::string> out;
    if (first) return out;
    for (const auto& y : b)
      for (const auto& x : a)
        if (distance(x, y) == best) {
          out.insert(y);
          break;
        }
    return out;
  };
  std::set<std::string> result;
  for (size_t i = 0; i < sets.size(); ++i) {
    std::set<std::string> rest;
    for (size_t j = 0; j < sets.size(); ++j)
      if (j != i) rest.insert(sets[j].begin(), sets[j].end());
    if (rest.empty()) continue;
    auto r = revise(sets[i], rest);
    result.insert(r.begin(), r.end());
  }
  return result;
}

// ---------------------------------------------------------------------------
// Similarity and uncertainty

int similarity(const Poset& p, int x, int y) {
  // common chain prefixes are chains through common lower bounds
  auto ht = heights(p);
  int best = 0;
  for (int z = 0; z < p.size(); ++z)
    if (p.leq(z, x) && p.leq(z, y)) best = std::max(best, ht[z]);
  return best;
}

int uncertainty(const Poset& p, int x) {
  int c = 0;
  for (int y = 0; y < p.size(); ++y)
    if (!p.comparable(x, y)) ++c;
  return c;
}

int downset_size(const Poset& p, int x) {
  int c = 0;
  for (int y = 0; y < p.size(); ++y)
    if (p.lt(y, x)) ++c;
  return c;
}

}  // namespace ordlogic
