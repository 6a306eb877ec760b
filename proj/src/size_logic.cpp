#include "ordlogic/size_logic.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <random>

namespace ordlogic::sz {

PrefStructure PrefStructure::build(
    std::vector<std::string> universe,
    const std::vector<std::pair<std::string, std::string>>& beats) {
  PrefStructure ps;
  std::sort(universe.begin(), universe.end());
  universe.erase(std::unique(universe.begin(), universe.end()), universe.end());
  if (universe.size() > 20) throw SizeLogicError("universe too large (max 20)");
  ps.universe_ = std::move(universe);
  int n = ps.size();
  ps.beaten_by_.assign(n, 0);
  for (const auto& [w, l] : beats) {
    int iw = ps.index_of(w), il = ps.index_of(l);
    ps.beaten_by_[il] |= Mask{1} << iw;
  }
  // cycle check: a beat-cycle would give a subset with empty mu
  std::vector<int> state(n, 0);
  std::function<bool(int)> dfs = [&](int x) {
    state[x] = 1;
    for (int w = 0; w < n; ++w)
      if (ps.beaten_by_[x] & (Mask{1} << w)) {
        if (state[w] == 1) return false;
        if (state[w] == 0 && !dfs(w)) return false;
      }
    state[x] = 2;
    return true;
  };
  for (int x = 0; x < n; ++x)
    if (state[x] == 0 && !dfs(x))
      throw SizeLogicError("preference relation has a beat-cycle; mu would be empty");
  return ps;
}

int PrefStructure::index_of(const std::string& name) const {
  auto it = std::lower_bound(universe_.begin(), universe_.end(), name);
  if (it == universe_.end() || *it != name)
    throw SizeLogicError("unknown element: " + name);
  return static_cast<int>(it - universe_.begin());
}

bool PrefStructure::beats(int winner, int loser) const {
  return beaten_by_[loser] & (Mask{1} << winner);
}

Mask PrefStructure::mu(Mask a) const {
  if (a == 0) throw SizeLogicError("mu of the empty set");
  Mask out = 0;
  for (int x = 0; x < size(); ++x)
    if ((a >> x) & 1)
      if ((beaten_by_[x] & a) == 0) out |= Mask{1} << x;
  return out;
}

Mask PrefStructure::mask_of(const std::vector<std::string>& names) const {
  Mask m = 0;
  for (const auto& n : names) m |= Mask{1} << index_of(n);
  return m;
}

std::string PrefStructure::show(Mask m) const {
  std::string out = "{";
  bool first = true;
  for (int x = 0; x < size(); ++x)
    if ((m >> x) & 1) {
      if (!first) out += ",";
      out += universe_[x];
      first = false;
    }
  return out + "}";
}

RelationProps relation_props(const PrefStructure& ps) {
  RelationProps rp;
  int n = ps.size();
  for (int x = 0; x < n && rp.transitive; ++x)
    for (int y = 0; y < n && rp.transitive; ++y)
      for (int z = 0; z < n; ++z)
        if (ps.beats(x, y) && ps.beats(y, z) && !ps.beats(x, z)) {
          rp.transitive = false;
          rp.transitive_witness = ps.universe()[x] + ">" + ps.universe()[y] + ">" +
                                  ps.universe()[z] + " without " + ps.universe()[x] +
                                  ">" + ps.universe()[z];
          break;
        }
  for (Mask a = 1; a < (Mask{1} << n) && rp.smooth; ++a) {
    Mask m = ps.mu(a);
    for (int x = 0; x < n; ++x) {
      if (!((a >> x) & 1) || ((m >> x) & 1)) continue;
      bool found = false;
      for (int w = 0; w < n && !found; ++w)
        if (((m >> w) & 1) && ps.beats(w, x)) found = true;
      if (!found) {
        rp.smooth = false;
        rp.smooth_witness =
            ps.universe()[x] + " has no minimal beater in " + ps.show(a);
        break;
      }
    }
  }
  for (int x = 0; x < n && rp.ranked; ++x)
    for (int y = 0; y < n && rp.ranked; ++y) {
      if (x == y || ps.beats(x, y) || ps.beats(y, x)) continue;
      for (int z = 0; z < n; ++z) {
        bool bad = (ps.beats(x, z) && !ps.beats(y, z)) ||
                   (ps.beats(z, x) && !ps.beats(z, y));
        if (bad) {
          rp.ranked = false;
          rp.ranked_witness = "incomparable " + ps.universe()[x] + "," +
                              ps.universe()[y] + " behave differently on " +
                              ps.universe()[z];
          break;
        }
      }
    }
  return rp;
}

// ---------------------------------------------------------------------------
// IdealFamily

IdealFamily IdealFamily::principal(PrefStructure ps) {
  IdealFamily f;
  f.n_ = ps.size();
  f.ps_ = std::move(ps);
  return f;
}

IdealFamily IdealFamily::explicit_family(int n, std::map<Mask, std::set<Mask>> ideals) {
  IdealFamily f;
  f.n_ = n;
  // validate (I1)-(I3) per base
  for (const auto& [base, ideal] : ideals) {
    if (base == 0) throw SizeLogicError("empty base set in family");
    if (!ideal.count(0)) throw SizeLogicError("(I1) fails: empty set not small");
    if (ideal.count(base)) throw SizeLogicError("(I1) fails: base set small");
    for (Mask a : ideal) {
      if ((a & ~base) != 0) throw SizeLogicError("ideal member outside base");
      Mask b = a;
      // (I2): subsets of small sets are small
      for (Mask c = b;; c = (c - 1) & b) {
        if (!ideal.count(c)) throw SizeLogicError("(I2) fails inside family");
        if (c == 0) break;
      }
    }
    for (Mask a : ideal)
      for (Mask b : ideal)
        if (!ideal.count(a | b))  // (I3): finite unions stay small
          throw SizeLogicError("(I3) fails inside family");
  }
  f.ideals_ = std::move(ideals);
  return f;
}

Mask IdealFamily::mu(Mask base) const {
  if (!ps_) throw SizeLogicError("family is not principal");
  return ps_->mu(base);
}

bool IdealFamily::small(Mask base, Mask a) const {
  if ((a & ~base) != 0) return false;
  if (ps_) return (a & ps_->mu(base)) == 0;
  auto it = ideals_.find(base);
  if (it == ideals_.end()) throw SizeLogicError("unknown base set");
  return it->second.count(a) != 0;
}

bool IdealFamily::big(Mask base, Mask a) const {
  if ((a & ~base) != 0) return false;
  return small(base, base & ~a);
}

Cls IdealFamily::classify(Mask base, Mask a) const {
  if (small(base, a)) return Cls::Small;
  if (big(base, a)) return Cls::Big;
  return Cls::Medium;
}

// ---------------------------------------------------------------------------
// Coherence

namespace {

std::string show_mask(Mask m) {
  std::string out = "{";
  bool first = true;
  for (int i = 0; i < 20; ++i)
    if ((m >> i) & 1) {
      if (!first) out += ",";
      out += std::to_string(i);
      first = false;
    }
  return out + "}";
}

// iterate over all subsets of base
template <typename F>
void for_subsets(Mask base, F f) {
  Mask c = base;
  while (true) {
    f(c);
    if (c == 0) break;
    c = (c - 1) & base;
  }
}

}  // namespace

CoherenceReport coherence_report(const IdealFamily& fam) {
  CoherenceReport rep;
  int n = fam.size();
  Mask full = (Mask{1} << n) - 1;

  for (Mask y = 1; y <= full; ++y) {
    for_subsets(y, [&](Mask x) {
      if (x == 0 || x == y) return;
      // (Coh1): I(X) subseteq I(Y)
      if (rep.coh1.holds) {
        for_subsets(x, [&](Mask a) {
          if (rep.coh1.holds && fam.small(x, a) && !fam.small(y, a)) {
            rep.coh1.holds = false;
            rep.coh1.witness = "A=" + show_mask(a) + " X=" + show_mask(x) +
                               " Y=" + show_mask(y);
          }
        });
      }
      // (Coh-RK)
      if (rep.coh_rk.holds && !fam.small(y, x)) {
        for_subsets(y, [&](Mask a) {
          if (rep.coh_rk.holds && fam.small(y, a) && !fam.small(x, a & x)) {
            rep.coh_rk.holds = false;
            rep.coh_rk.witness = "A=" + show_mask(a) + " X=" + show_mask(x) +
                                 " Y=" + show_mask(y);
          }
        });
      }
    });
    // (Coh2): X in F(Y), A in I(Y) => A n X in I(X)
    if (rep.coh2.holds) {
      for_subsets(y, [&](Mask x) {
        if (x == 0 || !rep.coh2.holds || !fam.big(y, x)) return;
        for_subsets(y, [&](Mask a) {
          if (rep.coh2.holds && fam.small(y, a) && !fam.small(x, a & x)) {
            rep.coh2.holds = false;
            rep.coh2.witness = "A=" + show_mask(a) + " X=" + show_mask(x) +
                               " Y=" + show_mask(y);
          }
        });
      });
    }
    // (Coh2a): Z, Z' in I(B) => Z - Z' in I(B - Z')
    if (rep.coh2a.holds) {
      for_subsets(y, [&](Mask z) {
        if (!rep.coh2a.holds || !fam.small(y, z)) return;
        for_subsets(y, [&](Mask z2) {
          if (rep.coh2a.holds && fam.small(y, z2) && (y & ~z2) != 0 &&
              !fam.small(y & ~z2, z & ~z2)) {
            rep.coh2a.holds = false;
            rep.coh2a.witness = "Z=" + show_mask(z) + " Z'=" + show_mask(z2) +
                                " B=" + show_mask(y);
          }
        });
      });
    }
  }
  rep.fact22a_consistent = rep.coh2.holds == rep.coh2a.holds;

  if (fam.has_mu()) {
    auto mu = [&](Mask a) { return fam.mu(a); };
    MuCheck mc = check_mu_properties(n, mu);
    rep.mu_pr = mc.mu_pr;
    rep.mu_cum = mc.mu_cum;
    rep.mu_rk = mc.mu_eq;  // (muRK) is the (mu=) rankedness property
    // cross-check the published equivalences
    rep.coher_consistent = (rep.coh1.holds == rep.mu_pr.holds);
    if (rep.mu_cum.holds && !rep.coh2.holds) rep.coher_consistent = false;
    if (rep.coh1.holds && rep.coh2.holds && !rep.mu_cum.holds)
      rep.coher_consistent = false;
    if (rep.mu_rk.holds && !rep.coh_rk.holds) rep.coher_consistent = false;
    if (rep.coh1.holds && rep.coh_rk.holds && !rep.mu_rk.holds)
      rep.coher_consistent = false;
  }
  return rep;
}

MuCheck check_mu_properties(int n, const std::function<Mask(Mask)>& mu) {
  MuCheck mc;
  Mask full = (Mask{1} << n) - 1;
  for (Mask x = 1; x <= full; ++x) {
    Mask mx = mu(x);
    if (mc.mu_subset.holds && (mx & ~x) != 0) {
      mc.mu_subset.holds = false;
      mc.mu_subset.witness = "X=" + show_mask(x);
    }
  }
  for (Mask y = 1; y <= full; ++y) {
    Mask my = mu(y);
    for_subsets(y, [&](Mask x) {
      if (x == 0) return;
      Mask mx = mu(x);
      if (mc.mu_pr.holds && ((my & x) & ~mx) != 0) {
        mc.mu_pr.holds = false;
        mc.mu_pr.witness = "X=" + show_mask(x) + " Y=" + show_mask(y);
      }
      if (mc.mu_cum.holds && (my & ~x) == 0 && mx != my) {
        // mu(Y) subseteq X subseteq Y but mu(X) != mu(Y)
        mc.mu_cum.holds = false;
        mc.mu_cum.witness = "X=" + show_mask(x) + " Y=" + show_mask(y);
      }
      if (mc.mu_eq.holds && (my & x) != 0 && mx != (my & x)) {
        mc.mu_eq.holds = false;
        mc.mu_eq.witness = "X=" + show_mask(x) + " Y=" + show_mask(y);
      }
    });
  }
  return mc;
}

// ---------------------------------------------------------------------------
// Size comparison

bool less_at(const IdealFamily& fam, Mask a, Mask b, Mask base) {
  return fam.small(base, a) && fam.big(base, b);
}

bool less_prime_at(const IdealFamily& fam, Mask a, Mask b, Mask base) {
  Cls ca = fam.classify(base, a), cb = fam.classify(base, b);
  if (cb == Cls::Big && (ca == Cls::Small || ca == Cls::Medium)) return true;
  if (cb == Cls::Medium && ca == Cls::Small) return true;
  return false;
}

bool less(const IdealFamily& fam, Mask a, Mask b) { return less_at(fam, a, b, a | b); }

bool less_prime(const IdealFamily& fam, Mask a, Mask b) {
  return less_prime_at(fam, a, b, a | b);
}

std::optional<int> smallin_chain(const IdealFamily& fam, Mask a, Mask b) {
  if ((a & ~b) != 0) return std::nullopt;  // small-in requires a subseteq b
  // BFS over supersets: a <| A1 <| ... <| b
  Mask full = (Mask{1} << fam.size()) - 1;
  std::deque<std::pair<Mask, int>> queue{{a, 0}};
  std::set<Mask> seen{a};
  while (!queue.empty()) {
    auto [cur, d] = queue.front();
    queue.pop_front();
    if (cur == b && d > 0) return d;
    for (Mask next = cur; next <= full; ++next) {
      if ((cur & ~next) != 0 || next == cur) continue;
      if ((next & ~b) != 0) continue;
      if (!fam.small(next, cur)) continue;
      if (seen.insert(next).second) queue.emplace_back(next, d + 1);
    }
  }
  return std::nullopt;
}

SizeVerdict size_compare(const IdealFamily& fam, Mask a, Mask b,
                         std::optional<Mask> base, bool with_chains) {
  SizeVerdict v;
  Mask x = base.value_or(a | b);
  if (a == b) return v;  // irreflexive everywhere
  if ((a & ~b) == 0 && fam.small(b, a)) {
    v.rel = SizeRel::SmallIn;
    if (with_chains) v.chain_n = smallin_chain(fam, a, b);
    return v;
  }
  if (less_at(fam, a, b, x)) {
    v.rel = SizeRel::Less;
    return v;
  }
  if (less_prime_at(fam, a, b, x)) {
    v.rel = SizeRel::LessPrime;
    return v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Fuzz harness

namespace {

PrefStructure random_smooth(std::mt19937_64& rng, int n, double density) {
  // random DAG along a random topological order, transitively closed:
  // finite + transitive + acyclic gives smoothness
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  std::vector<std::vector<char>> edge(n, std::vector<char>(n, 0));
  std::uniform_real_distribution<double> u(0.0, 1.0);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (u(rng) < density) edge[perm[i]][perm[j]] = 1;
  for (int k = 0; k < n; ++k)
    for (int i = 0; i < n; ++i)
      if (edge[i][k])
        for (int j = 0; j < n; ++j)
          if (edge[k][j]) edge[i][j] = 1;
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> beats;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (edge[i][j]) beats.emplace_back(names[i], names[j]);
  return PrefStructure::build(names, beats);
}

PrefStructure random_ranked(std::mt19937_64& rng, int n, int levels) {
  std::vector<int> rank(n);
  std::uniform_int_distribution<int> lv(0, levels - 1);
  for (int i = 0; i < n; ++i) rank[i] = lv(rng);
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back("e" + std::to_string(i));
  std::vector<std::pair<std::string, std::string>> beats;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (rank[i] > rank[j]) beats.emplace_back(names[i], names[j]);
  return PrefStructure::build(names, beats);
}

struct FuzzCtx {
  const IdealFamily& fam;
  Mask full;
  std::mt19937_64& rng;
  Mask random_mask() {
    std::uniform_int_distribution<Mask> d(0, full);
    return d(rng);
  }
};

using SuiteFn = std::function<bool(FuzzCtx&, long&, std::string&)>;

// Each suite samples sets, counts instances whose hypotheses hold, and
// returns false on a counterexample (with a witness).
bool suite_nochange(FuzzCtx& c, long& instances, std::string& witness) {
  for (int t = 0; t < 24; ++t) {
    Mask y = c.random_mask();
    if (y == 0) continue;
    Mask x = y & c.random_mask();
    Mask x2 = c.random_mask();
    if (x == 0 || (x | x2) == 0) continue;
    Mask sym = x ^ x2;
    if ((x | x2) == 0 || !c.fam.small(x | x2, sym)) continue;
    if ((y | x2) == 0) continue;
    ++instances;
    bool i1 = c.fam.small(y, x), i2 = c.fam.small(y | x2, x2);
    bool f1 = c.fam.big(y, x), f2 = c.fam.big(y | x2, x2);
    bool m1 = !i1 && !f1, m2 = !i2 && !f2;
    if (i1 != i2 || f1 != f2 || m1 != m2) {
      witness = "X=" + show_mask(x) + " X'=" + show_mask(x2) + " Y=" + show_mask(y);
      return false;
    }
  }
  return true;
}

bool suite_nochange2(FuzzCtx& c, long& instances, std::string& witness) {
  for (int t = 0; t < 24; ++t) {
    Mask x = c.random_mask(), y = c.random_mask(), x2 = c.random_mask();
    if (x == 0 || (x | x2) == 0) continue;
    if (!c.fam.small(x, x & ~y)) continue;
    if (!c.fam.small(x | x2, x ^ x2)) continue;
    if ((y | x) == 0 || (y | x2) == 0) continue;
    ++instances;
    bool i1 = c.fam.small(y | x, x), i2 = c.fam.small(y | x2, x2);
    bool f1 = c.fam.big(y | x, x), f2 = c.fam.big(y | x2, x2);
    if (i1 != i2 || f1 != f2) {
      witness = "X=" + show_mask(x) + " X'=" + show_mask(x2) + " Y=" + show_mask(y);
      return false;
    }
  }
  return true;
}

bool suite_nochange3(FuzzCtx& c, long& instances, std::string& witness) {
  for (int t = 0; t < 24; ++t) {
    Mask x = c.random_mask(), y = c.random_mask(), y2 = c.random_mask();
    if (x == 0 || (y | y2) == 0) continue;
    if (!c.fam.small(x, x & ~y)) continue;
    if (!c.fam.small(y | y2, y ^ y2)) continue;
    ++instances;
    bool i1 = c.fam.small(y | x, x), i2 = c.fam.small(y2 | x, x);
    bool f1 = c.fam.big(y | x, x), f2 = c.fam.big(y2 | x, x);
    if (i1 != i2 || f1 != f2) {
      witness = "X=" + show_mask(x) + " Y=" + show_mask(y) + " Y'=" + show_mask(y2);
      return false;
    }
  }
  return true;
}

bool suite_subset(FuzzCtx& c, long& instances, std::string& witness) {
  for (int t = 0; t < 24; ++t) {
    Mask x2 = c.random_mask();
    Mask x = x2 & c.random_mask();
    Mask a = c.random_mask();
    if (x == 0 || x2 == 0) continue;
    if (!c.fam.big(x2, x)) continue;
    ++instances;
    bool lhs = c.fam.big(x, x & a);
    bool rhs = c.fam.big(x2, x2 & a);
    if (lhs != rhs) {
      witness = "X=" + show_mask(x) + " X'=" + show_mask(x2) + " A=" + show_mask(a);
      return false;
    }
  }
  return true;
}

bool suite_subset2(FuzzCtx& c, long& instances, std::string& witness) {
  for (int t = 0; t < 24; ++t) {
    Mask x = c.random_mask(), y = c.random_mask();
    if (x == 0 || y == 0) continue;
    Mask xp = x & c.random_mask(), yp = y & c.random_mask();
    if (xp == 0 || yp == 0) continue;
    if (!c.fam.big(x, xp) || !c.fam.big(y, yp)) continue;
    ++instances;
    bool v[4] = {less(c.fam, x, y), less(c.fam, xp, y), less(c.fam, x, yp),
                 less(c.fam, xp, yp)};
    if (v[0] != v[1] || v[0] != v[2] || v[0] != v[3]) {
      witness = "X=" + show_mask(x) + " X'=" + show_mask(xp) + " Y=" + show_mask(y) +
                " Y'=" + show_mask(yp);
      return false;
    }
  }
  return true;
}

bool suite_tweety(FuzzCtx& c, long& instances, std::string& witness) {
  for (int t = 0; t < 24; ++t) {
    Mask x = c.random_mask(), y = c.random_mask(), z = c.random_mask();
    if (x == 0 || y == 0) continue;
    if (!c.fam.small(x, x & ~y)) continue;
    if (!c.fam.small(x, x & z)) continue;
    if (!c.fam.small(y, y & ~z)) continue;
    ++instances;
    if (!c.fam.small(x | y, x)) {
      witness = "X=" + show_mask(x) + " Y=" + show_mask(y) + " Z=" + show_mask(z);
      return false;
    }
  }
  return true;
}

bool suite_lt_trans(FuzzCtx& c, long& instances, std::string& witness) {
  for (int t = 0; t < 24; ++t) {
    Mask x = c.random_mask(), y = c.random_mask(), z = c.random_mask();
    if ((x | y) == 0 || (y | z) == 0 || (x | z) == 0) continue;
    if (!less(c.fam, x, y) || !less(c.fam, y, z)) continue;
    ++instances;
    if (!less(c.fam, x, z)) {
      witness = "X=" + show_mask(x) + " Y=" + show_mask(y) + " Z=" + show_mask(z);
      return false;
    }
  }
  return true;
}

bool suite_trans_rank(FuzzCtx& c, long& instances, std::string& witness) {
  for (int t = 0; t < 24; ++t) {
    Mask x = c.random_mask(), y = c.random_mask(), z = c.random_mask();
    if ((x | y) == 0 || (y | z) == 0 || (x | z) == 0) continue;
    if (!less_prime(c.fam, x, y) || !less_prime(c.fam, y, z)) continue;
    ++instances;
    if (!less_prime(c.fam, x, z)) {
      witness = "X=" + show_mask(x) + " Y=" + show_mask(y) + " Z=" + show_mask(z);
      return false;
    }
  }
  return true;
}

}  // namespace

std::vector<std::string> fuzz_suites() {
  return {"nochange", "nochange2", "nochange3", "subset",
          "subset2",  "tweety",    "lt-trans",  "trans-rank"};
}

FuzzReport fact_fuzz(const std::string& suite, long structures, int max_universe,
                     uint64_t seed) {
  std::map<std::string, SuiteFn> suites = {
      {"nochange", suite_nochange},   {"nochange2", suite_nochange2},
      {"nochange3", suite_nochange3}, {"subset", suite_subset},
      {"subset2", suite_subset2},     {"tweety", suite_tweety},
      {"lt-trans", suite_lt_trans},   {"trans-rank", suite_trans_rank},
  };
  auto it = suites.find(suite);
  if (it == suites.end()) throw SizeLogicError("unknown fuzz suite: " + suite);
  bool ranked = suite == "trans-rank";

  FuzzReport rep;
  rep.suite = suite;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> size_d(2, max_universe);
  std::uniform_real_distribution<double> dens_d(0.1, 0.9);
  for (long s = 0; s < structures; ++s) {
    int n = size_d(rng);
    PrefStructure ps = ranked ? random_ranked(rng, n, std::max(2, n - 1))
                              : random_smooth(rng, n, dens_d(rng));
    IdealFamily fam = IdealFamily::principal(std::move(ps));
    FuzzCtx ctx{fam, (Mask{1} << n) - 1, rng};
    ++rep.structures;
    std::string witness;
    if (!it->second(ctx, rep.instances, witness)) {
      ++rep.counterexamples;
      if (rep.first_witness.empty())
        rep.first_witness = "structure " + std::to_string(s) + ": " + witness;
    }
  }
  return rep;
}

}  // namespace ordlogic::sz
