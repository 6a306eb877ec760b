#include "ordlogic/yablo.hpp"

#include "ordlogic/relevance.hpp"

#include <algorithm>
#include <cassert>
#include <deque>
#include <functional>
#include <numeric>

namespace ordlogic::yb {

namespace {

std::string chain_node(int i, int j, int k) {
  return "Y" + std::to_string(i) + "_" + std::to_string(j) + "_" + std::to_string(k);
}

}  // namespace

DenotationSystem DenotationSystem::make(std::vector<std::string> atoms,
                                        std::map<std::string, Formula> defs) {
  DenotationSystem sys;
  std::sort(atoms.begin(), atoms.end());
  atoms.erase(std::unique(atoms.begin(), atoms.end()), atoms.end());
  sys.atoms = std::move(atoms);
  for (const auto& [s, f] : defs) {
    if (!std::binary_search(sys.atoms.begin(), sys.atoms.end(), s))
      throw YabloError("denotation for undeclared atom: " + s);
    for (const auto& a : atoms_of(f))
      if (!std::binary_search(sys.atoms.begin(), sys.atoms.end(), a))
        throw YabloError("undeclared atom " + a + " in d(" + s + ")");
  }
  sys.defs = std::move(defs);
  return sys;
}

std::vector<std::string> DenotationSystem::free_atoms() const {
  std::vector<std::string> out;
  for (const auto& a : atoms)
    if (!defs.count(a)) out.push_back(a);
  return out;
}

DiGraph induced_graph(const DenotationSystem& sys) {
  DiGraph g;
  g.vertices = sys.atoms;
  for (const auto& [s, f] : sys.defs) {
    Formula n = nnf(f);
    std::map<std::string, int> polarity;  // 1 pos, 2 neg, 3 both
    std::function<void(const Formula&)> walk = [&](const Formula& node) {
      if (node.kind == Formula::Kind::Atom) {
        polarity[node.atom] |= 1;
      } else if (node.kind == Formula::Kind::Not) {
        polarity[node.kids[0].atom] |= 2;
      } else {
        for (const auto& k : node.kids) walk(k);
      }
    };
    walk(n);
    for (const auto& [a, pol] : polarity)
      g.edges[{s, a}] = pol == 1 ? Sign::Pos : pol == 2 ? Sign::Neg : Sign::Both;
  }
  return g;
}

bool is_acceptable(const DenotationSystem& sys, const Valuation& v) {
  for (const auto& [s, f] : sys.defs) {
    auto it = v.find(s);
    if (it == v.end()) return false;
    if (it->second != eval(f, v)) return false;
  }
  return true;
}

PercolateResult percolate(const DenotationSystem& sys) {
  PercolateResult res;
  std::map<std::string, Formula> defs = sys.defs;
  bool progress = true;
  while (progress) {
    progress = false;
    for (auto it = defs.begin(); it != defs.end();) {
      Formula f = simplify(substitute(it->second, res.forced));
      if (f.kind == Formula::Kind::Top || f.kind == Formula::Kind::Bot) {
        res.forced[it->first] = f.kind == Formula::Kind::Top;
        it = defs.erase(it);
        progress = true;
      } else {
        it->second = std::move(f);
        ++it;
      }
    }
  }
  std::vector<std::string> atoms;
  for (const auto& a : sys.atoms)
    if (!res.forced.count(a)) atoms.push_back(a);
  res.system = DenotationSystem::make(std::move(atoms), std::move(defs));
  return res;
}

namespace {

struct SearchSpace {
  Valuation fixed;                     // forced + pinned
  std::vector<std::string> variable;   // sorted; enumerate lexicographically
};

SearchSpace search_space(const DenotationSystem& sys, int budget,
                         const Valuation& pinned, bool* conflict) {
  if (static_cast<int>(sys.atoms.size()) > budget)
    throw YabloError("budget exceeded: " + std::to_string(sys.atoms.size()) + " atoms");
  *conflict = false;
  PercolateResult pr = percolate(sys);
  SearchSpace sp;
  sp.fixed = pr.forced;
  for (const auto& [a, v] : pinned) {
    auto it = sp.fixed.find(a);
    if (it != sp.fixed.end() && it->second != v) {
      *conflict = true;
      return sp;
    }
    sp.fixed[a] = v;
  }
  for (const auto& a : sys.atoms)
    if (!sp.fixed.count(a)) sp.variable.push_back(a);
  return sp;
}

}  // namespace

std::optional<Valuation> find_acceptable(const DenotationSystem& sys, int budget,
                                         const Valuation& pinned) {
  bool conflict = false;
  SearchSpace sp = search_space(sys, budget, pinned, &conflict);
  if (conflict) return std::nullopt;
  size_t k = sp.variable.size();
  for (uint64_t bits = 0; bits < (uint64_t{1} << k); ++bits) {
    Valuation v = sp.fixed;
    for (size_t i = 0; i < k; ++i)
      v[sp.variable[i]] = (bits >> (k - 1 - i)) & 1;  // lexicographic, false first
    if (is_acceptable(sys, v)) return v;
  }
  return std::nullopt;
}

long count_acceptable(const DenotationSystem& sys, int budget) {
  bool conflict = false;
  SearchSpace sp = search_space(sys, budget, {}, &conflict);
  long count = 0;
  size_t k = sp.variable.size();
  for (uint64_t bits = 0; bits < (uint64_t{1} << k); ++bits) {
    Valuation v = sp.fixed;
    for (size_t i = 0; i < k; ++i) v[sp.variable[i]] = (bits >> (k - 1 - i)) & 1;
    if (is_acceptable(sys, v)) ++count;
  }
  return count;
}

bool is_simply_connected(const DiGraph& g) {
  std::map<std::string, std::string> parent;
  std::function<const std::string&(const std::string&)> find =
      [&](const std::string& x) -> const std::string& {
    auto it = parent.find(x);
    if (it == parent.end() || it->second == x) return x;
    const std::string& root = find(it->second);
    parent[x] = root;
    return root;
  };
  for (const auto& v : g.vertices) parent[v] = v;
  for (const auto& [edge, sign] : g.edges) {
    const auto& [u, v] = edge;
    if (u == v) return false;  // loops violate
    std::string ru = find(u), rv = find(v);
    if (ru == rv) return false;  // second undirected path (or opposite edge)
    parent[ru] = rv;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Simply connected solver

Valuation solve_simply_connected(const DenotationSystem& sys) {
  DiGraph g = induced_graph(sys);
  if (!is_simply_connected(g))
    throw YabloError("system graph is not simply connected");

  std::map<std::string, Formula> defs = sys.defs;
  Valuation val;                       // values chosen or forced so far
  std::set<std::string> resolved;      // equation handled (or no def)
  std::deque<std::string> committed;   // value fixed, equation pending

  auto resolve = [&](const std::string& s, bool value) {
    val[s] = value;
    resolved.insert(s);
    for (auto& [t, f] : defs)
      if (!resolved.count(t)) f = simplify(substitute(f, {{s, value}}));
  };

  // step 1: inessential-atom erasure plus constant percolation
  auto local_pass = [&]() {
    bool progress = true;
    while (progress) {
      progress = false;
      for (auto& [s, f] : defs) {
        if (resolved.count(s)) continue;
        rv::FormulaProfile prof = rv::essential_vars(f);
        std::map<std::string, bool> erase;
        for (const auto& a : prof.syntactic)
          if (!std::binary_search(prof.essential.begin(), prof.essential.end(), a))
            erase[a] = true;  // replacing an irrelevant atom keeps equivalence
        if (!erase.empty()) f = simplify(substitute(f, erase));
        if (f.kind == Formula::Kind::Top || f.kind == Formula::Kind::Bot) {
          bool c = f.kind == Formula::Kind::Top;
          auto it = val.find(s);
          if (it != val.end() && it->second != c)
            throw YabloError("internal: commitment conflicts with forced value");
          resolve(s, c);
          progress = true;
        }
      }
    }
  };

  local_pass();
  while (true) {
    std::string x;
    bool seeded_value;
    if (!committed.empty()) {
      x = committed.front();
      committed.pop_front();
      if (resolved.count(x)) continue;
      seeded_value = val.at(x);
    } else {
      // fresh seed: lexicographically least unresolved defined atom
      auto pick = defs.end();
      for (auto it = defs.begin(); it != defs.end(); ++it)
        if (!resolved.count(it->first)) {
          pick = it;
          break;
        }
      if (pick == defs.end()) break;
      x = pick->first;
      seeded_value = true;  // free seeds default to TOP
      val[x] = true;
    }

    // respect values of already-committed atoms inside d(x)
    Formula f = defs.at(x);
    {
      std::map<std::string, bool> known;
      for (const auto& a : atoms_of(f)) {
        auto it = val.find(a);
        if (it != val.end()) known[a] = it->second;
      }
      if (!known.empty()) f = simplify(substitute(f, known));
    }
    if (f.kind == Formula::Kind::Top || f.kind == Formula::Kind::Bot) {
      if ((f.kind == Formula::Kind::Top) != seeded_value)
        throw YabloError("internal: seed value became unsatisfiable");
      resolve(x, seeded_value);
      local_pass();
      continue;
    }

    // simultaneous successor choice: lexicographically least assignment
    // of d(x)'s atoms realizing the seeded value
    std::vector<std::string> atoms = atoms_of(f);
    size_t k = atoms.size();
    bool chosen = false;
    for (uint64_t bits = 0; bits < (uint64_t{1} << k) && !chosen; ++bits) {
      std::map<std::string, bool> env;
      for (size_t i = 0; i < k; ++i) env[atoms[i]] = (bits >> (k - 1 - i)) & 1;
      if (eval(f, env) == seeded_value) {
        chosen = true;
        resolve(x, seeded_value);
        for (size_t i = 0; i < k; ++i) {
          const std::string& a = atoms[i];
          bool va = env[a];
          if (defs.count(a) && !resolved.count(a)) {
            val[a] = va;
            committed.push_back(a);
          } else if (!defs.count(a)) {
            val[a] = va;  // free atom, no equation to satisfy
          }
        }
      }
    }
    if (!chosen) throw YabloError("internal: no successor witness exists");
    local_pass();
  }

  for (const auto& a : sys.atoms)
    if (!val.count(a)) val[a] = false;  // untouched free atoms
  if (!is_acceptable(sys, val))
    throw YabloError("internal: solver produced an unacceptable valuation");
  return val;
}

bool homomorphism_check(const DiGraph& g, const DiGraph& h,
                        const std::map<std::string, std::string>& f,
                        std::pair<std::string, std::string>* bad_edge) {
  for (const auto& v : g.vertices)
    if (!f.count(v)) throw YabloError("homomorphism map not total on " + v);
  for (const auto& [edge, sign] : g.edges) {
    auto img = std::pair(f.at(edge.first), f.at(edge.second));
    if (!h.edges.count(img)) {
      if (bad_edge) *bad_edge = edge;
      return false;
    }
  }
  return true;
}

// ---------------------------------------------------------------------------
// Generators

DenotationSystem gen_yablo(int n) {
  if (n < 2) throw YabloError("gen_yablo needs n >= 2");
  std::vector<std::string> atoms;
  std::map<std::string, Formula> defs;
  for (int i = 1; i <= n; ++i) atoms.push_back("Y" + std::to_string(i));
  for (int i = 1; i <= n; ++i) {
    std::vector<Formula> conj;
    for (int j = i + 1; j <= n; ++j)
      conj.push_back(Formula::negate(Formula::make_atom("Y" + std::to_string(j))));
    defs["Y" + std::to_string(i)] = Formula::conj(std::move(conj));
  }
  return DenotationSystem::make(std::move(atoms), std::move(defs));
}

DenotationSystem gen_yg_prime(int n) {
  if (n < 3) throw YabloError("gen_yg_prime needs n >= 3");
  std::vector<std::string> atoms;
  std::map<std::string, Formula> defs;
  for (int i = 1; i <= n; ++i) atoms.push_back("Y" + std::to_string(i));
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      for (int k = i + 1; k < j; ++k) atoms.push_back(chain_node(i, j, k));
  for (int i = 1; i <= n; ++i) {
    std::vector<Formula> conj;
    if (i + 1 <= n)
      conj.push_back(Formula::negate(Formula::make_atom("Y" + std::to_string(i + 1))));
    for (int j = i + 2; j <= n; ++j)
      conj.push_back(Formula::negate(Formula::make_atom(chain_node(i, j, i + 1))));
    defs["Y" + std::to_string(i)] = Formula::conj(std::move(conj));
  }
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      for (int k = i + 1; k < j; ++k)
        defs[chain_node(i, j, k)] =
            k + 1 < j ? Formula::make_atom(chain_node(i, j, k + 1))
                      : Formula::make_atom("Y" + std::to_string(j));
  return DenotationSystem::make(std::move(atoms), std::move(defs));
}

DenotationSystem gen_yg_double_prime(int n) {
  if (n < 2) throw YabloError("gen_yg_double_prime needs n >= 2");
  std::vector<std::string> atoms;
  std::map<std::string, Formula> defs;
  for (int i = 1; i <= n; ++i) atoms.push_back("Y" + std::to_string(i));
  for (int i = 1; i < n; ++i)
    defs["Y" + std::to_string(i)] =
        Formula::negate(Formula::make_atom("Y" + std::to_string(i + 1)));
  // the last node is a frontier atom of the infinite chain: free
  return DenotationSystem::make(std::move(atoms), std::move(defs));
}

std::map<std::string, std::string> yg_collapse_map(int n) {
  std::map<std::string, std::string> f;
  for (int i = 1; i <= n; ++i) f["Y" + std::to_string(i)] = "Y" + std::to_string(i);
  for (int i = 1; i <= n; ++i)
    for (int j = i + 2; j <= n; ++j)
      for (int k = i + 1; k < j; ++k)
        f[chain_node(i, j, k)] = "Y" + std::to_string(k);
  return f;
}

DenotationSystem gen_chain(const std::vector<ChainDen>& spec) {
  int n = static_cast<int>(spec.size());
  if (n < 1) throw YabloError("gen_chain needs a nonempty spec");
  std::vector<std::string> atoms;
  std::map<std::string, Formula> defs;
  auto name = [](int i) { return "x" + std::to_string(i); };
  for (int i = 1; i <= n; ++i) atoms.push_back(name(i));
  bool frontier = false;
  for (int i = 1; i <= n; ++i) {
    switch (spec[i - 1]) {
      case ChainDen::Top:
        defs[name(i)] = Formula::top();
        break;
      case ChainDen::Bot:
        defs[name(i)] = Formula::bot();
        break;
      case ChainDen::Next:
      case ChainDen::NotNext: {
        if (i == n) frontier = true;
        Formula next = Formula::make_atom(name(i + 1));
        defs[name(i)] = spec[i - 1] == ChainDen::Next ? next : Formula::negate(next);
        break;
      }
    }
  }
  if (frontier) atoms.push_back(name(n + 1));
  return DenotationSystem::make(std::move(atoms), std::move(defs));
}

DenotationSystem gen_procrastination(int n) {
  if (n < 2) throw YabloError("gen_procrastination needs n >= 2");
  std::vector<std::string> atoms;
  std::map<std::string, Formula> defs;
  auto y = [](int i) { return "Y" + std::to_string(i); };
  auto x = [](int i) { return "X" + std::to_string(i); };
  for (int i = 1; i <= n + 1; ++i) atoms.push_back(y(i));
  for (int i = 3; i <= n + 2; ++i) atoms.push_back(x(i));
  for (int i = 1; i <= n; ++i)
    defs[y(i)] = Formula::conj({Formula::negate(Formula::make_atom(y(i + 1))),
                                Formula::make_atom(x(i + 2))});
  for (int i = 3; i <= n + 1; ++i)
    defs[x(i)] = Formula::conj({Formula::negate(Formula::make_atom(y(i))),
                                Formula::make_atom(x(i + 1))});
  // frontier atoms Y_{n+1} and X_{n+2} stay free
  return DenotationSystem::make(std::move(atoms), std::move(defs));
}

DenotationSystem gen_ya() {
  std::vector<std::string> atoms;
  std::map<std::string, Formula> defs;
  for (int i = 0; i <= 4; ++i) atoms.push_back("x" + std::to_string(i));
  for (int i = 0; i <= 4; ++i) {
    std::vector<Formula> conj;
    for (int j = i + 1; j <= 4; ++j)
      conj.push_back(Formula::negate(Formula::make_atom("x" + std::to_string(j))));
    defs["x" + std::to_string(i)] = Formula::conj(std::move(conj));
  }
  return DenotationSystem::make(std::move(atoms), std::move(defs));
}

// ---------------------------------------------------------------------------
// Schema graphs

SchemaGraph SchemaGraph::make(std::vector<std::string> families,
                              std::map<std::string, std::vector<SchemaRef>> templates) {
  SchemaGraph sg;
  std::sort(families.begin(), families.end());
  sg.families = std::move(families);
  auto known = [&](const std::string& f) {
    return std::binary_search(sg.families.begin(), sg.families.end(), f);
  };
  for (const auto& [fam, refs] : templates) {
    if (!known(fam)) throw YabloError("template for undeclared family " + fam);
    for (const auto& r : refs) {
      if (!known(r.family)) throw YabloError("reference to undeclared family " + r.family);
      if (!r.all_greater && r.family == fam && r.offset < 1)
        throw YabloError("own-family offsets must be >= 1 (acyclicity)");
      if (!r.all_greater && r.offset < 0) throw YabloError("negative offset");
    }
  }
  // offset-0 cross references must not form family cycles
  {
    std::map<std::string, std::vector<std::string>> zero;
    for (const auto& [fam, refs] : templates)
      for (const auto& r : refs)
        if (!r.all_greater && r.offset == 0) zero[fam].push_back(r.family);
    std::map<std::string, int> state;
    std::function<bool(const std::string&)> dfs = [&](const std::string& f) {
      state[f] = 1;
      for (const auto& g : zero[f]) {
        if (state[g] == 1) return false;
        if (state[g] == 0 && !dfs(g)) return false;
      }
      state[f] = 2;
      return true;
    };
    for (const auto& f : sg.families)
      if (state[f] == 0 && !dfs(f))
        throw YabloError("offset-0 references form a family cycle");
  }
  sg.templates = std::move(templates);
  return sg;
}

SchemaGraph schema_yablo() {
  return SchemaGraph::make({"Y"}, {{"Y", {{"Y", true, 0, false}}}});
}

SchemaGraph schema_procrastination() {
  return SchemaGraph::make(
      {"X", "Y"},
      {{"Y", {{"Y", false, 1, false}, {"X", false, 2, true}}},
       {"X", {{"Y", false, 0, false}, {"X", false, 1, true}}}});
}

DenotationSystem schema_truncate(const SchemaGraph& sg, int levels) {
  if (levels < 1) throw YabloError("schema_truncate needs levels >= 1");
  std::vector<std::string> atoms;
  std::map<std::string, Formula> defs;
  std::set<std::string> declared;
  auto node = [](const std::string& fam, int i) { return fam + std::to_string(i); };
  auto declare = [&](const std::string& name) {
    if (declared.insert(name).second) atoms.push_back(name);
  };
  for (const auto& fam : sg.families)
    for (int i = 0; i < levels; ++i) declare(node(fam, i));
  for (const auto& fam : sg.families) {
    auto it = sg.templates.find(fam);
    if (it == sg.templates.end()) continue;
    for (int i = 0; i < levels; ++i) {
      std::vector<Formula> conj;
      for (const auto& r : it->second) {
        if (r.all_greater) {
          for (int j = i + 1; j < levels; ++j) {
            Formula a = Formula::make_atom(node(r.family, j));
            conj.push_back(r.positive ? a : Formula::negate(a));
          }
        } else {
          int j = i + r.offset;
          declare(node(r.family, j));  // beyond the horizon: free frontier atom
          Formula a = Formula::make_atom(node(r.family, j));
          conj.push_back(r.positive ? a : Formula::negate(a));
        }
      }
      defs[node(fam, i)] = Formula::conj(std::move(conj));
    }
  }
  return DenotationSystem::make(std::move(atoms), std::move(defs));
}

SchemaCheck schema_check_uniform(const SchemaGraph& sg,
                                 const std::map<std::string, bool>& assignment) {
  SchemaCheck out;
  for (const auto& fam : sg.families) {
    bool v = assignment.at(fam);
    auto it = sg.templates.find(fam);
    bool rhs = true;  // empty conjunction
    if (it != sg.templates.end()) {
      for (const auto& r : it->second) {
        bool ref = assignment.at(r.family);
        rhs = rhs && (r.positive ? ref : !ref);
      }
    }
    if (rhs != v) {
      out.acceptable = false;
      out.violated_family = fam;
      out.reason = "equation evaluates " + std::string(rhs ? "TOP" : "BOT") +
                   " but the family is assigned " + (v ? "TOP" : "BOT");
      return out;
    }
  }
  return out;
}

TransAndNotResult transandnot(const DenotationSystem& sys) {
  // shape gate: every atom defined by a pure conjunction of negated atoms
  std::map<std::string, std::vector<std::string>> succ;
  for (const auto& a : sys.atoms) {
    auto it = sys.defs.find(a);
    if (it == sys.defs.end())
      throw YabloError("not Yablo-like: atom " + a + " has no denotation");
    const Formula& f = it->second;
    std::vector<std::string> ss;
    auto take = [&](const Formula& lit) {
      if (lit.kind != Formula::Kind::Not || lit.kids[0].kind != Formula::Kind::Atom)
        throw YabloError("not Yablo-like: d(" + a + ") is not an AND-NOT form");
      ss.push_back(lit.kids[0].atom);
    };
    if (f.kind == Formula::Kind::Top) {
      // empty conjunction
    } else if (f.kind == Formula::Kind::And) {
      for (const auto& k : f.kids) take(k);
    } else {
      take(f);
    }
    succ[a] = std::move(ss);
  }
  // transitivity gate
  for (const auto& [a, ss] : succ)
    for (const auto& b : ss)
      for (const auto& c : succ[b])
        if (std::find(ss.begin(), ss.end(), c) == ss.end())
          throw YabloError("not Yablo-like: graph is not transitive (" + a + "->" + b +
                           "->" + c + ")");

  TransAndNotResult res;
  for (const auto& a : sys.atoms) {
    const auto& ss = succ[a];
    if (ss.empty()) continue;
    bool all_nonempty = std::all_of(ss.begin(), ss.end(),
                                    [&](const std::string& b) { return !succ[b].empty(); });
    if (all_nonempty) {
      res.paradoxical = true;
      res.culprit = a;
      return res;
    }
  }
  for (const auto& a : sys.atoms) res.valuation[a] = succ[a].empty();
  Valuation v(res.valuation.begin(), res.valuation.end());
  if (!is_acceptable(sys, v))
    throw YabloError("internal: canonical valuation failed verification");
  return res;
}

TransAndNotResult transandnot(const SchemaGraph& sg) {
  for (const auto& [fam, refs] : sg.templates)
    for (const auto& r : refs)
      if (r.positive)
        throw YabloError("not Yablo-like: schema has a positive reference");
  // structural transitivity check on a bounded truncation
  {
    const int k = 8;
    std::map<std::pair<std::string, int>, std::set<std::pair<std::string, int>>> edges;
    for (const auto& fam : sg.families) {
      auto it = sg.templates.find(fam);
      if (it == sg.templates.end()) continue;
      for (int i = 0; i < k; ++i)
        for (const auto& r : it->second) {
          if (r.all_greater) {
            for (int j = i + 1; j < k; ++j) edges[{fam, i}].insert({r.family, j});
          } else if (i + r.offset < k) {
            edges[{fam, i}].insert({r.family, i + r.offset});
          }
        }
    }
    for (const auto& [x, ss] : edges)
      for (const auto& y : ss) {
        auto it = edges.find(y);
        if (it == edges.end()) continue;
        for (const auto& z : it->second)
          if (!ss.count(z))
            throw YabloError("not Yablo-like: schema graph is not transitive");
      }
  }
  TransAndNotResult res;
  auto nonempty = [&](const std::string& fam) {
    auto it = sg.templates.find(fam);
    return it != sg.templates.end() && !it->second.empty();
  };
  for (const auto& fam : sg.families) {
    if (!nonempty(fam)) continue;
    bool all = true;
    for (const auto& r : sg.templates.at(fam))
      if (!nonempty(r.family)) all = false;
    if (all) {
      res.paradoxical = true;
      res.culprit = fam + "0";
      return res;
    }
  }
  std::map<std::string, bool> assignment;
  for (const auto& fam : sg.families) assignment[fam] = !nonempty(fam);
  SchemaCheck chk = schema_check_uniform(sg, assignment);
  if (!chk.acceptable)
    throw YabloError("internal: schema valuation failed verification");
  res.valuation = assignment;
  return res;
}

// ---------------------------------------------------------------------------
// Paths and cells

std::vector<LabelledPath> labelled_paths(const DenotationSystem& sys,
                                         const std::string& origin, int max_len) {
  DiGraph g = induced_graph(sys);
  std::map<std::string, std::vector<std::pair<std::string, bool>>> adj;
  for (const auto& [edge, sign] : g.edges) {
    if (sign == Sign::Pos || sign == Sign::Both) adj[edge.first].emplace_back(edge.second, false);
    if (sign == Sign::Neg || sign == Sign::Both) adj[edge.first].emplace_back(edge.second, true);
  }
  for (auto& [v, list] : adj)
    std::sort(list.begin(), list.end(), [](const auto& a, const auto& b) {
      return a.first != b.first ? a.first < b.first : a.second < b.second;  // + before -
    });
  if (std::find(sys.atoms.begin(), sys.atoms.end(), origin) == sys.atoms.end())
    throw YabloError("unknown origin atom: " + origin);

  std::vector<LabelledPath> out;
  LabelledPath cur;
  cur.nodes.push_back(origin);
  std::function<void()> dfs = [&]() {
    const std::string& here = cur.nodes.back();
    auto it = adj.find(here);
    bool extendable = it != adj.end() && !it->second.empty() &&
                      static_cast<int>(cur.neg_step.size()) < max_len;
    if (extendable) {
      // acyclic systems revisit nothing; guard anyway
      for (const auto& [next, neg] : it->second)
        if (std::find(cur.nodes.begin(), cur.nodes.end(), next) != cur.nodes.end())
          extendable = false;
    }
    if (!extendable) {
      out.push_back(cur);
      return;
    }
    for (const auto& [next, neg] : it->second) {
      cur.nodes.push_back(next);
      cur.neg_step.push_back(neg);
      dfs();
      cur.nodes.pop_back();
      cur.neg_step.pop_back();
    }
  };
  dfs();
  return out;
}

ValuedPath value_path(const LabelledPath& p, bool seed_pos) {
  ValuedPath vp;
  vp.path = p;
  vp.seed_pos = seed_pos;
  vp.pos.push_back(seed_pos);
  for (bool neg : p.neg_step) vp.pos.push_back(neg ? !vp.pos.back() : vp.pos.back());
  return vp;
}

std::string path_to_string(const LabelledPath& p) {
  std::string out = p.nodes[0];
  for (size_t i = 0; i < p.neg_step.size(); ++i)
    out += (p.neg_step[i] ? " ->- " : " ->+ ") + p.nodes[i + 1];
  return out;
}

std::string valued_path_to_string(const ValuedPath& p) {
  std::string out = p.path.nodes[0] + (p.pos[0] ? "+" : "-");
  for (size_t i = 0; i < p.path.neg_step.size(); ++i)
    out += (p.path.neg_step[i] ? " ->- " : " ->+ ") + p.path.nodes[i + 1] +
           (p.pos[i + 1] ? "+" : "-");
  return out;
}

CellReport cell_analyze(const std::vector<LabelledPath>& paths) {
  CellReport rep;
  if (paths.size() < 2) {
    rep.violation = "a cell needs at least two paths";
    return rep;
  }
  for (const auto& p : paths)
    if (p.nodes.empty()) {
      rep.violation = "empty path";
      return rep;
    }
  for (size_t i = 1; i < paths.size(); ++i)
    if (paths[i].nodes[0] != paths[0].nodes[0]) {
      rep.violation = "paths lack a common origin";
      return rep;
    }

  for (size_t i = 0; i < paths.size(); ++i)
    for (size_t j = i + 1; j < paths.size(); ++j) {
      const LabelledPath& s = paths[i];
      const LabelledPath& t = paths[j];
      // first step where the paths differ
      size_t k = 0;
      while (k < s.neg_step.size() && k < t.neg_step.size() &&
             s.neg_step[k] == t.neg_step[k] && s.nodes[k + 1] == t.nodes[k + 1])
        ++k;
      if (k == s.neg_step.size() && k == t.neg_step.size()) {
        rep.violation = "paths " + std::to_string(i) + "," + std::to_string(j) +
                        " are identical (no divergence)";
        return rep;
      }
      if (k == s.neg_step.size() || k == t.neg_step.size()) {
        rep.violation = "path " + std::to_string(k == s.neg_step.size() ? i : j) +
                        " is a prefix of the other (no divergence)";
        return rep;
      }
      // reconvergence: earliest node of s after the divergence that t
      // also visits after the divergence
      size_t mi = 0, mj = 0;
      bool met = false;
      for (size_t a = k + 1; a < s.nodes.size() && !met; ++a)
        for (size_t b = k + 1; b < t.nodes.size(); ++b)
          if (s.nodes[a] == t.nodes[b]) {
            mi = a;
            mj = b;
            met = true;
            break;
          }
      if (!met) {
        rep.violation = "paths " + std::to_string(i) + "," + std::to_string(j) +
                        " diverge but never meet again";
        return rep;
      }
      // after the meet the paths must be identical
      bool same_tail = s.nodes.size() - mi == t.nodes.size() - mj;
      for (size_t d = 0; same_tail && mi + d < s.nodes.size(); ++d) {
        if (s.nodes[mi + d] != t.nodes[mj + d]) same_tail = false;
        if (mi + d < s.neg_step.size() &&
            (mj + d >= t.neg_step.size() || s.neg_step[mi + d] != t.neg_step[mj + d]))
          same_tail = false;
      }
      if (!same_tail) {
        rep.violation = "paths " + std::to_string(i) + "," + std::to_string(j) +
                        " diverge again after meeting at " + s.nodes[mi];
        return rep;
      }
      CellPair pr;
      pr.i = i;
      pr.j = j;
      pr.meet = s.nodes[mi];
      for (size_t d = 0; d < mi; ++d) pr.neg_i += s.neg_step[d] ? 1 : 0;
      for (size_t d = 0; d < mj; ++d) pr.neg_j += t.neg_step[d] ? 1 : 0;
      pr.contradictory = (pr.neg_i % 2) != (pr.neg_j % 2);
      // cross-check the parity criterion against direct propagation
      ValuedPath vs = value_path(s, true), vt = value_path(t, true);
      if ((vs.pos[mi] != vt.pos[mj]) != pr.contradictory)
        throw YabloError("internal: parity criterion disagrees with propagation");
      rep.pairs.push_back(pr);
      if (pr.contradictory) rep.contradictory = true;
    }
  rep.is_cell = true;
  return rep;
}

OddLoopResult oddloop_check(const std::vector<std::string>& items,
                            const std::vector<std::pair<std::string, std::string>>& pairs) {
  OddLoopResult res;
  std::map<std::string, std::vector<std::string>> adj;
  for (const auto& it : items) adj[it];
  for (const auto& [a, b] : pairs) {
    if (!adj.count(a) || !adj.count(b)) throw YabloError("pair over undeclared item");
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::map<std::string, std::string> parent;
  for (auto& [v, list] : adj) std::sort(list.begin(), list.end());
  for (const auto& [start, unused] : adj) {
    if (res.side.count(start)) continue;
    std::deque<std::string> queue{start};
    res.side[start] = 0;
    parent[start] = "";
    while (!queue.empty()) {
      std::string u = queue.front();
      queue.pop_front();
      for (const auto& v : adj[u]) {
        if (!res.side.count(v)) {
          res.side[v] = 1 - res.side[u];
          parent[v] = u;
          queue.push_back(v);
        } else if (res.side[v] == res.side[u]) {
          // odd cycle: join the tree paths of u and v at their lowest
          // common ancestor
          std::vector<std::string> pu, pv;
          std::set<std::string> seen;
          for (std::string w = u;; w = parent[w]) {
            pu.push_back(w);
            seen.insert(w);
            if (parent[w].empty()) break;
          }
          std::string lca;
          for (std::string w = v;; w = parent[w]) {
            pv.push_back(w);
            if (seen.count(w)) {
              lca = w;
              break;
            }
          }
          std::vector<std::string> cycle;
          for (const auto& w : pu) {
            cycle.push_back(w);
            if (w == lca) break;
          }
          std::vector<std::string> down;  // v .. node-before-lca
          for (const auto& w : pv) {
            if (w == lca) break;
            down.push_back(w);
          }
          std::reverse(down.begin(), down.end());
          for (const auto& w : down) cycle.push_back(w);
          res.odd_cycle = cycle;
          res.bipartite = false;
          return res;
        }
      }
    }
  }
  res.bipartite = true;
  return res;
}

}  // namespace ordlogic::yb
