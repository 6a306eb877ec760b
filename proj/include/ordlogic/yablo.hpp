#pragma once

#include "ordlogic/formula.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ordlogic::yb {

struct YabloError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Atoms with a formula assigned to each; atoms without a denotation are
// free (frontier atoms of truncated infinite structures).
struct DenotationSystem {
  std::vector<std::string> atoms;            // sorted
  std::map<std::string, Formula> defs;

  static DenotationSystem make(std::vector<std::string> atoms,
                               std::map<std::string, Formula> defs);
  bool has_def(const std::string& atom) const { return defs.count(atom) != 0; }
  std::vector<std::string> free_atoms() const;
};

enum class Sign { Pos, Neg, Both };

struct DiGraph {
  std::vector<std::string> vertices;
  std::map<std::pair<std::string, std::string>, Sign> edges;
};

// Edge s -> s' iff s' occurs in d(s); signed by occurrence polarity in NNF.
DiGraph induced_graph(const DenotationSystem& sys);

using Valuation = std::map<std::string, bool>;

bool is_acceptable(const DenotationSystem& sys, const Valuation& v);

// Percolation preprocessing then exhaustive search; first witness in
// lexicographic atom order (false before true). Entries of `pinned` are
// forced. Nullopt certifies that no acceptable valuation exists.
std::optional<Valuation> find_acceptable(const DenotationSystem& sys, int budget = 24,
                                         const Valuation& pinned = {});

long count_acceptable(const DenotationSystem& sys, int budget = 24);

struct PercolateResult {
  DenotationSystem system;  // determined atoms substituted away
  Valuation forced;
};

// Forced constants propagate upward through conjunctions/disjunctions
// until no denotation simplifies to a constant.
PercolateResult percolate(const DenotationSystem& sys);

// True iff the underlying undirected multigraph is acyclic; loops and
// opposite edge pairs count as cycles.
bool is_simply_connected(const DiGraph& g);

// The staged solver for simply connected systems: inessential-atom
// erasure, constant percolation, one free seed per fragment (default
// TOP), simultaneous successor witnesses, recursion on the fragments.
// The result is re-checked for acceptability before returning.
Valuation solve_simply_connected(const DenotationSystem& sys);

bool homomorphism_check(const DiGraph& g, const DiGraph& h,
                        const std::map<std::string, std::string>& f,
                        std::pair<std::string, std::string>* bad_edge = nullptr);

// ---------------------------------------------------------------------------
// Generators

DenotationSystem gen_yablo(int n);        // d(Y_i) = AND{ !Y_j : i < j <= n }
DenotationSystem gen_yg_prime(int n);     // factorized long arrows
DenotationSystem gen_yg_double_prime(int n);  // the collapsed chain
enum class ChainDen { Next, NotNext, Top, Bot };
DenotationSystem gen_chain(const std::vector<ChainDen>& spec);
DenotationSystem gen_procrastination(int n);
DenotationSystem gen_ya();

// Collapse map of the factorized graph onto the chain.
std::map<std::string, std::string> yg_collapse_map(int n);

// ---------------------------------------------------------------------------
// Schema graphs: finitely many node families indexed by the naturals

struct SchemaRef {
  std::string family;
  bool all_greater = false;  // reference every index > i
  int offset = 0;            // otherwise index i + offset
  bool positive = true;
};

struct SchemaGraph {
  std::vector<std::string> families;
  std::map<std::string, std::vector<SchemaRef>> templates;  // conjunctions

  static SchemaGraph make(std::vector<std::string> families,
                          std::map<std::string, std::vector<SchemaRef>> templates);
};

SchemaGraph schema_yablo();
SchemaGraph schema_procrastination();

// First `levels` indices of every family; out-of-horizon references stay
// as free frontier atoms.
DenotationSystem schema_truncate(const SchemaGraph& sg, int levels);

struct SchemaCheck {
  bool acceptable = true;
  std::string violated_family;
  std::string reason;
};

// Evaluates each family equation under one constant value per family.
SchemaCheck schema_check_uniform(const SchemaGraph& sg,
                                 const std::map<std::string, bool>& assignment);

struct TransAndNotResult {
  bool paradoxical = false;
  std::string culprit;                   // when paradoxical
  std::map<std::string, bool> valuation; // otherwise (per atom / per family)
};

// The successor criterion for transitive all-negative-conjunction
// structures; verdicts are verified against the definition before
// returning. Throws YabloError when the shape does not apply.
TransAndNotResult transandnot(const DenotationSystem& sys);
TransAndNotResult transandnot(const SchemaGraph& sg);

// ---------------------------------------------------------------------------
// Labelled and valued paths, cells, odd loops

struct LabelledPath {
  std::vector<std::string> nodes;
  std::vector<bool> neg_step;  // size = nodes.size() - 1
  bool operator==(const LabelledPath&) const = default;
};

// Maximal labelled paths from origin; +- edges split in two, positive
// branch first, successors in lexicographic order.
std::vector<LabelledPath> labelled_paths(const DenotationSystem& sys,
                                         const std::string& origin, int max_len = 64);

struct ValuedPath {
  LabelledPath path;
  bool seed_pos = true;
  std::vector<bool> pos;  // per node
};

ValuedPath value_path(const LabelledPath& p, bool seed_pos);

std::string path_to_string(const LabelledPath& p);
std::string valued_path_to_string(const ValuedPath& p);

struct CellPair {
  size_t i = 0, j = 0;
  std::string meet;          // first reconvergence node
  int neg_i = 0, neg_j = 0;  // negative arrows before the meet
  bool contradictory = false;  // signs disagree at the meet (either seed)
};

struct CellReport {
  bool is_cell = false;
  std::string violation;  // when not a cell
  bool contradictory = false;
  std::vector<CellPair> pairs;
};

CellReport cell_analyze(const std::vector<LabelledPath>& paths);

struct OddLoopResult {
  bool bipartite = false;
  std::map<std::string, int> side;        // 2-coloring when bipartite
  std::vector<std::string> odd_cycle;     // witness otherwise
};

OddLoopResult oddloop_check(const std::vector<std::string>& items,
                            const std::vector<std::pair<std::string, std::string>>& pairs);

}  // namespace ordlogic::yb
