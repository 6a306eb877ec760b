#pragma once

#include "ordlogic/formula.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ordlogic::rv {

struct RelevanceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FormulaClass { Tautology, Contradiction, Contingent };

struct FormulaProfile {
  std::vector<std::string> syntactic;  // s(f)
  std::vector<std::string> essential;  // r(f), subseteq s(f)
  FormulaClass cls = FormulaClass::Contingent;
};

// An atom is essential iff flipping it changes truth under some
// assignment of the others; brute force over 2^|s(f)|, capped at 24.
FormulaProfile essential_vars(const Formula& f);

// ---------------------------------------------------------------------------
// Model sets over arbitrary finite products

struct ModelSet {
  std::vector<std::string> index_names;
  std::vector<std::vector<std::string>> domains;  // one per index
  std::set<std::vector<int>> tuples;              // value indices per coordinate
};

// Essential coordinates: index i such that some sigma in X leaves X when
// coordinate i is changed. The inessential index sets are closed under
// union, so the complement of the essential set is the unique maximal one.
std::vector<int> essential_indices(const ModelSet& x);

struct SplicingResult {
  std::vector<std::string> essential_m, essential_n;
  bool confirmed = false;                   // essential sets intersect
  std::vector<int> witness;                 // only if the fact ever failed
};

// For nonempty proper M subseteq N the maximal inessential sets of M and
// N can never cover all indices together.
SplicingResult splicing_check(const ModelSet& m, const ModelSet& n);

ModelSet model_set_of(const Formula& f);

// ---------------------------------------------------------------------------
// Relevant implication

enum class ImplClass { RelevantValid, DegenerateValid, Invalid };

struct ImplicationVerdict {
  ImplClass cls = ImplClass::Invalid;
  std::vector<std::string> shared_essential;   // RelevantValid only
  std::map<std::string, bool> countermodel;    // Invalid only
  std::string degenerate_reason;               // DegenerateValid only
};

// Valid and relevant unless the antecedent is equivalent to BOT or the
// consequent to TOP; "equivalent" is decided by truth table.
ImplicationVerdict classify_implication(const Formula& phi, const Formula& psi);

// Cumulative transitivity, checked semantically:
// (A |= phi for all phi in B, and A u B |= theta) implies A |= theta.
bool ct_check(const std::vector<Formula>& a, const std::vector<Formula>& b,
              const Formula& theta);

// ---------------------------------------------------------------------------
// Disjunctive normal form

bool is_dnf(const Formula& f);

// NNF plus distribution; preserves literal structure (dnf(p) = p).
Formula to_dnf(const Formula& f);

// Negation of a DNF via choice functions: one literal from each clause,
// negated, per disjunct.
Formula negate_dnf(const Formula& f);

}  // namespace ordlogic::rv
