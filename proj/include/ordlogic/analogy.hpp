#pragma once

#include "ordlogic/formula.hpp"
#include "ordlogic/rational.hpp"
#include "ordlogic/size_logic.hpp"

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

namespace ordlogic::ana {

struct AnalogyError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Objects plus unary and binary predicate names, disjoint across kinds.
struct Signature {
  std::vector<std::string> objects, unary, binary;

  static Signature make(std::vector<std::string> objects, std::vector<std::string> unary,
                        std::vector<std::string> binary);
  bool has_object(const std::string& o) const;
  bool has_unary(const std::string& p) const;
  bool has_binary(const std::string& r) const;

  // All ground atoms of the signature, rendered "P(x)" / "R(x,y)".
  std::vector<std::string> ground_atoms() const;
};

struct GroundAtom {
  bool binary = false;
  std::string pred, a, b;
  std::string text() const;
  auto operator<=>(const GroundAtom&) const = default;
};

// "P(x)" or "R(x,y)"
GroundAtom parse_atom(const std::string& text);

// Formulas over ground atoms: plain Formula with atom names in the
// rendered form; truth values come from a partial knowledge state.
using KnowledgeState = std::map<std::string, bool>;  // absent = unknown

// Kleene evaluation: nullopt when the truth value is not determined by
// the known atoms.
std::optional<bool> tri_eval(const Formula& f, const KnowledgeState& v);

// ---------------------------------------------------------------------------
// Analogy maps

struct AnalogyMap {
  std::string name;
  std::map<std::string, std::string> obj, un, bin;  // kind-preserving images
  // atom-level overrides created by combination
  std::map<GroundAtom, GroundAtom> overrides;
};

// Injectivity and kind preservation on the grounded universe.
void validate_map(const AnalogyMap& alpha, const Signature& sig);

GroundAtom transport_atom(const AnalogyMap& alpha, const GroundAtom& atom);
Formula transport(const AnalogyMap& alpha, const Formula& phi);

struct Supports {
  std::vector<Formula> plus, minus, question;  // alpha+, alpha-, alpha?
};

Supports supports(const AnalogyMap& alpha, const std::vector<Formula>& facts,
                  const KnowledgeState& v);

struct ConjectureResult {
  Formula target;  // alpha(phi)
  bool value;
};

// Extrapolates v(alpha(phi)) := v(phi); phi must be in alpha?.
ConjectureResult conjecture(const AnalogyMap& alpha, const Formula& phi,
                            const KnowledgeState& v);

// Piecewise combination: facts whose objects sit inside first_objects
// follow alpha, the rest follow beta. Symbol images shared by both maps
// stay symbol-level; conflicts become atom overrides, or errors when the
// split cannot separate them.
AnalogyMap combine(const AnalogyMap& alpha, const AnalogyMap& beta,
                   const std::set<std::string>& first_objects, const Signature& sig);

// ---------------------------------------------------------------------------
// Selection

struct AnalogySpace {
  std::vector<AnalogyMap> maps;
  std::vector<std::pair<std::string, std::string>> better;  // (better, worse)
};

enum class Answer { True, False, Undecided };

std::vector<std::string> best_maps(const AnalogySpace& space);

// Queries are target-side formulas; answered definitely iff every
// best map transports some known fact onto them with the same value.
std::map<std::string, Answer> sceptical_consequence(const AnalogySpace& space,
                                                    const KnowledgeState& v,
                                                    const std::vector<Formula>& queries);

struct SupportDegree {
  Rat p;
  bool degenerate = false;  // n = r = s = 0
};

// Default p = n / (n + r + s + 1): increasing in n, decreasing in r, s.
SupportDegree support_degree(long n, long r, long s);

// Delegates to the size-logic property checkers.
sz::MuCheck mu_property_report(int n, const std::function<sz::Mask(sz::Mask)>& mu);

}  // namespace ordlogic::ana
