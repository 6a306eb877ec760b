#pragma once

#include "ordlogic/poset.hpp"

#include <optional>
#include <string>
#include <vector>

namespace ordlogic {

enum class OpVariant { Plain, Primed };

// Generalized Boolean operators on incomplete posets. Elements are
// modeled as singleton sets throughout; the primed variants take
// max/min of the plain results.
ElemSet op_meet(const Poset& p, const ElemSet& xs, const ElemSet& ys, OpVariant v);
ElemSet op_join(const Poset& p, const ElemSet& xs, const ElemSet& ys, OpVariant v);
ElemSet op_neg(const Poset& p, const ElemSet& xs, OpVariant v);
ElemSet op_minus(const Poset& p, int x, int y, OpVariant v);

enum class AltOp { Meet1, Meet2, Join1, Join2, Neg1 };

// The rejected alternative set operators; kept for the audit
// of why they misbehave. Neg1 is unary (ys ignored).
ElemSet alt_op(const Poset& p, const ElemSet& xs, const ElemSet* ys, AltOp which);

// ---------------------------------------------------------------------------
// Signed sets: a set may carry a tag recording whether sup or inf of it
// is "really meant". Tags drive the quantifiers of further comparisons:
//   z <= sup(Y) iff exists y. z <= y        z <= inf(Y) iff forall y
//   z >= sup(Y) iff forall y. z >= y        z >= inf(Y) iff exists y
//   z  #  sup(Y) iff forall y. z # y        z  #  inf(Y) iff exists y   (# = disjoint)
// Plain operands use exists for <= and >=, forall for #.

enum class SignTag { Plain, Sup, Inf };

struct SignedSet {
  ElemSet base;
  SignTag tag = SignTag::Plain;
};

enum class SignedOp { Meet, Join, Neg };

struct SignedResult {
  SignedSet set;
  // Multi-level signs are not defined by the calculus; when an operand
  // already carried a tag the result was re-tagged from scratch and
  // this flag is set.
  bool renormalized_nested_sign = false;
};

SignedResult signed_apply(const Poset& p, SignedOp op, const SignedSet& a,
                          const SignedSet* b = nullptr);

// ---------------------------------------------------------------------------
// Law audit

struct LawEntry {
  std::string law;      // e.g. "assoc_meet"
  std::string variant;  // "plain" / "primed" / "-"
  bool holds = true;
  std::string witness;  // empty when the law holds
};

struct LawReport {
  std::vector<LawEntry> entries;
  const LawEntry* find(const std::string& law, const std::string& variant) const;
};

// Exhaustively audits the operator laws over all elements (and small
// set instances) of a bounded poset. Every failure carries a witness.
LawReport law_audit(const Poset& p);

// The laws a Boolean algebra is expected to satisfy, evaluated in the
// variants under which the calculus states them positively (primed for
// the negation laws, plain where the plain claim holds generally).
bool laws_boolean_ok(const LawReport& r);

// ---------------------------------------------------------------------------
// Tiny expression grammar for the CLI:
//   ^ meet, v join, ! neg, - minus, postfix ' primed,
//   sup(...) / inf(...) tags, {a,b} set literals, bare names singletons.
SignedResult eval_poset_expr(const Poset& p, const std::string& expr);

std::string signed_to_string(const Poset& p, const SignedSet& s);

}  // namespace ordlogic
