#include "ordlogic/order_ops.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <sstream>

namespace ordlogic {

namespace {

void require_nonempty(const ElemSet& xs, const char* what) {
  if (xs.empty())
    throw PosetError(PosetErrorKind::EmptyOperand, std::string("empty operand for ") + what);
}

ElemSet filter_all(const Poset& p, const std::function<bool(int)>& pred) {
  ElemSet out;
  for (int a = 0; a < p.size(); ++a)
    if (pred(a)) out.push_back(a);
  return out;
}

}  // namespace

ElemSet op_meet(const Poset& p, const ElemSet& xs, const ElemSet& ys, OpVariant v) {
  require_nonempty(xs, "meet");
  require_nonempty(ys, "meet");
  ElemSet plain = filter_all(p, [&](int a) {
    for (int x : xs)
      if (p.leq(a, x))
        for (int y : ys)
          if (p.leq(a, y)) return true;
    return false;
  });
  return v == OpVariant::Plain ? plain : min_max(p, plain, true);
}

ElemSet op_join(const Poset& p, const ElemSet& xs, const ElemSet& ys, OpVariant v) {
  require_nonempty(xs, "join");
  require_nonempty(ys, "join");
  ElemSet plain = filter_all(p, [&](int a) {
    for (int x : xs)
      if (p.leq(x, a))
        for (int y : ys)
          if (p.leq(y, a)) return true;
    return false;
  });
  return v == OpVariant::Plain ? plain : min_max(p, plain, false);
}

ElemSet op_neg(const Poset& p, const ElemSet& xs, OpVariant v) {
  require_nonempty(xs, "neg");
  ElemSet plain = filter_all(p, [&](int a) {
    for (int x : xs)
      if (!p.disjoint(a, x)) return false;
    return true;
  });
  return v == OpVariant::Plain ? plain : min_max(p, plain, true);
}

ElemSet op_minus(const Poset& p, int x, int y, OpVariant v) {
  ElemSet plain =
      filter_all(p, [&](int a) { return p.leq(a, x) && p.disjoint(a, y); });
  return v == OpVariant::Plain ? plain : min_max(p, plain, true);
}

ElemSet alt_op(const Poset& p, const ElemSet& xs, const ElemSet* ys, AltOp which) {
  require_nonempty(xs, "alt_op");
  if (which != AltOp::Neg1) {
    if (!ys) throw PosetError(PosetErrorKind::EmptyOperand, "alt_op needs two operands");
    require_nonempty(*ys, "alt_op");
  }
  switch (which) {
    case AltOp::Meet1: {
      ElemSet acc = full_set(p);
      for (int x : xs)
        for (int y : *ys) {
          ElemSet pair = op_meet(p, {x}, {y}, OpVariant::Plain);
          acc = set_intersect(acc, pair);
        }
      return acc;
    }
    case AltOp::Join1: {
      ElemSet acc = full_set(p);
      for (int x : xs)
        for (int y : *ys) {
          ElemSet pair = op_join(p, {x}, {y}, OpVariant::Plain);
          acc = set_intersect(acc, pair);
        }
      return acc;
    }
    case AltOp::Meet2: {
      ElemSet u = set_union(xs, *ys);
      return filter_all(p, [&](int a) {
        for (int z : u)
          if (!p.leq(a, z)) return false;
        return true;
      });
    }
    case AltOp::Join2: {
      ElemSet u = set_union(xs, *ys);
      return filter_all(p, [&](int a) {
        for (int z : u)
          if (!p.leq(z, a)) return false;
        return true;
      });
    }
    case AltOp::Neg1:
      return filter_all(p, [&](int a) {
        for (int x : xs)
          if (p.disjoint(a, x)) return true;
        return false;
      });
  }
  return {};
}

namespace {

// Quantifier tables from the sign calculus; Plain behaves existentially
// for both order comparisons and universally for disjointness.
bool cmp_le(const Poset& p, int b, const SignedSet& s) {
  bool forall = (s.tag == SignTag::Inf);
  for (int y : s.base) {
    bool r = p.leq(b, y);
    if (forall && !r) return false;
    if (!forall && r) return true;
  }
  return forall;
}

bool cmp_ge(const Poset& p, int b, const SignedSet& s) {
  bool forall = (s.tag == SignTag::Sup);
  for (int y : s.base) {
    bool r = p.leq(y, b);
    if (forall && !r) return false;
    if (!forall && r) return true;
  }
  return forall;
}

bool cmp_disjoint(const Poset& p, int b, const SignedSet& s) {
  bool exists = (s.tag == SignTag::Inf);
  for (int y : s.base) {
    bool r = p.disjoint(b, y);
    if (exists && r) return true;
    if (!exists && !r) return false;
  }
  return !exists;
}

}  // namespace

SignedResult signed_apply(const Poset& p, SignedOp op, const SignedSet& a, const SignedSet* b) {
  require_nonempty(a.base, "signed_apply");
  if (op != SignedOp::Neg) {
    if (!b) throw PosetError(PosetErrorKind::EmptyOperand, "binary signed op needs two operands");
    require_nonempty(b->base, "signed_apply");
  }
  SignedResult res;
  res.renormalized_nested_sign =
      a.tag != SignTag::Plain || (b && b->tag != SignTag::Plain);
  switch (op) {
    case SignedOp::Meet:
      res.set.base = filter_all(
          p, [&](int z) { return cmp_le(p, z, a) && cmp_le(p, z, *b); });
      res.set.tag = SignTag::Sup;
      break;
    case SignedOp::Join:
      res.set.base = filter_all(
          p, [&](int z) { return cmp_ge(p, z, a) && cmp_ge(p, z, *b); });
      res.set.tag = SignTag::Inf;
      break;
    case SignedOp::Neg:
      res.set.base = filter_all(p, [&](int z) { return cmp_disjoint(p, z, a); });
      res.set.tag = SignTag::Sup;
      break;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Law audit

namespace {

std::string show(const Poset& p, const ElemSet& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += p.name(xs[i]);
  }
  return out + "}";
}

using SetOp2 = std::function<ElemSet(const ElemSet&, const ElemSet&)>;

// Small-set instances for the set-level laws: all singletons plus all
// subsets when the poset is small enough to enumerate them.
std::vector<ElemSet> audit_sets(const Poset& p) {
  std::vector<ElemSet> out;
  int n = p.size();
  if (n <= 5) {
    for (unsigned mask = 1; mask < (1u << n); ++mask) {
      ElemSet s;
      for (int i = 0; i < n; ++i)
        if (mask & (1u << i)) s.push_back(i);
      out.push_back(s);
    }
  } else {
    for (int i = 0; i < n; ++i) out.push_back({i});
  }
  return out;
}

}  // namespace

const LawEntry* LawReport::find(const std::string& law, const std::string& variant) const {
  for (const auto& e : entries)
    if (e.law == law && e.variant == variant) return &e;
  return nullptr;
}

LawReport law_audit(const Poset& p) {
  if (!p.bounded())
    throw PosetError(PosetErrorKind::UnboundedPoset, "law audit needs a bounded poset");
  LawReport rep;
  int n = p.size();
  int bot = *p.bottom(), top = *p.top();

  auto add = [&](const std::string& law, const std::string& variant, bool holds,
                 std::string witness) {
    rep.entries.push_back({law, variant, holds, std::move(witness)});
  };

  for (OpVariant v : {OpVariant::Plain, OpVariant::Primed}) {
    std::string vn = v == OpVariant::Plain ? "plain" : "primed";

    // commutativity
    {
      bool ok = true;
      std::string w;
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y) {
          if (op_meet(p, {x}, {y}, v) != op_meet(p, {y}, {x}, v)) {
            ok = false;
            w = "(" + p.name(x) + "," + p.name(y) + ")";
          }
        }
      add("commut_meet", vn, ok, w);
      ok = true;
      w.clear();
      for (int x = 0; x < n && ok; ++x)
        for (int y = 0; y < n && ok; ++y)
          if (op_join(p, {x}, {y}, v) != op_join(p, {y}, {x}, v)) {
            ok = false;
            w = "(" + p.name(x) + "," + p.name(y) + ")";
          }
      add("commut_join", vn, ok, w);
    }

    // associativity, element instances lifted through the set operators
    {
      bool okm = true, okj = true;
      std::string wm, wj;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            if (okm) {
              ElemSet l = op_meet(p, op_meet(p, {x}, {y}, v), {z}, v);
              ElemSet r = op_meet(p, {x}, op_meet(p, {y}, {z}, v), v);
              if (l != r) {
                okm = false;
                wm = "(" + p.name(x) + "," + p.name(y) + "," + p.name(z) + ")";
              }
            }
            if (okj) {
              ElemSet l = op_join(p, op_join(p, {x}, {y}, v), {z}, v);
              ElemSet r = op_join(p, {x}, op_join(p, {y}, {z}, v), v);
              if (l != r) {
                okj = false;
                wj = "(" + p.name(x) + "," + p.name(y) + "," + p.name(z) + ")";
              }
            }
          }
      add("assoc_meet", vn, okm, wm);
      add("assoc_join", vn, okj, wj);
    }

    // distributivity, both directions
    {
      bool ok1 = true, ok2 = true;
      std::string w1, w2;
      for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
          for (int z = 0; z < n; ++z) {
            if (ok1) {
              ElemSet l = op_meet(p, {x}, op_join(p, {y}, {z}, v), v);
              ElemSet r = op_join(p, op_meet(p, {x}, {y}, v), op_meet(p, {x}, {z}, v), v);
              if (l != r) {
                ok1 = false;
                w1 = "(" + p.name(x) + "," + p.name(y) + "," + p.name(z) + "): lhs=" +
                     show(p, l) + " rhs=" + show(p, r);
              }
            }
            if (ok2) {
              ElemSet l = op_join(p, {x}, op_meet(p, {y}, {z}, v), v);
              ElemSet r = op_meet(p, op_join(p, {x}, {y}, v), op_join(p, {x}, {z}, v), v);
              if (l != r) {
                ok2 = false;
                w2 = "(" + p.name(x) + "," + p.name(y) + "," + p.name(z) + "): lhs=" +
                     show(p, l) + " rhs=" + show(p, r);
              }
            }
          }
      add("distrib_meet_over_join", vn, ok1, w1);
      add("distrib_join_over_meet", vn, ok2, w2);
    }

    // constant laws for negation
    add("neg_top", vn, op_neg(p, {top}, v) == ElemSet{bot}, "");
    add("neg_bottom", vn, op_neg(p, {bot}, v) == ElemSet{top},
        show(p, op_neg(p, {bot}, v)));
    {
      bool ok = true;
      std::string w;
      for (int x = 0; x < n && ok; ++x) {
        ElemSet r = op_neg(p, op_neg(p, {x}, v), v);
        if (r != ElemSet{x}) {
          ok = false;
          w = p.name(x) + " -> " + show(p, r);
        }
      }
      add("double_neg_elem", vn, ok, w);
    }
    {
      bool ok = true;
      std::string w;
      for (int x = 0; x < n && ok; ++x) {
        ElemSet r = op_join(p, {x}, op_neg(p, {x}, v), v);
        if (r != ElemSet{top}) {
          ok = false;
          w = p.name(x) + " -> " + show(p, r);
        }
      }
      add("join_neg_top", vn, ok, w);
    }
  }

  // plain-only laws
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x) {
      ElemSet r = op_meet(p, {x}, op_neg(p, {x}, OpVariant::Plain), OpVariant::Plain);
      if (r != ElemSet{bot}) {
        ok = false;
        w = p.name(x) + " -> " + show(p, r);
      }
    }
    add("meet_neg_bottom", "plain", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& xs : audit_sets(p)) {
      ElemSet r = op_meet(p, xs, op_neg(p, xs, OpVariant::Plain), OpVariant::Plain);
      if (r != ElemSet{bot}) {
        ok = false;
        w = show(p, xs) + " -> " + show(p, r);
        break;
      }
    }
    add("set_meet_neg_bottom", "plain", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (int x = 0; x < n && ok; ++x)
      for (int y = 0; y < n && ok; ++y) {
        ElemSet l = op_minus(p, x, y, OpVariant::Plain);
        ElemSet r = op_meet(p, {x}, op_neg(p, {y}, OpVariant::Plain), OpVariant::Plain);
        if (l != r) {
          ok = false;
          w = "(" + p.name(x) + "," + p.name(y) + ")";
        }
      }
    add("minus_is_meet_neg", "plain", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    auto sets = audit_sets(p);
    for (const auto& xs : sets) {
      for (const auto& xs2 : sets) {
        if (!subset_of(xs, xs2)) continue;
        ElemSet nx2 = op_neg(p, xs2, OpVariant::Plain);
        ElemSet nx = op_neg(p, xs, OpVariant::Plain);
        if (!subset_of(nx2, nx)) {
          ok = false;
          w = show(p, xs) + " subseteq " + show(p, xs2);
          break;
        }
      }
      if (!ok) break;
    }
    add("neg_antitone", "plain", ok, w);
  }
  {
    bool ok = true;
    std::string w;
    for (const auto& xs : audit_sets(p)) {
      ElemSet r = op_neg(p, op_neg(p, xs, OpVariant::Plain), OpVariant::Plain);
      if (!subset_of(xs, r)) {
        ok = false;
        w = show(p, xs);
        break;
      }
    }
    add("double_neg_expand", "plain", ok, w);
  }
  for (OpVariant v : {OpVariant::Plain, OpVariant::Primed}) {
    std::string vn = v == OpVariant::Plain ? "plain" : "primed";
    bool ok = true;
    std::string w;
    for (const auto& xs : audit_sets(p)) {
      ElemSet r = op_neg(p, op_neg(p, xs, v), v);
      if (!subset_of(r, xs)) {
        ok = false;
        w = show(p, xs) + " -> " + show(p, r);
        break;
      }
    }
    rep.entries.push_back({"double_neg_reduce", vn, ok, w});
  }
  return rep;
}

bool laws_boolean_ok(const LawReport& r) {
  // the variant in which the calculus states each law positively
  const std::vector<std::pair<std::string, std::string>> expected = {
      {"commut_meet", "plain"},        {"commut_meet", "primed"},
      {"commut_join", "plain"},        {"commut_join", "primed"},
      {"assoc_meet", "plain"},         {"assoc_meet", "primed"},
      {"assoc_join", "plain"},         {"assoc_join", "primed"},
      {"distrib_meet_over_join", "primed"}, {"distrib_join_over_meet", "primed"},
      {"neg_top", "primed"},           {"neg_bottom", "primed"},
      {"double_neg_elem", "primed"},   {"join_neg_top", "primed"},
      {"meet_neg_bottom", "plain"},    {"set_meet_neg_bottom", "plain"},
      {"minus_is_meet_neg", "plain"},  {"neg_antitone", "plain"},
      {"double_neg_expand", "plain"},  {"double_neg_reduce", "primed"},
  };
  for (const auto& [law, variant] : expected) {
    const LawEntry* e = r.find(law, variant);
    if (!e || !e->holds) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Expression grammar

namespace {

struct ExprVal {
  SignedSet set;
  bool join_rooted = false;
  bool nested_flag = false;
};

struct ExprParser {
  const Poset& p;
  const std::string& s;
  size_t pos = 0;

  ExprParser(const Poset& poset, const std::string& text) : p(poset), s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) {
    throw std::runtime_error("expr error at " + std::to_string(pos) + ": " + msg);
  }

  bool is_name_char(char c) {
    return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
  }

  std::string read_name() {
    skip_ws();
    size_t start = pos;
    while (pos < s.size() && is_name_char(s[pos])) ++pos;
    if (start == pos) fail("expected name");
    return s.substr(start, pos - start);
  }

  ExprVal apply(char op, ExprVal a, ExprVal b) {
    ExprVal out;
    bool tagged = a.set.tag != SignTag::Plain || b.set.tag != SignTag::Plain;
    out.nested_flag = a.nested_flag || b.nested_flag || tagged;
    if (op == '-') {
      // X - Y is shorthand for X ^ !Y
      ExprVal negb;
      if (b.set.tag != SignTag::Plain) {
        auto r = signed_apply(p, SignedOp::Neg, b.set);
        negb.set = r.set;
      } else {
        negb.set = {op_neg(p, b.set.base, OpVariant::Plain), SignTag::Plain};
      }
      return apply('^', std::move(a), std::move(negb));
    }
    if (tagged) {
      auto r = signed_apply(p, op == '^' ? SignedOp::Meet : SignedOp::Join, a.set, &b.set);
      out.set = r.set;
    } else {
      out.set.base = op == '^' ? op_meet(p, a.set.base, b.set.base, OpVariant::Plain)
                               : op_join(p, a.set.base, b.set.base, OpVariant::Plain);
      out.set.tag = SignTag::Plain;
    }
    out.join_rooted = (op == 'v');
    return out;
  }

  ExprVal parse_expr() {
    ExprVal acc = parse_meet();
    while (true) {
      skip_ws();
      if (pos < s.size() && s[pos] == 'v' &&
          (pos + 1 >= s.size() || !is_name_char(s[pos + 1]))) {
        ++pos;
        acc = apply('v', std::move(acc), parse_meet());
      } else {
        return acc;
      }
    }
  }

  ExprVal parse_meet() {
    ExprVal acc = parse_unary();
    while (true) {
      char c = peek();
      if (c == '^' || c == '-') {
        ++pos;
        acc = apply(c, std::move(acc), parse_unary());
      } else {
        return acc;
      }
    }
  }

  ExprVal parse_unary() {
    if (peek() == '!') {
      ++pos;
      ExprVal a = parse_unary();
      ExprVal out;
      if (a.set.tag != SignTag::Plain) {
        auto r = signed_apply(p, SignedOp::Neg, a.set);
        out.set = r.set;
        out.nested_flag = true;
      } else {
        out.set = {op_neg(p, a.set.base, OpVariant::Plain), SignTag::Plain};
        out.nested_flag = a.nested_flag;
      }
      return out;
    }
    return parse_postfix();
  }

  ExprVal parse_postfix() {
    ExprVal a = parse_primary();
    while (peek() == '\'') {
      ++pos;
      a.set.base = min_max(p, a.set.base, !a.join_rooted);
    }
    return a;
  }

  ExprVal parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      ExprVal a = parse_expr();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return a;
    }
    if (c == '{') {
      ++pos;
      ExprVal out;
      while (true) {
        out.set.base = set_union(out.set.base, {p.index_of(read_name())});
        char d = peek();
        if (d == ',') {
          ++pos;
          continue;
        }
        if (d == '}') {
          ++pos;
          return out;
        }
        fail("expected ',' or '}'");
      }
    }
    std::string name = read_name();
    if (name == "sup" || name == "inf") {
      if (peek() != '(') fail("expected '(' after " + name);
      ++pos;
      ExprVal out;
      // names (singleton union) or a full expression to re-tag
      size_t save = pos;
      bool simple = true;
      ElemSet acc;
      try {
        while (true) {
          acc = set_union(acc, {p.index_of(read_name())});
          char d = peek();
          if (d == ',') {
            ++pos;
            continue;
          }
          if (d == ')') {
            ++pos;
            break;
          }
          simple = false;
          break;
        }
      } catch (const std::exception&) {
        simple = false;
      }
      if (simple) {
        out.set.base = acc;
      } else {
        pos = save;
        ExprVal a = parse_expr();
        if (peek() != ')') fail("expected ')'");
        ++pos;
        out = a;
      }
      out.set.tag = name == "sup" ? SignTag::Sup : SignTag::Inf;
      return out;
    }
    ExprVal out;
    out.set.base = {p.index_of(name)};
    return out;
  }
};

}  // namespace

SignedResult eval_poset_expr(const Poset& p, const std::string& expr) {
  ExprParser parser(p, expr);
  ExprVal v = parser.parse_expr();
  parser.skip_ws();
  if (parser.pos != expr.size()) parser.fail("trailing input");
  return {v.set, v.nested_flag};
}

std::string signed_to_string(const Poset& p, const SignedSet& s) {
  std::string body = "{";
  for (size_t i = 0; i < s.base.size(); ++i) {
    if (i) body += ",";
    body += p.name(s.base[i]);
  }
  body += "}";
  switch (s.tag) {
    case SignTag::Sup:
      return "sup" + body;
    case SignTag::Inf:
      return "inf" + body;
    default:
      return body;
  }
}

}  // namespace ordlogic
