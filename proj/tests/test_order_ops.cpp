#include "ordlogic/order_ops.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace ordlogic;
using testutil::diamond;

namespace {

std::vector<std::string> names(const Poset& p, const ElemSet& xs) {
  return set_names(p, xs);
}

Poset versions1() { return diamond(); }  // {bot,a,b,top} with a # b

}  // namespace

TEST_CASE("Fact Versions-1: plain vs primed") {
  Poset p = versions1();
  auto S = [&](std::vector<std::string> n) { return make_set(p, n); };
  CHECK(names(p, op_meet(p, S({"top"}), S({"a"}), OpVariant::Plain)) ==
        std::vector<std::string>{"a", "bot"});
  CHECK(names(p, op_meet(p, S({"top"}), S({"a"}), OpVariant::Primed)) ==
        std::vector<std::string>{"a"});
  CHECK(names(p, op_join(p, S({"bot"}), S({"a"}), OpVariant::Plain)) ==
        std::vector<std::string>{"a", "top"});
  CHECK(names(p, op_join(p, S({"bot"}), S({"a"}), OpVariant::Primed)) ==
        std::vector<std::string>{"a"});
  CHECK(names(p, op_neg(p, S({"a"}), OpVariant::Plain)) ==
        std::vector<std::string>{"b", "bot"});
  CHECK(names(p, op_neg(p, S({"a"}), OpVariant::Primed)) == std::vector<std::string>{"b"});
  // set arguments
  CHECK(names(p, op_meet(p, S({"top"}), S({"a", "b"}), OpVariant::Primed)) ==
        std::vector<std::string>{"a", "b"});
  CHECK(names(p, op_join(p, S({"bot"}), S({"a", "b"}), OpVariant::Primed)) ==
        std::vector<std::string>{"a", "b"});
}

TEST_CASE("meet of an element with itself is its down-set") {
  Poset p = Poset::build({"bot", "a", "b", "top"}, {{"a", "b"}}, "bot", "top");
  auto x = make_set(p, {"b"});
  CHECK(names(p, op_meet(p, x, x, OpVariant::Plain)) ==
        std::vector<std::string>{"a", "b", "bot"});
}

TEST_CASE("antichain meets and joins collapse to the bounds") {
  Poset p = testutil::antichain5();
  CHECK(names(p, op_meet(p, make_set(p, {"x"}), make_set(p, {"y"}), OpVariant::Plain)) ==
        std::vector<std::string>{"bot"});
  CHECK(names(p, op_join(p, make_set(p, {"y"}), make_set(p, {"z"}), OpVariant::Plain)) ==
        std::vector<std::string>{"top"});
  CHECK(names(p, op_join(p, make_set(p, {"top"}), make_set(p, {"top"}), OpVariant::Primed)) ==
        std::vector<std::string>{"top"});
}

TEST_CASE("neg on Fact Rules(4.3) poset") {
  Poset p = Poset::build({"bot", "xp", "x", "y", "top"}, {{"x", "xp"}}, "bot", "top");
  auto x = make_set(p, {"x"});
  CHECK(names(p, op_neg(p, x, OpVariant::Plain)) == std::vector<std::string>{"bot", "y"});
  CHECK(names(p, op_neg(p, op_neg(p, x, OpVariant::Primed), OpVariant::Primed)) ==
        std::vector<std::string>{"xp"});
  CHECK(names(p, op_neg(p, make_set(p, {"bot"}), OpVariant::Primed)) ==
        std::vector<std::string>{"top"});
}

TEST_CASE("minus: direct definition and via meet-neg") {
  Poset p = versions1();
  int a = p.index_of("a"), top = p.index_of("top");
  CHECK(names(p, op_minus(p, a, a, OpVariant::Plain)) == std::vector<std::string>{"bot"});
  // frozen from brute force over the definition: {z : z <= top and z # a}
  CHECK(names(p, op_minus(p, top, a, OpVariant::Primed)) == std::vector<std::string>{"b"});
  CHECK(names(p, op_minus(p, p.index_of("bot"), a, OpVariant::Plain)) ==
        std::vector<std::string>{"bot"});
}

TEST_CASE("minus coincides with meet-neg everywhere (Fact Rules 4.4)") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 100; ++t) {
    Poset p = testutil::random_bounded_poset(rng, 5, 0.4);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y)
        CHECK(op_minus(p, x, y, OpVariant::Plain) ==
              op_meet(p, {x}, op_neg(p, {y}, OpVariant::Plain), OpVariant::Plain));
  }
}

TEST_CASE("alternative operators misbehave as published") {
  Poset p = versions1();
  ElemSet X = make_set(p, {"a", "b"});
  ElemSet top = make_set(p, {"top"}), bot = make_set(p, {"bot"});
  CHECK(names(p, alt_op(p, top, &X, AltOp::Meet1)) == std::vector<std::string>{"bot"});
  CHECK(names(p, alt_op(p, top, &X, AltOp::Meet2)) == std::vector<std::string>{"bot"});
  CHECK(names(p, alt_op(p, bot, &X, AltOp::Join1)) == std::vector<std::string>{"top"});
  CHECK(names(p, alt_op(p, bot, &X, AltOp::Join2)) == std::vector<std::string>{"top"});

  Poset q = Poset::build({"bot", "a", "b", "c", "d", "top"}, {{"d", "b"}, {"d", "c"}},
                         "bot", "top");
  ElemSet nb = alt_op(q, make_set(q, {"b"}), nullptr, AltOp::Neg1);
  CHECK(names(q, nb) == std::vector<std::string>{"a", "bot"});
  CHECK(alt_op(q, nb, nullptr, AltOp::Neg1) == full_set(q));
}

TEST_CASE("neg1 is not antitone (Fact Alternative 3.5 witness)") {
  Poset p = testutil::two_chain();
  ElemSet x = make_set(p, {"top"});
  ElemSet x2 = full_set(p);
  ElemSet n1 = alt_op(p, x, nullptr, AltOp::Neg1);
  ElemSet n2 = alt_op(p, x2, nullptr, AltOp::Neg1);
  CHECK(subset_of(x, x2));
  CHECK(!subset_of(n2, n1));  // antitonicity would need this containment
}

TEST_CASE("empty operands are rejected") {
  Poset p = versions1();
  CHECK_THROWS_AS(op_meet(p, {}, make_set(p, {"a"}), OpVariant::Plain), PosetError);
  CHECK_THROWS_AS(op_neg(p, {}, OpVariant::Plain), PosetError);
  CHECK_THROWS_AS(alt_op(p, {}, nullptr, AltOp::Neg1), PosetError);
}

TEST_CASE("signed application: quantifier table examples") {
  // Example SupInf carrier; e is bottom, f is top
  Poset p = Poset::build({"e", "c", "d", "x", "xp", "ep", "y", "a", "b", "fp", "f"},
                         {{"c", "x"},
                          {"d", "xp"},
                          {"x", "a"},
                          {"xp", "b"},
                          {"c", "xp"},
                          {"xp", "a"},
                          {"d", "x"},
                          {"x", "b"},
                          {"ep", "xp"},
                          {"ep", "y"},
                          {"y", "fp"},
                          {"xp", "fp"}},
                         "e", "f");
  SignedSet sup_xx{make_set(p, {"x", "xp"}), SignTag::Sup};
  SignedSet inf_xx{make_set(p, {"x", "xp"}), SignTag::Inf};
  SignedSet y{make_set(p, {"y"}), SignTag::Plain};

  auto meet_sup = signed_apply(p, SignedOp::Meet, y, &sup_xx);
  CHECK(set_names(p, meet_sup.set.base) == std::vector<std::string>{"e", "ep"});
  CHECK(meet_sup.set.tag == SignTag::Sup);
  auto meet_inf = signed_apply(p, SignedOp::Meet, y, &inf_xx);
  CHECK(set_names(p, meet_inf.set.base) == std::vector<std::string>{"e"});
  auto join_sup = signed_apply(p, SignedOp::Join, y, &sup_xx);
  CHECK(set_names(p, join_sup.set.base) == std::vector<std::string>{"f"});
  CHECK(join_sup.set.tag == SignTag::Inf);
  auto join_inf = signed_apply(p, SignedOp::Join, y, &inf_xx);
  CHECK(set_names(p, join_inf.set.base) == std::vector<std::string>{"f", "fp"});
  auto neg_sup = signed_apply(p, SignedOp::Neg, sup_xx);
  CHECK(set_names(p, neg_sup.set.base) == std::vector<std::string>{"e"});
  // the exists-rule also admits y, whose only common lower bound with x
  // is the bottom
  auto neg_inf = signed_apply(p, SignedOp::Neg, inf_xx);
  CHECK(set_names(p, neg_inf.set.base) == std::vector<std::string>{"e", "ep", "y"});
  CHECK(neg_inf.renormalized_nested_sign);
}

TEST_CASE("signed join with negation: success and failure cases") {
  Poset p = Poset::build({"bot", "a", "b", "c", "ab", "top"}, {{"a", "ab"}, {"b", "ab"}},
                         "bot", "top");
  auto a = make_set(p, {"a"});
  SignedSet na{op_neg(p, a, OpVariant::Plain), SignTag::Sup};
  auto r = signed_apply(p, SignedOp::Join, {a, SignTag::Plain}, &na);
  CHECK(set_names(p, r.set.base) == std::vector<std::string>{"top"});
  CHECK(r.set.tag == SignTag::Inf);

  Poset q = Poset::build({"bot", "y", "x", "b", "top"}, {{"y", "b"}, {"x", "b"}}, "bot",
                         "top");
  auto x = make_set(q, {"x"});
  SignedSet nx{op_neg(q, x, OpVariant::Plain), SignTag::Sup};
  auto r2 = signed_apply(q, SignedOp::Join, {x, SignTag::Plain}, &nx);
  CHECK(set_names(q, r2.set.base) == std::vector<std::string>{"b", "top"});
}

TEST_CASE("monotonicity suite (Fact Set-Smaller)") {
  std::mt19937_64 rng(23);
  for (int t = 0; t < 120; ++t) {
    Poset p = testutil::random_bounded_poset(rng, 6, 0.35);
    ElemSet x = testutil::random_subset(rng, p, true);
    ElemSet x2 = set_union(x, testutil::random_subset(rng, p, true));
    ElemSet y = testutil::random_subset(rng, p, true);
    CHECK(set_leq(p, op_meet(p, x, y, OpVariant::Plain), op_meet(p, x2, y, OpVariant::Plain)));
    CHECK(subset_of(op_neg(p, x2, OpVariant::Plain), op_neg(p, x, OpVariant::Plain)));
    for (int a = 0; a < p.size(); ++a)
      for (int b = 0; b < p.size(); ++b)
        if (p.leq(a, b))
          CHECK(set_leq(p, op_neg(p, {b}, OpVariant::Plain), op_neg(p, {a}, OpVariant::Plain)));
  }
}

TEST_CASE("X meet neg X collapses to bottom") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 120; ++t) {
    Poset p = testutil::random_bounded_poset(rng, 6, 0.35);
    ElemSet x = testutil::random_subset(rng, p, true);
    ElemSet r = op_meet(p, x, op_neg(p, x, OpVariant::Plain), OpVariant::Plain);
    CHECK(r == ElemSet{*p.bottom()});
  }
}

TEST_CASE("law audit: antichain distributivity counterexample") {
  LawReport rep = law_audit(testutil::antichain5());
  const LawEntry* plain = rep.find("distrib_meet_over_join", "plain");
  const LawEntry* primed = rep.find("distrib_meet_over_join", "primed");
  REQUIRE(plain != nullptr);
  REQUIRE(primed != nullptr);
  CHECK(!plain->holds);
  CHECK(!primed->holds);
  CHECK(rep.find("assoc_meet", "plain")->holds);
  CHECK(rep.find("assoc_join", "primed")->holds);
}

TEST_CASE("law audit: diamond double negation, 2-chain boolean") {
  LawReport d = law_audit(testutil::diamond());
  CHECK(d.find("double_neg_elem", "primed")->holds);
  LawReport c = law_audit(testutil::two_chain());
  CHECK(laws_boolean_ok(c));
}

TEST_CASE("associativity holds exhaustively on small bounded posets") {
  std::mt19937_64 rng(31);
  for (int t = 0; t < 40; ++t) {
    Poset p = testutil::random_bounded_poset(rng, 4, 0.45);
    LawReport rep = law_audit(p);
    for (const char* law : {"assoc_meet", "assoc_join"})
      for (const char* variant : {"plain", "primed"}) {
        const LawEntry* e = rep.find(law, variant);
        REQUIRE(e != nullptr);
        CHECK_MESSAGE(e->holds, law, " ", variant, " witness ", e->witness);
      }
  }
}

TEST_CASE("expression grammar evaluates operators and tags") {
  Poset p = versions1();
  CHECK(signed_to_string(p, eval_poset_expr(p, "(top ^ a)'").set) == "{a}");
  CHECK(signed_to_string(p, eval_poset_expr(p, "!a").set) == "{b,bot}");
  CHECK(signed_to_string(p, eval_poset_expr(p, "(!a)'").set) == "{b}");
  CHECK(signed_to_string(p, eval_poset_expr(p, "top - a").set) == "{b,bot}");
  CHECK(signed_to_string(p, eval_poset_expr(p, "{a,b} v bot").set) == "{a,b,top}");
  auto tagged = eval_poset_expr(p, "a ^ sup(a,b)");
  CHECK(tagged.set.tag == SignTag::Sup);
  CHECK(tagged.renormalized_nested_sign);
  CHECK_THROWS(eval_poset_expr(p, "a ^"));
  CHECK_THROWS(eval_poset_expr(p, "nosuch"));
}
