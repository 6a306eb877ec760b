#include "ordlogic/poset.hpp"

#include "helpers.hpp"

#include <doctest.h>

#include <random>

using namespace ordlogic;
using testutil::diamond;

namespace {

// independent oracle: common lower bounds from the raw relation
bool oracle_disjoint(const Poset& p, int x, int y) {
  for (int a = 0; a < p.size(); ++a) {
    bool below_both = p.leq(a, x) && p.leq(a, y);
    if (p.bottom()) {
      if (below_both && a != *p.bottom()) return false;
    } else {
      if (p.lt(a, x) && p.lt(a, y)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("build_poset closes the diamond") {
  Poset p = Poset::build({"B", "a", "b", "T"}, {{"B", "a"}, {"B", "b"}, {"a", "T"}, {"b", "T"}},
                         "B", "T");
  auto pairs = p.closed_pairs();
  std::vector<std::pair<std::string, std::string>> expect = {
      {"B", "T"}, {"B", "a"}, {"B", "b"}, {"a", "T"}, {"b", "T"}};
  CHECK(pairs == expect);
  CHECK(p.bounded());
}

TEST_CASE("build_poset rejects reflexive pairs and cycles") {
  CHECK_THROWS_AS(Poset::build({"x"}, {{"x", "x"}}), PosetError);
  try {
    Poset::build({"x"}, {{"x", "x"}});
  } catch (const PosetError& e) {
    CHECK(e.kind == PosetErrorKind::ReflexivePair);
  }
  try {
    Poset::build({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"c", "a"}});
    CHECK(false);
  } catch (const PosetError& e) {
    CHECK(e.kind == PosetErrorKind::CycleDetected);
  }
}

TEST_CASE("build_poset validates bounds and element names") {
  try {
    Poset::build({"a", "b"}, {}, "a", "a");
    CHECK(false);
  } catch (const PosetError& e) {
    CHECK(e.kind == PosetErrorKind::BoundViolation);
  }
  try {
    Poset::build({"a"}, {{"a", "zz"}});
    CHECK(false);
  } catch (const PosetError& e) {
    CHECK(e.kind == PosetErrorKind::UnknownElement);
  }
}

TEST_CASE("min_max on the diamond") {
  Poset p = diamond();
  ElemSet x = make_set(p, {"bot", "a", "b"});
  CHECK(set_names(p, min_max(p, x, true)) == std::vector<std::string>{"a", "b"});
  CHECK(set_names(p, min_max(p, x, false)) == std::vector<std::string>{"bot"});
  CHECK(min_max(p, {}, true).empty());
}

TEST_CASE("min_max members are incomparable and included") {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    Poset p = testutil::random_bounded_poset(rng, 6, 0.4);
    ElemSet x = testutil::random_subset(rng, p, false);
    for (bool want_max : {false, true}) {
      ElemSet m = min_max(p, x, want_max);
      CHECK(subset_of(m, x));
      for (int a : m)
        for (int b : m)
          if (a != b) CHECK(!p.lt(a, b));
    }
  }
}

TEST_CASE("disjoint on the diamond and Fact Rules(4.8) poset") {
  Poset d = diamond();
  CHECK(d.disjoint(d.index_of("a"), d.index_of("b")));
  for (int i = 0; i < d.size(); ++i) CHECK(d.disjoint(d.index_of("bot"), i));

  Poset p = Poset::build({"bot", "a", "b", "c", "ab", "top"}, {{"a", "ab"}, {"b", "ab"}},
                         "bot", "top");
  // frozen from the lower-bound enumeration oracle
  CHECK(oracle_disjoint(p, p.index_of("a"), p.index_of("b")));
  CHECK(!oracle_disjoint(p, p.index_of("a"), p.index_of("ab")));
  CHECK(p.disjoint(p.index_of("a"), p.index_of("b")));
  CHECK(!p.disjoint(p.index_of("a"), p.index_of("ab")));
}

TEST_CASE("disjoint agrees with the oracle and satisfies Fact Up") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    Poset p = testutil::random_bounded_poset(rng, 6, 0.35);
    for (int x = 0; x < p.size(); ++x)
      for (int y = 0; y < p.size(); ++y) {
        CHECK(p.disjoint(x, y) == oracle_disjoint(p, x, y));
        CHECK(p.disjoint(x, y) == p.disjoint(y, x));  // symmetry
        if (p.disjoint(x, y))
          for (int x2 = 0; x2 < p.size(); ++x2)
            if (p.leq(x2, x)) CHECK(p.disjoint(x2, y));
      }
  }
}

TEST_CASE("bottomless disjointness uses strict common lower bounds") {
  Poset p = Poset::build({"a", "b", "c"}, {{"a", "b"}, {"a", "c"}});
  CHECK(!p.disjoint(p.index_of("b"), p.index_of("c")));
  // a minimal element has no strict lower bound at all
  CHECK(p.disjoint(p.index_of("a"), p.index_of("a")));
}

TEST_CASE("set_compare: paper remarks") {
  Poset p = diamond();
  // X <= {top} for every X
  for (const auto& name : p.elements())
    CHECK(set_leq(p, make_set(p, {name}), make_set(p, {"top"})));
  // X subseteq Y implies X <= Y
  CHECK(set_leq(p, make_set(p, {"a"}), make_set(p, {"a", "b"})));
  // the rejected <=_1 would accept X={a,top}, Y={b} with a<b; ours must not
  Poset q = Poset::build({"bot", "a", "b", "top"}, {{"a", "b"}}, "bot", "top");
  CHECK(!set_leq(q, make_set(q, {"a", "top"}), make_set(q, {"b"})));
}

TEST_CASE("set_compare leq is reflexive and transitive") {
  std::mt19937_64 rng(13);
  for (int t = 0; t < 100; ++t) {
    Poset p = testutil::random_bounded_poset(rng, 5, 0.4);
    ElemSet x = testutil::random_subset(rng, p, true);
    ElemSet y = testutil::random_subset(rng, p, true);
    ElemSet z = testutil::random_subset(rng, p, true);
    CHECK(set_leq(p, x, x));
    if (set_leq(p, x, y) && set_leq(p, y, z)) CHECK(set_leq(p, x, z));
  }
}

TEST_CASE("set_lt needs strictness below every dominating member") {
  Poset p = diamond();
  CHECK(set_lt(p, make_set(p, {"bot"}), make_set(p, {"a"})));
  CHECK(!set_lt(p, make_set(p, {"a"}), make_set(p, {"a", "b"})));  // a <= a not strict
}
