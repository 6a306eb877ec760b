#include "ordlogic/demo.hpp"

#include "ordlogic/analogy.hpp"
#include "ordlogic/order_measure.hpp"
#include "ordlogic/order_ops.hpp"
#include "ordlogic/poset.hpp"
#include "ordlogic/rational.hpp"
#include "ordlogic/relevance.hpp"
#include "ordlogic/reliability.hpp"
#include "ordlogic/size_logic.hpp"
#include "ordlogic/yablo.hpp"

#include <sstream>

namespace ordlogic::demo {

bool DemoLedger::all_pass() const {
  for (const auto& e : entries)
    if (!e.pass) return false;
  return true;
}

namespace {

std::string names_of(const Poset& p, const ElemSet& xs) {
  std::string out = "{";
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += ",";
    out += p.name(xs[i]);
  }
  return out + "}";
}

struct Builder {
  DemoLedger ledger;
  void add(const std::string& label, const std::string& computed,
           const std::string& expected) {
    ledger.entries.push_back({label, computed, expected, computed == expected});
  }
};

Poset diamond() {
  return Poset::build({"bot", "a", "b", "top"}, {}, "bot", "top");
}

Poset rules43() {  // {bot, x', x, y, top} with x < x'
  return Poset::build({"bot", "xp", "x", "y", "top"}, {{"x", "xp"}}, "bot", "top");
}

Poset rules48() {  // {bot, a, b, c, ab, top} with a < ab, b < ab
  return Poset::build({"bot", "a", "b", "c", "ab", "top"},
                      {{"a", "ab"}, {"b", "ab"}}, "bot", "top");
}

Poset htversions() {  // {bot, a, b, b', c, top} with b < b'
  return Poset::build({"bot", "a", "b", "bp", "c", "top"}, {{"b", "bp"}}, "bot", "top");
}

Poset inclusion(const std::vector<std::pair<std::string, std::set<char>>>& sets,
                const std::string& bottom, const std::string& top) {
  std::vector<std::string> names;
  std::vector<std::pair<std::string, std::string>> pairs;
  for (const auto& [n, s] : sets) names.push_back(n);
  for (const auto& [n1, s1] : sets)
    for (const auto& [n2, s2] : sets)
      if (n1 != n2 && std::includes(s2.begin(), s2.end(), s1.begin(), s1.end()) &&
          s1 != s2)
        pairs.emplace_back(n1, n2);
  return Poset::build(names, pairs, bottom, top);
}

void order_examples(Builder& b) {
  Poset d = diamond();
  auto S = [&](const std::vector<std::string>& n) { return make_set(d, n); };
  b.add("Versions-1: top ^ a", names_of(d, op_meet(d, S({"top"}), S({"a"}), OpVariant::Plain)),
        "{a,bot}");
  b.add("Versions-1: top ^' a",
        names_of(d, op_meet(d, S({"top"}), S({"a"}), OpVariant::Primed)), "{a}");
  b.add("Versions-1: bot v a", names_of(d, op_join(d, S({"bot"}), S({"a"}), OpVariant::Plain)),
        "{a,top}");
  b.add("Versions-1: bot v' a",
        names_of(d, op_join(d, S({"bot"}), S({"a"}), OpVariant::Primed)), "{a}");
  b.add("Versions-1: !a", names_of(d, op_neg(d, S({"a"}), OpVariant::Plain)), "{b,bot}");
  b.add("Versions-1: !'a", names_of(d, op_neg(d, S({"a"}), OpVariant::Primed)), "{b}");
  b.add("Versions-1: !'!'a",
        names_of(d, op_neg(d, op_neg(d, S({"a"}), OpVariant::Primed), OpVariant::Primed)),
        "{a}");
  b.add("Versions-1: top ^' {a,b}",
        names_of(d, op_meet(d, S({"top"}), S({"a", "b"}), OpVariant::Primed)), "{a,b}");
  b.add("Versions-1: bot v' {a,b}",
        names_of(d, op_join(d, S({"bot"}), S({"a", "b"}), OpVariant::Primed)), "{a,b}");
  {
    ElemSet ab = S({"a", "b"});
    b.add("Alternative 1.1: top ^1 {a,b}",
          names_of(d, alt_op(d, S({"top"}), &ab, AltOp::Meet1)), "{bot}");
    b.add("Alternative 2.1: bot v1 {a,b}",
          names_of(d, alt_op(d, S({"bot"}), &ab, AltOp::Join1)), "{top}");
  }
  {
    Poset p = Poset::build({"bot", "a", "b", "c", "d", "top"},
                           {{"d", "b"}, {"d", "c"}}, "bot", "top");
    auto n1 = alt_op(p, make_set(p, {"b"}), nullptr, AltOp::Neg1);
    b.add("Alternative 3.4: !1{b}", names_of(p, n1), "{a,bot}");
    b.add("Alternative 3.4: !1!1{b}", names_of(p, alt_op(p, n1, nullptr, AltOp::Neg1)),
          "{a,b,bot,c,d,top}");
  }
  {
    Poset p = rules43();
    auto x = make_set(p, {"x"});
    b.add("Rules 4.3: !x", names_of(p, op_neg(p, x, OpVariant::Plain)), "{bot,y}");
    b.add("Rules 4.3: !'!'x",
          names_of(p, op_neg(p, op_neg(p, x, OpVariant::Primed), OpVariant::Primed)),
          "{xp}");
  }
  {
    Poset p = rules48();
    auto a = make_set(p, {"a"});
    auto na = op_neg(p, a, OpVariant::Plain);
    b.add("Rules 4.8: !a", names_of(p, na), "{b,bot,c}");
    b.add("Rules 4.8: a v !a", names_of(p, op_join(p, a, na, OpVariant::Plain)),
          "{a,ab,top}");
    auto nap = op_neg(p, a, OpVariant::Primed);
    b.add("Rules 4.8: a v' !'a", names_of(p, op_join(p, a, nap, OpVariant::Primed)),
          "{ab}");
    SignedSet na_sup{na, SignTag::Sup};
    auto r = signed_apply(p, SignedOp::Join, {a, SignTag::Plain}, &na_sup);
    b.add("Signs: a v sup(!a)", signed_to_string(p, r.set), "inf{top}");
  }
  {
    // signed failure case: {bot, y, x, b, top} with y < b, x < b
    Poset p = Poset::build({"bot", "y", "x", "b", "top"}, {{"y", "b"}, {"x", "b"}},
                           "bot", "top");
    auto x = make_set(p, {"x"});
    auto nx = op_neg(p, x, OpVariant::Plain);
    SignedSet nx_sup{nx, SignTag::Sup};
    auto r = signed_apply(p, SignedOp::Join, {x, SignTag::Plain}, &nx_sup);
    b.add("Signs: x v sup(!x) fails", signed_to_string(p, r.set), "inf{b,top}");
  }
  {
    Poset p = htversions();
    auto c = make_set(p, {"c"});
    b.add("ht-Versions: !c", names_of(p, op_neg(p, c, OpVariant::Plain)),
          "{a,b,bot,bp}");
    b.add("ht-Versions: !'c", names_of(p, op_neg(p, c, OpVariant::Primed)), "{a,bp}");
    b.add("ht-Versions: !''c", names_of(p, dd_op(p, c, nullptr, DdOp::Neg2p)), "{bp}");
  }
}

void measure_examples(Builder& b) {
  {
    // Fact Height(4): {bot, a, a', b, top} with a < a'
    Poset p = Poset::build({"bot", "a", "ap", "b", "top"}, {{"a", "ap"}}, "bot", "top");
    auto ht = heights(p);
    b.add("Height: ht(a')", std::to_string(ht[p.index_of("ap")]), "2");
    b.add("Height: ht(b)", std::to_string(ht[p.index_of("b")]), "1");
  }
  {
    Poset d = diamond();
    b.add("=1 (=1): P(a)", to_string(prob(d, make_set(d, {"a"}), ProbMode::MaxHt)),
          "1/2");
    b.add("=1 (=1): P(b)", to_string(prob(d, make_set(d, {"b"}), ProbMode::MaxHt)),
          "1/2");
  }
  {
    Poset p = inclusion({{"e", {}},
                         {"A", {'a'}},
                         {"BD", {'b', 'd'}},
                         {"ABC", {'a', 'b', 'c'}},
                         {"ABCD", {'a', 'b', 'c', 'd'}}},
                        "e", "ABCD");
    auto a = make_set(p, {"A"});
    auto np = op_neg(p, a, OpVariant::Primed);
    b.add("=1 (<1): !'{a}", names_of(p, np), "{BD}");
    b.add("=1 (<1): P({a})", to_string(prob(p, a, ProbMode::MaxHt)), "1/3");
    b.add("=1 (<1): P(!'{a})", to_string(prob(p, np, ProbMode::MaxHt)), "1/3");
  }
  {
    Poset p = inclusion({{"e", {}},
                         {"A", {'a'}},
                         {"AA", {'a', '1'}},
                         {"B", {'b'}},
                         {"BB", {'b', '2'}},
                         {"ALL", {'a', '1', 'b', '2'}}},
                        "e", "ALL");
    auto aa = make_set(p, {"AA"});
    auto np = op_neg(p, aa, OpVariant::Primed);
    b.add("=1 (>1): P({a,a'})", to_string(prob(p, aa, ProbMode::MaxHt)), "2/3");
    b.add("=1 (>1): P(!'{a,a'})", to_string(prob(p, np, ProbMode::MaxHt)), "2/3");
  }
  {
    // Definition Mu: {bot, a, a', b, b', top}, a < a', b < b'
    Poset p = Poset::build({"bot", "a", "ap", "b", "bp", "top"},
                           {{"a", "ap"}, {"b", "bp"}}, "bot", "top");
    auto ap = make_set(p, {"ap"});
    auto nap = op_neg(p, ap, OpVariant::Plain);
    b.add("Mu: P(a')", to_string(prob(p, ap, ProbMode::Sum)), "2/9");
    b.add("Mu: P(!a')", to_string(prob(p, nap, ProbMode::Sum)), "1/3");
    b.add("Mu: P(a' ^ !a')",
          to_string(prob(p, op_meet(p, ap, nap, OpVariant::Plain), ProbMode::Sum)), "0");
    auto napp = op_neg(p, ap, OpVariant::Primed);
    b.add("Mu: P(a' v' !'a')",
          to_string(prob(p, op_join(p, ap, napp, OpVariant::Primed), ProbMode::Sum)),
          "1/3");
  }
  {
    Poset x1 = Poset::build({"0", "1"}, {{"0", "1"}});
    Poset x2 = Poset::build({"0'", "1'"}, {{"0'", "1'"}});
    Poset prod = product_order(x1, x2, {{"0", Rat(0)}, {"1", Rat(1)}},
                               {{"0'", Rat(0)}, {"1'", Rat(1)}});
    b.add("Seq(1): ht((1,1'))", std::to_string(heights(prod)[prod.index_of("(1,1')")]),
          "2");
    Poset x3 = Poset::build({"0", "2"}, {{"0", "2"}});
    Poset prod2 = product_order(x3, x2, {{"0", Rat(0)}, {"2", Rat(2)}},
                                {{"0'", Rat(0)}, {"1'", Rat(1)}});
    b.add("Seq(2): ht((2,1'))", std::to_string(heights(prod2)[prod2.index_of("(2,1')")]),
          "3");
  }
  {
    std::vector<std::set<std::string>> sets = {{"a", "b"}, {"b", "c"}};
    auto row = [&](const std::set<std::string>& z) {
      MeanRow r = score_candidate(sets, z);
      std::ostringstream os;
      os << "int(" << r.interior[0] << "," << r.interior[1] << ") ext(" << r.exterior[0]
         << "," << r.exterior[1] << ")";
      return os.str();
    };
    b.add("Mean: Z={b}", row({"b"}), "int(0,0) ext(1,1)");
    b.add("Mean: Z={a,b,c}", row({"a", "b", "c"}), "int(1,1) ext(0,0)");
    auto show_best = [&](MeanScheme s) {
      auto rows = set_mean(sets, s);
      std::string out;
      for (const auto& r : rows) {
        out += "{";
        bool first = true;
        for (const auto& e : r.z) {
          if (!first) out += ",";
          out += e;
          first = false;
        }
        out += "}";
      }
      return out;
    };
    b.add("Mean: interior-lex optimum", show_best(MeanScheme::InteriorLex), "{b}");
    b.add("Mean: exterior-lex optimum", show_best(MeanScheme::ExteriorLex), "{a,b,c}");
  }
}

void size_logic_examples(Builder& b) {
  using namespace ordlogic::sz;
  {
    // Example Trans-No-Rank: x4 > x2, y > x3, y > x1
    PrefStructure ps = PrefStructure::build(
        {"x1", "x2", "x3", "x4", "y"}, {{"x4", "x2"}, {"y", "x3"}, {"y", "x1"}});
    b.add("Trans-No-Rank: mu(X)", ps.show(ps.mu(ps.mask_of({"x2", "x3", "x4"}))),
          "{x3,x4}");
    RelationProps rp = relation_props(ps);
    std::ostringstream os;
    os << (rp.transitive ? "transitive" : "not-transitive") << " "
       << (rp.smooth ? "smooth" : "not-smooth") << " "
       << (rp.ranked ? "ranked" : "not-ranked");
    b.add("Trans-No-Rank: props", os.str(), "transitive smooth not-ranked");
  }
  {
    // Example Absolute (1): c > b > a
    PrefStructure ps =
        PrefStructure::build({"a", "b", "c"}, {{"c", "b"}, {"b", "a"}, {"c", "a"}});
    IdealFamily fam = IdealFamily::principal(ps);
    Mask A = ps.mask_of({"a"}), B = ps.mask_of({"b"});
    Mask X = ps.mask_of({"a", "b"}), Y = ps.full();
    b.add("Absolute(1): {a} <_X {b}", less_at(fam, A, B, X) ? "yes" : "no", "yes");
    b.add("Absolute(1): {a} <_Y {b}", less_at(fam, A, B, Y) ? "yes" : "no", "no");
    b.add("Absolute(1): both small in Y",
          (fam.small(Y, A) && fam.small(Y, B)) ? "yes" : "no", "yes");
  }
  {
    // Example Absolute (2): c > b, b > a, but NOT c > a
    PrefStructure ps = PrefStructure::build({"a", "b", "c"}, {{"c", "b"}, {"b", "a"}});
    IdealFamily fam = IdealFamily::principal(ps);
    Mask A = ps.mask_of({"a"}), C = ps.mask_of({"c"});
    Mask X = ps.mask_of({"a", "c"}), Y = ps.full();
    b.add("Absolute(2): {a} <_Y {c}", less_at(fam, A, C, Y) ? "yes" : "no", "yes");
    b.add("Absolute(2): both medium in X",
          (fam.classify(X, A) == Cls::Medium && fam.classify(X, C) == Cls::Medium)
              ? "yes"
              : "no",
          "yes");
  }
}

void relevance_examples(Builder& b) {
  using namespace ordlogic::rv;
  {
    FormulaProfile p = essential_vars(parse_formula("p & (q | !q)"));
    std::string ess;
    for (const auto& a : p.essential) ess += a;
    b.add("Logic(1): essential vars of p&(q|!q)", ess, "p");
  }
  {
    FormulaProfile p = essential_vars(parse_formula("(alpha | !alpha) & alpha'"));
    std::string ess;
    for (const auto& a : p.essential) ess += a;
    b.add("Symbols: essential vars of (a|!a)&a'", ess, "alpha'");
  }
  {
    // Example No-Inclusions over {p,q}
    ModelSet X{{"p", "q"}, {{"0", "1"}, {"0", "1"}}, {{1, 1}}};
    ModelSet Y{{"p", "q"}, {{"0", "1"}, {"0", "1"}}, {{1, 1}, {1, 0}}};
    ModelSet Z{{"p", "q"}, {{"0", "1"}, {"0", "1"}}, {{1, 1}, {1, 0}, {0, 0}}};
    auto ess = [&](const ModelSet& m) {
      std::string out;
      for (int i : essential_indices(m)) out += m.index_names[i];
      return out;
    };
    b.add("No-Inclusions: essential(X)", ess(X), "pq");
    b.add("No-Inclusions: essential(Y)", ess(Y), "p");
    b.add("No-Inclusions: essential(Z)", ess(Z), "pq");
  }
  {
    Formula f = parse_formula("!((a & b) | (c & d))");
    Formula dnf = to_dnf(parse_formula("(a & b) | (c & d)"));
    b.add("Distributivity: choice-function negation", render(negate_dnf(dnf)),
          "!a & !c | !a & !d | !b & !c | !b & !d");
    b.add("Distributivity: negation equivalent",
          equivalent(negate_dnf(dnf), f) ? "yes" : "no", "yes");
  }
}

void yablo_examples(Builder& b) {
  using namespace ordlogic::yb;
  {
    DenotationSystem sys = DenotationSystem::make(
        {"x0", "x1", "x2", "x3", "x4"},
        {{"x0", parse_formula("!x1 | x2 | x4")},
         {"x1", parse_formula("x2")},
         {"x2", parse_formula("x3 & !x3")},
         {"x3", parse_formula("x4")}});
    auto paths = labelled_paths(sys, "x0");
    b.add("Value: number of labelled paths", std::to_string(paths.size()), "5");
    b.add("Value: sigma0", path_to_string(paths[0]),
          "x0 ->- x1 ->+ x2 ->+ x3 ->+ x4");
    b.add("Value: sigma0+", valued_path_to_string(value_path(paths[0], true)),
          "x0+ ->- x1- ->+ x2- ->+ x3- ->+ x4-");
    b.add("Value: sigma4-", valued_path_to_string(value_path(paths[4], false)),
          "x0- ->+ x4-");
  }
  {
    DenotationSystem liar =
        DenotationSystem::make({"s"}, {{"s", parse_formula("!s")}});
    b.add("Liar: paradoxical", find_acceptable(liar) ? "solvable" : "paradoxical",
          "paradoxical");
  }
  {
    auto res = transandnot(schema_yablo());
    b.add("Yablo schema: verdict", res.paradoxical ? "paradoxical" : "solvable",
          "paradoxical");
    b.add("Yablo schema: culprit", res.culprit, "Y0");
  }
  {
    auto chk = schema_check_uniform(schema_procrastination(),
                                    {{"Y", false}, {"X", false}});
    b.add("Procrastination: all-false accepted", chk.acceptable ? "yes" : "no", "yes");
    auto ref = find_acceptable(gen_procrastination(4), 24, {{"Y1", true}});
    b.add("Procrastination: Y1=TOP refuted", ref ? "solvable" : "refuted", "refuted");
  }
  {
    // Fact Percolate (1.2): d(a) = b | c with b forced TOP
    DenotationSystem sys = DenotationSystem::make(
        {"a", "b", "c"}, {{"a", parse_formula("b | c")}, {"b", parse_formula("TOP")}});
    auto pr = percolate(sys);
    b.add("Percolate: a forced TOP",
          pr.forced.count("a") && pr.forced.at("a") ? "yes" : "no", "yes");
  }
  {
    // the Yablo cell is contradictory under both seeds
    LabelledPath s1{{"x0", "x1", "x2"}, {true, true}};
    LabelledPath s2{{"x0", "x2"}, {true}};
    auto rep = cell_analyze({s1, s2});
    b.add("Remark Simple: Yablo cell contradictory",
          rep.is_cell && rep.contradictory ? "yes" : "no", "yes");
  }
  {
    auto res = oddloop_check({"A", "B", "C"}, {{"A", "B"}, {"B", "C"}, {"C", "A"}});
    b.add("Value2: triangle rejected", res.bipartite ? "bipartite" : "odd-cycle",
          "odd-cycle");
  }
}

void reliability_examples(Builder& b) {
  using namespace ordlogic::rb;
  AggregatorState st;
  for (const auto& id : {"T1", "T2", "T3", "T4"}) st.agents.push_back({id, Rat(1, 2), {}});
  std::map<std::string, Rat> readings = {
      {"T1", Rat(20)}, {"T2", Rat(19)}, {"T3", Rat(21)}, {"T4", Rat(30)}};
  RoundConfig cfg;
  RoundResult r1 = run_round(st, readings, cfg);
  b.add("Tru-1: first mean", to_string(r1.mean), "45/2");
  b.add("Tru-1: rho(T4)", to_string(st.agent("T4").rho), "1/3");
  b.add("Tru-1: rho(T1)", to_string(st.agent("T1").rho), "2/3");
  RoundConfig cfg2;
  cfg2.weighted = true;
  cfg2.weights_mode = WeightsMode::CountReplication;
  RoundResult r2 = run_round(st, readings, cfg2);
  b.add("Tru-1: second mean (count twice)", to_string(r2.mean), "150/7");
}

void analogy_examples(Builder& b) {
  using namespace ordlogic::ana;
  Signature sig = Signature::make({"x", "xp", "u", "up"}, {"P", "Q", "Pt", "Qt"}, {});
  AnalogyMap alpha;
  alpha.name = "alpha";
  alpha.obj = {{"x", "u"}, {"xp", "up"}};
  alpha.un = {{"P", "Pt"}, {"Q", "Qt"}};
  validate_map(alpha, sig);
  KnowledgeState v = {
      {"P(x)", true},  {"Pt(u)", true},   // agreement on x
      {"P(xp)", true}, {"Pt(up)", false}, // disagreement on x'
      {"Q(x)", true},                     // image Qt(u) unknown
  };
  std::vector<Formula> facts = {Formula::make_atom("P(x)"), Formula::make_atom("P(xp)"),
                                Formula::make_atom("Q(x)")};
  Supports s = supports(alpha, facts, v);
  auto shows = [](const std::vector<Formula>& fs) {
    std::string out;
    for (const auto& f : fs) {
      if (!out.empty()) out += " ";
      out += render(f);
    }
    return out;
  };
  b.add("Combi: alpha+", shows(s.plus), "P(x)");
  b.add("Combi: alpha-", shows(s.minus), "P(xp)");
  b.add("Combi: alpha?", shows(s.question), "Q(x)");
  auto c = conjecture(alpha, Formula::make_atom("Q(x)"), v);
  b.add("Combi: conjecture", render(c.target) + "=" + (c.value ? "TOP" : "BOT"),
        "Qt(u)=TOP");
}

}  // namespace

DemoLedger run_paper_demo() {
  Builder b;
  order_examples(b);
  measure_examples(b);
  size_logic_examples(b);
  relevance_examples(b);
  yablo_examples(b);
  reliability_examples(b);
  analogy_examples(b);
  return b.ledger;
}

}  // namespace ordlogic::demo
