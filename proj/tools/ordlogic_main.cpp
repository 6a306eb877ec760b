#include "ordlogic/demo.hpp"
#include "ordlogic/io.hpp"
#include "ordlogic/order_measure.hpp"
#include "ordlogic/order_ops.hpp"
#include "ordlogic/relevance.hpp"
#include "ordlogic/size_logic.hpp"
#include "ordlogic/yablo.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <iostream>
#include <sstream>

using namespace ordlogic;
using nlohmann::json;

namespace {

// exit codes: 0 ok, 1 analysis-negative, 2 usage or input error
constexpr int kOk = 0, kNegative = 1, kError = 2;

json envelope(const std::string& command, const std::string& inputs) {
  json j;
  j["command"] = command;
  j["inputs-digest"] = io::fnv1a_digest(inputs);
  j["verdicts"] = json::object();
  j["witnesses"] = json::object();
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

std::vector<std::string> split_list(const std::string& csv) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : csv) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

uint64_t require_seed(const std::optional<uint64_t>& seed) {
  if (seed) return *seed;
  if (const char* env = std::getenv("ORDLOGIC_SEED")) return std::stoull(env);
  throw CLI::ValidationError("--seed", "randomized commands need --seed or ORDLOGIC_SEED");
}

std::string join(const std::vector<std::string>& xs, const std::string& sep) {
  std::string out;
  for (size_t i = 0; i < xs.size(); ++i) {
    if (i) out += sep;
    out += xs[i];
  }
  return out;
}

// ---------------------------------------------------------------------------

int cmd_poset_show(const std::string& file, bool as_json) {
  Poset p = io::load_poset_file(file);
  if (as_json) {
    json j = envelope("poset show", io::read_file(file));
    j["verdicts"]["elements"] = p.elements();
    j["verdicts"]["bounded"] = p.bounded();
    auto pairs = json::array();
    for (const auto& [a, b] : p.closed_pairs()) pairs.push_back(a + "<" + b);
    j["verdicts"]["lt"] = pairs;
    emit(j);
  } else {
    std::cout << io::save_poset(p);
  }
  return kOk;
}

int cmd_poset_op(const std::string& file, const std::string& expr, bool as_json) {
  Poset p = io::load_poset_file(file);
  SignedResult r = eval_poset_expr(p, expr);
  std::string rendered = signed_to_string(p, r.set);
  if (as_json) {
    json j = envelope("poset op", io::read_file(file) + "\n" + expr);
    j["verdicts"]["result"] = rendered;
    j["verdicts"]["nested-sign-normalized"] = r.renormalized_nested_sign;
    emit(j);
  } else {
    std::cout << rendered << "\n";
    if (r.renormalized_nested_sign)
      std::cout << "note: nested signs were normalized step by step\n";
  }
  return kOk;
}

int cmd_poset_laws(const std::string& file, bool as_json) {
  Poset p = io::load_poset_file(file);
  LawReport rep = law_audit(p);
  bool boolean_ok = laws_boolean_ok(rep);
  if (as_json) {
    json j = envelope("poset laws", io::read_file(file));
    auto laws = json::array();
    for (const auto& e : rep.entries) {
      json l;
      l["law"] = e.law;
      l["variant"] = e.variant;
      l["holds"] = e.holds;
      if (!e.holds) l["witness"] = e.witness;
      laws.push_back(l);
    }
    j["verdicts"]["laws"] = laws;
    j["verdicts"]["boolean"] = boolean_ok;
    emit(j);
  } else {
    for (const auto& e : rep.entries) {
      std::cout << e.law << " (" << e.variant << "): "
                << (e.holds ? "holds" : "fails");
      if (!e.holds) std::cout << "  witness " << e.witness;
      std::cout << "\n";
    }
    std::cout << "boolean-algebra laws: " << (boolean_ok ? "hold" : "fail") << "\n";
  }
  return boolean_ok ? kOk : kNegative;
}

int cmd_measure(const std::string& file, const std::string& report,
                const std::string& set_csv, const std::string& mode,
                const std::string& dist_file, const std::string& sets_spec,
                const std::string& scheme_name, long long m_div, bool as_json) {
  std::string inputs = report;
  json j = envelope("measure " + report, "");
  std::ostringstream text;

  if (report == "heights") {
    Poset p = io::load_poset_file(file);
    inputs = io::read_file(file);
    HeightProfile hp = height_profile(p);
    for (int i = 0; i < p.size(); ++i) {
      text << p.name(i) << ": ht=" << hp.ht[i] << " t=" << hp.t[i]
           << " rht=" << to_string(hp.rht[i]) << " ratio=" << to_string(hp.ratio[i])
           << " pr=" << to_string(hp.pr[i]) << "\n";
      j["verdicts"][p.name(i)] = {{"ht", hp.ht[i]},
                                  {"t", hp.t[i]},
                                  {"rht", to_string(hp.rht[i])},
                                  {"ratio", to_string(hp.ratio[i])},
                                  {"pr", to_string(hp.pr[i])}};
    }
  } else if (report == "prob") {
    Poset p = io::load_poset_file(file);
    inputs = io::read_file(file) + set_csv + mode;
    ElemSet xs = make_set(p, split_list(set_csv));
    Rat pr = prob(p, xs, mode == "sum" ? ProbMode::Sum : ProbMode::MaxHt);
    text << render_approx(pr) << "\n";
    j["verdicts"]["p"] = to_string(pr);
  } else if (report == "translate") {
    Poset p = io::load_poset_file(file);
    inputs = io::read_file(file);
    SizeTranslation st = size_translation(p);
    for (int i = 0; i < p.size(); ++i) {
      text << p.name(i) << ": card=" << st.card(i)
           << " rel=" << to_string(st.relative_size(i)) << " {"
           << join(st.tokens[i], ",") << "}\n";
      j["verdicts"][p.name(i)] = {{"card", st.card(i)},
                                  {"tokens", st.tokens[i]}};
    }
  } else if (report == "core") {
    io::DistanceMatrix dm = io::load_distance_csv_file(dist_file);
    inputs = io::read_file(dist_file) + set_csv;
    CoreParams params{dm.universe,
                      [dm](const std::string& a, const std::string& b) { return dm(a, b); },
                      Rat(m_div)};
    std::set<std::string> x;
    for (const auto& e : split_list(set_csv)) x.insert(e);
    CoreResult res = core(params, x);
    CoreLayers layers = core_layers(params, x);
    text << "core: {" << join({res.core.begin(), res.core.end()}, ",") << "}\n";
    for (size_t i = 0; i < layers.layers.size(); ++i)
      text << "layer " << i << ": {"
           << join({layers.layers[i].begin(), layers.layers[i].end()}, ",") << "}\n";
    if (res.degenerate_singleton) text << "note: singleton input\n";
    j["verdicts"]["core"] = res.core;
    auto arr = json::array();
    for (const auto& layer : layers.layers) arr.push_back(layer);
    j["verdicts"]["layers"] = arr;
    j["verdicts"]["degenerate-singleton"] = res.degenerate_singleton;
  } else if (report == "mean") {
    std::vector<std::set<std::string>> sets;
    std::string cur;
    std::istringstream is(sets_spec);
    std::string part;
    while (std::getline(is, part, ';')) {
      std::set<std::string> s;
      for (const auto& e : split_list(part)) s.insert(e);
      sets.push_back(s);
    }
    inputs = sets_spec + scheme_name;
    MeanScheme scheme = scheme_name == "exterior_lex" ? MeanScheme::ExteriorLex
                        : scheme_name == "weighted"   ? MeanScheme::Weighted
                        : scheme_name == "squared"    ? MeanScheme::Squared
                        : scheme_name == "equalized"  ? MeanScheme::Equalized
                                                      : MeanScheme::InteriorLex;
    auto rows = set_mean(sets, scheme);
    auto arr = json::array();
    for (const auto& r : rows) {
      text << "{" << join({r.z.begin(), r.z.end()}, ",") << "} interior(";
      for (size_t i = 0; i < r.interior.size(); ++i)
        text << (i ? "," : "") << r.interior[i];
      text << ") exterior(";
      for (size_t i = 0; i < r.exterior.size(); ++i)
        text << (i ? "," : "") << r.exterior[i];
      text << ")\n";
      arr.push_back({{"z", r.z}, {"interior", r.interior}, {"exterior", r.exterior}});
    }
    j["verdicts"]["optima"] = arr;
  } else {
    throw CLI::ValidationError("--report", "unknown report: " + report);
  }
  if (as_json) {
    j["inputs-digest"] = io::fnv1a_digest(inputs);
    emit(j);
  } else {
    std::cout << text.str();
  }
  return kOk;
}

int cmd_sizelogic_fuzz(const std::string& suite, long seeds, int max_universe,
                       std::optional<uint64_t> seed_opt, bool as_json) {
  uint64_t seed = require_seed(seed_opt);
  std::vector<std::string> suites =
      suite == "all" ? sz::fuzz_suites() : std::vector<std::string>{suite};
  json j = envelope("sizelogic fuzz", suite + std::to_string(seeds) + std::to_string(seed));
  bool clean = true;
  for (const auto& s : suites) {
    sz::FuzzReport rep = sz::fact_fuzz(s, seeds, max_universe, seed);
    clean = clean && rep.counterexamples == 0;
    if (as_json) {
      j["verdicts"][s] = {{"structures", rep.structures},
                          {"instances", rep.instances},
                          {"counterexamples", rep.counterexamples}};
      if (!rep.first_witness.empty()) j["witnesses"][s] = rep.first_witness;
    } else {
      std::cout << s << ": " << rep.structures << " structures, " << rep.instances
                << " instances, " << rep.counterexamples << " counterexamples\n";
      if (!rep.first_witness.empty()) std::cout << "  witness: " << rep.first_witness << "\n";
    }
  }
  if (as_json) emit(j);
  return clean ? kOk : kNegative;
}

int cmd_sizelogic_props(const std::string& file, bool as_json) {
  sz::PrefStructure ps = io::load_pref_file(file);
  sz::RelationProps rp = relation_props(ps);
  sz::IdealFamily fam = sz::IdealFamily::principal(ps);
  sz::CoherenceReport rep = coherence_report(fam);
  if (as_json) {
    json j = envelope("sizelogic props", io::read_file(file));
    j["verdicts"]["transitive"] = rp.transitive;
    j["verdicts"]["smooth"] = rp.smooth;
    j["verdicts"]["ranked"] = rp.ranked;
    j["verdicts"]["coh1"] = rep.coh1.holds;
    j["verdicts"]["coh2"] = rep.coh2.holds;
    j["verdicts"]["coh2a"] = rep.coh2a.holds;
    j["verdicts"]["coh-rk"] = rep.coh_rk.holds;
    j["verdicts"]["fact22a-consistent"] = rep.fact22a_consistent;
    j["verdicts"]["coher-consistent"] = rep.coher_consistent;
    if (!rp.transitive) j["witnesses"]["transitive"] = rp.transitive_witness;
    if (!rp.smooth) j["witnesses"]["smooth"] = rp.smooth_witness;
    if (!rp.ranked) j["witnesses"]["ranked"] = rp.ranked_witness;
    emit(j);
  } else {
    std::cout << "transitive: " << (rp.transitive ? "yes" : "no") << "\n"
              << "smooth: " << (rp.smooth ? "yes" : "no") << "\n"
              << "ranked: " << (rp.ranked ? "yes" : "no") << "\n"
              << "Coh1: " << (rep.coh1.holds ? "holds" : "fails") << "\n"
              << "Coh2: " << (rep.coh2.holds ? "holds" : "fails") << "\n"
              << "Coh-RK: " << (rep.coh_rk.holds ? "holds" : "fails") << "\n";
  }
  return kOk;
}

int cmd_relevance_check(const std::string& spec, bool as_json) {
  auto arrow = spec.find("->");
  if (arrow == std::string::npos)
    throw CLI::ValidationError("check", "expected \"phi -> psi\"");
  Formula phi = parse_formula(spec.substr(0, arrow));
  Formula psi = parse_formula(spec.substr(arrow + 2));
  rv::ImplicationVerdict v = rv::classify_implication(phi, psi);
  if (as_json) {
    json j = envelope("relevance check", spec);
    switch (v.cls) {
      case rv::ImplClass::RelevantValid:
        j["verdicts"]["class"] = "relevant_valid";
        j["verdicts"]["shared"] = v.shared_essential;
        break;
      case rv::ImplClass::DegenerateValid:
        j["verdicts"]["class"] = "degenerate_valid";
        j["verdicts"]["reason"] = v.degenerate_reason;
        break;
      case rv::ImplClass::Invalid: {
        j["verdicts"]["class"] = "invalid";
        json cm;
        for (const auto& [a, val] : v.countermodel) cm[a] = val;
        j["witnesses"]["countermodel"] = cm;
        break;
      }
    }
    emit(j);
  } else {
    switch (v.cls) {
      case rv::ImplClass::RelevantValid:
        std::cout << "relevant valid; shared essential letters: "
                  << join(v.shared_essential, ",") << "\n";
        break;
      case rv::ImplClass::DegenerateValid:
        std::cout << "degenerate valid (" << v.degenerate_reason << ")\n";
        break;
      case rv::ImplClass::Invalid: {
        std::cout << "invalid; countermodel:";
        for (const auto& [a, val] : v.countermodel)
          std::cout << " " << a << "=" << (val ? "1" : "0");
        std::cout << "\n";
        break;
      }
    }
  }
  return v.cls == rv::ImplClass::Invalid ? kNegative : kOk;
}

int cmd_relevance_profile(const std::string& text, bool as_json) {
  Formula f = parse_formula(text);
  rv::FormulaProfile p = rv::essential_vars(f);
  std::string cls = p.cls == rv::FormulaClass::Tautology      ? "tautology"
                    : p.cls == rv::FormulaClass::Contradiction ? "contradiction"
                                                               : "contingent";
  if (as_json) {
    json j = envelope("relevance profile", text);
    j["verdicts"]["syntactic"] = p.syntactic;
    j["verdicts"]["essential"] = p.essential;
    j["verdicts"]["class"] = cls;
    emit(j);
  } else {
    std::cout << "syntactic: " << join(p.syntactic, ",") << "\n"
              << "essential: " << join(p.essential, ",") << "\n"
              << "class: " << cls << "\n";
  }
  return kOk;
}

int cmd_relevance_dnf(const std::string& text, bool negate, bool as_json) {
  Formula f = parse_formula(text);
  Formula d = rv::to_dnf(f);
  Formula out = negate ? rv::negate_dnf(d) : d;
  if (as_json) {
    json j = envelope("relevance dnf", text);
    j["verdicts"]["dnf"] = render(out);
    emit(j);
  } else {
    std::cout << render(out) << "\n";
  }
  return kOk;
}

int cmd_yablo_analyze(const std::string& file, const std::string& solver, bool as_json) {
  yb::DenotationSystem sys = io::load_system_file(file);
  std::optional<yb::Valuation> result;
  std::string used = solver;
  if (solver == "brute") {
    result = yb::find_acceptable(sys);
  } else if (solver == "simply") {
    result = yb::solve_simply_connected(sys);
  } else if (solver == "criterion") {
    auto res = yb::transandnot(sys);
    if (!res.paradoxical) result = yb::Valuation(res.valuation.begin(), res.valuation.end());
  } else {  // auto
    if (yb::is_simply_connected(yb::induced_graph(sys))) {
      result = yb::solve_simply_connected(sys);
      used = "simply";
    } else {
      try {
        auto res = yb::transandnot(sys);
        used = "criterion";
        if (!res.paradoxical)
          result = yb::Valuation(res.valuation.begin(), res.valuation.end());
      } catch (const yb::YabloError&) {
        result = yb::find_acceptable(sys);
        used = "brute";
      }
    }
  }
  auto frontier = sys.free_atoms();
  if (as_json) {
    json j = envelope("yablo analyze", io::read_file(file));
    j["verdicts"]["solver"] = used;
    j["verdicts"]["paradoxical"] = !result.has_value();
    if (result) {
      json v;
      for (const auto& [a, val] : *result) v[a] = val;
      j["witnesses"]["valuation"] = v;
    }
    if (!frontier.empty()) j["verdicts"]["frontier-atoms"] = frontier;
    emit(j);
  } else {
    if (!frontier.empty())
      std::cout << "frontier atoms (free): " << join(frontier, ",") << "\n";
    if (result) {
      std::cout << "acceptable valuation (" << used << "):";
      for (const auto& [a, val] : *result) std::cout << " " << a << "=" << (val ? "T" : "F");
      std::cout << "\n";
    } else {
      std::cout << "paradoxical (" << used << ")\n";
    }
  }
  return result ? kOk : kNegative;
}

int cmd_yablo_gen(const std::string& kind, int n, const std::string& chain_spec) {
  yb::DenotationSystem sys;
  if (kind == "yablo") {
    sys = yb::gen_yablo(n);
  } else if (kind == "ygprime") {
    sys = yb::gen_yg_prime(n);
  } else if (kind == "ygdoubleprime") {
    sys = yb::gen_yg_double_prime(n);
  } else if (kind == "procrastination") {
    sys = yb::gen_procrastination(n);
  } else if (kind == "ya") {
    sys = yb::gen_ya();
  } else if (kind == "chain") {
    std::vector<yb::ChainDen> spec;
    for (char c : chain_spec) {
      switch (c) {
        case 'n': spec.push_back(yb::ChainDen::Next); break;
        case '!': spec.push_back(yb::ChainDen::NotNext); break;
        case 't': spec.push_back(yb::ChainDen::Top); break;
        case 'f': spec.push_back(yb::ChainDen::Bot); break;
        default: throw CLI::ValidationError("--chain-spec", "use n, !, t, f");
      }
    }
    sys = yb::gen_chain(spec);
  } else {
    throw CLI::ValidationError("gen", "unknown generator: " + kind);
  }
  std::cout << io::save_system(sys);
  return kOk;
}

int cmd_yablo_graph(const std::string& file) {
  yb::DenotationSystem sys = io::load_system_file(file);
  yb::DiGraph g = yb::induced_graph(sys);
  for (const auto& [edge, sign] : g.edges)
    std::cout << edge.first << " " << edge.second << " "
              << (sign == yb::Sign::Pos ? "+" : sign == yb::Sign::Neg ? "-" : "+-")
              << "\n";
  return kOk;
}

int cmd_yablo_paths(const std::string& file, const std::string& origin, int max_len,
                    bool as_json) {
  yb::DenotationSystem sys = io::load_system_file(file);
  auto paths = yb::labelled_paths(sys, origin, max_len);
  if (as_json) {
    json j = envelope("yablo paths", io::read_file(file) + origin);
    auto arr = json::array();
    for (const auto& p : paths) {
      arr.push_back({{"path", yb::path_to_string(p)},
                     {"valued+", yb::valued_path_to_string(yb::value_path(p, true))},
                     {"valued-", yb::valued_path_to_string(yb::value_path(p, false))}});
    }
    j["verdicts"]["paths"] = arr;
    emit(j);
  } else {
    for (const auto& p : paths) {
      std::cout << yb::path_to_string(p) << "\n";
      std::cout << "  +: " << yb::valued_path_to_string(yb::value_path(p, true)) << "\n";
      std::cout << "  -: " << yb::valued_path_to_string(yb::value_path(p, false)) << "\n";
    }
  }
  return kOk;
}

int cmd_reliability_simulate(const std::string& file, const std::string& policy,
                             int variant, bool as_json) {
  io::Scenario sc = io::load_scenario_file(file);
  rb::RoundConfig cfg;
  cfg.policy = policy == "proportional" ? rb::Policy::Proportional : rb::Policy::Example;
  cfg.weighted = variant >= 2;
  cfg.history = variant >= 3;
  cfg.audit = variant >= 4;
  if (variant == 2) cfg.weights_mode = rb::WeightsMode::CountReplication;

  json rounds_json = json::array();
  std::ostringstream text;
  for (size_t i = 0; i < sc.rounds.size(); ++i) {
    for (const auto& [id, eps] : sc.epsilons[i]) sc.state.agent(id).eps = eps;
    rb::RoundResult r = rb::run_round(sc.state, sc.rounds[i], cfg);
    for (auto& a : sc.state.agents) a.eps.reset();
    text << "round " << (i + 1) << ": m=" << render_approx(r.mean) << "\n";
    json jr;
    jr["m"] = to_string(r.mean);
    jr["delta-mean"] = to_string(r.delta_mean);
    for (const auto& [id, rho] : r.rho_after) jr["rho"][id] = to_string(rho);
    for (const auto& [id, d] : r.delta) {
      text << "  " << id << ": delta=" << render_approx(d)
           << " rho=" << render_approx(r.rho_after.at(id)) << "\n";
    }
    if (!r.audit_flags.empty()) {
      text << "  audit flags: " << join(r.audit_flags, ",") << "\n";
      jr["audit-flags"] = r.audit_flags;
    }
    rounds_json.push_back(jr);
    for (const auto& ev : sc.opinions)
      if (ev.round == static_cast<int>(i + 1)) {
        auto out = rb::peer_opinion(sc.state, ev.opinion);
        text << "  opinion " << ev.opinion.source << "->" << ev.opinion.target
             << ": rho=" << render_approx(out.rho_target_after)
             << (out.cronyism ? " [cronyism]" : "")
             << (out.infighting ? " [infighting]" : "") << "\n";
      }
  }
  if (as_json) {
    json j = envelope("reliability simulate", io::read_file(file));
    j["verdicts"]["rounds"] = rounds_json;
    emit(j);
  } else {
    std::cout << text.str();
  }
  return kOk;
}

int cmd_analogy_run(const std::string& file, bool as_json) {
  io::AnalogyCase cs = io::load_case_file(file);
  auto best = ana::best_maps(cs.space);
  auto answers = ana::sceptical_consequence(cs.space, cs.knowledge, cs.queries);
  if (as_json) {
    json j = envelope("analogy run", io::read_file(file));
    j["verdicts"]["best-maps"] = best;
    for (const auto& [q, a] : answers)
      j["verdicts"]["answers"][q] = a == ana::Answer::True    ? "true"
                                    : a == ana::Answer::False ? "false"
                                                              : "undecided";
    emit(j);
  } else {
    std::cout << "best maps: " << join(best, ",") << "\n";
    for (const auto& [q, a] : answers)
      std::cout << q << ": "
                << (a == ana::Answer::True    ? "true"
                    : a == ana::Answer::False ? "false"
                                              : "undecided")
                << "\n";
  }
  return kOk;
}

int cmd_demo_paper(bool as_json) {
  demo::DemoLedger ledger = demo::run_paper_demo();
  if (as_json) {
    json j = envelope("demo paper", "registry");
    auto arr = json::array();
    for (const auto& e : ledger.entries)
      arr.push_back({{"label", e.label},
                     {"computed", e.computed},
                     {"expected", e.expected},
                     {"pass", e.pass}});
    j["verdicts"]["entries"] = arr;
    j["verdicts"]["all-pass"] = ledger.all_pass();
    emit(j);
  } else {
    for (const auto& e : ledger.entries)
      std::cout << (e.pass ? "[pass] " : "[FAIL] ") << e.label << ": " << e.computed
                << (e.pass ? "" : " (expected " + e.expected + ")") << "\n";
    std::cout << (ledger.all_pass() ? "all entries pass" : "FAILURES present") << "\n";
  }
  return ledger.all_pass() ? kOk : kNegative;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"ordlogic: partial-order logic, size, paradox and reliability toolkit"};
  app.require_subcommand(1);
  bool as_json = false;
  app.add_flag("--json", as_json, "emit a machine-readable report");

  std::string file, expr, report = "heights", set_csv, mode = "maxht";
  std::string dist_file, sets_spec, scheme = "interior_lex";
  long long m_div = 2;
  std::string suite = "all", rel_spec, solver = "auto", gen_kind, chain_spec, origin;
  long seeds = 1000;
  int max_universe = 7, n = 5, max_len = 64, variant = 1;
  std::optional<uint64_t> seed_opt;
  std::string policy = "example";
  bool negate = false;

  auto* poset = app.add_subcommand("poset", "finite strict partial orders");
  auto* pshow = poset->add_subcommand("show", "print the canonical form");
  pshow->add_option("--file", file)->required();
  auto* pop = poset->add_subcommand("op", "evaluate an operator expression");
  pop->add_option("--file", file)->required();
  pop->add_option("--expr", expr)->required();
  auto* plaws = poset->add_subcommand("laws", "audit the operator laws");
  plaws->add_option("--file", file)->required();

  auto* measure = app.add_subcommand("measure", "heights, sizes, cores and means");
  measure->add_option("--file", file);
  measure->add_option("--report", report, "heights|prob|translate|core|mean");
  measure->add_option("--set", set_csv, "comma-separated elements");
  measure->add_option("--mode", mode, "maxht|sum");
  measure->add_option("--dist", dist_file, "CSV distance matrix");
  measure->add_option("--sets", sets_spec, "semicolon-separated element lists");
  measure->add_option("--scheme", scheme);
  measure->add_option("--m", m_div, "core divisor");

  auto* szc = app.add_subcommand("sizelogic", "filters, ideals and size comparison");
  auto* fuzz = szc->add_subcommand("fuzz", "replay the published facts on random structures");
  fuzz->add_option("--suite", suite);
  fuzz->add_option("--seeds", seeds);
  fuzz->add_option("--max-universe", max_universe);
  fuzz->add_option("--seed", seed_opt);
  auto* props = szc->add_subcommand("props", "relation and coherence properties");
  props->add_option("--rel", file)->required();

  auto* rel = app.add_subcommand("relevance", "essential variables and implications");
  auto* rcheck = rel->add_subcommand("check", "classify \"phi -> psi\"");
  rcheck->add_option("spec", rel_spec)->required();
  auto* rprof = rel->add_subcommand("profile", "essential variables of a formula");
  rprof->add_option("formula", rel_spec)->required();
  auto* rdnf = rel->add_subcommand("dnf", "disjunctive normal form");
  rdnf->add_option("formula", rel_spec)->required();
  rdnf->add_flag("--negate", negate, "negate the DNF via choice functions");

  auto* yab = app.add_subcommand("yablo", "denotation systems and paradox analysis");
  auto* yan = yab->add_subcommand("analyze", "find an acceptable valuation");
  yan->add_option("file", file)->required();
  yan->add_option("--solver", solver, "auto|brute|simply|criterion");
  auto* ygen = yab->add_subcommand("gen", "generate a named structure");
  ygen->add_option("kind", gen_kind)->required();
  ygen->add_option("--n", n);
  ygen->add_option("--chain-spec", chain_spec, "per node: n ! t f");
  auto* ygraph = yab->add_subcommand("graph", "edge list with sign column");
  ygraph->add_option("file", file)->required();
  auto* ypaths = yab->add_subcommand("paths", "labelled and valued paths");
  ypaths->add_option("file", file)->required();
  ypaths->add_option("--origin", origin)->required();
  ypaths->add_option("--max-len", max_len);

  auto* rb_cmd = app.add_subcommand("reliability", "rounds, channels and broadcast");
  auto* rsim = rb_cmd->add_subcommand("simulate", "run a scenario file");
  rsim->add_option("file", file)->required();
  rsim->add_option("--policy", policy, "example|proportional");
  rsim->add_option("--variant", variant, "1..4");

  auto* ana_cmd = app.add_subcommand("analogy", "analogy maps and selection");
  auto* arun = ana_cmd->add_subcommand("run", "evaluate a case file");
  arun->add_option("file", file)->required();

  auto* demo_cmd = app.add_subcommand("demo", "replay the worked examples");
  auto* dpaper = demo_cmd->add_subcommand("paper", "the full example registry");
  (void)dpaper;

  try {
    app.parse(argc, argv);
    if (pshow->parsed()) return cmd_poset_show(file, as_json);
    if (pop->parsed()) return cmd_poset_op(file, expr, as_json);
    if (plaws->parsed()) return cmd_poset_laws(file, as_json);
    if (measure->parsed())
      return cmd_measure(file, report, set_csv, mode, dist_file, sets_spec, scheme,
                         m_div, as_json);
    if (fuzz->parsed())
      return cmd_sizelogic_fuzz(suite, seeds, max_universe, seed_opt, as_json);
    if (props->parsed()) return cmd_sizelogic_props(file, as_json);
    if (rcheck->parsed()) return cmd_relevance_check(rel_spec, as_json);
    if (rprof->parsed()) return cmd_relevance_profile(rel_spec, as_json);
    if (rdnf->parsed()) return cmd_relevance_dnf(rel_spec, negate, as_json);
    if (yan->parsed()) return cmd_yablo_analyze(file, solver, as_json);
    if (ygen->parsed()) return cmd_yablo_gen(gen_kind, n, chain_spec);
    if (ygraph->parsed()) return cmd_yablo_graph(file);
    if (ypaths->parsed()) return cmd_yablo_paths(file, origin, max_len, as_json);
    if (rsim->parsed()) return cmd_reliability_simulate(file, policy, variant, as_json);
    if (arun->parsed()) return cmd_analogy_run(file, as_json);
    if (dpaper->parsed()) return cmd_demo_paper(as_json);
    std::cerr << "no subcommand selected\n";
    return kError;
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
}
