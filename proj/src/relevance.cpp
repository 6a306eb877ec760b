#include "ordlogic/relevance.hpp"

#include <algorithm>

namespace ordlogic::rv {

namespace {

constexpr size_t kMaxAtoms = 24;

void check_atom_budget(size_t n) {
  if (n > kMaxAtoms)
    throw RelevanceError("too many atoms (max " + std::to_string(kMaxAtoms) + ")");
}

bool eval_bits(const Formula& f, const std::vector<std::string>& atoms, uint32_t bits) {
  return eval(f, [&](const std::string& a) {
    auto it = std::lower_bound(atoms.begin(), atoms.end(), a);
    return (bits >> (it - atoms.begin())) & 1;
  });
}

}  // namespace

FormulaProfile essential_vars(const Formula& f) {
  FormulaProfile prof;
  prof.syntactic = atoms_of(f);
  check_atom_budget(prof.syntactic.size());
  size_t n = prof.syntactic.size();
  bool any_true = false, any_false = false;
  std::vector<bool> essential(n, false);
  for (uint32_t bits = 0; bits < (uint32_t{1} << n); ++bits) {
    bool v = eval_bits(f, prof.syntactic, bits);
    (v ? any_true : any_false) = true;
    for (size_t i = 0; i < n; ++i)
      if (!essential[i] && v != eval_bits(f, prof.syntactic, bits ^ (uint32_t{1} << i)))
        essential[i] = true;
  }
  if (n == 0) {
    bool v = eval_bits(f, prof.syntactic, 0);
    (v ? any_true : any_false) = true;
  }
  for (size_t i = 0; i < n; ++i)
    if (essential[i]) prof.essential.push_back(prof.syntactic[i]);
  prof.cls = !any_false  ? FormulaClass::Tautology
             : !any_true ? FormulaClass::Contradiction
                         : FormulaClass::Contingent;
  return prof;
}

// ---------------------------------------------------------------------------
// Model sets

std::vector<int> essential_indices(const ModelSet& x) {
  std::vector<int> out;
  int k = static_cast<int>(x.index_names.size());
  for (int i = 0; i < k; ++i) {
    bool ess = false;
    for (const auto& sigma : x.tuples) {
      for (int v = 0; v < static_cast<int>(x.domains[i].size()) && !ess; ++v) {
        std::vector<int> tau = sigma;
        tau[i] = v;
        if (!x.tuples.count(tau)) ess = true;
      }
      if (ess) break;
    }
    if (ess) out.push_back(i);
  }
  return out;
}

SplicingResult splicing_check(const ModelSet& m, const ModelSet& n) {
  size_t product = 1;
  for (const auto& d : n.domains) product *= d.size();
  if (m.tuples.empty() || n.tuples.empty() || m.tuples.size() >= product ||
      n.tuples.size() >= product)
    throw RelevanceError("degenerate set: splicing needs nonempty proper subsets");
  for (const auto& t : m.tuples)
    if (!n.tuples.count(t)) throw RelevanceError("splicing requires M subseteq N");

  SplicingResult res;
  auto em = essential_indices(m);
  auto en = essential_indices(n);
  for (int i : em) res.essential_m.push_back(m.index_names[i]);
  for (int i : en) res.essential_n.push_back(n.index_names[i]);
  std::vector<int> shared;
  std::set_intersection(em.begin(), em.end(), en.begin(), en.end(),
                        std::back_inserter(shared));
  res.confirmed = !shared.empty();
  if (!res.confirmed) {
    // the proof's contradiction tuple: splicing any sigma in M with any
    // tau outside N lands tau itself in N
    std::vector<int> tau(n.index_names.size(), 0);
    while (n.tuples.count(tau)) {
      size_t i = 0;
      while (i < tau.size()) {
        if (++tau[i] < static_cast<int>(n.domains[i].size())) break;
        tau[i++] = 0;
      }
      if (i == tau.size()) break;
    }
    res.witness = tau;
  }
  return res;
}

ModelSet model_set_of(const Formula& f) {
  ModelSet ms;
  ms.index_names = atoms_of(f);
  check_atom_budget(ms.index_names.size());
  ms.domains.assign(ms.index_names.size(), {"0", "1"});
  size_t n = ms.index_names.size();
  for (uint32_t bits = 0; bits < (uint32_t{1} << n); ++bits)
    if (eval_bits(f, ms.index_names, bits)) {
      std::vector<int> t(n);
      for (size_t i = 0; i < n; ++i) t[i] = (bits >> i) & 1;
      ms.tuples.insert(t);
    }
  return ms;
}

// ---------------------------------------------------------------------------
// Relevant implication

ImplicationVerdict classify_implication(const Formula& phi, const Formula& psi) {
  ImplicationVerdict v;
  std::set<std::string> s;
  for (const auto& a : atoms_of(phi)) s.insert(a);
  for (const auto& a : atoms_of(psi)) s.insert(a);
  std::vector<std::string> atoms(s.begin(), s.end());
  check_atom_budget(atoms.size());
  for (uint32_t bits = 0; bits < (uint32_t{1} << atoms.size()); ++bits) {
    if (eval_bits(phi, atoms, bits) && !eval_bits(psi, atoms, bits)) {
      v.cls = ImplClass::Invalid;
      for (size_t i = 0; i < atoms.size(); ++i)
        v.countermodel[atoms[i]] = (bits >> i) & 1;
      return v;
    }
  }
  FormulaProfile pp = essential_vars(phi), pq = essential_vars(psi);
  if (pp.cls == FormulaClass::Contradiction) {
    v.cls = ImplClass::DegenerateValid;
    v.degenerate_reason = "antecedent equivalent to BOT";
    return v;
  }
  if (pq.cls == FormulaClass::Tautology) {
    v.cls = ImplClass::DegenerateValid;
    v.degenerate_reason = "consequent equivalent to TOP";
    return v;
  }
  v.cls = ImplClass::RelevantValid;
  std::set_intersection(pp.essential.begin(), pp.essential.end(), pq.essential.begin(),
                        pq.essential.end(), std::back_inserter(v.shared_essential));
  return v;
}

bool ct_check(const std::vector<Formula>& a, const std::vector<Formula>& b,
              const Formula& theta) {
  std::set<std::string> s;
  for (const auto& f : a)
    for (const auto& at : atoms_of(f)) s.insert(at);
  for (const auto& f : b)
    for (const auto& at : atoms_of(f)) s.insert(at);
  for (const auto& at : atoms_of(theta)) s.insert(at);
  std::vector<std::string> atoms(s.begin(), s.end());
  check_atom_budget(atoms.size());

  auto sat_all = [&](const std::vector<Formula>& fs, uint32_t bits) {
    for (const auto& f : fs)
      if (!eval_bits(f, atoms, bits)) return false;
    return true;
  };
  // antecedent 1: A |= phi for all phi in B
  for (uint32_t bits = 0; bits < (uint32_t{1} << atoms.size()); ++bits)
    if (sat_all(a, bits) && !sat_all(b, bits)) return true;  // vacuously holds
  // antecedent 2: A u B |= theta
  for (uint32_t bits = 0; bits < (uint32_t{1} << atoms.size()); ++bits)
    if (sat_all(a, bits) && sat_all(b, bits) && !eval_bits(theta, atoms, bits))
      return true;  // vacuously holds
  // conclusion: A |= theta
  for (uint32_t bits = 0; bits < (uint32_t{1} << atoms.size()); ++bits)
    if (sat_all(a, bits) && !eval_bits(theta, atoms, bits)) return false;
  return true;
}

// ---------------------------------------------------------------------------
// DNF

namespace {

bool is_literal(const Formula& f) {
  if (f.kind == Formula::Kind::Atom) return true;
  return f.kind == Formula::Kind::Not && f.kids[0].kind == Formula::Kind::Atom;
}

bool is_clause(const Formula& f) {
  if (is_literal(f)) return true;
  if (f.kind != Formula::Kind::And) return false;
  return std::all_of(f.kids.begin(), f.kids.end(), is_literal);
}

std::vector<Formula> clause_literals(const Formula& clause) {
  if (clause.kind == Formula::Kind::And) return clause.kids;
  return {clause};
}

std::vector<Formula> dnf_clauses(const Formula& f) {
  if (f.kind == Formula::Kind::Or) return f.kids;
  return {f};
}

}  // namespace

bool is_dnf(const Formula& f) {
  if (f.kind == Formula::Kind::Top || f.kind == Formula::Kind::Bot) return true;
  for (const auto& c : dnf_clauses(f))
    if (!is_clause(c)) return false;
  return true;
}

Formula to_dnf(const Formula& f) {
  Formula g = nnf(f);
  if (g.kind == Formula::Kind::Top || g.kind == Formula::Kind::Bot || is_literal(g))
    return g;
  if (g.kind == Formula::Kind::Or) {
    std::vector<Formula> clauses;
    for (const auto& k : g.kids)
      for (auto& c : dnf_clauses(to_dnf(k))) clauses.push_back(std::move(c));
    return Formula::disj(std::move(clauses));
  }
  // And: distribute pairwise over the clause lists of the kids
  std::vector<std::vector<Formula>> kid_clauses;
  for (const auto& k : g.kids) {
    Formula d = to_dnf(k);
    if (d.kind == Formula::Kind::Bot) return Formula::bot();
    if (d.kind == Formula::Kind::Top) continue;
    kid_clauses.push_back(dnf_clauses(d));
  }
  if (kid_clauses.empty()) return Formula::top();
  std::vector<std::vector<Formula>> acc = {{}};
  for (const auto& options : kid_clauses) {
    std::vector<std::vector<Formula>> next;
    for (const auto& partial : acc)
      for (const auto& opt : options) {
        auto lits = partial;
        for (const auto& l : clause_literals(opt)) {
          if (std::find(lits.begin(), lits.end(), l) == lits.end()) lits.push_back(l);
        }
        next.push_back(std::move(lits));
      }
    acc = std::move(next);
  }
  std::vector<Formula> clauses;
  for (auto& lits : acc) clauses.push_back(Formula::conj(std::move(lits)));
  return Formula::disj(std::move(clauses));
}

Formula negate_dnf(const Formula& f) {
  if (!is_dnf(f)) throw RelevanceError("negate_dnf needs a DNF input");
  if (f.kind == Formula::Kind::Top) return Formula::bot();
  if (f.kind == Formula::Kind::Bot) return Formula::top();
  auto clauses = dnf_clauses(f);
  std::vector<std::vector<Formula>> lits;
  for (const auto& c : clauses) lits.push_back(clause_literals(c));
  // choice functions: pick one literal per clause, negate each pick
  std::vector<size_t> pick(lits.size(), 0);
  std::vector<Formula> out_clauses;
  while (true) {
    std::vector<Formula> conj;
    for (size_t i = 0; i < lits.size(); ++i) {
      const Formula& l = lits[i][pick[i]];
      Formula neg = l.kind == Formula::Kind::Not ? l.kids[0] : Formula::negate(l);
      if (std::find(conj.begin(), conj.end(), neg) == conj.end())
        conj.push_back(std::move(neg));
    }
    out_clauses.push_back(Formula::conj(std::move(conj)));
    // odometer, last clause fastest
    size_t i = lits.size();
    while (i > 0) {
      --i;
      if (++pick[i] < lits[i].size()) break;
      pick[i] = 0;
      if (i == 0) return Formula::disj(std::move(out_clauses));
    }
  }
}

}  // namespace ordlogic::rv
