#include "ordlogic/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace ordlogic {

Formula Formula::make_atom(std::string name) {
  Formula f;
  f.kind = Kind::Atom;
  f.atom = std::move(name);
  return f;
}

Formula Formula::top() { return Formula{}; }

Formula Formula::bot() {
  Formula f;
  f.kind = Kind::Bot;
  return f;
}

Formula Formula::negate(Formula f) {
  Formula g;
  g.kind = Kind::Not;
  g.kids.push_back(std::move(f));
  return g;
}

Formula Formula::conj(std::vector<Formula> kids) {
  if (kids.empty()) return top();
  if (kids.size() == 1) return kids.front();
  Formula f;
  f.kind = Kind::And;
  f.kids = std::move(kids);
  return f;
}

Formula Formula::disj(std::vector<Formula> kids) {
  if (kids.empty()) return bot();
  if (kids.size() == 1) return kids.front();
  Formula f;
  f.kind = Kind::Or;
  f.kids = std::move(kids);
  return f;
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= s.size();
  }

  char peek() {
    skip_ws();
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& msg) { throw FormulaError(msg, pos); }

  Formula parse_or() {
    std::vector<Formula> kids;
    kids.push_back(parse_and());
    while (peek() == '|') {
      ++pos;
      kids.push_back(parse_and());
    }
    if (kids.size() == 1) return kids.front();
    std::vector<Formula> flat;
    for (auto& k : kids) {
      if (k.kind == Formula::Kind::Or)
        for (auto& g : k.kids) flat.push_back(std::move(g));
      else
        flat.push_back(std::move(k));
    }
    return Formula::disj(std::move(flat));
  }

  Formula parse_and() {
    std::vector<Formula> kids;
    kids.push_back(parse_unary());
    while (peek() == '&') {
      ++pos;
      kids.push_back(parse_unary());
    }
    if (kids.size() == 1) return kids.front();
    std::vector<Formula> flat;
    for (auto& k : kids) {
      if (k.kind == Formula::Kind::And)
        for (auto& g : k.kids) flat.push_back(std::move(g));
      else
        flat.push_back(std::move(k));
    }
    return Formula::conj(std::move(flat));
  }

  Formula parse_unary() {
    if (peek() == '!') {
      ++pos;
      return Formula::negate(parse_unary());
    }
    return parse_primary();
  }

  Formula parse_primary() {
    char c = peek();
    if (c == '(') {
      ++pos;
      Formula f = parse_or();
      if (peek() != ')') fail("expected ')'");
      ++pos;
      return f;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      size_t start = pos;
      ++pos;
      while (pos < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' || s[pos] == '\''))
        ++pos;
      std::string name = s.substr(start, pos - start);
      if (name == "TOP") return Formula::top();
      if (name == "BOT") return Formula::bot();
      return Formula::make_atom(name);
    }
    fail("expected formula");
  }
};

void collect_atoms(const Formula& f, std::set<std::string>& out) {
  if (f.kind == Formula::Kind::Atom) out.insert(f.atom);
  for (const auto& k : f.kids) collect_atoms(k, out);
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Parser p(text);
  Formula f = p.parse_or();
  if (!p.at_end()) p.fail("trailing input");
  return f;
}

namespace {

std::string render_prec(const Formula& f, int parent_prec) {
  // precedence: atom/const/not = 3, and = 2, or = 1
  switch (f.kind) {
    case Formula::Kind::Atom:
      return f.atom;
    case Formula::Kind::Top:
      return "TOP";
    case Formula::Kind::Bot:
      return "BOT";
    case Formula::Kind::Not:
      return "!" + render_prec(f.kids[0], 3);
    case Formula::Kind::And: {
      std::string out;
      for (size_t i = 0; i < f.kids.size(); ++i) {
        if (i) out += " & ";
        out += render_prec(f.kids[i], 2);
      }
      return parent_prec > 2 ? "(" + out + ")" : out;
    }
    case Formula::Kind::Or: {
      std::string out;
      for (size_t i = 0; i < f.kids.size(); ++i) {
        if (i) out += " | ";
        out += render_prec(f.kids[i], 1);
      }
      return parent_prec > 1 ? "(" + out + ")" : out;
    }
  }
  return "";
}

}  // namespace

std::string render(const Formula& f) { return render_prec(f, 0); }

std::vector<std::string> atoms_of(const Formula& f) {
  std::set<std::string> s;
  collect_atoms(f, s);
  return {s.begin(), s.end()};
}

bool eval(const Formula& f, const std::function<bool(const std::string&)>& env) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return env(f.atom);
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Bot:
      return false;
    case Formula::Kind::Not:
      return !eval(f.kids[0], env);
    case Formula::Kind::And:
      for (const auto& k : f.kids)
        if (!eval(k, env)) return false;
      return true;
    case Formula::Kind::Or:
      for (const auto& k : f.kids)
        if (eval(k, env)) return true;
      return false;
  }
  return false;
}

bool eval(const Formula& f, const std::map<std::string, bool>& env) {
  return eval(f, [&](const std::string& a) {
    auto it = env.find(a);
    if (it == env.end()) throw std::runtime_error("unassigned atom: " + a);
    return it->second;
  });
}

Formula substitute(const Formula& f, const std::map<std::string, bool>& env) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      auto it = env.find(f.atom);
      if (it == env.end()) return f;
      return it->second ? Formula::top() : Formula::bot();
    }
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::Not:
      return Formula::negate(substitute(f.kids[0], env));
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      kids.reserve(f.kids.size());
      for (const auto& k : f.kids) kids.push_back(substitute(k, env));
      Formula g;
      g.kind = f.kind;
      g.kids = std::move(kids);
      return g;
    }
  }
  return f;
}

Formula simplify(const Formula& f) {
  switch (f.kind) {
    case Formula::Kind::Atom:
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return f;
    case Formula::Kind::Not: {
      Formula k = simplify(f.kids[0]);
      if (k.kind == Formula::Kind::Top) return Formula::bot();
      if (k.kind == Formula::Kind::Bot) return Formula::top();
      return Formula::negate(std::move(k));
    }
    case Formula::Kind::And: {
      std::vector<Formula> kids;
      for (const auto& raw : f.kids) {
        Formula k = simplify(raw);
        if (k.kind == Formula::Kind::Bot) return Formula::bot();
        if (k.kind == Formula::Kind::Top) continue;
        if (k.kind == Formula::Kind::And)
          for (auto& g : k.kids) kids.push_back(std::move(g));
        else
          kids.push_back(std::move(k));
      }
      return Formula::conj(std::move(kids));
    }
    case Formula::Kind::Or: {
      std::vector<Formula> kids;
      for (const auto& raw : f.kids) {
        Formula k = simplify(raw);
        if (k.kind == Formula::Kind::Top) return Formula::top();
        if (k.kind == Formula::Kind::Bot) continue;
        if (k.kind == Formula::Kind::Or)
          for (auto& g : k.kids) kids.push_back(std::move(g));
        else
          kids.push_back(std::move(k));
      }
      return Formula::disj(std::move(kids));
    }
  }
  return f;
}

namespace {

Formula nnf_rec(const Formula& f, bool negated) {
  switch (f.kind) {
    case Formula::Kind::Atom:
      return negated ? Formula::negate(f) : f;
    case Formula::Kind::Top:
      return negated ? Formula::bot() : Formula::top();
    case Formula::Kind::Bot:
      return negated ? Formula::top() : Formula::bot();
    case Formula::Kind::Not:
      return nnf_rec(f.kids[0], !negated);
    case Formula::Kind::And:
    case Formula::Kind::Or: {
      bool make_and = (f.kind == Formula::Kind::And) != negated;
      std::vector<Formula> kids;
      kids.reserve(f.kids.size());
      for (const auto& k : f.kids) kids.push_back(nnf_rec(k, negated));
      return make_and ? Formula::conj(std::move(kids)) : Formula::disj(std::move(kids));
    }
  }
  return f;
}

}  // namespace

Formula nnf(const Formula& f) { return simplify(nnf_rec(f, false)); }

namespace {

bool for_all_assignments(const std::vector<std::string>& atoms,
                         const std::function<bool(const std::map<std::string, bool>&)>& pred) {
  size_t n = atoms.size();
  for (uint64_t bits = 0; bits < (uint64_t{1} << n); ++bits) {
    std::map<std::string, bool> env;
    for (size_t i = 0; i < n; ++i) env[atoms[i]] = (bits >> i) & 1;
    if (!pred(env)) return false;
  }
  return true;
}

}  // namespace

bool equivalent(const Formula& a, const Formula& b) {
  std::set<std::string> s;
  collect_atoms(a, s);
  collect_atoms(b, s);
  std::vector<std::string> atoms(s.begin(), s.end());
  return for_all_assignments(atoms, [&](const std::map<std::string, bool>& env) {
    return eval(a, env) == eval(b, env);
  });
}

bool is_constant_true(const Formula& f) {
  auto atoms = atoms_of(f);
  return for_all_assignments(atoms, [&](const auto& env) { return eval(f, env); });
}

bool is_constant_false(const Formula& f) {
  auto atoms = atoms_of(f);
  return for_all_assignments(atoms, [&](const auto& env) { return !eval(f, env); });
}

}  // namespace ordlogic
