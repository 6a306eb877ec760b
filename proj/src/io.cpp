#include "ordlogic/io.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>

namespace ordlogic::io {

namespace {

std::string trim(const std::string& s) {
  size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return s.substr(a, b - a);
}

std::vector<std::string> split_ws(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream is(s);
  std::string tok;
  while (is >> tok) out.push_back(tok);
  return out;
}

std::string strip_comment(const std::string& line) {
  bool in_str = false;
  for (size_t i = 0; i < line.size(); ++i) {
    if (line[i] == '"') in_str = !in_str;
    if (line[i] == '#' && !in_str) return line.substr(0, i);
  }
  return line;
}

struct PosetSurface {
  std::vector<std::string> elements;
  std::vector<std::pair<std::string, std::string>> pairs;
  std::optional<std::string> bottom, top;
};

PosetSurface read_poset_surface(std::istream& in) {
  PosetSurface sf;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    auto toks = split_ws(body);
    if (toks[0] == "elt" && toks.size() == 2) {
      sf.elements.push_back(toks[1]);
    } else if (toks[0] == "lt" && toks.size() == 3) {
      sf.pairs.emplace_back(toks[1], toks[2]);
    } else if (toks[0] == "bottom" && toks.size() == 2) {
      sf.bottom = toks[1];
    } else if (toks[0] == "top" && toks.size() == 2) {
      sf.top = toks[1];
    } else {
      throw ParseError("unrecognized poset line: " + body, ln);
    }
  }
  return sf;
}

std::string poset_error_name(PosetErrorKind k) {
  switch (k) {
    case PosetErrorKind::CycleDetected: return "CycleDetected";
    case PosetErrorKind::ReflexivePair: return "ReflexivePair";
    case PosetErrorKind::UnknownElement: return "UnknownElement";
    case PosetErrorKind::BoundViolation: return "BoundViolation";
    case PosetErrorKind::EmptyElements: return "EmptyElements";
    case PosetErrorKind::EmptyOperand: return "EmptyOperand";
    case PosetErrorKind::UnboundedPoset: return "UnboundedPoset";
  }
  return "PosetError";
}

}  // namespace

Poset load_poset(std::istream& in) {
  PosetSurface sf = read_poset_surface(in);
  try {
    return Poset::build(sf.elements, sf.pairs, sf.bottom, sf.top);
  } catch (const PosetError& e) {
    throw InvariantViolation(poset_error_name(e.kind), e.what());
  }
}

Poset load_poset_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_poset(in);
}

std::string save_poset(const Poset& p) {
  std::ostringstream os;
  for (const auto& e : p.elements()) os << "elt " << e << "\n";
  if (p.bottom()) os << "bottom " << p.name(*p.bottom()) << "\n";
  if (p.top()) os << "top " << p.name(*p.top()) << "\n";
  for (const auto& [a, b] : p.closed_pairs()) os << "lt " << a << " " << b << "\n";
  return os.str();
}

sz::PrefStructure load_pref(std::istream& in) {
  PosetSurface sf = read_poset_surface(in);
  // lt A B: B sits higher, so B is preferred away from A
  std::vector<std::pair<std::string, std::string>> beats;
  for (const auto& [a, b] : sf.pairs) beats.emplace_back(b, a);
  try {
    return sz::PrefStructure::build(sf.elements, beats);
  } catch (const sz::SizeLogicError& e) {
    throw InvariantViolation("EmptyMu", e.what());
  }
}

sz::PrefStructure load_pref_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_pref(in);
}

yb::DenotationSystem load_system(std::istream& in) {
  std::vector<std::string> atoms;
  std::map<std::string, Formula> defs;
  std::string line;
  int ln = 0;
  std::vector<std::pair<std::string, std::string>> pending;
  while (std::getline(in, line)) {
    ++ln;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    auto eq = body.find('=');
    if (eq == std::string::npos) {
      auto toks = split_ws(body);
      if (toks.size() == 2 && toks[0] == "atom") {
        atoms.push_back(toks[1]);
        continue;
      }
      throw ParseError("expected `atom NAME` or `NAME = FORMULA`: " + body, ln);
    }
    std::string name = trim(body.substr(0, eq));
    std::string rhs = trim(body.substr(eq + 1));
    if (name.empty() || rhs.empty()) throw ParseError("malformed definition", ln);
    atoms.push_back(name);
    pending.emplace_back(name, rhs);
  }
  for (const auto& [name, rhs] : pending) {
    try {
      defs[name] = parse_formula(rhs);
    } catch (const FormulaError& e) {
      throw InvariantViolation("SyntaxError",
                               "d(" + name + "): " + e.what() + " at offset " +
                                   std::to_string(e.position));
    }
  }
  try {
    return yb::DenotationSystem::make(std::move(atoms), std::move(defs));
  } catch (const yb::YabloError& e) {
    throw InvariantViolation("UndeclaredAtom", e.what());
  }
}

yb::DenotationSystem load_system_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_system(in);
}

std::string save_system(const yb::DenotationSystem& sys) {
  std::ostringstream os;
  for (const auto& a : sys.free_atoms()) os << "atom " << a << "\n";
  for (const auto& a : sys.atoms) {
    auto it = sys.defs.find(a);
    if (it != sys.defs.end()) os << a << " = " << render(it->second) << "\n";
  }
  return os.str();
}

Rat DistanceMatrix::operator()(const std::string& a, const std::string& b) const {
  auto it = d.find({a, b});
  if (it == d.end()) throw std::runtime_error("no distance for (" + a + "," + b + ")");
  return it->second;
}

DistanceMatrix load_distance_csv(std::istream& in) {
  DistanceMatrix m;
  std::string line;
  int ln = 0;
  auto cells = [](const std::string& s) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
      if (c == ',') {
        out.push_back(trim(cur));
        cur.clear();
      } else {
        cur += c;
      }
    }
    out.push_back(trim(cur));
    return out;
  };
  if (!std::getline(in, line)) throw ParseError("empty distance matrix", 1);
  ++ln;
  auto header = cells(line);
  if (!header.empty() && header.front().empty()) header.erase(header.begin());
  m.universe = header;
  size_t row = 0;
  while (std::getline(in, line)) {
    ++ln;
    if (trim(line).empty()) continue;
    auto cs = cells(line);
    if (cs.size() != m.universe.size() + 1)
      throw ParseError("wrong number of cells", ln);
    const std::string& name = cs[0];
    for (size_t j = 0; j < m.universe.size(); ++j) {
      auto r = parse_rational(cs[j + 1]);
      if (!r) throw ParseError("bad rational: " + cs[j + 1], ln);
      m.d[{name, m.universe[j]}] = *r;
    }
    ++row;
  }
  if (row != m.universe.size())
    throw ParseError("matrix must be square over the header universe", ln);
  for (const auto& a : m.universe) {
    if (m(a, a) != Rat(0))
      throw InvariantViolation("NonzeroDiagonal", "d(" + a + "," + a + ") != 0");
    for (const auto& b : m.universe)
      if (m(a, b) != m(b, a))
        throw InvariantViolation("AsymmetricDistance", "d(" + a + "," + b + ")");
  }
  return m;
}

DistanceMatrix load_distance_csv_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return load_distance_csv(in);
}

// ---------------------------------------------------------------------------
// TOML subset

Rat TomlValue::rational() const {
  if (std::holds_alternative<long long>(v)) return Rat(std::get<long long>(v));
  if (is_string()) {
    auto r = parse_rational(str());
    if (r) return *r;
  }
  throw std::runtime_error("value is not a rational");
}

const TomlValue& TomlTable::at(const std::string& key) const {
  auto it = values.find(key);
  if (it == values.end()) throw std::runtime_error("missing key: " + key);
  return it->second;
}

namespace {

TomlValue parse_scalar(const std::string& raw, int ln) {
  std::string s = trim(raw);
  if (s.empty()) throw ParseError("empty value", ln);
  if (s.front() == '"') {
    if (s.size() < 2 || s.back() != '"') throw ParseError("unterminated string", ln);
    return {s.substr(1, s.size() - 2)};
  }
  if (s == "true") return {true};
  if (s == "false") return {false};
  try {
    size_t pos = 0;
    long long v = std::stoll(s, &pos);
    if (pos == s.size()) return {v};
  } catch (const std::exception&) {
  }
  // bare rationals / decimals are accepted as strings
  if (parse_rational(s)) return {s};
  throw ParseError("unrecognized scalar: " + s, ln);
}

}  // namespace

TomlDoc parse_toml(std::istream& in) {
  TomlDoc doc;
  TomlTable* current = &doc.root;
  std::string line;
  int ln = 0;
  while (std::getline(in, line)) {
    ++ln;
    std::string body = trim(strip_comment(line));
    if (body.empty()) continue;
    if (body.size() >= 4 && body.substr(0, 2) == "[[" &&
        body.substr(body.size() - 2) == "]]") {
      std::string name = trim(body.substr(2, body.size() - 4));
      doc.arrays[name].emplace_back();
      current = &doc.arrays[name].back();
      continue;
    }
    if (body.front() == '[' && body.back() == ']') {
      std::string name = trim(body.substr(1, body.size() - 2));
      doc.arrays[name].emplace_back();
      current = &doc.arrays[name].back();
      continue;
    }
    auto eq = body.find('=');
    if (eq == std::string::npos) throw ParseError("expected key = value", ln);
    std::string key = trim(body.substr(0, eq));
    std::string val = trim(body.substr(eq + 1));
    if (key.empty()) throw ParseError("empty key", ln);
    if (!val.empty() && val.front() == '[') {
      if (val.back() != ']') throw ParseError("unterminated array", ln);
      std::vector<std::string> items;
      std::string inner = val.substr(1, val.size() - 2);
      std::string cur;
      bool in_str = false;
      for (char c : inner) {
        if (c == '"') in_str = !in_str;
        if (c == ',' && !in_str) {
          items.push_back(trim(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!trim(cur).empty()) items.push_back(trim(cur));
      std::vector<std::string> vals;
      for (const auto& item : items) {
        TomlValue v = parse_scalar(item, ln);
        if (v.is_string())
          vals.push_back(v.str());
        else if (std::holds_alternative<long long>(v.v))
          vals.push_back(std::to_string(v.integer()));
        else if (std::holds_alternative<bool>(v.v))
          vals.push_back(v.boolean() ? "true" : "false");
      }
      current->values[key] = {vals};
    } else {
      current->values[key] = parse_scalar(val, ln);
    }
  }
  return doc;
}

TomlDoc parse_toml_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  return parse_toml(in);
}

// ---------------------------------------------------------------------------
// Scenario

Scenario load_scenario(const TomlDoc& doc) {
  Scenario sc;
  auto agents = doc.arrays.find("agents");
  if (agents == doc.arrays.end()) throw std::runtime_error("scenario needs [[agents]]");
  for (const auto& t : agents->second) {
    rb::AgentRecord a;
    a.id = t.at("id").str();
    if (t.has("rho")) a.rho = t.at("rho").rational();
    sc.state.agents.push_back(a);
    sc.network.links[a.id];
  }
  if (auto it = doc.arrays.find("channels"); it != doc.arrays.end())
    for (const auto& t : it->second)
      sc.state.channels.push_back({t.at("id").str(), t.at("rhoc").rational()});
  if (auto it = doc.arrays.find("links"); it != doc.arrays.end())
    for (const auto& t : it->second) {
      std::string from = t.at("from").str();
      for (const auto& to : t.at("to").array()) sc.network.links[from].push_back(to);
    }
  if (auto it = doc.arrays.find("rounds"); it != doc.arrays.end())
    for (const auto& t : it->second) {
      const auto& ids = t.at("agents").array();
      const auto& values = t.at("values").array();
      if (ids.size() != values.size())
        throw std::runtime_error("rounds: agents and values differ in length");
      std::map<std::string, Rat> readings;
      for (size_t i = 0; i < ids.size(); ++i) {
        auto r = parse_rational(values[i]);
        if (!r) throw std::runtime_error("bad reading: " + values[i]);
        readings[ids[i]] = *r;
      }
      sc.rounds.push_back(std::move(readings));
      std::map<std::string, Rat> eps;
      if (t.has("eps_agents")) {
        const auto& eids = t.at("eps_agents").array();
        const auto& evals = t.at("eps_values").array();
        for (size_t i = 0; i < eids.size() && i < evals.size(); ++i) {
          auto r = parse_rational(evals[i]);
          if (r) eps[eids[i]] = *r;
        }
      }
      sc.epsilons.push_back(std::move(eps));
    }
  if (auto it = doc.arrays.find("opinions"); it != doc.arrays.end())
    for (const auto& t : it->second) {
      OpinionEvent ev;
      ev.round = t.has("round") ? static_cast<int>(t.at("round").integer()) : 0;
      ev.opinion.source = t.at("source").str();
      ev.opinion.target = t.at("target").str();
      ev.opinion.eps = t.at("epsilon").rational();
      sc.opinions.push_back(ev);
    }
  return sc;
}

Scenario load_scenario_file(const std::string& path) {
  return load_scenario(parse_toml_file(path));
}

// ---------------------------------------------------------------------------
// Analogy case

AnalogyCase load_case(const TomlDoc& doc) {
  AnalogyCase cs;
  auto sig = doc.arrays.find("signature");
  if (sig == doc.arrays.end() || sig->second.empty())
    throw std::runtime_error("case needs a [signature] table");
  const TomlTable& st = sig->second.front();
  auto arr = [&](const char* key) -> std::vector<std::string> {
    return st.has(key) ? st.at(key).array() : std::vector<std::string>{};
  };
  cs.signature = ana::Signature::make(arr("objects"), arr("unary"), arr("binary"));
  if (auto it = doc.arrays.find("facts"); it != doc.arrays.end())
    for (const auto& t : it->second) {
      cs.knowledge[t.at("atom").str()] = t.at("value").boolean();
    }
  if (auto it = doc.arrays.find("maps"); it != doc.arrays.end())
    for (const auto& t : it->second) {
      ana::AnalogyMap m;
      m.name = t.at("name").str();
      auto read_pairs = [&](const char* key, std::map<std::string, std::string>& dst) {
        if (!t.has(key)) return;
        for (const auto& pair : t.at(key).array()) {
          auto arrow = pair.find("->");
          if (arrow == std::string::npos)
            throw std::runtime_error("map entries look like \"a->b\": " + pair);
          dst[trim(pair.substr(0, arrow))] = trim(pair.substr(arrow + 2));
        }
      };
      read_pairs("objects", m.obj);
      read_pairs("unary", m.un);
      read_pairs("binary", m.bin);
      ana::validate_map(m, cs.signature);
      cs.space.maps.push_back(std::move(m));
    }
  if (auto it = doc.arrays.find("prefer"); it != doc.arrays.end())
    for (const auto& t : it->second)
      cs.space.better.emplace_back(t.at("better").str(), t.at("worse").str());
  if (doc.root.has("queries"))
    for (const auto& q : doc.root.at("queries").array())
      cs.queries.push_back(Formula::make_atom(q));
  return cs;
}

AnalogyCase load_case_file(const std::string& path) {
  return load_case(parse_toml_file(path));
}

std::string fnv1a_digest(const std::string& bytes) {
  uint64_t h = 1469598103934665603ull;
  for (unsigned char c : bytes) {
    h ^= c;
    h *= 1099511628211ull;
  }
  char buf[17];
  std::snprintf(buf, sizeof(buf), "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace ordlogic::io
