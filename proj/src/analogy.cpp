#include "ordlogic/analogy.hpp"

#include <algorithm>

namespace ordlogic::ana {

Signature Signature::make(std::vector<std::string> objects, std::vector<std::string> unary,
                          std::vector<std::string> binary) {
  Signature sig;
  auto prep = [](std::vector<std::string>& v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
  };
  prep(objects);
  prep(unary);
  prep(binary);
  std::set<std::string> all;
  for (const auto* group : {&objects, &unary, &binary})
    for (const auto& name : *group)
      if (!all.insert(name).second)
        throw AnalogyError("signature names must be disjoint across kinds: " + name);
  sig.objects = std::move(objects);
  sig.unary = std::move(unary);
  sig.binary = std::move(binary);
  return sig;
}

bool Signature::has_object(const std::string& o) const {
  return std::binary_search(objects.begin(), objects.end(), o);
}
bool Signature::has_unary(const std::string& p) const {
  return std::binary_search(unary.begin(), unary.end(), p);
}
bool Signature::has_binary(const std::string& r) const {
  return std::binary_search(binary.begin(), binary.end(), r);
}

std::vector<std::string> Signature::ground_atoms() const {
  std::vector<std::string> out;
  for (const auto& p : unary)
    for (const auto& o : objects) out.push_back(p + "(" + o + ")");
  for (const auto& r : binary)
    for (const auto& a : objects)
      for (const auto& b : objects) out.push_back(r + "(" + a + "," + b + ")");
  return out;
}

std::string GroundAtom::text() const {
  return binary ? pred + "(" + a + "," + b + ")" : pred + "(" + a + ")";
}

GroundAtom parse_atom(const std::string& text) {
  auto open = text.find('(');
  auto close = text.rfind(')');
  if (open == std::string::npos || close != text.size() - 1 || open == 0)
    throw AnalogyError("malformed ground atom: " + text);
  GroundAtom g;
  g.pred = text.substr(0, open);
  std::string args = text.substr(open + 1, close - open - 1);
  auto comma = args.find(',');
  if (comma == std::string::npos) {
    g.a = args;
  } else {
    g.binary = true;
    g.a = args.substr(0, comma);
    g.b = args.substr(comma + 1);
  }
  if (g.a.empty() || (g.binary && g.b.empty()))
    throw AnalogyError("malformed ground atom: " + text);
  return g;
}

std::optional<bool> tri_eval(const Formula& f, const KnowledgeState& v) {
  switch (f.kind) {
    case Formula::Kind::Atom: {
      auto it = v.find(f.atom);
      if (it == v.end()) return std::nullopt;
      return it->second;
    }
    case Formula::Kind::Top:
      return true;
    case Formula::Kind::Bot:
      return false;
    case Formula::Kind::Not: {
      auto k = tri_eval(f.kids[0], v);
      if (!k) return std::nullopt;
      return !*k;
    }
    case Formula::Kind::And: {
      bool unknown = false;
      for (const auto& k : f.kids) {
        auto r = tri_eval(k, v);
        if (r && !*r) return false;
        if (!r) unknown = true;
      }
      if (unknown) return std::nullopt;
      return true;
    }
    case Formula::Kind::Or: {
      bool unknown = false;
      for (const auto& k : f.kids) {
        auto r = tri_eval(k, v);
        if (r && *r) return true;
        if (!r) unknown = true;
      }
      if (unknown) return std::nullopt;
      return false;
    }
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Maps

namespace {

const std::string& image(const std::map<std::string, std::string>& m,
                         const std::string& key, const char* kind) {
  auto it = m.find(key);
  if (it == m.end())
    throw AnalogyError(std::string("symbol outside the map's domain: ") + kind + " " + key);
  return it->second;
}

}  // namespace

void validate_map(const AnalogyMap& alpha, const Signature& sig) {
  auto check_kind = [&](const std::map<std::string, std::string>& m,
                        bool (Signature::*has)(const std::string&) const,
                        const char* kind) {
    std::set<std::string> images;
    for (const auto& [from, to] : m) {
      if (!(sig.*has)(from) || !(sig.*has)(to))
        throw AnalogyError(std::string("map is not ") + kind + "-preserving: " + from +
                           " -> " + to);
      if (!images.insert(to).second)
        throw AnalogyError("injectivity violation on " + to);
    }
  };
  check_kind(alpha.obj, &Signature::has_object, "object");
  check_kind(alpha.un, &Signature::has_unary, "unary");
  check_kind(alpha.bin, &Signature::has_binary, "binary");
  // atom-level injectivity across overrides and symbol images; atoms
  // outside the map's domain simply do not transport
  std::set<std::string> seen;
  for (const auto& atom_text : sig.ground_atoms()) {
    GroundAtom g = parse_atom(atom_text);
    std::optional<GroundAtom> img;
    try {
      img = transport_atom(alpha, g);
    } catch (const AnalogyError&) {
      continue;
    }
    if (!seen.insert(img->text()).second)
      throw AnalogyError("injectivity violation on atom " + img->text());
  }
}

GroundAtom transport_atom(const AnalogyMap& alpha, const GroundAtom& atom) {
  auto it = alpha.overrides.find(atom);
  if (it != alpha.overrides.end()) return it->second;
  GroundAtom out;
  out.binary = atom.binary;
  out.pred = atom.binary ? image(alpha.bin, atom.pred, "binary")
                         : image(alpha.un, atom.pred, "unary");
  out.a = image(alpha.obj, atom.a, "object");
  if (atom.binary) out.b = image(alpha.obj, atom.b, "object");
  return out;
}

Formula transport(const AnalogyMap& alpha, const Formula& phi) {
  switch (phi.kind) {
    case Formula::Kind::Atom:
      return Formula::make_atom(transport_atom(alpha, parse_atom(phi.atom)).text());
    case Formula::Kind::Top:
    case Formula::Kind::Bot:
      return phi;
    default: {
      Formula out;
      out.kind = phi.kind;
      for (const auto& k : phi.kids) out.kids.push_back(transport(alpha, k));
      return out;
    }
  }
}

Supports supports(const AnalogyMap& alpha, const std::vector<Formula>& facts,
                  const KnowledgeState& v) {
  Supports s;
  for (const auto& phi : facts) {
    auto vphi = tri_eval(phi, v);
    if (!vphi) continue;  // unknown sources are out of scope
    Formula img = transport(alpha, phi);
    auto vimg = tri_eval(img, v);
    if (vimg && *vimg == *vphi)
      s.plus.push_back(phi);
    else if (vimg)
      s.minus.push_back(phi);
    else
      s.question.push_back(phi);
  }
  return s;
}

ConjectureResult conjecture(const AnalogyMap& alpha, const Formula& phi,
                            const KnowledgeState& v) {
  auto vphi = tri_eval(phi, v);
  if (!vphi) throw AnalogyError("source value unknown; not in the question support");
  Formula img = transport(alpha, phi);
  if (tri_eval(img, v))
    throw AnalogyError("target value already known; not in the question support");
  return {img, *vphi};
}

AnalogyMap combine(const AnalogyMap& alpha, const AnalogyMap& beta,
                   const std::set<std::string>& first_objects, const Signature& sig) {
  AnalogyMap out;
  out.name = alpha.name + "+" + beta.name;
  // object images must agree: objects cannot be split between two
  // injective atom maps without breaking functionality
  for (const auto& [o, img] : alpha.obj) {
    auto it = beta.obj.find(o);
    if (it != beta.obj.end() && it->second != img && !first_objects.count(o))
      throw AnalogyError("overlap conflict on object " + o);
    out.obj[o] = img;
  }
  for (const auto& [o, img] : beta.obj)
    if (!out.obj.count(o)) out.obj[o] = img;

  auto merge_syms = [&](const std::map<std::string, std::string>& a,
                        const std::map<std::string, std::string>& b,
                        std::map<std::string, std::string>& dst) {
    for (const auto& [s, img] : a) dst[s] = img;
    for (const auto& [s, img] : b)
      if (!dst.count(s)) dst[s] = img;
  };
  merge_syms(alpha.un, beta.un, out.un);
  merge_syms(alpha.bin, beta.bin, out.bin);

  // piecewise atoms: where the symbol images disagree, the splitter
  // decides which map's transport the atom follows
  for (const auto& atom_text : sig.ground_atoms()) {
    GroundAtom g = parse_atom(atom_text);
    bool a_has, b_has;
    GroundAtom ia, ib;
    try {
      ia = transport_atom(alpha, g);
      a_has = true;
    } catch (const AnalogyError&) {
      a_has = false;
    }
    try {
      ib = transport_atom(beta, g);
      b_has = true;
    } catch (const AnalogyError&) {
      b_has = false;
    }
    if (!a_has || !b_has) continue;
    if (ia == ib) continue;
    bool in_first = first_objects.count(g.a) && (!g.binary || first_objects.count(g.b));
    bool in_second = !first_objects.count(g.a) && (!g.binary || !first_objects.count(g.b));
    if (in_first)
      out.overrides[g] = ia;
    else if (in_second)
      out.overrides[g] = ib;
    else
      throw AnalogyError("overlap conflict: the splitter does not separate " + g.text());
  }
  validate_map(out, sig);
  return out;
}

// ---------------------------------------------------------------------------
// Selection

std::vector<std::string> best_maps(const AnalogySpace& space) {
  if (space.maps.empty()) throw AnalogyError("empty analogy space");
  std::set<std::pair<std::string, std::string>> better(space.better.begin(),
                                                       space.better.end());
  for (const auto& [b, w] : better) {
    if (b == w) throw AnalogyError("preference must be irreflexive");
    if (better.count({w, b})) throw AnalogyError("preference must be acyclic");
  }
  std::vector<std::string> best;
  for (const auto& m : space.maps) {
    bool beaten = false;
    for (const auto& other : space.maps)
      if (better.count({other.name, m.name})) beaten = true;
    if (!beaten) best.push_back(m.name);
  }
  return best;
}

std::map<std::string, Answer> sceptical_consequence(const AnalogySpace& space,
                                                    const KnowledgeState& v,
                                                    const std::vector<Formula>& queries) {
  auto best = best_maps(space);
  std::map<std::string, Answer> out;
  for (const auto& q : queries) {
    std::string key = render(q);
    auto known = tri_eval(q, v);
    if (known) {
      out[key] = *known ? Answer::True : Answer::False;
      continue;
    }
    bool all_opined = true;
    std::optional<bool> agreed;
    bool conflict = false;
    for (const auto& m : space.maps) {
      if (std::find(best.begin(), best.end(), m.name) == best.end()) continue;
      // invert the transport: find a known source fact mapping onto q
      std::optional<bool> opinion;
      for (const auto& [atom, value] : v) {
        Formula src = Formula::make_atom(atom);
        try {
          Formula img = transport(m, src);
          if (img == q) {
            opinion = value;
            break;
          }
        } catch (const AnalogyError&) {
          continue;
        }
      }
      if (!opinion) {
        all_opined = false;
        break;
      }
      if (agreed && *agreed != *opinion) conflict = true;
      agreed = opinion;
    }
    if (!all_opined || conflict || !agreed)
      out[key] = Answer::Undecided;
    else
      out[key] = *agreed ? Answer::True : Answer::False;
  }
  return out;
}

SupportDegree support_degree(long n, long r, long s) {
  if (n < 0 || r < 0 || s < 0) throw AnalogyError("supports must be nonnegative");
  SupportDegree d;
  d.degenerate = n == 0 && r == 0 && s == 0;
  d.p = Rat(n, n + r + s + 1);
  return d;
}

sz::MuCheck mu_property_report(int n, const std::function<sz::Mask(sz::Mask)>& mu) {
  return sz::check_mu_properties(n, mu);
}

}  // namespace ordlogic::ana
