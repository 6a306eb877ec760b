#pragma once

#include "ordlogic/analogy.hpp"
#include "ordlogic/poset.hpp"
#include "ordlogic/rational.hpp"
#include "ordlogic/reliability.hpp"
#include "ordlogic/yablo.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace ordlogic::io {

struct ParseError : std::runtime_error {
  int line;
  ParseError(const std::string& msg, int line_no)
      : std::runtime_error("line " + std::to_string(line_no) + ": " + msg),
        line(line_no) {}
};

struct InvariantViolation : std::runtime_error {
  std::string invariant;  // e.g. "CycleDetected"
  InvariantViolation(std::string name, const std::string& msg)
      : std::runtime_error(name + ": " + msg), invariant(std::move(name)) {}
};

// Poset text format: `elt NAME`, `lt A B`, optional `bottom NAME` /
// `top NAME`, `#` comments. The closure is computed on load.
Poset load_poset(std::istream& in);
Poset load_poset_file(const std::string& path);
std::string save_poset(const Poset& p);  // canonical: sorted, full closure

// The same element/pair surface read as a preference relation:
// `lt A B` declares B to be preferred away from A (B beats A).
sz::PrefStructure load_pref(std::istream& in);
sz::PrefStructure load_pref_file(const std::string& path);

// System file: `atom NAME` declares a free atom, `NAME = FORMULA`
// declares a denotation; all referenced atoms must be declared.
yb::DenotationSystem load_system(std::istream& in);
yb::DenotationSystem load_system_file(const std::string& path);
std::string save_system(const yb::DenotationSystem& sys);

// CSV distance matrix: header row names the universe; entries are
// rationals ("p/q", integers or decimals); must be symmetric with a
// zero diagonal.
struct DistanceMatrix {
  std::vector<std::string> universe;
  std::map<std::pair<std::string, std::string>, Rat> d;
  Rat operator()(const std::string& a, const std::string& b) const;
};
DistanceMatrix load_distance_csv(std::istream& in);
DistanceMatrix load_distance_csv_file(const std::string& path);

// ---------------------------------------------------------------------------
// Minimal TOML subset: comments, [table], [[table array]], and
// key = string | integer | rational-string | bool | [scalar array].
// Enough for scenario and case files; documented in the README.

struct TomlValue {
  std::variant<std::string, long long, bool, std::vector<std::string>> v;
  bool is_string() const { return std::holds_alternative<std::string>(v); }
  const std::string& str() const { return std::get<std::string>(v); }
  long long integer() const { return std::get<long long>(v); }
  bool boolean() const { return std::get<bool>(v); }
  const std::vector<std::string>& array() const {
    return std::get<std::vector<std::string>>(v);
  }
  Rat rational() const;
};

struct TomlTable {
  std::map<std::string, TomlValue> values;
  bool has(const std::string& key) const { return values.count(key) != 0; }
  const TomlValue& at(const std::string& key) const;
};

struct TomlDoc {
  TomlTable root;
  std::map<std::string, std::vector<TomlTable>> arrays;  // [[name]] entries
};

TomlDoc parse_toml(std::istream& in);
TomlDoc parse_toml_file(const std::string& path);

// ---------------------------------------------------------------------------
// Scenario files (reliability)

struct OpinionEvent {
  int round = 0;  // applied after this round (1-based); 0 = before any
  rb::PeerOpinion opinion;
};

struct Scenario {
  rb::AggregatorState state;
  rb::Network network;
  std::vector<std::map<std::string, Rat>> rounds;
  std::vector<std::map<std::string, Rat>> epsilons;  // per round, may be empty
  std::vector<OpinionEvent> opinions;
};

Scenario load_scenario(const TomlDoc& doc);
Scenario load_scenario_file(const std::string& path);

// ---------------------------------------------------------------------------
// Case files (analogy)

struct AnalogyCase {
  ana::Signature signature;
  ana::KnowledgeState knowledge;
  ana::AnalogySpace space;
  std::vector<Formula> queries;
};

AnalogyCase load_case(const TomlDoc& doc);
AnalogyCase load_case_file(const std::string& path);

// Stable digest of input bytes for the JSON report envelope.
std::string fnv1a_digest(const std::string& bytes);

std::string read_file(const std::string& path);

}  // namespace ordlogic::io
