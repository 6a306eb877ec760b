#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlogic::sz {

// Subsets of the universe are bitmasks; universes stay small (<= 20).
using Mask = uint32_t;

struct SizeLogicError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Preference structure: beats(w, l) reads "w is preferred away from l",
// i.e. l is not minimal when w is present. mu(A) collects the unbeaten
// members of A. Construction rejects relations with beat-cycles, which
// is exactly the condition for mu(A) to be nonempty on every A.
class PrefStructure {
 public:
  static PrefStructure build(std::vector<std::string> universe,
                             const std::vector<std::pair<std::string, std::string>>& beats);

  int size() const { return static_cast<int>(universe_.size()); }
  const std::vector<std::string>& universe() const { return universe_; }
  int index_of(const std::string& name) const;
  bool beats(int winner, int loser) const;
  Mask mu(Mask a) const;
  Mask full() const { return (Mask{1} << size()) - 1; }

  Mask mask_of(const std::vector<std::string>& names) const;
  std::string show(Mask m) const;

 private:
  std::vector<std::string> universe_;
  std::vector<Mask> beaten_by_;  // beaten_by_[x] = everyone who beats x
};

struct RelationProps {
  bool transitive = true, smooth = true, ranked = true;
  std::string transitive_witness, smooth_witness, ranked_witness;
};

RelationProps relation_props(const PrefStructure& ps);

// ---------------------------------------------------------------------------
// Filters / ideals / medium sets per base set

enum class Cls { Small, Big, Medium };

// Either principal (derived from a preference structure: small means
// missing mu(base)) or an explicit ideal table validated against
// (I1)-(I3) plus the filter correspondence.
class IdealFamily {
 public:
  static IdealFamily principal(PrefStructure ps);
  static IdealFamily explicit_family(int n, std::map<Mask, std::set<Mask>> ideals);

  int size() const { return n_; }
  bool has_mu() const { return ps_.has_value(); }
  const PrefStructure& pref() const { return *ps_; }
  Mask mu(Mask base) const;

  bool small(Mask base, Mask a) const;  // a in I(base)
  bool big(Mask base, Mask a) const;    // a in F(base)
  Cls classify(Mask base, Mask a) const;

 private:
  int n_ = 0;
  std::optional<PrefStructure> ps_;
  std::map<Mask, std::set<Mask>> ideals_;  // explicit case
};

// ---------------------------------------------------------------------------
// Coherence properties

struct PropVerdict {
  bool holds = true;
  std::string witness;
};

struct CoherenceReport {
  PropVerdict coh1, coh2, coh2a, coh_rk;
  PropVerdict mu_pr, mu_cum, mu_rk;  // only when the family is principal
  bool fact22a_consistent = true;    // Coh2 and Coh2a agree
  bool coher_consistent = true;      // the mu/coh equivalences agree
};

CoherenceReport coherence_report(const IdealFamily& fam);

// ---------------------------------------------------------------------------
// Size comparison relations

enum class SizeRel { SmallIn, Less, LessPrime, Incomparable };

struct SizeVerdict {
  SizeRel rel = SizeRel::Incomparable;
  std::optional<int> chain_n;  // minimal chain length when requested
};

bool less_at(const IdealFamily& fam, Mask a, Mask b, Mask base);        // A <_X B
bool less_prime_at(const IdealFamily& fam, Mask a, Mask b, Mask base);  // A <'_X B
bool less(const IdealFamily& fam, Mask a, Mask b);        // base = A u B
bool less_prime(const IdealFamily& fam, Mask a, Mask b);  // base = A u B

SizeVerdict size_compare(const IdealFamily& fam, Mask a, Mask b,
                         std::optional<Mask> base = std::nullopt,
                         bool with_chains = false);

// Minimal n with A <|_n B (chains of small-in steps); nullopt when none.
std::optional<int> smallin_chain(const IdealFamily& fam, Mask a, Mask b);

// ---------------------------------------------------------------------------
// mu property checks (shared with the analogy module)

struct MuCheck {
  PropVerdict mu_subset, mu_pr, mu_cum, mu_eq;
  bool all(bool include_eq) const {
    return mu_subset.holds && mu_pr.holds && mu_cum.holds && (!include_eq || mu_eq.holds);
  }
};

MuCheck check_mu_properties(int n, const std::function<Mask(Mask)>& mu);

// ---------------------------------------------------------------------------
// Fuzz harness

struct FuzzReport {
  std::string suite;
  long structures = 0;
  long instances = 0;  // hypothesis-satisfying cases actually checked
  long counterexamples = 0;
  std::string first_witness;
};

// Suites: nochange, nochange2, nochange3, subset, subset2, tweety,
// lt-trans (Fact <(2)), trans-rank. Smooth structures are sampled for
// everything except trans-rank, which samples ranked ones.
FuzzReport fact_fuzz(const std::string& suite, long structures, int max_universe,
                     uint64_t seed);

std::vector<std::string> fuzz_suites();

}  // namespace ordlogic::sz
