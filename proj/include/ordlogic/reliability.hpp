#pragma once

#include "ordlogic/rational.hpp"

#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace ordlogic::rb {

struct ReliabilityError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct AgentRecord {
  std::string id;
  Rat rho = Rat(1, 2);
  std::optional<Rat> eps;  // self-reported reliability, per message
};

struct ChannelSpec {
  std::string id;
  Rat rhoc = Rat(1, 2);
};

// Single-writer state machine; a full round mutates it in one call.
struct AggregatorState {
  std::vector<AgentRecord> agents;
  std::vector<ChannelSpec> channels;
  Rat mean = Rat(0);
  Rat inertia = Rat(0);  // t: accumulated weight of the running mean
  bool has_mean = false;
  // peer-opinion bookkeeping
  std::map<std::pair<std::string, std::string>, int> praise, attack;
  std::set<std::pair<std::string, std::string>> crony_pairs, infight_pairs;

  AgentRecord& agent(const std::string& id);
  const AgentRecord& agent(const std::string& id) const;
};

enum class Policy { Example, Proportional };
enum class WeightsMode { RhoWeighted, CountReplication };

struct RoundConfig {
  bool weighted = false;   // Variant 2: rho-weighted mean
  bool history = false;    // Variant 3: blend with the running mean
  bool audit = false;      // Variant 4: flag out-of-band agents
  Policy policy = Policy::Example;
  WeightsMode weights_mode = WeightsMode::RhoWeighted;
  std::optional<Rat> threshold;  // skip updates below this discrepancy
  bool eps_aware = true;         // skip penalties covered by declared eps
  Rat lambda = Rat(1, 4);        // proportional-policy step
};

struct RoundResult {
  Rat mean;                        // m (after history blending if enabled)
  std::map<std::string, Rat> delta;
  Rat delta_mean;
  std::map<std::string, Rat> rho_after;
  Rat inertia_after;
  std::vector<std::string> audit_flags;      // Variant 4
  std::vector<std::string> skipped_updates;  // threshold / eps waivers
};

RoundResult run_round(AggregatorState& state, const std::map<std::string, Rat>& readings,
                      const RoundConfig& config);

// Serial combination of agent and channel reliability.
Rat channel_combine(Rat rho, Rat rhoc);

struct BreakdownResult {
  Rat rho2, rhoc2;
  Rat recombined;
  Rat remainder;  // target minus recombined (nonzero only when clamped)
  bool clamped = false;
};

// Splits a target combined reliability back onto both factors by a
// common multiplier; exact when target/old is a perfect rational square.
BreakdownResult channel_breakdown(Rat rho, Rat rhoc, Rat target);

// ---------------------------------------------------------------------------
// Broadcast with history

struct BroadcastMessage {
  std::vector<std::pair<std::string, Rat>> history;  // (agent, value) hops
};

struct Network {
  std::map<std::string, std::vector<std::string>> links;
};

enum class BroadcastOutcome { Forwarded, CycleDetected, Suppressed };

struct StepResult {
  BroadcastOutcome outcome;
  BroadcastMessage message;   // with the new hop when forwarded
  std::string cycle_agent;    // receiver that saw its own id
};

// Delivers the message to `to`; the receiver detects its own id in the
// history as a cycle. With polite_sender the delivery is suppressed at
// the sender instead.
StepResult broadcast_step(const Network& net, const BroadcastMessage& msg,
                          const std::string& to, Rat value, bool polite_sender = false);

struct ContractionProposal {
  std::vector<std::string> group;
  Rat mean_rho;
};

struct SimulationResult {
  long forwarded = 0, cycles = 0, suppressed = 0;
  std::vector<std::string> cycle_agents;
  std::optional<ContractionProposal> proposal;  // report only, never applied
};

// Deterministic FIFO flood from origin; every message terminates because
// histories grow and repeats are suppressed.
SimulationResult broadcast_simulate(const AggregatorState& state, const Network& net,
                                    const std::string& origin, Rat value,
                                    bool polite_sender = false);

// ---------------------------------------------------------------------------
// Peer opinions

struct PeerOpinion {
  std::string source, target;
  Rat eps;  // asserted reliability of the target
};

struct OpinionOutcome {
  Rat rho_target_after;
  bool cronyism = false;
  bool infighting = false;
  bool weight_halved = false;
};

// Blend rho_j with the asserted value, weighted by the source's own
// reliability; reciprocal praise/attack streaks get flagged and halve
// the blending weight for the pair.
OpinionOutcome peer_opinion(AggregatorState& state, const PeerOpinion& op,
                            Rat lambda = Rat(1, 4), int k = 3);

}  // namespace ordlogic::rb
