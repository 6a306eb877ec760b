#include "ordlogic/reliability.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

namespace ordlogic::rb {

AgentRecord& AggregatorState::agent(const std::string& id) {
  for (auto& a : agents)
    if (a.id == id) return a;
  throw ReliabilityError("unknown agent: " + id);
}

const AgentRecord& AggregatorState::agent(const std::string& id) const {
  for (const auto& a : agents)
    if (a.id == id) return a;
  throw ReliabilityError("unknown agent: " + id);
}

namespace {

Rat rat_abs(const Rat& r) { return r < Rat(0) ? -r : r; }

// replication counts: scale the rhos to their smallest integer ratio
std::map<std::string, Rat> replication_weights(const AggregatorState& state,
                                               const std::map<std::string, Rat>& readings) {
  long long lcm = 1;
  for (const auto& [id, r] : readings) {
    long long den = state.agent(id).rho.denominator();
    lcm = std::lcm(lcm, den);
  }
  long long gcd = 0;
  for (const auto& [id, r] : readings) {
    const Rat& rho = state.agent(id).rho;
    long long count = rho.numerator() * (lcm / rho.denominator());
    gcd = std::gcd(gcd, count);
  }
  std::map<std::string, Rat> w;
  for (const auto& [id, r] : readings) {
    const Rat& rho = state.agent(id).rho;
    long long count = rho.numerator() * (lcm / rho.denominator());
    w[id] = gcd == 0 ? Rat(1) : Rat(count / gcd);
  }
  return w;
}

}  // namespace

RoundResult run_round(AggregatorState& state, const std::map<std::string, Rat>& readings,
                      const RoundConfig& config) {
  if (readings.empty()) throw ReliabilityError("no readings");
  for (const auto& [id, r] : readings) state.agent(id);  // UnknownAgent check

  RoundResult res;
  std::map<std::string, Rat> w;
  if (!config.weighted) {
    for (const auto& [id, r] : readings) w[id] = Rat(1);
  } else if (config.weights_mode == WeightsMode::RhoWeighted) {
    for (const auto& [id, r] : readings) w[id] = state.agent(id).rho;
  } else {
    w = replication_weights(state, readings);
  }

  Rat wsum(0), rsum(0);
  for (const auto& [id, r] : readings) {
    wsum += w[id];
    rsum += w[id] * r;
  }
  if (wsum == Rat(0)) throw ReliabilityError("all weights are zero");

  if (config.history && state.has_mean) {
    res.mean = (state.inertia * state.mean + rsum) / (state.inertia + wsum);
    res.inertia_after = state.inertia + wsum;
  } else {
    res.mean = rsum / wsum;
    res.inertia_after = wsum;
  }

  Rat dsum(0);
  for (const auto& [id, r] : readings) {
    Rat d = rat_abs(r - res.mean);
    res.delta[id] = d;
    dsum += d;
  }
  res.delta_mean = dsum / Rat(static_cast<long long>(readings.size()));

  for (const auto& [id, r] : readings) {
    AgentRecord& a = state.agent(id);
    Rat di = res.delta[id];
    if (config.threshold && rat_abs(di - res.delta_mean) <= *config.threshold) {
      res.skipped_updates.push_back(id + " (below threshold)");
      res.rho_after[id] = a.rho;
      continue;
    }
    Rat next;
    switch (config.policy) {
      case Policy::Example:
        next = di <= res.delta_mean ? Rat(2, 3) : Rat(1, 3);
        break;
      case Policy::Proportional:
        next = clamp01(a.rho + config.lambda * (res.delta_mean - di) /
                                   (res.delta_mean + Rat(1)));
        break;
    }
    if (config.eps_aware && a.eps && next < a.rho &&
        di <= (Rat(1) - *a.eps) * rat_abs(res.mean)) {
      // the agent announced its own imprecision; waive the penalty
      res.skipped_updates.push_back(id + " (declared eps covers deviation)");
      res.rho_after[id] = a.rho;
      continue;
    }
    a.rho = clamp01(next);
    res.rho_after[id] = a.rho;
  }

  if (config.audit) {
    for (const auto& [id, r] : readings) {
      const AgentRecord& a = state.agent(id);
      // allowed relative deviation is 1 - rho
      if (res.delta[id] > (Rat(1) - a.rho) * rat_abs(res.mean))
        res.audit_flags.push_back(id);
    }
  }

  state.mean = res.mean;
  state.inertia = res.inertia_after;
  state.has_mean = true;
  return res;
}

Rat channel_combine(Rat rho, Rat rhoc) {
  Rat combined = rho * rhoc;
  if (combined > std::min(rho, rhoc))
    throw ReliabilityError("internal: combination exceeded its factors");
  return combined;
}

BreakdownResult channel_breakdown(Rat rho, Rat rhoc, Rat target) {
  Rat old = rho * rhoc;
  if (old == Rat(0)) throw ReliabilityError("zero combined reliability");
  Rat factor = rational_sqrt(target / old);
  BreakdownResult out;
  out.rho2 = rho * factor;
  out.rhoc2 = rhoc * factor;
  if (out.rho2 > Rat(1) || out.rhoc2 > Rat(1)) out.clamped = true;
  out.rho2 = clamp01(out.rho2);
  out.rhoc2 = clamp01(out.rhoc2);
  out.recombined = out.rho2 * out.rhoc2;
  out.remainder = target - out.recombined;
  return out;
}

// ---------------------------------------------------------------------------
// Broadcast

StepResult broadcast_step(const Network& net, const BroadcastMessage& msg,
                          const std::string& to, Rat value, bool polite_sender) {
  if (msg.history.empty()) throw ReliabilityError("message without history");
  if (!net.links.count(to)) throw ReliabilityError("undeclared agent: " + to);
  auto seen = [&](const std::string& id) {
    for (const auto& [agent, v] : msg.history)
      if (agent == id) return true;
    return false;
  };
  StepResult res;
  if (seen(to)) {
    if (polite_sender) {
      res.outcome = BroadcastOutcome::Suppressed;
    } else {
      res.outcome = BroadcastOutcome::CycleDetected;
      res.cycle_agent = to;
    }
    res.message = msg;
    return res;
  }
  res.outcome = BroadcastOutcome::Forwarded;
  res.message = msg;
  res.message.history.emplace_back(to, value);
  return res;
}

SimulationResult broadcast_simulate(const AggregatorState& state, const Network& net,
                                    const std::string& origin, Rat value,
                                    bool polite_sender) {
  SimulationResult res;
  std::deque<BroadcastMessage> queue;
  queue.push_back(BroadcastMessage{{{origin, value}}});
  std::set<std::string> cyclers;
  while (!queue.empty()) {
    BroadcastMessage msg = queue.front();
    queue.pop_front();
    const std::string& holder = msg.history.back().first;
    auto it = net.links.find(holder);
    if (it == net.links.end()) continue;
    for (const auto& to : it->second) {
      StepResult step = broadcast_step(net, msg, to, value, polite_sender);
      switch (step.outcome) {
        case BroadcastOutcome::Forwarded:
          ++res.forwarded;
          queue.push_back(step.message);
          break;
        case BroadcastOutcome::CycleDetected:
          ++res.cycles;
          res.cycle_agents.push_back(step.cycle_agent);
          cyclers.insert(step.cycle_agent);
          for (const auto& [agent, v] : msg.history) cyclers.insert(agent);
          break;
        case BroadcastOutcome::Suppressed:
          ++res.suppressed;
          break;
      }
    }
  }
  if (!cyclers.empty()) {
    ContractionProposal prop;
    Rat sum(0);
    for (const auto& id : cyclers) {
      prop.group.push_back(id);
      sum += state.agent(id).rho;
    }
    prop.mean_rho = sum / Rat(static_cast<long long>(cyclers.size()));
    res.proposal = prop;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Peer opinions

OpinionOutcome peer_opinion(AggregatorState& state, const PeerOpinion& op, Rat lambda,
                            int k) {
  if (op.source == op.target) throw ReliabilityError("self-opinions are not allowed");
  AgentRecord& src = state.agent(op.source);
  AgentRecord& dst = state.agent(op.target);
  OpinionOutcome out;

  auto ordered = [](const std::string& a, const std::string& b) {
    return a < b ? std::pair(a, b) : std::pair(b, a);
  };
  auto pair_key = ordered(op.source, op.target);

  if (op.eps > dst.rho) ++state.praise[{op.source, op.target}];
  if (op.eps < dst.rho) ++state.attack[{op.source, op.target}];
  int mutual_praise = std::min(state.praise[{op.source, op.target}],
                               state.praise[{op.target, op.source}]);
  int mutual_attack = std::min(state.attack[{op.source, op.target}],
                               state.attack[{op.target, op.source}]);
  if (mutual_praise >= k) state.crony_pairs.insert(pair_key);
  if (mutual_attack >= k) state.infight_pairs.insert(pair_key);
  out.cronyism = state.crony_pairs.count(pair_key) != 0;
  out.infighting = state.infight_pairs.count(pair_key) != 0;

  Rat w = lambda * src.rho;
  if (out.cronyism || out.infighting) {
    w /= Rat(2);
    out.weight_halved = true;
  }
  dst.rho = clamp01((Rat(1) - w) * dst.rho + w * clamp01(op.eps));
  out.rho_target_after = dst.rho;
  return out;
}

}  // namespace ordlogic::rb
