#include "qdba/protocol/strategy.hpp"

#include "qdba/error.hpp"

namespace qdba::protocol {

StepResult LoyalLieutenant::step(int round, std::span<const RoundMessage> inbox) {
  return lieutenant_step(scheme_, state_, round, inbox, tol_);
}

StepResult RandomTraitor::step(int round, std::span<const RoundMessage> inbox) {
  if (round < 1 || round > 3) throw ParameterError("round must be 1, 2 or 3");
  static constexpr Decision kChoices[] = {Decision::Zero, Decision::One, Decision::Abort};
  const Decision d = kChoices[rng_.uniform_int(3)];
  state_.decisions[static_cast<std::size_t>(round - 1)] = d;

  RoundMessage out;
  out.sender = state_.id;
  out.round = round;
  out.decision = d;
  if (round < 3) {
    out.proofs.push_back(state_.vector);
    if (round == 2) {
      for (const RoundMessage& msg : inbox) {
        if (msg.round != 1) continue;
        for (const CommandVector& v : msg.proofs) {
          if (v.recipient == msg.sender) out.proofs.push_back(v);
        }
      }
    }
    if (d == Decision::Abort) out.bitvector_proof = state_.record;
  }
  return {d, std::move(out)};
}

std::unique_ptr<LieutenantBehavior> make_lieutenant(StrategyKind kind, const IndexScheme& scheme,
                                                    LieutenantState state,
                                                    const CheckTolerances& tol,
                                                    des::RngStream rng) {
  switch (kind) {
    case StrategyKind::Loyal:
      return std::make_unique<LoyalLieutenant>(scheme, std::move(state), tol);
    case StrategyKind::RandomTraitor:
      return std::make_unique<RandomTraitor>(scheme, std::move(state), std::move(rng));
  }
  throw ParameterError("unknown strategy");
}

std::vector<CommandIssue> issue_commands(const BitVector& commander_record,
                                         const IndexScheme& scheme, bool loyal,
                                         des::RngStream& rng) {
  std::vector<CommandIssue> out;
  out.reserve(static_cast<std::size_t>(scheme.lieutenants()));
  const auto shared_order = static_cast<Bit>(rng.uniform_int(2));
  for (int i = 0; i < scheme.lieutenants(); ++i) {
    const Bit order = loyal ? shared_order : static_cast<Bit>(rng.uniform_int(2));
    out.push_back({order, build_command_vector(commander_record, scheme, i, order)});
  }
  return out;
}

}  // namespace qdba::protocol
