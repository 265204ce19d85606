#include "qdba/protocol/lieutenant.hpp"

#include <string>

#include "qdba/error.hpp"

namespace qdba::protocol {
namespace {

// Peer messages of one round, indexed by sender; throws on gaps or duplicates.
std::vector<const RoundMessage*> messages_for_round(const IndexScheme& scheme, int self,
                                                    int round,
                                                    std::span<const RoundMessage> inbox) {
  std::vector<const RoundMessage*> by_sender(static_cast<std::size_t>(scheme.lieutenants()),
                                             nullptr);
  for (const RoundMessage& msg : inbox) {
    if (msg.round != round) continue;
    if (msg.sender < 0 || msg.sender >= scheme.lieutenants() || msg.sender == self) {
      throw ProtocolDesyncError("lieutenant " + std::to_string(self) +
                                " got a round-" + std::to_string(round) +
                                " message from invalid sender " + std::to_string(msg.sender));
    }
    auto& slot = by_sender[static_cast<std::size_t>(msg.sender)];
    if (slot != nullptr) {
      throw ProtocolDesyncError("duplicate round-" + std::to_string(round) + " message from " +
                                std::to_string(msg.sender));
    }
    slot = &msg;
  }
  for (int j = 0; j < scheme.lieutenants(); ++j) {
    if (j != self && by_sender[static_cast<std::size_t>(j)] == nullptr) {
      throw ProtocolDesyncError("lieutenant " + std::to_string(self) + " is missing the round-" +
                                std::to_string(round) + " message from " + std::to_string(j));
    }
  }
  return by_sender;
}

const CommandVector* own_proof(const RoundMessage& msg) {
  for (const CommandVector& v : msg.proofs) {
    if (v.recipient == msg.sender) return &v;
  }
  return nullptr;
}

RoundMessage make_message(const LieutenantState& state, int round, Decision d,
                          std::vector<CommandVector> proofs) {
  RoundMessage out;
  out.sender = state.id;
  out.round = round;
  out.decision = d;
  out.proofs = std::move(proofs);
  if (d == Decision::Abort && round < 3) out.bitvector_proof = state.record;
  return out;
}

bool some_pair_contradicts(const std::vector<const CommandVector*>& accepted) {
  for (std::size_t a = 0; a < accepted.size(); ++a) {
    for (std::size_t b = a + 1; b < accepted.size(); ++b) {
      if (contradicts(*accepted[a], *accepted[b])) return true;
    }
  }
  return false;
}

}  // namespace

bool vector_consistent(const IndexScheme& scheme, const LieutenantState& state,
                       const CommandVector& v, const CheckTolerances& tol) {
  if (v.recipient == state.id) return check_alice(scheme, state.id, state.record, v, tol);
  if (v.recipient < 0 || v.recipient >= scheme.lieutenants()) return false;
  return check_lt_cv(scheme, state.id, state.record, v.recipient, v, tol);
}

bool claim_validated(const IndexScheme& scheme, LieutenantState& state, const RoundMessage& msg,
                     const CheckTolerances& tol) {
  const CommandVector* v_j = own_proof(msg);
  if (v_j == nullptr) return false;
  if (msg.decision != Decision::Abort) {
    return to_decision(decode_order(*v_j)) == msg.decision &&
           check_lt_cv(scheme, state.id, state.record, msg.sender, *v_j, tol);
  }
  if (!msg.bitvector_proof) return false;
  if (revealed_tuple_count(scheme, state.vector) == 0) state.vacuous_bitvector_check = true;
  if (!check_lt_bv(scheme, state.id, state.vector, msg.sender, *msg.bitvector_proof, tol)) {
    return false;
  }
  return !check_alice(scheme, msg.sender, *msg.bitvector_proof, *v_j, tol);
}

StepResult lieutenant_step(const IndexScheme& scheme, LieutenantState& state, int round,
                           std::span<const RoundMessage> inbox, const CheckTolerances& tol) {
  if (round < 1 || round > 3) throw ParameterError("round must be 1, 2 or 3");
  for (int r = 1; r < round; ++r) {
    if (!state.decisions[static_cast<std::size_t>(r - 1)]) {
      throw ProtocolDesyncError("round " + std::to_string(round) + " stepped before round " +
                                std::to_string(r));
    }
  }
  const Decision c = to_decision(state.order);

  if (round == 1) {
    const Decision d1 =
        check_alice(scheme, state.id, state.record, state.vector, tol) ? c : Decision::Abort;
    state.decisions[0] = d1;
    return {d1, make_message(state, 1, d1, {state.vector})};
  }

  const Decision d1 = *state.decisions[0];
  const auto round1 = messages_for_round(scheme, state.id, 1, inbox);

  if (round == 2) {
    const Decision opposite = c == Decision::One ? Decision::Zero : Decision::One;
    bool opposite_validated = false;
    bool unanimous = true;
    bool all_validated = true;
    std::optional<Decision> common;
    std::vector<CommandVector> justification{state.vector};
    for (const RoundMessage* msg : round1) {
      if (msg == nullptr) continue;
      const bool valid = claim_validated(scheme, state, *msg, tol);
      if (msg->decision == opposite && valid) opposite_validated = true;
      if (!common) common = msg->decision;
      if (*common != msg->decision) unanimous = false;
      if (!valid) all_validated = false;
      if (const CommandVector* v_j = own_proof(*msg);
          v_j != nullptr && vector_consistent(scheme, state, *v_j, tol)) {
        justification.push_back(*v_j);
      }
    }
    Decision d2 = d1;
    if (d1 == c && opposite_validated) {
      d2 = Decision::Abort;
    } else if (unanimous && all_validated && common) {
      d2 = *common;
    }
    state.decisions[1] = d2;
    return {d2, make_message(state, 2, d2, std::move(justification))};
  }

  const Decision d2 = *state.decisions[1];
  const auto round2 = messages_for_round(scheme, state.id, 2, inbox);
  Decision d3 = d2;
  if (d2 != Decision::Abort) {
    for (const RoundMessage* msg : round2) {
      if (msg == nullptr || msg->decision != Decision::Abort) continue;
      std::vector<const CommandVector*> accepted;
      for (const CommandVector& v : msg->proofs) {
        if (vector_consistent(scheme, state, v, tol)) accepted.push_back(&v);
      }
      if (some_pair_contradicts(accepted)) {
        d3 = Decision::Abort;
        break;
      }
    }
  }
  if (d3 != Decision::Abort && d2 != Decision::Abort) {
    for (const RoundMessage* msg : round1) {
      if (msg == nullptr || msg->decision == Decision::Abort || msg->decision == d1) continue;
      if (claim_validated(scheme, state, *msg, tol)) {
        d3 = Decision::Abort;
        break;
      }
    }
  }
  state.decisions[2] = d3;
  return {d3, make_message(state, 3, d3, {})};
}

}  // namespace qdba::protocol
