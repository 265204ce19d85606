#pragma once

#include <array>
#include <optional>
#include <span>
#include <vector>

#include "qdba/protocol/checks.hpp"
#include "qdba/protocol/command_vector.hpp"
#include "qdba/protocol/index_scheme.hpp"

namespace qdba::protocol {

/// A claim broadcast to every other lieutenant after rounds 1 and 2.
struct RoundMessage {
  int sender = 0;
  int round = 1;
  Decision decision = Decision::Abort;
  // Round 1: exactly the sender's own command vector.
  // Round 2: the sender's vector plus every peer vector it accepted.
  std::vector<CommandVector> proofs;
  // The sender's full record; only attached to Abort claims.
  std::optional<BitVector> bitvector_proof;
};

struct LieutenantState {
  int id = 0;
  BitVector record;       // l_i
  Bit order = 0;          // c, as received from the commander
  CommandVector vector;   // v, as received from the commander
  std::array<std::optional<Decision>, 3> decisions{};
  // Set when an Abort claim was checked against an own vector with no
  // revealed tuples (check_lt_bv passes vacuously).
  bool vacuous_bitvector_check = false;
};

struct StepResult {
  Decision decision = Decision::Abort;
  RoundMessage outbox;
};

/// Runs one round of the loyal lieutenant algorithm.
///
/// `inbox` must hold exactly one message from every peer for each round
/// before `round`; anything else is a ProtocolDesyncError. Round 3's outbox
/// carries the final decision and no proofs.
StepResult lieutenant_step(const IndexScheme& scheme, LieutenantState& state, int round,
                           std::span<const RoundMessage> inbox, const CheckTolerances& tol);

/// Whether lieutenant i accepts vector v as genuine commander material:
/// check_alice for its own vector, check_lt_cv for a peer's.
bool vector_consistent(const IndexScheme& scheme, const LieutenantState& state,
                       const CommandVector& v, const CheckTolerances& tol);

/// Whether a round-1 claim is backed by its proofs.
///
/// A 0/1 claim needs the sender's own vector, decoding to the claimed value
/// and passing check_lt_cv. An Abort claim needs a bit vector that passes
/// check_lt_bv and on which the sender's own vector actually fails
/// check_alice.
bool claim_validated(const IndexScheme& scheme, LieutenantState& state, const RoundMessage& msg,
                     const CheckTolerances& tol);

}  // namespace qdba::protocol
