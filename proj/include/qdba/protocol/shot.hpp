#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <vector>

#include "qdba/des/rng.hpp"
#include "qdba/hardware/profile.hpp"
#include "qdba/protocol/checks.hpp"
#include "qdba/protocol/command_vector.hpp"

namespace qdba::protocol {

enum class TraitorPlacement { Random, Lowest };

struct ShotConfig {
  int players = 3;   // N, commander included
  int tuples = 16;   // M
  int traitors = 0;  // traitorous lieutenants; the commander is set separately
  TraitorPlacement placement = TraitorPlacement::Random;
  bool commander_loyal = true;
  hardware::HardwareProfile profile = hardware::LogicalProfile{};
  CheckTolerances tolerances;
  double classical_delay = 0.0;  // seconds per classical message
};

/// Throws ParameterError for N < 3, M < 1, T outside [0, N-1] or bad profile.
void validate(const ShotConfig& config);

struct LieutenantRecord {
  int id = 0;
  bool loyal = true;
  Bit order_received = 0;
  Decision decision = Decision::Abort;
  bool error = false;  // meaningful for loyal lieutenants only
};

struct ShotOutcome {
  std::size_t point = 0;
  std::uint64_t run = 0;
  std::uint64_t shot = 0;
  std::vector<std::uint64_t> rng_path;
  bool commander_loyal = true;
  std::optional<Bit> commander_order;  // loyal commander only
  std::vector<LieutenantRecord> lieutenants;
  std::size_t lost_qubits = 0;
  std::size_t heralded_retries = 0;
  bool vacuous_bitvector_check = false;
  double end_time = 0.0;
};

enum class TraceKind : std::uint8_t {
  EmitPair,
  EmitFiller,
  QubitArrival,
  CommandPhase,
  CommandDelivery,
  RoundStart,
  MessageDelivery,
};

struct TraceEntry {
  double time = 0.0;
  std::uint64_t seq = 0;
  TraceKind kind = TraceKind::EmitPair;
  int node = -1;
  std::int64_t detail = 0;
  friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

// Purpose labels appended after the node label when forking a shot stream.
inline constexpr std::uint64_t kPurposeTransit = 0;
inline constexpr std::uint64_t kPurposeMeasurement = 1;
inline constexpr std::uint64_t kPurposeOrders = 2;
inline constexpr std::uint64_t kPurposePlacement = 3;
inline constexpr std::uint64_t kPurposeStrategy = 4;

/// Runs one full protocol execution: distribution, measurement, the command
/// phase and three classical rounds, all on one event queue. Every random
/// draw comes from `shot_stream` forked by (node, purpose).
ShotOutcome run_shot(const ShotConfig& config, const des::RngStream& shot_stream,
                     std::vector<TraceEntry>* trace = nullptr);

inline ShotOutcome run_shot(const ShotConfig& config, std::uint64_t seed) {
  return run_shot(config, des::RngStream(seed));
}

}  // namespace qdba::protocol
