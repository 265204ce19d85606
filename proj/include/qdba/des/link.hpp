#pragma once

#include <optional>
#include <variant>
#include <vector>

#include "qdba/des/rng.hpp"
#include "qdba/quantum/channel.hpp"
#include "qdba/quantum/density_matrix.hpp"

namespace qdba::des {

enum class LossMode { None, Heralded, Unheralded };

struct LossRule {
  double survival = 1.0;  // probability the qubit makes it through
};

using NoiseHook = std::variant<quantum::KrausChannel, LossRule>;

struct QuantumLink {
  int from = 0;
  int to = 0;
  double delay = 0.0;  // seconds per transmission
  std::vector<NoiseHook> hooks;  // applied in order
  LossMode loss_mode = LossMode::None;
};

struct Arrival {
  // The transmitted state after the hooks. If the qubit was lost this is the
  // partner's reduced state (now qubit 0), or empty when nothing is left.
  std::optional<quantum::DensityMatrix> state;
  bool lost = false;
  double arrival_time = 0.0;
};

/// Sends qubit `target` of `state` across `link`, starting at `now`.
///
/// Kraus hooks act on the target; loss rules are sampled only when the link
/// has a loss mode. Hooks after a loss are skipped.
Arrival transmit_qubit(const QuantumLink& link, quantum::DensityMatrix state, int target,
                       RngStream& rng, double now);

}  // namespace qdba::des
