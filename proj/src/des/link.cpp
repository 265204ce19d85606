#include "qdba/des/link.hpp"

#include <utility>

#include "qdba/error.hpp"

namespace qdba::des {

Arrival transmit_qubit(const QuantumLink& link, quantum::DensityMatrix state, int target,
                       RngStream& rng, double now) {
  if (link.delay < 0.0) throw ParameterError("link delay must be non-negative");
  Arrival out;
  out.arrival_time = now + link.delay;
  for (const NoiseHook& hook : link.hooks) {
    if (const auto* channel = std::get_if<quantum::KrausChannel>(&hook)) {
      state = quantum::apply_channel(state, *channel, target);
      continue;
    }
    const auto& loss = std::get<LossRule>(hook);
    if (link.loss_mode == LossMode::None) continue;
    if (!rng.bernoulli(loss.survival)) {
      out.lost = true;
      if (state.num_qubits() == 2) out.state = quantum::lose_qubit(state, target);
      return out;
    }
  }
  out.state = std::move(state);
  return out;
}

}  // namespace qdba::des
