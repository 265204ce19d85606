#pragma once

#include <optional>
#include <string_view>
#include <variant>
#include <vector>

#include "qdba/des/link.hpp"
#include "qdba/protocol/index_scheme.hpp"
#include "qdba/quantum/channel.hpp"

namespace qdba::hardware {

/// Pauli noise on lieutenant qubits right before measurement.
struct LogicalProfile {
  quantum::PauliParams pauli;
};

/// Both halves of every pair travel `transit` seconds and pick up amplitude
/// damping followed by dephasing.
struct SuperconductingProfile {
  double t1 = 0.05e-3;
  double t2 = 0.05e-3;
  double transit = 0.0;
  // Replaces the T2-derived dephasing parameter when set.
  std::optional<double> gamma2_override;
};

/// Every photon crosses `length_km` of fiber and may be lost.
struct PhotonicProfile {
  double alpha_db_per_km = 0.02;
  double length_km = 1.0;
  des::LossMode loss_mode = des::LossMode::Unheralded;
};

using HardwareProfile = std::variant<LogicalProfile, SuperconductingProfile, PhotonicProfile>;

std::string_view profile_name(const HardwareProfile& profile);

/// Throws ParameterError / ConstraintError on invalid fields.
void validate(const HardwareProfile& profile);

enum class Side { Commander, Lieutenant };

/// The ordered hooks installed for one side. `transit` is used by the
/// superconducting profile only.
std::vector<des::NoiseHook> noise_hooks_for(const HardwareProfile& profile, Side side,
                                            double transit);

// Propagation speed of light in fiber.
inline constexpr double kFiberKmPerSecond = 2.0e5;

struct Network {
  des::QuantumLink commander_link;
  std::vector<des::QuantumLink> lieutenant_links;  // indexed by lieutenant id
  // Kraus hooks applied at the receiver right before its Z measurement.
  std::vector<des::NoiseHook> commander_pre_measurement;
  std::vector<des::NoiseHook> lieutenant_pre_measurement;
  des::LossMode loss_mode = des::LossMode::None;
};

/// Node ids: lieutenants 0..N-2, commander N-1, distributor N.
inline int commander_node(const protocol::IndexScheme& s) { return s.lieutenants(); }
inline int distributor_node(const protocol::IndexScheme& s) { return s.players(); }

Network build_network(const HardwareProfile& profile, const protocol::IndexScheme& scheme);

}  // namespace qdba::hardware
