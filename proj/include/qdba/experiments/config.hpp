#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "qdba/des/link.hpp"
#include "qdba/protocol/checks.hpp"
#include "qdba/protocol/shot.hpp"
#include "qdba/quantum/channel.hpp"

namespace qdba::experiments {

/// A validated experiment description. List-valued fields are swept as a
/// cartesian product (Pauli points are zipped, see parse_config).
struct SweepConfig {
  std::vector<int> n{3};
  std::vector<int> t{0};
  std::vector<int> m{16};
  std::string profile = "logical";

  std::vector<quantum::PauliParams> pauli{quantum::PauliParams{}};

  std::vector<double> t1_s{0.05e-3};
  std::vector<double> t2_s;  // empty: T2 = T1 for each T1
  std::vector<double> transit_s{0.0};
  std::optional<double> gamma2;

  std::vector<double> alpha_db_per_km{0.02};
  std::vector<double> length_km{1.0};
  des::LossMode loss_mode = des::LossMode::Unheralded;

  bool commander_loyal = true;
  int runs = 10;
  int shots = 30;
  std::uint64_t seed = 0;
  protocol::CheckTolerances tolerances;
  double classical_delay_s = 0.0;
  protocol::TraitorPlacement placement = protocol::TraitorPlacement::Random;
  bool per_shot_csv = false;
  std::string output = "out";

  // Effective key/value pairs after overrides, sorted by key (for manifests).
  std::vector<std::pair<std::string, std::string>> resolved;
  std::vector<std::string> warnings;
};

using Overrides = std::vector<std::pair<std::string, std::string>>;

/// Parses the flat `key = value` format.
///
/// One key per line; `#` starts a comment. Values are scalars, comma lists
/// (`3, 6, 11`) or inclusive ranges (`16:160:16`). Keys:
///   n, t, m, profile (logical|superconducting|photonic),
///   p0, px, py, pz, ternary_resolution,
///   t1_s, t2_s, transit_s, gamma2,
///   alpha_db_per_km, length_km, loss_mode (heralded|unheralded),
///   commander_loyal, runs, shots, seed, theta, epsilon, classical_delay_s,
///   traitor_placement (random|lowest), per_shot_csv, output.
/// `overrides` replace same-named keys from the text. Throws ConfigError
/// naming the offending key.
SweepConfig parse_config(std::string_view text, const Overrides& overrides = {});

/// Parses one `key=value` command-line assignment.
std::pair<std::string, std::string> parse_assignment(std::string_view text);

struct SweepPoint {
  protocol::ShotConfig shot;
};

std::vector<SweepPoint> expand_points(const SweepConfig& config);

/// Shortest round-trip decimal form; identical on every platform.
std::string format_double(double value);

}  // namespace qdba::experiments
