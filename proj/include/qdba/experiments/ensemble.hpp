#pragma once

#include <vector>

#include "qdba/experiments/config.hpp"
#include "qdba/experiments/metrics.hpp"
#include "qdba/protocol/shot.hpp"

namespace qdba::experiments {

struct EnsembleResult {
  std::vector<SweepPoint> points;
  std::vector<MetricsRow> rows;  // one per point
  // outcomes[point] holds runs * shots entries ordered by (run, shot).
  std::vector<std::vector<protocol::ShotOutcome>> outcomes;
};

/// Runs runs * shots shots for every sweep point. Shot (run, shot) uses the
/// stream with path [run, shot] under the config seed, so the same shot index
/// sees the same randomness at every point. Results do not depend on
/// `workers`. The first failing shot (in point, run, shot order) is rethrown.
EnsembleResult run_ensemble(const SweepConfig& config, int workers = 1);

}  // namespace qdba::experiments
