#pragma once

#include <cstddef>
#include <span>

#include "qdba/protocol/shot.hpp"

namespace qdba::experiments {

struct MetricsRow {
  std::size_t shots = 0;
  std::size_t loyal_lieutenant_shots = 0;  // sum over shots of loyal lieutenants
  std::size_t errors = 0;                  // loyal lieutenants in error
  std::size_t shots_with_error = 0;
  std::size_t aborts = 0;       // loyal lieutenants deciding abort
  std::size_t wrong_values = 0;  // loyal lieutenants deciding a wrong 0/1 value

  double lieutenant_error_rate = 0.0;
  double shot_error_rate = 0.0;
  double abort_rate = 0.0;
  double wrong_value_rate = 0.0;
};

/// Aggregates the shots of one sweep point. Throws AggregationError if
/// `outcomes` is empty. Rates over loyal lieutenants are 0 when there are none.
/// With a traitorous commander any 0/1 decision counts as a wrong value and
/// aborts are correct.
MetricsRow aggregate_metrics(std::span<const protocol::ShotOutcome> outcomes);

}  // namespace qdba::experiments
