#include "qdba/experiments/metrics.hpp"

#include "qdba/error.hpp"

namespace qdba::experiments {

MetricsRow aggregate_metrics(std::span<const protocol::ShotOutcome> outcomes) {
  if (outcomes.empty()) throw AggregationError("no shots to aggregate");
  MetricsRow row;
  for (const auto& shot : outcomes) {
    ++row.shots;
    bool any_error = false;
    for (const auto& lt : shot.lieutenants) {
      if (!lt.loyal) continue;
      ++row.loyal_lieutenant_shots;
      if (lt.error) {
        ++row.errors;
        any_error = true;
      }
      if (lt.decision == protocol::Decision::Abort) {
        ++row.aborts;
      } else if (!shot.commander_loyal ||
                 (shot.commander_order &&
                  lt.decision != protocol::to_decision(*shot.commander_order))) {
        ++row.wrong_values;
      }
    }
    if (any_error) ++row.shots_with_error;
  }
  const auto rate = [](std::size_t k, std::size_t n) {
    return n == 0 ? 0.0 : static_cast<double>(k) / static_cast<double>(n);
  };
  row.lieutenant_error_rate = rate(row.errors, row.loyal_lieutenant_shots);
  row.shot_error_rate = rate(row.shots_with_error, row.shots);
  row.abort_rate = rate(row.aborts, row.loyal_lieutenant_shots);
  row.wrong_value_rate = rate(row.wrong_values, row.loyal_lieutenant_shots);
  return row;
}

}  // namespace qdba::experiments
