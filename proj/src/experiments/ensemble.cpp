#include "qdba/experiments/ensemble.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>

#include "qdba/des/rng.hpp"
#include "qdba/error.hpp"

namespace qdba::experiments {

EnsembleResult run_ensemble(const SweepConfig& config, int workers) {
  if (config.runs < 1 || config.shots < 1) throw ConfigError("runs and shots must be >= 1");
  EnsembleResult result;
  result.points = expand_points(config);
  const std::size_t runs = static_cast<std::size_t>(config.runs);
  const std::size_t shots = static_cast<std::size_t>(config.shots);
  const std::size_t per_point = runs * shots;
  const std::size_t total = per_point * result.points.size();

  result.outcomes.assign(result.points.size(), std::vector<protocol::ShotOutcome>(per_point));
  std::vector<std::exception_ptr> errors(total);
  const des::RngStream root(config.seed);

  std::atomic<std::size_t> next{0};
  const auto work = [&] {
    for (std::size_t item = next.fetch_add(1); item < total; item = next.fetch_add(1)) {
      const std::size_t point = item / per_point;
      const std::size_t run = (item % per_point) / shots;
      const std::size_t shot = item % shots;
      try {
        auto outcome =
            protocol::run_shot(result.points[point].shot, root.fork(run).fork(shot));
        outcome.point = point;
        outcome.run = run;
        outcome.shot = shot;
        result.outcomes[point][run * shots + shot] = std::move(outcome);
      } catch (...) {
        errors[item] = std::current_exception();
      }
    }
  };

  const int threads = std::clamp(workers, 1, 256);
  if (threads == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (int w = 0; w < threads; ++w) pool.emplace_back(work);
  }

  for (const auto& err : errors) {
    if (err) std::rethrow_exception(err);
  }
  for (const auto& outcomes : result.outcomes) result.rows.push_back(aggregate_metrics(outcomes));
  return result;
}

}  // namespace qdba::experiments
