#pragma once

#include <filesystem>
#include <string>

#include "qdba/experiments/config.hpp"
#include "qdba/experiments/ensemble.hpp"

namespace qdba::experiments {

inline constexpr const char* kMetricsHeader =
    "profile,n,t,m,p0,px,py,pz,alpha_db_per_km,length_km,t1_s,t2_s,transit_s,"
    "commander_loyal,shots,lieutenant_error_rate,shot_error_rate,abort_rate,wrong_value_rate";

/// Metrics CSV text (header plus one line per point). Fields that do not
/// apply to the point's profile are left empty.
std::string metrics_csv(const EnsembleResult& result);

/// One line per (shot, lieutenant).
std::string shots_csv(const EnsembleResult& result);

/// Config, seed and code version as JSON. Contains nothing time-dependent.
std::string manifest_json(const SweepConfig& config);

/// Writes metrics.csv, manifest.json and, if enabled, shots.csv under `dir`
/// (created if missing). Throws IoError naming the path on failure.
void write_outputs(const SweepConfig& config, const EnsembleResult& result,
                   const std::filesystem::path& dir);

}  // namespace qdba::experiments
