#include "qdba/experiments/output.hpp"

#include <fstream>
#include <json.hpp>
#include <sstream>
#include <system_error>
#include <variant>

#include "qdba/error.hpp"
#include "qdba/hardware/profile.hpp"

#ifndef QDBA_VERSION
#define QDBA_VERSION "unknown"
#endif

namespace qdba::experiments {
namespace {

std::string_view decision_name(protocol::Decision d) { return protocol::to_string(d); }

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open " + path.string() + " for writing");
  out.write(text.data(), static_cast<std::streamsize>(text.size()));
  out.close();
  if (!out) throw IoError("failed writing " + path.string());
}

}  // namespace

std::string metrics_csv(const EnsembleResult& result) {
  std::ostringstream os;
  os << kMetricsHeader << '\n';
  for (std::size_t i = 0; i < result.points.size(); ++i) {
    const auto& shot = result.points[i].shot;
    const auto& row = result.rows.at(i);
    os << hardware::profile_name(shot.profile) << ',' << shot.players << ',' << shot.traitors
       << ',' << shot.tuples << ',';
    if (const auto* p = std::get_if<hardware::LogicalProfile>(&shot.profile)) {
      os << format_double(p->pauli.p0) << ',' << format_double(p->pauli.px) << ','
         << format_double(p->pauli.py) << ',' << format_double(p->pauli.pz) << ',';
    } else {
      os << ",,,,";
    }
    if (const auto* p = std::get_if<hardware::PhotonicProfile>(&shot.profile)) {
      os << format_double(p->alpha_db_per_km) << ',' << format_double(p->length_km) << ',';
    } else {
      os << ",,";
    }
    if (const auto* p = std::get_if<hardware::SuperconductingProfile>(&shot.profile)) {
      os << format_double(p->t1) << ',' << format_double(p->t2) << ','
         << format_double(p->transit) << ',';
    } else {
      os << ",,,";
    }
    os << (shot.commander_loyal ? "true" : "false") << ',' << row.shots << ','
       << format_double(row.lieutenant_error_rate) << ',' << format_double(row.shot_error_rate)
       << ',' << format_double(row.abort_rate) << ',' << format_double(row.wrong_value_rate)
       << '\n';
  }
  return os.str();
}

std::string shots_csv(const EnsembleResult& result) {
  std::ostringstream os;
  os << "point,run,shot,lieutenant,loyal,commander_order,order_received,decision,error,"
        "lost_qubits,heralded_retries\n";
  for (const auto& outcomes : result.outcomes) {
    for (const auto& o : outcomes) {
      for (const auto& lt : o.lieutenants) {
        os << o.point << ',' << o.run << ',' << o.shot << ',' << lt.id << ','
           << (lt.loyal ? "true" : "false") << ',';
        if (o.commander_order) os << int(*o.commander_order);
        os << ',' << int(lt.order_received) << ',' << decision_name(lt.decision) << ','
           << (lt.error ? "true" : "false") << ',' << o.lost_qubits << ','
           << o.heralded_retries << '\n';
      }
    }
  }
  return os.str();
}

std::string manifest_json(const SweepConfig& config) {
  nlohmann::ordered_json j;
  j["version"] = QDBA_VERSION;
  j["seed"] = config.seed;
  nlohmann::ordered_json cfg = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config.resolved) cfg[key] = value;
  j["config"] = cfg;
  j["runs"] = config.runs;
  j["shots"] = config.shots;
  j["warnings"] = config.warnings;
  return j.dump(2) + "\n";
}

void write_outputs(const SweepConfig& config, const EnsembleResult& result,
                   const std::filesystem::path& dir) {
  if (result.rows.empty()) throw AggregationError("no metrics rows to write");
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw IoError("cannot create directory " + dir.string() + ": " + ec.message());
  write_file(dir / "metrics.csv", metrics_csv(result));
  if (config.per_shot_csv) write_file(dir / "shots.csv", shots_csv(result));
  write_file(dir / "manifest.json", manifest_json(config));
}

}  // namespace qdba::experiments
