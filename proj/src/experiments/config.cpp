#include "qdba/experiments/config.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <system_error>

#include "qdba/error.hpp"
#include "qdba/experiments/ternary.hpp"
#include "qdba/hardware/profile.hpp"

namespace qdba::experiments {
namespace {

const std::set<std::string, std::less<>> kKnownKeys = {
    "n",         "t",          "m",           "profile",         "p0",
    "px",        "py",         "pz",          "ternary_resolution",
    "t1_s",      "t2_s",       "transit_s",   "gamma2",          "alpha_db_per_km",
    "length_km", "loss_mode",  "commander_loyal", "runs",        "shots",
    "seed",      "theta",      "epsilon",     "classical_delay_s", "traitor_placement",
    "per_shot_csv", "output"};

constexpr int kStudiedMaxPlayers = 11;

std::string_view trim(std::string_view s) {
  const auto first = s.find_first_not_of(" \t\r");
  if (first == std::string_view::npos) return {};
  const auto last = s.find_last_not_of(" \t\r");
  return s.substr(first, last - first + 1);
}

[[noreturn]] void fail(std::string_view key, const std::string& what) {
  throw ConfigError(std::string(key) + ": " + what);
}

template <typename T>
T parse_number(std::string_view key, std::string_view text) {
  text = trim(text);
  T value{};
  const auto* end = text.data() + text.size();
  const auto [ptr, ec] = std::from_chars(text.data(), end, value);
  if (ec != std::errc() || ptr != end) {
    fail(key, "cannot parse '" + std::string(text) + "' as a number");
  }
  return value;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> parts;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    parts.push_back(trim(s.substr(start, pos - start)));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return parts;
}

// Scalar, comma list, or inclusive start:stop:step range.
template <typename T>
std::vector<T> parse_list(std::string_view key, std::string_view text) {
  std::vector<T> out;
  for (std::string_view item : split(text, ',')) {
    if (item.empty()) fail(key, "empty list element");
    const auto range = split(item, ':');
    if (range.size() == 1) {
      out.push_back(parse_number<T>(key, item));
      continue;
    }
    if (range.size() != 3) fail(key, "ranges are written start:stop:step");
    const T start = parse_number<T>(key, range[0]);
    const T stop = parse_number<T>(key, range[1]);
    const T step = parse_number<T>(key, range[2]);
    if (!(step > T{0}) || stop < start) fail(key, "range needs step > 0 and stop >= start");
    const auto count =
        static_cast<long long>(std::floor(static_cast<double>(stop - start) /
                                              static_cast<double>(step) +
                                          1e-9)) +
        1;
    for (long long k = 0; k < count; ++k) {
      out.push_back(static_cast<T>(start + static_cast<T>(k) * step));
    }
  }
  return out;
}

bool parse_bool(std::string_view key, std::string_view text) {
  text = trim(text);
  if (text == "true" || text == "1" || text == "yes") return true;
  if (text == "false" || text == "0" || text == "no") return false;
  fail(key, "expected true or false, got '" + std::string(text) + "'");
}

using Entries = std::map<std::string, std::string, std::less<>>;

Entries read_entries(std::string_view text) {
  Entries entries;
  std::size_t line_no = 0;
  for (std::string_view line : split(text, '\n')) {
    ++line_no;
    if (const auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    line = trim(line);
    if (line.empty()) continue;
    const auto [key, value] = parse_assignment(line);
    if (!entries.emplace(key, value).second) fail(key, "duplicate key on line " +
                                                       std::to_string(line_no));
  }
  return entries;
}

std::vector<quantum::PauliParams> pauli_points(const Entries& e) {
  const auto has = [&](const char* k) { return e.count(k) > 0; };
  if (has("ternary_resolution")) {
    if (has("px") || has("py") || has("pz")) {
      fail("ternary_resolution", "cannot be combined with explicit px/py/pz");
    }
    const int resolution = parse_number<int>("ternary_resolution", e.at("ternary_resolution"));
    if (resolution < 1) fail("ternary_resolution", "must be >= 1");
    const double p0 = has("p0") ? parse_number<double>("p0", e.at("p0")) : 0.975;
    if (!(p0 > 0.0 && p0 < 1.0)) fail("p0", "ternary sweeps need 0 < p0 < 1");
    return ternary_grid(1.0 - p0, resolution);
  }

  std::map<std::string, std::vector<double>> lists;
  std::size_t length = 1;
  for (const char* k : {"p0", "px", "py", "pz"}) {
    if (!has(k)) continue;
    lists[k] = parse_list<double>(k, e.at(k));
    if (lists[k].size() != 1) {
      if (length != 1 && length != lists[k].size()) fail(k, "Pauli lists must have equal length");
      length = lists[k].size();
    }
  }
  const auto value = [&](const char* k, std::size_t i) -> std::optional<double> {
    const auto it = lists.find(k);
    if (it == lists.end()) return std::nullopt;
    return it->second.size() == 1 ? it->second[0] : it->second[i];
  };
  std::vector<quantum::PauliParams> out;
  for (std::size_t i = 0; i < length; ++i) {
    quantum::PauliParams p;
    p.px = value("px", i).value_or(0.0);
    p.py = value("py", i).value_or(0.0);
    p.pz = value("pz", i).value_or(0.0);
    p.p0 = value("p0", i).value_or(1.0 - p.px - p.py - p.pz);
    try {
      quantum::validate(p);
    } catch (const ParameterError& err) {
      fail("p0", err.what());
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace

std::pair<std::string, std::string> parse_assignment(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) {
    throw ConfigError("expected key = value, got '" + std::string(trim(text)) + "'");
  }
  const std::string key(trim(text.substr(0, eq)));
  const std::string value(trim(text.substr(eq + 1)));
  if (key.empty()) throw ConfigError("missing key in '" + std::string(trim(text)) + "'");
  if (!kKnownKeys.contains(key)) throw ConfigError(key + ": unknown key");
  if (value.empty()) fail(key, "missing value");
  return {key, value};
}

SweepConfig parse_config(std::string_view text, const Overrides& overrides) {
  Entries e = read_entries(text);
  for (const auto& [key, value] : overrides) {
    if (!kKnownKeys.contains(key)) throw ConfigError(key + ": unknown key");
    e[key] = value;
  }
  const auto has = [&](const char* k) { return e.count(k) > 0; };

  SweepConfig c;
  if (has("n")) c.n = parse_list<int>("n", e.at("n"));
  if (has("t")) c.t = parse_list<int>("t", e.at("t"));
  if (has("m")) c.m = parse_list<int>("m", e.at("m"));
  if (has("profile")) c.profile = e.at("profile");
  if (c.profile != "logical" && c.profile != "superconducting" && c.profile != "photonic") {
    fail("profile", "expected logical, superconducting or photonic, got '" + c.profile + "'");
  }

  for (int n : c.n) {
    if (n < 3) fail("n", "need N >= 3, got " + std::to_string(n));
    if (n > kStudiedMaxPlayers) {
      c.warnings.push_back("n: N=" + std::to_string(n) + " exceeds the studied range 3..11");
    }
  }
  for (int m : c.m) {
    if (m < 1) fail("m", "need M >= 1, got " + std::to_string(m));
  }
  for (int t : c.t) {
    if (t < 0) fail("t", "traitor count must be non-negative");
    for (int n : c.n) {
      if (t >= n) {
        fail("t", "T=" + std::to_string(t) + " must be < N=" + std::to_string(n));
      }
    }
  }

  const bool logical_keys = has("p0") || has("px") || has("py") || has("pz") ||
                            has("ternary_resolution");
  if (c.profile == "logical") {
    c.pauli = pauli_points(e);
  } else if (logical_keys) {
    fail("profile", "Pauli keys are only valid with profile = logical");
  }

  if (has("t1_s")) c.t1_s = parse_list<double>("t1_s", e.at("t1_s"));
  if (has("t2_s")) c.t2_s = parse_list<double>("t2_s", e.at("t2_s"));
  if (has("transit_s")) c.transit_s = parse_list<double>("transit_s", e.at("transit_s"));
  if (has("gamma2")) c.gamma2 = parse_number<double>("gamma2", e.at("gamma2"));
  if (has("alpha_db_per_km")) {
    c.alpha_db_per_km = parse_list<double>("alpha_db_per_km", e.at("alpha_db_per_km"));
  }
  if (has("length_km")) c.length_km = parse_list<double>("length_km", e.at("length_km"));
  if (has("loss_mode")) {
    const std::string& mode = e.at("loss_mode");
    if (mode == "heralded") {
      c.loss_mode = des::LossMode::Heralded;
    } else if (mode == "unheralded") {
      c.loss_mode = des::LossMode::Unheralded;
    } else {
      fail("loss_mode", "expected heralded or unheralded, got '" + mode + "'");
    }
  }
  if (c.profile != "superconducting" &&
      (has("t1_s") || has("t2_s") || has("transit_s") || has("gamma2"))) {
    fail("profile", "t1_s/t2_s/transit_s/gamma2 are only valid with profile = superconducting");
  }
  if (c.profile != "photonic" && (has("alpha_db_per_km") || has("length_km") || has("loss_mode"))) {
    fail("profile", "alpha_db_per_km/length_km/loss_mode are only valid with profile = photonic");
  }

  if (has("commander_loyal")) c.commander_loyal = parse_bool("commander_loyal", e.at("commander_loyal"));
  if (has("runs")) c.runs = parse_number<int>("runs", e.at("runs"));
  if (has("shots")) c.shots = parse_number<int>("shots", e.at("shots"));
  if (c.runs < 1) fail("runs", "must be >= 1");
  if (c.shots < 1) fail("shots", "must be >= 1");
  if (has("seed")) c.seed = parse_number<std::uint64_t>("seed", e.at("seed"));
  if (has("theta")) c.tolerances.theta = parse_number<double>("theta", e.at("theta"));
  if (has("epsilon")) c.tolerances.epsilon = parse_number<double>("epsilon", e.at("epsilon"));
  try {
    protocol::validate(c.tolerances);
  } catch (const ParameterError& err) {
    fail(has("epsilon") ? "epsilon" : "theta", err.what());
  }
  if (has("classical_delay_s")) {
    c.classical_delay_s = parse_number<double>("classical_delay_s", e.at("classical_delay_s"));
    if (!(c.classical_delay_s >= 0.0)) fail("classical_delay_s", "must be non-negative");
  }
  if (has("traitor_placement")) {
    const std::string& p = e.at("traitor_placement");
    if (p == "random") {
      c.placement = protocol::TraitorPlacement::Random;
    } else if (p == "lowest") {
      c.placement = protocol::TraitorPlacement::Lowest;
    } else {
      fail("traitor_placement", "expected random or lowest, got '" + p + "'");
    }
  }
  if (has("per_shot_csv")) c.per_shot_csv = parse_bool("per_shot_csv", e.at("per_shot_csv"));
  if (has("output")) c.output = e.at("output");

  // Profile invariants for every point, reported against the responsible key.
  for (const SweepPoint& point : expand_points(c)) {
    try {
      hardware::validate(point.shot.profile);
    } catch (const ConstraintError& err) {
      fail("t2_s", err.what());
    } catch (const ParameterError& err) {
      const char* key = c.profile == "photonic"         ? "length_km"
                        : c.profile == "superconducting" ? "transit_s"
                                                         : "p0";
      fail(key, err.what());
    }
  }

  c.resolved.assign(e.begin(), e.end());
  return c;
}

std::vector<SweepPoint> expand_points(const SweepConfig& c) {
  std::vector<hardware::HardwareProfile> profiles;
  if (c.profile == "logical") {
    for (const auto& p : c.pauli) profiles.push_back(hardware::LogicalProfile{p});
  } else if (c.profile == "superconducting") {
    for (double t1 : c.t1_s) {
      const std::vector<double> t2s = c.t2_s.empty() ? std::vector<double>{t1} : c.t2_s;
      for (double t2 : t2s) {
        for (double transit : c.transit_s) {
          profiles.push_back(hardware::SuperconductingProfile{t1, t2, transit, c.gamma2});
        }
      }
    }
  } else {
    for (double alpha : c.alpha_db_per_km) {
      for (double length : c.length_km) {
        profiles.push_back(hardware::PhotonicProfile{alpha, length, c.loss_mode});
      }
    }
  }

  std::vector<SweepPoint> points;
  for (int n : c.n) {
    for (int t : c.t) {
      for (int m : c.m) {
        for (const auto& profile : profiles) {
          SweepPoint point;
          point.shot.players = n;
          point.shot.tuples = m;
          point.shot.traitors = t;
          point.shot.placement = c.placement;
          point.shot.commander_loyal = c.commander_loyal;
          point.shot.profile = profile;
          point.shot.tolerances = c.tolerances;
          point.shot.classical_delay = c.classical_delay_s;
          points.push_back(std::move(point));
        }
      }
    }
  }
  return points;
}

std::string format_double(double value) {
  char buf[64];
  const auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  if (ec != std::errc()) return "nan";
  return std::string(buf, ptr);
}

}  // namespace qdba::experiments
