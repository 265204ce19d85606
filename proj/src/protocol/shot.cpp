#include "qdba/protocol/shot.hpp"

#include <algorithm>
#include <array>
#include <memory>
#include <string>
#include <utility>
#include <variant>

#include "qdba/des/event_queue.hpp"
#include "qdba/des/link.hpp"
#include "qdba/error.hpp"
#include "qdba/protocol/strategy.hpp"
#include "qdba/quantum/density_matrix.hpp"

namespace qdba::protocol {
namespace {

struct EmitPair {
  std::size_t index;
};
struct EmitFiller {
  std::size_t index;
  int lieutenant;
};
struct QubitArrival {
  std::size_t index;
  int node;
};
struct CommandPhase {};
struct CommandDelivery {
  int lieutenant;
};
struct RoundStart {
  int round;
};
struct MessageDelivery {
  int round;
  int from;
  int to;
};

using ShotEvent = std::variant<EmitPair, EmitFiller, QubitArrival, CommandPhase, CommandDelivery,
                               RoundStart, MessageDelivery>;
using Queue = des::EventQueue<ShotEvent>;

constexpr int kCommanderHalf = 0;
constexpr int kLieutenantHalf = 1;

// One EPR pair between emission and measurement.
struct PairFlight {
  std::optional<quantum::DensityMatrix> state;
  std::array<int, 2> qubit{0, 1};  // position of each half in `state`, -1 once lost
  std::array<Bit, 2> bits{};
  bool sampled = false;
};

void apply_hooks(quantum::DensityMatrix& state, const std::vector<des::NoiseHook>& hooks,
                 int target) {
  for (const auto& hook : hooks) {
    if (const auto* ch = std::get_if<quantum::KrausChannel>(&hook)) {
      state = quantum::apply_channel(state, *ch, target);
    }
  }
}

class ShotSimulation {
 public:
  ShotSimulation(const ShotConfig& config, const des::RngStream& stream,
                 std::vector<TraceEntry>* trace)
      : config_(config),
        scheme_(config.players, config.tuples),
        network_(hardware::build_network(config.profile, scheme_)),
        stream_(stream),
        trace_(trace),
        transit_rng_(stream.fork(hardware::distributor_node(scheme_)).fork(kPurposeTransit)),
        measure_rng_(stream.fork(hardware::distributor_node(scheme_)).fork(kPurposeMeasurement)),
        order_rng_(stream.fork(hardware::commander_node(scheme_)).fork(kPurposeOrders)),
        commander_record_(scheme_.stream_length()),
        pairs_(scheme_.stream_length()),
        fillers_(scheme_.stream_length() * static_cast<std::size_t>(scheme_.lieutenants())),
        inbox_(static_cast<std::size_t>(scheme_.lieutenants())),
        outbox_(static_cast<std::size_t>(scheme_.lieutenants())),
        behaviors_(static_cast<std::size_t>(scheme_.lieutenants())) {
    const auto lts = static_cast<std::size_t>(scheme_.lieutenants());
    records_.assign(lts, BitVector(scheme_.stream_length()));
    issues_.resize(lts);
    place_traitors();
  }

  ShotOutcome run() {
    for (std::size_t p = 0; p < scheme_.stream_length(); ++p) {
      queue_.schedule(0.0, EmitPair{p});
    }
    const double end = queue_.run_until_idle(
        [this](const des::Event<ShotEvent>& ev, Queue&) { dispatch(ev); });
    if (!finished_) throw Error("shot ended before round 3 completed");
    return outcome(end);
  }

 private:
  std::size_t filler_slot(std::size_t index, int lieutenant) const {
    return index * static_cast<std::size_t>(scheme_.lieutenants()) +
           static_cast<std::size_t>(lieutenant);
  }

  void place_traitors() {
    traitor_.assign(static_cast<std::size_t>(scheme_.lieutenants()), false);
    std::vector<int> ids(static_cast<std::size_t>(scheme_.lieutenants()));
    for (std::size_t k = 0; k < ids.size(); ++k) ids[k] = static_cast<int>(k);
    if (config_.placement == TraitorPlacement::Random) {
      auto rng = stream_.fork(hardware::distributor_node(scheme_)).fork(kPurposePlacement);
      for (std::size_t k = 0; k + 1 < ids.size(); ++k) {
        const auto pick = k + static_cast<std::size_t>(rng.uniform_int(ids.size() - k));
        std::swap(ids[k], ids[pick]);
      }
    }
    for (int t = 0; t < config_.traitors; ++t) {
      traitor_[static_cast<std::size_t>(ids[static_cast<std::size_t>(t)])] = true;
    }
  }

  void record_trace(const des::Event<ShotEvent>& ev, TraceKind kind, int node,
                    std::int64_t detail) {
    if (trace_ != nullptr) trace_->push_back({ev.time, ev.seq, kind, node, detail});
  }

  void dispatch(const des::Event<ShotEvent>& ev) {
    std::visit(
        [&](const auto& payload) {
          using T = std::decay_t<decltype(payload)>;
          if constexpr (std::is_same_v<T, EmitPair>) {
            record_trace(ev, TraceKind::EmitPair, hardware::distributor_node(scheme_),
                         static_cast<std::int64_t>(payload.index));
            emit_pair(payload.index, ev.time);
          } else if constexpr (std::is_same_v<T, EmitFiller>) {
            record_trace(ev, TraceKind::EmitFiller, payload.lieutenant,
                         static_cast<std::int64_t>(payload.index));
            emit_filler(payload.index, payload.lieutenant, ev.time);
          } else if constexpr (std::is_same_v<T, QubitArrival>) {
            record_trace(ev, TraceKind::QubitArrival, payload.node,
                         static_cast<std::int64_t>(payload.index));
            arrive(payload.index, payload.node, ev.time);
          } else if constexpr (std::is_same_v<T, CommandPhase>) {
            record_trace(ev, TraceKind::CommandPhase, hardware::commander_node(scheme_), 0);
            command_phase(ev.time);
          } else if constexpr (std::is_same_v<T, CommandDelivery>) {
            record_trace(ev, TraceKind::CommandDelivery, payload.lieutenant, 0);
            deliver_command(payload.lieutenant, ev.time);
          } else if constexpr (std::is_same_v<T, RoundStart>) {
            record_trace(ev, TraceKind::RoundStart, -1, payload.round);
            start_round(payload.round, ev.time);
          } else if constexpr (std::is_same_v<T, MessageDelivery>) {
            record_trace(ev, TraceKind::MessageDelivery, payload.to,
                         payload.round * 1000 + payload.from);
            deliver_message(payload, ev.time);
          }
        },
        ev.payload);
  }

  // --- distribution -------------------------------------------------------

  void emit_pair(std::size_t p, double now) {
    const int live = scheme_.slot_of(p);
    PairFlight flight;
    flight.state = quantum::make_state(quantum::StateKind::PsiPlus);
    bool any_lost = false;
    double arrival = now;

    const des::QuantumLink* links[2] = {
        &network_.commander_link, &network_.lieutenant_links[static_cast<std::size_t>(live)]};
    for (int half : {kCommanderHalf, kLieutenantHalf}) {
      const int position = flight.qubit[static_cast<std::size_t>(half)];
      if (!flight.state) {
        // Partner already gone and nothing left to carry.
        flight.qubit[static_cast<std::size_t>(half)] = -1;
        continue;
      }
      des::Arrival a = des::transmit_qubit(*links[half], std::move(*flight.state), position,
                                           transit_rng_, now);
      arrival = std::max(arrival, a.arrival_time);
      flight.state = std::move(a.state);
      if (a.lost) {
        any_lost = true;
        ++lost_qubits_;
        flight.qubit[static_cast<std::size_t>(half)] = -1;
        // The surviving partner moves to position 0 of the reduced state.
        const int other = 1 - half;
        if (flight.qubit[static_cast<std::size_t>(other)] >= 0) {
          flight.qubit[static_cast<std::size_t>(other)] = 0;
        }
      }
    }

    if (any_lost && network_.loss_mode == des::LossMode::Heralded) {
      ++heralded_retries_;
      queue_.schedule(arrival, EmitPair{p});
      return;
    }
    pairs_[p] = std::move(flight);
    queue_.schedule(now + network_.commander_link.delay,
                    QubitArrival{p, hardware::commander_node(scheme_)});
    queue_.schedule(now + links[kLieutenantHalf]->delay, QubitArrival{p, live});

    if (!fillers_emitted_[p]) {
      fillers_emitted_[p] = true;
      for (int l = 0; l < scheme_.lieutenants(); ++l) {
        if (l != live) emit_filler(p, l, now);
      }
    }
  }

  void emit_filler(std::size_t p, int lieutenant, double now) {
    const auto& link = network_.lieutenant_links[static_cast<std::size_t>(lieutenant)];
    des::Arrival a = des::transmit_qubit(link, quantum::make_state(quantum::StateKind::Plus), 0,
                                         transit_rng_, now);
    if (a.lost) {
      ++lost_qubits_;
      if (network_.loss_mode == des::LossMode::Heralded) {
        ++heralded_retries_;
        queue_.schedule(a.arrival_time, EmitFiller{p, lieutenant});
        return;
      }
    }
    fillers_[filler_slot(p, lieutenant)] = std::move(a.state);
    queue_.schedule(a.arrival_time, QubitArrival{p, lieutenant});
  }

  // --- measurement --------------------------------------------------------

  void sample_pair(PairFlight& flight) {
    flight.sampled = true;
    if (!flight.state) return;  // both halves lost: both read 0
    quantum::DensityMatrix state = std::move(*flight.state);
    flight.state.reset();
    const int cpos = flight.qubit[kCommanderHalf];
    const int lpos = flight.qubit[kLieutenantHalf];
    if (cpos >= 0) apply_hooks(state, network_.commander_pre_measurement, cpos);
    if (lpos >= 0) apply_hooks(state, network_.lieutenant_pre_measurement, lpos);
    const quantum::MeasurementOutcome m = quantum::measure_z_all(state, measure_rng_);
    if (cpos >= 0) flight.bits[kCommanderHalf] = m.bits[static_cast<std::size_t>(cpos)];
    if (lpos >= 0) flight.bits[kLieutenantHalf] = m.bits[static_cast<std::size_t>(lpos)];
  }

  void arrive(std::size_t p, int node, double now) {
    const bool commander = node == hardware::commander_node(scheme_);
    if (commander || node == scheme_.slot_of(p)) {
      PairFlight& flight = pairs_[p];
      if (!flight.sampled) sample_pair(flight);
      // Unheralded loss: the lost half reads 0.
      if (commander) {
        commander_record_[p] = flight.bits[kCommanderHalf];
      } else {
        records_[static_cast<std::size_t>(node)][p] = flight.bits[kLieutenantHalf];
      }
    } else {
      auto& filler = fillers_[filler_slot(p, node)];
      Bit bit = 0;
      if (filler) {
        apply_hooks(*filler, network_.lieutenant_pre_measurement, 0);
        bit = quantum::measure_z_all(*filler, measure_rng_).bits[0];
        filler.reset();
      }
      records_[static_cast<std::size_t>(node)][p] = bit;
    }
    if (++arrivals_ == scheme_.stream_length() * static_cast<std::size_t>(scheme_.players())) {
      queue_.schedule(now, CommandPhase{});
    }
  }

  // --- classical phase ----------------------------------------------------

  void command_phase(double now) {
    issues_ = issue_commands(commander_record_, scheme_, config_.commander_loyal, order_rng_);
    for (int l = 0; l < scheme_.lieutenants(); ++l) {
      queue_.schedule(now + config_.classical_delay, CommandDelivery{l});
    }
  }

  void deliver_command(int l, double now) {
    const auto idx = static_cast<std::size_t>(l);
    LieutenantState state;
    state.id = l;
    state.record = records_[idx];
    state.order = issues_[idx].order;
    state.vector = issues_[idx].vector;
    const StrategyKind kind = traitor_[idx] ? StrategyKind::RandomTraitor : StrategyKind::Loyal;
    behaviors_[idx] = make_lieutenant(kind, scheme_, std::move(state), config_.tolerances,
                                      stream_.fork(static_cast<std::uint64_t>(l))
                                          .fork(kPurposeStrategy));
    if (++commands_delivered_ == static_cast<std::size_t>(scheme_.lieutenants())) {
      queue_.schedule(now, RoundStart{1});
    }
  }

  void start_round(int round, double now) {
    const int lts = scheme_.lieutenants();
    for (int l = 0; l < lts; ++l) {
      const auto idx = static_cast<std::size_t>(l);
      StepResult result = behaviors_[idx]->step(round, inbox_[idx]);
      outbox_[idx] = std::move(result.outbox);
    }
    if (round == 3) {
      finished_ = true;
      return;
    }
    pending_messages_ = static_cast<std::size_t>(lts) * static_cast<std::size_t>(lts - 1);
    for (int from = 0; from < lts; ++from) {
      for (int to = 0; to < lts; ++to) {
        if (from != to) {
          queue_.schedule(now + config_.classical_delay, MessageDelivery{round, from, to});
        }
      }
    }
  }

  void deliver_message(const MessageDelivery& m, double now) {
    inbox_[static_cast<std::size_t>(m.to)].push_back(outbox_[static_cast<std::size_t>(m.from)]);
    if (--pending_messages_ == 0) queue_.schedule(now, RoundStart{m.round + 1});
  }

  ShotOutcome outcome(double end) const {
    ShotOutcome out;
    out.rng_path = stream_.path();
    out.commander_loyal = config_.commander_loyal;
    if (config_.commander_loyal) out.commander_order = issues_.front().order;
    out.lost_qubits = lost_qubits_;
    out.heralded_retries = heralded_retries_;
    out.end_time = end;
    for (int l = 0; l < scheme_.lieutenants(); ++l) {
      const auto idx = static_cast<std::size_t>(l);
      const LieutenantBehavior& b = *behaviors_[idx];
      LieutenantRecord rec;
      rec.id = l;
      rec.loyal = b.loyal();
      rec.order_received = issues_[idx].order;
      rec.decision = *b.state().decisions[2];
      if (rec.loyal) {
        rec.error = config_.commander_loyal ? rec.decision != to_decision(*out.commander_order)
                                            : rec.decision != Decision::Abort;
        out.vacuous_bitvector_check |= b.state().vacuous_bitvector_check;
      }
      out.lieutenants.push_back(rec);
    }
    return out;
  }

  const ShotConfig& config_;
  IndexScheme scheme_;
  hardware::Network network_;
  des::RngStream stream_;
  std::vector<TraceEntry>* trace_;
  des::RngStream transit_rng_;
  des::RngStream measure_rng_;
  des::RngStream order_rng_;
  Queue queue_;

  BitVector commander_record_;
  std::vector<BitVector> records_;
  std::vector<PairFlight> pairs_;
  std::vector<std::optional<quantum::DensityMatrix>> fillers_;
  std::vector<bool> fillers_emitted_ = std::vector<bool>(scheme_.stream_length(), false);
  std::vector<bool> traitor_;
  std::vector<CommandIssue> issues_;
  std::vector<std::vector<RoundMessage>> inbox_;
  std::vector<RoundMessage> outbox_;
  std::vector<std::unique_ptr<LieutenantBehavior>> behaviors_;

  std::size_t arrivals_ = 0;
  std::size_t commands_delivered_ = 0;
  std::size_t pending_messages_ = 0;
  std::size_t lost_qubits_ = 0;
  std::size_t heralded_retries_ = 0;
  bool finished_ = false;
};

}  // namespace

void validate(const ShotConfig& config) {
  const IndexScheme scheme(config.players, config.tuples);
  if (config.traitors < 0 || config.traitors >= config.players) {
    throw ParameterError("traitor count T=" + std::to_string(config.traitors) +
                         " must satisfy 0 <= T < N=" + std::to_string(config.players));
  }
  if (!(config.classical_delay >= 0.0)) {
    throw ParameterError("classical delay must be non-negative");
  }
  validate(config.tolerances);
  hardware::validate(config.profile);
}

ShotOutcome run_shot(const ShotConfig& config, const des::RngStream& shot_stream,
                     std::vector<TraceEntry>* trace) {
  validate(config);
  ShotSimulation sim(config, shot_stream, trace);
  return sim.run();
}

}  // namespace qdba::protocol
