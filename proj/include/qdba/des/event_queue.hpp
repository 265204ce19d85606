#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "qdba/error.hpp"

namespace qdba::des {

template <typename Payload>
struct Event {
  double time = 0.0;     // simulated seconds
  std::uint64_t seq = 0;  // insertion order, breaks time ties
  Payload payload{};
};

/// Deterministic pending-event set ordered by (time, seq).
///
/// The clock advances to each event's time as it is popped. Scheduling before
/// the current clock throws SchedulingError.
template <typename Payload>
class EventQueue {
 public:
  using EventType = Event<Payload>;

  double now() const { return now_; }
  bool empty() const { return heap_.size() == cancelled_.size(); }
  std::size_t size() const { return heap_.size() - cancelled_.size(); }

  EventType schedule(double time, Payload payload) {
    if (time < now_) {
      throw SchedulingError("cannot schedule at t=" + std::to_string(time) +
                            " before current clock t=" + std::to_string(now_));
    }
    EventType ev{time, next_seq_++, std::move(payload)};
    heap_.push_back(ev);
    std::push_heap(heap_.begin(), heap_.end(), Later{});
    return ev;
  }

  /// Lazily drops a pending event. Returns false if it was not pending.
  bool cancel(std::uint64_t seq) {
    const bool pending = std::any_of(heap_.begin(), heap_.end(),
                                     [seq](const EventType& e) { return e.seq == seq; });
    return pending && cancelled_.insert(seq).second;
  }

  std::optional<EventType> pop() {
    while (!heap_.empty()) {
      std::pop_heap(heap_.begin(), heap_.end(), Later{});
      EventType ev = std::move(heap_.back());
      heap_.pop_back();
      if (cancelled_.erase(ev.seq) > 0) continue;
      now_ = ev.time;
      return ev;
    }
    return std::nullopt;
  }

  /// Dispatches events until none remain; returns the last event's time
  /// (0 if nothing ran). `handler(const EventType&, EventQueue&)` may
  /// schedule follow-up events at or after the current time.
  template <typename Handler>
  double run_until_idle(Handler&& handler) {
    double last = 0.0;
    while (auto ev = pop()) {
      last = ev->time;
      handler(*ev, *this);
    }
    return last;
  }

 private:
  struct Later {
    bool operator()(const EventType& a, const EventType& b) const {
      if (a.time != b.time) return a.time > b.time;
      return a.seq > b.seq;
    }
  };

  std::vector<EventType> heap_;
  std::unordered_set<std::uint64_t> cancelled_;
  double now_ = 0.0;
  std::uint64_t next_seq_ = 0;
};

}  // namespace qdba::des
