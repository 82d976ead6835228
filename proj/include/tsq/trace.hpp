#ifndef TSQ_TRACE_HPP
#define TSQ_TRACE_HPP

#include <cstddef>
#include <cstdint>
#include <functional>
#include <ostream>
#include <string_view>
#include <vector>

#include "tsq/stats.hpp"

namespace tsq {

enum class TraceKind : std::uint8_t {
  Compare,
  Write,
  StateEnter,
  StageEnd,
  HandlerEnter,
  HandlerFallback
};

constexpr std::string_view to_string(TraceKind k) noexcept {
  switch (k) {
    case TraceKind::Compare: return "compare";
    case TraceKind::Write: return "write";
    case TraceKind::StateEnter: return "state";
    case TraceKind::StageEnd: return "stage-end";
    case TraceKind::HandlerEnter: return "handler";
    case TraceKind::HandlerFallback: return "fallback";
  }
  return "?";
}

/// One traced step. Index fields are -1 when they refer to a held value
/// (pivot, holdover or buffer) rather than an array slot.
///
///   Compare          first, second: operands
///   Write            first: destination
///   StateEnter       state; value: temp buffer fill
///   StageEnd         first..second: stage bounds; lo, hi: last index of the
///                    left substage and first index of the right one
///   HandlerEnter     value: order flag (+1 sorted, -1 reversed)
///   HandlerFallback  value: resume point
struct TraceEvent {
  TraceKind kind = TraceKind::Compare;
  StateId state = StateId::S1;
  std::ptrdiff_t first = -1;
  std::ptrdiff_t second = -1;
  std::ptrdiff_t lo = -1;
  std::ptrdiff_t hi = -1;
  std::int64_t value = 0;
};

/// Runtime-gated event sink. A default-constructed tracer is disabled and
/// costs one branch per counted operation.
class Tracer {
 public:
  using Sink = std::function<void(const TraceEvent&)>;

  Tracer() = default;
  explicit Tracer(Sink sink) : sink_(std::move(sink)) {}

  bool enabled() const noexcept { return static_cast<bool>(sink_); }
  void emit(const TraceEvent& e) const {
    if (sink_) sink_(e);
  }

 private:
  Sink sink_;
};

inline void write_event(std::ostream& os, const TraceEvent& e) {
  os << to_string(e.kind);
  switch (e.kind) {
    case TraceKind::Compare:
      os << ' ' << e.first << ' ' << e.second;
      break;
    case TraceKind::Write:
      os << ' ' << e.first;
      break;
    case TraceKind::StateEnter:
      os << ' ' << to_string(e.state) << " fill=" << e.value;
      break;
    case TraceKind::StageEnd:
      os << ' ' << e.first << ' ' << e.second << " left_end=" << e.lo << " right_begin=" << e.hi;
      break;
    case TraceKind::HandlerEnter:
    case TraceKind::HandlerFallback:
      os << ' ' << e.value;
      break;
  }
  os << '\n';
}

/// Collects events in memory; handy for tests and the CLI's --trace dump.
class TraceRecorder {
 public:
  Tracer tracer() {
    return Tracer([this](const TraceEvent& e) { events_.push_back(e); });
  }
  const std::vector<TraceEvent>& events() const noexcept { return events_; }
  void clear() noexcept { events_.clear(); }
  void dump(std::ostream& os) const {
    for (const auto& e : events_) write_event(os, e);
  }

 private:
  std::vector<TraceEvent> events_;
};

}  // namespace tsq

#endif  // TSQ_TRACE_HPP
