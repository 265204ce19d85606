#include "qdba/protocol/command_vector.hpp"

#include <string>

#include "qdba/error.hpp"

namespace qdba::protocol {

std::string_view to_string(Decision d) {
  switch (d) {
    case Decision::Zero:
      return "0";
    case Decision::One:
      return "1";
    case Decision::Abort:
      return "abort";
  }
  return "?";
}

CommandVector build_command_vector(const BitVector& commander_record, const IndexScheme& scheme,
                                   int lieutenant, Bit order) {
  if (commander_record.size() != scheme.stream_length()) {
    throw ShapeError("commander record has length " + std::to_string(commander_record.size()) +
                     ", expected " + std::to_string(scheme.stream_length()));
  }
  if (order > 1) throw ParameterError("order must be 0 or 1");
  const auto width = static_cast<std::size_t>(scheme.lieutenants());
  CommandVector v;
  v.recipient = lieutenant;
  v.order = order;
  v.entries.assign(scheme.stream_length(), Entry::Masked);
  for (int k = 0; k < scheme.tuples(); ++k) {
    if (commander_record[scheme.anticorrelated_index(lieutenant, k)] != order) continue;
    const std::size_t base = static_cast<std::size_t>(k) * width;
    for (std::size_t s = 0; s < width; ++s) {
      v.entries[base + s] = static_cast<Entry>(commander_record[base + s]);
    }
  }
  return v;
}

bool tuple_revealed(const IndexScheme& scheme, const CommandVector& v, int tuple) {
  const auto width = static_cast<std::size_t>(scheme.lieutenants());
  const std::size_t base = static_cast<std::size_t>(tuple) * width;
  for (std::size_t s = 0; s < width; ++s) {
    if (v.entries[base + s] != Entry::Masked) return true;
  }
  return false;
}

int revealed_tuple_count(const IndexScheme& scheme, const CommandVector& v) {
  int r = 0;
  for (int k = 0; k < scheme.tuples(); ++k) r += tuple_revealed(scheme, v, k) ? 1 : 0;
  return r;
}

}  // namespace qdba::protocol
