#pragma once

#include <cstddef>
#include <cstdint>
#include <string_view>
#include <vector>

#include "qdba/protocol/index_scheme.hpp"

namespace qdba::protocol {

using Bit = std::uint8_t;

enum class Decision : std::uint8_t { Zero, One, Abort };

inline Decision to_decision(Bit b) { return b ? Decision::One : Decision::Zero; }
std::string_view to_string(Decision d);

/// A node's Z-measurement record, one entry per stream index.
class BitVector {
 public:
  BitVector() = default;
  explicit BitVector(std::vector<Bit> bits) : bits_(std::move(bits)) {}
  explicit BitVector(std::size_t length) : bits_(length, 0) {}

  std::size_t size() const { return bits_.size(); }
  Bit operator[](std::size_t i) const { return bits_[i]; }
  Bit& operator[](std::size_t i) { return bits_[i]; }
  const std::vector<Bit>& bits() const { return bits_; }

  friend bool operator==(const BitVector&, const BitVector&) = default;

 private:
  std::vector<Bit> bits_;
};

enum class Entry : std::uint8_t { Zero = 0, One = 1, Masked = 2 };

/// The commander's masked record, built for one recipient lieutenant.
struct CommandVector {
  int recipient = 0;
  Bit order = 0;
  std::vector<Entry> entries;

  bool is_masked(std::size_t index) const { return entries[index] == Entry::Masked; }
  friend bool operator==(const CommandVector&, const CommandVector&) = default;
};

/// Reveals tuple k iff the commander's bit at the recipient's pair index in
/// that tuple equals `order`; revealed tuples copy all N-1 commander bits.
CommandVector build_command_vector(const BitVector& commander_record, const IndexScheme& scheme,
                                   int lieutenant, Bit order);

inline Bit decode_order(const CommandVector& v) { return v.order; }

/// True if any slot of tuple k is unmasked.
bool tuple_revealed(const IndexScheme& scheme, const CommandVector& v, int tuple);
int revealed_tuple_count(const IndexScheme& scheme, const CommandVector& v);

}  // namespace qdba::protocol
