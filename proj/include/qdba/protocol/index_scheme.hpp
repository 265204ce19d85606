#pragma once

#include <cstddef>

namespace qdba::protocol {

/// Layout of the distributed qubit stream.
///
/// The stream has M tuples of N-1 slots. At stream index p the commander holds
/// one half of an EPR pair and lieutenant p mod (N-1) holds the other half;
/// every other lieutenant receives a |+> filler at p. Lieutenant i therefore
/// shares pairs with the commander at indices i + (N-1)k.
class IndexScheme {
 public:
  /// players = N >= 3 (commander included), tuples = M >= 1.
  IndexScheme(int players, int tuples);

  int players() const { return players_; }
  int tuples() const { return tuples_; }
  int lieutenants() const { return players_ - 1; }
  std::size_t stream_length() const;

  int tuple_of(std::size_t index) const;
  int slot_of(std::size_t index) const;

  /// Stream index of lieutenant i's pair in tuple k. Throws ParameterError.
  std::size_t anticorrelated_index(int lieutenant, int tuple) const;

 private:
  int players_;
  int tuples_;
};

}  // namespace qdba::protocol
