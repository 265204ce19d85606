#include "qdba/protocol/index_scheme.hpp"

#include <string>

#include "qdba/error.hpp"

namespace qdba::protocol {

IndexScheme::IndexScheme(int players, int tuples) : players_(players), tuples_(tuples) {
  if (players < 3) throw ParameterError("need N >= 3 players, got " + std::to_string(players));
  if (tuples < 1) throw ParameterError("need M >= 1 tuples, got " + std::to_string(tuples));
}

std::size_t IndexScheme::stream_length() const {
  return static_cast<std::size_t>(tuples_) * static_cast<std::size_t>(lieutenants());
}

int IndexScheme::tuple_of(std::size_t index) const {
  return static_cast<int>(index / static_cast<std::size_t>(lieutenants()));
}

int IndexScheme::slot_of(std::size_t index) const {
  return static_cast<int>(index % static_cast<std::size_t>(lieutenants()));
}

std::size_t IndexScheme::anticorrelated_index(int lieutenant, int tuple) const {
  if (lieutenant < 0 || lieutenant >= lieutenants()) {
    throw ParameterError("lieutenant " + std::to_string(lieutenant) + " out of range [0," +
                         std::to_string(lieutenants()) + ")");
  }
  if (tuple < 0 || tuple >= tuples_) {
    throw ParameterError("tuple " + std::to_string(tuple) + " out of range [0," +
                         std::to_string(tuples_) + ")");
  }
  return static_cast<std::size_t>(lieutenant) +
         static_cast<std::size_t>(lieutenants()) * static_cast<std::size_t>(tuple);
}

}  // namespace qdba::protocol
