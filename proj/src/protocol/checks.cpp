#include "qdba/protocol/checks.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "qdba/error.hpp"

namespace qdba::protocol {
namespace {

bool mismatches_tolerated(int mismatches, int revealed, double epsilon) {
  return static_cast<double>(mismatches) <= epsilon * static_cast<double>(revealed) + 1e-9;
}

bool is_bit(Entry e, Bit b) { return e == static_cast<Entry>(b); }

bool well_formed(const IndexScheme& scheme, const CommandVector& v) {
  return v.entries.size() == scheme.stream_length() && v.order <= 1;
}

}  // namespace

void validate(const CheckTolerances& tol) {
  if (!(tol.theta >= 0.0 && tol.theta <= 0.5)) {
    throw ParameterError("theta must be in [0, 0.5], got " + std::to_string(tol.theta));
  }
  if (!(tol.epsilon >= 0.0 && tol.epsilon <= 1.0)) {
    throw ParameterError("epsilon must be in [0, 1], got " + std::to_string(tol.epsilon));
  }
}

bool revealed_count_acceptable(const IndexScheme& scheme, int revealed,
                               const CheckTolerances& tol) {
  const double m = scheme.tuples();
  return std::abs(revealed - m / 2.0) <= tol.theta * m + 1e-9;
}

bool check_alice(const IndexScheme& scheme, int i, const BitVector& own_record,
                 const CommandVector& v, const CheckTolerances& tol) {
  if (own_record.size() != scheme.stream_length()) {
    throw ShapeError("record length " + std::to_string(own_record.size()) + " != " +
                     std::to_string(scheme.stream_length()));
  }
  if (!well_formed(scheme, v)) return false;
  const Bit order = decode_order(v);
  int revealed = 0;
  int mismatches = 0;
  for (int k = 0; k < scheme.tuples(); ++k) {
    if (!tuple_revealed(scheme, v, k)) continue;
    ++revealed;
    const std::size_t p = scheme.anticorrelated_index(i, k);
    if (!is_bit(v.entries[p], order)) return false;
    if (own_record[p] != 1 - order) ++mismatches;
  }
  return revealed_count_acceptable(scheme, revealed, tol) &&
         mismatches_tolerated(mismatches, revealed, tol.epsilon);
}

bool check_lt_cv(const IndexScheme& scheme, int i, const BitVector& own_record, int j,
                 const CommandVector& v_j, const CheckTolerances& tol) {
  if (i == j) throw ParameterError("check_lt_cv: i and j must differ");
  if (!well_formed(scheme, v_j) || own_record.size() != scheme.stream_length()) return false;
  const Bit order = decode_order(v_j);
  int revealed = 0;
  int mismatches = 0;
  for (int k = 0; k < scheme.tuples(); ++k) {
    if (!tuple_revealed(scheme, v_j, k)) continue;
    ++revealed;
    if (!is_bit(v_j.entries[scheme.anticorrelated_index(j, k)], order)) return false;
    const std::size_t mine = scheme.anticorrelated_index(i, k);
    if (!is_bit(v_j.entries[mine], static_cast<Bit>(1 - own_record[mine]))) ++mismatches;
  }
  return revealed_count_acceptable(scheme, revealed, tol) &&
         mismatches_tolerated(mismatches, revealed, tol.epsilon);
}

bool check_lt_bv(const IndexScheme& scheme, int /*i*/, const CommandVector& own_vector, int j,
                 const BitVector& claimed_record, const CheckTolerances& tol) {
  if (!well_formed(scheme, own_vector) || claimed_record.size() != scheme.stream_length()) {
    return false;
  }
  int revealed = 0;
  int mismatches = 0;
  for (int k = 0; k < scheme.tuples(); ++k) {
    if (!tuple_revealed(scheme, own_vector, k)) continue;
    ++revealed;
    const std::size_t theirs = scheme.anticorrelated_index(j, k);
    const Entry commander_bit = own_vector.entries[theirs];
    if (commander_bit == Entry::Masked ||
        claimed_record[theirs] != 1 - static_cast<Bit>(commander_bit)) {
      ++mismatches;
    }
  }
  return mismatches_tolerated(mismatches, revealed, tol.epsilon);
}

bool contradicts(const CommandVector& a, const CommandVector& b) {
  if (decode_order(a) != decode_order(b)) return true;
  const std::size_t n = std::min(a.entries.size(), b.entries.size());
  for (std::size_t p = 0; p < n; ++p) {
    if (a.entries[p] != Entry::Masked && b.entries[p] != Entry::Masked &&
        a.entries[p] != b.entries[p]) {
      return true;
    }
  }
  return false;
}

}  // namespace qdba::protocol
