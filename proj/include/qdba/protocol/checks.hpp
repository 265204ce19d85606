#pragma once

#include "qdba/protocol/command_vector.hpp"
#include "qdba/protocol/index_scheme.hpp"

namespace qdba::protocol {

struct CheckTolerances {
  // Accept a revealed-tuple count r with |r - M/2| <= theta * M.
  double theta = 0.25;
  // Largest tolerated fraction of revealed tuples that break anticorrelation.
  double epsilon = 0.0;
};

void validate(const CheckTolerances& tol);

bool revealed_count_acceptable(const IndexScheme& scheme, int revealed,
                               const CheckTolerances& tol);

/// Lieutenant i's check of the vector the commander sent it (round 1).
///
/// Passes iff the revealed count is in the window, every revealed tuple shows
/// the order at i's pair index, and i's own bit there is 1 - order on all but
/// an epsilon fraction of revealed tuples.
bool check_alice(const IndexScheme& scheme, int i, const BitVector& own_record,
                 const CommandVector& v, const CheckTolerances& tol);

/// Lieutenant i's check of the vector lieutenant j received.
///
/// Count window, self-consistency of j's mask, and a cross-check: the
/// commander bits the vector exposes at i's pair indices must anticorrelate
/// with i's own record.
bool check_lt_cv(const IndexScheme& scheme, int i, const BitVector& own_record, int j,
                 const CommandVector& v_j, const CheckTolerances& tol);

/// Lieutenant i's check of a bit vector claimed by lieutenant j: over tuples
/// revealed in i's own vector, j's bits must anticorrelate with the commander
/// bits at j's pair indices. Vacuously true when i's vector reveals nothing.
bool check_lt_bv(const IndexScheme& scheme, int i, const CommandVector& own_vector, int j,
                 const BitVector& claimed_record, const CheckTolerances& tol);

/// Order clash, or some index revealed in both with different bits.
bool contradicts(const CommandVector& a, const CommandVector& b);

}  // namespace qdba::protocol
