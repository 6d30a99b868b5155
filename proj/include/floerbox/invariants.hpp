#pragma once

#include <cstdint>
#include <optional>

#include "floerbox/cfk.hpp"
#include "floerbox/homology.hpp"

namespace floerbox {

struct Invariants {
  int64_t genus = 0;
  bool fibered = false;
  int64_t thickness = 0;
  int64_t total_rank = 0;
};

// Reads the invariants off a computed rank table: the genus is the largest
// Alexander degree with nonzero rank, the knot is fibered exactly when the
// rank there is one, and the thickness is the width of the delta grading.
Invariants derive_invariants(const HfkTable& table);

// Rank of the companion's own homology in its top Alexander degree.
bool companion_fibered(const CfkModel& companion);

// Closed forms for the satellite invariants in terms of the companion and
// the framing. Genus and fiberedness are known for every companion; the
// thickness has a closed form for thin companions, for the unknot, and for
// staircase companions whose step widths are nonincreasing and bounded
// below by the final exponent.
int64_t genus_formula(const CfkModel& companion, int64_t n);
bool fibered_formula(const CfkModel& companion, int64_t n);
std::optional<int64_t> thickness_formula(const CfkModel& companion,
                                         int64_t n);

}  // namespace floerbox
