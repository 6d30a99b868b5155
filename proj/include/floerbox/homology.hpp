#pragma once

#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "floerbox/laurent.hpp"
#include "floerbox/tensor.hpp"

namespace floerbox {

// Homology of a bigraded complex over F2, presented as a rank table in the
// absolute Alexander grading (fixed by the symmetry of the theory) and the
// relative delta grading n_grading + a_rel.

struct HfkTable {
  std::vector<BigradedGenerator> survivors;
  int64_t shift = 0;  // absolute Alexander degree = a_rel + shift

  // rank by (absolute Alexander degree, relative delta grading)
  std::map<std::pair<int64_t, int64_t>, int64_t> ranks;

  LaurentPoly chi() const;
  int64_t total_rank() const;
  int64_t genus() const;
  int64_t top_rank() const;
  int64_t thickness() const;
};

// Cancels differentials two generators at a time until none remain. The
// selection order is lexicographic in the generator names (reversed when
// asked, which must not change the resulting rank table).
std::vector<BigradedGenerator> morse_cancel(const BigradedComplex& c,
                                            bool reverse_order = false);

// Checks the differential squares to zero, cancels it, centers the Alexander
// grading, and verifies the rank table is symmetric under Alexander
// negation.
HfkTable hfk_from_complex(const BigradedComplex& c);

}  // namespace floerbox
