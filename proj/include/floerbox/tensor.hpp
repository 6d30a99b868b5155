#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "floerbox/cfa.hpp"
#include "floerbox/cfd.hpp"

namespace floerbox {

// Chain complex over F2 with an absolute homological grading and a relative
// Alexander grading. Differentials are stored mod 2 as ordered pairs.

struct BigradedGenerator {
  std::string name;
  int64_t n_grading = 0;
  int64_t a_rel = 0;
};

struct BigradedComplex {
  std::vector<BigradedGenerator> generators;
  std::vector<std::pair<int, int>> differentials;

  int find(const std::string& name) const;
};

// Pairs idempotent-matched generators of the two sides and produces one
// differential per operation-path match, reduced mod 2. Gradings of pairs
// are normalized into the double coset hit by both period elements; every
// surviving differential must drop the homological grading by one and
// preserve the Alexander grading.
BigradedComplex box_tensor(const TypeAStructure& a, const TypeDStructure& d);

// Name pairs of the differentials, sorted, for census checks.
std::vector<std::pair<std::string, std::string>> differential_pairs(
    const BigradedComplex& c);

}  // namespace floerbox
