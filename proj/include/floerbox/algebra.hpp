// Algebra associated to a parametrized torus boundary: two idempotents and
// six Reeb-chord elements with a closed multiplication table and zero
// differential.  Every product is zero or a single basis element, so the
// algebra is represented as a plain enumeration.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "floerbox/grading.hpp"

namespace floerbox {

enum class Idem : uint8_t { I0, I1 };

enum class Chord : uint8_t { R1, R2, R3, R12, R23, R123 };

constexpr Chord kAllChords[] = {Chord::R1,  Chord::R2,  Chord::R3,
                                Chord::R12, Chord::R23, Chord::R123};

// Idempotent compatibility: chord x equals left_idem(x) * x * right_idem(x).
Idem left_idem(Chord x);
Idem right_idem(Chord x);

// Single-term products: r1*r2 = r12, r2*r3 = r23, r1*r23 = r123,
// r12*r3 = r123; every other chord pair multiplies to zero (nullopt).
std::optional<Chord> chord_mul(Chord x, Chord y);

// Grading refined over the full grading group; multiplicative on nonzero
// products and intertwined with the idempotent decomposition.
GroupElement chord_grading(Chord x);

std::string to_string(Chord x);
std::string to_string(Idem x);

// Product of gradings along a chord sequence (identity for the empty one).
GroupElement sequence_grading(const std::vector<Chord>& seq);

// True when consecutive chords are composable through matching idempotents
// (right_idem of each equals left_idem of the next).
bool sequence_composable(const std::vector<Chord>& seq);

}  // namespace floerbox
