// Noncommutative grading group for bordered invariants of torus-boundary
// manifolds.  Elements are quadruples (a; b, c; d): a central Maslov
// component and a spin-c pair (b, c) twisted by a determinant cocycle, plus
// an extra integer winding component d.  a, b, c range over half-integers
// with b + c integral; they are stored doubled so all arithmetic is exact.
#pragma once

#include <cstdint>
#include <string>

#include "floerbox/error.hpp"

namespace floerbox {

int64_t checked_add(int64_t x, int64_t y);
int64_t checked_sub(int64_t x, int64_t y);
int64_t checked_mul(int64_t x, int64_t y);

struct GroupElement {
  // Doubled values of a, b, c; d is stored as-is.
  int64_t a2 = 0;
  int64_t b2 = 0;
  int64_t c2 = 0;
  int64_t d = 0;

  bool operator==(const GroupElement&) const = default;
};

// Element with all slots integral (doubled values even).
GroupElement group_element(int64_t a, int64_t b, int64_t c, int64_t d);

// Element from doubled a, b, c.  Requires b2 + c2 even (b + c integral).
GroupElement group_element_halves(int64_t a2, int64_t b2, int64_t c2,
                                  int64_t d);

GroupElement group_identity();

// Central element lambda = (1; 0, 0; 0); differentials drop gradings by one
// lambda factor.
GroupElement group_lambda();

// Group law: (a1;b1,c1;d1)*(a2;b2,c2;d2) =
//   (a1 + a2 + b1*c2 - c1*b2; b1 + b2, c1 + c2; d1 + d2).
GroupElement group_mul(const GroupElement& x, const GroupElement& y);

GroupElement group_inverse(const GroupElement& x);

// Integer power; exact because the determinant term of an element with
// itself vanishes, so powers are slot-wise multiples.
GroupElement group_pow(const GroupElement& x, int64_t k);

// Renders half-integers as fractions, e.g. "(-1/2; 1/2, -1/2; 0)".
std::string to_string(const GroupElement& x);

// Reduction data for a double coset <h_a> \ G / <h_d>.  Validity: h_d has
// b-slot -1 (right multiplication can clear any integral b), h_a has b-slot
// 0 and c-slot +-1 (left multiplication then clears c without disturbing b).
struct DoubleCosetContext {
  GroupElement h_a;
  GroupElement h_d;
};

DoubleCosetContext make_coset_context(const GroupElement& h_a,
                                      const GroupElement& h_d);

// Canonical double-coset representative (a; 0, 0; d): first right-multiply
// by the unique power of h_d clearing the b-slot, then left-multiply by the
// unique power of h_a clearing the c-slot.  The surviving a-slot is the
// absolute z-normalized Maslov grading and d the relative Alexander grading.
struct NormalizedGrading {
  int64_t maslov = 0;     // a-slot of the reduced representative
  int64_t alexander = 0;  // d-slot of the reduced representative

  int64_t delta() const { return checked_add(maslov, alexander); }

  bool operator==(const NormalizedGrading&) const = default;
};

NormalizedGrading normalize_double_coset(const GroupElement& g,
                                         const DoubleCosetContext& ctx);

}  // namespace floerbox
