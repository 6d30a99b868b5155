#include <optional>
#include <vector>

#include "doctest.h"
#include "floerbox/algebra.hpp"

using namespace floerbox;

TEST_SUITE("algebra") {
  TEST_CASE("multiplication table has exactly four nonzero products") {
    int nonzero = 0;
    for (Chord x : kAllChords)
      for (Chord y : kAllChords)
        if (chord_mul(x, y)) ++nonzero;
    CHECK(nonzero == 4);
    CHECK(chord_mul(Chord::R1, Chord::R2) == Chord::R12);
    CHECK(chord_mul(Chord::R2, Chord::R3) == Chord::R23);
    CHECK(chord_mul(Chord::R1, Chord::R23) == Chord::R123);
    CHECK(chord_mul(Chord::R12, Chord::R3) == Chord::R123);
    CHECK_FALSE(chord_mul(Chord::R2, Chord::R1).has_value());
    CHECK_FALSE(chord_mul(Chord::R3, Chord::R3).has_value());
  }

  TEST_CASE("idempotent bimodule structure") {
    CHECK(left_idem(Chord::R1) == Idem::I0);
    CHECK(right_idem(Chord::R1) == Idem::I1);
    CHECK(left_idem(Chord::R2) == Idem::I1);
    CHECK(right_idem(Chord::R2) == Idem::I0);
    CHECK(left_idem(Chord::R3) == Idem::I0);
    CHECK(right_idem(Chord::R3) == Idem::I1);
    CHECK(left_idem(Chord::R12) == Idem::I0);
    CHECK(right_idem(Chord::R12) == Idem::I0);
    CHECK(left_idem(Chord::R23) == Idem::I1);
    CHECK(right_idem(Chord::R23) == Idem::I1);
    CHECK(left_idem(Chord::R123) == Idem::I0);
    CHECK(right_idem(Chord::R123) == Idem::I1);
  }

  TEST_CASE("products compose only through matching idempotents") {
    for (Chord x : kAllChords)
      for (Chord y : kAllChords)
        if (auto p = chord_mul(x, y)) {
          CHECK(right_idem(x) == left_idem(y));
          CHECK(left_idem(*p) == left_idem(x));
          CHECK(right_idem(*p) == right_idem(y));
        }
  }

  TEST_CASE("refined gradings") {
    CHECK(chord_grading(Chord::R1) == group_element_halves(-1, 1, -1, 0));
    CHECK(chord_grading(Chord::R2) == group_element_halves(-1, 1, 1, 0));
    CHECK(chord_grading(Chord::R3) == group_element_halves(-1, -1, 1, 0));
    CHECK(chord_grading(Chord::R12) == group_element_halves(-1, 2, 0, 0));
    CHECK(chord_grading(Chord::R23) == group_element_halves(-1, 0, 2, 0));
    CHECK(chord_grading(Chord::R123) == group_element_halves(-1, 1, 1, 0));
  }

  TEST_CASE("grading is multiplicative on nonzero products") {
    for (Chord x : kAllChords)
      for (Chord y : kAllChords)
        if (auto p = chord_mul(x, y))
          CHECK(group_mul(chord_grading(x), chord_grading(y)) ==
                chord_grading(*p));
  }

  TEST_CASE("sequence composability") {
    CHECK(sequence_composable({}));
    CHECK(sequence_composable({Chord::R1, Chord::R2, Chord::R3}));
    CHECK(sequence_composable({Chord::R3, Chord::R23, Chord::R2}));
    CHECK_FALSE(sequence_composable({Chord::R1, Chord::R3}));
    CHECK_FALSE(sequence_composable({Chord::R12, Chord::R2}));
  }

  TEST_CASE("sequence grading multiplies chord gradings") {
    CHECK(sequence_grading({}) == group_identity());
    CHECK(sequence_grading({Chord::R1, Chord::R2}) ==
          group_mul(chord_grading(Chord::R1), chord_grading(Chord::R2)));
    CHECK(sequence_grading({Chord::R1, Chord::R2}) ==
          chord_grading(Chord::R12));
  }

  TEST_CASE("names render as rho subscripts") {
    CHECK(to_string(Chord::R123) == "rho123");
    CHECK(to_string(Idem::I0) == "i0");
  }
}
