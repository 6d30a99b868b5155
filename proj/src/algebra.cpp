#include "floerbox/algebra.hpp"

namespace floerbox {

Idem left_idem(Chord x) {
  switch (x) {
    case Chord::R1: return Idem::I0;
    case Chord::R2: return Idem::I1;
    case Chord::R3: return Idem::I0;
    case Chord::R12: return Idem::I0;
    case Chord::R23: return Idem::I1;
    case Chord::R123: return Idem::I0;
  }
  throw Error(ErrorCode::Domain, "invalid chord");
}

Idem right_idem(Chord x) {
  switch (x) {
    case Chord::R1: return Idem::I1;
    case Chord::R2: return Idem::I0;
    case Chord::R3: return Idem::I1;
    case Chord::R12: return Idem::I0;
    case Chord::R23: return Idem::I1;
    case Chord::R123: return Idem::I1;
  }
  throw Error(ErrorCode::Domain, "invalid chord");
}

std::optional<Chord> chord_mul(Chord x, Chord y) {
  if (x == Chord::R1 && y == Chord::R2) return Chord::R12;
  if (x == Chord::R2 && y == Chord::R3) return Chord::R23;
  if (x == Chord::R1 && y == Chord::R23) return Chord::R123;
  if (x == Chord::R12 && y == Chord::R3) return Chord::R123;
  return std::nullopt;
}

GroupElement chord_grading(Chord x) {
  switch (x) {
    case Chord::R1: return group_element_halves(-1, 1, -1, 0);
    case Chord::R2: return group_element_halves(-1, 1, 1, 0);
    case Chord::R3: return group_element_halves(-1, -1, 1, 0);
    case Chord::R12:
      return group_mul(chord_grading(Chord::R1), chord_grading(Chord::R2));
    case Chord::R23:
      return group_mul(chord_grading(Chord::R2), chord_grading(Chord::R3));
    case Chord::R123:
      return group_mul(chord_grading(Chord::R12), chord_grading(Chord::R3));
  }
  throw Error(ErrorCode::Domain, "invalid chord");
}

std::string to_string(Chord x) {
  switch (x) {
    case Chord::R1: return "rho1";
    case Chord::R2: return "rho2";
    case Chord::R3: return "rho3";
    case Chord::R12: return "rho12";
    case Chord::R23: return "rho23";
    case Chord::R123: return "rho123";
  }
  return "?";
}

std::string to_string(Idem x) { return x == Idem::I0 ? "i0" : "i1"; }

GroupElement sequence_grading(const std::vector<Chord>& seq) {
  GroupElement g = group_identity();
  for (Chord c : seq) g = group_mul(g, chord_grading(c));
  return g;
}

bool sequence_composable(const std::vector<Chord>& seq) {
  for (size_t i = 0; i + 1 < seq.size(); ++i)
    if (right_idem(seq[i]) != left_idem(seq[i + 1])) return false;
  return true;
}

}  // namespace floerbox
