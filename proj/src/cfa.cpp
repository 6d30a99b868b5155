#include "floerbox/cfa.hpp"

#include "floerbox/error.hpp"

namespace floerbox {

int TypeAStructure::find(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return -1;
}

size_t TypeAStructure::count_idem(Idem idem) const {
  size_t c = 0;
  for (const auto& g : generators) c += (g.idem == idem) ? 1 : 0;
  return c;
}

TypeAStructure mazur_cfa_minus() {
  TypeAStructure a;
  a.h_a = group_element_halves(-1, 0, 2, -1);

  auto add = [&](const char* name, Idem idem, int64_t a2, int64_t b2,
                 int64_t c2, int64_t d) {
    a.generators.push_back({name, idem, group_element_halves(a2, b2, c2, d)});
  };
  add("x0", Idem::I0, 0, 0, 0, 0);
  add("x1", Idem::I1, 1, -1, -1, 0);
  add("x2", Idem::I0, 1, -2, 0, 0);
  add("x3", Idem::I1, 1, -3, -1, 1);
  add("x4", Idem::I0, 0, -4, 0, 1);
  add("x5", Idem::I1, -1, -1, 1, 1);
  add("x6", Idem::I1, -3, -3, 1, 2);
  add("y1", Idem::I1, -1, -1, 1, 1);
  add("y2", Idem::I0, -1, -2, 0, 1);
  add("y3", Idem::I1, -1, -3, -1, 2);
  add("y4", Idem::I0, -2, -4, 0, 2);
  add("y5", Idem::I1, -3, -1, 1, 2);
  add("y6", Idem::I1, -5, -3, 1, 3);

  auto op = [&](const char* src, std::vector<Chord> chords, const char* dst,
                int64_t u) {
    a.operations.push_back(
        {a.find(src), std::move(chords), a.find(dst), u});
  };
  op("x1", {Chord::R2}, "x0", 0);
  op("x2", {Chord::R1}, "x1", 0);
  op("x4", {Chord::R1}, "x3", 0);
  op("y4", {Chord::R1}, "y3", 0);
  op("y2", {Chord::R1}, "y1", 1);
  op("x2", {Chord::R12}, "x0", 0);
  op("x4", {Chord::R3, Chord::R2, Chord::R1}, "x6", 1);
  op("x2", {Chord::R3, Chord::R2, Chord::R1}, "x5", 1);
  op("x1", {}, "y1", 2);
  op("x1", {Chord::R23}, "y1", 1);
  op("x4", {Chord::R123, Chord::R2, Chord::R1}, "y5", 1);
  op("x3", {Chord::R23, Chord::R2, Chord::R1}, "y5", 1);
  op("x2", {}, "y2", 1);
  op("x3", {}, "y3", 1);
  op("x4", {}, "y4", 1);
  op("x5", {}, "y5", 1);
  op("x6", {}, "y6", 1);
  op("x3", {Chord::R2}, "y2", 0);
  op("x4", {Chord::R12}, "y2", 0);
  op("y3", {Chord::R2, Chord::R1}, "y1", 0);
  op("y4", {Chord::R12, Chord::R1}, "y1", 0);
  op("y4", {Chord::R3, Chord::R2, Chord::R1}, "y6", 1);
  op("y2", {Chord::R3, Chord::R2, Chord::R1}, "y5", 1);
  op("x0", {Chord::R3}, "y1", 1);
  op("x2", {Chord::R123}, "y1", 1);

  check_operation_gradings(a);
  return a;
}

TypeAStructure mazur_cfa_hat() {
  TypeAStructure a = mazur_cfa_minus();
  std::vector<AOperation> kept;
  for (const auto& o : a.operations)
    if (o.u_power == 0) kept.push_back(o);
  a.operations = std::move(kept);
  return a;
}

TypeAStructure cable21_cfa_hat() {
  TypeAStructure a;
  a.h_a = group_element_halves(-1, 0, 2, 2);
  a.generators.push_back({"a", Idem::I0, group_element_halves(0, 0, 0, 0)});
  a.generators.push_back({"b1", Idem::I1, group_element_halves(1, 1, -1, -1)});
  a.generators.push_back({"b2", Idem::I1, group_element_halves(-1, 1, -1, 0)});
  a.operations.push_back({0, {Chord::R1}, 2, 0});
  check_operation_gradings(a);
  return a;
}

void check_operation_gradings(const TypeAStructure& a) {
  for (const auto& o : a.operations) {
    Idem cur = a.generators[o.src].idem;
    for (Chord c : o.chords) {
      if (left_idem(c) != cur)
        throw Error(ErrorCode::Structure,
                    "operation chords incompatible with idempotents");
      cur = right_idem(c);
    }
    if (cur != a.generators[o.dst].idem)
      throw Error(ErrorCode::Structure,
                  "operation target incompatible with idempotents");

    int64_t l = static_cast<int64_t>(o.chords.size());
    GroupElement want =
        group_mul(a.generators[o.src].gr, group_pow(group_lambda(), l - 1));
    for (Chord c : o.chords) want = group_mul(want, chord_grading(c));
    want = group_mul(want, GroupElement{0, 0, 0, o.u_power});

    const GroupElement& have = a.generators[o.dst].gr;
    int64_t diff = checked_sub(have.c2, want.c2);
    if (a.h_a.c2 == 0 || diff % a.h_a.c2 != 0)
      throw Error(ErrorCode::Structure,
                  "operation grading shift is not a power of the pattern "
                  "period");
    int64_t p = diff / a.h_a.c2;
    if (!(group_mul(group_pow(a.h_a, p), want) == have))
      throw Error(ErrorCode::Structure,
                  "operation grading mismatch at " +
                      a.generators[o.src].name + " -> " +
                      a.generators[o.dst].name);
  }
}

}  // namespace floerbox
