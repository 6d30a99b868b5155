#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floerbox/algebra.hpp"
#include "floerbox/grading.hpp"

namespace floerbox {

// Type A structure of a pattern in the solid torus. An operation records
// m_{1+l}(src, rho_1, ..., rho_l) = U^{u_power} dst; the hat flavor keeps
// only operations with u_power zero.

struct AGenerator {
  std::string name;
  Idem idem = Idem::I0;
  GroupElement gr{};
};

struct AOperation {
  int src = 0;
  std::vector<Chord> chords;
  int dst = 0;
  int64_t u_power = 0;
};

struct TypeAStructure {
  std::vector<AGenerator> generators;
  std::vector<AOperation> operations;
  GroupElement h_a{};

  int find(const std::string& name) const;
  size_t count_idem(Idem idem) const;
};

// The Mazur pattern's minus-flavored module: thirteen generators and the
// full operation list with U coefficients.
TypeAStructure mazur_cfa_minus();

// The same module with U set to zero.
TypeAStructure mazur_cfa_hat();

// The (2,1) cable pattern's hat module: three generators, one operation.
TypeAStructure cable21_cfa_hat();

// Checks each operation's grading against the structure constraint, allowing
// shifts by powers of h_a on the left. Throws on violation.
void check_operation_gradings(const TypeAStructure& a);

}  // namespace floerbox
