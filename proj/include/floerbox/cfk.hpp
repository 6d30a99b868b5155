// Reduced models for a companion knot's bigraded complex: generators with
// (Alexander, Maslov) bigradings plus horizontally and vertically
// simplified arrow systems.  Canned builders cover thin knots (staircase
// plus square summands) and L-space knot staircases given the torsion
// coefficients of the Alexander polynomial.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "floerbox/laurent.hpp"

namespace floerbox {

struct CfkGenerator {
  std::string name;
  int64_t alexander = 0;
  int64_t maslov = 0;
};

// Arrow of the given length between generator indices.  A vertical arrow
// src -> dst of length l satisfies M(dst) = M(src) - 1, A(dst) = A(src) - l;
// a horizontal arrow satisfies M(dst) = M(src) + 2l - 1, A(dst) = A(src) + l.
struct CfkArrow {
  int src = -1;
  int dst = -1;
  int64_t length = 1;
};

struct CfkModel {
  std::vector<CfkGenerator> generators;
  std::vector<CfkArrow> vertical;
  std::vector<CfkArrow> horizontal;
  int64_t tau = 0;
  int epsilon = 0;  // -1, 0, or 1
  int xi0 = -1;     // generator untouched by vertical arrows, (A, M) = (tau, 0)
  int eta0 = -1;    // generator untouched by horizontal arrows, (-tau, -2*tau)

  int64_t genus() const;
  bool is_unknot() const { return generators.size() == 1; }
  int find(const std::string& name) const;  // -1 if absent
};

// Square summand request for thin models: `count` four-generator box
// summands whose distinguished corner sits in Alexander degree `center`.
struct SquareSpec {
  int64_t center = 0;
  int64_t count = 1;
};

struct ThinSpec {
  int64_t tau = 0;
  std::vector<SquareSpec> squares;
};

// L-space staircase request: `sign` +1 or -1 for a positive or negative
// staircase, `r` the strictly decreasing positive exponents of the
// symmetrized Alexander polynomial (r[0] = genus; r[1] = genus - 1 when
// there are at least two).
struct LspaceSpec {
  int sign = 1;
  std::vector<int64_t> r;

  int64_t k() const { return static_cast<int64_t>(r.size()) - 1; }
  // Step condition l_1 >= l_2 >= ... >= l_{k-1} >= r_k (vacuous for k <= 1)
  // under which the closed-form satellite thickness applies.
  bool step_condition_holds() const;
};

CfkModel build_thin_model(const ThinSpec& spec);
CfkModel build_lspace_model(const LspaceSpec& spec);

// Structural checks: unique names, arrow bigrading relations, simplified
// arrow systems with unique untouched generators matching xi0/eta0, anchor
// bigradings A(xi0) = tau, M(xi0) = 0, A(eta0) = -tau, M(eta0) = -2*tau,
// epsilon consistency, symmetric Alexander multiset of odd size, and
// Alexander polynomial evaluating to +-1 at t = 1.  Throws on violation.
void validate(const CfkModel& model);

// Graded Euler characteristic sum((-1)^M t^A); symmetric with value +-1 at
// t = 1 for valid models.
LaurentPoly alexander_polynomial(const CfkModel& model);

// Recognized shape of a model, for closed-form invariants.
enum class ModelClass { Unknot, Trefoil, Thin, Staircase, Other };

struct ModelClassification {
  ModelClass kind = ModelClass::Other;
  // Thin data (kind Thin or Trefoil): whether any square summand exists.
  bool has_squares = false;
  // Staircase data (kind Staircase): recovered exponents, descending.
  std::vector<int64_t> r;
  int sign = 0;
};

ModelClassification classify(const CfkModel& model);

}  // namespace floerbox
