#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "floerbox/algebra.hpp"
#include "floerbox/cfk.hpp"
#include "floerbox/grading.hpp"

namespace floerbox {

// Type D structure of a framed knot complement over the torus algebra.
// Generators carry an idempotent and a grading group element; an edge
// (src, dst, label) records the coefficient rho_label of dst in the
// structure map applied to src.

struct DGenerator {
  std::string name;
  Idem idem = Idem::I0;
  GroupElement gr{};
};

struct DEdge {
  int src = 0;
  int dst = 0;
  Chord label = Chord::R1;
};

struct TypeDStructure {
  std::vector<DGenerator> generators;
  std::vector<DEdge> edges;
  GroupElement h_d{};
  int64_t framing = 0;
  int64_t tau = 0;
  int epsilon = 0;

  int find(const std::string& name) const;
  size_t count_idem(Idem idem) const;
};

// Builds the framed-complement type D structure from a reduced companion
// model: one idempotent-zero generator per model generator, a coefficient
// chain per arrow, and the framing-dependent unstable chain from xi0 to
// eta0.
TypeDStructure build_cfd(const CfkModel& model, int64_t framing);

// Checks each edge's grading against the structure-map constraint, allowing
// shifts by powers of h_d on the right. Throws on violation.
void check_edge_gradings(const TypeDStructure& d);

// Graphviz rendering for debugging.
std::string to_dot(const TypeDStructure& d);

}  // namespace floerbox
