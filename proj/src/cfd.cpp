#include "floerbox/cfd.hpp"

#include <sstream>

#include "floerbox/error.hpp"

namespace floerbox {

namespace {

// lambda^{-1} * gr(rho)^{-1} * g, the grading forced on the target of an
// edge labeled rho when no h_d shift intervenes.
GroupElement forced_target(const GroupElement& g, Chord rho) {
  return group_mul(group_inverse(group_lambda()),
                   group_mul(group_inverse(chord_grading(rho)), g));
}

}  // namespace

int TypeDStructure::find(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return -1;
}

size_t TypeDStructure::count_idem(Idem idem) const {
  size_t c = 0;
  for (const auto& g : generators) c += (g.idem == idem) ? 1 : 0;
  return c;
}

TypeDStructure build_cfd(const CfkModel& model, int64_t framing) {
  validate(model);

  TypeDStructure d;
  d.framing = framing;
  d.tau = model.tau;
  d.epsilon = model.epsilon;
  d.h_d = group_element_halves(checked_sub(-framing, 1), -2,
                               checked_mul(-2, framing), 0);

  for (const auto& x : model.generators) {
    GroupElement gr = group_element_halves(
        checked_sub(checked_mul(2, x.maslov), checked_mul(3, x.alexander)), 0,
        checked_mul(-2, x.alexander), 0);
    d.generators.push_back({x.name, Idem::I0, gr});
  }

  auto add_gen = [&](std::string name, const GroupElement& gr) {
    d.generators.push_back({std::move(name), Idem::I1, gr});
    return static_cast<int>(d.generators.size()) - 1;
  };

  // Vertical arrow of length k: a chain of k coefficient generators joined
  // by rho23 edges pointing down the chain, entered by rho1 from the source
  // and by rho123 from the target.
  for (const auto& ar : model.vertical) {
    const std::string& src = model.generators[ar.src].name;
    int prev = -1;
    for (int64_t j = 1; j <= ar.length; ++j) {
      GroupElement gr =
          (j == 1) ? forced_target(d.generators[ar.src].gr, Chord::R1)
                   : group_mul(chord_grading(Chord::R23),
                               group_mul(group_lambda(), d.generators[prev].gr));
      int cur = add_gen("kappa" + std::to_string(j) + "^" + src, gr);
      if (j == 1)
        d.edges.push_back({ar.src, cur, Chord::R1});
      else
        d.edges.push_back({cur, prev, Chord::R23});
      prev = cur;
    }
    d.edges.push_back({ar.dst, prev, Chord::R123});
  }

  // Horizontal arrow of length l: a chain of l coefficient generators with
  // rho23 edges pointing up the chain, entered by rho3 from the source and
  // leaving by rho2 into the target.
  for (const auto& ar : model.horizontal) {
    const std::string& src = model.generators[ar.src].name;
    int prev = -1;
    for (int64_t j = 1; j <= ar.length; ++j) {
      GroupElement gr = (j == 1)
                            ? forced_target(d.generators[ar.src].gr, Chord::R3)
                            : forced_target(d.generators[prev].gr, Chord::R23);
      int cur = add_gen("lambda" + std::to_string(j) + "^" + src, gr);
      if (j == 1)
        d.edges.push_back({ar.src, cur, Chord::R3});
      else
        d.edges.push_back({prev, cur, Chord::R23});
      prev = cur;
    }
    d.edges.push_back({prev, ar.dst, Chord::R2});
  }

  // Unstable chain between xi0 and eta0, shaped by the framing relative to
  // twice tau.
  int64_t m = checked_sub(checked_mul(2, model.tau), framing);
  if (m == 0) {
    d.edges.push_back({model.xi0, model.eta0, Chord::R12});
  } else if (m > 0) {
    int prev = -1;
    for (int64_t j = 1; j <= m; ++j) {
      GroupElement gr =
          (j == 1) ? forced_target(d.generators[model.xi0].gr, Chord::R1)
                   : group_mul(chord_grading(Chord::R23),
                               group_mul(group_lambda(), d.generators[prev].gr));
      int cur = add_gen("mu" + std::to_string(j), gr);
      if (j == 1)
        d.edges.push_back({model.xi0, cur, Chord::R1});
      else
        d.edges.push_back({cur, prev, Chord::R23});
      prev = cur;
    }
    d.edges.push_back({model.eta0, prev, Chord::R3});
  } else {
    int prev = -1;
    for (int64_t j = 1; j <= -m; ++j) {
      GroupElement gr =
          (j == 1) ? forced_target(d.generators[model.xi0].gr, Chord::R123)
                   : forced_target(d.generators[prev].gr, Chord::R23);
      int cur = add_gen("mu" + std::to_string(j), gr);
      if (j == 1)
        d.edges.push_back({model.xi0, cur, Chord::R123});
      else
        d.edges.push_back({prev, cur, Chord::R23});
      prev = cur;
    }
    d.edges.push_back({prev, model.eta0, Chord::R2});
  }

  for (const auto& e : d.edges) {
    if (left_idem(e.label) != d.generators[e.src].idem ||
        right_idem(e.label) != d.generators[e.dst].idem)
      throw Error(ErrorCode::Structure,
                  "edge label incompatible with idempotents");
  }
  check_edge_gradings(d);
  return d;
}

void check_edge_gradings(const TypeDStructure& d) {
  for (const auto& e : d.edges) {
    GroupElement want = forced_target(d.generators[e.src].gr, e.label);
    GroupElement have = d.generators[e.dst].gr;
    int64_t diff = checked_sub(want.b2, have.b2);
    if (d.h_d.b2 == 0 || diff % d.h_d.b2 != 0)
      throw Error(ErrorCode::Structure,
                  "edge grading shift is not a power of the framing period");
    int64_t p = diff / d.h_d.b2;
    if (!(group_mul(have, group_pow(d.h_d, p)) == want))
      throw Error(ErrorCode::Structure,
                  "edge grading mismatch at " + d.generators[e.src].name +
                      " -> " + d.generators[e.dst].name);
  }
}

std::string to_dot(const TypeDStructure& d) {
  std::ostringstream out;
  out << "digraph cfd {\n";
  for (size_t i = 0; i < d.generators.size(); ++i) {
    const auto& g = d.generators[i];
    out << "  n" << i << " [label=\"" << g.name << "\\n"
        << (g.idem == Idem::I0 ? "i0 " : "i1 ") << to_string(g.gr)
        << "\"];\n";
  }
  for (const auto& e : d.edges)
    out << "  n" << e.src << " -> n" << e.dst << " [label=\""
        << to_string(e.label) << "\"];\n";
  out << "}\n";
  return out.str();
}

}  // namespace floerbox
