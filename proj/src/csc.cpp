#include "floerbox/csc.hpp"

#include <cmath>

#include "floerbox/cfa.hpp"
#include "floerbox/cfd.hpp"
#include "floerbox/error.hpp"
#include "floerbox/homology.hpp"
#include "floerbox/invariants.hpp"
#include "floerbox/tensor.hpp"

namespace floerbox {

const char* to_string(CscStatus s) {
  switch (s) {
    case CscStatus::Verified: return "verified";
    case CscStatus::Exceptional: return "exceptional";
    case CscStatus::Inconclusive: return "inconclusive";
  }
  return "?";
}

const char* to_string(CscObstruction o) {
  switch (o) {
    case CscObstruction::BoyerLines: return "boyer_lines";
    case CscObstruction::NiWu: return "ni_wu";
    case CscObstruction::HanselmanF: return "hanselman_f";
    case CscObstruction::HanselmanSlopes: return "hanselman_slopes";
    case CscObstruction::None: return "none";
  }
  return "?";
}

std::string to_string(const SlopePair& p) {
  std::string s = "+-" + std::to_string(p.numerator);
  if (p.q != 1) s += "/" + std::to_string(p.q);
  return s;
}

namespace {

LaurentPoly quintuple(int64_t c2, int64_t c1, int64_t c0) {
  LaurentPoly p;
  p.add_term(c2, 2);
  p.add_term(c1, 1);
  p.add_term(c0, 0);
  p.add_term(c1, -1);
  p.add_term(c2, -2);
  return p;
}

struct Family {
  const char* id;
  int64_t numerator;  // slope pair {+-numerator} or {+-1} via numerator=1
  int64_t n;
  bool needs_negative_tau;        // required regardless of strictness
  bool needs_negative_tau_strict; // required only under the strict flag
};

// The exceptional family table: slope pair, framing, polynomial shape, and
// the parameter range for the quadratic shapes.
bool family_polynomial_matches(const std::string& id, const LaurentPoly& p) {
  if (id == "g1.n-1.pm2" || id == "g1.n-1.pm1") {
    LaurentPoly q;
    q.add_term(2, 1);
    q.add_term(-5, 0);
    q.add_term(2, -1);
    return p.equals_up_to_sign(q);
  }
  int64_t top = p.coeff(2);
  if (top < 0) top = -top;
  if (id == "g2.n-1.pm1.a") {
    int64_t b = top;
    return b >= 1 &&
           p.equals_up_to_sign(quintuple(b, -(4 * b + 2), 6 * b + 5));
  }
  if (id == "g2.n-1.pm1.b") {
    int64_t b = top;
    return b >= 2 &&
           p.equals_up_to_sign(quintuple(b, -(4 * b - 2), 6 * b - 5));
  }
  if (id == "g2.n-1.pm1.c") {
    int64_t b = top - 1;
    return b >= 0 &&
           p.equals_up_to_sign(quintuple(b + 1, -(4 * b + 6), 6 * b + 11));
  }
  if (id == "g2.n0.pm1.a") {
    int64_t b = top;
    return b >= 1 && p.equals_up_to_sign(quintuple(b, -4 * b, 6 * b - 1));
  }
  if (id == "g2.n0.pm1.b") {
    int64_t b = top;
    return b >= 1 && p.equals_up_to_sign(quintuple(b, -4 * b, 6 * b + 1));
  }
  return false;
}

constexpr Family kFamilies[] = {
    {"g1.n-1.pm2", 2, -1, false, false},
    {"g1.n-1.pm1", 1, -1, false, false},
    {"g2.n-1.pm1.a", 1, -1, false, false},
    {"g2.n-1.pm1.b", 1, -1, false, false},
    {"g2.n-1.pm1.c", 1, -1, false, false},
    {"g2.n0.pm1.a", 1, 0, false, true},
    {"g2.n0.pm1.b", 1, 0, true, false},
};

}  // namespace

CscVerdict check_csc(const CfkModel& companion, int64_t n,
                     std::optional<int64_t> tau_satellite, bool strict_tau) {
  if (companion.is_unknot() && n == 0)
    throw Error(ErrorCode::Domain,
                "the untwisted satellite of the trivial knot is trivial");

  TypeAStructure pattern = mazur_cfa_hat();
  HfkTable table =
      hfk_from_complex(box_tensor(pattern, build_cfd(companion, n)));
  Invariants inv = derive_invariants(table);

  ThinSpec trivial;
  CfkModel unknot = build_thin_model(trivial);
  HfkTable pattern_table =
      hfk_from_complex(box_tensor(pattern, build_cfd(unknot, n)));

  CscVerdict v;
  v.genus = inv.genus;
  v.thickness = inv.thickness;
  v.alexander = pattern_table.chi() * alexander_polynomial(companion);
  v.alexander_second_derivative = v.alexander.second_derivative_at_one();

  if (v.alexander_second_derivative != 0) {
    v.status = CscStatus::Verified;
    v.obstruction = CscObstruction::BoyerLines;
    return v;
  }
  if (tau_satellite.has_value() && *tau_satellite != 0) {
    v.status = CscStatus::Verified;
    v.obstruction = CscObstruction::NiWu;
    return v;
  }

  int64_t g = inv.genus;
  int64_t th = inv.thickness;
  if (g >= 3 && 2 * g * g - 4 * g - th > 0) {
    v.status = CscStatus::Verified;
    v.obstruction = CscObstruction::HanselmanF;
    return v;
  }

  if (g < 2)
    throw Error(ErrorCode::Structure,
                "slope enumeration reached with genus below two");
  if (g == 2) v.candidate_pairs.push_back({2, 1});
  int64_t q_max = (th + 2 * g) / (2 * g * (g - 1));
  for (int64_t q = 1; q <= q_max; ++q) v.candidate_pairs.push_back({1, q});

  if (v.candidate_pairs.empty()) {
    v.status = CscStatus::Verified;
    v.obstruction = CscObstruction::HanselmanSlopes;
    return v;
  }

  ModelClassification cls = classify(companion);
  bool thin_companion =
      cls.kind == ModelClass::Thin || cls.kind == ModelClass::Trefoil;
  LaurentPoly delta_k = alexander_polynomial(companion);
  for (const Family& f : kFamilies) {
    if (!thin_companion || n != f.n) continue;
    bool pair_live = false;
    for (const auto& p : v.candidate_pairs)
      pair_live = pair_live || (p.numerator == f.numerator && p.q == 1);
    if (!pair_live) continue;
    if (f.needs_negative_tau && companion.tau != -1) continue;
    if (strict_tau && f.needs_negative_tau_strict && companion.tau != -1)
      continue;
    if (!family_polynomial_matches(f.id, delta_k)) continue;
    v.status = CscStatus::Exceptional;
    v.family = f.id;
    return v;
  }

  v.status = CscStatus::Inconclusive;
  return v;
}

}  // namespace floerbox
