#include "floerbox/invariants.hpp"

namespace floerbox {

Invariants derive_invariants(const HfkTable& table) {
  Invariants inv;
  inv.genus = table.genus();
  inv.fibered = table.top_rank() == 1;
  inv.thickness = table.thickness();
  inv.total_rank = table.total_rank();
  return inv;
}

bool companion_fibered(const CfkModel& companion) {
  int64_t g = companion.genus();
  int64_t count = 0;
  for (const auto& x : companion.generators)
    count += (x.alexander == g) ? 1 : 0;
  return count == 1;
}

int64_t genus_formula(const CfkModel& companion, int64_t n) {
  if (companion.is_unknot()) return (n <= 0) ? -n : n + 1;
  int64_t g = companion.genus();
  return (n <= -1) ? g - n : g + n + 1;
}

bool fibered_formula(const CfkModel& companion, int64_t n) {
  if (companion.is_unknot()) return n != -1;
  return companion_fibered(companion) && n != -1 && n != 0;
}

std::optional<int64_t> thickness_formula(const CfkModel& companion,
                                         int64_t n) {
  if (companion.is_unknot()) return (n <= -1) ? -n - 1 : n;

  ModelClassification cls = classify(companion);
  int64_t g = companion.genus();

  if (cls.kind == ModelClass::Thin || cls.kind == ModelClass::Trefoil) {
    // The one exception to the uniform piecewise form: a plain positive
    // one-step staircase at framing one. The mirror does not dip.
    if (cls.kind == ModelClass::Trefoil && companion.tau == 1 &&
        !cls.has_squares && n == 1)
      return 2;
    if (n <= -2 * g) return 2 * g - n - 1;
    if (n <= 2 * g - 2) return 4 * g - 2;
    return 2 * g + n;
  }

  if (cls.kind == ModelClass::Staircase) {
    int64_t k = static_cast<int64_t>(cls.r.size()) - 1;
    if (k < 1) return std::nullopt;
    LspaceSpec spec;
    spec.sign = cls.sign;
    spec.r = cls.r;
    if (!spec.step_condition_holds()) return std::nullopt;
    int64_t r2 = (k >= 2) ? cls.r[2] : 0;
    if (cls.sign == 1) {
      if (n <= -2 * g) return 2 * g - n - 1;
      if (n <= g + r2) return 4 * g - 2;
      return 3 * g - r2 + n - 2;
    }
    // Mirror staircase: the profile is the positive one reflected through
    // framing -1/2, so th(n) here equals the positive form at -1 - n. Both
    // forms coincide exactly when r2 = g - 2 (the two-strand torus knots,
    // which are also thin).
    if (n <= -(g + r2 + 2)) return 3 * g - r2 - n - 3;
    if (n <= 2 * g - 2) return 4 * g - 2;
    return 2 * g + n;
  }

  return std::nullopt;
}

}  // namespace floerbox
