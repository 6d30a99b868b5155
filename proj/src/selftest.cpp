#include "floerbox/selftest.hpp"

#include <algorithm>
#include <map>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "floerbox/cfa.hpp"
#include "floerbox/cfd.hpp"
#include "floerbox/cfk.hpp"
#include "floerbox/homology.hpp"
#include "floerbox/invariants.hpp"
#include "floerbox/laurent.hpp"
#include "floerbox/tensor.hpp"

namespace floerbox {

namespace {

using NameGrade = std::pair<std::string, int64_t>;
using NamePair = std::pair<std::string, std::string>;

std::string box(const std::string& a, const std::string& d) {
  return a + " ⊠ " + d;
}

HfkTable satellite_table(const CfkModel& companion, int64_t n) {
  return hfk_from_complex(box_tensor(mazur_cfa_hat(), build_cfd(companion, n)));
}

std::string diff_multisets(const std::string& what,
                           std::vector<NameGrade> expected,
                           std::vector<NameGrade> actual) {
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected == actual) return "";
  std::ostringstream out;
  out << what << ": expected " << expected.size() << " entries, got "
      << actual.size();
  for (const auto& e : expected)
    if (!std::binary_search(actual.begin(), actual.end(), e))
      out << "; missing " << e.first << " @ " << e.second;
  for (const auto& a : actual)
    if (!std::binary_search(expected.begin(), expected.end(), a))
      out << "; extra " << a.first << " @ " << a.second;
  return out.str();
}

std::string diff_pair_sets(const std::string& what,
                           std::vector<NamePair> expected,
                           std::vector<NamePair> actual) {
  std::sort(expected.begin(), expected.end());
  std::sort(actual.begin(), actual.end());
  if (expected == actual) return "";
  std::ostringstream out;
  out << what << ": expected " << expected.size() << " arrows, got "
      << actual.size();
  for (const auto& e : expected)
    if (!std::binary_search(actual.begin(), actual.end(), e))
      out << "; missing " << e.first << " -> " << e.second;
  for (const auto& a : actual)
    if (!std::binary_search(expected.begin(), expected.end(), a))
      out << "; extra " << a.first << " -> " << a.second;
  return out.str();
}

std::vector<NameGrade> survivors_by_alexander(const HfkTable& table) {
  std::vector<NameGrade> out;
  for (const auto& g : table.survivors) out.push_back({g.name, g.a_rel});
  return out;
}

std::vector<NameGrade> survivors_by_delta(const HfkTable& table) {
  std::vector<NameGrade> out;
  for (const auto& g : table.survivors)
    out.push_back({g.name, g.n_grading + g.a_rel});
  return out;
}

// Surviving generators of the twisted Mazur satellite of the right-handed
// trefoil at framing -2, with relative Alexander degrees.
std::string check_rht_survivor_table() {
  const int64_t n = -2;
  HfkTable table = satellite_table(build_thin_model({1, {}}), n);

  std::vector<NameGrade> expected = {
      {box("x0", "eta0"), 1},
      {box("x2", "eta0"), 1 + n},
      {box("y2", "eta0"), 2 + n},
      {box("x4", "eta0"), 2 * n + 2},
      {box("y4", "eta0"), 2 * n + 3},
      {box("x0", "eta1"), 0},
      {box("y2", "eta1"), n + 1},
      {box("y1", "lambda1^eta1"), 1},
      {box("x5", "lambda1^eta1"), 1},
      {box("y5", "lambda1^eta1"), 2},
      {box("x6", "lambda1^eta1"), n + 2},
      {box("y6", "lambda1^eta1"), n + 3},
      {box("y1", "kappa1^eta1"), n + 2},
      {box("x5", "kappa1^eta1"), n + 2},
      {box("y5", "kappa1^eta1"), n + 3},
      {box("x6", "kappa1^eta1"), 2 * n + 3},
      {box("y6", "kappa1^eta1"), 2 * n + 4},
  };
  for (int64_t j = 2; j <= 2 - n; ++j) {
    std::string mu = "mu" + std::to_string(j);
    expected.push_back({box("x1", mu), n + j - 2});
    expected.push_back({box("y1", mu), n + j});
    expected.push_back({box("x3", mu), 2 * n + j - 1});
    expected.push_back({box("y3", mu), 2 * n + j});
  }
  for (int64_t j = 1; j <= 2 - n; ++j) {
    std::string mu = "mu" + std::to_string(j);
    expected.push_back({box("x5", mu), n + j});
    expected.push_back({box("y5", mu), n + j + 1});
    expected.push_back({box("x6", mu), 2 * n + j + 1});
    expected.push_back({box("y6", mu), 2 * n + j + 2});
  }

  return diff_multisets("trefoil framing -2 survivors", expected,
                        survivors_by_alexander(table));
}

// Extremal Alexander degrees of the trefoil satellites across framings,
// with the generators realizing them.
std::string check_rht_extremes() {
  struct Row {
    int64_t n;
    int64_t min_a;
    std::vector<std::string> min_names;
    int64_t max_a;
    std::vector<std::string> max_names;
  };
  const std::vector<Row> rows = {
      {-3, -5, {box("x3", "mu2")}, 3, {box("y5", "mu5")}},
      {-1,
       -1,
       {box("x1", "mu2"), box("x3", "mu2")},
       3,
       {box("y5", "mu3"), box("y6", "mu3")}},
      {0,
       0,
       {box("x0", "eta1"), box("x1", "mu2")},
       4,
       {box("y6", "kappa1^eta1"), box("y6", "mu2")}},
      {1, 0, {box("x0", "eta1")}, 6, {box("y6", "kappa1^eta1")}},
      {2, 0, {box("x0", "eta1")}, 8, {box("y6", "kappa1^eta1")}},
      {5, 0, {box("x0", "eta1")}, 14, {box("y6", "kappa1^eta1")}},
  };

  CfkModel trefoil = build_thin_model({1, {}});
  for (const Row& row : rows) {
    HfkTable table = satellite_table(trefoil, row.n);
    int64_t min_a = table.survivors.front().a_rel;
    int64_t max_a = min_a;
    for (const auto& g : table.survivors) {
      min_a = std::min(min_a, g.a_rel);
      max_a = std::max(max_a, g.a_rel);
    }
    std::vector<std::string> min_names, max_names;
    for (const auto& g : table.survivors) {
      if (g.a_rel == min_a) min_names.push_back(g.name);
      if (g.a_rel == max_a) max_names.push_back(g.name);
    }
    std::sort(min_names.begin(), min_names.end());
    std::sort(max_names.begin(), max_names.end());
    std::vector<std::string> want_min = row.min_names;
    std::vector<std::string> want_max = row.max_names;
    std::sort(want_min.begin(), want_min.end());
    std::sort(want_max.begin(), want_max.end());
    if (min_a != row.min_a || max_a != row.max_a || min_names != want_min ||
        max_names != want_max) {
      std::ostringstream out;
      out << "framing " << row.n << ": extremes (" << min_a << ", " << max_a
          << ") with " << min_names.size() << "/" << max_names.size()
          << " generators, wanted (" << row.min_a << ", " << row.max_a << ")";
      return out.str();
    }
  }
  return "";
}

// Homology of the Mazur pattern against one square summand: thirty
// survivors with known relative delta degrees.
std::string check_square_summand() {
  const int64_t tau = 1, a = 2, n = 0;
  CfkModel model = build_thin_model({tau, {{-a, 1}, {a, 1}}});
  HfkTable table = satellite_table(model, n);

  // Squares are numbered by ascending center, so center +a is summand #2.
  std::vector<NameGrade> actual;
  for (const auto& g : table.survivors)
    if (g.name.find("#2") != std::string::npos)
      actual.push_back({g.name, g.n_grading + g.a_rel});

  const int64_t lo = -tau - 2 * a;        // -5
  const int64_t mid = -tau + n + 1;       // 0
  const int64_t hi = -tau + 2 * a;        // 3
  std::vector<NameGrade> expected = {
      {box("x2", "s3#2"), mid},
      {box("x2", "s4#2"), mid},
      {box("x0", "s1#2"), lo},
      {box("x0", "s3#2"), lo + 2},
      {box("x4", "s3#2"), hi},
      {box("x4", "s4#2"), hi + 2},
      {box("y2", "s1#2"), mid},
      {box("y2", "s3#2"), mid},
      {box("y4", "s3#2"), hi},
      {box("y4", "s4#2"), hi + 2},
      {box("x5", "kappa1^s1#2"), mid},
      {box("y5", "kappa1^s1#2"), mid},
      {box("x6", "kappa1^s1#2"), hi},
      {box("y6", "kappa1^s1#2"), hi},
      {box("x5", "kappa1^s2#2"), mid},
      {box("y5", "kappa1^s2#2"), mid},
      {box("x6", "kappa1^s2#2"), hi + 2},
      {box("y6", "kappa1^s2#2"), hi + 2},
      {box("y1", "kappa1^s1#2"), mid},
      {box("x5", "lambda1^s1#2"), lo},
      {box("y5", "lambda1^s1#2"), lo},
      {box("x6", "lambda1^s1#2"), mid},
      {box("y6", "lambda1^s1#2"), mid},
      {box("x5", "lambda1^s3#2"), lo + 2},
      {box("y5", "lambda1^s3#2"), lo + 2},
      {box("x6", "lambda1^s3#2"), mid},
      {box("y6", "lambda1^s3#2"), mid},
      {box("y1", "lambda1^s1#2"), lo},
      {box("y1", "lambda1^s3#2"), lo + 2},
      {box("y3", "lambda1^s3#2"), mid + 1},
  };

  return diff_multisets("square summand survivors", expected, actual);
}

// Staircase-summand survivors for a thin companion with tau = 2 at framing
// zero, with relative delta degrees.
std::string check_staircase_deltas() {
  const int64_t tau = 2, n = 0;
  HfkTable table = satellite_table(build_thin_model({tau, {}}), n);

  std::vector<NameGrade> expected;
  auto eta = [](int64_t p) { return "eta" + std::to_string(p); };
  // eta(2*tau) is the distinguished vertical survivor, named xi0.
  auto eta_or_xi = [&](int64_t p) {
    return p == 2 * tau ? std::string("xi0") : eta(p);
  };
  for (int64_t i = 0; i <= tau - 1; ++i) {
    expected.push_back({box("x2", eta_or_xi(2 * i)), -tau + n + 1});
    expected.push_back({box("x4", eta_or_xi(2 * i)), -3 * tau + 4 * i + 2});
    expected.push_back({box("y4", eta_or_xi(2 * i)), -3 * tau + 4 * i + 2});
  }
  for (int64_t i = 1; i <= tau; ++i) {
    std::string lam = "lambda1^" + eta(2 * i - 1);
    std::string kap = "kappa1^" + eta(2 * i - 1);
    expected.push_back({box("x0", eta(2 * i - 1)), tau - 4 * i + 2});
    expected.push_back({box("y2", eta(2 * i - 1)), -tau + n + 1});
    expected.push_back({box("x6", lam), -tau + n + 1});
    expected.push_back({box("y6", lam), -tau + n + 1});
    expected.push_back({box("y1", lam), tau - 4 * i + 2});
    expected.push_back({box("x5", lam), tau - 4 * i + 2});
    expected.push_back({box("y5", lam), tau - 4 * i + 2});
    expected.push_back({box("y1", kap), -tau + n + 1});
    expected.push_back({box("x5", kap), -tau + n + 1});
    expected.push_back({box("y5", kap), -tau + n + 1});
    expected.push_back({box("x6", kap), -3 * tau + 4 * i - 2});
    expected.push_back({box("y6", kap), -3 * tau + 4 * i - 2});
  }
  for (int64_t i = 1; i <= tau - 1; ++i)
    expected.push_back(
        {box("y3", "lambda1^" + eta(2 * i - 1)), -tau + n + 2});
  expected.push_back({box("x0", eta(0)), tau});
  expected.push_back({box("y2", eta(0)), -tau + n + 1});
  for (int64_t j = 2; j <= 2 * tau - n; ++j) {
    std::string mu = "mu" + std::to_string(j);
    expected.push_back({box("x1", mu), -tau + j + n - 1});
    expected.push_back({box("y1", mu), -tau + j + n});
    expected.push_back({box("x3", mu), tau - j + 2});
    expected.push_back({box("y3", mu), tau - j + 2});
  }
  for (int64_t j = 1; j <= 2 * tau - n; ++j) {
    std::string mu = "mu" + std::to_string(j);
    expected.push_back({box("x5", mu), -tau + j + n});
    expected.push_back({box("y5", mu), -tau + j + n});
    expected.push_back({box("x6", mu), tau - j + 1});
    expected.push_back({box("y6", mu), tau - j + 1});
  }

  return diff_multisets("staircase survivors", expected,
                        survivors_by_delta(table));
}

// Differential census for the trefoil satellites on both sides of the
// framing threshold, and for the left-handed trefoil (epsilon -1).
std::string check_census() {
  CfkModel rht = build_thin_model({1, {}});
  CfkModel lht = build_thin_model({-1, {}});

  auto arrows = [](const CfkModel& k, int64_t n) {
    return differential_pairs(box_tensor(mazur_cfa_hat(), build_cfd(k, n)));
  };

  const std::vector<NamePair> rht_common = {
      {box("x1", "lambda1^eta1"), box("x0", "xi0")},
      {box("x3", "lambda1^eta1"), box("y2", "xi0")},
      {box("x2", "eta1"), box("x1", "kappa1^eta1")},
      {box("x4", "eta1"), box("x3", "kappa1^eta1")},
      {box("y4", "eta1"), box("y3", "kappa1^eta1")},
  };
  const std::vector<NamePair> lht_common = {
      {box("x1", "lambda1^xi0"), box("x0", "eta1")},
      {box("x3", "lambda1^xi0"), box("y2", "eta1")},
      {box("x2", "eta0"), box("x1", "kappa1^eta0")},
      {box("x4", "eta0"), box("x3", "kappa1^eta0")},
      {box("y4", "eta0"), box("y3", "kappa1^eta0")},
  };

  struct Case {
    const CfkModel* model;
    int64_t n;
    const std::vector<NamePair>* common;
    std::vector<NamePair> extra;
    const char* what;
  };
  const std::vector<Case> cases = {
      {&rht,
       -1,
       &rht_common,
       {{box("y3", "lambda1^eta1"), box("y1", "mu1")},
        {box("x2", "xi0"), box("x1", "mu1")},
        {box("x4", "xi0"), box("x3", "mu1")},
        {box("y4", "xi0"), box("y3", "mu1")}},
       "trefoil framing -1"},
      {&rht,
       2,
       &rht_common,
       {{box("x2", "xi0"), box("x0", "eta0")},
        {box("x4", "xi0"), box("y2", "eta0")}},
       "trefoil framing 2"},
      {&rht,
       3,
       &rht_common,
       {{box("x1", "mu1"), box("x0", "eta0")},
        {box("x3", "mu1"), box("y2", "eta0")}},
       "trefoil framing 3"},
      {&lht,
       -4,
       &lht_common,
       {{box("x2", "xi0"), box("x1", "mu1")},
        {box("x4", "xi0"), box("x3", "mu1")},
        {box("y4", "xi0"), box("y3", "mu1")}},
       "mirror trefoil framing -4"},
      {&lht,
       -2,
       &lht_common,
       {{box("x2", "xi0"), box("x0", "eta0")},
        {box("x4", "xi0"), box("y2", "eta0")},
        {box("y4", "xi0"), box("y1", "kappa1^eta0")}},
       "mirror trefoil framing -2"},
      {&lht,
       0,
       &lht_common,
       {{box("x1", "mu2"), box("x0", "eta0")},
        {box("x3", "mu2"), box("y2", "eta0")},
        {box("y3", "mu2"), box("y1", "kappa1^eta0")}},
       "mirror trefoil framing 0"},
  };

  for (const Case& c : cases) {
    std::vector<NamePair> expected = *c.common;
    expected.insert(expected.end(), c.extra.begin(), c.extra.end());
    std::string err = diff_pair_sets(c.what, expected, arrows(*c.model, c.n));
    if (!err.empty()) return err;
  }
  return "";
}

// Staircase bigradings for a deep L-space companion match the closed form.
std::string check_lspace_gradings() {
  CfkModel m = build_lspace_model({1, {5, 4, 2, 1}});
  const std::vector<std::pair<std::string, std::pair<int64_t, int64_t>>>
      expected = {
          {"xi0", {5, 0}},    {"omega1", {4, -1}},  {"omega2", {2, -2}},
          {"omega3", {1, -3}}, {"omega4", {0, -4}},  {"theta3", {-1, -5}},
          {"theta2", {-2, -6}}, {"theta1", {-4, -9}}, {"eta0", {-5, -10}},
      };
  if (m.generators.size() != expected.size())
    return "staircase generator count mismatch";
  for (const auto& [name, am] : expected) {
    int idx = m.find(name);
    if (idx < 0) return "missing staircase generator " + name;
    if (m.generators[idx].alexander != am.first ||
        m.generators[idx].maslov != am.second) {
      std::ostringstream out;
      out << "staircase " << name << " at ("
          << m.generators[idx].alexander << ", " << m.generators[idx].maslov
          << "), wanted (" << am.first << ", " << am.second << ")";
      return out.str();
    }
  }
  return "";
}

// Graded Euler characteristics of the unknot satellites at key framings,
// and their second derivatives at one.
std::string check_alexander_anchors() {
  CfkModel unknot = build_thin_model({0, {}});
  struct Anchor {
    int64_t n;
    std::vector<std::pair<int64_t, int64_t>> coeffs;  // (exponent, value)
    int64_t second_derivative;
  };
  const std::vector<Anchor> anchors = {
      {-2, {{2, 1}, {0, -1}, {-2, 1}}, 8},
      {-1, {{1, 2}, {0, -3}, {-1, 2}}, 4},
      {1, {{2, -1}, {1, 2}, {0, -1}, {-1, 2}, {-2, -1}}, -4},
  };
  for (const Anchor& anchor : anchors) {
    LaurentPoly chi = satellite_table(unknot, anchor.n).chi();
    if (chi.evaluate_at_one() == -1) chi = chi.negate();
    LaurentPoly want;
    for (const auto& [e, c] : anchor.coeffs) want.add_term(c, e);
    if (!(chi == want)) {
      std::ostringstream out;
      out << "satellite polynomial at framing " << anchor.n << " is "
          << chi.to_string();
      return out.str();
    }
    if (chi.second_derivative_at_one() != anchor.second_derivative) {
      std::ostringstream out;
      out << "second derivative at framing " << anchor.n << " is "
          << chi.second_derivative_at_one() << ", wanted "
          << anchor.second_derivative;
      return out.str();
    }
  }
  return "";
}

// Closed-form thickness agrees with the computed tables at spot framings.
std::string check_thickness_spots() {
  struct Spot {
    CfkModel model;
    int64_t n;
    int64_t want;
  };
  const std::vector<Spot> spots = {
      {build_thin_model({0, {{0, 1}}}), -10, 11},  // figure-eight class
      {build_thin_model({0, {{0, 1}}}), 0, 2},
      {build_thin_model({0, {{0, 1}}}), 10, 12},
      {build_lspace_model({1, {3, 2}}), -10, 15},
      {build_lspace_model({1, {3, 2}}), 10, 17},
      {build_lspace_model({1, {2, 1}}), 0, 6},
  };
  for (const Spot& spot : spots) {
    HfkTable table = satellite_table(spot.model, spot.n);
    Invariants inv = derive_invariants(table);
    auto closed = thickness_formula(spot.model, spot.n);
    if (inv.thickness != spot.want)
      return "computed thickness " + std::to_string(inv.thickness) +
             ", wanted " + std::to_string(spot.want);
    if (!closed || *closed != spot.want)
      return "closed-form thickness disagrees with " +
             std::to_string(spot.want);
  }
  return "";
}

}  // namespace

bool run_selftest(std::ostream& out) {
  struct Entry {
    const char* name;
    std::string (*check)();
  };
  const std::vector<Entry> entries = {
      {"trefoil-survivor-table", check_rht_survivor_table},
      {"trefoil-extremal-degrees", check_rht_extremes},
      {"square-summand-table", check_square_summand},
      {"staircase-delta-table", check_staircase_deltas},
      {"differential-census", check_census},
      {"lspace-grading-form", check_lspace_gradings},
      {"alexander-anchors", check_alexander_anchors},
      {"thickness-spot-checks", check_thickness_spots},
  };
  bool all_ok = true;
  for (const Entry& entry : entries) {
    std::string detail;
    try {
      detail = entry.check();
    } catch (const std::exception& e) {
      detail = std::string("exception: ") + e.what();
    }
    if (detail.empty()) {
      out << "ok " << entry.name << "\n";
    } else {
      all_ok = false;
      out << "FAIL " << entry.name << ": " << detail << "\n";
    }
  }
  out << (all_ok ? "selftest passed" : "selftest FAILED") << "\n";
  return all_ok;
}

}  // namespace floerbox
