#include "floerbox/cfk.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "floerbox/grading.hpp"

namespace floerbox {

namespace {

int64_t parity_sign(int64_t m) { return (m % 2 == 0) ? 1 : -1; }

}  // namespace

int64_t CfkModel::genus() const {
  int64_t g = 0;
  for (const auto& x : generators) g = std::max(g, x.alexander);
  return g;
}

int CfkModel::find(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return -1;
}

bool LspaceSpec::step_condition_holds() const {
  // The leading step r[0] - r[1] is always one and sits outside the chain:
  // the condition constrains l_1 >= ... >= l_{k-1} >= r_k only.
  if (k() <= 1) return true;
  int64_t prev = -1;
  for (size_t i = 1; i + 1 < r.size(); ++i) {
    int64_t step = r[i] - r[i + 1];
    if (prev >= 0 && step > prev) return false;
    prev = step;
  }
  return prev >= r.back();
}

CfkModel build_thin_model(const ThinSpec& spec) {
  CfkModel m;
  m.tau = spec.tau;
  int64_t at = spec.tau >= 0 ? spec.tau : -spec.tau;

  if (spec.tau == 0) {
    m.generators.push_back({"eta0", 0, 0});
    m.epsilon = 0;
    m.xi0 = 0;
    m.eta0 = 0;
  } else if (spec.tau > 0) {
    // Staircase eta0, ..., eta(2t-1), xi0 with A = -tau + i, M = -2*tau + i;
    // odd-index generators point horizontally up-chain and vertically
    // down-chain.
    for (int64_t i = 0; i <= 2 * at; ++i) {
      std::string name = (i == 2 * at) ? "xi0" : "eta" + std::to_string(i);
      m.generators.push_back({name, -spec.tau + i, -2 * spec.tau + i});
    }
    for (int64_t i = 1; i <= at; ++i) {
      m.horizontal.push_back({static_cast<int>(2 * i - 1),
                              static_cast<int>(2 * i), 1});
      m.vertical.push_back({static_cast<int>(2 * i - 1),
                            static_cast<int>(2 * i - 2), 1});
    }
    m.epsilon = 1;
    m.xi0 = static_cast<int>(2 * at);
    m.eta0 = 0;
  } else {
    // Mirror orientation: even-index generators are the arrow sources, so
    // eta0 starts a vertical arrow.
    for (int64_t i = 0; i <= 2 * at; ++i) {
      std::string name = (i == 2 * at) ? "xi0" : "eta" + std::to_string(i);
      m.generators.push_back({name, -spec.tau - i, -2 * spec.tau - i});
    }
    for (int64_t i = 1; i <= at; ++i) {
      m.vertical.push_back({static_cast<int>(2 * i - 2),
                            static_cast<int>(2 * i - 1), 1});
      m.horizontal.push_back({static_cast<int>(2 * i),
                              static_cast<int>(2 * i - 1), 1});
    }
    m.epsilon = -1;
    m.xi0 = static_cast<int>(2 * at);
    m.eta0 = 0;
  }

  std::map<int64_t, int64_t> counts;
  for (const auto& sq : spec.squares) {
    if (sq.count <= 0)
      throw Error(ErrorCode::Domain, "square count must be positive");
    counts[sq.center] = checked_add(counts[sq.center], sq.count);
  }
  for (const auto& [center, count] : counts) {
    auto it = counts.find(-center);
    if (it == counts.end() || it->second != count)
      throw Error(ErrorCode::Domain,
                  "square counts must be symmetric under center negation");
  }

  int64_t summand = 0;
  for (const auto& [a, count] : counts) {
    for (int64_t copy = 0; copy < count; ++copy) {
      ++summand;
      std::string suffix = "#" + std::to_string(summand);
      int base = static_cast<int>(m.generators.size());
      // Distinguished corner s1 at (a, a - tau); the summand spans Alexander
      // degrees a - 1 .. a + 1 on the same diagonal.
      m.generators.push_back({"s1" + suffix, a, a - spec.tau});
      m.generators.push_back({"s2" + suffix, a + 1, a - spec.tau + 1});
      m.generators.push_back({"s3" + suffix, a - 1, a - spec.tau - 1});
      m.generators.push_back({"s4" + suffix, a, a - spec.tau});
      m.horizontal.push_back({base, base + 1, 1});
      m.horizontal.push_back({base + 2, base + 3, 1});
      m.vertical.push_back({base, base + 2, 1});
      m.vertical.push_back({base + 1, base + 3, 1});
    }
  }

  validate(m);
  return m;
}

CfkModel build_lspace_model(const LspaceSpec& spec) {
  if (spec.sign != 1 && spec.sign != -1)
    throw Error(ErrorCode::Domain, "staircase sign must be +1 or -1");
  if (spec.r.empty())
    throw Error(ErrorCode::Domain, "exponent list must be nonempty");
  for (size_t i = 0; i < spec.r.size(); ++i) {
    if (spec.r[i] < 1)
      throw Error(ErrorCode::Domain, "exponents must be positive");
    if (i > 0 && spec.r[i] >= spec.r[i - 1])
      throw Error(ErrorCode::Domain, "exponents must be strictly decreasing");
  }
  int64_t k = spec.k();
  int64_t g = spec.r[0];
  if (k >= 1 && spec.r[1] != g - 1)
    throw Error(ErrorCode::Domain, "second exponent must be genus - 1");

  // Palindromic step widths along the staircase.
  std::vector<int64_t> steps;
  if (k == 0) {
    steps = {g, g};
  } else {
    steps.push_back(1);
    for (int64_t i = 1; i < k; ++i) steps.push_back(spec.r[i] - spec.r[i + 1]);
    steps.push_back(spec.r[k]);
    for (int64_t i = static_cast<int64_t>(steps.size()) - 1; i >= 0; --i)
      steps.push_back(steps[i]);
  }
  int64_t len = static_cast<int64_t>(steps.size());  // 2k + 2 generators - 1

  CfkModel m;
  m.tau = spec.sign > 0 ? g : -g;
  m.epsilon = spec.sign;

  auto chain_name = [&](int64_t p) -> std::string {
    int64_t last = len;
    if (p == 0) return spec.sign > 0 ? "xi0" : "eta0";
    if (p == last) return spec.sign > 0 ? "eta0" : "xi0";
    if (p <= k + 1) return "omega" + std::to_string(p);
    return "theta" + std::to_string(last - p);
  };

  // Alexander degrees fall by the step widths from +g; Maslov degrees fall
  // by one along vertical arrows and by 2*width - 1 along horizontal ones.
  int64_t a = g;
  int64_t mm = spec.sign > 0 ? 0 : 2 * g;
  m.generators.push_back({chain_name(0), a, mm});
  for (int64_t p = 0; p < len; ++p) {
    bool odd_sources = spec.sign > 0;  // odd chain positions start arrows
    bool vertical_step = odd_sources ? (p % 2 == 1) : (p % 2 == 0);
    a -= steps[p];
    mm -= vertical_step ? 1 : 2 * steps[p] - 1;
    m.generators.push_back({chain_name(p + 1), a, mm});
    int lo = static_cast<int>(p);
    int hi = static_cast<int>(p + 1);
    if (vertical_step) {
      // Source is the up-chain endpoint for positive staircases (odd p),
      // the up-chain endpoint for negative ones too (even p).
      m.vertical.push_back({lo, hi, steps[p]});
    } else {
      m.horizontal.push_back({hi, lo, steps[p]});
    }
  }

  m.xi0 = m.find("xi0");
  m.eta0 = m.find("eta0");
  validate(m);
  return m;
}

void validate(const CfkModel& model) {
  if (model.generators.empty())
    throw Error(ErrorCode::Model, "model has no generators");

  std::set<std::string> names;
  for (const auto& x : model.generators) {
    if (x.name.empty())
      throw Error(ErrorCode::Model, "generator with empty name");
    if (!names.insert(x.name).second)
      throw Error(ErrorCode::Model, "duplicate generator name: " + x.name);
  }

  int n = static_cast<int>(model.generators.size());
  if (model.xi0 < 0 || model.xi0 >= n || model.eta0 < 0 || model.eta0 >= n)
    throw Error(ErrorCode::Model, "xi0/eta0 out of range");
  if (model.epsilon < -1 || model.epsilon > 1)
    throw Error(ErrorCode::Model, "epsilon must be -1, 0, or 1");

  const auto& xi = model.generators[model.xi0];
  if (xi.alexander != model.tau || xi.maslov != 0)
    throw Error(ErrorCode::Model, "xi0 must sit at (A, M) = (tau, 0)");
  const auto& eta = model.generators[model.eta0];
  if (eta.alexander != -model.tau || eta.maslov != -2 * model.tau)
    throw Error(ErrorCode::Model, "eta0 must sit at (A, M) = (-tau, -2*tau)");

  auto check_arrows = [&](const std::vector<CfkArrow>& arrows, bool vertical) {
    std::set<int> touched;
    for (const auto& ar : arrows) {
      if (ar.src < 0 || ar.src >= n || ar.dst < 0 || ar.dst >= n)
        throw Error(ErrorCode::Model, "arrow endpoint out of range");
      if (ar.src == ar.dst)
        throw Error(ErrorCode::Model, "arrow from a generator to itself");
      if (ar.length < 1)
        throw Error(ErrorCode::Model, "arrow length must be positive");
      const auto& s = model.generators[ar.src];
      const auto& t = model.generators[ar.dst];
      if (vertical) {
        if (t.maslov != s.maslov - 1 || t.alexander != s.alexander - ar.length)
          throw Error(ErrorCode::Model,
                      "vertical arrow bigrading mismatch at " + s.name);
      } else {
        if (t.maslov != s.maslov + 2 * ar.length - 1 ||
            t.alexander != s.alexander + ar.length)
          throw Error(ErrorCode::Model,
                      "horizontal arrow bigrading mismatch at " + s.name);
      }
      // Simplified system: every generator touches at most one arrow of
      // each kind.
      if (!touched.insert(ar.src).second || !touched.insert(ar.dst).second)
        throw Error(ErrorCode::Model,
                    vertical ? "vertical arrows are not simplified"
                             : "horizontal arrows are not simplified");
    }
    return touched;
  };

  std::set<int> vtouched = check_arrows(model.vertical, true);
  std::set<int> htouched = check_arrows(model.horizontal, false);

  std::vector<int> vfree, hfree;
  for (int i = 0; i < n; ++i) {
    if (!vtouched.count(i)) vfree.push_back(i);
    if (!htouched.count(i)) hfree.push_back(i);
  }
  if (vfree.size() != 1 || vfree[0] != model.xi0)
    throw Error(ErrorCode::Model,
                "xi0 must be the unique generator free of vertical arrows");
  if (hfree.size() != 1 || hfree[0] != model.eta0)
    throw Error(ErrorCode::Model,
                "eta0 must be the unique generator free of horizontal arrows");

  if ((model.epsilon == 0) != (model.xi0 == model.eta0))
    throw Error(ErrorCode::Model, "epsilon 0 exactly when xi0 equals eta0");
  if (model.epsilon == 1) {
    bool ok = false;
    for (const auto& ar : model.horizontal) ok = ok || ar.dst == model.xi0;
    if (!ok)
      throw Error(ErrorCode::Model,
                  "epsilon 1 requires xi0 to end a horizontal arrow");
  }
  if (model.epsilon == -1) {
    bool ok = false;
    for (const auto& ar : model.vertical) ok = ok || ar.src == model.eta0;
    if (!ok)
      throw Error(ErrorCode::Model,
                  "epsilon -1 requires eta0 to start a vertical arrow");
  }

  std::map<int64_t, int64_t> acounts;
  for (const auto& x : model.generators) ++acounts[x.alexander];
  for (const auto& [a, c] : acounts) {
    auto it = acounts.find(-a);
    if (it == acounts.end() || it->second != c)
      throw Error(ErrorCode::Model, "Alexander multiset is not symmetric");
  }
  if (n % 2 == 0)
    throw Error(ErrorCode::Model, "generator count must be odd");

  LaurentPoly p = alexander_polynomial(model);
  if (!p.is_symmetric())
    throw Error(ErrorCode::Model, "Euler characteristic is not symmetric");
  int64_t v = p.evaluate_at_one();
  if (v != 1 && v != -1)
    throw Error(ErrorCode::Model,
                "Euler characteristic at t = 1 must be +-1");
}

LaurentPoly alexander_polynomial(const CfkModel& model) {
  LaurentPoly p;
  for (const auto& x : model.generators)
    p.add_term(parity_sign(x.maslov), x.alexander);
  return p;
}

ModelClassification classify(const CfkModel& model) {
  ModelClassification out;
  if (model.is_unknot()) {
    out.kind = ModelClass::Unknot;
    return out;
  }

  bool thin = true;
  for (const auto& x : model.generators)
    thin = thin && (x.maslov - x.alexander == -model.tau);
  if (thin) {
    out.has_squares =
        static_cast<int64_t>(model.generators.size()) >
        2 * (model.tau >= 0 ? model.tau : -model.tau) + 1;
    out.kind =
        ((model.tau == 1 || model.tau == -1) && model.generators.size() == 3)
            ? ModelClass::Trefoil
            : ModelClass::Thin;
    return out;
  }

  // Staircase recognition: generators strictly ordered by Alexander degree
  // and joined into a single path by the arrows.
  size_t count = model.generators.size();
  std::vector<int> order(count);
  for (size_t i = 0; i < count; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return model.generators[x].alexander > model.generators[y].alexander;
  });
  bool strict = true;
  for (size_t i = 0; i + 1 < count; ++i)
    strict = strict && model.generators[order[i]].alexander >
                           model.generators[order[i + 1]].alexander;
  std::set<std::pair<int, int>> adjacent;
  for (const auto& ar : model.vertical)
    adjacent.insert({std::min(ar.src, ar.dst), std::max(ar.src, ar.dst)});
  for (const auto& ar : model.horizontal)
    adjacent.insert({std::min(ar.src, ar.dst), std::max(ar.src, ar.dst)});
  bool path = adjacent.size() == count - 1;
  for (size_t i = 0; path && i + 1 < count; ++i) {
    int x = order[i], y = order[i + 1];
    path = adjacent.count({std::min(x, y), std::max(x, y)}) > 0;
  }
  if (strict && path && count % 2 == 1 && count >= 3) {
    out.kind = ModelClass::Staircase;
    int64_t k = (static_cast<int64_t>(count) - 3) / 2;
    for (int64_t i = 0; i <= k; ++i)
      out.r.push_back(model.generators[order[i]].alexander);
    out.sign = model.generators[order[0]].maslov == 0 ? 1 : -1;
    return out;
  }

  out.kind = ModelClass::Other;
  return out;
}

}  // namespace floerbox
