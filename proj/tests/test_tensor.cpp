#include <algorithm>
#include <cctype>
#include <optional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "doctest.h"
#include "floerbox/cfa.hpp"
#include "floerbox/cfd.hpp"
#include "floerbox/cfk.hpp"
#include "floerbox/tensor.hpp"

using namespace floerbox;

namespace {

struct SplitName {
  std::string left;
  std::string right;
};

SplitName split_box(const std::string& name) {
  size_t pos = name.find(" ⊠ ");
  REQUIRE(pos != std::string::npos);
  return {name.substr(0, pos), name.substr(pos + 5)};
}

struct ChainRef {
  std::string kind;  // "gen", "kappa", "lambda", "mu"
  int64_t j = 0;
  std::string source;  // companion generator owning the chain
};

ChainRef parse_side(const CfkModel& model, const std::string& dname) {
  if (model.find(dname) >= 0) return {"gen", 0, dname};
  for (const char* prefix : {"kappa", "lambda", "mu"}) {
    std::string p = prefix;
    if (dname.rfind(p, 0) == 0) {
      size_t i = p.size();
      size_t start = i;
      while (i < dname.size() &&
             std::isdigit(static_cast<unsigned char>(dname[i])))
        ++i;
      ChainRef ref;
      ref.kind = p;
      ref.j = std::stoll(dname.substr(start, i - start));
      if (i < dname.size() && dname[i] == '^') ref.source = dname.substr(i + 1);
      return ref;
    }
  }
  FAIL("unrecognized generator name " << dname);
  return {};
}

// Closed-form bigrading of a tensor-product generator in terms of the
// companion bigradings, the chain index, the framing, and the invariant tau.
std::optional<std::pair<int64_t, int64_t>> expected_bigrading(
    const CfkModel& model, int64_t n, const std::string& aname,
    const ChainRef& ref) {
  int64_t tau = model.tau;
  if (ref.kind == "gen") {
    int idx = model.find(ref.source);
    int64_t A = model.generators[idx].alexander;
    int64_t M = model.generators[idx].maslov;
    if (aname == "x0") return {{M - 2 * A, -A}};
    if (aname == "x2") return {{M + 1, -A + n}};
    if (aname == "y2") return {{M, -A + n + 1}};
    if (aname == "x4") return {{M + 2 * A - 2 * n + 1, -A + 2 * n + 1}};
    if (aname == "y4") return {{M + 2 * A - 2 * n, -A + 2 * n + 2}};
    return std::nullopt;
  }
  int64_t j = ref.j;
  if (ref.kind == "kappa") {
    int idx = model.find(ref.source);
    int64_t A = model.generators[idx].alexander;
    int64_t M = model.generators[idx].maslov;
    if (aname == "x1") return {{M, -A + j + n - 1}};
    if (aname == "y1") return {{M - 1, -A + j + n + 1}};
    if (aname == "x3") return {{M + 2 * A - 2 * j - 2 * n + 2, -A + j + 2 * n}};
    if (aname == "y3")
      return {{M + 2 * A - 2 * j - 2 * n + 1, -A + j + 2 * n + 1}};
    if (aname == "x5") return {{M - 1, -A + j + n + 1}};
    if (aname == "y5") return {{M - 2, -A + j + n + 2}};
    if (aname == "x6")
      return {{M + 2 * A - 2 * j - 2 * n - 1, -A + j + 2 * n + 2}};
    if (aname == "y6")
      return {{M + 2 * A - 2 * j - 2 * n - 2, -A + j + 2 * n + 3}};
    return std::nullopt;
  }
  if (ref.kind == "lambda") {
    int idx = model.find(ref.source);
    int64_t A = model.generators[idx].alexander;
    int64_t M = model.generators[idx].maslov;
    if (aname == "x1") return {{M - 2 * A, -A - j}};
    if (aname == "y1") return {{M - 2 * A - 1, -A - j + 2}};
    if (aname == "x3") return {{M + 2 * j, -A - j + n + 1}};
    if (aname == "y3") return {{M + 2 * j - 1, -A - j + n + 2}};
    if (aname == "x5") return {{M - 2 * A - 1, -A - j + 2}};
    if (aname == "y5") return {{M - 2 * A - 2, -A - j + 3}};
    if (aname == "x6") return {{M + 2 * j - 3, -A - j + n + 3}};
    if (aname == "y6") return {{M + 2 * j - 4, -A - j + n + 4}};
    return std::nullopt;
  }
  REQUIRE(ref.kind == "mu");
  if (n < 2 * tau) {
    if (aname == "x1") return {{0, -tau + j + n - 1}};
    if (aname == "y1") return {{-1, -tau + j + n + 1}};
    if (aname == "x3")
      return {{2 * tau - 2 * j - 2 * n + 2, -tau + j + 2 * n}};
    if (aname == "y3")
      return {{2 * tau - 2 * j - 2 * n + 1, -tau + j + 2 * n + 1}};
    if (aname == "x5") return {{-1, -tau + j + n + 1}};
    if (aname == "y5") return {{-2, -tau + j + n + 2}};
    if (aname == "x6")
      return {{2 * tau - 2 * j - 2 * n - 1, -tau + j + 2 * n + 2}};
    if (aname == "y6")
      return {{2 * tau - 2 * j - 2 * n - 2, -tau + j + 2 * n + 3}};
  } else {
    if (aname == "x1") return {{1, -tau - j + n}};
    if (aname == "y1") return {{0, -tau - j + n + 2}};
    if (aname == "x3")
      return {{2 * tau + 2 * j - 2 * n + 1, -tau - j + 2 * n + 1}};
    if (aname == "y3")
      return {{2 * tau + 2 * j - 2 * n, -tau - j + 2 * n + 2}};
    if (aname == "x5") return {{0, -tau - j + n + 2}};
    if (aname == "y5") return {{-1, -tau - j + n + 3}};
    if (aname == "x6")
      return {{2 * tau + 2 * j - 2 * n - 2, -tau - j + 2 * n + 3}};
    if (aname == "y6")
      return {{2 * tau + 2 * j - 2 * n - 3, -tau - j + 2 * n + 4}};
  }
  return std::nullopt;
}

CfkModel random_model(std::mt19937& rng) {
  std::uniform_int_distribution<int> kind(0, 2);
  if (kind(rng) < 2) {
    std::uniform_int_distribution<int64_t> tau_dist(-3, 3);
    std::uniform_int_distribution<int> square_sets(0, 2);
    std::uniform_int_distribution<int64_t> center_dist(0, 3);
    std::uniform_int_distribution<int64_t> count_dist(1, 2);
    ThinSpec spec{tau_dist(rng), {}};
    int sets = square_sets(rng);
    std::vector<int64_t> used;
    for (int s = 0; s < sets; ++s) {
      int64_t c = center_dist(rng);
      bool dup = false;
      for (int64_t u : used) dup = dup || u == c;
      if (dup) continue;
      used.push_back(c);
      int64_t count = count_dist(rng);
      spec.squares.push_back({c, count});
      if (c != 0) spec.squares.push_back({-c, count});
    }
    return build_thin_model(spec);
  }
  std::uniform_int_distribution<int64_t> g_dist(2, 6);
  std::uniform_int_distribution<int> coin(0, 1);
  int64_t g = g_dist(rng);
  std::vector<int64_t> r = {g, g - 1};
  for (int64_t e = g - 2; e >= 1; --e)
    if (coin(rng)) r.push_back(e);
  return build_lspace_model({coin(rng) ? 1 : -1, r});
}

}  // namespace

TEST_SUITE("tensor") {
  TEST_CASE("generators pair through matching idempotents") {
    TypeAStructure a = mazur_cfa_hat();
    for (int64_t n : {-2, 0, 3}) {
      TypeDStructure d = build_cfd(build_thin_model({1, {}}), n);
      BigradedComplex c = box_tensor(a, d);
      CHECK(c.generators.size() == a.count_idem(Idem::I0) *
                                           d.count_idem(Idem::I0) +
                                       a.count_idem(Idem::I1) *
                                           d.count_idem(Idem::I1));
    }
  }

  TEST_CASE("differentials drop the homological grading by exactly one") {
    TypeAStructure a = mazur_cfa_hat();
    std::vector<CfkModel> models = {
        build_thin_model({-2, {}}),
        build_thin_model({0, {{0, 1}}}),
        build_lspace_model({1, {3, 2}}),
    };
    for (const CfkModel& m : models)
      for (int64_t n : {-4, 0, 1, 6}) {
        BigradedComplex c = box_tensor(a, build_cfd(m, n));
        CHECK_FALSE(c.differentials.empty());
        for (auto [i, j] : c.differentials) {
          CHECK(c.generators[i].n_grading == c.generators[j].n_grading + 1);
          CHECK(c.generators[i].a_rel == c.generators[j].a_rel);
        }
      }
  }

  TEST_CASE("closed-form bigradings over randomized companions") {
    TypeAStructure a = mazur_cfa_hat();
    std::mt19937 rng(2026);
    std::uniform_int_distribution<int64_t> n_dist(-8, 8);
    int checked = 0;
    for (int trial = 0; trial < 200; ++trial) {
      CfkModel model = random_model(rng);
      int64_t n = n_dist(rng);
      BigradedComplex c = box_tensor(a, build_cfd(model, n));
      for (const BigradedGenerator& g : c.generators) {
        SplitName parts = split_box(g.name);
        ChainRef ref = parse_side(model, parts.right);
        auto want = expected_bigrading(model, n, parts.left, ref);
        REQUIRE(want.has_value());
        CHECK(g.n_grading == want->first);
        CHECK(g.a_rel == want->second);
        ++checked;
      }
    }
    CHECK(checked > 5000);
  }

  TEST_CASE("differential census for the trefoil below the threshold") {
    BigradedComplex c = box_tensor(
        mazur_cfa_hat(), build_cfd(build_thin_model({1, {}}), -1));
    auto pairs = differential_pairs(c);
    std::vector<std::pair<std::string, std::string>> expected = {
        {"x1 ⊠ lambda1^eta1", "x0 ⊠ xi0"},
        {"x3 ⊠ lambda1^eta1", "y2 ⊠ xi0"},
        {"x2 ⊠ eta1", "x1 ⊠ kappa1^eta1"},
        {"x4 ⊠ eta1", "x3 ⊠ kappa1^eta1"},
        {"y4 ⊠ eta1", "y3 ⊠ kappa1^eta1"},
        {"y3 ⊠ lambda1^eta1", "y1 ⊠ mu1"},
        {"x2 ⊠ xi0", "x1 ⊠ mu1"},
        {"x4 ⊠ xi0", "x3 ⊠ mu1"},
        {"y4 ⊠ xi0", "y3 ⊠ mu1"},
    };
    std::sort(expected.begin(), expected.end());
    CHECK(pairs == expected);
  }

  TEST_CASE("differential census for the mirror trefoil at the threshold") {
    BigradedComplex c = box_tensor(
        mazur_cfa_hat(), build_cfd(build_thin_model({-1, {}}), -2));
    auto pairs = differential_pairs(c);
    std::vector<std::pair<std::string, std::string>> expected = {
        {"x1 ⊠ lambda1^xi0", "x0 ⊠ eta1"},
        {"x3 ⊠ lambda1^xi0", "y2 ⊠ eta1"},
        {"x2 ⊠ eta0", "x1 ⊠ kappa1^eta0"},
        {"x4 ⊠ eta0", "x3 ⊠ kappa1^eta0"},
        {"y4 ⊠ eta0", "y3 ⊠ kappa1^eta0"},
        {"x2 ⊠ xi0", "x0 ⊠ eta0"},
        {"x4 ⊠ xi0", "y2 ⊠ eta0"},
        {"y4 ⊠ xi0", "y1 ⊠ kappa1^eta0"},
    };
    std::sort(expected.begin(), expected.end());
    CHECK(pairs == expected);
  }

  TEST_CASE("cable bigradings on thin companions") {
    TypeAStructure cable = cable21_cfa_hat();
    for (int64_t tau : {int64_t(1), int64_t(-1), int64_t(2)}) {
      CfkModel model = build_thin_model({tau, {}});
      for (int64_t n : {-3, 0, 2, 5}) {
        BigradedComplex c = box_tensor(cable, build_cfd(model, n));
        for (const BigradedGenerator& g : c.generators) {
          SplitName parts = split_box(g.name);
          ChainRef ref = parse_side(model, parts.right);
          int64_t N = g.n_grading, A = g.a_rel;
          if (ref.kind == "gen") {
            int64_t As = model.generators[model.find(ref.source)].alexander;
            REQUIRE(parts.left == "a");
            CHECK(N == -tau - As);
            CHECK(A == 2 * As);
          } else if (ref.kind == "kappa") {
            int64_t As = model.generators[model.find(ref.source)].alexander;
            if (parts.left == "b1") {
              CHECK(N == -tau - As);
              CHECK(A == 2 * As - 1);
            } else {
              CHECK(N == -tau - As - 1);
              CHECK(A == 2 * As);
            }
          } else if (ref.kind == "lambda") {
            int64_t As = model.generators[model.find(ref.source)].alexander;
            if (parts.left == "b1") {
              CHECK(N == -tau - 3 * As - 2 * n - 2);
              CHECK(A == 2 * As + 2 * n + 1);
            } else {
              CHECK(N == -tau - 3 * As - 2 * n - 3);
              CHECK(A == 2 * As + 2 * n + 2);
            }
          } else if (n < 2 * tau) {
            if (parts.left == "b1") {
              CHECK(N == -2 * tau + 2 * ref.j - 2);
              CHECK(A == 2 * tau - 2 * ref.j + 1);
            } else {
              CHECK(N == -2 * tau + 2 * ref.j - 3);
              CHECK(A == 2 * tau - 2 * ref.j + 2);
            }
          } else {
            if (parts.left == "b1") {
              CHECK(N == -2 * tau - 2 * ref.j + 1);
              CHECK(A == 2 * tau + 2 * ref.j - 1);
            } else {
              CHECK(N == -2 * tau - 2 * ref.j);
              CHECK(A == 2 * tau + 2 * ref.j);
            }
          }
        }
      }
    }
  }

  TEST_CASE("cable differential count") {
    TypeAStructure cable = cable21_cfa_hat();
    for (int64_t tau : {int64_t(1), int64_t(2), int64_t(-1)}) {
      CfkModel model = build_thin_model({tau, {}});
      size_t vertical_chains = model.vertical.size();
      for (int64_t n : {int64_t(-4), int64_t(0), 2 * tau, 2 * tau + 3}) {
        BigradedComplex c = box_tensor(cable, build_cfd(model, n));
        size_t expected = vertical_chains + (n < 2 * tau ? 1 : 0);
        CHECK(c.differentials.size() == expected);
      }
    }
  }
}
