#include "floerbox/tensor.hpp"

#include <algorithm>
#include <map>

#include "floerbox/error.hpp"

namespace floerbox {

int BigradedComplex::find(const std::string& name) const {
  for (size_t i = 0; i < generators.size(); ++i)
    if (generators[i].name == name) return static_cast<int>(i);
  return -1;
}

BigradedComplex box_tensor(const TypeAStructure& a, const TypeDStructure& d) {
  for (const auto& o : a.operations)
    if (o.u_power != 0)
      throw Error(ErrorCode::Domain, "box tensor requires the hat flavor");

  DoubleCosetContext ctx = make_coset_context(a.h_a, d.h_d);

  BigradedComplex c;
  // pair_index[ai][dj] is the tensor generator index, or -1 on an
  // idempotent mismatch.
  std::vector<std::vector<int>> pair_index(
      a.generators.size(), std::vector<int>(d.generators.size(), -1));
  for (size_t i = 0; i < a.generators.size(); ++i) {
    for (size_t j = 0; j < d.generators.size(); ++j) {
      if (a.generators[i].idem != d.generators[j].idem) continue;
      NormalizedGrading ng = normalize_double_coset(
          group_mul(a.generators[i].gr, d.generators[j].gr), ctx);
      pair_index[i][j] = static_cast<int>(c.generators.size());
      c.generators.push_back({a.generators[i].name + " ⊠ " +
                                  d.generators[j].name,
                              ng.maslov, ng.alexander});
    }
  }

  // Outgoing D edges grouped by source and label.
  std::map<std::pair<int, int>, std::vector<int>> out;
  for (const auto& e : d.edges)
    out[{e.src, static_cast<int>(e.label)}].push_back(e.dst);

  std::map<std::pair<int, int>, int64_t> counts;
  for (const auto& o : a.operations) {
    for (size_t j = 0; j < d.generators.size(); ++j) {
      int from = pair_index[o.src][j];
      if (from < 0) continue;
      std::vector<int> frontier{static_cast<int>(j)};
      for (Chord ch : o.chords) {
        std::vector<int> next;
        for (int cur : frontier) {
          auto it = out.find({cur, static_cast<int>(ch)});
          if (it == out.end()) continue;
          next.insert(next.end(), it->second.begin(), it->second.end());
        }
        frontier = std::move(next);
        if (frontier.empty()) break;
      }
      for (int endj : frontier) {
        int to = pair_index[o.dst][endj];
        if (to < 0)
          throw Error(ErrorCode::Structure,
                      "operation path lands on mismatched idempotents");
        ++counts[{from, to}];
      }
    }
  }

  for (const auto& [pair, count] : counts) {
    if (count % 2 == 0) continue;
    const auto& from = c.generators[pair.first];
    const auto& to = c.generators[pair.second];
    if (to.n_grading != from.n_grading - 1 || to.a_rel != from.a_rel)
      throw Error(ErrorCode::Structure,
                  "differential grading mismatch: " + from.name + " -> " +
                      to.name);
    c.differentials.push_back(pair);
  }
  return c;
}

std::vector<std::pair<std::string, std::string>> differential_pairs(
    const BigradedComplex& c) {
  std::vector<std::pair<std::string, std::string>> out;
  out.reserve(c.differentials.size());
  for (const auto& [s, t] : c.differentials)
    out.emplace_back(c.generators[s].name, c.generators[t].name);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace floerbox
