#include "floerbox/homology.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "floerbox/error.hpp"

namespace floerbox {

LaurentPoly HfkTable::chi() const {
  LaurentPoly p;
  for (const auto& s : survivors)
    p.add_term((s.n_grading % 2 == 0) ? 1 : -1,
               checked_add(s.a_rel, shift));
  return p;
}

int64_t HfkTable::total_rank() const {
  int64_t total = 0;
  for (const auto& [key, rank] : ranks) total += rank;
  return total;
}

int64_t HfkTable::genus() const {
  int64_t g = 0;
  for (const auto& [key, rank] : ranks)
    if (rank > 0) g = std::max(g, key.first);
  return g;
}

int64_t HfkTable::top_rank() const {
  int64_t g = genus();
  int64_t r = 0;
  for (const auto& [key, rank] : ranks)
    if (key.first == g) r += rank;
  return r;
}

int64_t HfkTable::thickness() const {
  bool first = true;
  int64_t lo = 0, hi = 0;
  for (const auto& [key, rank] : ranks) {
    if (rank <= 0) continue;
    if (first || key.second < lo) lo = key.second;
    if (first || key.second > hi) hi = key.second;
    first = false;
  }
  return first ? 0 : hi - lo;
}

namespace {

void check_d_squared(const BigradedComplex& c) {
  std::vector<std::vector<int>> out(c.generators.size());
  for (const auto& [s, t] : c.differentials) out[s].push_back(t);
  for (size_t s = 0; s < c.generators.size(); ++s) {
    std::map<int, int64_t> paths;
    for (int m : out[s])
      for (int t : out[m]) ++paths[t];
    for (const auto& [t, count] : paths)
      if (count % 2 != 0)
        throw Error(ErrorCode::Structure,
                    "differential does not square to zero at " +
                        c.generators[s].name);
  }
}

}  // namespace

std::vector<BigradedGenerator> morse_cancel(const BigradedComplex& c,
                                            bool reverse_order) {
  size_t n = c.generators.size();

  // Work in name-rank space so the cancellation order is the lexicographic
  // order on (source name, target name).
  std::vector<int> order(n);
  for (size_t i = 0; i < n; ++i) order[i] = static_cast<int>(i);
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return reverse_order ? c.generators[x].name > c.generators[y].name
                         : c.generators[x].name < c.generators[y].name;
  });
  std::vector<int> rank(n);
  for (size_t r = 0; r < n; ++r) rank[order[r]] = static_cast<int>(r);

  std::vector<std::set<int>> out(n), in(n);
  std::set<std::pair<int, int>> arrows;
  for (const auto& [s, t] : c.differentials) {
    int rs = rank[s], rt = rank[t];
    // Differentials are already reduced mod 2, so no duplicates here.
    out[rs].insert(rt);
    in[rt].insert(rs);
    arrows.insert({rs, rt});
  }

  std::vector<bool> active(n, true);
  auto detach = [&](int v) {
    for (int t : out[v]) {
      in[t].erase(v);
      arrows.erase({v, t});
    }
    for (int s : in[v]) {
      out[s].erase(v);
      arrows.erase({s, v});
    }
    out[v].clear();
    in[v].clear();
    active[v] = false;
  };

  while (!arrows.empty()) {
    auto [s, d] = *arrows.begin();
    std::vector<int> sources(in[d].begin(), in[d].end());
    std::vector<int> targets(out[s].begin(), out[s].end());
    detach(s);
    detach(d);
    for (int a : sources) {
      if (a == s) continue;
      for (int b : targets) {
        if (b == d) continue;
        if (out[a].erase(b)) {
          in[b].erase(a);
          arrows.erase({a, b});
        } else {
          out[a].insert(b);
          in[b].insert(a);
          arrows.insert({a, b});
        }
      }
    }
  }

  std::vector<BigradedGenerator> survivors;
  for (size_t i = 0; i < n; ++i)
    if (active[rank[i]]) survivors.push_back(c.generators[i]);
  return survivors;
}

HfkTable hfk_from_complex(const BigradedComplex& c) {
  check_d_squared(c);

  HfkTable table;
  table.survivors = morse_cancel(c);
  if (table.survivors.empty())
    throw Error(ErrorCode::Structure, "homology cannot be trivial");

  int64_t lo = table.survivors[0].a_rel, hi = lo;
  for (const auto& s : table.survivors) {
    lo = std::min(lo, s.a_rel);
    hi = std::max(hi, s.a_rel);
  }
  int64_t span = checked_add(lo, hi);
  if (span % 2 != 0)
    throw Error(ErrorCode::Parity,
                "Alexander span cannot be centered on an integer");
  table.shift = -span / 2;

  for (const auto& s : table.survivors) {
    int64_t a = checked_add(s.a_rel, table.shift);
    int64_t delta = checked_add(s.n_grading, s.a_rel);
    ++table.ranks[{a, delta}];
  }

  for (const auto& [key, rank] : table.ranks) {
    auto it = table.ranks.find({-key.first, key.second});
    if (it == table.ranks.end() || it->second != rank)
      throw Error(ErrorCode::Structure,
                  "rank table is not symmetric in the Alexander grading");
  }
  return table;
}

}  // namespace floerbox
