#include "rgdual/genus_tools.hpp"

#include "rgdual/errors.hpp"

namespace rgdual {

namespace {

std::vector<bool> kept_flags(const FlagMap& m, const EdgeSet& edges) {
  std::vector<bool> keep(m.flag_count(), false);
  for (auto e : edges.indices()) {
    if (e >= m.edge_count())
      throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(e) + " out of range");
    for (int x : m.edge_flags(e)) keep[static_cast<std::size_t>(x - 1)] = true;
  }
  return keep;
}

// Spliced tau1 on parent flag numbers; 0 for flags that are not kept.
std::vector<int> splice_tau1(const Permutation& tau1, const Permutation& tau2,
                             const std::vector<bool>& keep) {
  std::vector<int> out(keep.size(), 0);
  for (int x = 1; static_cast<std::size_t>(x) <= keep.size(); ++x) {
    if (!keep[static_cast<std::size_t>(x - 1)]) continue;
    int y = tau1(x);
    while (!keep[static_cast<std::size_t>(y - 1)]) y = tau1(tau2(y));
    out[static_cast<std::size_t>(x - 1)] = y;
  }
  return out;
}

// Number of orbits of <a, b> on the kept flags; a and b are indexed by
// parent flag and map kept flags to kept flags.
template <typename A, typename B>
int count_orbits(const std::vector<bool>& keep, A a, B b) {
  std::vector<bool> seen(keep.size(), false);
  std::vector<int> stack;
  int count = 0;
  for (int x = 1; static_cast<std::size_t>(x) <= keep.size(); ++x) {
    if (!keep[static_cast<std::size_t>(x - 1)] || seen[static_cast<std::size_t>(x - 1)]) continue;
    ++count;
    seen[static_cast<std::size_t>(x - 1)] = true;
    stack.push_back(x);
    while (!stack.empty()) {
      int y = stack.back();
      stack.pop_back();
      for (int z : {a(y), b(y)}) {
        if (!seen[static_cast<std::size_t>(z - 1)]) {
          seen[static_cast<std::size_t>(z - 1)] = true;
          stack.push_back(z);
        }
      }
    }
  }
  return count;
}

struct VertexFaceCounts {
  int v;
  int f;
};

// Counts for the subgraph induced by `keep` in the map (tau0, tau1, tau2).
VertexFaceCounts induced_counts(const Permutation& tau0, const Permutation& tau1,
                                const Permutation& tau2, const std::vector<bool>& keep) {
  auto t1 = splice_tau1(tau1, tau2, keep);
  auto spliced = [&](int x) { return t1[static_cast<std::size_t>(x - 1)]; };
  return {count_orbits(keep, spliced, [&](int x) { return tau2(x); }),
          count_orbits(keep, [&](int x) { return tau0(x); }, spliced)};
}

InducedSubgraph build_induced(const FlagMap& m, const Permutation& tau0, const Permutation& tau2,
                              const EdgeSet& edges) {
  auto keep = kept_flags(m, edges);
  auto t1 = splice_tau1(m.tau1(), tau2, keep);

  InducedSubgraph out;
  out.edges = edges;
  std::vector<int> renumber(m.flag_count(), 0);
  for (int x = 1; static_cast<std::size_t>(x) <= m.flag_count(); ++x)
    if (keep[static_cast<std::size_t>(x - 1)]) {
      out.parent_flags.push_back(x);
      renumber[static_cast<std::size_t>(x - 1)] = static_cast<int>(out.parent_flags.size());
    }
  auto image = [&](int x) { return renumber[static_cast<std::size_t>(x - 1)]; };

  const auto k = out.parent_flags.size();
  std::vector<int> s0(k), s1(k), s2(k);
  for (std::size_t i = 0; i < k; ++i) {
    int x = out.parent_flags[i];
    s0[i] = image(tau0(x));
    s1[i] = image(t1[static_cast<std::size_t>(x - 1)]);
    s2[i] = image(tau2(x));
  }
  std::vector<EdgeLabel> labels;
  for (auto e : edges.indices()) labels.push_back({m.edge_label(e), image(m.edge_flags(e)[0])});
  out.submap = validate_map(k, Permutation::from_images(std::move(s0)),
                            Permutation::from_images(std::move(s1)),
                            Permutation::from_images(std::move(s2)), std::move(labels));
  return out;
}

}  // namespace

InducedSubgraph induced_subgraph(const FlagMap& m, const EdgeSet& edges) {
  return build_induced(m, m.tau0(), m.tau2(), edges);
}

InducedSubgraph dual_induced(const FlagMap& m, const EdgeSet& edges) {
  return build_induced(m, m.tau2(), m.tau0(), edges);
}

GenusChangeTerms genus_change_terms(const FlagMap& m, const EdgeSet& edges) {
  auto keep = kept_flags(m, edges);
  auto primal = induced_counts(m.tau0(), m.tau1(), m.tau2(), keep);
  auto dual = induced_counts(m.tau2(), m.tau1(), m.tau0(), keep);
  return {primal.v, dual.v, primal.f, dual.f};
}

}  // namespace rgdual
