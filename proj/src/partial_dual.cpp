#include "rgdual/partial_dual.hpp"

#include <algorithm>
#include <iterator>
#include <random>

#include "rgdual/errors.hpp"

namespace rgdual {

EdgeSet EdgeSet::resolve(const FlagMap& m, std::span<const std::string> labels) {
  std::vector<std::size_t> indices;
  for (const auto& label : labels) {
    auto e = m.find_edge(label);
    if (!e) throw Error(ErrorCode::UnknownEdge, "no edge labelled '" + label + "'");
    indices.push_back(*e);
  }
  std::sort(indices.begin(), indices.end());
  if (std::adjacent_find(indices.begin(), indices.end()) != indices.end())
    throw Error(ErrorCode::InvalidArgument, "edge listed twice");
  EdgeSet s;
  s.indices_ = std::move(indices);
  return s;
}

EdgeSet EdgeSet::all(const FlagMap& m) {
  EdgeSet s;
  s.indices_.resize(m.edge_count());
  for (std::size_t e = 0; e < m.edge_count(); ++e) s.indices_[e] = e;
  return s;
}

EdgeSet EdgeSet::from_mask(std::uint64_t mask, std::size_t edge_count) {
  if (edge_count > 64) throw Error(ErrorCode::TooManyEdges, "edge masks hold at most 64 edges");
  EdgeSet s;
  for (std::size_t e = 0; e < edge_count; ++e)
    if (mask >> e & 1U) s.indices_.push_back(e);
  return s;
}

EdgeSet EdgeSet::from_indices(std::vector<std::size_t> indices) {
  std::sort(indices.begin(), indices.end());
  indices.erase(std::unique(indices.begin(), indices.end()), indices.end());
  EdgeSet s;
  s.indices_ = std::move(indices);
  return s;
}

bool EdgeSet::contains(std::size_t edge) const {
  return std::binary_search(indices_.begin(), indices_.end(), edge);
}

std::vector<std::string> EdgeSet::labels(const FlagMap& m) const {
  std::vector<std::string> out;
  for (auto e : indices_) out.push_back(m.edge_label(e));
  return out;
}

EdgeSet set_union(const EdgeSet& a, const EdgeSet& b) {
  std::vector<std::size_t> out;
  std::set_union(a.indices().begin(), a.indices().end(), b.indices().begin(), b.indices().end(),
                 std::back_inserter(out));
  return EdgeSet::from_indices(std::move(out));
}

EdgeSet symmetric_difference(const EdgeSet& a, const EdgeSet& b) {
  std::vector<std::size_t> out;
  std::set_symmetric_difference(a.indices().begin(), a.indices().end(), b.indices().begin(),
                                b.indices().end(), std::back_inserter(out));
  return EdgeSet::from_indices(std::move(out));
}

EdgeSet complement(const FlagMap& m, const EdgeSet& a) {
  return symmetric_difference(EdgeSet::all(m), a);
}

namespace {

std::size_t edge_index(const FlagMap& m, std::string_view label) {
  auto e = m.find_edge(label);
  if (!e) throw Error(ErrorCode::UnknownEdge, "no edge labelled '" + std::string(label) + "'");
  return *e;
}

void check_edge(const FlagMap& m, std::size_t edge) {
  if (edge >= m.edge_count())
    throw Error(ErrorCode::UnknownEdge, "edge index " + std::to_string(edge) + " out of range");
}

// Applies the single-edge product formula to tau0/tau2 in place.
void apply_edge_formula(const FlagMap& m, std::size_t edge, Permutation& tau0, Permutation& tau2) {
  auto [t0e, t2e] = edge_involutions(m, edge);
  const auto swap = compose(t0e, t2e);
  tau0 = compose(tau0, swap);
  tau2 = compose(tau2, swap);
}

}  // namespace

std::pair<Permutation, Permutation> edge_involutions(const FlagMap& m, std::size_t edge) {
  check_edge(m, edge);
  const auto n = m.flag_count();
  std::vector<int> t0 = Permutation(n).images();
  std::vector<int> t2 = t0;
  for (int x : m.edge_flags(edge)) {
    t0[static_cast<std::size_t>(x - 1)] = m.tau0()(x);
    t2[static_cast<std::size_t>(x - 1)] = m.tau2()(x);
  }
  return {Permutation::from_images(std::move(t0)), Permutation::from_images(std::move(t2))};
}

std::pair<Permutation, Permutation> edge_involutions(const FlagMap& m, std::string_view label) {
  return edge_involutions(m, edge_index(m, label));
}

FlagMap partial_dual_edge(const FlagMap& m, std::size_t edge) {
  check_edge(m, edge);
  auto tau0 = m.tau0();
  auto tau2 = m.tau2();
  apply_edge_formula(m, edge, tau0, tau2);
  return validate_map(m.flag_count(), std::move(tau0), m.tau1(), std::move(tau2),
                      m.edge_label_list());
}

FlagMap partial_dual_edge(const FlagMap& m, std::string_view label) {
  return partial_dual_edge(m, edge_index(m, label));
}

FlagMap partial_dual(const FlagMap& m, const EdgeSet& edges) {
  if (edges.empty()) return m;
  for (auto e : edges.indices()) check_edge(m, e);
  // Each step only touches the four flags of its own edge, and an edge's
  // restrictions of tau0/tau2 are untouched by the other edges' steps, so
  // the fold can read tau0^e, tau2^e from m throughout.
  auto tau0 = m.tau0();
  auto tau2 = m.tau2();
  for (auto e : edges.indices()) apply_edge_formula(m, e, tau0, tau2);
  return validate_map(m.flag_count(), std::move(tau0), m.tau1(), std::move(tau2),
                      m.edge_label_list());
}

bool DualityReport::passed() const {
  for (const auto* t : tallies())
    if (!t->passed()) return false;
  return true;
}

std::size_t DualityReport::failure_count() const {
  std::size_t n = 0;
  for (const auto* t : tallies()) n += t->failures.size();
  return n;
}

void DualityReport::merge(const DualityReport& other) {
  auto mine = tallies();
  auto theirs = other.tallies();
  for (std::size_t i = 0; i < mine.size(); ++i) {
    auto* t = mine[i];
    t->checked += theirs[i]->checked;
    t->failures.insert(t->failures.end(), theirs[i]->failures.begin(), theirs[i]->failures.end());
  }
}

namespace {

std::string set_text(const FlagMap& m, const EdgeSet& a) {
  std::string s = "{";
  bool first = true;
  for (auto e : a.indices()) {
    if (!first) s += ",";
    s += m.edge_label(e);
    first = false;
  }
  return s + "}";
}

std::vector<EdgeSet> sample_subsets(const FlagMap& m, const SubsetBudget& budget) {
  const auto e = m.edge_count();
  std::vector<EdgeSet> out;
  if (e < 63 && (std::uint64_t{1} << e) <= budget.max_subsets) {
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << e); ++mask)
      out.push_back(EdgeSet::from_mask(mask, e));
    return out;
  }
  out.push_back(EdgeSet{});
  out.push_back(EdgeSet::all(m));
  std::mt19937_64 rng(budget.seed);
  std::bernoulli_distribution coin(0.5);
  while (out.size() < std::max<std::size_t>(budget.max_subsets, 2)) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < e; ++i)
      if (coin(rng)) idx.push_back(i);
    out.push_back(EdgeSet::from_indices(std::move(idx)));
  }
  return out;
}

void record(PropertyTally& tally, bool ok, const std::string& what) {
  ++tally.checked;
  if (!ok) tally.failures.push_back(what);
}

}  // namespace

DualityReport check_duality_properties(const FlagMap& m, SubsetBudget budget,
                                       const DualFunction& dual) {
  DualityReport report;
  const auto subsets = sample_subsets(m, budget);
  const auto base = metrics(m);

  std::vector<FlagMap> duals;
  duals.reserve(subsets.size());
  for (const auto& a : subsets) duals.push_back(dual(m, a));

  for (std::size_t i = 0; i < subsets.size(); ++i) {
    const auto& a = subsets[i];
    const auto& ma = duals[i];
    const auto name = set_text(m, a);

    for (std::size_t e = 0; e < m.edge_count(); ++e) {
      if (a.contains(e)) continue;
      auto single = EdgeSet::from_indices({e});
      record(report.fold, dual(ma, single) == dual(m, set_union(a, single)),
             "A=" + name + " e=" + m.edge_label(e));
    }

    record(report.involution, dual(ma, a) == m, "A=" + name);

    for (std::size_t j = 0; j < subsets.size(); ++j) {
      const auto& b = subsets[j];
      record(report.symmetric_difference, dual(ma, b) == dual(m, symmetric_difference(a, b)),
             "A=" + name + " B=" + set_text(m, b));
    }

    const auto ma_metrics = metrics(ma);
    record(report.orientability, ma_metrics.orientable == base.orientable, "A=" + name);
    record(report.components, ma_metrics.c == base.c, "A=" + name);
    record(report.closed_surface,
           ma_metrics.components == metrics(dual(m, complement(m, a))).components,
           "A=" + name);
  }
  return report;
}

}  // namespace rgdual
