#include "rgdual/flag_map.hpp"

#include <algorithm>
#include <set>

#include "rgdual/errors.hpp"

namespace rgdual {

namespace {

const char* tau_name(int i) {
  static constexpr const char* names[] = {"tau0", "tau1", "tau2"};
  return names[i];
}

std::string orbit_text(const std::vector<int>& orbit) {
  std::string s = "{";
  for (std::size_t i = 0; i < orbit.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(orbit[i]);
  }
  return s + "}";
}

bool valid_label_text(std::string_view label) {
  if (label.empty()) return false;
  return std::none_of(label.begin(), label.end(), [](unsigned char ch) {
    return ch <= ' ' || ch == '#' || ch == ',';
  });
}

}  // namespace

FlagMap validate_map(std::size_t n, Permutation tau0, Permutation tau1, Permutation tau2,
                     std::optional<std::vector<EdgeLabel>> labels) {
  std::array<Permutation, 3> tau{std::move(tau0), std::move(tau1), std::move(tau2)};
  for (int i = 0; i < 3; ++i) {
    const auto& t = tau[static_cast<std::size_t>(i)];
    if (t.degree() != n)
      throw Error(ErrorCode::DomainMismatch, std::string(tau_name(i)) + " has degree " +
                                                 std::to_string(t.degree()) + ", expected " +
                                                 std::to_string(n));
    if (!is_involution(t))
      throw Error(ErrorCode::NotInvolution, std::string(tau_name(i)) + " is not an involution");
    for (int x = 1; static_cast<std::size_t>(x) <= n; ++x)
      if (t(x) == x)
        throw Error(ErrorCode::HasFixedPoint,
                    std::string(tau_name(i)) + " fixes flag " + std::to_string(x));
  }

  FlagMap m;
  for (const auto& orbit : orbits({tau[0], tau[2]}, n)) {
    if (orbit.size() != 4)
      throw Error(ErrorCode::HypermapDetected,
                  "edge orbit " + orbit_text(orbit) + " has " + std::to_string(orbit.size()) +
                      " flags; only ribbon graphs (4 flags per edge) are supported");
    m.edges_.push_back({orbit[0], orbit[1], orbit[2], orbit[3]});
  }
  m.edge_of_flag_.resize(n);
  for (std::size_t e = 0; e < m.edges_.size(); ++e)
    for (int x : m.edges_[e]) m.edge_of_flag_[static_cast<std::size_t>(x - 1)] = e;

  m.labels_.resize(m.edges_.size());
  if (!labels) {
    for (std::size_t e = 0; e < m.edges_.size(); ++e) m.labels_[e] = "e" + std::to_string(e + 1);
  } else {
    if (labels->size() != m.edges_.size())
      throw Error(ErrorCode::BadEdgeLabels, std::to_string(labels->size()) + " labels for " +
                                                std::to_string(m.edges_.size()) + " edges");
    std::set<std::string, std::less<>> names;
    std::vector<bool> labelled(m.edges_.size(), false);
    for (const auto& [label, flag] : *labels) {
      if (!valid_label_text(label))
        throw Error(ErrorCode::BadEdgeLabels, "invalid edge label '" + label + "'");
      if (!names.insert(label).second)
        throw Error(ErrorCode::BadEdgeLabels, "edge label '" + label + "' used twice");
      if (flag < 1 || static_cast<std::size_t>(flag) > n)
        throw Error(ErrorCode::BadEdgeLabels,
                    "edge '" + label + "' refers to flag " + std::to_string(flag) + " outside 1.." +
                        std::to_string(n));
      auto e = m.edge_of_flag_[static_cast<std::size_t>(flag - 1)];
      if (labelled[e])
        throw Error(ErrorCode::BadEdgeLabels,
                    "edge " + orbit_text({m.edges_[e].begin(), m.edges_[e].end()}) +
                        " labelled twice");
      labelled[e] = true;
      m.labels_[e] = label;
    }
  }
  m.tau_ = std::move(tau);
  return m;
}

std::optional<std::size_t> FlagMap::find_edge(std::string_view label) const {
  auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

std::vector<EdgeLabel> FlagMap::edge_label_list() const {
  std::vector<EdgeLabel> out;
  out.reserve(edges_.size());
  for (std::size_t e = 0; e < edges_.size(); ++e) out.push_back({labels_[e], edges_[e][0]});
  return out;
}

Partition components(const FlagMap& m) {
  return orbits({m.tau0(), m.tau1(), m.tau2()}, m.flag_count());
}

namespace {

// Colour classes of the gem, or nothing if some tau-pair is monochromatic.
// Each component is seeded from its minimal flag with colour 0.
std::optional<std::vector<int>> gem_two_colouring(const FlagMap& m) {
  const auto n = m.flag_count();
  std::vector<int> colour(n, -1);
  std::vector<int> stack;
  for (std::size_t start = 0; start < n; ++start) {
    if (colour[start] >= 0) continue;
    colour[start] = 0;
    stack.push_back(static_cast<int>(start + 1));
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      int cx = colour[static_cast<std::size_t>(x - 1)];
      for (int i = 0; i < 3; ++i) {
        auto y = static_cast<std::size_t>(m.tau(i)(x) - 1);
        if (colour[y] < 0) {
          colour[y] = 1 - cx;
          stack.push_back(static_cast<int>(y + 1));
        } else if (colour[y] == cx) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace

bool is_orientable(const FlagMap& m) { return gem_two_colouring(m).has_value(); }

MapMetrics metrics(const FlagMap& m) {
  const auto n = m.flag_count();
  auto vertex = orbit_index(std::array<PermutationRef, 2>{m.tau1(), m.tau2()}, n);
  auto face = orbit_index(std::array<PermutationRef, 2>{m.tau0(), m.tau1()}, n);
  auto comps = components(m);

  MapMetrics out;
  out.e = static_cast<int>(m.edge_count());
  out.c = static_cast<int>(comps.size());

  std::vector<bool> vertex_seen(n, false), face_seen(n, false);
  std::vector<int> colour(n, -1);
  for (const auto& comp : comps) {
    int v = 0, f = 0;
    std::set<std::size_t> edges;
    for (int x : comp) {
      auto i = static_cast<std::size_t>(x - 1);
      if (!vertex_seen[vertex[i]]) vertex_seen[vertex[i]] = true, ++v;
      if (!face_seen[face[i]]) face_seen[face[i]] = true, ++f;
      edges.insert(m.edge_of_flag(x));
    }
    const int e = static_cast<int>(edges.size());

    // Orientability is a per-component question; run the colouring on the
    // component's own flags.
    bool orientable = true;
    colour[static_cast<std::size_t>(comp.front() - 1)] = 0;
    std::vector<int> stack{comp.front()};
    while (!stack.empty() && orientable) {
      int x = stack.back();
      stack.pop_back();
      for (int i = 0; i < 3; ++i) {
        auto y = static_cast<std::size_t>(m.tau(i)(x) - 1);
        int cx = colour[static_cast<std::size_t>(x - 1)];
        if (colour[y] < 0) {
          colour[y] = 1 - cx;
          stack.push_back(static_cast<int>(y + 1));
        } else if (colour[y] == cx) {
          orientable = false;
        }
      }
    }

    out.v += v;
    out.f += f;
    out.components.push_back({orientable, 2 - (v - e + f)});
    out.orientable = out.orientable && orientable;
  }
  std::sort(out.components.begin(), out.components.end());
  out.euler_genus = 2 * out.c - (out.v - out.e + out.f);
  return out;
}

FlagMap total_dual(const FlagMap& m) {
  return validate_map(m.flag_count(), m.tau2(), m.tau1(), m.tau0(), m.edge_label_list());
}

TuttePermutations tutte_permutations(const FlagMap& m) {
  return {m.tau2(), m.tau0(), compose(m.tau1(), m.tau2())};
}

FlagMap relabel(const FlagMap& m, const Permutation& phi) {
  if (phi.degree() != m.flag_count())
    throw Error(ErrorCode::DomainMismatch, "relabelling has the wrong degree");
  auto inv = phi.inverse();
  auto conj = [&](const Permutation& t) { return compose(phi, compose(t, inv)); };
  auto labels = m.edge_label_list();
  for (auto& l : labels) l.flag = phi(l.flag);
  return validate_map(m.flag_count(), conj(m.tau0()), conj(m.tau1()), conj(m.tau2()),
                      std::move(labels));
}

}  // namespace rgdual
