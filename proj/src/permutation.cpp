#include "rgdual/permutation.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

#include "rgdual/errors.hpp"

namespace rgdual {

Permutation::Permutation(std::size_t n) : images_(n) {
  for (std::size_t i = 0; i < n; ++i) images_[i] = static_cast<int>(i + 1);
}

Permutation Permutation::from_images(std::vector<int> images) {
  const auto n = images.size();
  std::vector<bool> seen(n, false);
  for (int y : images) {
    if (y < 1 || static_cast<std::size_t>(y) > n)
      throw Error(ErrorCode::InvalidArgument,
                  "image " + std::to_string(y) + " outside 1.." + std::to_string(n));
    if (seen[static_cast<std::size_t>(y - 1)])
      throw Error(ErrorCode::InvalidArgument, "image " + std::to_string(y) + " repeated");
    seen[static_cast<std::size_t>(y - 1)] = true;
  }
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::transposition(std::size_t n, int a, int b) {
  if (a < 1 || b < 1 || static_cast<std::size_t>(a) > n || static_cast<std::size_t>(b) > n)
    throw Error(ErrorCode::InvalidArgument, "transposition point out of range");
  Permutation p(n);
  std::swap(p.images_[static_cast<std::size_t>(a - 1)], p.images_[static_cast<std::size_t>(b - 1)]);
  return p;
}

Permutation Permutation::inverse() const {
  Permutation inv;
  inv.images_.resize(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i)
    inv.images_[static_cast<std::size_t>(images_[i] - 1)] = static_cast<int>(i + 1);
  return inv;
}

bool Permutation::is_identity() const {
  for (std::size_t i = 0; i < images_.size(); ++i)
    if (images_[i] != static_cast<int>(i + 1)) return false;
  return true;
}

std::vector<std::vector<int>> Permutation::cycles() const {
  std::vector<std::vector<int>> out;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    std::vector<int> cycle;
    int x = static_cast<int>(i + 1);
    while (!seen[static_cast<std::size_t>(x - 1)]) {
      seen[static_cast<std::size_t>(x - 1)] = true;
      cycle.push_back(x);
      x = (*this)(x);
    }
    out.push_back(std::move(cycle));
  }
  return out;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<bool> seen(images_.size(), false);
  for (std::size_t i = 0; i < images_.size(); ++i) {
    if (seen[i]) continue;
    ++count;
    for (auto x = i; !seen[x]; x = static_cast<std::size_t>(images_[x] - 1)) seen[x] = true;
  }
  return count;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.degree() != q.degree())
    throw Error(ErrorCode::DomainMismatch,
                "cannot compose permutations of degree " + std::to_string(p.degree()) +
                    " and " + std::to_string(q.degree()));
  std::vector<int> images(p.degree());
  for (std::size_t i = 0; i < images.size(); ++i) images[i] = p(q(static_cast<int>(i + 1)));
  return Permutation::from_images(std::move(images));
}

namespace {

[[noreturn]] void cycle_error(std::string_view text, std::size_t pos, const std::string& why) {
  throw Error(ErrorCode::Parse, "bad cycle notation '" + std::string(text) + "' at offset " +
                                    std::to_string(pos) + ": " + why);
}

}  // namespace

Permutation parse_cycles(std::string_view text, std::size_t n) {
  Permutation identity(n);
  if (text == "()") return identity;
  if (text.empty()) cycle_error(text, 0, "empty");

  std::vector<int> images = identity.images();
  std::vector<bool> used(n, false);
  std::size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(') cycle_error(text, pos, "expected '('");
    ++pos;
    std::vector<int> cycle;
    for (;;) {
      if (pos >= text.size() || text[pos] < '0' || text[pos] > '9')
        cycle_error(text, pos, "expected a decimal label");
      long long label = 0;
      auto [next, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), label);
      if (ec != std::errc{}) cycle_error(text, pos, "label does not fit");
      if (label < 1 || static_cast<unsigned long long>(label) > n)
        cycle_error(text, pos, "label " + std::to_string(label) + " outside 1.." + std::to_string(n));
      auto idx = static_cast<std::size_t>(label - 1);
      if (used[idx]) cycle_error(text, pos, "label " + std::to_string(label) + " repeated");
      used[idx] = true;
      cycle.push_back(static_cast<int>(label));
      pos = static_cast<std::size_t>(next - text.data());
      if (pos >= text.size()) cycle_error(text, pos, "unterminated cycle");
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      if (text[pos] != ' ') cycle_error(text, pos, "expected ' ' or ')'");
      ++pos;
    }
    for (std::size_t i = 0; i < cycle.size(); ++i)
      images[static_cast<std::size_t>(cycle[i] - 1)] = cycle[(i + 1) % cycle.size()];
  }
  return Permutation::from_images(std::move(images));
}

std::string format_cycles(const Permutation& p) {
  std::string out;
  for (const auto& cycle : p.cycles()) {
    if (cycle.size() < 2) continue;
    out += '(';
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cycle[i]);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

std::vector<std::size_t> orbit_index(std::span<const PermutationRef> generators, std::size_t n) {
  for (const Permutation& g : generators)
    if (g.degree() != n)
      throw Error(ErrorCode::DomainMismatch, "generator of degree " + std::to_string(g.degree()) +
                                                 " acting on " + std::to_string(n) + " points");
  constexpr auto unset = std::numeric_limits<std::size_t>::max();
  std::vector<std::size_t> index(n, unset);
  std::vector<int> stack;
  std::size_t next = 0;
  for (std::size_t start = 0; start < n; ++start) {
    if (index[start] != unset) continue;
    index[start] = next;
    stack.push_back(static_cast<int>(start + 1));
    while (!stack.empty()) {
      int x = stack.back();
      stack.pop_back();
      for (const Permutation& g : generators) {
        auto y = static_cast<std::size_t>(g(x) - 1);
        if (index[y] == unset) {
          index[y] = next;
          stack.push_back(static_cast<int>(y + 1));
        }
      }
    }
    ++next;
  }
  return index;
}

Partition orbits(std::span<const PermutationRef> generators, std::size_t n) {
  auto index = orbit_index(generators, n);
  Partition classes;
  for (std::size_t i = 0; i < n; ++i) {
    if (index[i] == classes.size()) classes.emplace_back();
    classes[index[i]].push_back(static_cast<int>(i + 1));
  }
  return classes;
}

bool is_involution(const Permutation& p) {
  for (int x = 1; static_cast<std::size_t>(x) <= p.degree(); ++x)
    if (p(p(x)) != x) return false;
  return true;
}

bool is_fpf_involution(const Permutation& p) {
  for (int x = 1; static_cast<std::size_t>(x) <= p.degree(); ++x)
    if (p(x) == x || p(p(x)) != x) return false;
  return true;
}

}  // namespace rgdual
