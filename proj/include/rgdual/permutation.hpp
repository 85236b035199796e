#ifndef RGDUAL_PERMUTATION_HPP
#define RGDUAL_PERMUTATION_HPP

#include <cstddef>
#include <functional>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace rgdual {

/// A bijection of {1..n}. Points are 1-based everywhere in the public API.
/// Degree 0 is allowed and stands for the permutation of the empty set.
class Permutation {
 public:
  Permutation() = default;

  /// Identity of degree n.
  explicit Permutation(std::size_t n);

  /// Builds from the image sequence p(1), ..., p(n). Throws
  /// Error{InvalidArgument} unless the sequence is a bijection of {1..n}.
  static Permutation from_images(std::vector<int> images);

  /// The transposition (a b) on {1..n}.
  static Permutation transposition(std::size_t n, int a, int b);

  std::size_t degree() const noexcept { return images_.size(); }

  int operator()(int x) const { return images_[static_cast<std::size_t>(x - 1)]; }

  const std::vector<int>& images() const noexcept { return images_; }

  Permutation inverse() const;
  bool is_identity() const;

  /// Cycles in canonical order (by minimal element, each starting at its
  /// minimal element). Fixed points are included as 1-cycles.
  std::vector<std::vector<int>> cycles() const;
  std::size_t cycle_count() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  std::vector<int> images_;
};

/// p * q: apply q first, then p.
Permutation compose(const Permutation& p, const Permutation& q);
inline Permutation operator*(const Permutation& p, const Permutation& q) { return compose(p, q); }

/// Parses `()` or a sequence of cycles like `(1 6)(2 4 5 3)`. Unlisted
/// points are fixed.
Permutation parse_cycles(std::string_view text, std::size_t n);

/// Canonical cycle notation: fixed points omitted, identity printed as `()`.
std::string format_cycles(const Permutation& p);

/// Orbit classes, each sorted, ordered by their minimal element.
using Partition = std::vector<std::vector<int>>;

using PermutationRef = std::reference_wrapper<const Permutation>;

Partition orbits(std::span<const PermutationRef> generators, std::size_t n);

inline Partition orbits(std::initializer_list<PermutationRef> generators, std::size_t n) {
  return orbits(std::span<const PermutationRef>(generators.begin(), generators.size()), n);
}

/// orbit_index[x - 1] is the index of x's class in orbits(generators, n).
std::vector<std::size_t> orbit_index(std::span<const PermutationRef> generators, std::size_t n);

bool is_involution(const Permutation& p);
bool is_fpf_involution(const Permutation& p);

}  // namespace rgdual

#endif  // RGDUAL_PERMUTATION_HPP
