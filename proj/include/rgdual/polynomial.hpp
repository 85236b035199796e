#ifndef RGDUAL_POLYNOMIAL_HPP
#define RGDUAL_POLYNOMIAL_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "rgdual/flag_map.hpp"

namespace rgdual {

enum class GenusMode {
  genus,        // exponent g = gamma / 2, orientable maps only
  euler_genus,  // exponent gamma
};

/// Sparse polynomial in z with positive integer coefficients.
struct GenusPolynomial {
  std::map<int, std::uint64_t> coefficients;
  GenusMode mode = GenusMode::genus;

  std::uint64_t at_one() const;
  friend bool operator==(const GenusPolynomial&, const GenusPolynomial&) = default;
};

struct PolynomialOptions {
  /// Defaults to genus for orientable maps, Euler genus otherwise.
  std::optional<GenusMode> mode;
  std::size_t max_edges = 20;
  /// Recompute every exponent by dualizing and throw std::logic_error on
  /// any disagreement with the genus-change route.
  bool verify = false;
  /// Worker threads for the subset enumeration; 0 picks hardware concurrency.
  unsigned threads = 1;
};

/// Sum over all edge subsets A of z^(genus of m^A). Throws TooManyEdges
/// and NonOrientableInGenusMode.
GenusPolynomial pd_genus_polynomial(const FlagMap& m, const PolynomialOptions& options = {});

/// Terms in ascending exponent: "2 + 6*z + z^3"; "0" when empty.
std::string format_polynomial(const GenusPolynomial& p);

/// One "exponent,count" line per term, ascending.
std::string format_polynomial_csv(const GenusPolynomial& p);

}  // namespace rgdual

#endif  // RGDUAL_POLYNOMIAL_HPP
