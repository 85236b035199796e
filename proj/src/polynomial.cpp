#include "rgdual/polynomial.hpp"

#include <algorithm>
#include <stdexcept>
#include <thread>
#include <vector>

#include "rgdual/errors.hpp"
#include "rgdual/genus_tools.hpp"
#include "rgdual/partial_dual.hpp"

namespace rgdual {

std::uint64_t GenusPolynomial::at_one() const {
  std::uint64_t total = 0;
  for (const auto& [exponent, count] : coefficients) total += count;
  return total;
}

namespace {

int exponent_of(int euler_genus, GenusMode mode) {
  return mode == GenusMode::genus ? euler_genus / 2 : euler_genus;
}

GenusMode resolve_mode(std::optional<GenusMode> requested, bool orientable) {
  auto mode = requested.value_or(orientable ? GenusMode::genus : GenusMode::euler_genus);
  if (mode == GenusMode::genus && !orientable)
    throw Error(ErrorCode::NonOrientableInGenusMode,
                "genus mode needs an orientable map; use Euler genus mode");
  return mode;
}

using Counts = std::map<int, std::uint64_t>;

void enumerate_range(const FlagMap& m, int base_genus, GenusMode mode, bool verify,
                     std::uint64_t first, std::uint64_t last, Counts& counts) {
  const auto e = m.edge_count();
  for (std::uint64_t mask = first; mask < last; ++mask) {
    const auto a = EdgeSet::from_mask(mask, e);
    const int gamma = base_genus + genus_change(m, a);
    if (verify) {
      const int direct = metrics(partial_dual(m, a)).euler_genus;
      if (direct != gamma)
        throw std::logic_error("genus-change route gave " + std::to_string(gamma) +
                               " but dualizing gave " + std::to_string(direct) + " for mask " +
                               std::to_string(mask));
    }
    ++counts[exponent_of(gamma, mode)];
  }
}

}  // namespace

GenusPolynomial pd_genus_polynomial(const FlagMap& m, const PolynomialOptions& options) {
  const auto e = m.edge_count();
  if (e > options.max_edges || e >= 63)
    throw Error(ErrorCode::TooManyEdges, std::to_string(e) + " edges exceeds the limit of " +
                                             std::to_string(std::min<std::size_t>(options.max_edges, 62)));
  const auto base = metrics(m);
  GenusPolynomial p;
  p.mode = resolve_mode(options.mode, base.orientable);

  const std::uint64_t total = std::uint64_t{1} << e;
  unsigned workers = options.threads == 0 ? std::max(1U, std::thread::hardware_concurrency())
                                          : options.threads;
  workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, total));

  std::vector<Counts> partial(workers);
  if (workers == 1) {
    enumerate_range(m, base.euler_genus, p.mode, options.verify, 0, total, partial[0]);
  } else {
    std::vector<std::exception_ptr> errors(workers);
    {
      std::vector<std::jthread> pool;
      for (unsigned w = 0; w < workers; ++w) {
        const auto first = total * w / workers;
        const auto last = total * (w + 1) / workers;
        pool.emplace_back([&, w, first, last] {
          try {
            enumerate_range(m, base.euler_genus, p.mode, options.verify, first, last, partial[w]);
          } catch (...) {
            errors[w] = std::current_exception();
          }
        });
      }
    }
    for (auto& err : errors)
      if (err) std::rethrow_exception(err);
  }
  for (const auto& counts : partial)
    for (const auto& [exponent, count] : counts) p.coefficients[exponent] += count;
  return p;
}

std::string format_polynomial(const GenusPolynomial& p) {
  std::string out;
  for (const auto& [exponent, count] : p.coefficients) {
    if (!out.empty()) out += " + ";
    if (exponent == 0) {
      out += std::to_string(count);
      continue;
    }
    if (count != 1) out += std::to_string(count) + "*";
    out += "z";
    if (exponent > 1) out += "^" + std::to_string(exponent);
  }
  return out.empty() ? "0" : out;
}

std::string format_polynomial_csv(const GenusPolynomial& p) {
  std::string out;
  for (const auto& [exponent, count] : p.coefficients)
    out += std::to_string(exponent) + "," + std::to_string(count) + "\n";
  return out;
}

}  // namespace rgdual
