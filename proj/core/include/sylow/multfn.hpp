#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>

#include "sylow/arith.hpp"

namespace sylow {

/// A multiplicative function given by its values on prime powers.
/// The value at 1 is 1 by convention; the value at any n is the product of
/// prime_power_rule over the factorization of n.
struct MultiplicativeFunctionSpec {
  std::string name;
  std::function<std::int64_t(std::uint64_t q, std::uint32_t k)>
      prime_power_rule;

  std::int64_t eval(const FactoredInteger& n) const {
    std::int64_t v = 1;
    for (const auto& f : n.factors) {
      v *= prime_power_rule(f.prime, f.exponent);
      if (v == 0) return 0;
    }
    return v;
  }
  std::int64_t eval(std::uint64_t n) const { return eval(factorize(n)); }
};

// The three indicator functions attached to an odd prime p (p = 2 is
// accepted too: f_2 is the indicator of odd numbers).
//   f_p(q^k) = 1 iff p | q^k - 1
//   g_p(q^k) = 1 iff p | q - 1
//   h_p(q^k) = 1 iff ord_p(q) | k and ord_p(q) > 1   (0 when q = p)
MultiplicativeFunctionSpec make_f(std::uint64_t p);
MultiplicativeFunctionSpec make_g(std::uint64_t p);
MultiplicativeFunctionSpec make_h(std::uint64_t p);

/// (F * G)(n) = sum over d | n of F(d) G(n/d).
std::int64_t dirichlet_convolve(const MultiplicativeFunctionSpec& F,
                                const MultiplicativeFunctionSpec& G,
                                std::uint64_t n);

struct ConvolutionCheck {
  std::uint64_t checked = 0;
  std::uint64_t mismatches = 0;
  std::optional<std::uint64_t> first_mismatch;
};

/// Compares f_p(n) against (h_p * g_p)(n) for all n <= N.
ConvolutionCheck convolution_identity_check(std::uint64_t p, std::uint64_t N);

struct SummatoryConfig {
  std::size_t segment_size = std::size_t{1} << 20;
  std::uint64_t max_x = 10'000'000'000ULL;
  unsigned threads = 0;  // 0 = hardware default
};

/// Exact sum of F(n) over n <= x via a segmented sieve that factorizes
/// every n in a segment by prime marking. Bit-identical results for any
/// thread count.
std::int64_t summatory(const MultiplicativeFunctionSpec& F, std::uint64_t x,
                       const SummatoryConfig& cfg = {});

/// Per-value output of the same sieve kernel: result[n-1] == F(n) for
/// n = 1..x. Summing it reproduces summatory(F, x).
std::vector<std::int64_t> tabulate(const MultiplicativeFunctionSpec& F,
                                   std::uint64_t x,
                                   const SummatoryConfig& cfg = {});

}  // namespace sylow
