#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace sylow {

/// Multiplicative closure of the generator set within [1, limit]; 1 (the
/// empty product) is always a member. Sequential worklist, sorted output.
std::vector<std::uint64_t> semigroup_closure(
    std::span<const std::uint64_t> generators, std::uint64_t limit,
    std::size_t ceiling = 100'000'000);

struct ProductSet {
  std::vector<std::uint64_t> values;  // sorted, unique
  // witnesses[i] = (a, b) with a*b == values[i], lexicographically smallest
  std::vector<std::pair<std::uint64_t, std::uint64_t>> witnesses;
};

/// C = {a*b <= limit : a in A, b in B}; A and B must be sorted.
ProductSet product_set(std::span<const std::uint64_t> A,
                       std::span<const std::uint64_t> B, std::uint64_t limit,
                       std::size_t ceiling = 100'000'000);

struct TailSums {
  double reciprocal_sum;  // sum over b in B of 1/b
  double tail;            // partial sum over b > sqrt(x)
};

/// Compensated sums over the materialized closure.
TailSums tail_and_reciprocal_sums(std::span<const std::uint64_t> B,
                                  std::uint64_t x);

struct LowerBoundReport {
  std::uint64_t p = 0;
  std::uint64_t x = 0;
  std::uint64_t beta_s_count = 0;
  std::uint64_t c_count = 0;
  std::uint64_t alpha_count = 0;
  bool bounds_ok = false;  // beta_s <= |C| <= alpha
  ProductSet C;
  std::vector<std::uint64_t> c_minus_a_samples;
};

/// M. Hall product machinery: A = solvable Sylow p-numbers <= x, B =
/// closure of the simple-group catalog, C = A*B. |C| is a certified lower
/// bound for the full Sylow p-count. Catalog entries not = 1 (mod p) are
/// rejected with std::invalid_argument.
LowerBoundReport beta_lower_bound(std::uint64_t p, std::uint64_t x,
                                  std::span<const std::uint64_t> catalog,
                                  std::size_t sample_cap = 16);

struct PseudoCandidate {
  std::uint64_t n;
  bool proven;         // pseudo by one of the published criteria
  std::string reason;  // empty when not proven
};

/// True when n is a pseudo Sylow p-number by one of the criteria:
/// n = 1+rp with 1 < r < (p+3)/2, n not a prime power, unless
/// r = (p-3)/2 with p > 3 a Fermat prime; n = 1+3p with p >= 7;
/// n = 1+2p not a prime power.
bool is_proven_pseudo(std::uint64_t p, std::uint64_t n,
                      std::string* reason = nullptr);

/// {n <= x : n = 1 (mod p)} minus C — pseudo candidates relative to the
/// supplied (deliberately partial) catalog.
std::vector<PseudoCandidate> pseudo_candidates(
    std::uint64_t p, std::uint64_t x, std::span<const std::uint64_t> catalog);

struct DensityRatioEntry {
  std::uint64_t x;
  double ratio;  // |C(x)| / (x * (log x)^alpha)
};

std::vector<DensityRatioEntry> density_ratio_table(
    std::span<const std::uint64_t> C, double alpha_exponent,
    std::span<const std::uint64_t> checkpoints);

}  // namespace sylow
