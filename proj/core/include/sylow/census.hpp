#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "sylow/arith.hpp"

namespace sylow {

/// Counts for one (p, x) query. beta_s counts integers <= x whose prime
/// power components are all congruent to 1 mod p; alpha counts the whole
/// congruence class 1 mod p; ratio normalizes beta_s by the expected
/// x (log x)^(1/(p-1) - 1) growth.
struct CensusReport {
  std::uint64_t p = 0;
  std::uint64_t x = 0;
  std::uint64_t beta_s = 0;
  std::uint64_t alpha = 0;
  double ratio = 0.0;
  std::optional<double> c_p_reference;
};

/// |{n <= x : every prime power component of n is = 1 (mod p)}|.
/// Independent of the multfn summatory sieve: enumerates the set directly
/// as products (squareful ord>1 part) x (primes = 1 mod p part).
std::uint64_t beta_s(std::uint64_t p, std::uint64_t x);

/// The members themselves, sorted. Same enumeration as beta_s.
std::vector<std::uint64_t> solvable_sylow_set(std::uint64_t p,
                                              std::uint64_t x);

/// 1 + floor((x-1)/p): integers n <= x with n = 1 (mod p).
std::uint64_t alpha(std::uint64_t p, std::uint64_t x);

/// Witness (x, y) with x^2 + 3 y^2 == n, smallest y first; nullopt if none.
std::optional<std::pair<std::uint64_t, std::uint64_t>> represent_x2_3y2(
    std::uint64_t n);

/// n is of the form x^2 + 3 y^2 iff every prime = 2 (mod 3) in its
/// factorization has even exponent (3 itself is unrestricted).
bool bprime3_criterion(const FactoredInteger& n);

struct BBprimeReport {
  std::uint64_t x = 0;
  std::uint64_t b_count = 0;        // product criterion (f_3)
  std::uint64_t bprime_count = 0;   // x^2 + 3y^2 representable
  bool b_subset_bprime = false;
  std::vector<std::uint64_t> bprime_minus_b;  // capped
  bool difference_all_multiples_of_3 = false;
};

BBprimeReport compare_B_Bprime(std::uint64_t x, std::size_t display_cap = 32);

struct RatioEntry {
  std::uint64_t x;
  double ratio;
  std::optional<double> ratio_over_cp;
};

std::vector<RatioEntry> ratio_series(std::uint64_t p,
                                     std::span<const std::uint64_t> checkpoints,
                                     std::optional<double> c_p = std::nullopt);

CensusReport census(std::uint64_t p, std::uint64_t x,
                    std::optional<double> c_p = std::nullopt);

std::string to_json(const CensusReport& r);
std::string csv_header_census();
std::string to_csv_row(const CensusReport& r);

}  // namespace sylow
