#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sylow/bignat.hpp"

namespace sylow {

struct PAdicExpansion {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  std::vector<std::uint32_t> digits;  // a0..al, al != 0 (empty for n = 0)
};

/// Canonical base-p digits of n.
PAdicExpansion padic_digits(std::uint64_t n, std::uint64_t p);

struct SymSylowRecord {
  std::uint64_t n = 0;
  std::uint64_t p = 0;
  BigNat normalizer_order;
  BigNat index;             // n! / normalizer_order, exact
  bool lower_bound_holds = false;  // log index >= n log(n/(e p)) when n > e p
  bool p_bound_holds = false;      // normalizer_order <= p^n
};

/// Order of the Sylow p-normalizer in Sym(n):
///   prod_i  a_i! * ((p-1)^i * p^((p^i-1)/(p-1)))^(a_i)
/// over the base-p digits a_i of n.
BigNat sym_normalizer_order(std::uint64_t n, std::uint64_t p);

/// Exact Sylow p-subgroup count of Sym(n) (= the count for Alt(n), n >= 2).
/// Throws std::logic_error if the normalizer fails to divide n!.
SymSylowRecord sym_sylow_index(std::uint64_t n, std::uint64_t p);

struct SimpleGroupDescriptor {
  enum class Family { Alt, PSL2 };
  Family family;
  std::uint64_t parameter;  // degree n or field size q
  std::uint64_t p;
  BigNat group_order;
  BigNat sylow_count;
};

/// Exact Sylow p-count for PSL2(q), q >= 4 a prime power, p odd:
///   p | q             -> 1 + q
///   p | q -+ 1        -> |PSL2(q)| / dihedral torus normalizer
///   p coprime to |G|  -> 1
SimpleGroupDescriptor psl2_sylow_count(std::uint64_t q, std::uint64_t p);

/// A(y): number of prime powers q^k <= y, k >= 1. Exact integer k-th roots.
std::uint64_t count_prime_powers(std::uint64_t y);

/// N(x): solutions (r, q) of kappa * q^r <= x with q a prime power, r >= 2.
std::uint64_t count_lie_pairs(std::uint64_t x, double kappa);

struct LemmaAltReport {
  std::uint64_t p = 0;
  std::uint64_t x = 0;
  std::uint64_t max_admissible_n = 0;  // largest n with sym index <= x
  double bound = 0.0;                  // e * log x
  bool pass = false;
};

/// Scans n upward until the Sym index exceeds x for ceil(e log x)
/// consecutive n; asserts the largest admissible n is <= e log x.
LemmaAltReport verify_lemma_alt(std::uint64_t p, std::uint64_t x);

/// All Alt(n) records (n >= 5) with nontrivial Sylow p-count <= limit.
std::vector<SimpleGroupDescriptor> alt_catalog(std::uint64_t p,
                                               std::uint64_t limit);

/// All PSL2(q) records (q >= 4 prime power) with nontrivial count <= limit.
std::vector<SimpleGroupDescriptor> psl2_catalog(std::uint64_t p,
                                                std::uint64_t limit);

/// One JSON object per line; BigNat fields as decimal strings.
std::string to_jsonl(const SimpleGroupDescriptor& d);

}  // namespace sylow
