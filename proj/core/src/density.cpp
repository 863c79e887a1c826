#include "sylow/density.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <set>
#include <stdexcept>

#include "sylow/arith.hpp"
#include "sylow/census.hpp"

namespace sylow {

std::vector<std::uint64_t> semigroup_closure(
    std::span<const std::uint64_t> generators, std::uint64_t limit,
    std::size_t ceiling) {
  if (limit == 0)
    throw std::invalid_argument("semigroup_closure: limit must be >= 1");
  for (std::uint64_t g : generators)
    if (g < 2)
      throw std::invalid_argument(
          "semigroup_closure: generators must be >= 2");
  std::set<std::uint64_t> seen{1};
  std::deque<std::uint64_t> work{1};
  while (!work.empty()) {
    std::uint64_t b = work.front();
    work.pop_front();
    for (std::uint64_t g : generators) {
      if (g > limit / b) continue;
      std::uint64_t v = b * g;
      if (seen.insert(v).second) {
        if (seen.size() > ceiling)
          throw CapacityError("semigroup_closure: element ceiling exceeded");
        work.push_back(v);
      }
    }
  }
  return {seen.begin(), seen.end()};
}

ProductSet product_set(std::span<const std::uint64_t> A,
                       std::span<const std::uint64_t> B, std::uint64_t limit,
                       std::size_t ceiling) {
  struct Entry {
    std::uint64_t c, a, b;
  };
  std::vector<Entry> entries;
  for (std::uint64_t a : A) {
    if (a == 0) throw std::invalid_argument("product_set: elements must be >= 1");
    if (a > limit) break;
    for (std::uint64_t b : B) {
      if (b > limit / a) break;
      entries.push_back({a * b, a, b});
      if (entries.size() > ceiling * 2)
        throw CapacityError("product_set: pair ceiling exceeded");
    }
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& l, const Entry& r) {
    return std::tie(l.c, l.a, l.b) < std::tie(r.c, r.a, r.b);
  });
  ProductSet out;
  for (const Entry& e : entries) {
    if (!out.values.empty() && out.values.back() == e.c) continue;
    out.values.push_back(e.c);
    out.witnesses.emplace_back(e.a, e.b);
    if (out.values.size() > ceiling)
      throw CapacityError("product_set: element ceiling exceeded");
  }
  return out;
}

TailSums tail_and_reciprocal_sums(std::span<const std::uint64_t> B,
                                  std::uint64_t x) {
  double sqrt_x = std::sqrt(static_cast<double>(x));
  double total = 0.0, ctotal = 0.0, tail = 0.0, ctail = 0.0;
  auto add = [](double& sum, double& comp, double term) {
    double y = term - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  };
  for (std::uint64_t b : B) {
    double term = 1.0 / static_cast<double>(b);
    add(total, ctotal, term);
    if (static_cast<double>(b) > sqrt_x) add(tail, ctail, term);
  }
  return {total, tail};
}

LowerBoundReport beta_lower_bound(std::uint64_t p, std::uint64_t x,
                                  std::span<const std::uint64_t> catalog,
                                  std::size_t sample_cap) {
  if (!is_prime(p) || p < 3)
    throw std::invalid_argument("beta_lower_bound: p must be an odd prime");
  for (std::uint64_t s : catalog)
    if (s % p != 1)
      throw std::invalid_argument(
          "beta_lower_bound: catalog entry " + std::to_string(s) +
          " is not 1 (mod p); it cannot be a Sylow p-number");
  LowerBoundReport rep;
  rep.p = p;
  rep.x = x;
  std::vector<std::uint64_t> A = solvable_sylow_set(p, x);
  rep.beta_s_count = A.size();
  std::vector<std::uint64_t> gens(catalog.begin(), catalog.end());
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  // 1 contributes nothing to the closure
  gens.erase(std::remove(gens.begin(), gens.end(), std::uint64_t{1}),
             gens.end());
  std::vector<std::uint64_t> B = semigroup_closure(gens, x);
  rep.C = product_set(A, B, x);
  rep.c_count = rep.C.values.size();
  rep.alpha_count = alpha(p, x);
  rep.bounds_ok =
      rep.beta_s_count <= rep.c_count && rep.c_count <= rep.alpha_count;
  // sample of the gain over the solvable-only set
  std::size_t ai = 0;
  for (std::uint64_t c : rep.C.values) {
    while (ai < A.size() && A[ai] < c) ++ai;
    bool in_a = ai < A.size() && A[ai] == c;
    if (!in_a && rep.c_minus_a_samples.size() < sample_cap)
      rep.c_minus_a_samples.push_back(c);
  }
  return rep;
}

bool is_proven_pseudo(std::uint64_t p, std::uint64_t n, std::string* reason) {
  if (n % p != 1 || n <= 1) return false;
  std::uint64_t r = (n - 1) / p;
  bool prime_power = prime_power_form(n).has_value();
  auto is_fermat_prime = [](std::uint64_t v) {
    // 2^(2^k) + 1; v prime already implied by use below
    if (v < 3 || !is_prime(v)) return false;
    std::uint64_t m = v - 1;
    while (m % 2 == 0) m /= 2;
    return m == 1;
  };
  if (r == 2 && !prime_power) {
    if (reason) *reason = "n = 1 + 2p and n is not a prime power";
    return true;
  }
  if (r == 3 && p >= 7) {
    if (reason) *reason = "n = 1 + 3p with p >= 7";
    return true;
  }
  if (r > 1 && 2 * r < p + 3 && !prime_power &&
      !(2 * r == p - 3 && p > 3 && is_fermat_prime(p))) {
    if (reason) *reason = "n = 1 + rp with 1 < r < (p+3)/2, not a prime power";
    return true;
  }
  return false;
}

std::vector<PseudoCandidate> pseudo_candidates(
    std::uint64_t p, std::uint64_t x, std::span<const std::uint64_t> catalog) {
  LowerBoundReport rep = beta_lower_bound(p, x, catalog, 0);
  std::vector<PseudoCandidate> out;
  std::size_t ci = 0;
  const auto& C = rep.C.values;
  for (std::uint64_t n = 1; n <= x; n += p) {
    while (ci < C.size() && C[ci] < n) ++ci;
    if (ci < C.size() && C[ci] == n) continue;
    PseudoCandidate cand{n, false, {}};
    cand.proven = is_proven_pseudo(p, n, &cand.reason);
    out.push_back(std::move(cand));
  }
  return out;
}

std::vector<DensityRatioEntry> density_ratio_table(
    std::span<const std::uint64_t> C, double alpha_exponent,
    std::span<const std::uint64_t> checkpoints) {
  std::vector<DensityRatioEntry> out;
  for (std::uint64_t x : checkpoints) {
    if (x < 2)
      throw std::invalid_argument(
          "density_ratio_table: checkpoints must be >= 2");
    auto count = static_cast<std::uint64_t>(
        std::upper_bound(C.begin(), C.end(), x) - C.begin());
    double norm = static_cast<double>(x) *
                  std::pow(std::log(static_cast<double>(x)), alpha_exponent);
    out.push_back({x, static_cast<double>(count) / norm});
  }
  return out;
}

}  // namespace sylow
