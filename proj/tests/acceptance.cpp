// Acceptance suite: twelve end-to-end checks, one PASS/FAIL line each.
// Exit status 0 iff every check passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

#include "sylow/arith.hpp"
#include "sylow/census.hpp"
#include "sylow/constants.hpp"
#include "sylow/density.hpp"
#include "sylow/multfn.hpp"
#include "sylow/oracle.hpp"
#include "sylow/simple_catalog.hpp"

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool pass;
  std::string detail;
};

std::int64_t naive_eval(const sylow::MultiplicativeFunctionSpec& F,
                        std::uint64_t n) {
  std::int64_t v = 1;
  std::uint64_t m = n;
  for (std::uint64_t d = 2; d * d <= m; ++d) {
    if (m % d) continue;
    std::uint32_t k = 0;
    while (m % d == 0) {
      m /= d;
      ++k;
    }
    v *= F.prime_power_rule(d, k);
  }
  if (m > 1) v *= F.prime_power_rule(m, 1);
  return v;
}

// 1. Convolution identity: zero mismatches for n <= 1e6, p in {3,5,7,11,13}.
Outcome criterion1() {
  auto t0 = Clock::now();
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    auto r = sylow::convolution_identity_check(p, 1'000'000);
    if (r.mismatches != 0)
      return {false, "p=" + std::to_string(p) + " has " +
                         std::to_string(r.mismatches) + " mismatches"};
  }
  double dt = seconds_since(t0);
  std::ostringstream os;
  os << "0 mismatches for n <= 1e6, p in {3,5,7,11,13}, " << dt << " s";
  return {dt < 60.0, os.str()};
}

// 2. Triple agreement of the p = 3 characterizations on n <= 1e5.
Outcome criterion2() {
  auto f3 = sylow::make_f(3);
  auto fvals = sylow::tabulate(f3, 100'000);
  std::uint64_t b = 0, bprime = 0;
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    bool via_f = fvals[n - 1] == 1;
    bool crit = sylow::bprime3_criterion(sylow::factorize(n));
    bool witness = sylow::represent_x2_3y2(n).has_value();
    if (crit != witness)
      return {false, "criterion/witness split at n=" + std::to_string(n)};
    bool nondiv = n % 3 != 0;
    if (via_f != (crit && nondiv) || via_f != (witness && nondiv))
      return {false, "triple agreement fails at n=" + std::to_string(n)};
    if (via_f && !crit)
      return {false, "B not inside B' at n=" + std::to_string(n)};
    if (via_f) ++b;
    if (crit) ++bprime;
    if (crit && !via_f && n % 3 != 0)
      return {false, "B'\\B element not divisible by 3: " +
                         std::to_string(n)};
  }
  return {true, "|B|=" + std::to_string(b) + " |B'|=" +
                    std::to_string(bprime) +
                    ", B inside B', difference all multiples of 3"};
}

// 3. Census spot values plus sieve-vs-naive agreement to 1e6.
Outcome criterion3() {
  // spot values against an inline naive loop
  auto member = [](std::uint64_t p, std::uint64_t n) {
    std::uint64_t m = n;
    for (std::uint64_t d = 2; d * d <= m; ++d) {
      if (m % d) continue;
      std::uint64_t pk = 1;
      while (m % d == 0) {
        m /= d;
        pk *= d;
      }
      if (pk % p != 1) return false;
    }
    if (m > 1 && m % p != 1) return false;
    return true;
  };
  std::uint64_t c310 = 0, c5100 = 0;
  for (std::uint64_t n = 1; n <= 10; ++n) c310 += member(3, n);
  for (std::uint64_t n = 1; n <= 100; ++n) c5100 += member(5, n);
  if (c310 != 3 || sylow::beta_s(3, 10) != 3)
    return {false, "beta_s(3,10) != 3"};
  if (c5100 != 8 || sylow::beta_s(5, 100) != 8)
    return {false, "beta_s(5,100) != 8"};

  // per-n sieve values vs naive factorization: equality of the counting
  // functions at every x <= 1e6
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    auto fp = sylow::make_f(p);
    auto sieved = sylow::tabulate(fp, 1'000'000);
    std::int64_t prefix = 0;
    for (std::uint64_t n = 1; n <= 1'000'000; ++n) {
      if (sieved[n - 1] != naive_eval(fp, n))
        return {false, "sieve/naive split at p=" + std::to_string(p) +
                           " n=" + std::to_string(n)};
      prefix += sieved[n - 1];
    }
    if (prefix != sylow::summatory(fp, 1'000'000) ||
        static_cast<std::uint64_t>(prefix) != sylow::beta_s(p, 1'000'000))
      return {false, "summatory/beta_s mismatch at p=" + std::to_string(p)};
  }
  return {true,
          "beta_s(3,10)=3, beta_s(5,100)=8; sieve = naive for all "
          "x <= 1e6, p in {3,5,7}"};
}

// 4. Sym(n) formula vs brute-force permutation enumeration.
Outcome criterion4() {
  const std::pair<unsigned, unsigned> cases[] = {
      {3, 3}, {4, 3}, {5, 3}, {6, 3}, {7, 3}, {5, 5}, {7, 7}};
  for (auto [n, p] : cases) {
    std::uint64_t formula = sylow::sym_sylow_index(n, p).index.to_u64();
    std::uint64_t brute = sylow::oracle::sym_sylow_count(n, p);
    if (formula != brute)
      return {false, "(" + std::to_string(n) + "," + std::to_string(p) +
                         "): formula " + std::to_string(formula) +
                         " vs brute " + std::to_string(brute)};
  }
  bool pins = sylow::sym_sylow_index(4, 3).index.to_u64() == 4 &&
              sylow::sym_sylow_index(6, 3).index.to_u64() == 10 &&
              sylow::sym_sylow_index(5, 5).index.to_u64() == 6;
  return {pins, "all 7 (n,p) cases match brute force; (4,3)=4, (6,3)=10, "
                "(5,5)=6"};
}

// 5. PSL2(q) formula vs brute-force enumeration on the projective line.
Outcome criterion5() {
  for (unsigned q : {5u, 7u, 8u, 9u, 11u, 13u}) {
    auto elements = sylow::oracle::psl2_elements(q);
    std::uint64_t order = elements.size();
    for (unsigned p = 3; p <= 13; p += 2) {
      if (!sylow::is_prime(p) || order % p != 0) continue;
      std::uint64_t formula = sylow::psl2_sylow_count(q, p).sylow_count.to_u64();
      std::uint64_t brute = sylow::oracle::sylow_count_of_group(elements, p);
      if (formula != brute)
        return {false, "PSL2(" + std::to_string(q) + "), p=" +
                           std::to_string(p) + ": formula " +
                           std::to_string(formula) + " vs brute " +
                           std::to_string(brute)};
    }
  }
  bool pins = sylow::psl2_sylow_count(5, 5).sylow_count.to_u64() == 6 &&
              sylow::psl2_sylow_count(7, 7).sylow_count.to_u64() == 8 &&
              sylow::psl2_sylow_count(7, 3).sylow_count.to_u64() == 28;
  return {pins, "q in {5,7,8,9,11,13}, all odd p | |G| match brute force; "
                "(5,5)=6, (7,7)=8, (7,3)=28"};
}

// 6. Invariants of the normalizer-order formula for n <= 2000.
Outcome criterion6() {
  const double e = std::exp(1.0);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    sylow::BigNat factorial(1);
    for (std::uint64_t n = 1; n <= 2000; ++n) {
      factorial *= sylow::BigNat(n);
      auto rec = sylow::sym_sylow_index(n, p);  // throws if inexact
      if (!rec.normalizer_order.divides(factorial))
        return {false, "normalizer does not divide n! at n=" +
                           std::to_string(n) + " p=" + std::to_string(p)};
      if (rec.index.mod_u64(p) != 1)
        return {false, "index != 1 mod p at n=" + std::to_string(n) +
                           " p=" + std::to_string(p)};
      if (!(rec.normalizer_order <= sylow::BigNat::pow(p, n)))
        return {false, "normalizer > p^n at n=" + std::to_string(n) +
                           " p=" + std::to_string(p)};
      if (static_cast<double>(n) > e * static_cast<double>(p)) {
        double lhs = rec.index.log();
        double rhs = static_cast<double>(n) *
                     std::log(static_cast<double>(n) /
                              (e * static_cast<double>(p)));
        if (lhs < rhs - 1e-9 * std::max(1.0, std::fabs(rhs)))
          return {false, "log-index bound fails at n=" + std::to_string(n) +
                             " p=" + std::to_string(p)};
      }
    }
  }
  return {true, "divisibility, index = 1 (mod p), normalizer <= p^n and the "
                "log-index bound hold for n <= 2000, p in {3,5,7,11,13}"};
}

// 7. Admissible-degree bound for p in {3,5,7}, x = 1e3 .. 1e12.
Outcome criterion7() {
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL})
    for (std::uint64_t x = 1000; x <= 1'000'000'000'000ULL; x *= 10) {
      auto r = sylow::verify_lemma_alt(p, x);
      if (!r.pass)
        return {false, "fails at p=" + std::to_string(p) +
                           " x=" + std::to_string(x)};
    }
  auto pin = sylow::verify_lemma_alt(3, 1'000'000);
  if (pin.max_admissible_n != 12 ||
      std::fabs(pin.bound - std::exp(1.0) * std::log(1e6)) > 1e-9)
    return {false, "(3,1e6) pin: max n=" +
                       std::to_string(pin.max_admissible_n) +
                       " bound=" + std::to_string(pin.bound)};
  return {true, "max admissible n <= e log x for p in {3,5,7}, "
                "x in {1e3..1e12}; (3,1e6) gives n=12, bound 37.6"};
}

// 8. Constants stability under truncation.
Outcome criterion8() {
  double c6 = sylow::cp(3, 1'000'000).c_p;
  double c7 = sylow::cp(3, 10'000'000).c_p;
  if (std::fabs(c7 - c6) > 5e-3)
    return {false, "c_3 drift " + std::to_string(std::fabs(c7 - c6))};
  // Truncation drift: the omitted q > Q factors contribute ~1/(Q log Q)
  // (about 4e-7 at Q = 1e5), so the drift is gauged against the analytic
  // tail bound reported by the estimator, frozen at <= 1e-6 absolute.
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL}) {
    auto a = sylow::hp_dirichlet_sum(p, 100'000);
    auto b = sylow::hp_dirichlet_sum(p, 1'000'000);
    double drift = b.value - a.value;
    if (drift < 0 || drift > 1e-6 || drift > a.tail_log_bound * a.value)
      return {false, "hp_sum drift " + std::to_string(drift) +
                         " at p=" + std::to_string(p)};
  }
  // Euler product vs direct summation of h_3(n)/n over n <= 1e6. The
  // direct sum misses only squareful n > 1e6, a positive tail below 1e-3
  // by squareful counting.
  auto h3 = sylow::make_h(3);
  auto vals = sylow::tabulate(h3, 1'000'000);
  double direct = 0;
  for (std::uint64_t n = 1'000'000; n >= 1; --n)
    if (vals[n - 1] == 1) direct += 1.0 / static_cast<double>(n);
  double euler = sylow::hp_dirichlet_sum(3, 1'000'000).value;
  if (euler < direct - 1e-12 || euler - direct > 1e-3)
    return {false, "Euler vs direct sum gap " +
                       std::to_string(euler - direct)};
  std::ostringstream os;
  os << "|c_3(1e7)-c_3(1e6)| = " << std::fabs(c7 - c6)
     << "; hp_sum drift within the analytic tail bound; Euler vs direct gap "
     << euler - direct;
  return {true, os.str()};
}

// 9. Desk-scale asymptotic trend for p = 3.
Outcome criterion9() {
  double c3 = sylow::cp(3, 10'000'000).c_p;
  auto ratio_at = [](std::uint64_t x) {
    return static_cast<double>(sylow::beta_s(3, x)) *
           std::sqrt(std::log(static_cast<double>(x))) /
           static_cast<double>(x);
  };
  double r6 = ratio_at(1'000'000);
  double r7 = ratio_at(10'000'000);
  auto t0 = Clock::now();
  double r8 = ratio_at(100'000'000);
  double dt = seconds_since(t0);
  if (dt > 30.0)
    return {false, "x=1e8 count took " + std::to_string(dt) + " s"};
  if (r8 < 0.5 * c3 || r8 > 1.5 * c3)
    return {false, "ratio(1e8) outside [0.5, 1.5] * c_3"};
  double d6 = std::fabs(r6 - c3), d7 = std::fabs(r7 - c3),
         d8 = std::fabs(r8 - c3);
  if (!(d6 > d7 && d7 > d8))
    return {false, "|ratio - c_3| not strictly decreasing"};
  std::ostringstream os;
  os << "ratio(1e8)=" << r8 << " vs c_3=" << c3 << ", gaps " << d6 << " > "
     << d7 << " > " << d8 << ", x=1e8 in " << dt << " s";
  return {true, os.str()};
}

// 10. Counting functions A(y) and N(x, kappa).
Outcome criterion10() {
  // brute force A(y) for y in {10, 100}
  auto brute_A = [](std::uint64_t y) {
    std::uint64_t c = 0;
    for (std::uint64_t n = 2; n <= y; ++n)
      if (sylow::prime_power_form(n)) ++c;
    return c;
  };
  if (sylow::count_prime_powers(10) != 7 || brute_A(10) != 7)
    return {false, "A(10) != 7"};
  if (sylow::count_prime_powers(100) != 35 || brute_A(100) != 35)
    return {false, "A(100) != 35"};

  // brute force N(100, 1.0)
  std::uint64_t brute_n = 0;
  for (unsigned r = 2; (1ULL << r) <= 100; ++r)
    for (std::uint64_t q = 2;; ++q) {
      std::uint64_t pw = 1;
      bool over = false;
      for (unsigned j = 0; j < r; ++j) {
        pw *= q;
        if (pw > 100) {
          over = true;
          break;
        }
      }
      if (over) break;
      if (sylow::prime_power_form(q)) ++brute_n;
    }
  if (brute_n != 14 || sylow::count_lie_pairs(100, 1.0) != 14)
    return {false, "N(100, 1) != 14"};

  // N(x) log x / sqrt(x) stays bounded over x = 1e4 .. 1e10: the observed
  // sequence decreases monotonically from its max ~6.45 at x = 1e4
  double maxv = 0, prev = 1e300;
  for (std::uint64_t x = 10'000; x <= 10'000'000'000ULL; x *= 10) {
    double v = static_cast<double>(sylow::count_lie_pairs(x, 1.0)) *
               std::log(static_cast<double>(x)) /
               std::sqrt(static_cast<double>(x));
    if (v >= prev)
      return {false, "N(x) log x / sqrt(x) not decreasing at x=" +
                         std::to_string(x)};
    prev = v;
    maxv = std::max(maxv, v);
  }
  if (maxv > 6.5)
    return {false, "N(x) log x / sqrt(x) max " + std::to_string(maxv)};
  std::ostringstream os;
  os << "A(10)=7, A(100)=35, N(100,1)=14 vs brute force; "
     << "max N(x) log x / sqrt(x) = " << maxv << " over x <= 1e10";
  return {true, os.str()};
}

// 11. Product machinery with the full desk catalog at p = 7.
Outcome criterion11() {
  std::vector<std::uint64_t> catalog;
  for (const auto& d : sylow::alt_catalog(7, 1'000'000))
    catalog.push_back(d.sylow_count.to_u64());
  for (const auto& d : sylow::psl2_catalog(7, 1'000'000))
    catalog.push_back(d.sylow_count.to_u64());
  std::sort(catalog.begin(), catalog.end());
  catalog.erase(std::unique(catalog.begin(), catalog.end()), catalog.end());
  if (catalog.empty()) return {false, "desk catalog is empty"};

  auto rep = sylow::beta_lower_bound(7, 1'000'000, catalog);
  if (!rep.bounds_ok)
    return {false, "beta_s <= |C| <= alpha violated"};
  auto& C = rep.C.values;
  auto A = sylow::solvable_sylow_set(7, 1'000'000);
  for (std::uint64_t a : A)
    if (!std::binary_search(C.begin(), C.end(), a))
      return {false, "A element missing from C: " + std::to_string(a)};
  for (std::uint64_t s : catalog)
    if (!std::binary_search(C.begin(), C.end(), s))
      return {false, "catalog element missing from C: " + std::to_string(s)};
  if (std::binary_search(C.begin(), C.end(), 15) ||
      std::binary_search(C.begin(), C.end(), 22))
    return {false, "C contains a proven pseudo number"};

  bool saw15 = false, saw22 = false;
  for (const auto& cand : sylow::pseudo_candidates(7, 30, catalog)) {
    if (cand.n == 15) saw15 = cand.proven && !cand.reason.empty();
    if (cand.n == 22) saw22 = cand.proven && !cand.reason.empty();
  }
  if (!saw15 || !saw22)
    return {false, "15/22 not flagged proven pseudo"};
  std::ostringstream os;
  os << "|catalog|=" << catalog.size() << ", beta_s=" << rep.beta_s_count
     << " <= |C|=" << rep.c_count << " <= alpha=" << rep.alpha_count
     << "; C omits 15 and 22, both flagged proven pseudo";
  return {true, os.str()};
}

// 12. Squareful counting.
Outcome criterion12() {
  auto brute = [](std::uint64_t y) {
    std::uint64_t c = 0;
    for (std::uint64_t n = 1; n <= y; ++n)
      if (sylow::is_squareful(n)) ++c;
    return c;
  };
  if (sylow::count_squareful(50).count != 10 || brute(50) != 10)
    return {false, "count_squareful(50) != 10"};
  if (sylow::count_squareful(100).count != 14 || brute(100) != 14)
    return {false, "count_squareful(100) != 14"};
  double maxr = 0;
  for (std::uint64_t y = 1000; y <= 1'000'000'000ULL; y *= 10)
    maxr = std::max(maxr, sylow::count_squareful(y).ratio);
  if (maxr > 2.5)
    return {false, "ratio exceeds 2.5: " + std::to_string(maxr)};
  std::ostringstream os;
  os << "count(50)=10, count(100)=14 vs brute force; max count/sqrt(y) = "
     << maxr << " over y <= 1e9";
  return {true, os.str()};
}

}  // namespace

int main() {
  const std::pair<const char*, std::function<Outcome()>> criteria[] = {
      {"convolution identity", criterion1},
      {"p=3 representability", criterion2},
      {"census spot values and sieve agreement", criterion3},
      {"symmetric-group oracle", criterion4},
      {"PSL2 oracle", criterion5},
      {"normalizer-formula invariants", criterion6},
      {"admissible-degree bound", criterion7},
      {"constants stability", criterion8},
      {"asymptotic trend", criterion9},
      {"counting functions", criterion10},
      {"product machinery", criterion11},
      {"squareful counting", criterion12},
  };
  bool all = true;
  int i = 0;
  for (const auto& [name, fn] : criteria) {
    ++i;
    Outcome o;
    try {
      o = fn();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    all = all && o.pass;
    std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << i << " ("
              << name << "): " << o.detail << "\n";
  }
  return all ? 0 : 1;
}
