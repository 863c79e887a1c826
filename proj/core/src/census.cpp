#include "sylow/census.hpp"

#include <algorithm>
#include <cmath>

#include "json.hpp"
#include "sylow/multfn.hpp"

namespace sylow {

namespace {

// Members of B(p,x) split uniquely as s * t with s a product of components
// q^k, ord_p(q) = o > 1, o | k (squareful), and t a product of primes
// q = 1 (mod p) with arbitrary exponents. Enumerate the s-part explicitly
// (it is O(sqrt x) small) and walk the t-part with a DFS over the = 1 (mod p)
// primes; total work is linear in the answer.
struct SquarefulPart {
  std::uint64_t prime;
  std::uint64_t min_power;  // prime^ord, the smallest admissible component
};

struct BetaContext {
  std::uint64_t limit;
  std::vector<std::uint64_t> g_primes;       // q = 1 (mod p), q <= limit
  std::vector<SquarefulPart> s_parts;        // ord > 1, min_power <= limit
};

BetaContext make_context(std::uint64_t p, std::uint64_t x) {
  BetaContext ctx;
  ctx.limit = x;
  for (std::uint64_t q : primes_up_to(x)) {
    if (q % p == 0) continue;
    if (q % p == 1) {
      ctx.g_primes.push_back(q);
    } else if (q <= isqrt(x)) {
      std::uint32_t o = mult_order(q, p);
      if (o > 1) {
        // overflow-safe q^o <= x
        unsigned __int128 acc = 1;
        bool fits = true;
        for (std::uint32_t i = 0; i < o; ++i) {
          acc *= q;
          if (acc > x) {
            fits = false;
            break;
          }
        }
        if (fits)
          ctx.s_parts.push_back({q, static_cast<std::uint64_t>(acc)});
      }
    }
  }
  std::sort(ctx.s_parts.begin(), ctx.s_parts.end(),
            [](const SquarefulPart& a, const SquarefulPart& b) {
              return a.min_power < b.min_power;
            });
  return ctx;
}

std::uint64_t count_g_products(const BetaContext& ctx, std::size_t idx,
                               std::uint64_t bound) {
  std::uint64_t total = 1;  // the empty product
  for (std::size_t i = idx; i < ctx.g_primes.size(); ++i) {
    std::uint64_t q = ctx.g_primes[i];
    if (q > bound) break;
    for (std::uint64_t pw = q;; pw *= q) {
      total += count_g_products(ctx, i + 1, bound / pw);
      if (pw > bound / q) break;
    }
  }
  return total;
}

void collect_g_products(const BetaContext& ctx, std::size_t idx,
                        std::uint64_t bound, std::uint64_t cur,
                        std::vector<std::uint64_t>& out) {
  out.push_back(cur);
  for (std::size_t i = idx; i < ctx.g_primes.size(); ++i) {
    std::uint64_t q = ctx.g_primes[i];
    if (q > bound) break;
    for (std::uint64_t pw = q;; pw *= q) {
      collect_g_products(ctx, i + 1, bound / pw, cur * pw, out);
      if (pw > bound / q) break;
    }
  }
}

// enumerate the squareful s-part values <= limit (1 included)
void collect_s_values(const BetaContext& ctx, std::size_t idx,
                      std::uint64_t cur, std::vector<std::uint64_t>& out) {
  out.push_back(cur);
  for (std::size_t i = idx; i < ctx.s_parts.size(); ++i) {
    const auto& sp = ctx.s_parts[i];
    if (sp.min_power > ctx.limit / cur) break;
    std::uint64_t v = cur;
    while (v <= ctx.limit / sp.min_power) {
      v *= sp.min_power;
      collect_s_values(ctx, i + 1, v, out);
    }
  }
}

}  // namespace

std::uint64_t beta_s(std::uint64_t p, std::uint64_t x) {
  if (!is_prime(p)) throw std::invalid_argument("beta_s: p must be prime");
  if (x == 0) throw std::invalid_argument("beta_s: x must be >= 1");
  BetaContext ctx = make_context(p, x);
  std::vector<std::uint64_t> s_values;
  collect_s_values(ctx, 0, 1, s_values);
  std::uint64_t total = 0;
  for (std::uint64_t s : s_values) total += count_g_products(ctx, 0, x / s);
  return total;
}

std::vector<std::uint64_t> solvable_sylow_set(std::uint64_t p,
                                              std::uint64_t x) {
  if (!is_prime(p))
    throw std::invalid_argument("solvable_sylow_set: p must be prime");
  if (x == 0) throw std::invalid_argument("solvable_sylow_set: x must be >= 1");
  BetaContext ctx = make_context(p, x);
  std::vector<std::uint64_t> s_values, members, g_part;
  collect_s_values(ctx, 0, 1, s_values);
  for (std::uint64_t s : s_values) {
    g_part.clear();
    collect_g_products(ctx, 0, x / s, 1, g_part);
    for (std::uint64_t t : g_part) members.push_back(s * t);
  }
  std::sort(members.begin(), members.end());
  return members;
}

std::uint64_t alpha(std::uint64_t p, std::uint64_t x) {
  if (!is_prime(p)) throw std::invalid_argument("alpha: p must be prime");
  if (x == 0) throw std::invalid_argument("alpha: x must be >= 1");
  return 1 + (x - 1) / p;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> represent_x2_3y2(
    std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("represent_x2_3y2: n must be >= 1");
  for (std::uint64_t y = 0; 3 * y * y <= n; ++y) {
    std::uint64_t r = n - 3 * y * y;
    std::uint64_t s = isqrt(r);
    if (s * s == r) return std::make_pair(s, y);
  }
  return std::nullopt;
}

bool bprime3_criterion(const FactoredInteger& n) {
  for (const auto& f : n.factors)
    if (f.prime % 3 == 2 && f.exponent % 2 != 0) return false;
  return true;
}

BBprimeReport compare_B_Bprime(std::uint64_t x, std::size_t display_cap) {
  BBprimeReport rep;
  rep.x = x;
  std::vector<std::uint64_t> b = solvable_sylow_set(3, x);
  rep.b_count = b.size();
  rep.b_subset_bprime = true;
  rep.difference_all_multiples_of_3 = true;
  std::size_t bi = 0;
  for (std::uint64_t n = 1; n <= x; ++n) {
    bool in_b = bi < b.size() && b[bi] == n;
    if (in_b) ++bi;
    bool in_bprime = bprime3_criterion(factorize(n));
    if (!in_bprime) {
      if (in_b) rep.b_subset_bprime = false;
      continue;
    }
    ++rep.bprime_count;
    if (!in_b) {
      if (rep.bprime_minus_b.size() < display_cap)
        rep.bprime_minus_b.push_back(n);
      if (n % 3 != 0) rep.difference_all_multiples_of_3 = false;
    }
  }
  return rep;
}

namespace {

double census_ratio(std::uint64_t p, std::uint64_t x, std::uint64_t beta) {
  double expo = 1.0 - 1.0 / static_cast<double>(p - 1);
  return static_cast<double>(beta) *
         std::pow(std::log(static_cast<double>(x)), expo) /
         static_cast<double>(x);
}

}  // namespace

std::vector<RatioEntry> ratio_series(std::uint64_t p,
                                     std::span<const std::uint64_t> checkpoints,
                                     std::optional<double> c_p) {
  std::vector<RatioEntry> out;
  for (std::uint64_t x : checkpoints) {
    if (x < 2) throw std::invalid_argument("ratio_series: checkpoints must be >= 2");
    double r = census_ratio(p, x, beta_s(p, x));
    RatioEntry e{x, r, std::nullopt};
    if (c_p) e.ratio_over_cp = r / *c_p;
    out.push_back(e);
  }
  return out;
}

CensusReport census(std::uint64_t p, std::uint64_t x,
                    std::optional<double> c_p) {
  CensusReport r;
  r.p = p;
  r.x = x;
  r.beta_s = beta_s(p, x);
  r.alpha = alpha(p, x);
  r.ratio = census_ratio(p, x, r.beta_s);
  r.c_p_reference = c_p;
  return r;
}

std::string to_json(const CensusReport& r) {
  nlohmann::json j{{"p", r.p},
                   {"x", r.x},
                   {"beta_s", r.beta_s},
                   {"alpha", r.alpha},
                   {"ratio", r.ratio}};
  if (r.c_p_reference) j["c_p_reference"] = *r.c_p_reference;
  return j.dump();
}

std::string csv_header_census() { return "p,x,beta_s,alpha,ratio"; }

std::string to_csv_row(const CensusReport& r) {
  nlohmann::json ratio = r.ratio;  // shortest round-trip formatting
  return std::to_string(r.p) + "," + std::to_string(r.x) + "," +
         std::to_string(r.beta_s) + "," + std::to_string(r.alpha) + "," +
         ratio.dump();
}

}  // namespace sylow
