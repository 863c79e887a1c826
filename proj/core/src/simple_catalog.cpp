#include "sylow/simple_catalog.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "json.hpp"
#include "sylow/arith.hpp"

namespace sylow {

namespace {

void require_odd_prime(std::uint64_t p, const char* who) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
}

}  // namespace

PAdicExpansion padic_digits(std::uint64_t n, std::uint64_t p) {
  require_odd_prime(p, "padic_digits");
  PAdicExpansion e{n, p, {}};
  while (n > 0) {
    e.digits.push_back(static_cast<std::uint32_t>(n % p));
    n /= p;
  }
  return e;
}

BigNat sym_normalizer_order(std::uint64_t n, std::uint64_t p) {
  require_odd_prime(p, "sym_normalizer_order");
  if (n == 0) throw std::invalid_argument("sym_normalizer_order: n must be >= 1");
  PAdicExpansion e = padic_digits(n, p);
  BigNat order{1};
  std::uint64_t p_pow_i = 1;  // p^i
  for (std::size_t i = 0; i < e.digits.size(); ++i) {
    std::uint32_t a = e.digits[i];
    if (a != 0) {
      // base = (p-1)^i * p^((p^i - 1)/(p - 1))
      BigNat base = BigNat::pow(p - 1, i) *
                    BigNat::pow(p, (p_pow_i - 1) / (p - 1));
      order *= BigNat::factorial(a) * BigNat::pow(base, a);
    }
    p_pow_i *= p;
  }
  return order;
}

SymSylowRecord sym_sylow_index(std::uint64_t n, std::uint64_t p) {
  SymSylowRecord rec;
  rec.n = n;
  rec.p = p;
  rec.normalizer_order = sym_normalizer_order(n, p);
  try {
    rec.index = BigNat::factorial(n).div_exact(rec.normalizer_order);
  } catch (const std::domain_error&) {
    throw std::logic_error(
        "sym_sylow_index: normalizer order does not divide n! (formula bug)");
  }
  double ep = std::exp(1.0) * static_cast<double>(p);
  if (static_cast<double>(n) > ep) {
    double lower = static_cast<double>(n) *
                   std::log(static_cast<double>(n) / ep);
    rec.lower_bound_holds = rec.index.log() >= lower - 1e-9 * std::abs(lower);
  } else {
    rec.lower_bound_holds = true;  // bound trivial below ep
  }
  rec.p_bound_holds = rec.normalizer_order <= BigNat::pow(p, n);
  return rec;
}

SimpleGroupDescriptor psl2_sylow_count(std::uint64_t q, std::uint64_t p) {
  require_odd_prime(p, "psl2_sylow_count");
  auto pp = prime_power_form(q);
  if (q < 4 || !pp)
    throw std::invalid_argument(
        "psl2_sylow_count: q must be a prime power >= 4");
  const std::uint64_t d = q % 2 == 0 ? 1 : 2;
  SimpleGroupDescriptor desc{SimpleGroupDescriptor::Family::PSL2, q, p,
                             BigNat{q} * BigNat{q - 1} * BigNat{(q + 1) / d},
                             BigNat{1}};
  if (pp->first == p) {
    desc.sylow_count = BigNat{1 + q};
  } else if ((q - 1) % p == 0) {
    // Sylow lives in the split torus of order (q-1)/d; its normalizer is
    // dihedral of order 2(q-1)/d
    desc.sylow_count = BigNat{q * (q + 1) / 2};
  } else if ((q + 1) % p == 0) {
    desc.sylow_count = BigNat{q * (q - 1) / 2};
  }
  if (desc.sylow_count.mod_u64(p) != 1)
    throw std::logic_error("psl2_sylow_count: count != 1 (mod p)");
  return desc;
}

std::uint64_t count_prime_powers(std::uint64_t y) {
  if (y == 0) throw std::invalid_argument("count_prime_powers: y must be >= 1");
  std::uint64_t total = 0;
  for (unsigned k = 1;; ++k) {
    std::uint64_t r = kth_root(y, k);
    if (r < 2) break;
    total += primes_up_to(r).size();
  }
  return total;
}

std::uint64_t count_lie_pairs(std::uint64_t x, double kappa) {
  if (x == 0) throw std::invalid_argument("count_lie_pairs: x must be >= 1");
  if (!(kappa > 0.0))
    throw std::invalid_argument("count_lie_pairs: kappa must be positive");
  auto admissible = [&](std::uint64_t q, unsigned r) {
    long double v = kappa;
    for (unsigned i = 0; i < r; ++i) {
      v *= static_cast<long double>(q);
      if (v > static_cast<long double>(x)) return false;
    }
    return v <= static_cast<long double>(x);
  };
  std::uint64_t total = 0;
  for (unsigned r = 2;; ++r) {
    if (!admissible(2, r)) break;
    // floating seed for max q, then exact correction
    std::uint64_t y = static_cast<std::uint64_t>(
        std::pow(static_cast<double>(x) / kappa, 1.0 / r));
    while (y >= 2 && !admissible(y, r)) --y;
    while (admissible(y + 1, r)) ++y;
    if (y < 2) continue;
    total += count_prime_powers(y);
  }
  return total;
}

LemmaAltReport verify_lemma_alt(std::uint64_t p, std::uint64_t x) {
  require_odd_prime(p, "verify_lemma_alt");
  if (x < 2) throw std::invalid_argument("verify_lemma_alt: x must be >= 2");
  LemmaAltReport rep;
  rep.p = p;
  rep.x = x;
  rep.bound = std::exp(1.0) * std::log(static_cast<double>(x));
  const std::uint64_t need =
      static_cast<std::uint64_t>(std::ceil(rep.bound)) + 1;
  const BigNat limit{x};
  const BigNat one{1};
  std::uint64_t consecutive_over = 0;
  rep.max_admissible_n = 1;
  for (std::uint64_t n = 1; consecutive_over < need; ++n) {
    SymSylowRecord rec = sym_sylow_index(n, p);
    if (rec.index <= limit) {
      // degrees whose Sylow subgroup is normal (index 1) are vacuous for
      // the bound and are skipped: at tiny x they sit above e log x without
      // saying anything about normalizer growth
      if (rec.index > one) rep.max_admissible_n = n;
      consecutive_over = 0;
    } else {
      ++consecutive_over;
    }
  }
  // half-ulp slack on the double-precision bound
  rep.pass = static_cast<double>(rep.max_admissible_n) <=
             rep.bound * (1.0 + 1e-12);
  return rep;
}

std::vector<SimpleGroupDescriptor> alt_catalog(std::uint64_t p,
                                               std::uint64_t limit) {
  require_odd_prime(p, "alt_catalog");
  std::vector<SimpleGroupDescriptor> out;
  if (limit < 2) return out;
  const BigNat big_limit{limit};
  const std::uint64_t need = static_cast<std::uint64_t>(
                                 std::ceil(std::exp(1.0) *
                                           std::log(static_cast<double>(
                                               std::max<std::uint64_t>(
                                                   limit, 2))))) +
                             1;
  std::uint64_t consecutive_over = 0;
  for (std::uint64_t n = 5; consecutive_over < need; ++n) {
    SymSylowRecord rec = sym_sylow_index(n, p);
    if (rec.index <= big_limit) {
      consecutive_over = 0;
      if (rec.index > BigNat{1}) {
        out.push_back({SimpleGroupDescriptor::Family::Alt, n, p,
                       BigNat::factorial(n).div_exact(BigNat{2}),
                       rec.index});
      }
    } else {
      ++consecutive_over;
    }
  }
  return out;
}

std::vector<SimpleGroupDescriptor> psl2_catalog(std::uint64_t p,
                                                std::uint64_t limit) {
  require_odd_prime(p, "psl2_catalog");
  std::vector<SimpleGroupDescriptor> out;
  if (limit < 2) return out;
  // cross-characteristic counts grow like q^2/2, so a q-scan up to
  // ~sqrt(2*limit) covers them; defining-characteristic counts are 1+q
  // with q any power of p up to limit-1
  std::uint64_t qmax = isqrt(2 * limit) + 2;
  std::vector<std::uint64_t> qs;
  for (std::uint64_t q = 4; q <= qmax; ++q)
    if (prime_power_form(q)) qs.push_back(q);
  for (std::uint64_t q = p; q <= limit - 1;) {
    if (q >= 4 && q > qmax) qs.push_back(q);
    if (q > (limit - 1) / p) break;
    q *= p;
  }
  for (std::uint64_t q : qs) {
    SimpleGroupDescriptor d = psl2_sylow_count(q, p);
    if (d.sylow_count > BigNat{1} && d.sylow_count <= BigNat{limit})
      out.push_back(std::move(d));
  }
  return out;
}

std::string to_jsonl(const SimpleGroupDescriptor& d) {
  nlohmann::json j;
  if (d.family == SimpleGroupDescriptor::Family::Alt) {
    j["family"] = "Alt";
    j["n"] = d.parameter;
  } else {
    j["family"] = "PSL2";
    j["q"] = d.parameter;
  }
  j["p"] = d.p;
  j["order"] = d.group_order.to_string();
  j["sylow"] = d.sylow_count.to_string();
  return j.dump();
}

}  // namespace sylow
