#include "sylow/multfn.hpp"

#include <algorithm>
#include <atomic>
#include <future>
#include <thread>
#include <vector>

namespace sylow {

MultiplicativeFunctionSpec make_f(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("make_f: p must be prime");
  return {"f_" + std::to_string(p),
          [p](std::uint64_t q, std::uint32_t k) -> std::int64_t {
            return powmod(q, k, p) == 1 ? 1 : 0;
          }};
}

MultiplicativeFunctionSpec make_g(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("make_g: p must be prime");
  return {"g_" + std::to_string(p),
          [p](std::uint64_t q, std::uint32_t) -> std::int64_t {
            return q % p == 1 ? 1 : 0;
          }};
}

MultiplicativeFunctionSpec make_h(std::uint64_t p) {
  if (!is_prime(p)) throw std::invalid_argument("make_h: p must be prime");
  return {"h_" + std::to_string(p),
          [p](std::uint64_t q, std::uint32_t k) -> std::int64_t {
            if (q % p == 0) return 0;  // ord undefined at q = p
            std::uint32_t o = mult_order(q, p);
            return (o > 1 && k % o == 0) ? 1 : 0;
          }};
}

namespace {

// all divisors of n from its factorization, unordered
void divisors_of(const FactoredInteger& n, std::vector<std::uint64_t>& out) {
  out.assign(1, 1);
  for (const auto& f : n.factors) {
    std::size_t sz = out.size();
    std::uint64_t pk = 1;
    for (std::uint32_t e = 1; e <= f.exponent; ++e) {
      pk *= f.prime;
      for (std::size_t i = 0; i < sz; ++i) out.push_back(out[i] * pk);
    }
  }
}

FactoredInteger factorize_with_spf(const std::vector<std::uint32_t>& spf,
                                   std::uint64_t n) {
  FactoredInteger fi;
  fi.value = n;
  while (n > 1) {
    std::uint64_t q = spf[n];
    std::uint32_t k = 0;
    while (n % q == 0) {
      n /= q;
      ++k;
    }
    fi.factors.push_back({q, k});
  }
  return fi;
}

}  // namespace

std::int64_t dirichlet_convolve(const MultiplicativeFunctionSpec& F,
                                const MultiplicativeFunctionSpec& G,
                                std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("dirichlet_convolve: n must be >= 1");
  FactoredInteger fi = factorize(n);
  std::vector<std::uint64_t> divs;
  divisors_of(fi, divs);
  std::int64_t sum = 0;
  for (std::uint64_t d : divs) sum += F.eval(d) * G.eval(n / d);
  return sum;
}

ConvolutionCheck convolution_identity_check(std::uint64_t p, std::uint64_t N) {
  auto f = make_f(p);
  auto g = make_g(p);
  auto h = make_h(p);

  // Memoize the three functions on 1..N with a smallest-prime-factor table,
  // then evaluate the divisor sum per n. The tables keep the per-n divisor
  // walk O(d(n)).
  std::vector<std::uint32_t> spf(N + 1, 0);
  for (std::uint64_t i = 2; i <= N; ++i) {
    if (spf[i] != 0) continue;
    for (std::uint64_t j = i; j <= N; j += i)
      if (spf[j] == 0) spf[j] = static_cast<std::uint32_t>(i);
  }
  auto tabulate = [&](const MultiplicativeFunctionSpec& Fn) {
    std::vector<std::int8_t> t(N + 1, 0);
    t[1] = 1;
    for (std::uint64_t n = 2; n <= N; ++n) {
      std::uint64_t q = spf[n], m = n;
      std::uint32_t k = 0;
      while (m % q == 0) {
        m /= q;
        ++k;
      }
      t[n] = static_cast<std::int8_t>(t[m] * Fn.prime_power_rule(q, k));
    }
    return t;
  };
  auto ft = tabulate(f), gt = tabulate(g), ht = tabulate(h);

  ConvolutionCheck res;
  std::vector<std::uint64_t> divs;
  for (std::uint64_t n = 1; n <= N; ++n) {
    ++res.checked;
    std::int64_t conv = 0;
    divisors_of(factorize_with_spf(spf, n), divs);
    for (std::uint64_t d : divs) conv += ht[d] * gt[n / d];
    if (conv != ft[n]) {
      ++res.mismatches;
      if (!res.first_mismatch) res.first_mismatch = n;
    }
  }
  return res;
}

namespace {

struct Range {
  std::uint64_t lo, hi;
};

// Factorizes every n in [r.lo, r.hi] by prime marking and writes F(n) to
// out[n - r.lo].
void sieve_segment(const MultiplicativeFunctionSpec& F,
                   const std::vector<std::uint64_t>& base, const Range& r,
                   std::int64_t* out) {
  const std::size_t len = r.hi - r.lo + 1;
  std::vector<std::uint64_t> rem(len);
  for (std::size_t i = 0; i < len; ++i) {
    rem[i] = r.lo + i;
    out[i] = 1;
  }
  for (std::uint64_t q : base) {
    if (q * q > r.hi) break;
    std::uint64_t start = (r.lo + q - 1) / q * q;
    for (std::uint64_t m = start; m <= r.hi; m += q) {
      std::size_t i = m - r.lo;
      std::uint32_t k = 0;
      while (rem[i] % q == 0) {
        rem[i] /= q;
        ++k;
      }
      if (out[i] != 0) out[i] *= F.prime_power_rule(q, k);
    }
  }
  for (std::size_t i = 0; i < len; ++i)
    if (out[i] != 0 && rem[i] > 1) out[i] *= F.prime_power_rule(rem[i], 1);
}

// Runs fn(range_index) over all segments on up to cfg.threads workers.
template <typename Fn>
void for_each_segment(const std::vector<Range>& ranges,
                      const SummatoryConfig& cfg, Fn fn) {
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next.fetch_add(1); i < ranges.size();
         i = next.fetch_add(1))
      fn(i);
  };
  unsigned nthreads = cfg.threads ? cfg.threads : default_threads();
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < nthreads && t < ranges.size(); ++t)
    pool.emplace_back(worker);
  worker();
  for (auto& th : pool) th.join();
}

std::vector<Range> split_ranges(std::uint64_t x, const SummatoryConfig& cfg) {
  if (x == 0) throw std::invalid_argument("summatory: x must be >= 1");
  if (x > cfg.max_x)
    throw CapacityError("summatory: x exceeds ceiling " +
                        std::to_string(cfg.max_x));
  std::vector<Range> ranges;
  for (std::uint64_t lo = 1; lo <= x; lo += cfg.segment_size)
    ranges.push_back({lo, std::min(lo + cfg.segment_size - 1, x)});
  return ranges;
}

}  // namespace

std::int64_t summatory(const MultiplicativeFunctionSpec& F, std::uint64_t x,
                       const SummatoryConfig& cfg) {
  auto ranges = split_ranges(x, cfg);
  std::vector<std::uint64_t> base = primes_up_to(isqrt(x));
  std::vector<std::int64_t> partial(ranges.size(), 0);
  for_each_segment(ranges, cfg, [&](std::size_t i) {
    const Range& r = ranges[i];
    std::vector<std::int64_t> vals(r.hi - r.lo + 1);
    sieve_segment(F, base, r, vals.data());
    std::int64_t sum = 0;
    for (std::int64_t v : vals) sum += v;
    partial[i] = sum;
  });
  // fixed-order reduction; integer adds commute but keep it deterministic
  std::int64_t total = 0;
  for (std::int64_t s : partial) total += s;
  return total;
}

std::vector<std::int64_t> tabulate(const MultiplicativeFunctionSpec& F,
                                   std::uint64_t x,
                                   const SummatoryConfig& cfg) {
  auto ranges = split_ranges(x, cfg);
  std::vector<std::uint64_t> base = primes_up_to(isqrt(x));
  std::vector<std::int64_t> out(x);
  for_each_segment(ranges, cfg, [&](std::size_t i) {
    sieve_segment(F, base, ranges[i], out.data() + (ranges[i].lo - 1));
  });
  return out;
}

}  // namespace sylow
