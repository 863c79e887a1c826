#include "sylow/arith.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <future>
#include <numeric>
#include <thread>

namespace sylow {

namespace {
std::atomic<unsigned> g_default_threads{0};
}

void set_default_threads(unsigned n) { g_default_threads.store(n); }

unsigned default_threads() {
  unsigned n = g_default_threads.load();
  if (n != 0) return n;
  return std::max(1u, std::thread::hardware_concurrency());
}

std::uint64_t FactoredInteger::recompose() const {
  std::uint64_t v = 1;
  for (const auto& f : factors) v *= pow_u64(f.prime, f.exponent);
  return v;
}

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t r = 1;
  while (exp) {
    if (exp & 1) r *= base;
    base *= base;
    exp >>= 1;
  }
  return r;
}

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(
      static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1;
  b %= m;
  while (e) {
    if (e & 1) r = mulmod(r, b, m);
    b = mulmod(b, b, m);
    e >>= 1;
  }
  return r;
}

std::uint64_t isqrt(std::uint64_t n) {
  if (n == 0) return 0;
  auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && r > n / r) --r;
  while ((r + 1) <= n / (r + 1)) ++r;
  return r;
}

std::uint64_t kth_root(std::uint64_t n, unsigned k) {
  if (k == 0) throw std::invalid_argument("kth_root: k must be >= 1");
  if (k == 1 || n < 2) return n;
  if (k == 2) return isqrt(n);
  if (k >= 64) return 1;
  auto pow_clamped = [](std::uint64_t b, unsigned e) -> std::uint64_t {
    unsigned __int128 r = 1;
    while (e--) {
      r *= b;
      if (r > ~std::uint64_t{0}) return ~std::uint64_t{0};
    }
    return static_cast<std::uint64_t>(r);
  };
  auto r = static_cast<std::uint64_t>(
      std::pow(static_cast<double>(n), 1.0 / k));
  // correct the floating seed in both directions
  while (r > 1 && pow_clamped(r, k) > n) --r;
  while (pow_clamped(r + 1, k) <= n) ++r;
  return r;
}

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // deterministic witness set for 64-bit inputs
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

namespace {

std::uint64_t brent_rho(std::uint64_t n) {
  if ((n & 1) == 0) return 2;
  std::uint64_t c = 1;
  while (true) {
    std::uint64_t x = 2, y = 2, d = 1, q = 1, ys = 0;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    while (d == 1) {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      for (std::uint64_t k = 0; k < r && d == 1; k += m) {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        d = std::gcd(q, n);
      }
      r <<= 1;
    }
    if (d == n) {
      d = 1;
      while (d == 1) {
        ys = f(ys);
        d = std::gcd(x > ys ? x - ys : ys - x, n);
      }
    }
    if (d != n) return d;
    ++c;  // rare cycle degeneracy, retry with a new constant
  }
}

void factor_rec(std::uint64_t n, std::vector<std::uint64_t>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    out.push_back(n);
    return;
  }
  std::uint64_t d = brent_rho(n);
  factor_rec(d, out);
  factor_rec(n / d, out);
}

}  // namespace

FactoredInteger factorize(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("factorize: n must be >= 1");
  FactoredInteger fi;
  fi.value = n;
  std::vector<std::uint64_t> ps;
  for (std::uint64_t p : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL,
                          19ULL, 23ULL, 29ULL, 31ULL, 37ULL, 41ULL, 43ULL,
                          47ULL}) {
    while (n % p == 0) {
      ps.push_back(p);
      n /= p;
    }
  }
  factor_rec(n, ps);
  std::sort(ps.begin(), ps.end());
  for (std::size_t i = 0; i < ps.size();) {
    std::size_t j = i;
    while (j < ps.size() && ps[j] == ps[i]) ++j;
    fi.factors.push_back({ps[i], static_cast<std::uint32_t>(j - i)});
    i = j;
  }
  return fi;
}

std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_form(
    std::uint64_t n) {
  if (n < 2) return std::nullopt;
  // n = q^k with k >= 2 forces q <= n^(1/2); probe k from large to small so
  // the first hit gives the maximal exponent.
  for (unsigned k = 63; k >= 2; --k) {
    std::uint64_t q = kth_root(n, k);
    if (q < 2) continue;
    if (pow_u64(q, k) == n && is_prime(q))
      return std::make_pair(q, static_cast<std::uint32_t>(k));
  }
  if (is_prime(n)) return std::make_pair(n, std::uint32_t{1});
  return std::nullopt;
}

std::uint32_t mult_order(std::uint64_t q, std::uint64_t p) {
  if (p < 2 || !is_prime(p)) throw std::invalid_argument("mult_order: p must be prime");
  if (q % p == 0)
    throw std::invalid_argument("mult_order: undefined when p divides q");
  // order divides p-1; strip prime factors of p-1 greedily
  std::uint64_t order = p - 1;
  for (const auto& f : factorize(p - 1).factors) {
    for (std::uint32_t i = 0; i < f.exponent; ++i) {
      if (powmod(q, order / f.prime, p) == 1)
        order /= f.prime;
      else
        break;
    }
  }
  return static_cast<std::uint32_t>(order);
}

bool is_squareful(const FactoredInteger& n) {
  for (const auto& f : n.factors)
    if (f.exponent < 2) return false;
  return true;
}

bool is_squareful(std::uint64_t n) { return is_squareful(factorize(n)); }

SquarefulCount count_squareful(std::uint64_t y) {
  if (y == 0) throw std::invalid_argument("count_squareful: y must be >= 1");
  // every squareful n factors uniquely as a^2 * b^3 with b squarefree
  std::uint64_t bmax = kth_root(y, 3);
  std::vector<char> squarefree(bmax + 1, 1);
  for (std::uint64_t d = 2; d * d <= bmax; ++d)
    for (std::uint64_t m = d * d; m <= bmax; m += d * d) squarefree[m] = 0;
  std::uint64_t count = 0;
  for (std::uint64_t b = 1; b <= bmax; ++b)
    if (squarefree[b]) count += isqrt(y / (b * b * b));
  return {count, static_cast<double>(count) /
                     std::sqrt(static_cast<double>(y))};
}

namespace {

constexpr char kCacheMagic[4] = {'S', 'Y', 'L', 'C'};
constexpr std::uint32_t kCacheVersion = 1;

std::optional<std::filesystem::path> cache_root(const SieveConfig& cfg) {
  if (cfg.cache_dir) return cfg.cache_dir;
  if (const char* env = std::getenv("SYLOW_CACHE_DIR"); env && *env)
    return std::filesystem::path(env);
  return std::nullopt;
}

std::optional<std::vector<std::uint64_t>> cache_load(
    const std::filesystem::path& file, std::uint64_t expect_base) {
  std::ifstream in(file, std::ios::binary);
  if (!in) return std::nullopt;
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t base = 0, count = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&base), 8);
  if (!in || std::memcmp(magic, kCacheMagic, 4) != 0 ||
      version != kCacheVersion || base != expect_base)
    return std::nullopt;
  in.read(reinterpret_cast<char*>(&count), 8);
  if (!in) return std::nullopt;
  std::vector<std::uint64_t> primes(count);
  in.read(reinterpret_cast<char*>(primes.data()),
          static_cast<std::streamsize>(count * 8));
  if (!in) return std::nullopt;
  return primes;
}

void cache_store(const std::filesystem::path& file, std::uint64_t base,
                 const std::vector<std::uint64_t>& primes) {
  std::error_code ec;
  std::filesystem::create_directories(file.parent_path(), ec);
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) return;  // cache is best-effort
  std::uint64_t count = primes.size();
  out.write(kCacheMagic, 4);
  out.write(reinterpret_cast<const char*>(&kCacheVersion), 4);
  out.write(reinterpret_cast<const char*>(&base), 8);
  out.write(reinterpret_cast<const char*>(&count), 8);
  out.write(reinterpret_cast<const char*>(primes.data()),
            static_cast<std::streamsize>(count * 8));
}

std::vector<std::uint64_t> small_primes(std::uint64_t y) {
  std::vector<char> sieve(y + 1, 1);
  std::vector<std::uint64_t> primes;
  for (std::uint64_t i = 2; i <= y; ++i) {
    if (!sieve[i]) continue;
    primes.push_back(i);
    for (std::uint64_t j = i * i; j <= y; j += i) sieve[j] = 0;
  }
  return primes;
}

// primes in [lo, hi] given base primes covering sqrt(hi)
void sieve_segment(std::uint64_t lo, std::uint64_t hi,
                   const std::vector<std::uint64_t>& base,
                   std::vector<std::uint64_t>& out) {
  std::vector<char> flags(hi - lo + 1, 1);
  for (std::uint64_t p : base) {
    if (p * p > hi) break;
    std::uint64_t start = std::max(p * p, (lo + p - 1) / p * p);
    for (std::uint64_t m = start; m <= hi; m += p) flags[m - lo] = 0;
  }
  for (std::uint64_t n = std::max<std::uint64_t>(lo, 2); n <= hi; ++n)
    if (flags[n - lo]) out.push_back(n);
}

}  // namespace

std::vector<std::uint64_t> primes_up_to(std::uint64_t y,
                                        const SieveConfig& cfg) {
  if (y > cfg.max_limit)
    throw CapacityError("primes_up_to: limit " + std::to_string(y) +
                        " exceeds sieve budget " +
                        std::to_string(cfg.max_limit));
  if (y < 2) return {};

  auto root = cache_root(cfg);
  std::filesystem::path cache_file;
  if (root) {
    cache_file = *root / ("primes-" + std::to_string(y) + ".sylc");
    if (auto cached = cache_load(cache_file, 0)) return std::move(*cached);
  }

  std::uint64_t r = isqrt(y);
  std::vector<std::uint64_t> base = small_primes(std::max<std::uint64_t>(r, 2));
  std::vector<std::uint64_t> primes;
  if (r >= y) {
    primes = std::move(base);
    while (!primes.empty() && primes.back() > y) primes.pop_back();
  } else {
    primes = base;
    while (!primes.empty() && primes.back() > r) primes.pop_back();

    const std::uint64_t seg = cfg.segment_size;
    std::uint64_t first = r + 1;
    unsigned nthreads = cfg.threads ? cfg.threads : default_threads();
    std::vector<std::pair<std::uint64_t, std::uint64_t>> ranges;
    for (std::uint64_t lo = first; lo <= y; lo += seg)
      ranges.emplace_back(lo, std::min(lo + seg - 1, y));

    std::vector<std::vector<std::uint64_t>> parts(ranges.size());
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
      for (std::size_t i = next.fetch_add(1); i < ranges.size();
           i = next.fetch_add(1))
        sieve_segment(ranges[i].first, ranges[i].second, base, parts[i]);
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < nthreads && t < ranges.size(); ++t)
      pool.emplace_back(worker);
    worker();
    for (auto& th : pool) th.join();
    // deterministic merge in segment order
    for (auto& part : parts)
      primes.insert(primes.end(), part.begin(), part.end());
  }

  if (root) cache_store(cache_file, 0, primes);
  return primes;
}

}  // namespace sylow
