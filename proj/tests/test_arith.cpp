#include <doctest.h>

#include <cstring>
#include <filesystem>
#include <fstream>
#include <random>

#include "sylow/arith.hpp"

namespace {

// Independent trial-division oracles, deliberately naive.
bool trial_is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::vector<std::pair<std::uint64_t, std::uint32_t>> trial_factorize(
    std::uint64_t n) {
  std::vector<std::pair<std::uint64_t, std::uint32_t>> out;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d) continue;
    std::uint32_t k = 0;
    while (n % d == 0) {
      n /= d;
      ++k;
    }
    out.emplace_back(d, k);
  }
  if (n > 1) out.emplace_back(n, 1);
  return out;
}

bool brute_squareful(std::uint64_t n) {
  for (auto [q, k] : trial_factorize(n))
    if (k < 2) return false;
  return true;
}

}  // namespace

TEST_CASE("primes_up_to small cases") {
  CHECK(sylow::primes_up_to(10) ==
        std::vector<std::uint64_t>{2, 3, 5, 7});
  CHECK(sylow::primes_up_to(1).empty());
  CHECK(sylow::primes_up_to(0).empty());
  CHECK(sylow::primes_up_to(2) == std::vector<std::uint64_t>{2});
  CHECK(sylow::primes_up_to(100).size() == 25);
}

TEST_CASE("primes_up_to matches trial division to 10^4") {
  auto primes = sylow::primes_up_to(10'000);
  std::vector<std::uint64_t> expect;
  for (std::uint64_t n = 2; n <= 10'000; ++n)
    if (trial_is_prime(n)) expect.push_back(n);
  CHECK(primes == expect);
}

TEST_CASE("primes_up_to deterministic across thread counts") {
  sylow::SieveConfig one;
  one.threads = 1;
  sylow::SieveConfig many;
  many.threads = 8;
  many.segment_size = 1 << 12;  // force several segments
  CHECK(sylow::primes_up_to(2'000'000, one) ==
        sylow::primes_up_to(2'000'000, many));
}

TEST_CASE("primes_up_to capacity error") {
  sylow::SieveConfig cfg;
  cfg.max_limit = 1000;
  CHECK_THROWS_AS(sylow::primes_up_to(1001, cfg), sylow::CapacityError);
}

TEST_CASE("is_prime agrees with trial division") {
  for (std::uint64_t n = 0; n <= 20'000; ++n)
    CHECK(sylow::is_prime(n) == trial_is_prime(n));
  // large known cases
  CHECK(sylow::is_prime(9999999967ULL));
  CHECK(sylow::is_prime(18446744073709551557ULL));  // largest 64-bit prime
  CHECK_FALSE(sylow::is_prime(3215031751ULL));      // strong pseudoprime 2,3,5,7
}

TEST_CASE("factorize examples") {
  auto f12 = sylow::factorize(12);
  CHECK(f12.factors ==
        std::vector<sylow::FactorEntry>{{2, 2}, {3, 1}});
  CHECK(sylow::factorize(1).factors.empty());
  auto big = sylow::factorize(9999999967ULL);
  REQUIRE(big.factors.size() == 1);
  CHECK(big.factors[0].prime == 9999999967ULL);
  CHECK(big.factors[0].exponent == 1);
  CHECK(trial_is_prime(9999999967ULL));  // independent confirmation
}

TEST_CASE("factorize round-trip and canonical form, exhaustive small") {
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    auto f = sylow::factorize(n);
    CHECK(f.value == n);
    CHECK(f.recompose() == n);
    for (std::size_t i = 0; i < f.factors.size(); ++i) {
      CHECK(f.factors[i].exponent >= 1);
      if (i) CHECK(f.factors[i - 1].prime < f.factors[i].prime);
    }
  }
}

TEST_CASE("factorize round-trip on random 64-bit samples") {
  std::mt19937_64 rng(20260824);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t n = rng() | 1;  // avoid 0
    auto f = sylow::factorize(n);
    CHECK(f.recompose() == n);
    for (const auto& e : f.factors) CHECK(sylow::is_prime(e.prime));
  }
}

TEST_CASE("prime_power_form examples") {
  using PP = std::pair<std::uint64_t, std::uint32_t>;
  CHECK(sylow::prime_power_form(16) == PP{2, 4});
  CHECK(sylow::prime_power_form(81) == PP{3, 4});
  CHECK_FALSE(sylow::prime_power_form(12).has_value());
  CHECK_FALSE(sylow::prime_power_form(1).has_value());
  CHECK(sylow::prime_power_form(2) == PP{2, 1});
  CHECK(sylow::prime_power_form(9999999967ULL) == PP{9999999967ULL, 1});
}

TEST_CASE("prime_power_form iff single-prime factorization") {
  for (std::uint64_t n = 1; n <= 100'000; ++n) {
    auto pp = sylow::prime_power_form(n);
    auto f = sylow::factorize(n);
    CHECK(pp.has_value() == (f.factors.size() == 1));
    if (pp) {
      CHECK(pp->first == f.factors[0].prime);
      CHECK(pp->second == f.factors[0].exponent);
    }
  }
}

TEST_CASE("mult_order examples and Lagrange property") {
  CHECK(sylow::mult_order(2, 3) == 2);
  CHECK(sylow::mult_order(7, 3) == 1);
  CHECK(sylow::mult_order(2, 7) == 3);
  CHECK_THROWS_AS(sylow::mult_order(3, 3), std::invalid_argument);
  CHECK_THROWS_AS(sylow::mult_order(10, 5), std::invalid_argument);

  auto primes = sylow::primes_up_to(10'000);
  for (std::uint64_t p : {3ULL, 5ULL, 7ULL, 11ULL, 13ULL}) {
    for (std::uint64_t q : primes) {
      if (q == p) continue;
      std::uint32_t o = sylow::mult_order(q, p);
      CHECK((p - 1) % o == 0);
      CHECK(sylow::powmod(q, o, p) == 1);
      for (std::uint32_t l = 1; l < o; ++l)
        CHECK(sylow::powmod(q, l, p) != 1);
    }
  }
}

TEST_CASE("is_squareful examples and brute force") {
  CHECK(sylow::is_squareful(72));
  CHECK_FALSE(sylow::is_squareful(12));
  CHECK(sylow::is_squareful(1));
  for (std::uint64_t n = 1; n <= 5000; ++n)
    CHECK(sylow::is_squareful(n) == brute_squareful(n));
}

TEST_CASE("count_squareful examples and brute force") {
  CHECK(sylow::count_squareful(1).count == 1);
  CHECK(sylow::count_squareful(50).count == 10);
  CHECK(sylow::count_squareful(100).count == 14);
  std::uint64_t brute = 0;
  for (std::uint64_t n = 1; n <= 20'000; ++n) {
    if (brute_squareful(n)) ++brute;
    if (n % 1000 == 0) CHECK(sylow::count_squareful(n).count == brute);
  }
}

TEST_CASE("count_squareful ratio bounded with early max") {
  double maxr = 0;
  std::uint64_t argmax = 0;
  for (std::uint64_t y = 1000; y <= 1'000'000'000ULL; y *= 10) {
    double r = sylow::count_squareful(y).ratio;
    CHECK(r > 0);
    CHECK(r < 2.5);  // Erdos-Szekeres constant is ~2.17
    if (r > maxr) {
      maxr = r;
      argmax = y;
    }
  }
  CHECK(argmax <= 1'000'000'000ULL);
  CHECK(maxr < 2.5);
}

TEST_CASE("isqrt and kth_root exactness") {
  for (std::uint64_t n = 0; n <= 10'000; ++n) {
    std::uint64_t r = sylow::isqrt(n);
    CHECK(r * r <= n);
    CHECK((r + 1) * (r + 1) > n);
  }
  std::mt19937_64 rng(7);
  for (int i = 0; i < 5000; ++i) {
    std::uint64_t n = rng();
    for (unsigned k = 2; k <= 6; ++k) {
      std::uint64_t r = sylow::kth_root(n, k);
      // r^k <= n < (r+1)^k, checked in 128-bit to dodge overflow
      __int128 lo = 1, hi = 1;
      for (unsigned j = 0; j < k; ++j) {
        lo *= r;
        hi *= (r + 1);
      }
      CHECK(lo <= static_cast<__int128>(n));
      CHECK(hi > static_cast<__int128>(n));
    }
  }
  // boundary: perfect powers must round-trip exactly
  for (std::uint64_t b = 2; b <= 100; ++b)
    for (unsigned k = 2; k <= 6; ++k) {
      __int128 pk = 1;
      for (unsigned j = 0; j < k; ++j) pk *= b;
      if (pk > static_cast<__int128>(UINT64_MAX)) break;
      auto n = static_cast<std::uint64_t>(pk);
      CHECK(sylow::kth_root(n, k) == b);
      CHECK(sylow::kth_root(n - 1, k) == b - 1);
    }
}

TEST_CASE("prime cache round-trip, header, and corruption recovery") {
  namespace fs = std::filesystem;
  fs::path dir = fs::temp_directory_path() / "sylow-cache-test";
  fs::remove_all(dir);
  fs::create_directories(dir);

  sylow::SieveConfig cfg;
  cfg.cache_dir = dir;
  auto fresh = sylow::primes_up_to(100'000, cfg);
  fs::path file = dir / "primes-100000.sylc";
  REQUIRE(fs::exists(file));

  // header layout: magic "SYLC", version u32 = 1, base u64 = 0, little-endian
  std::ifstream in(file, std::ios::binary);
  char magic[4];
  std::uint32_t version = 0;
  std::uint64_t base = 0, count = 0;
  in.read(magic, 4);
  in.read(reinterpret_cast<char*>(&version), 4);
  in.read(reinterpret_cast<char*>(&base), 8);
  in.read(reinterpret_cast<char*>(&count), 8);
  CHECK(std::memcmp(magic, "SYLC", 4) == 0);
  CHECK(version == 1);
  CHECK(base == 0);
  CHECK(count == fresh.size());

  // warm read returns the same list
  CHECK(sylow::primes_up_to(100'000, cfg) == fresh);

  // corrupt the magic: the cache must be ignored, not trusted
  {
    std::ofstream out(file, std::ios::binary | std::ios::in);
    out.write("XXXX", 4);
  }
  CHECK(sylow::primes_up_to(100'000, cfg) == fresh);

  // no cache dir: identical output
  sylow::SieveConfig plain;
  CHECK(sylow::primes_up_to(100'000, plain) == fresh);
  fs::remove_all(dir);
}

TEST_CASE("mulmod and powmod exactness near 64-bit") {
  std::mt19937_64 rng(99);
  for (int i = 0; i < 2000; ++i) {
    std::uint64_t m = (rng() | (1ULL << 62)) | 1;
    std::uint64_t a = rng() % m, b = rng() % m;
    auto expect = static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % m);
    CHECK(sylow::mulmod(a, b, m) == expect);
  }
  CHECK(sylow::powmod(2, 10, 1025) == 1024);
  CHECK(sylow::powmod(7, 0, 13) == 1);
}
