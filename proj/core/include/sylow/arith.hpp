#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace sylow {

/// Thrown when a request exceeds a configured memory/element budget.
class CapacityError : public std::runtime_error {
 public:
  explicit CapacityError(const std::string& what) : std::runtime_error(what) {}
};

struct FactorEntry {
  std::uint64_t prime;
  std::uint32_t exponent;
  friend bool operator==(const FactorEntry&, const FactorEntry&) = default;
};

/// An integer together with its canonical prime factorization.
/// Invariant: primes strictly increasing, exponents >= 1, product == value.
/// value == 1 iff factors is empty.
struct FactoredInteger {
  std::uint64_t value = 1;
  std::vector<FactorEntry> factors;

  std::uint64_t recompose() const;
};

struct SieveConfig {
  std::size_t segment_size = std::size_t{1} << 20;  // numbers per segment
  std::uint64_t max_limit = 20'000'000'000ULL;      // capacity budget
  unsigned threads = 0;                             // 0 = hardware default
  // Cache directory; when unset the SYLOW_CACHE_DIR environment variable
  // is consulted. Cache files are little-endian with a 16-byte header:
  // magic "SYLC", version u32, segment base u64.
  std::optional<std::filesystem::path> cache_dir;
};

/// Process-wide default thread budget, used when a config passes 0.
/// 0 restores "hardware concurrency".
void set_default_threads(unsigned n);
unsigned default_threads();

/// All primes <= y, ascending. Segmented Eratosthenes; deterministic for a
/// given y regardless of threading or cache state.
std::vector<std::uint64_t> primes_up_to(std::uint64_t y,
                                        const SieveConfig& cfg = {});

/// Deterministic Miller-Rabin, valid for the full 64-bit range.
bool is_prime(std::uint64_t n);

/// Canonical factorization. Trial division below a small bound, then
/// Miller-Rabin plus Brent-rho splitting for the 64-bit remainder.
FactoredInteger factorize(std::uint64_t n);

/// (q, k) with q prime, k >= 1, q^k == n; nullopt for 1 and non-prime-powers.
std::optional<std::pair<std::uint64_t, std::uint32_t>> prime_power_form(
    std::uint64_t n);

/// Smallest l >= 1 with q^l == 1 (mod p). Requires p prime and p not
/// dividing q; throws std::invalid_argument otherwise.
std::uint32_t mult_order(std::uint64_t q, std::uint64_t p);

/// Every prime divisor occurs with exponent >= 2. Vacuously true for 1.
bool is_squareful(std::uint64_t n);
bool is_squareful(const FactoredInteger& n);

struct SquarefulCount {
  std::uint64_t count;
  double ratio;  // count / sqrt(y)
};

/// |{n <= y : n squareful}| via the a^2*b^3 parametrization (b squarefree),
/// so y up to 1e12+ is cheap.
SquarefulCount count_squareful(std::uint64_t y);

std::uint64_t isqrt(std::uint64_t n);

/// floor(n^(1/k)) by integer Newton iteration with a correction step.
std::uint64_t kth_root(std::uint64_t n, unsigned k);

std::uint64_t pow_u64(std::uint64_t base, std::uint32_t exp);  // unchecked
std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t b, std::uint64_t e, std::uint64_t m);

}  // namespace sylow
