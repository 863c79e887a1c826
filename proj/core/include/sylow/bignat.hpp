#pragma once

#include <gmp.h>

#include <cstdint>
#include <iosfwd>
#include <stdexcept>
#include <string>

namespace sylow {

// Exact arbitrary-precision naturals, backed by GMP. Only the operations
// the catalog needs: multiply, factorial, power, exact division, compare,
// residues and decimal rendering.
class BigNat {
 public:
  BigNat() { mpz_init(z_); }
  BigNat(std::uint64_t v) { mpz_init_set_ui(z_, v); }  // NOLINT
  BigNat(const BigNat& o) { mpz_init_set(z_, o.z_); }
  BigNat(BigNat&& o) noexcept {
    mpz_init(z_);
    mpz_swap(z_, o.z_);
  }
  BigNat& operator=(const BigNat& o) {
    if (this != &o) mpz_set(z_, o.z_);
    return *this;
  }
  BigNat& operator=(BigNat&& o) noexcept {
    mpz_swap(z_, o.z_);
    return *this;
  }
  ~BigNat() { mpz_clear(z_); }

  static BigNat factorial(std::uint64_t n);
  static BigNat pow(std::uint64_t base, std::uint64_t exp);
  static BigNat pow(const BigNat& base, std::uint64_t exp);

  BigNat& operator*=(const BigNat& rhs) {
    mpz_mul(z_, z_, rhs.z_);
    return *this;
  }
  friend BigNat operator*(BigNat lhs, const BigNat& rhs) {
    lhs *= rhs;
    return lhs;
  }

  /// Exact quotient; throws std::domain_error if rhs does not divide *this.
  BigNat div_exact(const BigNat& rhs) const;
  bool divides(const BigNat& other) const {  // *this | other
    return mpz_divisible_p(other.z_, z_) != 0;
  }
  std::uint64_t mod_u64(std::uint64_t m) const;

  int compare(const BigNat& rhs) const { return mpz_cmp(z_, rhs.z_); }
  friend bool operator==(const BigNat& a, const BigNat& b) {
    return a.compare(b) == 0;
  }
  friend auto operator<=>(const BigNat& a, const BigNat& b) {
    return a.compare(b) <=> 0;
  }

  bool fits_u64() const;
  std::uint64_t to_u64() const;  // throws std::overflow_error if too large
  std::string to_string() const;
  double log() const;  // natural log; throws std::domain_error at 0

  friend std::ostream& operator<<(std::ostream& os, const BigNat& v);

 private:
  mpz_t z_;
};

}  // namespace sylow
