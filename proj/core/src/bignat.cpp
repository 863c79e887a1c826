#include "sylow/bignat.hpp"

#include <cmath>
#include <ostream>

namespace sylow {

BigNat BigNat::factorial(std::uint64_t n) {
  BigNat r;
  mpz_fac_ui(r.z_, n);
  return r;
}

BigNat BigNat::pow(std::uint64_t base, std::uint64_t exp) {
  BigNat r;
  mpz_ui_pow_ui(r.z_, base, exp);
  return r;
}

BigNat BigNat::pow(const BigNat& base, std::uint64_t exp) {
  BigNat r;
  mpz_pow_ui(r.z_, base.z_, exp);
  return r;
}

BigNat BigNat::div_exact(const BigNat& rhs) const {
  if (mpz_sgn(rhs.z_) == 0) throw std::domain_error("BigNat: division by zero");
  BigNat q, r;
  mpz_tdiv_qr(q.z_, r.z_, z_, rhs.z_);
  if (mpz_sgn(r.z_) != 0)
    throw std::domain_error("BigNat: inexact division");
  return q;
}

std::uint64_t BigNat::mod_u64(std::uint64_t m) const {
  if (m == 0) throw std::domain_error("BigNat: mod by zero");
  return mpz_fdiv_ui(z_, m);
}

bool BigNat::fits_u64() const { return mpz_fits_ulong_p(z_) != 0; }

std::uint64_t BigNat::to_u64() const {
  if (!fits_u64()) throw std::overflow_error("BigNat: value exceeds 64 bits");
  return mpz_get_ui(z_);
}

std::string BigNat::to_string() const {
  char* s = mpz_get_str(nullptr, 10, z_);
  std::string r(s);
  void (*freefn)(void*, size_t);
  mp_get_memory_functions(nullptr, nullptr, &freefn);
  freefn(s, r.size() + 1);
  return r;
}

double BigNat::log() const {
  if (mpz_sgn(z_) == 0) throw std::domain_error("BigNat: log(0)");
  signed long exp;
  double mant = mpz_get_d_2exp(&exp, z_);
  return std::log(mant) + static_cast<double>(exp) * std::log(2.0);
}

std::ostream& operator<<(std::ostream& os, const BigNat& v) {
  return os << v.to_string();
}

}  // namespace sylow
