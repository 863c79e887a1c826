#include "sylow/constants.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

#include "json.hpp"
#include "sylow/arith.hpp"

namespace sylow {

double gamma_fn(double t) {
  if (t <= 0.0) throw std::domain_error("gamma_fn: t must be positive");
  return std::tgamma(t);
}

namespace {

void require_params(std::uint64_t p, std::uint64_t Q, const char* who) {
  if (p < 3 || !is_prime(p))
    throw std::invalid_argument(std::string(who) + ": p must be an odd prime");
  if (Q < 100)
    throw std::invalid_argument(std::string(who) + ": Q must be >= 100");
}

}  // namespace

double landau_constant(std::uint64_t p, std::uint64_t Q) {
  require_params(p, Q, "landau_constant");
  const double inv = 1.0 / static_cast<double>(p - 1);
  double logsum = 0.0, comp = 0.0;  // Kahan
  for (std::uint64_t q : primes_up_to(Q)) {
    double lq = std::log1p(-1.0 / static_cast<double>(q));
    double term = inv * lq - (q % p == 1 ? lq : 0.0);
    double y = term - comp;
    double t = logsum + y;
    comp = (t - logsum) - y;
    logsum = t;
  }
  return std::exp(logsum) / gamma_fn(inv);
}

DirichletSum hp_dirichlet_sum(std::uint64_t p, std::uint64_t Q) {
  require_params(p, Q, "hp_dirichlet_sum");
  // the order depends only on q mod p; precompute per residue class
  std::vector<std::uint32_t> order_of(p, 0);
  for (std::uint64_t r = 2; r < p; ++r) order_of[r] = mult_order(r, p);
  double logsum = 0.0;
  for (std::uint64_t q : primes_up_to(Q)) {
    if (q % p <= 1) continue;
    std::uint32_t o = order_of[q % p];
    // (1 - q^-o)^-1, in log space
    logsum -= std::log1p(-std::pow(static_cast<double>(q),
                                   -static_cast<double>(o)));
  }
  // every omitted factor has o >= 2, so log factor <= 2/q^2; the prime
  // tail sum beyond Q is below 2/Q
  return {std::exp(logsum), 2.0 / static_cast<double>(Q)};
}

ConstantEstimate cp(std::uint64_t p, std::uint64_t Q) {
  require_params(p, Q, "cp");
  ConstantEstimate e;
  e.p = p;
  e.prime_bound_Q = Q;
  e.gamma_value = gamma_fn(1.0 / static_cast<double>(p - 1));
  e.C_p = landau_constant(p, Q);
  e.hp_sum = hp_dirichlet_sum(p, Q).value;
  e.c_p = e.C_p * e.hp_sum;
  return e;
}

std::string to_json(const ConstantEstimate& e) {
  nlohmann::json j{{"p", e.p},          {"Q", e.prime_bound_Q},
                   {"C_p", e.C_p},      {"hp_sum", e.hp_sum},
                   {"c_p", e.c_p},      {"gamma_value", e.gamma_value}};
  return j.dump();
}

std::string csv_header_constants() { return "Q,C_p,hp_sum,c_p"; }

std::string to_csv_row(const ConstantEstimate& e) {
  auto d = [](double v) { return nlohmann::json(v).dump(); };
  return std::to_string(e.prime_bound_Q) + "," + d(e.C_p) + "," +
         d(e.hp_sum) + "," + d(e.c_p);
}

}  // namespace sylow
