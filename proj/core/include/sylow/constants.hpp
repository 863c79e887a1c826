#pragma once

#include <cstdint>
#include <string>

namespace sylow {

struct ConstantEstimate {
  std::uint64_t p = 0;
  std::uint64_t prime_bound_Q = 0;
  double C_p = 0.0;      // Landau-type product constant
  double hp_sum = 0.0;   // sum over n of h_p(n)/n, via Euler product
  double c_p = 0.0;      // C_p * hp_sum
  double gamma_value = 0.0;  // Gamma(1/(p-1))
};

/// Gamma(t) for t in (0, 2]; relative error within 1e-12.
double gamma_fn(double t);

/// The constant
///   (1/Gamma(1/(p-1))) * prod_q (1-1/q)^(1/(p-1)) * prod_{q=1 mod p} (1-1/q)^(-1)
/// truncated at q <= Q. The two products diverge separately, so the log
/// terms are combined per prime before summing; truncation drift is
/// O(1/log Q) and is probed by varying Q.
double landau_constant(std::uint64_t p, std::uint64_t Q);

struct DirichletSum {
  double value;           // prod over q <= Q, ord_p(q) > 1 of (1-q^-ord)^-1
  double tail_log_bound;  // log-space bound on the omitted q > Q factors
};

/// Euler product for sum_n h_p(n)/n, truncated at Q. The tail is bounded
/// by sum_{q>Q} 2/q^2, which is tiny for any reasonable Q.
DirichletSum hp_dirichlet_sum(std::uint64_t p, std::uint64_t Q);

/// Assembles c_p = C_p * sum h_p(n)/n.
ConstantEstimate cp(std::uint64_t p, std::uint64_t Q);

std::string to_json(const ConstantEstimate& e);
std::string csv_header_constants();
std::string to_csv_row(const ConstantEstimate& e);

}  // namespace sylow
