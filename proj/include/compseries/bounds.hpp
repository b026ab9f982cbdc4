#ifndef COMPSERIES_BOUNDS_HPP
#define COMPSERIES_BOUNDS_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include <json.hpp>

#include "formulas.hpp"

namespace compseries {

/// Largest e with base^e <= n, by exact repeated multiplication.
unsigned floor_log(std::uint64_t base, std::uint64_t n);

/// prod_{i=1..floor(log2 n)} (2^i - 1): the series count of the elementary
/// abelian 2-group of order 2^floor(log2 n). Requires n >= 4.
Count bound(std::uint64_t n);

/// 2^floor(log2 n) - 1 > (p^floor(log_p n) - 1)/(p - 1) for an odd prime
/// p <= n and n >= 4.
bool check_power_of_two_vs_hyperplanes(std::uint64_t n, std::uint64_t p);

/// Every pair (n, p) with 4 <= n <= max_n and p an odd prime <= n for which
/// that comparison fails. Both sides are tracked incrementally in n, so the
/// whole grid costs one comparison per pair.
std::vector<std::pair<std::uint64_t, std::uint64_t>> power_of_two_vs_hyperplanes_failures(std::uint64_t max_n);

/// The elementary abelian 2-group of order 2^floor(log2 n) has more
/// composition series than the elementary abelian p-group of order
/// p^floor(log_p n), for an odd prime p <= n.
bool check_p_group_bound(std::uint64_t n, std::uint64_t p);

/**
 * Parameters of the odd-prime reduction step.
 *
 * alpha1 is the exponent of 2, alpha_r and p the exponent and odd prime
 * being traded for a power of two, k = floor(log2 p^alpha_r), s the sum of
 * the exponents other than alpha_r, a = s - alpha1 and b = k - alpha_r.
 */
struct InequalityParams {
  unsigned alpha1 = 0;
  unsigned alpha_r = 1;
  std::uint64_t p = 5;
  unsigned k = 2;
  unsigned s = 0;
  unsigned a = 0;
  unsigned b = 1;

  /// Derives k, a and b and validates. The pair p = 3, alpha_r = 1 is
  /// rejected, as is s < alpha1.
  static InequalityParams make(unsigned alpha1, unsigned alpha_r, std::uint64_t p, unsigned s);

  /// Recomputes the derived fields and throws std::domain_error on mismatch.
  void validate() const;
};

/// X/Y with X = prod_{i=alpha1+1}^{alpha1+k} (2^i - 1) alpha1! alpha_r! and
/// Y = prod_{j=1}^{alpha_r} (p^j - 1)/(p - 1) (alpha1 + alpha_r)!.
Rational alpha_ratio(const InequalityParams& params);

/// (2^{alpha1+k+1} - 1)(alpha1 + 1) > (2^{alpha1+1} - 1)(alpha1 + alpha_r + 1),
/// i.e. X/Y grows when alpha1 grows by one.
bool alpha_ratio_step_exceeds_one(const InequalityParams& params);

/// The closed form of alpha_ratio(alpha1 + 1) / alpha_ratio(alpha1).
Rational alpha_ratio_step(const InequalityParams& params);

/// prod_{i=alpha1+1}^{alpha1+k} (2^i-1) (k+s)! alpha1! alpha_r!
///   > prod_j (p^j-1)/(p-1) (alpha1+k)! (alpha_r+s)!
bool check_reduction_inequality(const InequalityParams& params);

/// The same inequality rewritten with s = alpha1 + a and k = alpha_r + b.
bool check_reduction_inequality_ab(const InequalityParams& params);

/// The (a, b) form at a = 0 after cancelling (alpha1 + alpha_r + b)!.
bool check_reduction_inequality_cancelled(const InequalityParams& params);

/// (alpha1+alpha_r+a+b)! alpha1! alpha_r! / ((alpha1+alpha_r+a)! (alpha1+alpha_r+b)!)
Rational factorial_ratio(unsigned alpha1, unsigned alpha_r, unsigned a, unsigned b);

/// p^alpha_r > 2 alpha_r + 2 for p >= 5, alpha_r >= 1 or p = 3, alpha_r >= 2.
bool check_induction_base(std::uint64_t p, unsigned alpha_r);

/// 2^{alpha1+1} > alpha1 + 2 for alpha1 >= 1.
bool check_power_exceeds_linear(unsigned alpha1);

struct SweepRecord {
  std::uint64_t m = 0;
  Factorization factorization;
  Count candidate_count;
  Count bound_value;
  bool is_equality = false;
};

struct SweepReport {
  std::uint64_t n = 0;
  bool per_order = false;
  std::uint64_t orders_checked = 0;
  std::vector<SweepRecord> violations;
  std::vector<std::uint64_t> equality_attainers;
  /// Largest candidate/bound over the orders that are not attainers.
  Rational max_ratio = 0;
  std::uint64_t max_ratio_order = 0;
  std::int64_t elapsed_ms = 0;
};

constexpr std::uint64_t default_sweep_cap = 1'000'000;

/// For every 4 <= m <= n compares the largest series count at order m
/// (abelian with elementary abelian Sylow subgroups) against bound(n).
/// jobs = 0 uses the available hardware parallelism.
SweepReport sweep_fixed_bound(std::uint64_t n, unsigned jobs = 0,
                             std::uint64_t cap = default_sweep_cap);

/// Same sweep but each order m is compared against bound(m).
SweepReport sweep_per_order(std::uint64_t n, unsigned jobs = 0,
                            std::uint64_t cap = default_sweep_cap);

/// Decimal rendering rounded half-up to `digits` places.
std::string format_ratio(const Rational& r, unsigned digits = 6);

nlohmann::json to_json(const SweepRecord& record);
nlohmann::json to_json(const SweepReport& report);

} // namespace compseries

#endif // COMPSERIES_BOUNDS_HPP
