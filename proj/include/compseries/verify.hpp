#ifndef COMPSERIES_VERIFY_HPP
#define COMPSERIES_VERIFY_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "catalog.hpp"

namespace compseries {

struct CheckResult {
  std::string name;
  bool passed = true;
  std::size_t cases = 0;
  std::string detail;
  /// Observations that do not fail the check.
  std::vector<std::string> findings;
  std::int64_t elapsed_ms = 0;
};

/// Realized catalog groups and brute-force series counts, shared between
/// checks so each group is built and counted once.
class VerifyContext {
public:
  explicit VerifyContext(Limits limits = {}) : limits_(limits) {}

  const Limits& limits() const { return limits_; }
  const GroupTable& group(const std::string& spec);
  Count series_count(const std::string& spec);

  /// Canonical texts of the roster entries of order <= max_order.
  std::vector<std::string> roster(std::uint64_t max_order) const;

private:
  Limits limits_;
  std::map<std::string, std::unique_ptr<GroupTable>> groups_;
  std::map<std::string, Count> counts_;
};

/// normal_subgroups equals the normal members of all_subgroups.
CheckResult check_normal_lattice(VerifyContext& ctx, std::uint64_t max_order);

/// Hyperplane route and lattice route give the same maximal normal subgroups,
/// and each is normal, proper and maximal.
CheckResult check_maximal_normal_routes(VerifyContext& ctx, std::uint64_t max_order);

/// Brute-force counts of every abelian type of order <= max_order against
/// the product-of-Sylow-counts formula, plus the elementary and cyclic
/// closed forms where they apply.
CheckResult check_abelian_counts(VerifyContext& ctx, std::uint64_t max_order);

/// Divisor-chain DP and the prime-arrangement enumeration against the
/// multinomial for n <= max_n, and brute force on Z_n up to brute_max.
CheckResult check_cyclic_counts(VerifyContext& ctx, std::uint64_t max_n, std::uint64_t brute_max);

/// Identities between the formulas for every n <= max_n.
CheckResult check_formula_identities(std::uint64_t max_n);

/// m(P1 x P2) = m(P1) + m(P2) for coprime roster pairs.
CheckResult check_maximal_additivity(VerifyContext& ctx, std::uint64_t max_order);

/// Brute-force maximal-subgroup counts of abelian groups with elementary
/// Sylow subgroups against the closed form.
CheckResult check_maximal_formula(VerifyContext& ctx, std::uint64_t max_order);

/// A5^k has 2^k normal and k maximal normal subgroups.
CheckResult check_simple_powers(VerifyContext& ctx, std::uint64_t max_order);

/// count_series(G) <= bound(n) on the roster; equality only at the
/// elementary abelian 2-group of order 2^floor(log2 n).
CheckResult check_catalog_bound(VerifyContext& ctx, std::uint64_t n);

/// Enumerated chains are valid, as many as the count, and share one factor
/// multiset per group. Large groups are sampled.
CheckResult check_chains(VerifyContext& ctx, std::uint64_t max_order);

/// `samples` chains drawn uniformly (group, then chain index) from roster
/// groups of order <= max_order, each validated from scratch.
CheckResult check_random_chains(VerifyContext& ctx, std::size_t samples, std::uint64_t max_order,
                                std::uint64_t seed);

/// Every check above at the given order cap.
std::vector<CheckResult> run_verification(std::uint64_t order_cap, const Limits& limits = {});

nlohmann::json to_json(const CheckResult& check);

} // namespace compseries

#endif // COMPSERIES_VERIFY_HPP
