#ifndef COMPSERIES_SERIES_HPP
#define COMPSERIES_SERIES_HPP

#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include <json.hpp>

#include "group.hpp"

namespace compseries {

/// {e} = G_0 < G_1 < ... < G_k = G, each term maximal normal in the next.
struct CompositionChain {
  std::vector<Subgroup> terms;

  std::size_t length() const { return terms.empty() ? 0 : terms.size() - 1; }
  std::vector<std::size_t> orders() const;
};

enum class CountMethod { brute_force, formula, cached };

std::string to_string(CountMethod m);

struct SeriesCount {
  Count value;
  CountMethod method = CountMethod::brute_force;
};

/**
 * Memoized walk over the maximal-normal-subgroup relation of one group.
 *
 * c({e}) = 1 and c(H) = sum of c(M) over the maximal normal subgroups M of H.
 * Each H is re-encoded as its own table to find its maximal normal
 * subgroups; results are keyed by H's member set inside the parent.
 */
class SeriesCounter {
public:
  explicit SeriesCounter(const GroupTable& group, const Limits& limits = {});

  const GroupTable& group() const { return *group_; }

  Count count(const ElementSet& members);
  Count count_whole();

  /// Maximal normal subgroups of the subgroup, as parent member sets,
  /// in members_less order.
  std::vector<ElementSet> children(const ElementSet& members) const;

  std::size_t memo_size() const { return memo_.size(); }

private:
  const GroupTable* group_;
  Limits limits_;
  std::unordered_map<ElementSet, Count> memo_;
};

/// Exact number of distinct composition series.
SeriesCount count_series(const GroupTable& group, const Limits& limits = {});

/// Visits chains in depth-first order (children in members_less order)
/// until the visitor returns false or `limit` chains have been produced.
/// Throws std::domain_error if limit is 0.
void for_each_series(const GroupTable& group,
                     const std::function<bool(const CompositionChain&)>& visit,
                     std::optional<std::size_t> limit = std::nullopt,
                     const Limits& limits = {});

std::vector<CompositionChain> enumerate_series(const GroupTable& group,
                                               std::optional<std::size_t> limit = std::nullopt,
                                               const Limits& limits = {});

/// The chain at position `index` of the for_each_series order, without
/// producing the ones before it. Throws std::out_of_range past the end.
CompositionChain nth_series(SeriesCounter& counter, const Count& index);

/// Sorted multiset of factor orders |G_{i+1}| / |G_i|.
std::vector<std::size_t> composition_factor_orders(const CompositionChain& chain);

/// Checks every chain invariant from scratch (normality in the next term and
/// simplicity of each factor). Returns the first violation, if any.
std::optional<std::string> validate_chain(const GroupTable& group, const CompositionChain& chain);

/// Number of maximal chains 1 = d_0 | d_1 | ... | d_k = n with prime steps,
/// by dynamic programming over the divisors of n.
Count count_divisor_chains(std::uint64_t n);

/// The divisor chain of Z_n made from a sequence of primes: partial products
/// 1, b1, b1*b2, ... of the sequence.
std::vector<std::uint64_t> divisor_chain_from_primes(const std::vector<std::uint64_t>& primes);

/// All prime-step divisor chains of n, one per distinct arrangement of the
/// prime factors (lexicographic order of the arrangements).
std::vector<std::vector<std::uint64_t>> divisor_chains(std::uint64_t n);

/// { "orders": [...], "subgroups": [[...], ...] }
nlohmann::json to_json(const CompositionChain& chain);

} // namespace compseries

#endif // COMPSERIES_SERIES_HPP
