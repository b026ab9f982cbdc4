#include "compseries/series.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "compseries/formulas.hpp"
#include "compseries/lattice.hpp"

namespace compseries {

std::vector<std::size_t> CompositionChain::orders() const
{
  std::vector<std::size_t> out;
  out.reserve(terms.size());
  for (const auto& t : terms)
    out.push_back(t.order());
  return out;
}

std::string to_string(CountMethod m)
{
  switch (m) {
  case CountMethod::brute_force:
    return "brute-force";
  case CountMethod::formula:
    return "formula";
  case CountMethod::cached:
    return "cached";
  }
  return "unknown";
}

SeriesCounter::SeriesCounter(const GroupTable& group, const Limits& limits)
  : group_(&group), limits_(limits)
{
  if (group.order() > limits.element_cap)
    throw capacity_error("series count: order " + std::to_string(group.order()) +
                         " exceeds the element cap " + std::to_string(limits.element_cap));
}

std::vector<ElementSet> SeriesCounter::children(const ElementSet& members) const
{
  const auto& g = *group_;
  std::vector<ElementSet> out;
  if (members.count() == 1)
    return out;
  if (members.count() == g.order()) {
    for (const auto& m : maximal_normal_subgroups(g, limits_))
      out.push_back(m.members());
  } else {
    const auto local = realize_subgroup(g, members);
    for (const auto& m : maximal_normal_subgroups(local.table, limits_)) {
      ElementSet lifted(g.order());
      const auto& bits = m.members();
      for (auto i = bits.find_first(); i != ElementSet::npos; i = bits.find_next(i))
        lifted.set(local.to_parent[i]);
      out.push_back(std::move(lifted));
    }
  }
  // the lift is increasing, so members_less order survives it
  return out;
}

Count SeriesCounter::count(const ElementSet& members)
{
  if (members.count() == 1)
    return 1;
  if (auto it = memo_.find(members); it != memo_.end())
    return it->second;
  Count total = 0;
  for (const auto& child : children(members))
    total += count(child);
  memo_.emplace(members, total);
  return total;
}

Count SeriesCounter::count_whole()
{
  ElementSet all(group_->order());
  all.set();
  return count(all);
}

SeriesCount count_series(const GroupTable& group, const Limits& limits)
{
  SeriesCounter counter(group, limits);
  return {counter.count_whole(), CountMethod::brute_force};
}

namespace {

CompositionChain chain_from_path(const GroupTable& group, const std::vector<ElementSet>& top_down)
{
  CompositionChain chain;
  chain.terms.reserve(top_down.size());
  for (auto it = top_down.rbegin(); it != top_down.rend(); ++it)
    chain.terms.push_back(Subgroup::unchecked(group, *it));
  return chain;
}

} // namespace

void for_each_series(const GroupTable& group,
                     const std::function<bool(const CompositionChain&)>& visit,
                     std::optional<std::size_t> limit, const Limits& limits)
{
  if (limit && *limit == 0)
    throw std::domain_error("enumerate_series: limit must be positive");
  SeriesCounter counter(group, limits);
  std::unordered_map<ElementSet, std::vector<ElementSet>> child_cache;
  std::vector<ElementSet> path;
  std::size_t produced = 0;
  bool stop = false;

  std::function<void(const ElementSet&)> walk = [&](const ElementSet& h) {
    path.push_back(h);
    if (h.count() == 1) {
      ++produced;
      if (!visit(chain_from_path(group, path)) || (limit && produced >= *limit))
        stop = true;
    } else {
      auto it = child_cache.find(h);
      if (it == child_cache.end())
        it = child_cache.emplace(h, counter.children(h)).first;
      // copy: recursion may rehash the cache
      const auto kids = it->second;
      for (const auto& k : kids) {
        walk(k);
        if (stop)
          break;
      }
    }
    path.pop_back();
  };

  ElementSet all(group.order());
  all.set();
  walk(all);
}

std::vector<CompositionChain> enumerate_series(const GroupTable& group,
                                               std::optional<std::size_t> limit,
                                               const Limits& limits)
{
  std::vector<CompositionChain> out;
  for_each_series(group, [&](const CompositionChain& c) {
    out.push_back(c);
    return true;
  }, limit, limits);
  return out;
}

CompositionChain nth_series(SeriesCounter& counter, const Count& index)
{
  const auto& group = counter.group();
  ElementSet current(group.order());
  current.set();
  if (index < 0 || index >= counter.count(current))
    throw std::out_of_range("nth_series: index past the last composition series");
  Count rest = index;
  std::vector<ElementSet> path{current};
  while (current.count() != 1) {
    bool descended = false;
    for (auto& child : counter.children(current)) {
      Count c = counter.count(child);
      if (rest < c) {
        current = std::move(child);
        descended = true;
        break;
      }
      rest -= c;
    }
    if (!descended)
      throw std::logic_error("nth_series: memoized counts are inconsistent");
    path.push_back(current);
  }
  return chain_from_path(group, path);
}

std::vector<std::size_t> composition_factor_orders(const CompositionChain& chain)
{
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i + 1 < chain.terms.size(); ++i)
    out.push_back(chain.terms[i + 1].order() / chain.terms[i].order());
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<std::string> validate_chain(const GroupTable& group, const CompositionChain& chain)
{
  if (chain.terms.empty())
    return "chain has no terms";
  for (const auto& t : chain.terms) {
    if (&t.parent() != &group)
      return "chain term belongs to a different table";
  }
  if (!chain.terms.front().is_trivial())
    return "first term is not the trivial subgroup";
  if (!chain.terms.back().is_whole())
    return "last term is not the whole group";
  std::size_t product = 1;
  for (std::size_t i = 0; i + 1 < chain.terms.size(); ++i) {
    const auto& lower = chain.terms[i];
    const auto& upper = chain.terms[i + 1];
    const std::string at = " at step " + std::to_string(i);
    if (!lower.is_subgroup_of(upper) || lower.order() == upper.order())
      return "terms are not strictly increasing" + at;
    if (!is_normal_in(lower, upper))
      return "term is not normal in the next term" + at;
    if (!is_simple(quotient(group, lower, upper)))
      return "factor group is not simple" + at;
    product *= upper.order() / lower.order();
  }
  if (product != group.order())
    return "factor orders do not multiply to the group order";
  return std::nullopt;
}

Count count_divisor_chains(std::uint64_t n)
{
  const auto f = factorize(n);
  std::map<std::uint64_t, Count> memo;
  std::function<Count(std::uint64_t)> chains = [&](std::uint64_t d) -> Count {
    if (d == 1)
      return 1;
    if (auto it = memo.find(d); it != memo.end())
      return it->second;
    Count total = 0;
    for (const auto& pp : f.pairs()) {
      if (d % pp.prime == 0)
        total += chains(d / pp.prime);
    }
    memo.emplace(d, total);
    return total;
  };
  return chains(n);
}

std::vector<std::uint64_t> divisor_chain_from_primes(const std::vector<std::uint64_t>& primes)
{
  std::vector<std::uint64_t> chain{1};
  for (auto p : primes)
    chain.push_back(chain.back() * p);
  return chain;
}

std::vector<std::vector<std::uint64_t>> divisor_chains(std::uint64_t n)
{
  std::vector<std::uint64_t> sequence;
  const auto f = factorize(n);
  for (const auto& pp : f.pairs())
    sequence.insert(sequence.end(), pp.exponent, pp.prime);
  std::vector<std::vector<std::uint64_t>> out;
  do {
    out.push_back(divisor_chain_from_primes(sequence));
  } while (std::next_permutation(sequence.begin(), sequence.end()));
  return out;
}

nlohmann::json to_json(const CompositionChain& chain)
{
  nlohmann::json orders = nlohmann::json::array();
  nlohmann::json subgroups = nlohmann::json::array();
  for (const auto& t : chain.terms) {
    orders.push_back(t.order());
    subgroups.push_back(t.elements());
  }
  return {{"orders", orders}, {"subgroups", subgroups}};
}

} // namespace compseries
