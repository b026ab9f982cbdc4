#include "compseries/verify.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>
#include <sstream>

#include "compseries/bounds.hpp"
#include "compseries/formulas.hpp"
#include "compseries/lattice.hpp"
#include "compseries/series.hpp"

namespace compseries {

namespace {

constexpr std::size_t full_enumeration_limit = 2000;
constexpr std::size_t sampled_chains_per_group = 100;

template <class F>
CheckResult timed(std::string name, F&& body)
{
  CheckResult r;
  r.name = std::move(name);
  const auto start = std::chrono::steady_clock::now();
  body(r);
  r.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                   std::chrono::steady_clock::now() - start)
                   .count();
  return r;
}

void fail(CheckResult& r, const std::string& what)
{
  if (r.passed)
    r.detail = what;
  r.passed = false;
}

std::string join(const std::vector<std::size_t>& v)
{
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i)
    s += (i ? "," : "") + std::to_string(v[i]);
  return s;
}

std::set<ElementSet> member_sets(const SubgroupSet& set)
{
  std::set<ElementSet> out;
  for (const auto& s : set)
    out.insert(s.members());
  return out;
}

std::vector<ElementSet> member_list(const SubgroupSet& set)
{
  std::vector<ElementSet> out;
  for (const auto& s : set)
    out.push_back(s.members());
  return out;
}

bool all_elementary(const std::map<std::uint64_t, std::vector<unsigned>>& types)
{
  for (const auto& [p, exps] : types)
    for (auto e : exps)
      if (e != 1)
        return false;
  return true;
}

bool all_cyclic(const std::map<std::uint64_t, std::vector<unsigned>>& types)
{
  for (const auto& [p, exps] : types)
    if (exps.size() != 1)
      return false;
  return true;
}

Factorization order_factorization(const std::map<std::uint64_t, std::vector<unsigned>>& types)
{
  std::vector<PrimePower> pairs;
  for (const auto& [p, exps] : types)
    pairs.push_back({p, std::accumulate(exps.begin(), exps.end(), 0u)});
  return Factorization(std::move(pairs));
}

Count random_below(const Count& bound, std::mt19937_64& rng)
{
  const unsigned bits = static_cast<unsigned>(boost::multiprecision::msb(bound)) + 65;
  Count r = 0;
  for (unsigned got = 0; got < bits; got += 64) {
    r <<= 64;
    r += rng();
  }
  return r % bound;
}

} // namespace

const GroupTable& VerifyContext::group(const std::string& spec)
{
  auto it = groups_.find(spec);
  if (it == groups_.end())
    it = groups_.emplace(spec, std::make_unique<GroupTable>(realize(parse_spec(spec), limits_)))
           .first;
  return *it->second;
}

Count VerifyContext::series_count(const std::string& spec)
{
  if (auto it = counts_.find(spec); it != counts_.end())
    return it->second;
  Count c = count_series(group(spec), limits_).value;
  counts_.emplace(spec, c);
  return c;
}

std::vector<std::string> VerifyContext::roster(std::uint64_t max_order) const
{
  std::vector<std::string> out;
  for (const auto& text : standard_roster()) {
    const auto spec = parse_spec(text);
    if (spec_order(spec) <= max_order && spec_order(spec) <= limits_.element_cap)
      out.push_back(to_string(spec));
  }
  return out;
}

CheckResult check_normal_lattice(VerifyContext& ctx, std::uint64_t max_order)
{
  return timed("normal subgroups match the filtered subgroup lattice", [&](CheckResult& r) {
    for (const auto& spec : ctx.roster(std::min<std::uint64_t>(max_order, ctx.limits().subgroup_cap))) {
      const auto& g = ctx.group(spec);
      std::set<ElementSet> filtered;
      for (const auto& s : all_subgroups(g, ctx.limits()))
        if (is_normal(g, s))
          filtered.insert(s.members());
      const auto normal = normal_subgroups(g, ctx.limits());
      ++r.cases;
      if (member_sets(normal) != filtered || normal.size() != filtered.size())
        fail(r, spec + ": " + std::to_string(normal.size()) + " normal subgroups by class closure, " +
                  std::to_string(filtered.size()) + " by filtering");
    }
  });
}

CheckResult check_maximal_normal_routes(VerifyContext& ctx, std::uint64_t max_order)
{
  return timed("maximal normal subgroups agree across both routes", [&](CheckResult& r) {
    for (const auto& spec : ctx.roster(max_order)) {
      const auto& g = ctx.group(spec);
      if (g.order() < 2)
        continue;
      ++r.cases;
      const auto by_lattice = member_list(maximal_normal_subgroups_by_lattice(g, ctx.limits()));
      const auto dispatched = member_list(maximal_normal_subgroups(g, ctx.limits()));
      if (by_lattice != dispatched)
        fail(r, spec + ": " + std::to_string(dispatched.size()) + " maximal normal subgroups, " +
                  std::to_string(by_lattice.size()) + " by the lattice scan");
      if (is_solvable(g) && member_list(prime_index_normal_subgroups(g)) != by_lattice)
        fail(r, spec + ": prime-index normal subgroups differ from the lattice scan");
      const auto normal = normal_subgroups(g, ctx.limits());
      for (const auto& m : by_lattice) {
        const auto sub = Subgroup::unchecked(g, m);
        if (!is_normal(g, sub) || sub.is_whole())
          fail(r, spec + ": a maximal normal subgroup is not proper and normal");
        for (const auto& n : normal)
          if (!n.is_whole() && m != n.members() && m.is_subset_of(n.members()))
            fail(r, spec + ": a maximal normal subgroup lies in a larger proper normal subgroup");
      }
    }
  });
}

CheckResult check_abelian_counts(VerifyContext& ctx, std::uint64_t max_order)
{
  return timed("abelian series counts match the formulas", [&](CheckResult& r) {
    const auto cap = std::min<std::uint64_t>(max_order, ctx.limits().element_cap);
    for (const auto& spec : abelian_specs_up_to(cap)) {
      const auto text = to_string(spec);
      const auto types = sylow_types(spec);
      const auto f = order_factorization(types);
      const Count brute = ctx.series_count(text);
      std::vector<Count> t;
      for (const auto& [p, exps] : types)
        t.push_back(ctx.series_count(to_string(abelian_spec({{p, exps}}))));
      ++r.cases;
      const Count by_sylow = count_abelian(f, t);
      if (by_sylow != brute)
        fail(r, text + ": brute force " + brute.str() + ", Sylow product formula " + by_sylow.str());
      if (all_elementary(types)) {
        if (count_abelian_elem_sylow(f) != brute)
          fail(r, text + ": brute force " + brute.str() + ", elementary Sylow formula " +
                    count_abelian_elem_sylow(f).str());
        std::size_t i = 0;
        for (const auto& [p, exps] : types)
          if (count_elem_abelian(p, static_cast<unsigned>(exps.size())) != t[i++])
            fail(r, text + ": Sylow " + std::to_string(p) + "-subgroup count differs from the product form");
      }
      if (all_cyclic(types) && count_cyclic(f) != brute)
        fail(r, text + ": brute force " + brute.str() + ", multinomial " + count_cyclic(f).str());
    }
  });
}

CheckResult check_cyclic_counts(VerifyContext& ctx, std::uint64_t max_n, std::uint64_t brute_max)
{
  return timed("cyclic counts: divisor chains, arrangements and brute force", [&](CheckResult& r) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      const auto f = factorize(n);
      const Count expected = count_cyclic(f);
      ++r.cases;
      if (count_divisor_chains(n) != expected)
        fail(r, "Z" + std::to_string(n) + ": divisor-chain DP " + count_divisor_chains(n).str() +
                  ", multinomial " + expected.str());
      const auto chains = divisor_chains(n);
      const std::set<std::vector<std::uint64_t>> distinct(chains.begin(), chains.end());
      if (chains.size() != expected || distinct.size() != chains.size())
        fail(r, "Z" + std::to_string(n) + ": prime arrangements do not give distinct chains");
      for (const auto& c : chains) {
        for (std::size_t i = 0; i + 1 < c.size(); ++i)
          if (c[i + 1] % c[i] != 0 || !is_prime(c[i + 1] / c[i]))
            fail(r, "Z" + std::to_string(n) + ": arrangement gives a non-prime step");
        if (c.back() != n)
          fail(r, "Z" + std::to_string(n) + ": arrangement does not end at n");
      }
      if (n <= brute_max && n <= ctx.limits().element_cap) {
        const Count brute = ctx.series_count("Z" + std::to_string(n));
        if (brute != expected)
          fail(r, "Z" + std::to_string(n) + ": brute force " + brute.str() + ", multinomial " +
                    expected.str());
      }
    }
  });
}

CheckResult check_formula_identities(std::uint64_t max_n)
{
  return timed("formula identities", [&](CheckResult& r) {
    for (std::uint64_t n = 1; n <= max_n; ++n) {
      const auto f = factorize(n);
      std::vector<Count> elementary, ones;
      for (const auto& pp : f.pairs()) {
        elementary.push_back(count_elem_abelian(pp.prime, pp.exponent));
        ones.push_back(1);
      }
      ++r.cases;
      if (count_abelian_elem_sylow(f) != count_abelian(f, elementary))
        fail(r, std::to_string(n) + ": elementary Sylow formula differs from the Sylow product");
      if (count_cyclic(f) != count_abelian(f, ones))
        fail(r, std::to_string(n) + ": multinomial differs from the Sylow product with t = 1");
    }
    for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
      for (unsigned k = 1; k < 12; ++k) {
        ++r.cases;
        if (count_elem_abelian(p, k + 1) <= count_elem_abelian(p, k))
          fail(r, "elementary count not increasing at p=" + std::to_string(p) + " k=" + std::to_string(k));
      }
    }
  });
}

CheckResult check_maximal_additivity(VerifyContext& ctx, std::uint64_t max_order)
{
  return timed("maximal subgroup counts add over coprime products", [&](CheckResult& r) {
    const auto cap = std::min<std::uint64_t>(max_order, ctx.limits().subgroup_cap);
    const auto groups = ctx.roster(cap);
    std::map<std::string, Count> m;
    auto maximal = [&](const std::string& spec) {
      auto it = m.find(spec);
      if (it == m.end())
        it = m.emplace(spec, maximal_subgroups_count(ctx.group(spec), ctx.limits())).first;
      return it->second;
    };
    for (std::size_t i = 0; i < groups.size(); ++i) {
      for (std::size_t j = i + 1; j < groups.size(); ++j) {
        const auto a = ctx.group(groups[i]).order(), b = ctx.group(groups[j]).order();
        if (a < 2 || b < 2 || std::gcd(a, b) != 1 || a * b > cap)
          continue;
        const auto product = to_string(parse_spec(groups[i] + "x" + groups[j]));
        ++r.cases;
        const Count lhs = maximal(product), rhs = maximal(groups[i]) + maximal(groups[j]);
        if (lhs != rhs)
          fail(r, product + ": " + lhs.str() + " maximal subgroups, factors give " + rhs.str());
      }
    }
  });
}

CheckResult check_maximal_formula(VerifyContext& ctx, std::uint64_t max_order)
{
  return timed("maximal subgroup counts match the closed form", [&](CheckResult& r) {
    const auto cap = std::min<std::uint64_t>(max_order, ctx.limits().subgroup_cap);
    for (const auto& spec : abelian_specs_up_to(cap)) {
      const auto types = sylow_types(spec);
      if (!all_elementary(types))
        continue;
      const auto text = to_string(spec);
      ++r.cases;
      const Count brute = maximal_subgroups_count(ctx.group(text), ctx.limits());
      const Count formula = maximal_subgroup_count_formula(order_factorization(types));
      if (brute != formula)
        fail(r, text + ": brute force " + brute.str() + ", formula " + formula.str());
    }
  });
}

CheckResult check_simple_powers(VerifyContext& ctx, std::uint64_t max_order)
{
  return timed("powers of A5: 2^k normal and k maximal normal subgroups", [&](CheckResult& r) {
    std::string spec = "A5";
    for (unsigned k = 1; k <= 3; ++k, spec += "xA5") {
      const auto order = spec_order(parse_spec(spec));
      if (order > max_order || order > ctx.limits().element_cap) {
        r.findings.push_back("A5^" + std::to_string(k) + " (order " + order.str() +
                             ") skipped: above the order cap");
        continue;
      }
      const auto& g = ctx.group(spec);
      ++r.cases;
      const auto normal = normal_subgroups(g, ctx.limits()).size();
      const auto maximal = maximal_normal_subgroups(g, ctx.limits()).size();
      if (normal != (std::size_t{1} << k) || maximal != k)
        fail(r, spec + ": " + std::to_string(normal) + " normal, " + std::to_string(maximal) +
                  " maximal normal subgroups");
    }
  });
}

CheckResult check_catalog_bound(VerifyContext& ctx, std::uint64_t n)
{
  return timed("catalog series counts stay within the bound", [&](CheckResult& r) {
    if (n < 4) {
      r.findings.push_back("skipped: the bound needs n >= 4");
      return;
    }
    const Count limit = bound(n);
    const std::uint64_t attainer = std::uint64_t{1} << floor_log(2, n);
    // abelian roster entries are folded into their Ab(...) form so each type appears once
    std::set<std::string> specs;
    for (const auto& s : ctx.roster(n)) {
      const auto parsed = parse_spec(s);
      specs.insert(is_abelian_spec(parsed) ? to_string(abelian_spec(sylow_types(parsed))) : s);
    }
    for (const auto& s : abelian_specs_up_to(std::min<std::uint64_t>(n, ctx.limits().element_cap)))
      specs.insert(to_string(s));
    std::vector<std::string> equal;
    for (const auto& spec : specs) {
      const auto parsed = parse_spec(spec);
      ++r.cases;
      const Count c = ctx.series_count(spec);
      if (c > limit) {
        r.findings.push_back(spec + " has " + c.str() + " composition series, above the bound " +
                             limit.str());
        if (is_abelian_spec(parsed))
          fail(r, spec + ": abelian group above the bound");
      } else if (c == limit) {
        equal.push_back(spec);
        const auto types = sylow_types(parsed);
        const bool expected = spec_order(parsed) == attainer && all_elementary(types) &&
                              types.size() == 1 && types.begin()->first == 2;
        if (!expected)
          fail(r, spec + " attains the bound but is not the elementary abelian group of order " +
                    std::to_string(attainer));
      }
    }
    if (equal.size() != 1)
      fail(r, std::to_string(equal.size()) + " groups attain the bound " + limit.str() +
                ", expected exactly one");
    else
      r.findings.push_back("equality only at " + equal.front());
  });
}

CheckResult check_chains(VerifyContext& ctx, std::uint64_t max_order)
{
  return timed("composition chains are valid with constant factor orders", [&](CheckResult& r) {
    std::mt19937_64 rng(0x5eed);
    for (const auto& spec : ctx.roster(max_order)) {
      const auto& g = ctx.group(spec);
      const Count total = ctx.series_count(spec);
      std::vector<CompositionChain> chains;
      if (total <= full_enumeration_limit) {
        chains = enumerate_series(g, std::nullopt, ctx.limits());
        if (chains.size() != total)
          fail(r, spec + ": enumerated " + std::to_string(chains.size()) + " chains, counted " +
                    total.str());
      } else {
        SeriesCounter counter(g, ctx.limits());
        for (std::size_t i = 0; i < sampled_chains_per_group; ++i)
          chains.push_back(nth_series(counter, random_below(total, rng)));
      }
      std::optional<std::vector<std::size_t>> factors;
      for (const auto& c : chains) {
        ++r.cases;
        if (auto err = validate_chain(g, c))
          fail(r, spec + ": " + *err);
        const auto f = composition_factor_orders(c);
        if (!factors)
          factors = f;
        else if (*factors != f)
          fail(r, spec + ": factor orders " + join(f) + " differ from " + join(*factors));
      }
    }
  });
}

CheckResult check_random_chains(VerifyContext& ctx, std::size_t samples, std::uint64_t max_order,
                                std::uint64_t seed)
{
  return timed("randomly drawn composition chains are valid", [&](CheckResult& r) {
    const auto groups = ctx.roster(max_order);
    if (groups.empty()) {
      fail(r, "no roster group below the order cap");
      return;
    }
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<std::size_t> pick(0, groups.size() - 1);
    std::map<std::string, std::unique_ptr<SeriesCounter>> counters;
    std::map<std::string, std::vector<std::size_t>> factors;
    for (std::size_t i = 0; i < samples; ++i) {
      const auto& spec = groups[pick(rng)];
      auto& counter = counters[spec];
      if (!counter)
        counter = std::make_unique<SeriesCounter>(ctx.group(spec), ctx.limits());
      const Count total = counter->count_whole();
      const auto chain = nth_series(*counter, random_below(total, rng));
      ++r.cases;
      if (auto err = validate_chain(counter->group(), chain))
        fail(r, spec + ": " + *err);
      const auto f = composition_factor_orders(chain);
      auto [it, fresh] = factors.emplace(spec, f);
      if (!fresh && it->second != f)
        fail(r, spec + ": factor orders " + join(f) + " differ from " + join(it->second));
    }
    r.findings.push_back(std::to_string(counters.size()) + " of " + std::to_string(groups.size()) +
                         " groups sampled");
  });
}

std::vector<CheckResult> run_verification(std::uint64_t order_cap, const Limits& limits)
{
  VerifyContext ctx(limits);
  const std::uint64_t small = std::min<std::uint64_t>(order_cap, 128);
  std::vector<CheckResult> out;
  out.push_back(check_formula_identities(10'000));
  out.push_back(check_cyclic_counts(ctx, 1000, order_cap));
  out.push_back(check_normal_lattice(ctx, order_cap));
  out.push_back(check_maximal_normal_routes(ctx, order_cap));
  out.push_back(check_abelian_counts(ctx, order_cap));
  out.push_back(check_maximal_formula(ctx, order_cap));
  out.push_back(check_maximal_additivity(ctx, order_cap));
  out.push_back(check_simple_powers(ctx, order_cap));
  out.push_back(check_catalog_bound(ctx, std::min<std::uint64_t>(order_cap, 256)));
  out.push_back(check_chains(ctx, small));
  return out;
}

nlohmann::json to_json(const CheckResult& check)
{
  return {{"name", check.name},       {"passed", check.passed},
          {"cases", check.cases},     {"detail", check.detail},
          {"findings", check.findings}, {"elapsed_ms", check.elapsed_ms}};
}

} // namespace compseries
