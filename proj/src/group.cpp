#include "compseries/group.hpp"

#include <algorithm>
#include <random>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace compseries {

namespace {

constexpr std::size_t full_associativity_limit = 512;
constexpr std::size_t max_representable_order = 65536;

std::string cycle_notation(const Permutation& perm)
{
  std::ostringstream out;
  std::vector<bool> seen(perm.size(), false);
  for (std::size_t start = 0; start < perm.size(); ++start) {
    if (seen[start] || perm[start] == start)
      continue;
    out << '(';
    std::size_t x = start;
    bool first = true;
    while (!seen[x]) {
      seen[x] = true;
      if (!first)
        out << ' ';
      out << x;
      first = false;
      x = perm[x];
    }
    out << ')';
  }
  std::string s = out.str();
  return s.empty() ? "()" : s;
}

struct PermutationHash {
  std::size_t operator()(const Permutation& p) const noexcept
  {
    std::size_t seed = p.size();
    for (auto x : p)
      seed ^= x + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
    return seed;
  }
};

} // namespace

// GroupTable

GroupTable::GroupTable(std::size_t order, std::vector<Element> mult,
                       std::vector<std::string> labels)
{
  if (order == 0)
    throw std::domain_error("group table: order must be positive");
  if (order > max_representable_order)
    throw capacity_error("group table: order " + std::to_string(order) +
                         " exceeds the representable maximum 65536");
  if (mult.size() != order * order)
    throw std::domain_error("group table: expected " + std::to_string(order * order) +
                            " entries, got " + std::to_string(mult.size()));
  if (!labels.empty() && labels.size() != order)
    throw std::domain_error("group table: label count does not match order");
  for (auto x : mult) {
    if (x >= order)
      throw std::domain_error("group table: entry out of range");
  }
  order_ = order;
  mult_ = std::move(mult);
  labels_ = std::move(labels);
  // inverses need the identity law; validate() rechecks the rest
  for (std::size_t x = 0; x < order_; ++x) {
    if (mul(identity, x) != x || mul(x, identity) != x)
      throw std::domain_error("group table: index 0 is not an identity");
  }
  compute_inverses();
  validate();
}

GroupTable GroupTable::trusted(std::size_t order, std::vector<Element> mult,
                               std::vector<std::string> labels)
{
  GroupTable g;
  g.order_ = order;
  g.mult_ = std::move(mult);
  g.labels_ = std::move(labels);
  g.compute_inverses();
  return g;
}

void GroupTable::compute_inverses()
{
  inv_.assign(order_, 0);
  for (std::size_t x = 0; x < order_; ++x) {
    auto r = row(static_cast<Element>(x));
    auto it = std::find(r.begin(), r.end(), identity);
    if (it == r.end())
      throw std::domain_error("group table: element " + std::to_string(x) + " has no inverse");
    inv_[x] = static_cast<Element>(it - r.begin());
  }
}

bool GroupTable::is_abelian() const
{
  for (std::size_t a = 0; a < order_; ++a) {
    for (std::size_t b = a + 1; b < order_; ++b) {
      if (mul(a, b) != mul(b, a))
        return false;
    }
  }
  return true;
}

void GroupTable::validate() const
{
  const std::size_t n = order_;
  std::vector<std::uint32_t> stamp(n, 0);
  std::uint32_t round = 0;
  for (std::size_t a = 0; a < n; ++a) {
    ++round;
    for (std::size_t b = 0; b < n; ++b) {
      auto x = mul(a, b);
      if (stamp[x] == round)
        throw std::domain_error("group table: row " + std::to_string(a) + " is not a permutation");
      stamp[x] = round;
    }
  }
  for (std::size_t b = 0; b < n; ++b) {
    ++round;
    for (std::size_t a = 0; a < n; ++a) {
      auto x = mul(a, b);
      if (stamp[x] == round)
        throw std::domain_error("group table: column " + std::to_string(b) + " is not a permutation");
      stamp[x] = round;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (mul(identity, x) != x || mul(x, identity) != x)
      throw std::domain_error("group table: index 0 is not an identity");
    if (mul(x, inv(x)) != identity || mul(inv(x), x) != identity)
      throw std::domain_error("group table: inverse of " + std::to_string(x) + " is wrong");
  }
  auto assoc = [&](std::size_t a, std::size_t b, std::size_t c) {
    if (mul(mul(a, b), c) != mul(a, mul(b, c))) {
      throw std::domain_error("group table: associativity fails for (" + std::to_string(a) + ", " +
                              std::to_string(b) + ", " + std::to_string(c) + ")");
    }
  };
  if (n <= full_associativity_limit) {
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        for (std::size_t c = 0; c < n; ++c)
          assoc(a, b, c);
  } else {
    std::mt19937_64 rng(0x5eed);
    std::uniform_int_distribution<std::size_t> pick(0, n - 1);
    for (std::size_t i = 0; i < 10 * n; ++i)
      assoc(pick(rng), pick(rng), pick(rng));
  }
}

// Subgroup

Subgroup::Subgroup(const GroupTable& parent, ElementSet members)
  : parent_(&parent), members_(std::move(members)), order_(members_.count())
{
  if (members_.size() != parent.order())
    throw std::domain_error("subgroup: member set width does not match parent order");
  if (!members_.test(GroupTable::identity))
    throw std::domain_error("subgroup: identity missing");
  const auto elems = elements();
  for (auto a : elems) {
    if (!members_.test(parent.inv(a)))
      throw std::domain_error("subgroup: not closed under inverses");
    for (auto b : elems) {
      if (!members_.test(parent.mul(a, b)))
        throw std::domain_error("subgroup: not closed under multiplication");
    }
  }
  if (parent.order() % order_ != 0)
    throw std::domain_error("subgroup: order does not divide parent order");
}

Subgroup Subgroup::unchecked(const GroupTable& parent, ElementSet members)
{
  auto order = members.count();
  return Subgroup(&parent, std::move(members), order);
}

Subgroup Subgroup::trivial(const GroupTable& parent)
{
  ElementSet m(parent.order());
  m.set(GroupTable::identity);
  return Subgroup(&parent, std::move(m), 1);
}

Subgroup Subgroup::whole(const GroupTable& parent)
{
  ElementSet m(parent.order());
  m.set();
  return Subgroup(&parent, std::move(m), parent.order());
}

std::vector<Element> Subgroup::elements() const
{
  std::vector<Element> out;
  out.reserve(order_);
  for (auto i = members_.find_first(); i != ElementSet::npos; i = members_.find_next(i))
    out.push_back(static_cast<Element>(i));
  return out;
}

bool members_less(const ElementSet& a, const ElementSet& b)
{
  auto x = a.find_first();
  auto y = b.find_first();
  while (x != ElementSet::npos && y != ElementSet::npos) {
    if (x != y)
      return x < y;
    x = a.find_next(x);
    y = b.find_next(y);
  }
  return x == ElementSet::npos && y != ElementSet::npos;
}

// construction

GroupTable build_from_generators(std::size_t n_points,
                                 const std::vector<Permutation>& generators,
                                 const Limits& limits)
{
  if (n_points == 0)
    throw std::domain_error("build_from_generators: need at least one point");
  for (const auto& g : generators) {
    if (g.size() != n_points)
      throw std::domain_error("build_from_generators: generator has " + std::to_string(g.size()) +
                              " images, expected " + std::to_string(n_points));
    std::vector<bool> hit(n_points, false);
    for (auto x : g) {
      if (x >= n_points || hit[x])
        throw std::domain_error("build_from_generators: generator is not a bijection");
      hit[x] = true;
    }
  }
  const std::size_t cap = std::min(limits.element_cap, max_representable_order);

  Permutation id(n_points);
  for (std::size_t i = 0; i < n_points; ++i)
    id[i] = static_cast<std::uint32_t>(i);

  std::vector<Permutation> elems{id};
  std::unordered_map<Permutation, std::size_t, PermutationHash> index{{id, 0}};
  // right[x][g] = index of elems[x] * generators[g]
  std::vector<std::vector<std::size_t>> right;
  // BFS tree: elems[x] = elems[tree_parent[x]] * generators[tree_gen[x]]
  std::vector<std::size_t> tree_parent{0}, tree_gen{0};

  for (std::size_t x = 0; x < elems.size(); ++x) {
    right.emplace_back(generators.size());
    for (std::size_t g = 0; g < generators.size(); ++g) {
      Permutation prod(n_points);
      for (std::size_t i = 0; i < n_points; ++i)
        prod[i] = generators[g][elems[x][i]];
      auto [it, inserted] = index.try_emplace(prod, elems.size());
      if (inserted) {
        if (elems.size() >= cap)
          throw capacity_error("generated group exceeds the element cap " + std::to_string(cap));
        elems.push_back(std::move(prod));
        tree_parent.push_back(x);
        tree_gen.push_back(g);
      }
      right[x][g] = it->second;
    }
  }

  const std::size_t n = elems.size();
  std::vector<Element> mult(n * n);
  for (std::size_t a = 0; a < n; ++a) {
    mult[a * n] = static_cast<Element>(a);
    for (std::size_t b = 1; b < n; ++b)
      mult[a * n + b] = static_cast<Element>(right[mult[a * n + tree_parent[b]]][tree_gen[b]]);
  }
  std::vector<std::string> labels;
  labels.reserve(n);
  for (const auto& p : elems)
    labels.push_back(cycle_notation(p));
  return GroupTable::trusted(n, std::move(mult), std::move(labels));
}

ElementSet extend_subgroup(const GroupTable& group, const ElementSet& members,
                           std::vector<Element>& generators, Element extra)
{
  ElementSet result = members;
  if (result.test(extra))
    return result;
  generators.push_back(extra);
  std::vector<Element> base;
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i))
    base.push_back(static_cast<Element>(i));
  // result is kept a union of right cosets base*r; closing it under right
  // multiplication by the generators yields <members, extra>
  std::vector<Element> reps{GroupTable::identity};
  for (std::size_t k = 0; k < reps.size(); ++k) {
    for (auto t : generators) {
      auto y = group.mul(reps[k], t);
      if (result.test(y))
        continue;
      for (auto s : base)
        result.set(group.mul(s, y));
      reps.push_back(y);
    }
  }
  return result;
}

namespace {

struct Closure {
  ElementSet members;
  std::vector<Element> generators;
};

Closure close(const GroupTable& group, std::span<const Element> seed)
{
  Closure c{ElementSet(group.order()), {}};
  c.members.set(GroupTable::identity);
  for (auto x : seed) {
    if (x >= group.order())
      throw std::domain_error("seed element " + std::to_string(x) + " out of range");
    if (!c.members.test(x))
      c.members = extend_subgroup(group, c.members, c.generators, x);
  }
  return c;
}

} // namespace

Subgroup generated_subgroup(const GroupTable& group, std::span<const Element> seed)
{
  return Subgroup::unchecked(group, close(group, seed).members);
}

std::vector<Element> greedy_generators(const GroupTable& group, const ElementSet& members)
{
  std::vector<Element> seed;
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i))
    seed.push_back(static_cast<Element>(i));
  return close(group, seed).generators;
}

bool is_normal(const GroupTable& group, const Subgroup& subgroup)
{
  if (&subgroup.parent() != &group)
    throw std::domain_error("is_normal: subgroup belongs to a different table");
  const auto gens = greedy_generators(group, subgroup.members());
  for (std::size_t g = 0; g < group.order(); ++g) {
    const auto gi = group.inv(static_cast<Element>(g));
    for (auto h : gens) {
      if (!subgroup.contains(group.mul(group.mul(static_cast<Element>(g), h), gi)))
        return false;
    }
  }
  return true;
}

bool is_normal_in(const Subgroup& normal, const Subgroup& ambient)
{
  const auto& group = ambient.parent();
  if (&normal.parent() != &group)
    throw std::domain_error("is_normal_in: subgroups belong to different tables");
  if (!normal.is_subgroup_of(ambient))
    return false;
  const auto gens = greedy_generators(group, normal.members());
  const auto outer = greedy_generators(group, ambient.members());
  for (auto g : outer) {
    const auto gi = group.inv(g);
    for (auto h : gens) {
      if (!normal.contains(group.mul(group.mul(g, h), gi)))
        return false;
    }
  }
  return true;
}

GroupTable quotient(const GroupTable& group, const Subgroup& normal, const Subgroup& ambient)
{
  if (&normal.parent() != &group || &ambient.parent() != &group)
    throw std::domain_error("quotient: subgroups must belong to the given table");
  if (!normal.is_subgroup_of(ambient))
    throw std::domain_error("quotient: the normal subgroup is not contained in the ambient subgroup");
  if (!is_normal_in(normal, ambient))
    throw std::domain_error("quotient: the subgroup is not normal in the ambient subgroup");

  constexpr std::size_t unassigned = static_cast<std::size_t>(-1);
  std::vector<std::size_t> coset(group.order(), unassigned);
  std::vector<Element> reps;
  const auto n_elems = normal.elements();
  for (auto h : ambient.elements()) {
    if (coset[h] != unassigned)
      continue;
    for (auto x : n_elems)
      coset[group.mul(h, x)] = reps.size();
    reps.push_back(h);
  }
  const std::size_t k = reps.size();
  std::vector<Element> mult(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j)
      mult[i * k + j] = static_cast<Element>(coset[group.mul(reps[i], reps[j])]);
  return GroupTable::trusted(k, std::move(mult));
}

std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& group)
{
  const auto gens = greedy_generators(group, Subgroup::whole(group).members());
  std::vector<bool> seen(group.order(), false);
  std::vector<std::vector<Element>> classes;
  for (std::size_t x = 0; x < group.order(); ++x) {
    if (seen[x])
      continue;
    std::vector<Element> orbit{static_cast<Element>(x)};
    seen[x] = true;
    for (std::size_t k = 0; k < orbit.size(); ++k) {
      for (auto g : gens) {
        auto y = group.mul(group.mul(g, orbit[k]), group.inv(g));
        if (!seen[y]) {
          seen[y] = true;
          orbit.push_back(y);
        }
      }
    }
    std::sort(orbit.begin(), orbit.end());
    classes.push_back(std::move(orbit));
  }
  return classes;
}

bool is_simple(const GroupTable& group)
{
  if (group.order() == 1)
    throw std::domain_error("is_simple: the trivial group is neither simple nor non-simple");
  // every normal subgroup is a union of classes, so G is simple iff the
  // normal closure of each nonidentity class is all of G
  for (const auto& cls : conjugacy_classes(group)) {
    if (cls.front() == GroupTable::identity)
      continue;
    if (generated_subgroup(group, cls).order() != group.order())
      return false;
  }
  return true;
}

RealizedSubgroup realize_subgroup(const GroupTable& group, const ElementSet& members)
{
  std::vector<Element> to_parent;
  std::vector<Element> to_local(group.order(), 0);
  for (auto i = members.find_first(); i != ElementSet::npos; i = members.find_next(i)) {
    to_local[i] = static_cast<Element>(to_parent.size());
    to_parent.push_back(static_cast<Element>(i));
  }
  const std::size_t k = to_parent.size();
  std::vector<Element> mult(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    auto r = group.row(to_parent[i]);
    for (std::size_t j = 0; j < k; ++j)
      mult[i * k + j] = to_local[r[to_parent[j]]];
  }
  return {GroupTable::trusted(k, std::move(mult)), std::move(to_parent)};
}

} // namespace compseries
