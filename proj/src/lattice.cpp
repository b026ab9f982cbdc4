#include "compseries/lattice.hpp"

#include <algorithm>
#include <stdexcept>

namespace compseries {

bool SubgroupSet::insert(Subgroup s)
{
  if (&s.parent() != parent_)
    throw std::domain_error("subgroup set: subgroup belongs to a different table");
  auto [it, inserted] = index_.try_emplace(s.members(), items_.size());
  if (inserted)
    items_.push_back(std::move(s));
  return inserted;
}

void SubgroupSet::sort()
{
  std::sort(items_.begin(), items_.end(), [](const Subgroup& a, const Subgroup& b) {
    return members_less(a.members(), b.members());
  });
  for (std::size_t i = 0; i < items_.size(); ++i)
    index_[items_[i].members()] = i;
}

namespace {

std::vector<Element> to_elements(const ElementSet& s)
{
  std::vector<Element> out;
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(static_cast<Element>(i));
  return out;
}

Element power(const GroupTable& g, Element x, std::size_t e)
{
  Element result = GroupTable::identity;
  while (e) {
    if (e & 1)
      result = g.mul(result, x);
    x = g.mul(x, x);
    e >>= 1;
  }
  return result;
}

std::vector<std::size_t> prime_divisors(std::size_t n)
{
  std::vector<std::size_t> out;
  for (std::size_t p = 2; p * p <= n; ++p) {
    if (n % p == 0) {
      out.push_back(p);
      while (n % p == 0)
        n /= p;
    }
  }
  if (n > 1)
    out.push_back(n);
  return out;
}

// Closure of `seed` under products and conjugation by `outer`.
ElementSet normal_closure(const GroupTable& g, const std::vector<Element>& outer,
                          std::span<const Element> seed)
{
  ElementSet members(g.order());
  members.set(GroupTable::identity);
  std::vector<Element> gens;
  for (auto x : seed) {
    if (!members.test(x))
      members = extend_subgroup(g, members, gens, x);
  }
  for (std::size_t k = 0; k < gens.size(); ++k) {
    for (auto o : outer) {
      auto y = g.mul(g.mul(o, gens[k]), g.inv(o));
      if (!members.test(y))
        members = extend_subgroup(g, members, gens, y);
    }
  }
  return members;
}

struct LatticeScan {
  std::vector<ElementSet> members;
  std::vector<bool> maximal;
};

LatticeScan scan_lattice(const GroupTable& group, const Limits& limits)
{
  if (group.order() > limits.subgroup_cap)
    throw capacity_error("subgroup enumeration: order " + std::to_string(group.order()) +
                         " exceeds the subgroup-enumeration cap " +
                         std::to_string(limits.subgroup_cap));
  const std::size_t n = group.order();
  LatticeScan out;
  std::vector<std::vector<Element>> gens;
  std::unordered_map<ElementSet, std::size_t> index;

  ElementSet trivial(n);
  trivial.set(GroupTable::identity);
  out.members.push_back(trivial);
  gens.emplace_back();
  index.emplace(trivial, 0);

  for (std::size_t k = 0; k < out.members.size(); ++k) {
    const ElementSet current = out.members[k];
    const std::vector<Element> current_gens = gens[k];
    bool is_maximal = current.count() != n;
    // <S, g> only depends on the double coset SgS
    ElementSet seen = current;
    std::vector<Element> stack;
    for (std::size_t g = 0; g < n; ++g) {
      if (seen.test(g))
        continue;
      seen.set(g);
      stack.assign(1, static_cast<Element>(g));
      while (!stack.empty()) {
        auto y = stack.back();
        stack.pop_back();
        for (auto s : current_gens) {
          for (auto z : {group.mul(s, y), group.mul(y, s)}) {
            if (!seen.test(z)) {
              seen.set(z);
              stack.push_back(z);
            }
          }
        }
      }
      std::vector<Element> next_gens = current_gens;
      ElementSet next = extend_subgroup(group, current, next_gens, static_cast<Element>(g));
      if (next.count() != n)
        is_maximal = false;
      auto [it, inserted] = index.try_emplace(next, out.members.size());
      if (inserted) {
        out.members.push_back(std::move(next));
        gens.push_back(std::move(next_gens));
      }
    }
    out.maximal.push_back(is_maximal);
  }
  return out;
}

} // namespace

SubgroupSet all_subgroups(const GroupTable& group, const Limits& limits)
{
  auto scan = scan_lattice(group, limits);
  SubgroupSet out(group);
  for (auto& m : scan.members)
    out.insert(Subgroup::unchecked(group, std::move(m)));
  return out;
}

Count maximal_subgroups_count(const GroupTable& group, const Limits& limits)
{
  auto scan = scan_lattice(group, limits);
  return Count(std::count(scan.maximal.begin(), scan.maximal.end(), true));
}

SubgroupSet normal_subgroups(const GroupTable& group, const Limits& limits)
{
  if (group.order() > limits.element_cap)
    throw capacity_error("normal subgroup enumeration: order " + std::to_string(group.order()) +
                         " exceeds the element cap " + std::to_string(limits.element_cap));
  const std::size_t n = group.order();

  struct Atom {
    Element rep;
    ElementSet members;
    std::vector<Element> elements;
  };
  std::vector<Atom> atoms;
  {
    std::unordered_map<ElementSet, std::size_t> seen;
    for (const auto& cls : conjugacy_classes(group)) {
      if (cls.front() == GroupTable::identity)
        continue;
      auto closure = generated_subgroup(group, cls).members();
      if (seen.try_emplace(closure, atoms.size()).second)
        atoms.push_back({cls.front(), closure, to_elements(closure)});
    }
  }

  std::vector<ElementSet> found;
  std::unordered_map<ElementSet, std::size_t> index;
  ElementSet trivial(n);
  trivial.set(GroupTable::identity);
  found.push_back(trivial);
  index.emplace(trivial, 0);

  constexpr std::size_t none = static_cast<std::size_t>(-1);
  std::vector<std::size_t> covered_by(n);
  for (std::size_t k = 0; k < found.size(); ++k) {
    const ElementSet current = found[k];
    const auto current_elems = to_elements(current);
    const std::size_t current_order = current_elems.size();
    std::fill(covered_by.begin(), covered_by.end(), none);
    std::vector<std::size_t> joins;  // orders of the products made from `current`
    for (const auto& atom : atoms) {
      if (current.test(atom.rep))
        continue;
      auto j = covered_by[atom.rep];
      if (j != none) {
        // an earlier product is normal and contains atom.rep, hence the atom
        auto meet = (current & atom.members).count();
        if (current_order * atom.elements.size() / meet == joins[j])
          continue;
      }
      ElementSet product = current;
      for (auto a : atom.elements) {
        if (product.test(a))
          continue;
        for (auto x : current_elems)
          product.set(group.mul(x, a));
      }
      const std::size_t id = joins.size();
      joins.push_back(product.count());
      for (auto i = product.find_first(); i != ElementSet::npos; i = product.find_next(i)) {
        if (covered_by[i] == none)
          covered_by[i] = id;
      }
      if (index.try_emplace(product, found.size()).second)
        found.push_back(std::move(product));
    }
  }

  SubgroupSet out(group);
  for (auto& m : found)
    out.insert(Subgroup::unchecked(group, std::move(m)));
  return out;
}

SubgroupSet maximal_normal_subgroups_by_lattice(const GroupTable& group, const Limits& limits)
{
  if (group.order() == 1)
    throw std::domain_error("maximal normal subgroups: the trivial group has none");
  const auto all = normal_subgroups(group, limits);
  std::vector<const Subgroup*> proper;
  for (const auto& s : all) {
    if (!s.is_whole())
      proper.push_back(&s);
  }
  // every proper normal subgroup lies in a maximal one, so scanning by
  // descending order only needs the maximal subgroups found so far
  std::stable_sort(proper.begin(), proper.end(),
                   [](const Subgroup* a, const Subgroup* b) { return a->order() > b->order(); });
  std::vector<const Subgroup*> maximal;
  for (const auto* m : proper) {
    const bool covered = std::any_of(maximal.begin(), maximal.end(), [&](const Subgroup* other) {
      return other->order() > m->order() && m->is_subgroup_of(*other);
    });
    if (!covered)
      maximal.push_back(m);
  }
  SubgroupSet out(group);
  for (const auto* m : maximal)
    out.insert(*m);
  out.sort();
  return out;
}

Subgroup derived_subgroup(const GroupTable& group, const Subgroup& subgroup)
{
  const auto gens = greedy_generators(group, subgroup.members());
  std::vector<Element> commutators;
  for (auto a : gens) {
    for (auto b : gens) {
      commutators.push_back(
        group.mul(group.mul(a, b), group.mul(group.inv(a), group.inv(b))));
    }
  }
  return Subgroup::unchecked(group, normal_closure(group, gens, commutators));
}

bool is_solvable(const GroupTable& group)
{
  Subgroup current = Subgroup::whole(group);
  while (!current.is_trivial()) {
    Subgroup next = derived_subgroup(group, current);
    if (next.order() == current.order())
      return false;
    current = std::move(next);
  }
  return true;
}

SubgroupSet prime_index_normal_subgroups(const GroupTable& group)
{
  const std::size_t n = group.order();
  SubgroupSet out(group);
  if (n == 1)
    return out;
  const auto whole = Subgroup::whole(group);
  const auto derived = derived_subgroup(group, whole);
  const auto derived_elems = derived.elements();

  for (auto p : prime_divisors(n / derived.order())) {
    // base = G' G^p, so G/base is elementary abelian of exponent p
    std::vector<Element> seed = derived_elems;
    for (std::size_t x = 0; x < n; ++x)
      seed.push_back(power(group, static_cast<Element>(x), p));
    ElementSet span(n);
    span.set(GroupTable::identity);
    std::vector<Element> span_gens;
    for (auto x : seed) {
      if (!span.test(x))
        span = extend_subgroup(group, span, span_gens, x);
    }
    const auto base_elems = to_elements(span);

    std::vector<Element> basis;
    for (std::size_t x = 0; x < n; ++x) {
      if (!span.test(x)) {
        basis.push_back(static_cast<Element>(x));
        span = extend_subgroup(group, span, span_gens, static_cast<Element>(x));
      }
    }
    const std::size_t rank = basis.size();
    const std::size_t cosets = n / base_elems.size();

    // rep[c] = basis[0]^c0 * ... * basis[r-1]^c(r-1) for the base-p digits of c
    std::vector<Element> rep(cosets, GroupTable::identity);
    std::size_t stride = 1;
    for (auto b : basis) {
      for (std::size_t c = 1; c < p; ++c)
        for (std::size_t j = 0; j < stride; ++j)
          rep[c * stride + j] = group.mul(rep[(c - 1) * stride + j], b);
      stride *= p;
    }
    std::vector<std::size_t> coord(n);
    for (std::size_t c = 0; c < cosets; ++c)
      for (auto b : base_elems)
        coord[group.mul(rep[c], b)] = c;

    // low[c]: position of the lowest nonzero digit of c, step[c]: c minus that digit's place value
    std::vector<std::size_t> low(cosets), step(cosets), lead_digit(cosets);
    for (std::size_t c = 1; c < cosets; ++c) {
      std::size_t v = c, place = 1, i = 0;
      while (v % p == 0) {
        v /= p;
        place *= p;
        ++i;
      }
      low[c] = i;
      step[c] = c - place;
      lead_digit[c] = v % p;
    }

    std::vector<std::size_t> value(cosets);
    std::vector<std::size_t> fd(rank);
    for (std::size_t f = 1; f < cosets; ++f) {
      // one functional per line: leading (lowest) nonzero digit equal to 1
      if (lead_digit[f] != 1)
        continue;
      for (std::size_t i = 0, v = f; i < rank; ++i, v /= p)
        fd[i] = v % p;
      value[0] = 0;
      for (std::size_t c = 1; c < cosets; ++c)
        value[c] = (value[step[c]] + fd[low[c]]) % p;
      ElementSet kernel(n);
      for (std::size_t x = 0; x < n; ++x) {
        if (value[coord[x]] == 0)
          kernel.set(x);
      }
      out.insert(Subgroup::unchecked(group, std::move(kernel)));
    }
  }
  out.sort();
  return out;
}

SubgroupSet maximal_normal_subgroups(const GroupTable& group, const Limits& limits)
{
  if (group.order() == 1)
    throw std::domain_error("maximal normal subgroups: the trivial group has none");
  if (group.order() > limits.element_cap)
    throw capacity_error("maximal normal subgroups: order " + std::to_string(group.order()) +
                         " exceeds the element cap " + std::to_string(limits.element_cap));
  if (is_solvable(group))
    return prime_index_normal_subgroups(group);
  return maximal_normal_subgroups_by_lattice(group, limits);
}

} // namespace compseries
