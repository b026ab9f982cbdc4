#ifndef COMPSERIES_LATTICE_HPP
#define COMPSERIES_LATTICE_HPP

#include <unordered_map>
#include <vector>

#include "group.hpp"

namespace compseries {

/// Deduplicated collection of subgroups of one parent, in insertion order.
class SubgroupSet {
public:
  explicit SubgroupSet(const GroupTable& parent) : parent_(&parent) {}

  /// Adds the subgroup unless its member set is already present.
  bool insert(Subgroup s);
  bool contains(const ElementSet& members) const { return index_.count(members) != 0; }

  const GroupTable& parent() const { return *parent_; }
  const std::vector<Subgroup>& items() const { return items_; }
  std::size_t size() const { return items_.size(); }
  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }
  const Subgroup& operator[](std::size_t i) const { return items_[i]; }

  /// Sorts the items with members_less.
  void sort();

private:
  const GroupTable* parent_;
  std::vector<Subgroup> items_;
  std::unordered_map<ElementSet, std::size_t> index_;
};

/// Every subgroup, by breadth-first extension from the trivial subgroup.
/// Throws capacity_error above limits.subgroup_cap.
SubgroupSet all_subgroups(const GroupTable& group, const Limits& limits = {});

/// Every normal subgroup, by closing the normal closures of the conjugacy
/// classes under products. Throws capacity_error above limits.element_cap.
SubgroupSet normal_subgroups(const GroupTable& group, const Limits& limits = {});

/// Proper normal subgroups that are maximal among proper normal subgroups,
/// sorted with members_less. Solvable groups go through their abelian
/// quotients; other groups through the full normal-subgroup lattice.
/// Throws std::domain_error for the trivial group.
SubgroupSet maximal_normal_subgroups(const GroupTable& group, const Limits& limits = {});

/// Maximal normal subgroups read off the normal-subgroup lattice by a
/// pairwise inclusion scan. Works for every group; sorted with members_less.
SubgroupSet maximal_normal_subgroups_by_lattice(const GroupTable& group, const Limits& limits = {});

/// Normal subgroups of prime index, found as hyperplanes of the quotients
/// G / (G' G^p). Sorted with members_less.
SubgroupSet prime_index_normal_subgroups(const GroupTable& group);

/// Number of maximal proper subgroups (normal or not).
Count maximal_subgroups_count(const GroupTable& group, const Limits& limits = {});

/// Commutator subgroup of a subgroup of the table.
Subgroup derived_subgroup(const GroupTable& group, const Subgroup& subgroup);

bool is_solvable(const GroupTable& group);

} // namespace compseries

#endif // COMPSERIES_LATTICE_HPP
