#ifndef COMPSERIES_GROUP_HPP
#define COMPSERIES_GROUP_HPP

#include <span>
#include <string>
#include <vector>

#include "types.hpp"

namespace compseries {

/**
 * A concrete finite group given by its full multiplication table.
 *
 * Elements are the indices 0..order()-1 and index 0 is the identity.
 * The table is immutable once constructed, so a GroupTable may be shared
 * freely between threads.
 */
class GroupTable {
public:
  static constexpr Element identity = 0;

  /// Builds a table from a row-major product table and validates every
  /// group axiom (associativity is sampled for orders above 512).
  GroupTable(std::size_t order, std::vector<Element> mult,
             std::vector<std::string> labels = {});

  /// Builds a table that is a group by construction (derived from another
  /// validated table or from a permutation closure). Only inverses are
  /// computed; no axiom is rechecked.
  static GroupTable trusted(std::size_t order, std::vector<Element> mult,
                            std::vector<std::string> labels = {});

  std::size_t order() const { return order_; }

  Element mul(Element a, Element b) const
  { return mult_[static_cast<std::size_t>(a) * order_ + b]; }

  Element inv(Element a) const { return inv_[a]; }

  std::span<const Element> row(Element a) const
  { return {mult_.data() + static_cast<std::size_t>(a) * order_, order_}; }

  const std::vector<std::string>& labels() const { return labels_; }

  bool is_abelian() const;

  /// Rechecks the Latin-square, identity, inverse and associativity laws.
  /// Throws std::domain_error naming the first violated law.
  void validate() const;

private:
  GroupTable() = default;
  void compute_inverses();

  std::size_t order_ = 0;
  std::vector<Element> mult_;
  std::vector<Element> inv_;
  std::vector<std::string> labels_;
};

/// A subgroup of a parent table, stored as a membership bit set.
///
/// The subgroup does not own its parent; the parent table must outlive it.
class Subgroup {
public:
  /// Checks closure under multiplication and inverses.
  Subgroup(const GroupTable& parent, ElementSet members);

  /// Skips the closure check (callers that build members by closure).
  static Subgroup unchecked(const GroupTable& parent, ElementSet members);

  static Subgroup trivial(const GroupTable& parent);
  static Subgroup whole(const GroupTable& parent);

  const GroupTable& parent() const { return *parent_; }
  const ElementSet& members() const { return members_; }
  std::size_t order() const { return order_; }
  bool contains(Element x) const { return members_.test(x); }
  bool is_trivial() const { return order_ == 1; }
  bool is_whole() const { return order_ == parent_->order(); }

  /// Members in ascending index order.
  std::vector<Element> elements() const;

  bool is_subgroup_of(const Subgroup& other) const
  { return members_.is_subset_of(other.members_); }

  friend bool operator==(const Subgroup& a, const Subgroup& b)
  { return a.parent_ == b.parent_ && a.members_ == b.members_; }

private:
  Subgroup(const GroupTable* parent, ElementSet members, std::size_t order)
    : parent_(parent), members_(std::move(members)), order_(order)
  {}

  const GroupTable* parent_;
  ElementSet members_;
  std::size_t order_;
};

/// Orders member sets by lexicographic comparison of their ascending member
/// lists. This is the deterministic child order used everywhere.
bool members_less(const ElementSet& a, const ElementSet& b);

/// Permutation of 0..n-1 given by its image list.
using Permutation = std::vector<std::uint32_t>;

/**
 * Closes a set of permutations under composition.
 *
 * Products compose left to right: (a*b)(x) = b(a(x)). The identity gets
 * index 0 and the other elements are numbered in breadth-first discovery
 * order, so the result is a deterministic function of the generator list.
 * Throws capacity_error if the closure exceeds limits.element_cap.
 */
GroupTable build_from_generators(std::size_t n_points,
                                 const std::vector<Permutation>& generators,
                                 const Limits& limits = {});

/// Smallest subgroup containing the seed.
Subgroup generated_subgroup(const GroupTable& group, std::span<const Element> seed);

/// Greedy generating set of a subgroup: each generator lies outside the
/// span of the previous ones.
std::vector<Element> greedy_generators(const GroupTable& group, const ElementSet& members);

/// Members of <members, extra> given a generating set of `members`.
/// Appends `extra` to `generators`.
ElementSet extend_subgroup(const GroupTable& group, const ElementSet& members,
                           std::vector<Element>& generators, Element extra);

/// True iff g*h*g^-1 lies in h's subgroup for every g of the parent.
bool is_normal(const GroupTable& group, const Subgroup& subgroup);

/// True iff `normal` is contained in and normalized by `ambient`.
bool is_normal_in(const Subgroup& normal, const Subgroup& ambient);

/// Factor group ambient/normal with cosets numbered by smallest member.
GroupTable quotient(const GroupTable& group, const Subgroup& normal, const Subgroup& ambient);

/// True iff the group has no normal subgroups besides {e} and itself.
/// Throws std::domain_error for the trivial group.
bool is_simple(const GroupTable& group);

/// Conjugacy classes ordered by smallest member; each class is sorted.
std::vector<std::vector<Element>> conjugacy_classes(const GroupTable& group);

/// A subgroup re-encoded as a standalone table.
struct RealizedSubgroup {
  GroupTable table;
  /// Parent index of each local element (ascending, so local 0 is e).
  std::vector<Element> to_parent;
};

RealizedSubgroup realize_subgroup(const GroupTable& group, const ElementSet& members);

} // namespace compseries

#endif // COMPSERIES_GROUP_HPP
