#ifndef COMPSERIES_CATALOG_HPP
#define COMPSERIES_CATALOG_HPP

#include <map>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "group.hpp"

namespace compseries {

struct GroupSpec;

struct Cyclic { std::uint64_t n; };
struct ElemAbelian { std::uint64_t p; unsigned k; };
/// Abelian group by prime: the exponents of its cyclic p-power factors.
struct AbelianType { std::vector<std::pair<std::uint64_t, std::vector<unsigned>>> parts; };
struct Dihedral { std::uint64_t order; };
struct Quaternion {};
struct Symmetric { unsigned n; };
struct Alternating { unsigned n; };
struct DirectProduct { std::vector<GroupSpec> factors; };

/**
 * Expression tree for a catalog group.
 *
 * Text form (whitespace ignored, case-sensitive):
 *   Z<n> | E(<p>,<k>) | Ab(<p>^<e1>[+<e2>...][;<q>^...]) | D<2m> | Q8 | S<n> | A<n>
 * with direct products written as factors joined by 'x'.
 */
struct GroupSpec {
  std::variant<Cyclic, ElemAbelian, AbelianType, Dihedral, Quaternion, Symmetric, Alternating,
               DirectProduct>
    node;
};

/// Throws parse_error on malformed text and std::domain_error on
/// unsupported parameters (S6 and up, non-prime p, ...).
GroupSpec parse_spec(std::string_view text);

/// Canonical text: products flattened and sorted by (order, text), abelian
/// parts sorted by prime with exponents descending.
std::string to_string(const GroupSpec& spec);

Count spec_order(const GroupSpec& spec);

bool is_abelian_spec(const GroupSpec& spec);

/// For an abelian spec: prime -> exponents of the cyclic p-power factors
/// (descending). Throws std::domain_error for non-abelian specs.
std::map<std::uint64_t, std::vector<unsigned>> sylow_types(const GroupSpec& spec);

/// Deterministic Cayley table. Throws capacity_error above limits.element_cap.
GroupTable realize(const GroupSpec& spec, const Limits& limits = {});

/// The abelian group with the given Sylow types as a spec (Z1 when empty).
GroupSpec abelian_spec(const std::map<std::uint64_t, std::vector<unsigned>>& types);

/// Every abelian isomorphism type of order 2..max_order.
std::vector<GroupSpec> abelian_specs_up_to(std::uint64_t max_order);

/// The fixed list of groups used by the verification suites.
std::vector<std::string> standard_roster();

} // namespace compseries

#endif // COMPSERIES_CATALOG_HPP
