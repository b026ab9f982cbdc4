#ifndef COMPSERIES_TYPES_HPP
#define COMPSERIES_TYPES_HPP

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>

#include <boost/dynamic_bitset.hpp>
#include <boost/multiprecision/cpp_int.hpp>

namespace compseries {

/// Index of an element inside a GroupTable. The identity is always 0.
using Element = std::uint16_t;

/// Membership bit set over the elements of one parent table.
using ElementSet = boost::dynamic_bitset<std::uint64_t>;

/// Exact nonnegative integer used for every count.
using Count = boost::multiprecision::cpp_int;

/// Exact rational used by the inequality checkers.
using Rational = boost::multiprecision::cpp_rational;

/// Size limits for the brute-force machinery.
struct Limits {
  /// Largest group order that will be materialized as a Cayley table.
  std::size_t element_cap = 4096;
  /// Largest group order for which the full subgroup lattice is enumerated.
  std::size_t subgroup_cap = 256;
};

/// Raised when an input would exceed one of the configured caps.
class capacity_error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Raised by the group spec parser; carries the offending position.
class parse_error : public std::runtime_error {
public:
  parse_error(const std::string& what, std::size_t position)
    : std::runtime_error(what + " at position " + std::to_string(position)),
      position_(position)
  {}

  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

} // namespace compseries

#endif // COMPSERIES_TYPES_HPP
