#ifndef COMPSERIES_FORMULAS_HPP
#define COMPSERIES_FORMULAS_HPP

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "types.hpp"

namespace compseries {

struct PrimePower {
  std::uint64_t prime;
  unsigned exponent;

  friend bool operator==(const PrimePower&, const PrimePower&) = default;
};

/// n = p_1^a_1 * ... * p_r^a_r with p_1 < ... < p_r and every a_i >= 1.
/// The empty factorization is n = 1.
class Factorization {
public:
  Factorization() = default;

  /// Throws std::domain_error unless the primes are prime and strictly
  /// increasing and the exponents positive.
  explicit Factorization(std::vector<PrimePower> pairs);

  const std::vector<PrimePower>& pairs() const { return pairs_; }
  std::size_t size() const { return pairs_.size(); }
  bool empty() const { return pairs_.empty(); }

  Count value() const;
  std::vector<unsigned> exponents() const;
  unsigned total_exponent() const;

  /// "2^3*3^2*5", or "1" when empty.
  std::string to_string() const;

  friend bool operator==(const Factorization&, const Factorization&) = default;

private:
  friend class PrimeSieve;
  struct trusted_tag {};
  Factorization(std::vector<PrimePower> pairs, trusted_tag) : pairs_(std::move(pairs)) {}

  std::vector<PrimePower> pairs_;
};

bool is_prime(std::uint64_t n);

/// Trial division. factorize(1) is empty.
Factorization factorize(std::uint64_t n);

/// Smallest-prime-factor table for fast repeated factorization.
class PrimeSieve {
public:
  explicit PrimeSieve(std::uint32_t limit);

  std::uint32_t limit() const { return static_cast<std::uint32_t>(spf_.size() - 1); }
  bool is_prime(std::uint32_t n) const { return n >= 2 && spf_[n] == n; }
  Factorization factorize(std::uint32_t n) const;
  std::vector<std::uint32_t> primes() const;

private:
  std::vector<std::uint32_t> spf_;
};

Count factorial(unsigned n);

/// (sum a_i)! / prod a_i!
Count multinomial(std::span<const unsigned> exponents);

/// Composition series of Z_n: the multinomial of the exponents of n.
Count count_cyclic(const Factorization& n);

/// Composition series of (Z_p)^k: prod_{i=1..k} (p^i - 1)/(p - 1).
Count count_elem_abelian(std::uint64_t p, unsigned k);

/// Composition series of an abelian group of order n whose Sylow
/// p_i-subgroup has t_i composition series: (prod t_i) * multinomial.
/// Throws std::domain_error if the lengths differ or some t_i is 0.
Count count_abelian(const Factorization& n, std::span<const Count> sylow_counts);

/// Composition series of the abelian group of order n with elementary
/// abelian Sylow subgroups.
Count count_abelian_elem_sylow(const Factorization& n);

/// Maximal subgroups of that same group: sum (p_i^a_i - 1)/(p_i - 1).
Count maximal_subgroup_count_formula(const Factorization& n);

/// p^e as an exact integer.
Count ipow(std::uint64_t p, unsigned e);

} // namespace compseries

#endif // COMPSERIES_FORMULAS_HPP
