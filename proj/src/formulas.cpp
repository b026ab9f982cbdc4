#include "compseries/formulas.hpp"

#include <numeric>
#include <sstream>
#include <stdexcept>

namespace compseries {

namespace {

void exact_divide(Count& value, const Count& divisor, const char* where)
{
  Count q, r;
  boost::multiprecision::divide_qr(value, divisor, q, r);
  if (r != 0)
    throw std::logic_error(std::string(where) + ": division is not exact");
  value = std::move(q);
}

// sums of exponents stay small for every order that fits in 64 bits
constexpr unsigned factorial_table_size = 256;

const std::vector<Count>& factorial_table()
{
  static const std::vector<Count> table = [] {
    std::vector<Count> t(factorial_table_size);
    t[0] = 1;
    for (unsigned i = 1; i < factorial_table_size; ++i)
      t[i] = t[i - 1] * i;
    return t;
  }();
  return table;
}

// prod_{i=1..k} (p^i - 1)/(p - 1) for a p already known to be prime
Count elem_abelian_product(std::uint64_t p, unsigned k)
{
  Count value = 1;
  Count pk = 1;
  const Count denominator = p - 1;
  for (unsigned i = 1; i <= k; ++i) {
    pk *= p;
    Count term = pk - 1;
    exact_divide(term, denominator, "count_elem_abelian");
    value *= term;
  }
  return value;
}

} // namespace

Factorization::Factorization(std::vector<PrimePower> pairs) : pairs_(std::move(pairs))
{
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (!is_prime(pairs_[i].prime))
      throw std::domain_error("factorization: " + std::to_string(pairs_[i].prime) + " is not prime");
    if (pairs_[i].exponent == 0)
      throw std::domain_error("factorization: exponents must be positive");
    if (i > 0 && pairs_[i - 1].prime >= pairs_[i].prime)
      throw std::domain_error("factorization: primes must be strictly increasing");
  }
}

Count Factorization::value() const
{
  Count v = 1;
  for (const auto& pp : pairs_)
    v *= ipow(pp.prime, pp.exponent);
  return v;
}

std::vector<unsigned> Factorization::exponents() const
{
  std::vector<unsigned> e;
  e.reserve(pairs_.size());
  for (const auto& pp : pairs_)
    e.push_back(pp.exponent);
  return e;
}

unsigned Factorization::total_exponent() const
{
  unsigned s = 0;
  for (const auto& pp : pairs_)
    s += pp.exponent;
  return s;
}

std::string Factorization::to_string() const
{
  if (pairs_.empty())
    return "1";
  std::ostringstream out;
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    if (i)
      out << '*';
    out << pairs_[i].prime;
    if (pairs_[i].exponent != 1)
      out << '^' << pairs_[i].exponent;
  }
  return out.str();
}

bool is_prime(std::uint64_t n)
{
  if (n < 2)
    return false;
  for (std::uint64_t d = 2; d <= n / d; ++d) {
    if (n % d == 0)
      return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n)
{
  if (n == 0)
    throw std::domain_error("factorize: n must be positive");
  std::vector<PrimePower> pairs;
  for (std::uint64_t p = 2; p <= n / p; ++p) {
    if (n % p != 0)
      continue;
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    pairs.push_back({p, e});
  }
  if (n > 1)
    pairs.push_back({n, 1});
  return Factorization(std::move(pairs));
}

PrimeSieve::PrimeSieve(std::uint32_t limit) : spf_(static_cast<std::size_t>(limit) + 1, 0)
{
  for (std::uint32_t i = 2; i <= limit; ++i) {
    if (spf_[i] != 0)
      continue;
    for (std::uint64_t j = i; j <= limit; j += i) {
      if (spf_[j] == 0)
        spf_[j] = i;
    }
  }
}

Factorization PrimeSieve::factorize(std::uint32_t n) const
{
  if (n == 0 || n > limit())
    throw std::domain_error("sieve factorize: " + std::to_string(n) + " outside 1.." +
                            std::to_string(limit()));
  std::vector<PrimePower> pairs;
  while (n > 1) {
    const std::uint32_t p = spf_[n];
    unsigned e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    pairs.push_back({p, e});
  }
  // increasing and prime by construction
  return Factorization(std::move(pairs), Factorization::trusted_tag{});
}

std::vector<std::uint32_t> PrimeSieve::primes() const
{
  std::vector<std::uint32_t> out;
  for (std::uint32_t i = 2; i < spf_.size(); ++i) {
    if (spf_[i] == i)
      out.push_back(i);
  }
  return out;
}

Count factorial(unsigned n)
{
  const auto& table = factorial_table();
  if (n < table.size())
    return table[n];
  Count f = table.back();
  for (unsigned i = static_cast<unsigned>(table.size()); i <= n; ++i)
    f *= i;
  return f;
}

Count ipow(std::uint64_t p, unsigned e)
{
  Count base = p;
  return boost::multiprecision::pow(base, e);
}

Count multinomial(std::span<const unsigned> exponents)
{
  const unsigned total = std::accumulate(exponents.begin(), exponents.end(), 0u);
  Count value = factorial(total);
  for (auto e : exponents)
    exact_divide(value, factorial(e), "multinomial");
  return value;
}

Count count_cyclic(const Factorization& n)
{
  const auto e = n.exponents();
  return multinomial(e);
}

Count count_elem_abelian(std::uint64_t p, unsigned k)
{
  if (!is_prime(p))
    throw std::domain_error("count_elem_abelian: " + std::to_string(p) + " is not prime");
  return elem_abelian_product(p, k);
}

Count count_abelian(const Factorization& n, std::span<const Count> sylow_counts)
{
  if (sylow_counts.size() != n.size())
    throw std::domain_error("count_abelian: expected " + std::to_string(n.size()) +
                            " Sylow counts, got " + std::to_string(sylow_counts.size()));
  Count value = count_cyclic(n);
  for (const auto& t : sylow_counts) {
    if (t < 1)
      throw std::domain_error("count_abelian: Sylow series counts must be at least 1");
    value *= t;
  }
  return value;
}

Count count_abelian_elem_sylow(const Factorization& n)
{
  Count value = count_cyclic(n);
  for (const auto& pp : n.pairs())
    value *= elem_abelian_product(pp.prime, pp.exponent);
  return value;
}

Count maximal_subgroup_count_formula(const Factorization& n)
{
  Count total = 0;
  for (const auto& pp : n.pairs()) {
    Count term = ipow(pp.prime, pp.exponent) - 1;
    exact_divide(term, Count(pp.prime - 1), "maximal_subgroup_count_formula");
    total += term;
  }
  return total;
}

} // namespace compseries
