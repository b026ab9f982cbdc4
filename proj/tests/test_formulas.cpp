#include <doctest.h>

#include "compseries/formulas.hpp"
#include "oracles.hpp"

using namespace compseries;

namespace {

Factorization fz(std::vector<PrimePower> pairs) { return Factorization(std::move(pairs)); }

Count mult(std::vector<unsigned> e) { return multinomial(e); }

} // namespace

TEST_SUITE("formulas") {

TEST_CASE("multinomial: examples")
{
  CHECK(mult({3, 2, 1}) == 60);
  CHECK(mult({5}) == 1);
  CHECK(mult({1, 1, 1}) == 6);
  CHECK(mult({}) == 1);
  CHECK(mult({0, 2}) == 1);
  CHECK(mult({2, 2}) == 6);
}

TEST_CASE("multinomial agrees with counting arrangements")
{
  for (unsigned a = 0; a <= 6; ++a)
    for (unsigned b = 0; b <= 6; ++b)
      for (unsigned c = 0; c <= 4; ++c)
        CHECK(mult({a, b, c}) == oracle::arrangements({a, b, c}));
}

TEST_CASE("count_cyclic: examples")
{
  CHECK(count_cyclic(factorize(360)) == 60);
  CHECK(count_cyclic(factorize(97)) == 1);
  CHECK(count_cyclic(factorize(12)) == 3);
  CHECK(count_cyclic(factorize(1)) == 1);
}

TEST_CASE("count_elem_abelian: examples")
{
  CHECK(count_elem_abelian(2, 6) == 615195);
  CHECK(count_elem_abelian(5, 0) == 1);
  CHECK(count_elem_abelian(3, 2) == 4);
  CHECK_THROWS_AS(count_elem_abelian(4, 2), std::domain_error);
}

TEST_CASE("count_elem_abelian equals the number of complete flags")
{
  for (unsigned p : {2u, 3u, 5u, 7u, 11u})
    for (unsigned k = 0; k <= 8; ++k)
      CHECK(count_elem_abelian(p, k) == oracle::flags(p, k));
}

TEST_CASE("count_elem_abelian is strictly increasing in k")
{
  for (unsigned p : {2u, 3u, 5u, 7u})
    for (unsigned k = 1; k < 12; ++k)
      CHECK(count_elem_abelian(p, k + 1) > count_elem_abelian(p, k));
}

TEST_CASE("count_abelian: examples and errors")
{
  const std::vector<Count> t12{3, 1};
  CHECK(count_abelian(factorize(12), t12) == 9);
  const std::vector<Count> single{35};
  CHECK(count_abelian(factorize(128), single) == 35);
  const std::vector<Count> ones{1, 1, 1};
  CHECK(count_abelian(factorize(360), ones) == 60);
  CHECK_THROWS_AS(count_abelian(factorize(360), t12), std::domain_error);
  const std::vector<Count> zero{0, 1};
  CHECK_THROWS_AS(count_abelian(factorize(12), zero), std::domain_error);
}

TEST_CASE("count_abelian_elem_sylow: examples")
{
  CHECK(count_abelian_elem_sylow(factorize(12)) == 9);
  CHECK(count_abelian_elem_sylow(factorize(64)) == 615195);
  CHECK(count_abelian_elem_sylow(factorize(4)) == 3);
  CHECK(count_abelian_elem_sylow(factorize(1)) == 1);
}

TEST_CASE("closed forms compose consistently up to 10^4")
{
  for (std::uint64_t n = 1; n <= 10000; ++n) {
    const auto f = factorize(n);
    std::vector<Count> elem, ones;
    for (const auto& pp : f.pairs()) {
      elem.push_back(count_elem_abelian(pp.prime, pp.exponent));
      ones.push_back(1);
    }
    const Count e = count_abelian_elem_sylow(f);
    CHECK(e == count_abelian(f, elem));
    CHECK(count_cyclic(f) == count_abelian(f, ones));
    CHECK(count_cyclic(f) == multinomial(f.exponents()));
  }
}

TEST_CASE("count_abelian_elem_sylow matches the flag-and-arrangement oracle")
{
  for (std::uint64_t n = 1; n <= 3000; ++n)
    CHECK(count_abelian_elem_sylow(factorize(n)) == oracle::elementary_sylow_count(n));
}

TEST_CASE("maximal_subgroup_count_formula: examples")
{
  CHECK(maximal_subgroup_count_formula(factorize(3600)) == 25);
  CHECK(maximal_subgroup_count_formula(factorize(13)) == 1);
  CHECK(maximal_subgroup_count_formula(factorize(12)) == 4);
  CHECK(maximal_subgroup_count_formula(factorize(1)) == 0);
}

TEST_CASE("maximal_subgroup_count_formula is a sum of hyperplane counts")
{
  for (std::uint64_t n = 1; n <= 2000; ++n) {
    Count expected = 0;
    for (auto [p, e] : oracle::factor(n))
      expected += oracle::gaussian_binomial(e, 1, static_cast<unsigned>(p));
    CHECK(maximal_subgroup_count_formula(factorize(n)) == expected);
  }
}

TEST_CASE("factorize: examples")
{
  CHECK(factorize(360).pairs() == std::vector<PrimePower>{{2, 3}, {3, 2}, {5, 1}});
  CHECK(factorize(1).empty());
  CHECK(factorize(97).pairs() == std::vector<PrimePower>{{97, 1}});
  CHECK(factorize(360).to_string() == "2^3*3^2*5");
  CHECK(factorize(1).to_string() == "1");
  CHECK(factorize(3600).value() == 3600);
  CHECK(factorize(3600).total_exponent() == 8);
  CHECK(factorize(3600).exponents() == std::vector<unsigned>{4, 2, 2});
  CHECK_THROWS_AS(factorize(0), std::domain_error);
  const std::uint64_t big = 4294967291ull * 3;
  CHECK(factorize(big).pairs() == std::vector<PrimePower>{{3, 1}, {4294967291ull, 1}});
}

TEST_CASE("factorize agrees with the oracle and reconstructs n")
{
  for (std::uint64_t n = 1; n <= 20000; ++n) {
    const auto f = factorize(n);
    CHECK(f.value() == n);
    std::vector<std::pair<std::uint64_t, unsigned>> pairs;
    for (const auto& pp : f.pairs())
      pairs.emplace_back(pp.prime, pp.exponent);
    CHECK(pairs == oracle::factor(n));
  }
}

TEST_CASE("Factorization rejects malformed input")
{
  CHECK_THROWS_AS(fz({{4, 1}}), std::domain_error);
  CHECK_THROWS_AS(fz({{3, 1}, {2, 1}}), std::domain_error);
  CHECK_THROWS_AS(fz({{2, 1}, {2, 1}}), std::domain_error);
  CHECK_THROWS_AS(fz({{2, 0}}), std::domain_error);
  CHECK_THROWS_AS(fz({{1, 1}}), std::domain_error);
  CHECK_NOTHROW(fz({{2, 2}, {3, 1}}));
  CHECK(fz({}).value() == 1);
}

TEST_CASE("PrimeSieve agrees with trial division")
{
  const PrimeSieve sieve(50000);
  CHECK(sieve.limit() == 50000);
  for (std::uint32_t n = 1; n <= 50000; ++n) {
    CHECK(sieve.is_prime(n) == is_prime(n));
    if (n % 7 == 0 || n < 2000)
      CHECK(sieve.factorize(n) == factorize(n));
  }
  const auto primes = sieve.primes();
  CHECK(primes.size() == 5133);
  CHECK(primes.front() == 2);
  CHECK(primes.back() == 49999);
  CHECK_THROWS_AS(sieve.factorize(0), std::domain_error);
  CHECK_THROWS_AS(sieve.factorize(50001), std::domain_error);
}

TEST_CASE("is_prime: small and large values")
{
  CHECK_FALSE(is_prime(0));
  CHECK_FALSE(is_prime(1));
  CHECK(is_prime(2));
  CHECK(is_prime(3));
  CHECK_FALSE(is_prime(4));
  CHECK(is_prime(1000003));
  CHECK_FALSE(is_prime(1000001));
  CHECK(is_prime(4294967291ull));
}

TEST_CASE("factorial and ipow")
{
  CHECK(factorial(0) == 1);
  CHECK(factorial(1) == 1);
  CHECK(factorial(10) == 3628800);
  CHECK(factorial(25) == Count("15511210043330985984000000"));
  for (unsigned n = 1; n <= 40; ++n)
    CHECK(factorial(n) == factorial(n - 1) * n);
  CHECK(ipow(2, 0) == 1);
  CHECK(ipow(3, 4) == 81);
  CHECK(ipow(2, 100) == Count(1) << 100);
}

} // TEST_SUITE
