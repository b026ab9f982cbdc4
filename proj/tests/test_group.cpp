#include <doctest.h>

#include <numeric>

#include "compseries/group.hpp"
#include "compseries/lattice.hpp"
#include "helpers.hpp"

using namespace compseries;
using helpers::element;
using helpers::set_of;

namespace {

std::uint64_t naive_factorial(unsigned n)
{
  std::uint64_t v = 1;
  for (unsigned i = 2; i <= n; ++i)
    v *= i;
  return v;
}

std::vector<std::size_t> class_sizes(const GroupTable& g)
{
  std::vector<std::size_t> sizes;
  for (const auto& c : conjugacy_classes(g))
    sizes.push_back(c.size());
  std::sort(sizes.begin(), sizes.end());
  return sizes;
}

} // namespace

TEST_SUITE("group_core") {

TEST_CASE("build_from_generators: a transposition gives order 2")
{
  const auto g = build_from_generators(2, {{1, 0}});
  CHECK(g.order() == 2);
  CHECK(g.mul(1, 1) == 0);
  CHECK(g.labels() == std::vector<std::string>{"()", "(0 1)"});
}

TEST_CASE("build_from_generators: a 5-cycle and a 3-cycle give A5")
{
  const auto g = build_from_generators(5, {{1, 2, 3, 4, 0}, {1, 2, 0, 3, 4}});
  CHECK(g.order() == naive_factorial(5) / 2);
  CHECK_NOTHROW(g.validate());
}

TEST_CASE("build_from_generators: no generators gives the trivial group")
{
  const auto g = build_from_generators(1, {});
  CHECK(g.order() == 1);
  CHECK(g.mul(0, 0) == 0);
}

TEST_CASE("build_from_generators is deterministic with the identity at index 0")
{
  const std::vector<Permutation> gens{{1, 2, 3, 0}, {1, 0, 2, 3}};
  const auto a = build_from_generators(4, gens);
  const auto b = build_from_generators(4, gens);
  REQUIRE(a.order() == 24);
  CHECK(a.labels().front() == "()");
  for (Element x = 0; x < 24; ++x) {
    CHECK(a.mul(0, x) == x);
    for (Element y = 0; y < 24; ++y)
      CHECK(a.mul(x, y) == b.mul(x, y));
  }
}

TEST_CASE("build_from_generators composes left to right")
{
  const auto g = build_from_generators(3, {{1, 0, 2}, {0, 2, 1}});
  const auto a = element(g, "(0 1)");
  const auto b = element(g, "(1 2)");
  // (a*b)(x) = b(a(x)): 0 -> 1 -> 2, 1 -> 0, 2 -> 1
  CHECK(g.labels()[g.mul(a, b)] == "(0 2 1)");
}

TEST_CASE("build_from_generators: capacity and input errors")
{
  Limits limits;
  limits.element_cap = 100;
  try {
    build_from_generators(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}}, limits);
    FAIL("expected a capacity error");
  } catch (const capacity_error& e) {
    CHECK(std::string(e.what()).find("100") != std::string::npos);
  }
  CHECK_THROWS_AS(build_from_generators(3, {{0, 0, 1}}), std::domain_error);
  CHECK_THROWS_AS(build_from_generators(3, {{0, 1}}), std::domain_error);
}

TEST_CASE("GroupTable validation rejects broken tables")
{
  // not a Latin square
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 1}), std::domain_error);
  // 0 is not an identity
  CHECK_THROWS_AS(GroupTable(2, {1, 0, 0, 1}), std::domain_error);
  // a Latin square with identity where every element squares to e: a
  // non-associative loop of order 5
  const std::vector<Element> loop{0, 1, 2, 3, 4, 1, 0, 3, 4, 2, 2, 4, 0, 1,
                                  3, 3, 2, 4, 0, 1, 4, 3, 1, 2, 0};
  CHECK_THROWS_AS(GroupTable(5, loop), std::domain_error);
  CHECK_THROWS_AS(GroupTable(2, {0, 1, 1, 0}, {"e"}), std::domain_error);
}

TEST_CASE("GroupTable validation accepts cyclic tables on both sides of the sampling cut")
{
  for (std::size_t n : {1u, 7u, 512u, 600u}) {
    std::vector<Element> mult(n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        mult[i * n + j] = static_cast<Element>((i + j) % n);
    const GroupTable g(n, mult);
    CHECK(g.order() == n);
    CHECK(g.is_abelian());
    for (std::size_t x = 0; x < n; ++x)
      CHECK(g.inv(static_cast<Element>(x)) == (n - x) % n);
  }
}

TEST_CASE("GroupTable: every roster table satisfies the group laws")
{
  for (const auto& [name, g] : helpers::roster_groups(128)) {
    CAPTURE(name);
    CHECK_NOTHROW(g.validate());
    for (std::size_t x = 0; x < g.order(); ++x) {
      std::vector<bool> row(g.order()), col(g.order());
      for (std::size_t y = 0; y < g.order(); ++y) {
        row[g.mul(x, y)] = true;
        col[g.mul(y, x)] = true;
      }
      CHECK(std::all_of(row.begin(), row.end(), [](bool b) { return b; }));
      CHECK(std::all_of(col.begin(), col.end(), [](bool b) { return b; }));
      CHECK(g.mul(x, g.inv(x)) == 0);
    }
  }
}

TEST_CASE("generated_subgroup: examples")
{
  const auto z12 = realize(parse_spec("Z12"));
  CHECK(generated_subgroup(z12, {}).is_trivial());
  const Element four = 4;
  const auto h = generated_subgroup(z12, std::span<const Element>(&four, 1));
  CHECK(h.elements() == std::vector<Element>{0, 4, 8});
  CHECK(h.order() == 3);

  const auto s4 = realize(parse_spec("S4"));
  const std::vector<Element> seed{element(s4, "(0 1 2 3)"), element(s4, "(0 1)")};
  CHECK(generated_subgroup(s4, seed).order() == 24);
  CHECK_THROWS_AS(generated_subgroup(z12, std::vector<Element>{12}), std::domain_error);
}

TEST_CASE("generated_subgroup is idempotent on every subgroup")
{
  for (const auto& [name, g] : helpers::roster_groups(48)) {
    CAPTURE(name);
    for (const auto& s : all_subgroups(g)) {
      const auto again = generated_subgroup(g, s.elements());
      CHECK(again.members() == s.members());
      CHECK(g.order() % s.order() == 0);
    }
  }
}

TEST_CASE("is_normal: examples")
{
  const auto s4 = realize(parse_spec("S4"));
  CHECK(is_normal(s4, Subgroup::trivial(s4)));
  const auto a4 = generated_subgroup(
    s4, std::vector<Element>{element(s4, "(0 1 2)"), element(s4, "(1 2 3)")});
  REQUIRE(a4.order() == 12);
  CHECK(is_normal(s4, a4));
  const auto t = generated_subgroup(s4, std::vector<Element>{element(s4, "(0 1)")});
  CHECK_FALSE(is_normal(s4, t));

  const auto ab = realize(parse_spec("Z4xZ2xZ3"));
  for (const auto& s : all_subgroups(ab))
    CHECK(is_normal(ab, s));
}

TEST_CASE("is_normal agrees with the element-by-element definition up to order 60")
{
  for (const auto& [name, g] : helpers::roster_groups(60)) {
    if (g.order() > 60)
      continue;
    CAPTURE(name);
    const oracle::Members whole(g.order(), true);
    for (const auto& s : all_subgroups(g))
      CHECK(is_normal(g, s) == oracle::normal_in(g, helpers::to_members(s.members()), whole));
  }
}

TEST_CASE("quotient: examples")
{
  const auto s4 = realize(parse_spec("S4"));
  const auto a4 = generated_subgroup(
    s4, std::vector<Element>{element(s4, "(0 1 2)"), element(s4, "(1 2 3)")});
  CHECK(quotient(s4, a4, Subgroup::whole(s4)).order() == 2);

  const auto whole = Subgroup::whole(s4);
  const auto same = quotient(s4, Subgroup::trivial(s4), whole);
  CHECK(same.order() == 24);

  const auto z12 = realize(parse_spec("Z12"));
  const auto q = quotient(z12, Subgroup(z12, set_of(z12, {0, 4, 8})), Subgroup::whole(z12));
  REQUIRE(q.order() == 4);
  std::size_t largest = 0;
  for (Element x = 0; x < 4; ++x)
    largest = std::max(largest, helpers::element_order(q, x));
  CHECK(largest == 4);
  // coset of e first, then cosets by smallest member: {1,5,9} {2,6,10} {3,7,11}
  CHECK(q.mul(1, 1) == 2);
  CHECK(q.mul(1, 2) == 3);
}

TEST_CASE("quotient: precondition failures")
{
  const auto s4 = realize(parse_spec("S4"));
  const auto t = generated_subgroup(s4, std::vector<Element>{element(s4, "(0 1)")});
  const auto u = generated_subgroup(s4, std::vector<Element>{element(s4, "(2 3)")});
  CHECK_THROWS_AS(quotient(s4, t, Subgroup::whole(s4)), std::domain_error);
  CHECK_THROWS_AS(quotient(s4, t, u), std::domain_error);
}

TEST_CASE("quotient order is |H| / |N| for every normal pair")
{
  for (const char* spec : {"D8", "Q8", "S4", "A4xZ2", "Z2xZ2xZ3"}) {
    CAPTURE(spec);
    const auto g = realize(parse_spec(spec));
    const auto subs = all_subgroups(g);
    for (const auto& h : subs) {
      for (const auto& n : subs) {
        if (!n.is_subgroup_of(h) || !is_normal_in(n, h))
          continue;
        const auto q = quotient(g, n, h);
        CHECK(q.order() == h.order() / n.order());
        CHECK_NOTHROW(q.validate());
      }
    }
  }
}

TEST_CASE("is_simple")
{
  for (const char* spec : {"Z2", "Z3", "Z97", "A5"})
    CHECK(is_simple(realize(parse_spec(spec))));
  for (const char* spec : {"S4", "Z4", "E(2,2)", "A4", "S5", "A5xA5"})
    CHECK_FALSE(is_simple(realize(parse_spec(spec))));
  CHECK_THROWS_AS(is_simple(realize(parse_spec("Z1"))), std::domain_error);
}

TEST_CASE("conjugacy_classes: examples")
{
  const auto ab = realize(parse_spec("Z3xZ4"));
  CHECK(conjugacy_classes(ab).size() == 12);
  CHECK(class_sizes(realize(parse_spec("S3"))) == std::vector<std::size_t>{1, 2, 3});
  CHECK(class_sizes(realize(parse_spec("A5"))) == std::vector<std::size_t>{1, 12, 12, 15, 20});
}

TEST_CASE("conjugacy classes partition the group and have sizes dividing the order")
{
  for (const auto& [name, g] : helpers::roster_groups(256)) {
    CAPTURE(name);
    const auto classes = conjugacy_classes(g);
    REQUIRE_FALSE(classes.empty());
    CHECK(classes.front() == std::vector<Element>{0});
    std::vector<int> hits(g.order(), 0);
    std::size_t total = 0;
    Element previous_min = 0;
    for (std::size_t i = 0; i < classes.size(); ++i) {
      const auto& c = classes[i];
      CHECK(std::is_sorted(c.begin(), c.end()));
      if (i > 0)
        CHECK(c.front() > previous_min);
      previous_min = c.front();
      CHECK(g.order() % c.size() == 0);
      total += c.size();
      for (auto x : c)
        ++hits[x];
      // closed under conjugation by every element
      for (std::size_t y = 0; y < g.order(); y += 7)
        CHECK(std::binary_search(c.begin(), c.end(),
                                 g.mul(g.mul(static_cast<Element>(y), c.front()), g.inv(static_cast<Element>(y)))));
    }
    CHECK(total == g.order());
    CHECK(std::all_of(hits.begin(), hits.end(), [](int h) { return h == 1; }));
  }
}

TEST_CASE("realize_subgroup gives an isomorphic standalone table")
{
  const auto g = realize(parse_spec("S4"));
  for (const auto& s : all_subgroups(g)) {
    const auto r = realize_subgroup(g, s.members());
    REQUIRE(r.table.order() == s.order());
    CHECK(std::is_sorted(r.to_parent.begin(), r.to_parent.end()));
    CHECK(r.to_parent.front() == 0);
    for (Element a = 0; a < r.table.order(); ++a)
      for (Element b = 0; b < r.table.order(); ++b)
        CHECK(r.to_parent[r.table.mul(a, b)] == g.mul(r.to_parent[a], r.to_parent[b]));
  }
}

TEST_CASE("Subgroup rejects sets that are not subgroups")
{
  const auto g = realize(parse_spec("Z6"));
  CHECK_THROWS_AS(Subgroup(g, set_of(g, {1})), std::domain_error);
  CHECK_THROWS_AS(Subgroup(g, set_of(g, {0, 1})), std::domain_error);
  CHECK_THROWS_AS(Subgroup(g, ElementSet(5)), std::domain_error);
  CHECK_NOTHROW(Subgroup(g, set_of(g, {0, 2, 4})));
}

TEST_CASE("members_less orders by ascending member lists")
{
  const auto g = realize(parse_spec("Z12"));
  CHECK(members_less(set_of(g, {0, 2, 4, 6, 8, 10}), set_of(g, {0, 3, 6, 9})));
  CHECK(members_less(set_of(g, {0, 6}), set_of(g, {0, 6, 7})));
  CHECK_FALSE(members_less(set_of(g, {0, 6}), set_of(g, {0, 6})));
  CHECK_FALSE(members_less(set_of(g, {0, 4, 8}), set_of(g, {0, 3, 6, 9})));
}

} // TEST_SUITE
