#include <doctest.h>

#include <set>

#include "compseries/lattice.hpp"
#include "helpers.hpp"

using namespace compseries;

namespace {

std::size_t parse_error_position(const std::string& text)
{
  try {
    parse_spec(text);
  } catch (const parse_error& e) {
    return e.position();
  }
  FAIL("no parse error for " << text);
  return 0;
}

std::string canonical(const std::string& text) { return to_string(parse_spec(text)); }

// number of partitions of e, by the largest-part recurrence
std::uint64_t partitions(unsigned n, unsigned max_part)
{
  if (n == 0)
    return 1;
  std::uint64_t total = 0;
  for (unsigned k = 1; k <= std::min(n, max_part); ++k)
    total += partitions(n - k, k);
  return total;
}

std::uint64_t abelian_type_count(std::uint64_t n)
{
  std::uint64_t v = 1;
  for (auto [p, e] : oracle::factor(n))
    v *= partitions(e, e);
  return v;
}

} // namespace

TEST_SUITE("catalog") {

TEST_CASE("parse_spec: examples")
{
  const auto z = parse_spec("Z360");
  REQUIRE(std::holds_alternative<Cyclic>(z.node));
  CHECK(std::get<Cyclic>(z.node).n == 360);

  const auto a = parse_spec("A5xA5");
  REQUIRE(std::holds_alternative<DirectProduct>(a.node));
  const auto& factors = std::get<DirectProduct>(a.node).factors;
  REQUIRE(factors.size() == 2);
  CHECK(std::get<Alternating>(factors[0].node).n == 5);
  CHECK(std::get<Alternating>(factors[1].node).n == 5);
  CHECK(spec_order(a) == 3600);

  const auto e = parse_spec("E(2,4)xE(3,2)xE(5,2)");
  CHECK(spec_order(e) == 3600);
  CHECK(is_abelian_spec(e));

  const auto ab = parse_spec("Ab(2^3+1;3^2)");
  const auto& parts = std::get<AbelianType>(ab.node).parts;
  REQUIRE(parts.size() == 2);
  CHECK(parts[0].first == 2);
  CHECK(parts[0].second == std::vector<unsigned>{3, 1});
  CHECK(spec_order(ab) == 144);

  CHECK(spec_order(parse_spec(" D 12 x Q8 ")) == 96);
  CHECK(spec_order(parse_spec("S4")) == 24);
  CHECK(spec_order(parse_spec("S1")) == 1);
  CHECK(spec_order(parse_spec("A1")) == 1);
}

TEST_CASE("parse_spec: syntax errors carry the position in the original text")
{
  CHECK(parse_error_position("") == 0);
  CHECK(parse_error_position("Y3") == 0);
  CHECK(parse_error_position("Z") == 1);
  CHECK(parse_error_position("Z3x") == 3);
  CHECK(parse_error_position("Z3 x  W2") == 6);
  CHECK(parse_error_position("E(2,3") == 5);
  CHECK(parse_error_position("E(2;3)") == 3);
  CHECK(parse_error_position("Ab(2)") == 4);
  CHECK(parse_error_position("Z3Z4") == 2);
  CHECK(parse_error_position("z3") == 0);
  CHECK(parse_error_position("Z99999999999999999999999") > 0);
  CHECK_THROWS_WITH_AS(parse_spec("Z"), doctest::Contains("at position 1"), parse_error);
}

TEST_CASE("parse_spec: unsupported parameters are domain errors")
{
  for (const char* text : {"Z0", "E(4,2)", "E(1,2)", "D7", "D0", "Q16", "S6", "A7", "S0", "Ab(2^0)",
                           "Ab(2^1;2^2)", "Ab(6^1)"}) {
    CAPTURE(text);
    CHECK_THROWS_AS(parse_spec(text), std::domain_error);
  }
}

TEST_CASE("to_string: canonical form")
{
  CHECK(canonical("Z3xZ2") == "Z2xZ3");
  CHECK(canonical("A5xZ2") == "Z2xA5");
  CHECK(canonical("Ab(3^1;2^1+2)") == "Ab(2^2+1;3^1)");
  CHECK(canonical(" E( 2 , 6 ) ") == "E(2,6)");
  CHECK(canonical("D8xQ8xD8") == "D8xD8xQ8");
  CHECK(canonical("S3xZ6") == "S3xZ6");
}

TEST_CASE("to_string round-trips every roster entry")
{
  for (const auto& text : standard_roster()) {
    CAPTURE(text);
    const auto spec = parse_spec(text);
    const auto printed = to_string(spec);
    CHECK(canonical(printed) == printed);
    CHECK(spec_order(parse_spec(printed)) == spec_order(spec));
    CHECK(is_abelian_spec(parse_spec(printed)) == is_abelian_spec(spec));
  }
}

TEST_CASE("realize: examples")
{
  const auto z12 = realize(parse_spec("Z12"));
  REQUIRE(z12.order() == 12);
  for (Element i = 0; i < 12; ++i)
    for (Element j = 0; j < 12; ++j)
      CHECK(z12.mul(i, j) == (i + j) % 12);
  CHECK(realize(parse_spec("S4")).order() == 24);
  CHECK(realize(parse_spec("A5xA5")).order() == 3600);
  CHECK(realize(parse_spec("Q8")).order() == 8);
  CHECK(realize(parse_spec("Z1")).order() == 1);
}

TEST_CASE("realize: roster orders and laws")
{
  for (const auto& text : standard_roster()) {
    CAPTURE(text);
    const auto spec = parse_spec(text);
    const auto g = realize(spec);
    CHECK(Count(g.order()) == spec_order(spec));
    CHECK(g.is_abelian() == is_abelian_spec(spec));
    if (g.order() <= 512)
      CHECK_NOTHROW(g.validate());
  }
}

TEST_CASE("realize: element orders identify small groups")
{
  auto order_profile = [](const GroupTable& g) {
    std::multiset<std::size_t> out;
    for (Element x = 0; x < g.order(); ++x)
      out.insert(helpers::element_order(g, x));
    return out;
  };
  // Q8: one involution, six elements of order 4
  const auto q8 = order_profile(realize(parse_spec("Q8")));
  CHECK(q8.count(2) == 1);
  CHECK(q8.count(4) == 6);
  // D8: five involutions, two elements of order 4
  const auto d8 = order_profile(realize(parse_spec("D8")));
  CHECK(d8.count(2) == 5);
  CHECK(d8.count(4) == 2);
  // D2n with n odd has n involutions
  CHECK(order_profile(realize(parse_spec("D14"))).count(2) == 7);
  // A4 has three involutions and eight 3-cycles
  const auto a4 = order_profile(realize(parse_spec("A4")));
  CHECK(a4.count(2) == 3);
  CHECK(a4.count(3) == 8);
  // S5 has 25 involutions
  CHECK(order_profile(realize(parse_spec("S5"))).count(2) == 25);
  // Z4 x Z2 has exponent 4, E(2,3) exponent 2
  CHECK(order_profile(realize(parse_spec("Ab(2^2+1)"))).count(4) == 4);
  CHECK(order_profile(realize(parse_spec("E(2,3)"))).count(2) == 7);
  CHECK(realize(parse_spec("D2")).order() == 2);
  CHECK(realize(parse_spec("D4")).is_abelian());
}

TEST_CASE("realize: abelian factors commute and subgroup counts survive printing")
{
  for (const char* text : {"Ab(2^2+1;3^1)", "Z4xZ6", "E(3,2)xZ2", "Ab(2^3)xZ3"}) {
    CAPTURE(text);
    const auto spec = parse_spec(text);
    const auto g = realize(spec);
    for (Element a = 0; a < g.order(); ++a)
      for (Element b = 0; b < g.order(); ++b)
        CHECK(g.mul(a, b) == g.mul(b, a));
    const auto again = realize(parse_spec(to_string(spec)));
    CHECK(all_subgroups(again).size() == all_subgroups(g).size());
  }
}

TEST_CASE("realize: capacity errors")
{
  CHECK_THROWS_AS(realize(parse_spec("Z5000")), capacity_error);
  Limits small;
  small.element_cap = 100;
  CHECK_THROWS_AS(realize(parse_spec("S5"), small), capacity_error);
  CHECK_NOTHROW(realize(parse_spec("A5"), small));
  CHECK_THROWS_AS(realize(parse_spec("Z99999999999999999")), capacity_error);
  CHECK_THROWS_AS(realize(parse_spec("A5xA5xA5")), capacity_error);
}

TEST_CASE("sylow_types")
{
  using Types = std::map<std::uint64_t, std::vector<unsigned>>;
  CHECK(sylow_types(parse_spec("Z360")) == Types{{2, {3}}, {3, {2}}, {5, {1}}});
  CHECK(sylow_types(parse_spec("Z2xZ4xZ3")) == Types{{2, {2, 1}}, {3, {1}}});
  CHECK(sylow_types(parse_spec("E(2,3)xZ2")) == Types{{2, {1, 1, 1, 1}}});
  CHECK(sylow_types(parse_spec("Ab(3^2+1)xZ9")) == Types{{3, {2, 2, 1}}});
  CHECK(sylow_types(parse_spec("D4")) == Types{{2, {1, 1}}});
  CHECK(sylow_types(parse_spec("Z1")).empty());
  CHECK_THROWS_AS(sylow_types(parse_spec("S3")), std::domain_error);
  CHECK_THROWS_AS(sylow_types(parse_spec("Z2xQ8")), std::domain_error);
}

TEST_CASE("abelian_spec builds the group with the given Sylow types")
{
  const std::map<std::uint64_t, std::vector<unsigned>> types{{2, {2, 1}}, {3, {1}}};
  const auto spec = abelian_spec(types);
  CHECK(spec_order(spec) == 24);
  CHECK(sylow_types(spec) == types);
  CHECK(to_string(abelian_spec({})) == "Z1");
}

TEST_CASE("abelian_specs_up_to lists each isomorphism type once")
{
  const auto specs = abelian_specs_up_to(16);
  std::uint64_t expected = 0;
  for (std::uint64_t n = 2; n <= 16; ++n)
    expected += abelian_type_count(n);
  CHECK(expected == 24);
  CHECK(specs.size() == expected);

  const auto many = abelian_specs_up_to(256);
  std::uint64_t expected_many = 0;
  for (std::uint64_t n = 2; n <= 256; ++n)
    expected_many += abelian_type_count(n);
  CHECK(many.size() == expected_many);
  std::set<std::map<std::uint64_t, std::vector<unsigned>>> seen;
  for (const auto& s : many) {
    CHECK(is_abelian_spec(s));
    CHECK(spec_order(s) <= 256);
    seen.insert(sylow_types(s));
  }
  CHECK(seen.size() == many.size());
}

TEST_CASE("the standard roster covers the required families")
{
  std::set<std::string> names;
  for (const auto& text : standard_roster())
    names.insert(canonical(text));
  for (const char* name : {"S4", "S5", "A5", "Q8", "D8", "E(2,8)", "A5xA5", "Z360", "E(2,6)"})
    CHECK(names.count(canonical(name)) == 1);
  std::size_t non_abelian = 0;
  for (const auto& text : standard_roster())
    non_abelian += !is_abelian_spec(parse_spec(text));
  CHECK(non_abelian >= 10);
}

} // TEST_SUITE
