#ifndef COMPSERIES_TEST_HELPERS_HPP
#define COMPSERIES_TEST_HELPERS_HPP

#include <algorithm>
#include <initializer_list>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "compseries/catalog.hpp"
#include "oracles.hpp"

namespace helpers {

using namespace compseries;

inline Element element(const GroupTable& g, const std::string& label)
{
  const auto& labels = g.labels();
  auto it = std::find(labels.begin(), labels.end(), label);
  if (it == labels.end())
    throw std::runtime_error("no element labelled " + label);
  return static_cast<Element>(it - labels.begin());
}

inline ElementSet set_of(const GroupTable& g, std::initializer_list<Element> xs)
{
  ElementSet s(g.order());
  for (auto x : xs)
    s.set(x);
  return s;
}

inline oracle::Members to_members(const ElementSet& s)
{
  oracle::Members m(s.size(), false);
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    m[i] = true;
  return m;
}

template <class Range>
std::set<oracle::Members> member_sets(const Range& subgroups)
{
  std::set<oracle::Members> out;
  for (const auto& s : subgroups)
    out.insert(to_members(s.members()));
  return out;
}

inline std::size_t element_order(const GroupTable& g, Element x)
{
  std::size_t k = 1;
  for (Element y = x; y != GroupTable::identity; y = g.mul(y, x))
    ++k;
  return k;
}

/// Roster entries of order <= max_order, realized.
inline std::vector<std::pair<std::string, GroupTable>> roster_groups(std::uint64_t max_order)
{
  std::vector<std::pair<std::string, GroupTable>> out;
  for (const auto& text : standard_roster()) {
    const auto spec = parse_spec(text);
    if (spec_order(spec) <= max_order)
      out.emplace_back(text, realize(spec));
  }
  return out;
}

} // namespace helpers

#endif // COMPSERIES_TEST_HELPERS_HPP
