#include "compseries/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <functional>
#include <limits>
#include <stdexcept>

#include "compseries/formulas.hpp"

namespace compseries {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

constexpr unsigned max_permutation_degree = 5;

class Parser {
public:
  explicit Parser(std::string_view text)
  {
    for (std::size_t i = 0; i < text.size(); ++i) {
      if (!std::isspace(static_cast<unsigned char>(text[i]))) {
        chars_.push_back(text[i]);
        origin_.push_back(i);
      }
    }
    origin_.push_back(text.size());
  }

  GroupSpec parse()
  {
    if (chars_.empty())
      fail("empty group spec");
    std::vector<GroupSpec> factors;
    factors.push_back(atom());
    while (peek() == 'x') {
      ++pos_;
      factors.push_back(atom());
    }
    if (pos_ != chars_.size())
      fail(std::string("unexpected character '") + chars_[pos_] + "'");
    if (factors.size() == 1)
      return std::move(factors.front());
    return GroupSpec{DirectProduct{std::move(factors)}};
  }

private:
  [[noreturn]] void fail(const std::string& what) const
  {
    throw parse_error("group spec: " + what, origin_[std::min(pos_, chars_.size())]);
  }

  char peek() const { return pos_ < chars_.size() ? chars_[pos_] : '\0'; }

  void expect(char c)
  {
    if (peek() != c)
      fail(std::string("expected '") + c + "'");
    ++pos_;
  }

  std::uint64_t number()
  {
    if (!std::isdigit(static_cast<unsigned char>(peek())))
      fail("expected a number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      const std::uint64_t d = static_cast<std::uint64_t>(peek() - '0');
      if (v > (std::numeric_limits<std::uint64_t>::max() - d) / 10)
        fail("number too large");
      v = v * 10 + d;
      ++pos_;
    }
    return v;
  }

  unsigned small_number()
  {
    auto v = number();
    if (v > std::numeric_limits<unsigned>::max())
      fail("number too large");
    return static_cast<unsigned>(v);
  }

  std::uint64_t prime()
  {
    auto p = number();
    if (!is_prime(p))
      throw std::domain_error("group spec: " + std::to_string(p) + " is not prime");
    return p;
  }

  GroupSpec atom()
  {
    const char c = peek();
    if (c == '\0')
      fail("expected a group");
    ++pos_;
    switch (c) {
    case 'Z': {
      auto n = number();
      if (n == 0)
        throw std::domain_error("group spec: Z0 is not a group");
      return {Cyclic{n}};
    }
    case 'E': {
      expect('(');
      auto p = prime();
      expect(',');
      auto k = small_number();
      expect(')');
      return {ElemAbelian{p, k}};
    }
    case 'D': {
      auto n = number();
      if (n < 2 || n % 2 != 0)
        throw std::domain_error("group spec: dihedral order must be even and at least 2");
      return {Dihedral{n}};
    }
    case 'Q': {
      if (number() != 8)
        throw std::domain_error("group spec: only the quaternion group Q8 is supported");
      return {Quaternion{}};
    }
    case 'S': {
      auto n = number();
      if (n < 1 || n > max_permutation_degree)
        throw std::domain_error("group spec: S" + std::to_string(n) + " is not supported (1..5)");
      return {Symmetric{static_cast<unsigned>(n)}};
    }
    case 'A': {
      if (peek() == 'b') {
        ++pos_;
        return abelian();
      }
      auto n = number();
      if (n < 1 || n > max_permutation_degree)
        throw std::domain_error("group spec: A" + std::to_string(n) + " is not supported (1..5)");
      return {Alternating{static_cast<unsigned>(n)}};
    }
    default:
      --pos_;
      fail(std::string("unknown group '") + c + "'");
    }
  }

  GroupSpec abelian()
  {
    expect('(');
    AbelianType type;
    do {
      auto p = prime();
      expect('^');
      std::vector<unsigned> exps{small_number()};
      while (peek() == '+') {
        ++pos_;
        exps.push_back(small_number());
      }
      for (auto e : exps) {
        if (e == 0)
          throw std::domain_error("group spec: abelian exponents must be positive");
      }
      for (const auto& part : type.parts) {
        if (part.first == p)
          throw std::domain_error("group spec: prime " + std::to_string(p) + " listed twice");
      }
      type.parts.emplace_back(p, std::move(exps));
    } while (peek() == ';' && (++pos_, true));
    expect(')');
    return {std::move(type)};
  }

  std::string chars_;
  std::vector<std::size_t> origin_;
  std::size_t pos_ = 0;
};

void flatten(const GroupSpec& spec, std::vector<const GroupSpec*>& out)
{
  if (const auto* prod = std::get_if<DirectProduct>(&spec.node)) {
    for (const auto& f : prod->factors)
      flatten(f, out);
  } else {
    out.push_back(&spec);
  }
}

std::string atom_text(const GroupSpec& spec)
{
  return std::visit(overloaded{
    [](const Cyclic& c) { return "Z" + std::to_string(c.n); },
    [](const ElemAbelian& e) { return "E(" + std::to_string(e.p) + "," + std::to_string(e.k) + ")"; },
    [](const AbelianType& a) {
      auto parts = a.parts;
      std::sort(parts.begin(), parts.end());
      std::string s = "Ab(";
      for (std::size_t i = 0; i < parts.size(); ++i) {
        if (i)
          s += ';';
        auto exps = parts[i].second;
        std::sort(exps.rbegin(), exps.rend());
        s += std::to_string(parts[i].first) + "^";
        for (std::size_t j = 0; j < exps.size(); ++j) {
          if (j)
            s += '+';
          s += std::to_string(exps[j]);
        }
      }
      return s + ")";
    },
    [](const Dihedral& d) { return "D" + std::to_string(d.order); },
    [](const Quaternion&) { return std::string("Q8"); },
    [](const Symmetric& s) { return "S" + std::to_string(s.n); },
    [](const Alternating& a) { return "A" + std::to_string(a.n); },
    [](const DirectProduct&) -> std::string { throw std::logic_error("atom_text: product"); },
  }, spec.node);
}

std::vector<Element> cyclic_table(std::size_t n)
{
  std::vector<Element> mult(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      mult[i * n + j] = static_cast<Element>((i + j) % n);
  return mult;
}

GroupTable direct_product(const GroupTable& a, const GroupTable& b)
{
  const std::size_t na = a.order(), nb = b.order(), n = na * nb;
  std::vector<Element> mult(n * n);
  for (std::size_t a1 = 0; a1 < na; ++a1)
    for (std::size_t b1 = 0; b1 < nb; ++b1)
      for (std::size_t a2 = 0; a2 < na; ++a2)
        for (std::size_t b2 = 0; b2 < nb; ++b2)
          mult[(a1 * nb + b1) * n + a2 * nb + b2] =
            static_cast<Element>(a.mul(a1, a2) * nb + b.mul(b1, b2));
  return GroupTable::trusted(n, std::move(mult));
}

GroupTable product_of(const std::vector<GroupTable>& factors)
{
  GroupTable acc = GroupTable::trusted(1, {0});
  for (const auto& f : factors)
    acc = direct_product(acc, f);
  return acc;
}

GroupTable cyclic_group(std::size_t n) { return GroupTable::trusted(n, cyclic_table(n)); }

Permutation cycle_perm(std::size_t n_points, const std::vector<std::uint32_t>& cycle)
{
  Permutation p(n_points);
  for (std::size_t i = 0; i < n_points; ++i)
    p[i] = static_cast<std::uint32_t>(i);
  for (std::size_t i = 0; i < cycle.size(); ++i)
    p[cycle[i]] = cycle[(i + 1) % cycle.size()];
  return p;
}

GroupTable quaternion_group(const Limits& limits)
{
  // unit u in {1, i, j, k} times sign s encoded as 2u + s
  static constexpr int unit[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
  static constexpr int sign[4][4] = {{0, 0, 0, 0}, {0, 1, 0, 1}, {0, 1, 1, 0}, {0, 0, 1, 1}};
  auto qmul = [](std::uint32_t x, std::uint32_t y) {
    const auto ux = x / 2, uy = y / 2;
    const auto s = (x % 2) ^ (y % 2) ^ static_cast<std::uint32_t>(sign[ux][uy]);
    return static_cast<std::uint32_t>(2 * unit[ux][uy]) + s;
  };
  auto left = [&](std::uint32_t x) {
    Permutation p(8);
    for (std::uint32_t y = 0; y < 8; ++y)
      p[y] = qmul(x, y);
    return p;
  };
  return build_from_generators(8, {left(2), left(4)}, limits);
}

GroupTable dihedral_group(std::uint64_t order, const Limits& limits)
{
  const std::size_t m = order / 2;
  if (m == 1)
    return build_from_generators(2, {Permutation{1, 0}}, limits);
  if (m == 2)
    return build_from_generators(4, {Permutation{1, 0, 3, 2}, Permutation{2, 3, 0, 1}}, limits);
  Permutation rotation(m), reflection(m);
  for (std::size_t i = 0; i < m; ++i) {
    rotation[i] = static_cast<std::uint32_t>((i + 1) % m);
    reflection[i] = static_cast<std::uint32_t>((m - i) % m);
  }
  return build_from_generators(m, {rotation, reflection}, limits);
}

GroupTable symmetric_group(unsigned n, const Limits& limits)
{
  if (n == 1)
    return build_from_generators(1, {}, limits);
  std::vector<std::uint32_t> cycle(n);
  for (unsigned i = 0; i < n; ++i)
    cycle[i] = i;
  return build_from_generators(n, {cycle_perm(n, cycle), cycle_perm(n, {0, 1})}, limits);
}

GroupTable alternating_group(unsigned n, const Limits& limits)
{
  std::vector<Permutation> gens;
  for (std::uint32_t i = 2; i < n; ++i)
    gens.push_back(cycle_perm(n, {0, 1, i}));
  return build_from_generators(std::max(n, 1u), gens, limits);
}

GroupTable realize_atom(const GroupSpec& spec, const Limits& limits)
{
  return std::visit(overloaded{
    [](const Cyclic& c) { return cyclic_group(c.n); },
    [](const ElemAbelian& e) {
      return product_of(std::vector<GroupTable>(e.k, cyclic_group(e.p)));
    },
    [](const AbelianType& a) {
      auto parts = a.parts;
      std::sort(parts.begin(), parts.end());
      std::vector<GroupTable> factors;
      for (auto& [p, exps] : parts) {
        std::sort(exps.rbegin(), exps.rend());
        for (auto e : exps) {
          std::size_t q = 1;
          for (unsigned i = 0; i < e; ++i)
            q *= p;
          factors.push_back(cyclic_group(q));
        }
      }
      return product_of(factors);
    },
    [&](const Dihedral& d) { return dihedral_group(d.order, limits); },
    [&](const Quaternion&) { return quaternion_group(limits); },
    [&](const Symmetric& s) { return symmetric_group(s.n, limits); },
    [&](const Alternating& a) { return alternating_group(a.n, limits); },
    [](const DirectProduct&) -> GroupTable { throw std::logic_error("realize_atom: product"); },
  }, spec.node);
}

void merge_types(std::map<std::uint64_t, std::vector<unsigned>>& out, std::uint64_t p,
                 const std::vector<unsigned>& exps)
{
  auto& v = out[p];
  v.insert(v.end(), exps.begin(), exps.end());
}

void add_cyclic(std::map<std::uint64_t, std::vector<unsigned>>& out, std::uint64_t n)
{
  const auto f = factorize(n);
  for (const auto& pp : f.pairs())
    merge_types(out, pp.prime, {pp.exponent});
}

} // namespace

GroupSpec parse_spec(std::string_view text) { return Parser(text).parse(); }

std::string to_string(const GroupSpec& spec)
{
  std::vector<const GroupSpec*> atoms;
  flatten(spec, atoms);
  std::vector<std::pair<Count, std::string>> keyed;
  for (const auto* a : atoms)
    keyed.emplace_back(spec_order(*a), atom_text(*a));
  std::sort(keyed.begin(), keyed.end());
  std::string out;
  for (std::size_t i = 0; i < keyed.size(); ++i) {
    if (i)
      out += 'x';
    out += keyed[i].second;
  }
  return out;
}

Count spec_order(const GroupSpec& spec)
{
  return std::visit(overloaded{
    [](const Cyclic& c) { return Count(c.n); },
    [](const ElemAbelian& e) { return ipow(e.p, e.k); },
    [](const AbelianType& a) {
      Count v = 1;
      for (const auto& [p, exps] : a.parts)
        for (auto e : exps)
          v *= ipow(p, e);
      return v;
    },
    [](const Dihedral& d) { return Count(d.order); },
    [](const Quaternion&) { return Count(8); },
    [](const Symmetric& s) { return factorial(s.n); },
    [](const Alternating& a) { return a.n <= 1 ? Count(1) : factorial(a.n) / 2; },
    [](const DirectProduct& d) {
      Count v = 1;
      for (const auto& f : d.factors)
        v *= spec_order(f);
      return v;
    },
  }, spec.node);
}

bool is_abelian_spec(const GroupSpec& spec)
{
  return std::visit(overloaded{
    [](const Cyclic&) { return true; },
    [](const ElemAbelian&) { return true; },
    [](const AbelianType&) { return true; },
    [](const Dihedral& d) { return d.order <= 4; },
    [](const Quaternion&) { return false; },
    [](const Symmetric& s) { return s.n <= 2; },
    [](const Alternating& a) { return a.n <= 3; },
    [](const DirectProduct& d) {
      return std::all_of(d.factors.begin(), d.factors.end(), is_abelian_spec);
    },
  }, spec.node);
}

std::map<std::uint64_t, std::vector<unsigned>> sylow_types(const GroupSpec& spec)
{
  if (!is_abelian_spec(spec))
    throw std::domain_error("sylow_types: " + to_string(spec) + " is not abelian");
  std::map<std::uint64_t, std::vector<unsigned>> out;
  std::function<void(const GroupSpec&)> walk = [&](const GroupSpec& s) {
    std::visit(overloaded{
      [&](const Cyclic& c) { add_cyclic(out, c.n); },
      [&](const ElemAbelian& e) {
        if (e.k > 0)
          merge_types(out, e.p, std::vector<unsigned>(e.k, 1));
      },
      [&](const AbelianType& a) {
        for (const auto& [p, exps] : a.parts)
          merge_types(out, p, exps);
      },
      [&](const Dihedral& d) {
        if (d.order == 2)
          merge_types(out, 2, {1});
        else
          merge_types(out, 2, {1, 1});
      },
      [](const Quaternion&) {},
      [&](const Symmetric& sym) {
        if (sym.n == 2)
          merge_types(out, 2, {1});
      },
      [&](const Alternating& alt) {
        if (alt.n == 3)
          merge_types(out, 3, {1});
      },
      [&](const DirectProduct& d) {
        for (const auto& f : d.factors)
          walk(f);
      },
    }, s.node);
  };
  walk(spec);
  for (auto& [p, exps] : out)
    std::sort(exps.rbegin(), exps.rend());
  return out;
}

GroupTable realize(const GroupSpec& spec, const Limits& limits)
{
  const Count order = spec_order(spec);
  if (order > limits.element_cap)
    throw capacity_error("realize: " + to_string(spec) + " has order " + order.str() +
                         ", above the element cap " + std::to_string(limits.element_cap));
  std::vector<const GroupSpec*> atoms;
  flatten(spec, atoms);
  if (atoms.size() == 1)
    return realize_atom(*atoms.front(), limits);
  std::vector<GroupTable> factors;
  for (const auto* a : atoms)
    factors.push_back(realize_atom(*a, limits));
  return product_of(factors);
}

GroupSpec abelian_spec(const std::map<std::uint64_t, std::vector<unsigned>>& types)
{
  if (types.empty())
    return {Cyclic{1}};
  AbelianType a;
  for (const auto& [p, exps] : types) {
    auto sorted = exps;
    std::sort(sorted.rbegin(), sorted.rend());
    a.parts.emplace_back(p, sorted);
  }
  return {std::move(a)};
}

std::vector<GroupSpec> abelian_specs_up_to(std::uint64_t max_order)
{
  // partitions of e, parts descending
  std::function<void(unsigned, unsigned, std::vector<unsigned>&, std::vector<std::vector<unsigned>>&)>
    partitions = [&](unsigned rest, unsigned largest, std::vector<unsigned>& cur,
                     std::vector<std::vector<unsigned>>& out) {
      if (rest == 0) {
        out.push_back(cur);
        return;
      }
      for (unsigned part = std::min(rest, largest); part >= 1; --part) {
        cur.push_back(part);
        partitions(rest - part, part, cur, out);
        cur.pop_back();
      }
    };

  std::vector<GroupSpec> out;
  for (std::uint64_t n = 2; n <= max_order; ++n) {
    const auto f = factorize(n);
    std::vector<std::vector<std::vector<unsigned>>> choices;
    for (const auto& pp : f.pairs()) {
      std::vector<std::vector<unsigned>> parts;
      std::vector<unsigned> cur;
      partitions(pp.exponent, pp.exponent, cur, parts);
      choices.push_back(std::move(parts));
    }
    std::vector<std::size_t> pick(choices.size(), 0);
    while (true) {
      std::map<std::uint64_t, std::vector<unsigned>> types;
      for (std::size_t i = 0; i < choices.size(); ++i)
        types[f.pairs()[i].prime] = choices[i][pick[i]];
      out.push_back(abelian_spec(types));
      std::size_t i = 0;
      while (i < pick.size() && ++pick[i] == choices[i].size())
        pick[i++] = 0;
      if (i == pick.size())
        break;
    }
  }
  return out;
}

std::vector<std::string> standard_roster()
{
  return {
    // abelian
    "Z1", "Z2", "Z3", "Z4", "Z6", "Z8", "Z12", "Z16", "Z30", "Z60", "Z64", "Z97", "Z128",
    "Z210", "Z256", "Z360",
    "E(2,2)", "E(2,3)", "E(2,4)", "E(2,5)", "E(2,6)", "E(2,7)", "E(2,8)",
    "E(3,2)", "E(3,3)", "E(3,4)", "E(3,5)", "E(5,2)", "E(5,3)", "E(7,2)", "E(11,2)",
    "E(2,2)xZ3", "E(2,3)xZ3", "E(2,2)xE(3,2)", "E(2,3)xE(3,2)", "E(2,2)xZ3xZ5",
    "E(2,2)xE(3,2)xZ5", "E(2,4)xE(3,2)xE(5,2)",
    "Ab(2^2+1)", "Ab(2^2+2)", "Ab(2^3+1)", "Ab(2^2+1+1)", "Ab(3^2+1)", "Ab(2^2+1;3^1)",
    "Ab(2^3+2+1)", "Ab(2^2+2+1+1)", "Ab(2^4+2+1)", "Ab(2^2+2+2+2)", "Ab(2^2+1+1+1+1+1+1)",
    "Ab(2^3+1;3^2)", "Ab(3^2+1+1)", "Ab(3^3+2)", "Ab(2^2+1;5^2)", "Ab(2^1;3^2+1;5^1)",
    "Z4xZ4xZ3", "Z2xZ8xZ9",
    // non-abelian
    "S3", "S4", "S5", "A4", "A5", "Q8",
    "D6", "D8", "D10", "D12", "D14", "D16", "D18", "D20", "D24", "D32", "D64", "D128",
    "S3xZ2", "S3xZ3", "S3xS3", "S3xE(2,2)", "S3xS3xZ2", "S3xE(2,3)",
    "D8xZ2", "D8xZ3", "D8xE(2,2)", "D8xE(2,3)", "D8xD8", "D8xQ8", "D8xE(2,4)", "D16xZ2",
    "Q8xZ2", "Q8xZ3", "Q8xE(2,2)", "Q8xQ8", "Q8xE(2,4)", "Q8xZ5",
    "A4xZ2", "A4xZ3", "A4xE(2,2)", "A4xS3", "A4xA4",
    "S4xZ2", "S4xZ3", "S4xS3", "S4xE(2,2)", "S4xE(2,3)", "S4xZ5", "S4xD8",
    "A5xZ2", "A5xZ3", "A5xZ4", "A5xE(2,2)", "S5xZ2", "A5xA5",
  };
}

} // namespace compseries
