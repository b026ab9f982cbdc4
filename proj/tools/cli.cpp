#include "cli.hpp"

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iomanip>
#include <sstream>
#include <unistd.h>

#include <CLI11.hpp>
#include <json.hpp>

#include "compseries/bounds.hpp"
#include "compseries/catalog.hpp"
#include "compseries/formulas.hpp"
#include "compseries/lattice.hpp"
#include "compseries/series.hpp"
#include "compseries/verify.hpp"

namespace compseries::cli {

namespace {

namespace fs = std::filesystem;
using json = nlohmann::json;
using Clock = std::chrono::steady_clock;

constexpr std::size_t max_element_cap = 65536;

struct Options {
  bool json = false;
  std::optional<std::size_t> element_cap;
  std::string group;
  std::string group_file;
  std::string mode = "auto";
  bool cross_check = false;
  std::optional<std::size_t> limit;
  std::string output;
  std::uint64_t n = 0;
  std::uint64_t max_n = 0;
  unsigned jobs = 0;
  bool per_order = false;
  std::uint64_t order_cap = 128;
  std::string what;
  std::string catalog_action;
};

struct Outcome {
  json inputs = json::object();
  json result = json::object();
  std::vector<std::string> methods;
  std::string text;
  int code = exit_ok;
  bool cache_hit = false;
};

std::int64_t ms_since(Clock::time_point start)
{
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::size_t checked_cap(unsigned long long v, const char* source)
{
  if (v < 1 || v > max_element_cap)
    throw std::domain_error(std::string(source) + " must be between 1 and " +
                            std::to_string(max_element_cap));
  return static_cast<std::size_t>(v);
}

std::size_t parse_cap(const std::string& text, const char* source)
{
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos != text.size() || text.empty())
    throw std::domain_error(std::string(source) + ": '" + text + "' is not a number");
  return checked_cap(v, source);
}

Limits make_limits(const Options& opt, const Environment& env)
{
  Limits limits;
  if (opt.element_cap)
    limits.element_cap = checked_cap(*opt.element_cap, "--element-cap");
  else if (env.element_cap)
    limits.element_cap = parse_cap(*env.element_cap, "COMPSERIES_ELEMENT_CAP");
  return limits;
}

// result cache

std::string cache_file_name(const std::string& key)
{
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : key) {
    h ^= c;
    h *= 1099511628211ull;
  }
  std::ostringstream s;
  s << std::hex << std::setw(16) << std::setfill('0') << h << ".json";
  return s.str();
}

class Cache {
public:
  Cache(const Environment& env, std::ostream& err) : err_(err)
  {
    if (env.cache_dir && !env.cache_dir->empty())
      dir_ = fs::path(*env.cache_dir);
  }

  std::optional<json> load(const std::string& key)
  {
    if (!dir_)
      return std::nullopt;
    const auto path = *dir_ / cache_file_name(key);
    std::ifstream in(path);
    if (!in)
      return std::nullopt;
    try {
      json entry = json::parse(in);
      if (!entry.is_object() || entry.value("cache_key", "") != key || !entry.contains("result") ||
          !entry["result"].is_object())
        throw std::runtime_error("unexpected content");
      return entry;
    } catch (const std::exception& e) {
      err_ << "warning: ignoring corrupt cache entry " << path.string() << " (" << e.what()
           << ")\n";
      return std::nullopt;
    }
  }

  void store(const std::string& key, json entry)
  {
    if (!dir_)
      return;
    entry["cache_key"] = key;
    std::error_code ec;
    fs::create_directories(*dir_, ec);
    const auto path = *dir_ / cache_file_name(key);
    const auto tmp = path.string() + ".tmp." + std::to_string(::getpid());
    {
      std::ofstream out(tmp, std::ios::trunc);
      out << entry.dump() << '\n';
      if (!out) {
        err_ << "warning: cannot write cache entry " << tmp << '\n';
        fs::remove(tmp, ec);
        return;
      }
    }
    fs::rename(tmp, path, ec);
    if (ec) {
      err_ << "warning: cannot write cache entry " << path.string() << '\n';
      fs::remove(tmp, ec);
    }
  }

private:
  std::ostream& err_;
  std::optional<fs::path> dir_;
};

// group input

struct GroupInput {
  std::optional<GroupSpec> spec;
  std::string label;
  std::string file;

  GroupTable table(const Limits& limits) const
  {
    if (spec)
      return realize(*spec, limits);
    return load_file(limits);
  }

private:
  GroupTable load_file(const Limits& limits) const
  {
    std::ifstream in(file);
    if (!in)
      throw std::domain_error("group file: cannot open " + file);
    json doc;
    try {
      doc = json::parse(in);
    } catch (const json::parse_error& e) {
      throw std::domain_error("group file: " + std::string(e.what()));
    }
    if (!doc.is_object() || !doc.contains("points") || !doc["points"].is_number_integer() ||
        !doc.contains("generators") || !doc["generators"].is_array())
      throw std::domain_error("group file: expected {\"points\": int, \"generators\": [[int,...],...]}");
    const auto points = doc["points"].get<std::int64_t>();
    if (points < 1)
      throw std::domain_error("group file: points must be positive");
    std::vector<Permutation> gens;
    for (const auto& g : doc["generators"]) {
      if (!g.is_array())
        throw std::domain_error("group file: each generator must be a list of images");
      Permutation p;
      for (const auto& x : g) {
        if (!x.is_number_integer() || x.get<std::int64_t>() < 0 || x.get<std::int64_t>() >= points)
          throw std::domain_error("group file: generator image out of range");
        p.push_back(x.get<std::uint32_t>());
      }
      gens.push_back(std::move(p));
    }
    return build_from_generators(static_cast<std::size_t>(points), gens, limits);
  }
};

GroupInput group_input(const Options& opt)
{
  if (opt.group.empty() == opt.group_file.empty())
    throw std::domain_error("give exactly one of --group and --group-file");
  GroupInput in;
  if (!opt.group.empty()) {
    in.spec = parse_spec(opt.group);
    in.label = to_string(*in.spec);
  } else {
    in.file = opt.group_file;
    in.label = "file:" + opt.group_file;
  }
  return in;
}

json member_list(const ElementSet& s)
{
  json out = json::array();
  for (auto i = s.find_first(); i != ElementSet::npos; i = s.find_next(i))
    out.push_back(i);
  return out;
}

// count

struct FormulaValue {
  Count value;
  std::string name;
};

/// Closed form when every Sylow subgroup is cyclic or elementary abelian.
std::optional<FormulaValue> formula_count(const GroupSpec& spec)
{
  if (!is_abelian_spec(spec))
    return std::nullopt;
  const auto types = sylow_types(spec);
  std::vector<PrimePower> pairs;
  std::vector<Count> t;
  bool cyclic = true, elementary = true;
  for (const auto& [p, exps] : types) {
    unsigned total = 0;
    for (auto e : exps)
      total += e;
    pairs.push_back({p, total});
    const bool is_elem = std::all_of(exps.begin(), exps.end(), [](unsigned e) { return e == 1; });
    if (exps.size() == 1) {
      t.push_back(1);
      elementary = elementary && is_elem;
    } else if (is_elem) {
      t.push_back(count_elem_abelian(p, static_cast<unsigned>(exps.size())));
      cyclic = false;
    } else {
      return std::nullopt;
    }
  }
  const Factorization f(std::move(pairs));
  if (cyclic)
    return FormulaValue{count_cyclic(f), "cyclic multinomial"};
  if (elementary)
    return FormulaValue{count_abelian_elem_sylow(f), "elementary abelian Sylow product"};
  return FormulaValue{count_abelian(f, t), "Sylow product"};
}

bool is_cyclic_spec(const GroupSpec& spec)
{
  if (!is_abelian_spec(spec))
    return false;
  for (const auto& [p, exps] : sylow_types(spec))
    if (exps.size() != 1)
      return false;
  return true;
}

Outcome cmd_count(const Options& opt, const Limits& limits, Cache& cache)
{
  if (opt.mode != "auto" && opt.mode != "formula" && opt.mode != "brute")
    throw std::domain_error("--mode must be auto, formula or brute");
  const auto in = group_input(opt);
  Outcome o;
  o.inputs = {{"group", in.label}, {"mode", opt.mode}, {"cross_check", opt.cross_check}};

  std::string key;
  if (in.spec) {
    key = "count|" + opt.mode + (opt.cross_check ? "|cross" : "") + "|" + in.label +
          "|cap=" + std::to_string(limits.element_cap);
    if (auto hit = cache.load(key)) {
      o.result = (*hit)["result"];
      o.methods = {to_string(CountMethod::cached)};
      o.cache_hit = true;
      o.code = o.result.value("agree", true) ? exit_ok : exit_mismatch;
      return o;
    }
  }

  std::optional<FormulaValue> formula;
  if (in.spec)
    formula = formula_count(*in.spec);
  const bool want_formula = opt.mode == "formula" || opt.cross_check ||
                            (opt.mode == "auto" && formula.has_value());
  const bool want_brute = opt.mode == "brute" || opt.cross_check || !want_formula;
  if (want_formula && !formula)
    throw std::domain_error("no closed form applies to " + in.label);

  json values = json::object();
  std::vector<Count> seen;
  if (want_formula) {
    values[to_string(CountMethod::formula)] = formula->value.str();
    o.result["formula"] = formula->name;
    o.methods.push_back(to_string(CountMethod::formula));
    seen.push_back(formula->value);
  }
  if (want_brute) {
    const auto table = in.table(limits);
    const Count brute = count_series(table, limits).value;
    values[to_string(CountMethod::brute_force)] = brute.str();
    o.methods.push_back(to_string(CountMethod::brute_force));
    seen.push_back(brute);
  }
  if (opt.cross_check && in.spec && is_cyclic_spec(*in.spec)) {
    const Count n = spec_order(*in.spec);
    const Count dp = count_divisor_chains(n.convert_to<std::uint64_t>());
    values["divisor-chain"] = dp.str();
    o.methods.push_back("divisor-chain");
    seen.push_back(dp);
  }
  const bool agree = std::all_of(seen.begin(), seen.end(), [&](const Count& c) { return c == seen.front(); });
  o.result["count"] = seen.front().str();
  o.result["values"] = values;
  o.result["agree"] = agree;
  if (!agree)
    o.code = exit_mismatch;
  if (in.spec)
    cache.store(key, {{"result", o.result}});
  return o;
}

std::string count_text(const Outcome& o)
{
  std::ostringstream s;
  s << "group: " << o.inputs["group"].get<std::string>() << '\n';
  s << "count: " << o.result["count"].get<std::string>() << '\n';
  if (o.cache_hit) {
    s << "method: cached\n";
  } else {
    for (const auto& [method, value] : o.result["values"].items())
      s << method << ": " << value.get<std::string>() << '\n';
    if (o.result.contains("formula"))
      s << "closed form: " << o.result["formula"].get<std::string>() << '\n';
  }
  if (o.result["values"].size() > 1)
    s << (o.result["agree"].get<bool>() ? "methods agree\n" : "MISMATCH between methods\n");
  return s.str();
}

// enumerate

Outcome cmd_enumerate(const Options& opt, const Limits& limits, std::ostream& out)
{
  const auto in = group_input(opt);
  Outcome o;
  o.inputs = {{"group", in.label}};
  if (opt.limit)
    o.inputs["limit"] = *opt.limit;
  if (!opt.output.empty())
    o.inputs["output"] = opt.output;
  const auto table = in.table(limits);

  std::ofstream file;
  std::ostream* sink = &out;
  if (!opt.output.empty()) {
    file.open(opt.output, std::ios::trunc);
    if (!file)
      throw std::runtime_error("cannot open " + opt.output + " for writing");
    sink = &file;
  }
  std::size_t written = 0;
  for_each_series(table, [&](const CompositionChain& c) {
    *sink << to_json(c).dump() << '\n';
    ++written;
    return true;
  }, opt.limit, limits);
  o.result = {{"chains", written}};
  o.methods = {to_string(CountMethod::brute_force)};
  o.text = "chains: " + std::to_string(written) + "\n";
  return o;
}

// bound and sweep

Outcome cmd_bound(const Options& opt)
{
  Outcome o;
  o.inputs = {{"n", opt.n}};
  const Count b = bound(opt.n);
  o.result = {{"bound", b.str()}, {"floor_log2", floor_log(2, opt.n)}};
  o.methods = {to_string(CountMethod::formula)};
  o.text = "bound(" + std::to_string(opt.n) + ") = " + b.str() + "\n";
  return o;
}

Outcome cmd_sweep(const Options& opt)
{
  Outcome o;
  o.inputs = {{"max_n", opt.max_n}, {"jobs", opt.jobs}, {"per_order", opt.per_order}};
  const auto report = opt.per_order ? sweep_per_order(opt.max_n, opt.jobs)
                                    : sweep_fixed_bound(opt.max_n, opt.jobs);
  o.result = to_json(report);
  o.methods = {to_string(CountMethod::formula)};
  std::ostringstream s;
  s << "n: " << report.n << '\n'
    << "mode: " << (report.per_order ? "per-order" : "fixed bound") << '\n'
    << "orders checked: " << report.orders_checked << '\n'
    << "violations: " << report.violations.size() << '\n';
  for (const auto& v : report.violations)
    s << "  m=" << v.m << " (" << v.factorization.to_string() << "): " << v.candidate_count.str()
      << " > " << v.bound_value.str() << '\n';
  s << "equality attainers:";
  const std::size_t shown = std::min<std::size_t>(report.equality_attainers.size(), 20);
  for (std::size_t i = 0; i < shown; ++i)
    s << ' ' << report.equality_attainers[i];
  if (shown < report.equality_attainers.size())
    s << " ... (" << report.equality_attainers.size() << " total)";
  s << '\n'
    << "max ratio: " << format_ratio(report.max_ratio) << " at m=" << report.max_ratio_order << '\n'
    << "elapsed_ms: " << report.elapsed_ms << '\n';
  o.text = s.str();
  if (!report.violations.empty())
    o.code = exit_violation;
  return o;
}

// verify

Outcome cmd_verify(const Options& opt, const Limits& limits)
{
  Outcome o;
  o.inputs = {{"order_cap", opt.order_cap}};
  const auto checks = run_verification(opt.order_cap, limits);
  json rows = json::array();
  bool all = true;
  std::ostringstream s;
  for (const auto& c : checks) {
    rows.push_back(to_json(c));
    all = all && c.passed;
    s << (c.passed ? "PASS  " : "FAIL  ") << c.name << "  [" << c.cases << " cases, "
      << c.elapsed_ms << " ms]\n";
    if (!c.passed)
      s << "      " << c.detail << '\n';
    for (const auto& f : c.findings)
      s << "      note: " << f << '\n';
  }
  s << (all ? "all checks passed\n" : "some checks FAILED\n");
  o.result = {{"checks", rows}, {"passed", all}};
  o.methods = {to_string(CountMethod::brute_force), to_string(CountMethod::formula)};
  o.text = s.str();
  if (!all)
    o.code = exit_mismatch;
  return o;
}

// catalog and lattice

Outcome cmd_catalog(const Options& opt)
{
  if (opt.catalog_action != "list")
    throw std::domain_error("catalog: the only action is 'list'");
  Outcome o;
  o.inputs = {{"action", "list"}};
  json groups = json::array();
  std::ostringstream s;
  for (const auto& text : standard_roster()) {
    const auto spec = parse_spec(text);
    const auto canonical = to_string(spec);
    const auto order = spec_order(spec);
    groups.push_back({{"spec", canonical}, {"order", order.str()}, {"abelian", is_abelian_spec(spec)}});
    s << canonical << "  order " << order.str() << (is_abelian_spec(spec) ? "  abelian" : "") << '\n';
  }
  o.result = {{"groups", groups}};
  o.text = s.str();
  return o;
}

Outcome cmd_lattice(const Options& opt, const Limits& limits)
{
  const auto in = group_input(opt);
  Outcome o;
  o.inputs = {{"group", in.label}, {"what", opt.what}};
  const auto table = in.table(limits);
  auto set = [&] {
    if (opt.what == "subgroups")
      return all_subgroups(table, limits);
    if (opt.what == "normal")
      return normal_subgroups(table, limits);
    if (opt.what == "maximal-normal")
      return maximal_normal_subgroups(table, limits);
    throw std::domain_error("--what must be subgroups, normal or maximal-normal");
  }();
  set.sort();
  json items = json::array();
  std::ostringstream s;
  s << opt.what << " of " << in.label << ": " << set.size() << '\n';
  for (const auto& h : set) {
    items.push_back({{"order", h.order()}, {"members", member_list(h.members())}});
    s << "order " << h.order() << ":";
    for (auto x : h.elements())
      s << ' ' << x;
    s << '\n';
  }
  o.result = {{"count", set.size()}, {"subgroups", items}};
  o.methods = {to_string(CountMethod::brute_force)};
  o.text = s.str();
  return o;
}

} // namespace

Environment Environment::from_process()
{
  Environment env;
  if (const char* v = std::getenv("COMPSERIES_CACHE"))
    env.cache_dir = v;
  if (const char* v = std::getenv("COMPSERIES_ELEMENT_CAP"))
    env.element_cap = v;
  return env;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err,
        const Environment& env)
{
  Options opt;
  CLI::App app{"Count and enumerate composition series of small finite groups."};
  app.name("compseries");
  app.fallthrough();
  app.require_subcommand(1);
  app.add_flag("--json", opt.json, "Print the report as JSON");
  app.add_option("--element-cap", opt.element_cap, "Largest group order to materialize");

  auto add_group = [&](CLI::App* cmd) {
    auto* g = cmd->add_option("--group", opt.group, "Group spec, e.g. Z360, E(2,6), A5xA5");
    auto* f = cmd->add_option("--group-file", opt.group_file,
                              "JSON file {\"points\": n, \"generators\": [[...], ...]}");
    g->excludes(f);
  };

  auto* count = app.add_subcommand("count", "Count composition series");
  add_group(count);
  count->add_option("--mode", opt.mode, "auto, formula or brute")->check(
    CLI::IsMember({"auto", "formula", "brute"}));
  count->add_flag("--cross-check", opt.cross_check, "Run formula and brute force and compare");

  auto* enumerate = app.add_subcommand("enumerate", "List composition series as JSON lines");
  add_group(enumerate);
  enumerate->add_option("--limit", opt.limit, "Stop after this many chains");
  enumerate->add_option("--output", opt.output, "Write the chains to this file");

  auto* bound_cmd = app.add_subcommand("bound", "Upper bound for groups of order <= n");
  bound_cmd->add_option("n", opt.n, "Order bound (n >= 4)")->required();

  auto* sweep = app.add_subcommand("sweep", "Check the bound against every order up to n");
  sweep->add_option("--max-n", opt.max_n, "Largest order")->required();
  sweep->add_option("--jobs", opt.jobs, "Worker threads (0 = all cores)");
  sweep->add_flag("--per-order", opt.per_order, "Compare each order m against bound(m)");

  auto* verify = app.add_subcommand("verify", "Run the formula-versus-brute-force suite");
  verify->add_option("--order-cap", opt.order_cap, "Largest group order checked");

  auto* catalog = app.add_subcommand("catalog", "Built-in groups");
  catalog->add_option("action", opt.catalog_action, "list")->required();

  auto* lattice = app.add_subcommand("lattice", "List subgroups of a group");
  add_group(lattice);
  lattice->add_option("--what", opt.what, "subgroups, normal or maximal-normal")
    ->required()
    ->check(CLI::IsMember({"subgroups", "normal", "maximal-normal"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_parse;
  }

  const auto start = Clock::now();
  try {
    const Limits limits = make_limits(opt, env);
    Cache cache(env, err);
    Outcome o;
    std::string command;
    if (count->parsed()) {
      command = "count";
      o = cmd_count(opt, limits, cache);
      o.text = count_text(o);
    } else if (enumerate->parsed()) {
      command = "enumerate";
      o = cmd_enumerate(opt, limits, out);
    } else if (bound_cmd->parsed()) {
      command = "bound";
      o = cmd_bound(opt);
    } else if (sweep->parsed()) {
      command = "sweep";
      o = cmd_sweep(opt);
    } else if (verify->parsed()) {
      command = "verify";
      o = cmd_verify(opt, limits);
    } else if (catalog->parsed()) {
      command = "catalog";
      o = cmd_catalog(opt);
    } else {
      command = "lattice";
      o = cmd_lattice(opt, limits);
    }
    if (opt.json) {
      json report = {{"command", command},       {"inputs", o.inputs},
                     {"result", o.result},       {"methods", o.methods},
                     {"elapsed_ms", ms_since(start)}, {"cache_hit", o.cache_hit}};
      out << report.dump() << '\n';
    } else {
      out << o.text;
    }
    return o.code;
  } catch (const parse_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const capacity_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_capacity;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return exit_parse;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_failure;
  }
}

} // namespace compseries::cli
