#include "compseries/bounds.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <stdexcept>
#include <thread>

namespace compseries {

namespace {

constexpr std::uint32_t prime_table_limit = 1u << 20;

bool is_prime_fast(std::uint64_t p)
{
  static const PrimeSieve sieve(prime_table_limit);
  if (p <= prime_table_limit)
    return sieve.is_prime(static_cast<std::uint32_t>(p));
  return is_prime(p);
}

// prod_{i=from..to} (2^i - 1)
Count mersenne_product(unsigned from, unsigned to)
{
  Count v = 1;
  for (unsigned i = from; i <= to; ++i)
    v *= (Count(1) << i) - 1;
  return v;
}

Count gaussian_product(std::uint64_t p, unsigned k)
{
  Count v = 1;
  Count pj = 1;
  for (unsigned j = 1; j <= k; ++j) {
    pj *= p;
    v *= (pj - 1) / (p - 1);
  }
  return v;
}

unsigned floor_log2(const Count& t)
{
  return static_cast<unsigned>(boost::multiprecision::msb(t));
}

void require_odd_prime_domain(std::uint64_t p, unsigned alpha_r, const char* where)
{
  if (p < 3 || !is_prime_fast(p))
    throw std::domain_error(std::string(where) + ": p must be an odd prime");
  if (alpha_r == 0)
    throw std::domain_error(std::string(where) + ": alpha_r must be positive");
  if (p == 3 && alpha_r == 1)
    throw std::domain_error(std::string(where) + ": the case p = 3, alpha_r = 1 is excluded");
}

} // namespace

unsigned floor_log(std::uint64_t base, std::uint64_t n)
{
  if (base < 2 || n < 1)
    throw std::domain_error("floor_log: need base >= 2 and n >= 1");
  unsigned e = 0;
  std::uint64_t power = 1;
  while (power <= n / base) {
    power *= base;
    ++e;
  }
  return e;
}

Count bound(std::uint64_t n)
{
  if (n < 4)
    throw std::domain_error("bound: n must be at least 4");
  return mersenne_product(1, floor_log(2, n));
}

bool check_power_of_two_vs_hyperplanes(std::uint64_t n, std::uint64_t p)
{
  if (n < 4)
    throw std::domain_error("hyperplane comparison: n must be at least 4");
  if (p < 3 || p > n || !is_prime_fast(p))
    throw std::domain_error("hyperplane comparison: p must be an odd prime not exceeding n");
  const std::uint64_t lhs = (std::uint64_t{1} << floor_log(2, n)) - 1;
  std::uint64_t pe = 1;
  while (pe <= n / p)
    pe *= p;
  const std::uint64_t rhs = (pe - 1) / (p - 1);
  return lhs > rhs;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> power_of_two_vs_hyperplanes_failures(std::uint64_t max_n)
{
  if (max_n > prime_table_limit)
    throw capacity_error("hyperplane comparison grid: max_n above " + std::to_string(prime_table_limit));
  std::vector<std::pair<std::uint64_t, std::uint64_t>> failures;
  if (max_n < 4)
    return failures;
  std::vector<std::uint64_t> lhs(max_n + 1);
  for (std::uint64_t n = 1, pow2 = 1; n <= max_n; ++n) {
    if (pow2 * 2 <= n)
      pow2 *= 2;
    lhs[n] = pow2 - 1;
  }
  const PrimeSieve sieve(static_cast<std::uint32_t>(max_n));
  for (std::uint64_t p : sieve.primes()) {
    if (p < 3)
      continue;
    // pe = p^floor(log_p n), rhs = (pe - 1)/(p - 1)
    std::uint64_t pe = p, rhs = 1;
    for (std::uint64_t n = std::max<std::uint64_t>(p, 4); n <= max_n; ++n) {
      while (pe <= n / p) {
        pe *= p;
        rhs = rhs * p + 1;
      }
      if (lhs[n] <= rhs)
        failures.emplace_back(n, p);
    }
  }
  std::sort(failures.begin(), failures.end());
  return failures;
}

bool check_p_group_bound(std::uint64_t n, std::uint64_t p)
{
  if (n < 4)
    throw std::domain_error("p-group bound: n must be at least 4");
  if (p < 3 || p > n || !is_prime_fast(p))
    throw std::domain_error("p-group bound: p must be an odd prime not exceeding n");
  return bound(n) > gaussian_product(p, floor_log(p, n));
}

InequalityParams InequalityParams::make(unsigned alpha1, unsigned alpha_r, std::uint64_t p, unsigned s)
{
  require_odd_prime_domain(p, alpha_r, "inequality parameters");
  if (s < alpha1)
    throw std::domain_error("inequality parameters: s must be at least alpha1");
  InequalityParams params;
  params.alpha1 = alpha1;
  params.alpha_r = alpha_r;
  params.p = p;
  params.s = s;
  params.k = floor_log2(ipow(p, alpha_r));
  params.a = s - alpha1;
  params.b = params.k - alpha_r;
  params.validate();
  return params;
}

void InequalityParams::validate() const
{
  require_odd_prime_domain(p, alpha_r, "inequality parameters");
  if (k != floor_log2(ipow(p, alpha_r)))
    throw std::domain_error("inequality parameters: k is not floor(log2 p^alpha_r)");
  if (s < alpha1 || a != s - alpha1)
    throw std::domain_error("inequality parameters: a must equal s - alpha1 >= 0");
  if (k <= alpha_r || b != k - alpha_r)
    throw std::domain_error("inequality parameters: b must equal k - alpha_r >= 1");
}

Rational alpha_ratio(const InequalityParams& q)
{
  q.validate();
  const Count x = mersenne_product(q.alpha1 + 1, q.alpha1 + q.k) * factorial(q.alpha1) *
                  factorial(q.alpha_r);
  const Count y = gaussian_product(q.p, q.alpha_r) * factorial(q.alpha1 + q.alpha_r);
  return Rational(x, y);
}

bool alpha_ratio_step_exceeds_one(const InequalityParams& q)
{
  q.validate();
  const Count lhs = ((Count(1) << (q.alpha1 + q.k + 1)) - 1) * (q.alpha1 + 1);
  const Count rhs = ((Count(1) << (q.alpha1 + 1)) - 1) * (q.alpha1 + q.alpha_r + 1);
  return lhs > rhs;
}

Rational alpha_ratio_step(const InequalityParams& q)
{
  q.validate();
  return Rational((Count(1) << (q.alpha1 + q.k + 1)) - 1, (Count(1) << (q.alpha1 + 1)) - 1) *
         Rational(q.alpha1 + 1, q.alpha1 + q.alpha_r + 1);
}

bool check_reduction_inequality(const InequalityParams& q)
{
  q.validate();
  const Count lhs = mersenne_product(q.alpha1 + 1, q.alpha1 + q.k) * factorial(q.k + q.s) *
                    factorial(q.alpha1) * factorial(q.alpha_r);
  const Count rhs = gaussian_product(q.p, q.alpha_r) * factorial(q.alpha1 + q.k) *
                    factorial(q.alpha_r + q.s);
  return lhs > rhs;
}

bool check_reduction_inequality_ab(const InequalityParams& q)
{
  q.validate();
  const unsigned base = q.alpha1 + q.alpha_r;
  const Count lhs = mersenne_product(q.alpha1 + 1, q.alpha1 + q.k) *
                    factorial(base + q.a + q.b) * factorial(q.alpha1) * factorial(q.alpha_r);
  const Count rhs = gaussian_product(q.p, q.alpha_r) * factorial(base + q.a) *
                    factorial(base + q.b);
  return lhs > rhs;
}

bool check_reduction_inequality_cancelled(const InequalityParams& q)
{
  q.validate();
  const Count lhs = mersenne_product(q.alpha1 + 1, q.alpha1 + q.k) * factorial(q.alpha1) *
                    factorial(q.alpha_r);
  const Count rhs = gaussian_product(q.p, q.alpha_r) * factorial(q.alpha1 + q.alpha_r);
  return lhs > rhs;
}

Rational factorial_ratio(unsigned alpha1, unsigned alpha_r, unsigned a, unsigned b)
{
  const unsigned base = alpha1 + alpha_r;
  return Rational(factorial(base + a + b) * factorial(alpha1) * factorial(alpha_r),
                  factorial(base + a) * factorial(base + b));
}

bool check_induction_base(std::uint64_t p, unsigned alpha_r)
{
  require_odd_prime_domain(p, alpha_r, "induction base");
  return ipow(p, alpha_r) > Count(2) * alpha_r + 2;
}

bool check_power_exceeds_linear(unsigned alpha1)
{
  if (alpha1 == 0)
    throw std::domain_error("power comparison: alpha1 must be positive");
  return (Count(1) << (alpha1 + 1)) > Count(alpha1) + 2;
}

namespace {

struct Chunk {
  std::vector<SweepRecord> violations;
  std::vector<std::uint64_t> attainers;
  Count best_count = 0;
  Count best_bound = 1;
  std::uint64_t best_order = 0;
};

SweepReport run_sweep(std::uint64_t n, unsigned jobs, std::uint64_t cap, bool per_order)
{
  if (n < 4)
    throw std::domain_error("sweep: n must be at least 4");
  if (n > cap)
    throw capacity_error("sweep: n = " + std::to_string(n) + " exceeds the sweep cap " +
                         std::to_string(cap));
  if (n > std::numeric_limits<std::uint32_t>::max())
    throw capacity_error("sweep: n must fit the 32-bit sieve");
  const auto start = std::chrono::steady_clock::now();
  const PrimeSieve sieve(static_cast<std::uint32_t>(n));

  const unsigned top_log = floor_log(2, n);
  std::vector<Count> bound_by_log(top_log + 1, 1);
  for (unsigned e = 1; e <= top_log; ++e)
    bound_by_log[e] = bound_by_log[e - 1] * ((Count(1) << e) - 1);

  if (jobs == 0)
    jobs = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t total = n - 3;
  jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, total));
  std::vector<Chunk> chunks(jobs);

  auto work = [&](unsigned id) {
    Chunk& out = chunks[id];
    const std::uint64_t lo = 4 + total * id / jobs;
    const std::uint64_t hi = 4 + total * (id + 1) / jobs;
    for (std::uint64_t m = lo; m < hi; ++m) {
      auto f = sieve.factorize(static_cast<std::uint32_t>(m));
      Count candidate = count_abelian_elem_sylow(f);
      const Count& limit = bound_by_log[per_order ? floor_log(2, m) : top_log];
      if (candidate > limit) {
        out.violations.push_back({m, std::move(f), candidate, limit, false});
      } else if (candidate == limit) {
        out.attainers.push_back(m);
      } else if (candidate * out.best_bound > out.best_count * limit) {
        out.best_count = candidate;
        out.best_bound = limit;
        out.best_order = m;
      }
    }
  };

  if (jobs == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (unsigned id = 0; id < jobs; ++id)
      threads.emplace_back(work, id);
    for (auto& t : threads)
      t.join();
  }

  SweepReport report;
  report.n = n;
  report.per_order = per_order;
  report.orders_checked = total;
  Count best_count = 0, best_bound = 1;
  for (auto& c : chunks) {
    for (auto& v : c.violations)
      report.violations.push_back(std::move(v));
    report.equality_attainers.insert(report.equality_attainers.end(), c.attainers.begin(),
                                     c.attainers.end());
    if (c.best_order != 0 && c.best_count * best_bound > best_count * c.best_bound) {
      best_count = c.best_count;
      best_bound = c.best_bound;
      report.max_ratio_order = c.best_order;
    }
  }
  report.max_ratio = Rational(best_count, best_bound);
  report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start).count();
  return report;
}

} // namespace

SweepReport sweep_fixed_bound(std::uint64_t n, unsigned jobs, std::uint64_t cap)
{
  return run_sweep(n, jobs, cap, false);
}

SweepReport sweep_per_order(std::uint64_t n, unsigned jobs, std::uint64_t cap)
{
  return run_sweep(n, jobs, cap, true);
}

std::string format_ratio(const Rational& r, unsigned digits)
{
  if (r < 0)
    return "-" + format_ratio(-r, digits);
  const Count scale = boost::multiprecision::pow(Count(10), digits);
  const Count num = boost::multiprecision::numerator(r);
  const Count den = boost::multiprecision::denominator(r);
  const Count scaled = (2 * num * scale + den) / (2 * den);
  const Count whole = scaled / scale;
  if (digits == 0)
    return whole.str();
  std::string frac = Count(scaled % scale).str();
  frac.insert(0, digits - frac.size(), '0');
  return whole.str() + "." + frac;
}

nlohmann::json to_json(const SweepRecord& r)
{
  return {{"m", r.m},
          {"factorization", r.factorization.to_string()},
          {"candidate_count", r.candidate_count.str()},
          {"bound_value", r.bound_value.str()},
          {"is_equality", r.is_equality}};
}

nlohmann::json to_json(const SweepReport& report)
{
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : report.violations)
    violations.push_back(to_json(v));
  return {{"n", report.n},
          {"mode", report.per_order ? "per-order" : "fixed-bound"},
          {"orders_checked", report.orders_checked},
          {"violations", violations},
          {"equality_attainers", report.equality_attainers},
          {"max_ratio", format_ratio(report.max_ratio)},
          {"max_ratio_order", report.max_ratio_order},
          {"elapsed_ms", report.elapsed_ms}};
}

} // namespace compseries
