#include "boolgb/oracle.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <istream>
#include <ostream>
#include <cstdio>
#include <thread>

namespace boolgb {

SolutionSet::SolutionSet(std::uint32_t n, std::vector<std::uint64_t> points)
    : n_(n), points_(std::move(points)) {
  std::sort(points_.begin(), points_.end());
  points_.erase(std::unique(points_.begin(), points_.end()), points_.end());
}

bool SolutionSet::contains(std::uint64_t point) const {
  return std::binary_search(points_.begin(), points_.end(), point);
}

namespace {

// Each term as a support bitmask; exponents do not matter on {0,1}.
struct CompiledPoly {
  std::vector<std::uint64_t> masks;
  std::uint64_t support = 0;

  bool vanishes_at(std::uint64_t point) const {
    unsigned parity = 0;
    for (auto m : masks) parity ^= (point & m) == m ? 1u : 0u;
    return parity == 0;
  }
};

CompiledPoly compile(const Polynomial& f, std::uint32_t num_vars) {
  if (f.var_bound() > num_vars) {
    throw ArityMismatch("polynomial " + format_poly(f) + " uses variables beyond " +
                        std::to_string(num_vars));
  }
  CompiledPoly out;
  for (const auto& t : f.terms()) {
    std::uint64_t mask = 0;
    for (const auto& p : t.powers()) mask |= std::uint64_t{1} << p.var;
    out.masks.push_back(mask);
    out.support |= mask;
  }
  return out;
}

}  // namespace

int evaluate(const Polynomial& f, const Point& p) {
  if (p.num_vars() > 64) throw ArityMismatch("points are limited to 64 variables");
  return compile(f, p.num_vars()).vanishes_at(p.bits) ? 0 : 1;
}

SolutionSet enumerate_solutions(const GeneratorSet& generators, std::uint32_t n,
                                const EnumerationLimits& limits) {
  const std::uint32_t num_vars = 3 * n;
  if (num_vars > limits.max_vars || num_vars > 63) {
    throw TooManyVariables("enumeration over " + std::to_string(num_vars) +
                           " variables exceeds the cap of " + std::to_string(limits.max_vars));
  }
  std::vector<CompiledPoly> compiled;
  for (const auto& f : generators.polynomials()) compiled.push_back(compile(f, num_vars));
  // Small supports first: they reject most points cheaply.
  std::stable_sort(compiled.begin(), compiled.end(), [](const auto& a, const auto& b) {
    return std::popcount(a.support) < std::popcount(b.support);
  });

  const std::uint64_t total = std::uint64_t{1} << num_vars;
  auto scan = [&](std::uint64_t lo, std::uint64_t hi, std::vector<std::uint64_t>& out) {
    for (std::uint64_t p = lo; p < hi; ++p) {
      bool ok = std::all_of(compiled.begin(), compiled.end(),
                            [p](const CompiledPoly& c) { return c.vanishes_at(p); });
      if (ok) out.push_back(p);
    }
  };

  unsigned threads = limits.threads != 0 ? limits.threads : std::thread::hardware_concurrency();
  if (threads == 0 || total < (std::uint64_t{1} << 16)) threads = 1;
  std::vector<std::vector<std::uint64_t>> parts(threads);
  if (threads == 1) {
    scan(0, total, parts[0]);
  } else {
    std::vector<std::jthread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (unsigned t = 0; t < threads; ++t) {
      std::uint64_t lo = std::min(total, t * chunk);
      std::uint64_t hi = std::min(total, lo + chunk);
      workers.emplace_back([&, lo, hi, t] { scan(lo, hi, parts[t]); });
    }
  }
  std::vector<std::uint64_t> points;
  for (auto& part : parts) points.insert(points.end(), part.begin(), part.end());
  return SolutionSet(n, std::move(points));
}

SolutionSet enumerate_solutions(const GeneratorSet& generators, const EnumerationLimits& limits) {
  return enumerate_solutions(generators, generators.n(), limits);
}

bool solution_sets_equal(const GeneratorSet& a, const GeneratorSet& b,
                         const EnumerationLimits& limits) {
  if (a.n() != b.n()) throw Error("generator sets live over different numbers of blocks");
  return enumerate_solutions(a, limits) == enumerate_solutions(b, limits);
}

bool contains_field_polynomials(const GeneratorSet& generators) {
  if (generators.mode() == Mode::BooleanRing) return true;
  for (const auto& s : field_polynomials(generators.n())) {
    auto polys = generators.polynomials();
    if (std::find(polys.begin(), polys.end(), s) == polys.end()) return false;
  }
  return true;
}

bool membership_by_evaluation(const Polynomial& f, const GeneratorSet& generators,
                              const EnumerationLimits& limits) {
  if (!contains_field_polynomials(generators)) throw FieldPolysMissing();
  const SolutionSet solutions = enumerate_solutions(generators, limits);
  const CompiledPoly c = compile(f, 3 * generators.n());
  return std::all_of(solutions.points().begin(), solutions.points().end(),
                     [&](std::uint64_t p) { return c.vanishes_at(p); });
}

void write_solution_set(std::ostream& out, const SolutionSet& solutions) {
  const std::uint32_t width = (3 * solutions.n() + 3) / 4;
  out << "# n=" << solutions.n() << " count=" << solutions.size() << '\n';
  char buf[32];
  for (auto p : solutions.points()) {
    auto [end, ec] = std::to_chars(buf, buf + sizeof buf, p, 16);
    std::string digits(buf, end);
    if (digits.size() < width) digits.insert(0, width - digits.size(), '0');
    out << digits << '\n';
  }
}

SolutionSet read_solution_set(std::istream& in) {
  std::string line;
  if (!std::getline(in, line)) throw Error("empty solution-set file");
  unsigned n = 0;
  unsigned long long count = 0;
  if (std::sscanf(line.c_str(), "# n=%u count=%llu", &n, &count) != 2) {
    throw Error("malformed solution-set header: " + line);
  }
  std::vector<std::uint64_t> points;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(line.data(), line.data() + line.size(), value, 16);
    if (ec != std::errc{} || ptr != line.data() + line.size()) {
      throw Error("malformed solution point: " + line);
    }
    points.push_back(value);
  }
  if (points.size() != count) throw Error("solution-set count does not match header");
  return SolutionSet(n, std::move(points));
}

}  // namespace boolgb
