#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "boolgb/groebner.hpp"
#include "boolgb/polynomial.hpp"

namespace boolgb {

/// An assignment in F2^{3n}. Bit `flat` of `bits` holds the value of the
/// variable with that flat index.
struct Point {
  std::uint64_t bits = 0;
  std::uint32_t n = 0;

  std::uint32_t num_vars() const { return 3 * n; }
  int value(VarIndex var) const { return static_cast<int>((bits >> var) & 1u); }
};

/// Sorted, duplicate-free set of points over 3n variables.
class SolutionSet {
 public:
  SolutionSet(std::uint32_t n, std::vector<std::uint64_t> points);

  std::uint32_t n() const { return n_; }
  std::size_t size() const { return points_.size(); }
  const std::vector<std::uint64_t>& points() const { return points_; }
  bool contains(std::uint64_t point) const;

  friend bool operator==(const SolutionSet&, const SolutionSet&) = default;

 private:
  std::uint32_t n_;
  std::vector<std::uint64_t> points_;
};

struct EnumerationLimits {
  std::uint32_t max_vars = 24;
  /// 0 picks std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// 0 or 1. Throws ArityMismatch if `f` mentions a variable outside the point.
int evaluate(const Polynomial& f, const Point& p);

/// Every point of F2^{3n} where all generators vanish. This is Sol over the
/// algebraic closure only when the generators contain the field polynomials.
/// Throws TooManyVariables when 3n exceeds the cap.
SolutionSet enumerate_solutions(const GeneratorSet& generators, std::uint32_t n,
                                const EnumerationLimits& limits = {});
SolutionSet enumerate_solutions(const GeneratorSet& generators,
                                const EnumerationLimits& limits = {});

/// Throws Error when the two sets have different n.
bool solution_sets_equal(const GeneratorSet& a, const GeneratorSet& b,
                         const EnumerationLimits& limits = {});

/// True when every field polynomial of blocks 1..n is a generator, or the
/// set lives in the Boolean ring where they are implicit.
bool contains_field_polynomials(const GeneratorSet& generators);

/// Membership decided by evaluation on all solutions. Sound only for radical
/// ideals whose solutions are F2-rational, hence the structural check.
/// Throws FieldPolysMissing.
bool membership_by_evaluation(const Polynomial& f, const GeneratorSet& generators,
                              const EnumerationLimits& limits = {});

/// "# n=<n> count=<k>" followed by one zero-padded lowercase hex point per line.
void write_solution_set(std::ostream& out, const SolutionSet& solutions);
SolutionSet read_solution_set(std::istream& in);

}  // namespace boolgb
