#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include "boolgb/errors.hpp"
#include "boolgb/polynomial.hpp"

namespace boolgb {

/// Generators of an ideal in a fixed ring mode, over variables of blocks 1..n.
/// Construction drops zero polynomials and repeated generators (first
/// occurrence wins).
class GeneratorSet {
 public:
  GeneratorSet(std::vector<Polynomial> polynomials, std::uint32_t n, Mode mode,
               MonomialOrder order = kDegLex);

  std::span<const Polynomial> polynomials() const { return polynomials_; }
  std::size_t size() const { return polynomials_.size(); }
  std::uint32_t n() const { return n_; }
  Mode mode() const { return mode_; }
  const MonomialOrder& order() const { return order_; }

 private:
  std::vector<Polynomial> polynomials_;
  std::uint32_t n_;
  Mode mode_;
  MonomialOrder order_;
};

/// Basis elements sorted ascending by leading monomial. `reduced` is a cache
/// of how the basis was produced, not a proof; use is_reduced_basis to check.
struct GroebnerBasis {
  std::vector<Polynomial> elements;
  std::uint32_t n = 0;
  Mode mode = Mode::FullRing;
  MonomialOrder order = kDegLex;
  bool reduced = false;

  std::size_t size() const { return elements.size(); }
};

struct ReductionStats {
  std::uint64_t pairs_generated = 0;
  std::uint64_t pairs_skipped_by_criteria = 0;
  std::uint64_t reductions_to_zero = 0;
  std::uint64_t basis_insertions = 0;
  std::chrono::nanoseconds wall_time{0};

  /// Flat "key=value" lines.
  std::string to_key_values() const;
};

/// A Buchberger run exceeded its configured caps.
class ResourceLimit : public Error {
 public:
  ResourceLimit(const std::string& what, ReductionStats stats)
      : Error(what), stats_(stats) {}
  const ReductionStats& stats() const noexcept { return stats_; }

 private:
  ReductionStats stats_;
};

struct BuchbergerLimits {
  std::uint64_t max_pairs = 1'000'000;
  std::uint64_t max_basis = 100'000;
};

struct BuchbergerResult {
  GroebnerBasis basis;
  ReductionStats stats;
};

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g, const MonomialOrder& order);

/// Full reduction of `f` by `divisors`. The largest reducible monomial is
/// always eliminated next, using the first divisor (in list order) whose
/// leading monomial divides it.
Polynomial normal_form(const Polynomial& f, std::span<const Polynomial> divisors,
                       const MonomialOrder& order);

/// Buchberger's algorithm with the normal selection strategy (smallest lcm
/// degree, then smallest lcm under the order), the product criterion and the
/// Gebauer-Moeller chain criterion. In BooleanRing mode the field polynomials
/// v^2 + v are implicit: for every new element f and every v in the support of
/// lm(f), v*f is reduced as an extra pair.
///
/// Throws ResourceLimit.
BuchbergerResult buchberger(const GeneratorSet& generators, const BuchbergerLimits& limits = {});

/// Minimalises and tail-reduces a Groebner basis into the unique reduced
/// basis. With `strict`, discarded elements are checked to reduce to zero
/// and NotAGroebnerBasis is thrown otherwise.
GroebnerBasis interreduce(const GroebnerBasis& basis, bool strict = false);

/// buchberger followed by interreduce.
GroebnerBasis reduced_groebner_basis(const GeneratorSet& generators,
                                     const BuchbergerLimits& limits = {},
                                     ReductionStats* stats = nullptr);

/// Checks every S-polynomial (and, in BooleanRing mode, every implicit
/// field-polynomial pair) reduces to zero. Only the product criterion is
/// used to skip pairs.
bool is_groebner_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

/// Leading monomials pairwise non-divisible (and distinct).
bool is_minimal_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

/// Minimal, and no monomial of any element is divisible by the leading
/// monomial of another element.
bool is_reduced_basis(std::span<const Polynomial> basis, const MonomialOrder& order);

/// Throws ModeMismatch if `f` is not in the basis' ring mode.
bool ideal_membership(const Polynomial& f, const GroebnerBasis& basis);

/// The field polynomials v^2 + v for every variable of blocks 1..n, in flat
/// variable order (FullRing mode).
std::vector<Polynomial> field_polynomials(std::uint32_t n);

/// Sorts ascending by leading monomial.
void sort_by_leading_monomial(std::vector<Polynomial>& polys, const MonomialOrder& order);

enum class Engine { Full, Boolean, Both };

std::string to_string(Engine engine);
Engine engine_from_string(const std::string& text);

/// Reduced FullRing basis of (generators) + (field polynomials).
///
/// Full: Buchberger in the full ring with the field polynomials adjoined.
/// Boolean: Buchberger in the Boolean ring, then the field polynomials are
/// adjoined and the union interreduced in the full ring. Both: runs the two
/// and throws EngineMismatch if they disagree.
GroebnerBasis field_closed_basis(const GeneratorSet& generators, Engine engine,
                                 const BuchbergerLimits& limits = {},
                                 ReductionStats* stats = nullptr);

/// Lifts a BooleanRing reduced basis to the reduced FullRing basis of the
/// same ideal with the field polynomials included.
GroebnerBasis lift_boolean_basis(const GroebnerBasis& boolean_basis);

/// Basis dump:
///   {"n": 2, "mode": "full", "order": "deglex", "elements": [
///     [[[0,1],[1,1]],[[0,1]]],
///     ...]}
/// Each element is a list of monomials (descending), each monomial a list of
/// [flat variable, exponent] pairs. Elements ascend by leading monomial.
void write_basis_json(std::ostream& out, const GroebnerBasis& basis);
/// Throws Error on malformed input.
GroebnerBasis read_basis_json(std::istream& in);

/// Canonical text of every element, sorted; handy for set comparisons.
std::vector<std::string> canonical_strings(std::span<const Polynomial> polys,
                                           const MonomialOrder& order = kDegLex);

}  // namespace boolgb
