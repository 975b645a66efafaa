#pragma once

#include <chrono>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "boolgb/groebner.hpp"
#include "boolgb/oracle.hpp"

namespace boolgb {

inline constexpr std::uint32_t kDefaultMaxN = 12;

struct InstanceParams {
  std::uint32_t n = 1;
  Mode mode = Mode::FullRing;
  MonomialOrder order = kDegLex;
  /// make_P and everything built on it refuse n above this.
  std::uint32_t max_n = kDefaultMaxN;
};

/// Field polynomials c^2 + c, one per variable, flat order. FullRing only.
std::vector<Polynomial> make_S(std::uint32_t n);
/// x_i*y_i + x_i + y_i + z_i for i = 1..n.
std::vector<Polynomial> make_L(std::uint32_t n, Mode mode = Mode::FullRing);
/// x_i*z_i + x_i for all i, then y_i*z_i + y_i for all i.
std::vector<Polynomial> make_T(std::uint32_t n, Mode mode = Mode::FullRing);
/// All 3^n products c_1*...*c_n with c_i in {x_i, y_i, z_i}, enumerated with
/// block 1 varying slowest and x < y < z within a block. Throws ResourceLimit
/// when n > max_n.
std::vector<Polynomial> make_P(std::uint32_t n, Mode mode = Mode::FullRing,
                               std::uint32_t max_n = kDefaultMaxN);

/// S_n + L_n + {z_1*...*z_n}. In BooleanRing mode S_n is implicit and omitted.
GeneratorSet make_H(const InstanceParams& params);
/// S_n + L_n + T_n + P_n (S_n omitted in BooleanRing mode).
GeneratorSet make_G(const InstanceParams& params);

/// Family selected by letter: H, G, S, L, T or P.
GeneratorSet make_family(char family, const InstanceParams& params);

/// 8 * byte length of the canonical text: one polynomial per line, terms
/// descending in the set's order, joined by " + ".
std::uint64_t input_bitsize(const GeneratorSet& generators);
std::string canonical_text(const GeneratorSet& generators);

std::uint32_t max_degree(const GeneratorSet& generators);

/// 6n + 3^n. Throws std::overflow_error past 64 bits.
std::uint64_t predicted_gb_size(std::uint32_t n);
/// 4^n - 3^n.
std::uint64_t predicted_solution_count(std::uint32_t n);

/// Number of monomials divisible by no leading monomial of `basis`.
/// Every variable of blocks 1..n needs an exponent bound: a pure power v^e
/// among the leading monomials, or the implicit v^2 of the Boolean ring.
/// Throws NotZeroDimensional, or ResourceLimit when more than
/// `max_candidates` exponent vectors would have to be scanned.
std::uint64_t count_standard_monomials(const GroebnerBasis& basis, std::uint32_t n,
                                       std::uint64_t max_candidates = std::uint64_t{1} << 28);

struct GrowthRecord {
  std::uint32_t n = 0;
  std::uint64_t input_count = 0;
  std::uint64_t input_bitsize = 0;
  std::uint32_t input_max_degree = 0;
  std::optional<std::uint64_t> gb_count;  // empty when the run hit a cap
  std::uint64_t predicted_gb_count = 0;
  std::optional<std::uint64_t> solution_count;  // empty past the enumeration cap
  std::uint64_t predicted_solution_count = 0;
  std::chrono::nanoseconds wall_time{0};
};

/// Builds H_n in the full ring, computes its reduced basis with `engine`, and
/// counts solutions by enumeration when within `enumeration` caps.
GrowthRecord measure_growth(std::uint32_t n, const MonomialOrder& order, Engine engine,
                            const BuchbergerLimits& limits = {},
                            const EnumerationLimits& enumeration = {},
                            std::uint32_t max_n = kDefaultMaxN);

/// Generator-set file: header "# n=<n> mode=<mode>", then one canonical
/// polynomial per line. Lines starting with '#' are comments.
void write_generator_file(std::ostream& out, const GeneratorSet& generators);
/// The header must precede the first polynomial. Throws SyntaxError (with the
/// line number) or UnknownVariable.
GeneratorSet read_generator_file(std::istream& in, const MonomialOrder& order = kDegLex);

}  // namespace boolgb
