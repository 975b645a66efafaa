#include "boolgb/construction.hpp"

#include <algorithm>
#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>

namespace boolgb {

namespace {

VarIndex var(std::uint32_t block, VarKind kind) { return VarId{block, kind}.flat(); }

Monomial mono(std::initializer_list<VarIndex> vars) {
  std::vector<VarPower> powers;
  for (VarIndex v : vars) powers.push_back({v, 1});
  return Monomial::from_powers(std::move(powers));
}

void require_n(std::uint32_t n) {
  if (n < 1) throw Error("instance size n must be at least 1");
}

std::uint64_t checked_pow(std::uint64_t base, std::uint32_t exp) {
  std::uint64_t out = 1;
  for (std::uint32_t i = 0; i < exp; ++i) {
    if (out > UINT64_MAX / base) throw std::overflow_error("power exceeds 64 bits");
    out *= base;
  }
  return out;
}

void append(std::vector<Polynomial>& out, std::vector<Polynomial> more) {
  out.insert(out.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
}

}  // namespace

std::vector<Polynomial> make_S(std::uint32_t n) {
  require_n(n);
  return field_polynomials(n);
}

std::vector<Polynomial> make_L(std::uint32_t n, Mode mode) {
  require_n(n);
  std::vector<Polynomial> out;
  for (std::uint32_t i = 1; i <= n; ++i) {
    VarIndex x = var(i, VarKind::X), y = var(i, VarKind::Y), z = var(i, VarKind::Z);
    out.push_back(Polynomial::from_terms({mono({x, y}), mono({x}), mono({y}), mono({z})}, mode));
  }
  return out;
}

std::vector<Polynomial> make_T(std::uint32_t n, Mode mode) {
  require_n(n);
  std::vector<Polynomial> out;
  for (VarKind kind : {VarKind::X, VarKind::Y}) {
    for (std::uint32_t i = 1; i <= n; ++i) {
      VarIndex c = var(i, kind), z = var(i, VarKind::Z);
      out.push_back(Polynomial::from_terms({mono({c, z}), mono({c})}, mode));
    }
  }
  return out;
}

std::vector<Polynomial> make_P(std::uint32_t n, Mode mode, std::uint32_t max_n) {
  require_n(n);
  if (n > max_n) {
    throw ResourceLimit("P_n has 3^" + std::to_string(n) + " elements; n is capped at " +
                            std::to_string(max_n),
                        {});
  }
  const std::uint64_t count = checked_pow(3, n);
  std::vector<Polynomial> out;
  out.reserve(count);
  std::vector<std::uint8_t> choice(n, 0);  // mixed-radix counter, block n fastest
  for (std::uint64_t k = 0; k < count; ++k) {
    std::vector<VarPower> powers;
    for (std::uint32_t i = 0; i < n; ++i) {
      powers.push_back({var(i + 1, static_cast<VarKind>(choice[i])), 1});
    }
    out.push_back(Polynomial::monomial(Monomial::from_powers(std::move(powers)), mode));
    for (std::uint32_t i = n; i-- > 0;) {
      if (++choice[i] < 3) break;
      choice[i] = 0;
    }
  }
  return out;
}

GeneratorSet make_H(const InstanceParams& params) {
  const std::uint32_t n = params.n;
  std::vector<Polynomial> polys;
  if (params.mode == Mode::FullRing) append(polys, make_S(n));
  append(polys, make_L(n, params.mode));
  std::vector<VarPower> zs;
  for (std::uint32_t i = 1; i <= n; ++i) zs.push_back({var(i, VarKind::Z), 1});
  polys.push_back(Polynomial::monomial(Monomial::from_powers(std::move(zs)), params.mode));
  return GeneratorSet(std::move(polys), n, params.mode, params.order);
}

GeneratorSet make_G(const InstanceParams& params) {
  const std::uint32_t n = params.n;
  std::vector<Polynomial> polys;
  if (params.mode == Mode::FullRing) append(polys, make_S(n));
  append(polys, make_L(n, params.mode));
  append(polys, make_T(n, params.mode));
  append(polys, make_P(n, params.mode, params.max_n));
  return GeneratorSet(std::move(polys), n, params.mode, params.order);
}

GeneratorSet make_family(char family, const InstanceParams& params) {
  auto wrap = [&](std::vector<Polynomial> polys) {
    return GeneratorSet(std::move(polys), params.n, params.mode, params.order);
  };
  switch (family) {
    case 'H': return make_H(params);
    case 'G': return make_G(params);
    case 'S':
      if (params.mode != Mode::FullRing) throw ModeMismatch();
      return wrap(make_S(params.n));
    case 'L': return wrap(make_L(params.n, params.mode));
    case 'T': return wrap(make_T(params.n, params.mode));
    case 'P': return wrap(make_P(params.n, params.mode, params.max_n));
    default: throw Error(std::string("unknown family '") + family + "'");
  }
}

std::string canonical_text(const GeneratorSet& generators) {
  std::string out;
  for (const auto& f : generators.polynomials()) {
    out += format_poly(f, generators.order());
    out += '\n';
  }
  return out;
}

std::uint64_t input_bitsize(const GeneratorSet& generators) {
  return 8 * static_cast<std::uint64_t>(canonical_text(generators).size());
}

std::uint32_t max_degree(const GeneratorSet& generators) {
  std::uint32_t d = 0;
  for (const auto& f : generators.polynomials()) d = std::max(d, f.degree());
  return d;
}

std::uint64_t predicted_gb_size(std::uint32_t n) {
  return 6 * std::uint64_t{n} + checked_pow(3, n);
}

std::uint64_t predicted_solution_count(std::uint32_t n) {
  return checked_pow(4, n) - checked_pow(3, n);
}

std::uint64_t count_standard_monomials(const GroebnerBasis& basis, std::uint32_t n,
                                       std::uint64_t max_candidates) {
  const std::uint32_t num_vars = 3 * n;
  std::vector<std::vector<VarPower>> lms;
  for (const auto& f : basis.elements) {
    const Monomial& lm = leading_monomial(f, basis.order);
    if (lm.is_unit()) return 0;
    lms.emplace_back(lm.powers().begin(), lm.powers().end());
  }

  // bound[v]: exponents of v in a standard monomial lie in [0, bound[v]).
  constexpr Exponent kUnbounded = 0;
  std::vector<Exponent> bound(num_vars, basis.mode == Mode::BooleanRing ? 2 : kUnbounded);
  for (const auto& lm : lms) {
    if (lm.size() != 1 || lm.front().var >= num_vars) continue;
    Exponent& b = bound[lm.front().var];
    if (b == kUnbounded || lm.front().exp < b) b = lm.front().exp;
  }

  std::uint64_t candidates = 1;
  for (VarIndex v = 0; v < num_vars; ++v) {
    if (bound[v] == kUnbounded) {
      throw NotZeroDimensional("no pure power of " + VarId::from_flat(v).name() +
                               " among the leading monomials");
    }
    if (candidates > max_candidates / bound[v]) {
      throw ResourceLimit("too many candidate monomials", {});
    }
    candidates *= bound[v];
  }

  std::vector<Exponent> exps(num_vars, 0);
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < candidates; ++k) {
    bool standard = std::none_of(lms.begin(), lms.end(), [&](const std::vector<VarPower>& lm) {
      return std::all_of(lm.begin(), lm.end(), [&](const VarPower& p) {
        return p.var < num_vars && exps[p.var] >= p.exp;
      });
    });
    if (standard) ++count;
    for (VarIndex v = 0; v < num_vars; ++v) {
      if (++exps[v] < bound[v]) break;
      exps[v] = 0;
    }
  }
  return count;
}

GrowthRecord measure_growth(std::uint32_t n, const MonomialOrder& order, Engine engine,
                            const BuchbergerLimits& limits, const EnumerationLimits& enumeration,
                            std::uint32_t max_n) {
  if (n > max_n) {
    throw ResourceLimit("n=" + std::to_string(n) + " exceeds the cap of " + std::to_string(max_n),
                        {});
  }
  const GeneratorSet h = make_H({n, Mode::FullRing, order, max_n});
  GrowthRecord row;
  row.n = n;
  row.input_count = h.size();
  row.input_bitsize = input_bitsize(h);
  row.input_max_degree = max_degree(h);
  row.predicted_gb_count = predicted_gb_size(n);
  row.predicted_solution_count = predicted_solution_count(n);

  auto start = std::chrono::steady_clock::now();
  try {
    row.gb_count = field_closed_basis(h, engine, limits).size();
  } catch (const ResourceLimit&) {
    row.gb_count.reset();
  }
  row.wall_time = std::chrono::steady_clock::now() - start;

  if (3 * n <= enumeration.max_vars) {
    row.solution_count = enumerate_solutions(h, enumeration).size();
  }
  return row;
}

void write_generator_file(std::ostream& out, const GeneratorSet& generators) {
  out << "# n=" << generators.n() << " mode=" << to_string(generators.mode()) << '\n';
  out << canonical_text(generators);
}

GeneratorSet read_generator_file(std::istream& in, const MonomialOrder& order) {
  std::optional<std::uint32_t> n;
  Mode mode = Mode::FullRing;
  std::vector<Polynomial> polys;
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos) continue;
    if (line[first] == '#') {
      unsigned header_n = 0;
      char mode_text[16] = {};
      if (!n && std::sscanf(line.c_str() + first, "# n=%u mode=%15s", &header_n, mode_text) == 2) {
        n = header_n;
        mode = mode_from_string(mode_text);
      }
      continue;
    }
    if (!n) {
      throw SyntaxError("polynomial before the '# n=<n> mode=<mode>' header", 0, line_no);
    }
    try {
      polys.push_back(parse_poly(line, *n, mode));
    } catch (const SyntaxError& e) {
      throw SyntaxError(e.message(), e.position(), line_no);
    }
  }
  if (!n) throw SyntaxError("missing '# n=<n> mode=<mode>' header", 0);
  return GeneratorSet(std::move(polys), *n, mode, order);
}

}  // namespace boolgb
