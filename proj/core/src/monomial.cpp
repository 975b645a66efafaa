#include "boolgb/monomial.hpp"

#include <algorithm>

#include "boolgb/errors.hpp"

namespace boolgb {

std::string to_string(Mode mode) {
  return mode == Mode::FullRing ? "full" : "boolean";
}

Mode mode_from_string(const std::string& text) {
  if (text == "full") return Mode::FullRing;
  if (text == "boolean") return Mode::BooleanRing;
  throw Error("unknown ring mode '" + text + "'");
}

std::string to_string(OrderScheme scheme) {
  return scheme == OrderScheme::DegLex ? "deglex" : "degrevlex";
}

OrderScheme order_from_string(const std::string& text) {
  if (text == "deglex") return OrderScheme::DegLex;
  if (text == "degrevlex") return OrderScheme::DegRevLex;
  throw Error("unknown monomial order '" + text + "'");
}

std::string VarId::name() const {
  static constexpr char kLetters[] = {'x', 'y', 'z'};
  return kLetters[static_cast<int>(kind)] + std::to_string(block);
}

Monomial::Monomial(std::vector<VarPower> sorted) : powers_(std::move(sorted)) {
  for (const auto& p : powers_) {
    degree_ += p.exp;
    signature_ |= std::uint64_t{1} << (p.var % 64);
  }
}

Monomial Monomial::variable(VarIndex var, Exponent exp) {
  if (exp == 0) return Monomial{};
  return Monomial(std::vector<VarPower>{{var, exp}});
}

Monomial Monomial::from_powers(std::vector<VarPower> powers) {
  std::sort(powers.begin(), powers.end(),
            [](const VarPower& a, const VarPower& b) { return a.var < b.var; });
  std::vector<VarPower> merged;
  merged.reserve(powers.size());
  for (const auto& p : powers) {
    if (p.exp == 0) continue;
    if (!merged.empty() && merged.back().var == p.var) {
      merged.back().exp += p.exp;
    } else {
      merged.push_back(p);
    }
  }
  return Monomial(std::move(merged));
}

Exponent Monomial::exponent(VarIndex var) const {
  auto it = std::lower_bound(powers_.begin(), powers_.end(), var,
                             [](const VarPower& p, VarIndex v) { return p.var < v; });
  return (it != powers_.end() && it->var == var) ? it->exp : 0;
}

bool Monomial::is_squarefree() const {
  return std::all_of(powers_.begin(), powers_.end(),
                     [](const VarPower& p) { return p.exp == 1; });
}

Monomial Monomial::support() const {
  std::vector<VarPower> out(powers_);
  for (auto& p : out) p.exp = 1;
  return Monomial(std::move(out));
}

namespace {

// Merges two sorted power lists, combining shared variables with `combine`.
// `combine` may return 0 to drop the variable.
template <typename Combine>
std::vector<VarPower> merge_powers(std::span<const VarPower> a, std::span<const VarPower> b,
                                   Combine combine) {
  std::vector<VarPower> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() || j < b.size()) {
    if (j == b.size() || (i < a.size() && a[i].var < b[j].var)) {
      if (Exponent e = combine(a[i].exp, 0)) out.push_back({a[i].var, e});
      ++i;
    } else if (i == a.size() || b[j].var < a[i].var) {
      if (Exponent e = combine(0, b[j].exp)) out.push_back({b[j].var, e});
      ++j;
    } else {
      if (Exponent e = combine(a[i].exp, b[j].exp)) out.push_back({a[i].var, e});
      ++i;
      ++j;
    }
  }
  return out;
}

}  // namespace

Monomial multiply(const Monomial& a, const Monomial& b, Mode mode) {
  if (mode == Mode::BooleanRing) {
    return Monomial::from_powers(merge_powers(a.powers(), b.powers(), [](Exponent x, Exponent y) {
      return static_cast<Exponent>(x + y > 0 ? 1 : 0);
    }));
  }
  return Monomial::from_powers(
      merge_powers(a.powers(), b.powers(), [](Exponent x, Exponent y) { return x + y; }));
}

bool divides(const Monomial& a, const Monomial& b) {
  if (a.degree() > b.degree()) return false;
  if ((a.signature() & ~b.signature()) != 0) return false;
  auto pa = a.powers();
  auto pb = b.powers();
  std::size_t j = 0;
  for (const auto& p : pa) {
    while (j < pb.size() && pb[j].var < p.var) ++j;
    if (j == pb.size() || pb[j].var != p.var || pb[j].exp < p.exp) return false;
    ++j;
  }
  return true;
}

Monomial quotient(const Monomial& b, const Monomial& a) {
  if (!divides(a, b)) {
    throw DivisionError(format_monomial(a) + " does not divide " + format_monomial(b));
  }
  return Monomial::from_powers(
      merge_powers(b.powers(), a.powers(), [](Exponent x, Exponent y) { return x - y; }));
}

Monomial lcm(const Monomial& a, const Monomial& b) {
  return Monomial::from_powers(
      merge_powers(a.powers(), b.powers(), [](Exponent x, Exponent y) { return std::max(x, y); }));
}

bool coprime(const Monomial& a, const Monomial& b) {
  if ((a.signature() & b.signature()) == 0) return true;
  auto pa = a.powers();
  auto pb = b.powers();
  std::size_t i = 0, j = 0;
  while (i < pa.size() && j < pb.size()) {
    if (pa[i].var == pb[j].var) return false;
    if (pa[i].var < pb[j].var) {
      ++i;
    } else {
      ++j;
    }
  }
  return true;
}

std::string format_monomial(const Monomial& m) {
  if (m.is_unit()) return "1";
  std::string out;
  for (const auto& p : m.powers()) {
    if (!out.empty()) out += '*';
    out += VarId::from_flat(p.var).name();
    if (p.exp > 1) {
      out += '^';
      out += std::to_string(p.exp);
    }
  }
  return out;
}

std::strong_ordering MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  if (a.degree() != b.degree()) return a.degree() <=> b.degree();
  auto pa = a.powers();
  auto pb = b.powers();

  if (scheme == OrderScheme::DegLex) {
    std::size_t i = 0, j = 0;
    while (i < pa.size() && j < pb.size()) {
      if (pa[i].var == pb[j].var) {
        if (pa[i].exp != pb[j].exp) return pa[i].exp <=> pb[j].exp;
        ++i;
        ++j;
      } else {
        // The side holding the earlier variable has the larger exponent there.
        return pa[i].var < pb[j].var ? std::strong_ordering::greater
                                     : std::strong_ordering::less;
      }
    }
    if (i < pa.size()) return std::strong_ordering::greater;
    if (j < pb.size()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
  }

  std::size_t i = pa.size(), j = pb.size();
  while (i > 0 && j > 0) {
    const VarPower& x = pa[i - 1];
    const VarPower& y = pb[j - 1];
    if (x.var == y.var) {
      if (x.exp != y.exp) return y.exp <=> x.exp;
      --i;
      --j;
    } else {
      // The side holding the later variable has the larger exponent there,
      // which makes it the smaller monomial.
      return x.var > y.var ? std::strong_ordering::less : std::strong_ordering::greater;
    }
  }
  if (i > 0) return std::strong_ordering::less;
  if (j > 0) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

}  // namespace boolgb
