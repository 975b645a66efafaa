#include "boolgb/polynomial.hpp"

#include <algorithm>

#include "boolgb/errors.hpp"

namespace boolgb {

namespace {

// Sorts descending under `order` and drops monomials that occur an even
// number of times.
std::vector<Monomial> cancel_pairs(std::vector<Monomial> terms, const MonomialOrder& order) {
  std::sort(terms.begin(), terms.end(),
            [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  std::vector<Monomial> out;
  out.reserve(terms.size());
  for (auto& t : terms) {
    if (!out.empty() && out.back() == t) {
      out.pop_back();
    } else {
      out.push_back(std::move(t));
    }
  }
  return out;
}

void require_same_mode(const Polynomial& f, const Polynomial& g) {
  if (f.mode() != g.mode()) throw ModeMismatch();
}

}  // namespace

Polynomial Polynomial::from_terms(std::vector<Monomial> terms, Mode mode) {
  if (mode == Mode::BooleanRing) {
    for (auto& t : terms) {
      if (!t.is_squarefree()) t = t.support();
    }
  }
  return Polynomial(mode, cancel_pairs(std::move(terms), kDegLex));
}

Polynomial Polynomial::monomial(const Monomial& m, Mode mode) {
  return from_terms({m}, mode);
}

VarIndex Polynomial::var_bound() const {
  VarIndex bound = 0;
  for (const auto& t : terms_) bound = std::max(bound, t.var_bound());
  return bound;
}

bool Polynomial::contains(const Monomial& m) const {
  return std::binary_search(terms_.begin(), terms_.end(), m,
                            [](const Monomial& a, const Monomial& b) { return kDegLex.greater(a, b); });
}

Polynomial operator+(const Polynomial& f, const Polynomial& g) {
  require_same_mode(f, g);
  std::vector<Monomial> out;
  out.reserve(f.size() + g.size());
  auto a = f.terms();
  auto b = g.terms();
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    auto c = kDegLex.compare(a[i], b[j]);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
    } else {
      ++i;
      ++j;
    }
  }
  out.insert(out.end(), a.begin() + static_cast<std::ptrdiff_t>(i), a.end());
  out.insert(out.end(), b.begin() + static_cast<std::ptrdiff_t>(j), b.end());
  return Polynomial(f.mode(), std::move(out));
}

Polynomial operator*(const Polynomial& f, const Polynomial& g) {
  require_same_mode(f, g);
  std::vector<Monomial> products;
  products.reserve(f.size() * g.size());
  for (const auto& s : f.terms()) {
    for (const auto& t : g.terms()) products.push_back(multiply(s, t, f.mode()));
  }
  return Polynomial::from_terms(std::move(products), f.mode());
}

Polynomial operator*(const Polynomial& f, const Monomial& m) {
  std::vector<Monomial> products;
  products.reserve(f.size());
  for (const auto& t : f.terms()) products.push_back(multiply(t, m, f.mode()));
  return Polynomial::from_terms(std::move(products), f.mode());
}

std::size_t hash_value(const Monomial& m) {
  std::size_t h = 0xcbf29ce484222325ull;
  for (const auto& p : m.powers()) {
    h ^= (std::size_t{p.var} << 32) ^ p.exp;
    h *= 0x100000001b3ull;
  }
  return h;
}

std::size_t hash_value(const Polynomial& f) {
  std::size_t h = f.mode() == Mode::FullRing ? 17 : 31;
  for (const auto& t : f.terms()) h = h * 1000003u ^ hash_value(t);
  return h;
}

const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) throw ZeroPolynomial("zero polynomial has no leading monomial");
  auto terms = f.terms();
  if (order == kDegLex) return terms.front();
  const Monomial* best = &terms.front();
  for (const auto& t : terms.subspan(1)) {
    if (t.degree() < best->degree()) break;
    if (order.greater(t, *best)) best = &t;
  }
  return *best;
}

std::vector<Monomial> sorted_terms(const Polynomial& f, const MonomialOrder& order) {
  std::vector<Monomial> out(f.terms().begin(), f.terms().end());
  if (order != kDegLex) {
    std::sort(out.begin(), out.end(),
              [&](const Monomial& a, const Monomial& b) { return order.greater(a, b); });
  }
  return out;
}

Polynomial to_boolean(const Polynomial& f) {
  if (f.mode() == Mode::BooleanRing) return f;
  return Polynomial::from_terms({f.terms().begin(), f.terms().end()}, Mode::BooleanRing);
}

Polynomial to_full_ring(const Polynomial& f) {
  if (f.mode() == Mode::FullRing) return f;
  return Polynomial::from_terms({f.terms().begin(), f.terms().end()}, Mode::FullRing);
}

std::string format_poly(const Polynomial& f, const MonomialOrder& order) {
  if (f.is_zero()) return "0";
  std::string out;
  for (const auto& t : sorted_terms(f, order)) {
    if (!out.empty()) out += " + ";
    out += format_monomial(t);
  }
  return out;
}

}  // namespace boolgb
