#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "boolgb/monomial.hpp"

namespace boolgb {

/// Polynomial over F2: a set of monomials, each with coefficient 1.
///
/// Terms are kept in descending DegLex order regardless of the order a caller
/// works in; that makes equality a plain vector comparison. Values are
/// immutable once built.
class Polynomial {
 public:
  explicit Polynomial(Mode mode = Mode::FullRing) : mode_(mode) {}

  /// Builds the sum of `terms`: duplicate monomials cancel in pairs, and in
  /// BooleanRing mode exponents are capped at 1 first.
  static Polynomial from_terms(std::vector<Monomial> terms, Mode mode);
  static Polynomial monomial(const Monomial& m, Mode mode);
  static Polynomial one(Mode mode = Mode::FullRing) { return monomial(Monomial{}, mode); }
  static Polynomial variable(VarIndex var, Mode mode = Mode::FullRing) {
    return monomial(Monomial::variable(var), mode);
  }

  Mode mode() const { return mode_; }
  std::span<const Monomial> terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_one() const { return terms_.size() == 1 && terms_.front().is_unit(); }
  /// Maximum total degree over all terms; 0 for the zero polynomial.
  std::uint32_t degree() const { return terms_.empty() ? 0 : terms_.front().degree(); }
  VarIndex var_bound() const;
  bool contains(const Monomial& m) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.mode_ == b.mode_ && a.terms_ == b.terms_;
  }

 private:
  Polynomial(Mode mode, std::vector<Monomial> sorted_terms)
      : mode_(mode), terms_(std::move(sorted_terms)) {}

  Mode mode_;
  std::vector<Monomial> terms_;

  friend Polynomial operator+(const Polynomial& f, const Polynomial& g);
};

/// Symmetric difference of term sets. Throws ModeMismatch.
Polynomial operator+(const Polynomial& f, const Polynomial& g);
/// Same as +, characteristic 2.
inline Polynomial operator-(const Polynomial& f, const Polynomial& g) { return f + g; }
/// Throws ModeMismatch.
Polynomial operator*(const Polynomial& f, const Polynomial& g);
Polynomial operator*(const Polynomial& f, const Monomial& m);

std::size_t hash_value(const Monomial& m);
std::size_t hash_value(const Polynomial& f);

/// Throws ZeroPolynomial.
const Monomial& leading_monomial(const Polynomial& f, const MonomialOrder& order);

/// Terms sorted descending under `order`.
std::vector<Monomial> sorted_terms(const Polynomial& f, const MonomialOrder& order);

/// Reinterprets a polynomial in the other ring mode. Going to BooleanRing
/// caps exponents (reduction modulo the field polynomials).
Polynomial to_boolean(const Polynomial& f);
Polynomial to_full_ring(const Polynomial& f);

/// Parses the polynomial grammar
///   poly   := ['+'|'-'] term (('+'|'-') term)*
///   term   := factor ('*' factor)*
///   factor := var ('^' posint)? | integer
///   var    := ('x'|'y'|'z') posint
/// Integer factors are coefficients and are reduced mod 2. Variables must
/// lie in blocks 1..n. Throws SyntaxError or UnknownVariable.
Polynomial parse_poly(std::string_view text, std::uint32_t n, Mode mode);

/// Canonical text: terms descending under `order`, joined by " + ".
std::string format_poly(const Polynomial& f, const MonomialOrder& order = kDegLex);

}  // namespace boolgb
