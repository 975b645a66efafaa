#include <cctype>
#include <charconv>

#include "boolgb/errors.hpp"
#include "boolgb/polynomial.hpp"

namespace boolgb {

namespace {

class Parser {
 public:
  Parser(std::string_view text, std::uint32_t n, Mode mode) : text_(text), n_(n), mode_(mode) {}

  Polynomial parse() {
    std::vector<Monomial> terms;
    skip_space();
    if (peek() == '+' || peek() == '-') advance();
    parse_term(terms);
    while (true) {
      skip_space();
      if (at_end()) break;
      char c = peek();
      if (c != '+' && c != '-') fail("expected '+' or '-'");
      advance();
      parse_term(terms);
    }
    return Polynomial::from_terms(std::move(terms), mode_);
  }

 private:
  void parse_term(std::vector<Monomial>& terms) {
    std::vector<VarPower> powers;
    bool odd_coefficient = true;
    parse_factor(powers, odd_coefficient);
    while (true) {
      skip_space();
      if (peek() != '*') break;
      advance();
      parse_factor(powers, odd_coefficient);
    }
    if (odd_coefficient) terms.push_back(Monomial::from_powers(std::move(powers)));
  }

  void parse_factor(std::vector<VarPower>& powers, bool& odd_coefficient) {
    skip_space();
    if (at_end()) fail("unexpected end of input");
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      // Only the parity of a coefficient matters over F2.
      while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
      if ((text_[pos_ - 1] - '0') % 2 == 0) odd_coefficient = false;
      return;
    }
    if (!std::isalpha(static_cast<unsigned char>(c))) fail("expected a variable or an integer");

    std::size_t start = pos_;
    advance();
    if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
      fail("expected a block index after variable letter");
    }
    std::uint32_t block = read_uint("block index");
    std::string name(text_.substr(start, pos_ - start));
    int kind = c == 'x' ? 0 : c == 'y' ? 1 : c == 'z' ? 2 : -1;
    if (kind < 0 || block == 0 || block > n_) throw UnknownVariable(name);

    Exponent exp = 1;
    skip_space();
    if (peek() == '^') {
      advance();
      skip_space();
      if (at_end() || !std::isdigit(static_cast<unsigned char>(peek()))) {
        fail("expected an exponent");
      }
      std::size_t exp_pos = pos_;
      exp = read_uint("exponent");
      if (exp == 0) throw SyntaxError("exponent must be positive", exp_pos);
    }
    powers.push_back({VarId{block, static_cast<VarKind>(kind)}.flat(), exp});
  }

  std::uint32_t read_uint(const char* what) {
    std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) advance();
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text_.data() + start, text_.data() + pos_, value);
    if (ec != std::errc{}) throw SyntaxError(std::string(what) + " out of range", start);
    return value;
  }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) advance();
  }
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }
  void advance() { ++pos_; }
  [[noreturn]] void fail(const std::string& message) const { throw SyntaxError(message, pos_); }

  std::string_view text_;
  std::uint32_t n_;
  Mode mode_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::uint32_t n, Mode mode) {
  return Parser(text, n, mode).parse();
}

}  // namespace boolgb
