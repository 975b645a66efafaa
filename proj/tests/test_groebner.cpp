#include <gtest/gtest.h>

#include <algorithm>
#include <sstream>

#include <boolgb/boolgb.hpp>

#include "random_polys.hpp"

namespace boolgb {
namespace {

// x, y, z below are x1, y1, z1. Expected values for the small hand examples
// were cross-checked with sympy's groebner/reduced over GF(2).

Polynomial full(std::string_view text, std::uint32_t n = 3) {
  return parse_poly(text, n, Mode::FullRing);
}

std::vector<Polynomial> fulls(std::initializer_list<std::string_view> texts, std::uint32_t n = 3) {
  std::vector<Polynomial> out;
  for (auto t : texts) out.push_back(full(t, n));
  return out;
}

GroebnerBasis reduced_h(std::uint32_t n, MonomialOrder order = kDegLex) {
  return reduced_groebner_basis(make_H({n, Mode::FullRing, order}));
}

TEST(SPolynomial, Examples) {
  EXPECT_EQ(s_polynomial(full("x1^2 + x1"), full("x1*y1 + x1 + y1 + z1"), kDegLex),
            full("x1^2 + x1*z1"));
  Polynomial f = full("x1*y1 + z1 + 1");
  EXPECT_TRUE(s_polynomial(f, f, kDegLex).is_zero());
  EXPECT_TRUE(s_polynomial(full("x1*y1"), full("z1^2"), kDegLex).is_zero());
  EXPECT_THROW(s_polynomial(Polynomial{}, f, kDegLex), ZeroPolynomial);
}

TEST(NormalForm, Examples) {
  EXPECT_TRUE(normal_form(full("x1^2 + x1*z1"), fulls({"x1^2 + x1", "x1*z1 + x1"}), kDegLex)
                  .is_zero());
  Polynomial f = full("x1*y2 + z1 + 1", 2);
  EXPECT_EQ(normal_form(f, {}, kDegLex), f);
  auto g2 = make_G({2});
  EXPECT_TRUE(normal_form(full("z1*z2", 2), g2.polynomials(), kDegLex).is_zero());
  EXPECT_TRUE(normal_form(Polynomial{}, g2.polynomials(), kDegLex).is_zero());
}

TEST(NormalForm, UsesFirstDivisorInListOrder) {
  // Both x1 + y1 and x1 + z1 reduce x1; the first one listed wins.
  Polynomial f = full("x1");
  EXPECT_EQ(normal_form(f, fulls({"x1 + y1", "x1 + z1"}), kDegLex), full("y1"));
  EXPECT_EQ(normal_form(f, fulls({"x1 + z1", "x1 + y1"}), kDegLex), full("z1"));
}

TEST(NormalForm, ResultIsIrreducible) {
  testing::RandomPolys gen(23);
  auto basis = reduced_h(2);
  for (int trial = 0; trial < 200; ++trial) {
    Polynomial f = gen.polynomial(6, 4, 6, Mode::FullRing);
    Polynomial r = normal_form(f, basis.elements, basis.order);
    for (const auto& t : r.terms()) {
      for (const auto& g : basis.elements) {
        ASSERT_FALSE(divides(leading_monomial(g, basis.order), t));
      }
    }
  }
}

TEST(Buchberger, SingleMonomial) {
  auto result = buchberger(GeneratorSet({full("x1")}, 1, Mode::FullRing));
  ASSERT_EQ(result.basis.size(), 1u);
  EXPECT_EQ(result.basis.elements.front(), full("x1"));
}

TEST(Buchberger, SmallSystemProducesXZ) {
  auto result = buchberger(GeneratorSet(fulls({"x1^2 + x1", "x1*y1 + x1 + y1 + z1"}), 1,
                                        Mode::FullRing));
  Monomial xz = Monomial::from_powers({{0, 1}, {2, 1}});
  bool found = std::any_of(result.basis.elements.begin(), result.basis.elements.end(),
                           [&](const Polynomial& g) { return leading_monomial(g, kDegLex) == xz; });
  EXPECT_TRUE(found);
  auto reduced = interreduce(result.basis);
  EXPECT_EQ(canonical_strings(reduced.elements),
            canonical_strings(fulls({"x1^2 + x1", "x1*y1 + x1 + y1 + z1", "x1*z1 + x1",
                                     "y1*z1 + z1^2 + y1 + z1"})));
}

TEST(Buchberger, HTwoGivesTwentyOne) {
  auto result = buchberger(make_H({2}));
  EXPECT_TRUE(is_groebner_basis(result.basis.elements, kDegLex));
  EXPECT_EQ(interreduce(result.basis).size(), 21u);
  EXPECT_LE(result.stats.pairs_skipped_by_criteria, result.stats.pairs_generated);
}

TEST(Buchberger, ResourceLimitCarriesStats) {
  try {
    buchberger(make_H({4}), BuchbergerLimits{50, 100000});
    FAIL() << "expected ResourceLimit";
  } catch (const ResourceLimit& e) {
    EXPECT_GT(e.stats().pairs_generated, 50u);
  }
  EXPECT_THROW(buchberger(make_H({4}), BuchbergerLimits{1000000, 10}), ResourceLimit);
}

TEST(Buchberger, UnitIdealCollapses) {
  auto basis = reduced_groebner_basis(GeneratorSet(fulls({"x1 + 1", "x1"}), 1, Mode::FullRing));
  ASSERT_EQ(basis.size(), 1u);
  EXPECT_TRUE(basis.elements.front().is_one());
}

TEST(Interreduce, Examples) {
  auto h4 = reduced_h(4);
  EXPECT_EQ(h4.size(), 105u);
  EXPECT_TRUE(h4.reduced);
  auto again = interreduce(h4);
  EXPECT_EQ(canonical_strings(again.elements), canonical_strings(h4.elements));

  auto g2 = make_G({2});
  auto from_g = reduced_groebner_basis(g2);
  EXPECT_EQ(canonical_strings(from_g.elements), canonical_strings(g2.polynomials()));
}

TEST(Interreduce, StrictModeRejectsNonBasis) {
  // {x1*y1 + z1, x1*y1 + x1}: the second is dropped as redundant but does not
  // reduce to zero modulo the first.
  GroebnerBasis bogus;
  bogus.n = 1;
  bogus.elements = fulls({"x1*y1 + z1", "x1*y1 + x1"});
  EXPECT_THROW(interreduce(bogus, true), NotAGroebnerBasis);
  EXPECT_NO_THROW(interreduce(bogus, false));
}

TEST(IsGroebnerBasis, Examples) {
  EXPECT_TRUE(is_groebner_basis(make_G({3}).polynomials(), kDegLex));
  EXPECT_TRUE(is_groebner_basis(make_G({3}).polynomials(), kDegRevLex));
  // S(x1*y1 + x1, x1) = x1, which x1 reduces to zero.
  EXPECT_TRUE(is_groebner_basis(fulls({"x1*y1 + x1", "x1"}), kDegLex));
  EXPECT_TRUE(is_groebner_basis(fulls({"x1*y1 + z1"}), kDegLex));
  EXPECT_FALSE(is_groebner_basis(fulls({"x1^2 + x1", "x1*y1 + x1 + y1 + z1"}), kDegLex));
  EXPECT_FALSE(is_groebner_basis(make_H({2}).polynomials(), kDegLex));
}

TEST(IsGroebnerBasis, BooleanModeChecksFieldPairs) {
  // x1*y1 + x1 alone: x1 * (x1*y1 + x1) = 0 in the Boolean ring, but
  // y1 * (x1*y1 + x1) = 0 too, so this is a basis.
  auto b = [](std::string_view t) { return parse_poly(t, 1, Mode::BooleanRing); };
  EXPECT_TRUE(is_groebner_basis(std::vector{b("x1*y1 + x1")}, kDegLex));
  // x1*y1 + z1: y1 * f = x1*y1 + y1*z1 reduces to y1*z1 + z1, nonzero.
  EXPECT_FALSE(is_groebner_basis(std::vector{b("x1*y1 + z1")}, kDegLex));
}

TEST(IsReducedBasis, Examples) {
  EXPECT_TRUE(is_reduced_basis(make_G({4}).polynomials(), kDegLex));
  EXPECT_FALSE(is_reduced_basis(make_G({1}).polynomials(), kDegLex));
  EXPECT_FALSE(is_minimal_basis(make_G({1}).polynomials(), kDegLex));
  EXPECT_FALSE(is_reduced_basis(fulls({"x1", "x1 + y1"}), kDegLex));
  // Minimal but not tail-reduced.
  auto tail = fulls({"x1", "y1*z1 + x1"});
  EXPECT_TRUE(is_minimal_basis(tail, kDegLex));
  EXPECT_FALSE(is_reduced_basis(tail, kDegLex));
}

TEST(IdealMembership, Examples) {
  auto h3 = reduced_h(3);
  for (const auto& g : h3.elements) EXPECT_TRUE(ideal_membership(g, h3));
  EXPECT_TRUE(ideal_membership(full("z1*z2*z3"), h3));
  auto h2 = reduced_h(2);
  EXPECT_FALSE(ideal_membership(full("x1", 2), h2));
  EXPECT_TRUE(ideal_membership(full("x1*z1 + x1", 2), h2));
  EXPECT_THROW(ideal_membership(parse_poly("x1", 2, Mode::BooleanRing), h2), ModeMismatch);
}

TEST(GroebnerProperties, ClosureOnComputedBases) {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (auto order : {kDegLex, kDegRevLex}) {
      auto result = buchberger(make_H({n, Mode::FullRing, order}));
      EXPECT_TRUE(is_groebner_basis(result.basis.elements, order)) << n;
      auto reduced = interreduce(result.basis, true);
      EXPECT_TRUE(is_groebner_basis(reduced.elements, order)) << n;
      EXPECT_TRUE(is_reduced_basis(reduced.elements, order)) << n;
    }
  }
  testing::RandomPolys gen(29);
  for (int trial = 0; trial < 40; ++trial) {
    auto f = testing::with_field_polynomials(gen.generator_set(2, 4, 3, 4, Mode::FullRing));
    auto result = buchberger(f);
    ASSERT_TRUE(is_groebner_basis(result.basis.elements, kDegLex));
  }
}

TEST(GroebnerProperties, NormalFormIdempotenceAndCongruence) {
  testing::RandomPolys gen(31);
  std::vector<GroebnerBasis> bases{reduced_h(2), reduced_h(3, kDegRevLex)};
  for (int trial = 0; trial < 1000; ++trial) {
    const auto& basis = bases[static_cast<std::size_t>(trial % 2)];
    Polynomial f = gen.polynomial(3 * basis.n, 4, 6, Mode::FullRing);
    Polynomial r = normal_form(f, basis.elements, basis.order);
    ASSERT_EQ(normal_form(r, basis.elements, basis.order), r);
    ASSERT_TRUE(normal_form(f + r, basis.elements, basis.order).is_zero());
  }
}

TEST(GroebnerProperties, UniquenessUnderPermutedGenerators) {
  testing::RandomPolys gen(37);
  for (int trial = 0; trial < 20; ++trial) {
    auto f = testing::with_field_polynomials(gen.generator_set(2, 5, 3, 4, Mode::FullRing));
    std::vector<Polynomial> shuffled(f.polynomials().begin(), f.polynomials().end());
    std::shuffle(shuffled.begin(), shuffled.end(), gen.rng());
    auto a = reduced_groebner_basis(f);
    auto b = reduced_groebner_basis(GeneratorSet(shuffled, f.n(), f.mode(), f.order()));
    ASSERT_EQ(canonical_strings(a.elements), canonical_strings(b.elements));
  }
  auto h3 = make_H({3});
  std::vector<Polynomial> reversed(h3.polynomials().rbegin(), h3.polynomials().rend());
  EXPECT_EQ(canonical_strings(reduced_groebner_basis(h3).elements),
            canonical_strings(
                reduced_groebner_basis(GeneratorSet(reversed, 3, Mode::FullRing)).elements));
}

TEST(GroebnerProperties, OracleEquivalence) {
  testing::RandomPolys gen(41);
  for (std::uint32_t n = 1; n <= 3; ++n) {
    for (int system = 0; system < 4; ++system) {
      auto f = system == 0 ? make_H({n})
                           : testing::with_field_polynomials(
                                 gen.generator_set(n, 4, 3, 4, Mode::FullRing));
      auto basis = reduced_groebner_basis(f);
      for (int trial = 0; trial < 60; ++trial) {
        Polynomial p = gen.polynomial(3 * n, 3, 5, Mode::FullRing);
        ASSERT_EQ(ideal_membership(p, basis), membership_by_evaluation(p, f))
            << format_poly(p);
      }
    }
  }
}

TEST(GroebnerProperties, ModeConsistency) {
  for (std::uint32_t n = 1; n <= 3; ++n) {
    auto full_basis = field_closed_basis(make_H({n}), Engine::Full);
    auto boolean_basis = reduced_groebner_basis(make_H({n, Mode::BooleanRing}));
    EXPECT_TRUE(is_groebner_basis(boolean_basis.elements, kDegLex));
    EXPECT_EQ(canonical_strings(lift_boolean_basis(boolean_basis).elements),
              canonical_strings(full_basis.elements));
  }
  testing::RandomPolys gen(43);
  for (int trial = 0; trial < 50; ++trial) {
    auto f = gen.generator_set(3, 5, 3, 5, Mode::FullRing,
                               trial % 2 ? kDegRevLex : kDegLex);
    auto a = field_closed_basis(f, Engine::Full);
    auto b = field_closed_basis(f, Engine::Boolean);
    ASSERT_EQ(canonical_strings(a.elements), canonical_strings(b.elements)) << trial;
    EXPECT_NO_THROW(field_closed_basis(f, Engine::Both));
  }
}

TEST(BasisDump, JsonRoundTrip) {
  auto basis = reduced_h(2, kDegRevLex);
  std::ostringstream out;
  write_basis_json(out, basis);
  const std::string text = out.str();
  EXPECT_EQ(text.rfind("{\"n\": 2, \"mode\": \"full\", \"order\": \"degrevlex\", \"elements\": [", 0),
            0u);
  std::istringstream in(text);
  auto back = read_basis_json(in);
  EXPECT_EQ(back.n, 2u);
  EXPECT_EQ(back.order, kDegRevLex);
  EXPECT_EQ(back.elements, basis.elements);

  std::istringstream bad("{\"n\": 1, \"mode\": \"full\", \"order\": \"deglex\", "
                         "\"elements\": [[[[7,1]]]]}");
  EXPECT_THROW(read_basis_json(bad), Error);
  std::istringstream garbage("{not json");
  EXPECT_THROW(read_basis_json(garbage), Error);
}

TEST(GeneratorSet, DropsZerosAndDuplicates) {
  GeneratorSet f(fulls({"x1", "0", "x1", "y1", "x1 + x1"}), 1, Mode::FullRing);
  EXPECT_EQ(f.size(), 2u);
  EXPECT_THROW(GeneratorSet({parse_poly("x1", 1, Mode::BooleanRing)}, 1, Mode::FullRing),
               ModeMismatch);
}

}  // namespace
}  // namespace boolgb
