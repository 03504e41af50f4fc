#include "gjt/classify3.hpp"

#include <gtest/gtest.h>

#include <random>
#include <set>

#include "test_support.hpp"

using namespace gjt;

namespace {

const ParamTriple* find_triple(const std::vector<ParamTriple>& list, int r, int s, int t) {
  for (const auto& p : list)
    if (p.r == r && p.s == s && p.t == t) return &p;
  return nullptr;
}

std::set<Exponents> support(const Polynomial& f) {
  std::set<Exponents> out;
  for (const auto& [e, c] : f.terms()) out.insert(e);
  return out;
}

}  // namespace

TEST(ValidParametersL3, DegreeSixHasSeventeenTriples) {
  const auto triples = valid_parameters_l3(6);
  EXPECT_EQ(triples.size(), 17u);
  int clause1 = 0, clause2 = 0, r1 = 0, r2 = 0;
  for (const auto& p : triples) {
    if (p.clause == Clause::Even1) {
      ++clause1;
      if (p.r == 1) ++r1;
      if (p.r == 2) ++r2;
    } else {
      ++clause2;
      EXPECT_EQ(p.r, 3);
      EXPECT_EQ(p.s, 5);
      EXPECT_GE(p.t, 7);
      EXPECT_LE(p.t, 9);
    }
  }
  EXPECT_EQ(clause1, 14);
  EXPECT_EQ(r1, 9);
  EXPECT_EQ(r2, 5);
  EXPECT_EQ(clause2, 3);
}

TEST(ValidParametersL3, SmallestAndOddDegrees) {
  const auto d2 = valid_parameters_l3(2);
  ASSERT_EQ(d2.size(), 3u);
  for (const auto& p : d2) {
    EXPECT_EQ(p.clause, Clause::Even2);
    EXPECT_EQ(p.r, 1);
    EXPECT_EQ(p.s, 1);
  }

  // Odd degree seven: the middle clause gives (r, r+4, r+7) for r in {1,2}.
  const auto d7 = valid_parameters_l3(7);
  std::vector<ParamTriple> clause2;
  for (const auto& p : d7)
    if (p.clause == Clause::Odd2) clause2.push_back(p);
  ASSERT_EQ(clause2.size(), 2u);
  for (const auto& p : clause2) {
    EXPECT_EQ(p.s, p.r + 4);
    EXPECT_EQ(p.t, p.r + 7);
  }

  // Odd degree three: only the boundary clause, with the s = d case collapsed.
  const auto d3 = valid_parameters_l3(3);
  ASSERT_EQ(d3.size(), 3u);
  for (const auto& p : d3) EXPECT_EQ(p.clause, Clause::Odd3);

  EXPECT_THROW(valid_parameters_l3(1), std::invalid_argument);
}

TEST(PredictedProfile, UniqueTripleDegreeSix) {
  const auto triples = valid_parameters_l3(6);
  const auto* p = find_triple(triples, 2, 4, 7);
  ASSERT_NE(p, nullptr);
  const auto profiles = predicted_profile(*p);
  ASSERT_EQ(profiles.size(), 1u);
  EXPECT_EQ(profiles[0].h_a2, (HilbertFunction{1, 2, 2, 2, 1}));
  EXPECT_EQ(profiles[0].h_a1, (HilbertFunction{1, 3, 4, 4, 3, 1}));
  EXPECT_EQ(profiles[0].h_a, (HilbertFunction{1, 3, 6, 7, 6, 3, 1}));
}

TEST(PredictedProfile, TwoVariantsWhenMiddleValueIsTriple) {
  const auto triples = valid_parameters_l3(6);
  const auto* p = find_triple(triples, 2, 4, 6);
  ASSERT_NE(p, nullptr);
  ASSERT_TRUE(has_two_variants(*p));
  const auto profiles = predicted_profile(*p);
  ASSERT_EQ(profiles.size(), 2u);
  EXPECT_EQ(profiles[0].variant, Variant::A);
  EXPECT_EQ(profiles[0].h_a, (HilbertFunction{1, 3, 5, 6, 5, 3, 1}));
  EXPECT_EQ(profiles[1].variant, Variant::B);
  EXPECT_EQ(profiles[1].h_a, (HilbertFunction{1, 3, 6, 6, 6, 3, 1}));
  for (const auto& profile : profiles) {
    EXPECT_EQ(profile.h_a1, (HilbertFunction{1, 3, 4, 4, 3, 1}));
    EXPECT_EQ(profile.h_a2, (HilbertFunction{1, 2, 2, 2, 1}));
  }
}

TEST(PredictedProfile, SocleDegreeTwoBoundary) {
  const auto triples = valid_parameters_l3(2);
  const auto* p = find_triple(triples, 1, 1, 3);
  ASSERT_NE(p, nullptr);
  const auto profiles = predicted_profile(*p);
  ASSERT_EQ(profiles.size(), 1u);
  EXPECT_EQ(profiles[0].h_a, (HilbertFunction{1, 3, 1}));
  EXPECT_EQ(profiles[0].h_a1, (HilbertFunction{1, 1}));
  EXPECT_EQ(profiles[0].h_a2, (HilbertFunction{1}));
}

TEST(WitnessGenerator, DegreeSixSupports) {
  const auto triples = valid_parameters_l3(6);
  const auto* p = find_triple(triples, 2, 4, 7);
  ASSERT_NE(p, nullptr);
  // F = X^2 G_4 + G_6 with G_4 = Y Z^3 / (1! 3!) and G_6 = Y^6 / 6!.
  const auto f = witness_generator(*p);
  EXPECT_EQ(support(f.polynomial()),
            (std::set<Exponents>{{2, 1, 3}, {0, 6, 0}}));

  const auto* q = find_triple(triples, 3, 5, 9);
  ASSERT_NE(q, nullptr);
  const auto g = witness_generator(*q);
  EXPECT_EQ(support(g.polynomial()),
            (std::set<Exponents>{{2, 2, 2}, {0, 6, 0}, {0, 0, 6}}));

  EXPECT_THROW(witness_generator(*p, Variant::A), std::invalid_argument);
}

TEST(WitnessGenerator, VariantWitnessesRealizeTheirProfiles) {
  const auto triples = valid_parameters_l3(8);
  const auto* p = find_triple(triples, 2, 4, 6);
  ASSERT_NE(p, nullptr);
  const LinearForm x = parse_linear_form("x", 3);
  for (const auto& profile : predicted_profile(*p)) {
    const auto witness = witness_generator(*p, profile.variant);
    EXPECT_EQ(hilbert_function(witness), profile.h_a);
    EXPECT_EQ(hilbert_function(derived_dual_generator(witness, x, 1)), profile.h_a1);
    EXPECT_EQ(hilbert_function(derived_dual_generator(witness, x, 2)), profile.h_a2);
    EXPECT_EQ(nilpotency_order(witness, x), 3);
  }
  // The single-monomial witness is the dipped variant.
  EXPECT_EQ(witness_generator(*p, Variant::A).polynomial().terms().size(), 1u);
  EXPECT_EQ(witness_generator(*p, Variant::B).polynomial().terms().size(), 2u);
}

TEST(ValidParametersL2, DegreeSixPairs) {
  const auto pairs = valid_parameters_l2(6);
  ASSERT_EQ(pairs.size(), 9u);
  std::set<std::pair<int, int>> seen;
  for (const auto& p : pairs) seen.emplace(p.r, p.s);
  const std::set<std::pair<int, int>> expected{{1, 2}, {1, 3}, {1, 4}, {1, 5}, {2, 4},
                                               {2, 5}, {2, 6}, {3, 6}, {3, 7}};
  EXPECT_EQ(seen, expected);
}

TEST(ValidParametersL2, ProfilesAndBoundary) {
  const auto pairs = valid_parameters_l2(6);
  for (const auto& p : pairs) {
    if (p.r == 1 && p.s == 2) {
      const auto profile = predicted_profile_l2(p);
      EXPECT_EQ(profile.h_a, (HilbertFunction{1, 2, 2, 2, 2, 2, 1}));
      EXPECT_EQ(profile.h_a1, (HilbertFunction{1, 1, 1, 1, 1, 1}));
    }
  }
  const auto d3 = valid_parameters_l2(3);
  for (const auto& p : d3) {
    if (p.r == 2) {
      EXPECT_TRUE(p.boundary);
      EXPECT_EQ(p.s, 3);
      const auto profile = predicted_profile_l2(p);
      EXPECT_EQ(profile.h_a, (HilbertFunction{1, 3, 3, 1}));
      EXPECT_EQ(profile.h_a1, (HilbertFunction{1, 2, 1}));
    }
  }
}

TEST(ValidParametersL2, ExtendedEvenDegreePairIsRealized) {
  // (r,s) = (1,4) at socle degree 4 sits one past the staircase bound and is
  // genuinely realizable; its witness must reproduce the profile.
  const auto pairs = valid_parameters_l2(4);
  const ParamPair* found = nullptr;
  for (const auto& p : pairs)
    if (p.r == 1 && p.s == 4) found = &p;
  ASSERT_NE(found, nullptr);
  const auto witness = witness_generator_l2(*found);
  const auto profile = predicted_profile_l2(*found);
  const LinearForm x = parse_linear_form("x", 3);
  EXPECT_EQ(hilbert_function(witness), profile.h_a);
  EXPECT_EQ(hilbert_function(derived_dual_generator(witness, x, 1)), profile.h_a1);
  EXPECT_EQ(nilpotency_order(witness, x), 2);
  EXPECT_EQ(profile.h_a, (HilbertFunction{1, 3, 4, 3, 1}));
}

TEST(SmallPartJordanType, SepticExample) {
  const DualGenerator f(parse_polynomial("X^3*Y^4 + X^3*Z^4 + X^2*Y*Z^4 + Y^3*Z^4", 3));
  const auto report = small_part_jordan_type(f, parse_linear_form("x", 3));
  EXPECT_EQ(report.nilpotency, 4);
  EXPECT_EQ(report.parameters, (std::vector<int>{2, 4, 7}));
  EXPECT_EQ(report.partition, Partition({4, 4, 4, 4, 4, 4, 4, 4, 2, 2, 2}));
}

TEST(SmallPartJordanType, CubeNilpotencyPath) {
  const DualGenerator f(parse_polynomial("X1^2*X2^2*X3^2", 3));
  const auto report = small_part_jordan_type(f, parse_linear_form("x1", 3));
  EXPECT_EQ(report.nilpotency, 3);
  EXPECT_EQ(report.partition, Partition(std::vector<int>(9, 3)));
}

TEST(SmallPartJordanType, AnnihilatedFormGivesOnlyOnes) {
  const DualGenerator f(parse_polynomial("X2^2*X3^2", 3));
  const auto report = small_part_jordan_type(f, parse_linear_form("x1", 3));
  EXPECT_EQ(report.nilpotency, 1);
  EXPECT_EQ(report.partition, Partition(std::vector<int>(9, 1)));
}

TEST(SmallPartJordanType, RejectsBigNilpotencyAndWrongVariableCount) {
  const DualGenerator f(parse_polynomial("X1^4*X2", 3));
  EXPECT_THROW(small_part_jordan_type(f, parse_linear_form("x1", 3)), std::invalid_argument);
  const DualGenerator g(parse_polynomial("X1^2*X2^2", 2));
  EXPECT_THROW(small_part_jordan_type(g, parse_linear_form("x1", 2)), std::invalid_argument);
}

TEST(SmallPartJordanType, MatchesOracleOnRandomForms) {
  std::mt19937_64 rng(606);
  int checked = 0;
  while (checked < 40) {
    const int d = static_cast<int>(testsupport::draw(rng, 2, 7));
    const int cap = static_cast<int>(testsupport::draw(rng, 0, 3));
    const Polynomial f = testsupport::random_dual_form(rng, d, 6, cap);
    if (f.degree() < 2) continue;
    const DualGenerator gen(f);
    const LinearForm x = parse_linear_form("x1", 3);
    const auto report = small_part_jordan_type(gen, x);
    EXPECT_EQ(report.partition, jordan_type_oracle(gen, x)) << f.to_string();
    ++checked;
  }
}

TEST(Classification, ObservedTriplesAreAlwaysAdmissible) {
  // Exhaustiveness probe: random forms with vanishing third power always
  // land on a listed triple.
  std::mt19937_64 rng(707);
  int checked = 0;
  while (checked < 40) {
    const int d = static_cast<int>(testsupport::draw(rng, 2, 8));
    const Polynomial f = testsupport::random_dual_form(rng, d, 6, 2);
    if (f.degree() < 2) continue;
    const DualGenerator gen(f);
    const LinearForm x = parse_linear_form("x1", 3);
    if (nilpotency_order(gen, x) != 3) continue;
    const auto h = hilbert_function(gen);
    const auto h1 = hilbert_function(derived_dual_generator(gen, x, 1));
    const auto h2 = hilbert_function(derived_dual_generator(gen, x, 2));
    const int mid_a = d / 2;           // middle of socle degree d
    const int mid_a1 = (d - 1) / 2;    // defining degrees of the parameters
    const int r = h2[static_cast<std::size_t>(d % 2 == 0 ? mid_a - 1 : mid_a1)];
    const int s = h1[static_cast<std::size_t>(d % 2 == 0 ? mid_a - 1 : mid_a1)];
    const int t = h[static_cast<std::size_t>(d % 2 == 0 ? mid_a : mid_a1)];
    const auto triples = valid_parameters_l3(d);
    const auto* match = find_triple(triples, r, s, t);
    EXPECT_NE(match, nullptr) << "unlisted (" << r << "," << s << "," << t << ") at d=" << d
                              << " for " << f.to_string();
    if (match) {
      // The full Hilbert chain must also agree with a predicted profile.
      bool profile_found = false;
      for (const auto& profile : predicted_profile(*match))
        if (profile.h_a == h && profile.h_a1 == h1 && profile.h_a2 == h2) profile_found = true;
      EXPECT_TRUE(profile_found) << f.to_string();
    }
    ++checked;
  }
}

TEST(VerifyClassification, SweepToDegreeSix) {
  const auto report = verify_classification(6);
  EXPECT_TRUE(report.ok);
  EXPECT_GT(report.profiles_checked, 0);
  for (const auto& f : report.failures) ADD_FAILURE() << f;
}
