#include <gtest/gtest.h>

#include "cayley/checks.hpp"

using namespace cayley;

namespace {

Permutation swap_entries(const Permutation& p, Point i, Point j) {
  std::vector<Point> t(p.images().begin(), p.images().end());
  std::swap(t[i], t[j]);
  return Permutation(std::move(t));
}

bool is_translation(const Permutation& p, int m) { return p == build_R(decode(p[0], m)); }

}  // namespace

TEST(Involutions, HoldForSmallM) {
  for (int m = 4; m <= 9; ++m) EXPECT_EQ(verify_involutions(m).status, CheckStatus::pass) << m;
}

TEST(Involutions, CorruptedYFails) {
  Construction c = build_construction(4);
  c.y = swap_entries(c.y, 1, 2);
  const CheckResult r = verify_involutions(c);
  EXPECT_EQ(r.status, CheckStatus::fail);
  EXPECT_FALSE(r.details["y"]["squares_to_identity"].get<bool>());
}

TEST(AltContainment, HoldsForM4To12) {
  for (int m = 4; m <= 12; ++m) EXPECT_EQ(verify_alt_containment(m).status, CheckStatus::pass) << m;
}

TEST(AltContainment, ZIsCheckedDirectly) {
  for (int m = 4; m <= 8; ++m) EXPECT_EQ(parity(build_z(m)), Parity::even);
}

TEST(AltContainment, InjectedTranspositionFails) {
  Construction c = build_construction(5);
  c.x = compose(c.x, Permutation::transposition(32, 3, 7));
  const CheckResult r = verify_alt_containment(c);
  EXPECT_EQ(r.status, CheckStatus::fail);
  EXPECT_EQ(r.details["odd_generators"], nlohmann::json::array({"x"}));
}

// |Aut(H)| frozen from an independent brute force over D_8 x Z_2^(m-3), with
// D_8 realised as symmetries of a square.
TEST(AutH, M4) {
  const CheckResult r = verify_aut_h_alternating(4);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.details["automorphisms"], 64);
  EXPECT_EQ(r.details["even"], 64);
  EXPECT_TRUE(r.details["contains_x"].get<bool>());
  EXPECT_TRUE(r.details["contains_identity"].get<bool>());
}

TEST(AutH, M5) {
  const CheckResult r = verify_aut_h_alternating(5);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.details["automorphisms"], 3072);
}

TEST(AutH, RefusesLargeM) { EXPECT_THROW(verify_aut_h_alternating(6), std::invalid_argument); }

TEST(ArrowChains, SingleStepExamplesM5) {
  const Construction c = build_construction(5);
  // display (1) with u = c_1: c_1^y = c_2 and c_2^z = c_1
  const HElement c1 = gen_c(5, 1), c2 = gen_c(5, 2);
  EXPECT_EQ(c.y[c1.index()], c2.index());
  EXPECT_EQ(c.z[c2.index()], c1.index());
  // u = 1: a^2 -x-> a^2 -y-> b
  const HElement a2 = h_pow(gen_a(5), 2);
  EXPECT_EQ(c.x[a2.index()], a2.index());
  EXPECT_EQ(c.y[a2.index()], gen_b(5).index());
  const ArrowTally t = evaluate_arrow_chains(c, ChainForm::printed, {"odd: a^2 u"});
  EXPECT_TRUE(t.failures.empty());
  EXPECT_EQ(t.quantified, 2u);
}

TEST(ArrowChains, CorrectedFormHoldsForAllM) {
  for (int m = 5; m <= 11; m += 2) {
    const CheckResult r = verify_arrow_chains(m);
    EXPECT_EQ(r.status, CheckStatus::pass) << m;
    EXPECT_FALSE(r.details["printed_form_holds"].get<bool>()) << m;
    EXPECT_TRUE(r.details.contains("errata"));
  }
  for (int m = 6; m <= 12; m += 2) {
    const CheckResult r = verify_arrow_chains(m);
    EXPECT_EQ(r.status, CheckStatus::pass) << m;
    EXPECT_TRUE(r.details["printed_form_holds"].get<bool>()) << m;
  }
}

TEST(ArrowChains, PrintedFormFailsExactlyAroundTheErratum) {
  for (int m = 5; m <= 9; m += 2) {
    const ArrowTally t = evaluate_arrow_chains(build_construction(m), ChainForm::printed, arrow_families(m));
    ASSERT_FALSE(t.failures.empty());
    for (const auto& f : t.failures) {
      EXPECT_EQ(f.family, "odd: u c_{m-3}");
      const bool into = f.word == "y" && f.target == "a^-1 u^y c_{m-6} c_{m-5} c_{m-4}";
      const bool out = f.word == "z" && f.source == "a^-1 u^y c_{m-6} c_{m-5} c_{m-4}";
      EXPECT_TRUE(into || out) << f.source << " " << f.word << " " << f.target;
    }
    // every u fails both arrows
    EXPECT_EQ(t.failures.size(), 2 * t.quantified);
  }
}

TEST(ArrowChains, M4ReportsDegenerateFamilies) {
  const CheckResult r = verify_arrow_chains(4);
  EXPECT_EQ(r.status, CheckStatus::pass);
  ASSERT_TRUE(r.details.contains("reported"));
  EXPECT_EQ(r.details["reported"]["families"].size(), 3u);
  EXPECT_GT(r.details["reported"]["failure_count"].get<int>(), 0);
  EXPECT_TRUE(arrow_family_degenerate_at_m4("even: u c_{m-4} c_{m-3}"));
  EXPECT_FALSE(arrow_family_degenerate_at_m4("even: u c_{m-3}"));
}

TEST(ArrowChains, WrongParityFamilyRejected) {
  EXPECT_THROW(evaluate_arrow_chains(build_construction(6), ChainForm::printed, {"odd: u"}),
               std::invalid_argument);
  EXPECT_THROW(arrow_family_degenerate_at_m4("nonsense"), std::invalid_argument);
}

TEST(ArrowChains, CorruptedZFails) {
  Construction c = build_construction(5);
  c.z = swap_entries(c.z, gen_c(5, 2).index(), gen_c(5, 1).index());
  EXPECT_EQ(verify_arrow_chains(c).status, CheckStatus::fail);
}

TEST(Xyz8, M5) {
  const CheckResult r = verify_xyz8_cycles(5);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.details["fixed_points"], 20);
  EXPECT_EQ(r.details["three_cycles_expected"], 4);
  EXPECT_EQ(r.details["cycle_type"]["3"], 4);
}

TEST(Xyz8, OddAndEvenUpTo11) {
  for (int m = 5; m <= 11; ++m) {
    const CheckResult r = verify_xyz8_cycles(m);
    EXPECT_EQ(r.status, CheckStatus::pass) << m;
    EXPECT_EQ(r.details["fixed_points"], 5u << (m - 3)) << m;
  }
  EXPECT_EQ(verify_xyz8_cycles(7).details["fixed_points"], 80);
}

TEST(Xyz8, M4IsReported) {
  const CheckResult r = verify_xyz8_cycles(4);
  EXPECT_EQ(r.status, CheckStatus::report);
  EXPECT_EQ(r.details["fixed_points"], 10);
  EXPECT_TRUE(r.details["fixed_points_equal_formula"].get<bool>());
}

TEST(Xyz8, PredictedIsProductOfThreeCycles) {
  const Permutation p = predicted_xyz8_odd(7);
  for (std::size_t len : cycle_lengths(p)) EXPECT_TRUE(len == 1 || len == 3);
  EXPECT_THROW(predicted_xyz8_odd(6), std::invalid_argument);
}

TEST(TransitiveHStar, Sizes) {
  EXPECT_EQ(verify_transitive_hstar(4).details["orbit_size"], 15);
  EXPECT_EQ(verify_transitive_hstar(5).details["orbit_size"], 31);
  for (int m = 4; m <= 10; ++m) {
    const CheckResult r = verify_transitive_hstar(m);
    EXPECT_EQ(r.status, CheckStatus::pass) << m;
    EXPECT_FALSE(r.details["orbit_contains_identity"].get<bool>());
  }
}

TEST(WordWitnesses, M5) {
  const CheckResult r = verify_word_witnesses(5);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.details["elements"], 30);
  EXPECT_EQ(r.details["target"], "c2");
}

TEST(WordWitnesses, M6TargetsH) {
  const CheckResult r = verify_word_witnesses(6);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.details["target"], "a c1 c3");
}

TEST(WordWitnesses, TargetReachesItselfWithEmptyWord) {
  const Construction c = build_construction(5);
  const GeneratedGroup g({c.x, c.y, c.z});
  const auto w = find_word(g, gen_c(5, 2).index(), gen_c(5, 2).index());
  ASSERT_TRUE(w.has_value());
  EXPECT_TRUE(w->empty());
}

TEST(WordWitnesses, AllUpTo10) {
  for (int m = 4; m <= 10; ++m) EXPECT_EQ(verify_word_witnesses(m).status, CheckStatus::pass) << m;
}

TEST(FullAlternating, ChainM4) {
  AltOptions o;
  o.strategy = AltStrategy::chain;
  const CheckResult r = verify_full_alternating(4, o);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.details["order"], "10461394944000");
}

TEST(FullAlternating, StrategiesAgreeAtM6) {
  AltOptions chain, jordan;
  chain.strategy = AltStrategy::chain;
  jordan.strategy = AltStrategy::jordan;
  EXPECT_EQ(verify_full_alternating(6, chain).status, CheckStatus::pass);
  const CheckResult j = verify_full_alternating(6, jordan);
  EXPECT_EQ(j.status, CheckStatus::pass);
  EXPECT_TRUE(j.details["z_in_y_R"].get<bool>());
}

TEST(FullAlternating, JordanM10Seed1) {
  const CheckResult r = verify_full_alternating(10);
  EXPECT_EQ(r.details["strategy"], "jordan");
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.details["certificate"]["status"], "proven");
  EXPECT_EQ(r.details["certificate"]["seed"], 1);
}

TEST(FullAlternating, ChainAboveCapRefused) {
  AltOptions o;
  o.strategy = AltStrategy::chain;
  EXPECT_THROW(verify_full_alternating(9, o), DegreeCapExceeded);
}

TEST(FullAlternating, Deterministic) {
  AltOptions o;
  o.strategy = AltStrategy::jordan;
  EXPECT_EQ(to_json(verify_full_alternating(9, o)), to_json(verify_full_alternating(9, o)));
}

TEST(Cubic, Sizes) {
  EXPECT_EQ(verify_cubic(4).details["double_coset_size"], 48);
  EXPECT_EQ(verify_cubic(5).details["double_coset_size"], 96);
  for (int m = 4; m <= 8; ++m) {
    const CheckResult r = verify_cubic(m);
    EXPECT_EQ(r.status, CheckStatus::pass) << m;
    EXPECT_TRUE(r.details["equals_three_right_cosets"].get<bool>());
  }
}

TEST(Cubic, YConjugationAtM4) {
  const Permutation y = build_y(4);
  EXPECT_TRUE(is_translation(compose(y, build_R(gen_b(4)), y), 4));
  EXPECT_FALSE(is_translation(compose(y, build_R(gen_a(4)), y), 4));
}

TEST(Cubic, CapRefused) { EXPECT_THROW(verify_cubic(6, 100), ClosureCapExceeded); }

TEST(FixPatterns, M5) {
  const Construction c = build_construction(5);
  EXPECT_EQ(fix_star(c.y).size(), 7u);
  const FixPatternAnalysis a = analyze_fix_patterns(c);
  EXPECT_TRUE(a.closed_form_holds);
  EXPECT_EQ(a.empty_side_size, 0u);
  EXPECT_EQ(a.printed_witness.to_string(), "b c1 c2");
  EXPECT_TRUE(a.printed_witness_in);
  EXPECT_EQ(verify_fix_patterns(c).status, CheckStatus::pass);
}

TEST(FixPatterns, M7) {
  const FixPatternAnalysis a = analyze_fix_patterns(build_construction(7));
  EXPECT_EQ(a.empty_side, "Fix(z) ∩ Fix(xzx)");
  EXPECT_EQ(a.empty_side_size, 0u);
  EXPECT_EQ(a.printed_witness.to_string(), "a^2 b c1 c2 c3 c4");
  EXPECT_TRUE(a.printed_witness_in);
}

TEST(FixPatterns, M4WitnessCollapsesToB) {
  const FixPatternAnalysis a = analyze_fix_patterns(build_construction(4));
  EXPECT_EQ(a.printed_witness, gen_b(4));
  EXPECT_TRUE(a.printed_witness_in);
  EXPECT_EQ(a.empty_side_size, 0u);
  EXPECT_EQ(verify_fix_patterns(4).status, CheckStatus::pass);
}

TEST(FixPatterns, PrintedWitnessFailsAtM8AndM12) {
  for (int m : {8, 12}) {
    const FixPatternAnalysis a = analyze_fix_patterns(build_construction(m));
    EXPECT_FALSE(a.printed_witness_in) << m;
    EXPECT_TRUE(a.corrected_witness_in) << m;
    const CheckResult r = verify_fix_patterns(m);
    EXPECT_EQ(r.status, CheckStatus::pass) << m;
    EXPECT_TRUE(r.details.contains("errata"));
  }
}

TEST(FixPatterns, SizesDifferForAllM) {
  for (int m = 4; m <= 12; ++m) {
    const FixPatternAnalysis a = analyze_fix_patterns(build_construction(m));
    EXPECT_NE(a.empty_side_size, a.witness_side_size) << m;
    EXPECT_TRUE(a.translation_holds) << m;
    EXPECT_EQ(verify_fix_patterns(m).status, CheckStatus::pass) << m;
  }
}

TEST(VectorTransitivity, Ell2Images) {
  const auto g = vector_generators(2);
  EXPECT_EQ(g[0], Permutation::transposition(4, 2, 3));
  EXPECT_EQ(g[1], Permutation::transposition(4, 1, 2));
  EXPECT_EQ(verify_vector_transitivity(2).details["orbit_size"], 4);
}

TEST(VectorTransitivity, Orbits) {
  EXPECT_EQ(verify_vector_transitivity(4).details["orbit_size"], 16);
  const CheckResult r = verify_vector_transitivity(12);
  EXPECT_EQ(r.status, CheckStatus::pass);
  EXPECT_EQ(r.details["orbit_size"], 4096);
}

TEST(VectorTransitivity, OddEllRejected) {
  EXPECT_THROW(verify_vector_transitivity(3), std::invalid_argument);
  EXPECT_THROW(verify_vector_transitivity(0), std::invalid_argument);
}

TEST(CheckResultJson, RoundTrip) {
  const CheckResult r = verify_fix_patterns(6);
  const CheckResult back = check_result_from_json(to_json(r));
  EXPECT_EQ(to_json(back), to_json(r));
  EXPECT_THROW(parse_status("maybe"), std::invalid_argument);
}
