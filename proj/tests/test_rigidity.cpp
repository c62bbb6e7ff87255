#include <gtest/gtest.h>

#include "hororigid/hororigid.hpp"
#include "oracles/freudenthal.hpp"
#include "support/properties.hpp"

using namespace hororigid;

namespace {

const std::vector<FamilyRecord>& catalog() {
    static const auto c = builtin_catalog();
    return c;
}

HorosphericalDatum with_a1(HorosphericalDatum d, int a1) {
    d.a1 = a1;
    return d;
}

HorosphericalDatum hirzebruch(int a1) {
    return {make_root_system("A1x-xC*"), 0, RootRef::none(), RootRef::none(), a1, std::nullopt};
}

HorosphericalDatum v1(int a1) { return with_a1(find_case(catalog(), "E6", "(V)(1)"), a1); }

HorosphericalDatum xviii8(const std::string& g0, int a1, int b = 1) {
    return with_a1(find_case(catalog(), g0 + "xG2", "XVIII.8", {{"b", b}}), a1);
}

void expect_ok(const props::Outcome& o) {
    EXPECT_GT(o.checked, 0u) << o.name;
    for (const auto& f : o.failures) ADD_FAILURE() << o.name << ": " << f;
}

} // namespace

TEST(Characters, WorkedExampleChiY) {
    for (int a1 = 0; a1 <= 4; ++a1) {
        EXPECT_EQ(chi_Y(v1(a1)), (Weight{a1, -1, 1, 0, 0, 0}));
        EXPECT_EQ(chi_Z(v1(a1)), -chi_Y(v1(a1)));
    }
}

TEST(Characters, ImaginaryRootsContributeNothing) {
    EXPECT_EQ(chi_Y(hirzebruch(5)), (Weight{5}));
    EXPECT_EQ(chi_Z(hirzebruch(5)), (Weight{-5}));
}

TEST(CdCoefficients, FirstFamily) {
    for (int i = 2; i <= 5; ++i) {
        const auto d = find_case(catalog(), "A6", "I.3", {{"i", i}});
        const auto cd = cd_coefficients(d, Source::Alpha1);
        EXPECT_EQ(cd.c, 1);
        EXPECT_EQ(cd.d, 1);
    }
}

TEST(CdCoefficients, G2ShortBetaGivesThree) {
    const auto d = find_case(catalog(), "G2xA1", "XVII.1");
    EXPECT_EQ(cd_coefficients(d, Source::Alpha0).d, 3);
    EXPECT_EQ(cd_coefficients(d, Source::Alpha0).c, 0);
}

TEST(CdCoefficients, ImaginaryConventionIsZero) {
    const auto d = find_case(catalog(), "G2xC*", "XVII.1");
    ASSERT_TRUE(d.alpha1.imaginary);
    const auto cd = cd_coefficients(d, Source::Alpha1);
    EXPECT_EQ(cd.c, 0);
    EXPECT_EQ(cd.d, 0);
    EXPECT_TRUE(cd.alpha_prime.imaginary);
    // alpha_0 concrete, alpha_1 imaginary: c of alpha_0 is 0 as well
    EXPECT_EQ(cd_coefficients(d, Source::Alpha0).c, 0);
}

TEST(CdCoefficients, AlphaPrimeLiesInTheLevi) {
    for (const auto& inst : instantiate(catalog(), 6)) {
        const auto& d = inst.datum;
        for (Source s : {Source::Alpha0, Source::Alpha1}) {
            const auto cd = cd_coefficients(d, s);
            if (cd.alpha_prime.imaginary) continue;
            EXPECT_NE(cd.alpha_prime.index, d.beta);
            const auto& other = other_root(d, s);
            EXPECT_FALSE(other.is(cd.alpha_prime.index)) << describe(d);
        }
    }
}

TEST(Linkage, TableExamples) {
    const auto i3 = find_case(catalog(), "A4", "I.3", {{"i", 2}});
    const auto l = linkage_AB(i3, Orbit::Y);
    EXPECT_EQ(l.A, 0);
    EXPECT_EQ(l.B, 1);
    const auto x = linkage_AB(find_case(catalog(), "G2xA2", "XVII.1"), Orbit::Y);
    EXPECT_EQ(x.A, 1);
    EXPECT_EQ(x.B, 0);
}

TEST(Linkage, EighteenthFamiliesHaveZeroAB) {
    for (const auto& inst : instantiate(catalog(), 5)) {
        if (inst.label.rfind("XVIII", 0) != 0) continue;
        const auto l = linkage_AB(inst.datum, Orbit::Y);
        EXPECT_EQ(l.A, 0) << inst.label;
        EXPECT_EQ(l.B, 0) << inst.label;
    }
}

TEST(TheoremVerdict, Examples) {
    const auto i3 = find_case(catalog(), "A5", "I.3", {{"i", 3}});
    EXPECT_EQ(theorem_verdict(with_a1(i3, 1), Orbit::Y), Verdict::Nontrivial);
    EXPECT_EQ(theorem_verdict(with_a1(i3, 0), Orbit::Y), Verdict::Trivial);
    EXPECT_EQ(theorem_verdict(with_a1(i3, 2), Orbit::Y), Verdict::Trivial);
    const auto ii3 = find_case(catalog(), "B5", "II.3", {{"p", 2}});
    EXPECT_EQ(theorem_verdict(with_a1(ii3, 0), Orbit::Y), Verdict::Nontrivial);
}

TEST(TheoremVerdict, ExcludedShapeIsNotApplicable) {
    for (const auto& g0 : {"A1", "A3", "B3", "G2"}) {
        EXPECT_EQ(theorem_verdict(xviii8(g0, 1), Orbit::Y), Verdict::NotApplicable);
        EXPECT_EQ(theorem_verdict(xviii8(g0, 1), Orbit::Z), Verdict::NotApplicable);
    }
}

TEST(OrbitAnalysis, WorkedExampleLoweredWeightAndVanishing) {
    for (int a1 = 0; a1 <= 10; ++a1) {
        const auto a = orbit_analysis(v1(a1), Orbit::Y);
        EXPECT_EQ(a.lowered, (Weight{a1, -1, -1, -1, -1, -2}));
        EXPECT_FALSE(a.h1.nonzero);
        EXPECT_FALSE(a.result.nonzero);
        EXPECT_TRUE(a.agreement);
    }
}

TEST(OrbitAnalysis, EighteenthEightOrbitZ) {
    for (const auto& g0 : {"A1", "A2", "A4", "B2", "B3", "C3", "D4", "G2", "F4", "E6"}) {
        for (int a1 = 1; a1 <= 6; ++a1) {
            const auto d = xviii8(g0, a1);
            const auto z = orbit_analysis(d, Orbit::Z);
            ASSERT_TRUE(z.h1.nonzero) << g0 << " a1=" << a1;
            EXPECT_EQ(z.h1.highest_weight, a1 * fundamental_weight(d.rs, d.beta)) << g0;
        }
    }
}

TEST(OrbitAnalysis, EighteenthEightPrimeHasSectionsOnZ) {
    for (int a1 = 1; a1 <= 5; ++a1) {
        const auto d = with_a1(find_case(catalog(), "A3xG2", "XVIII.8'", {{"b", 2}}), a1);
        const auto z = orbit_analysis(d, Orbit::Z);
        EXPECT_TRUE(z.h0.nonzero);
        EXPECT_FALSE(z.h1.nonzero);
    }
}

TEST(OrbitAnalysis, Hirzebruch) {
    for (int a1 = 2; a1 <= 7; ++a1) {
        const auto y = orbit_analysis(hirzebruch(a1), Orbit::Y);
        ASSERT_TRUE(y.h1.nonzero);
        EXPECT_EQ(y.h1.highest_weight, (Weight{a1 - 2}));
        EXPECT_TRUE(orbit_analysis(hirzebruch(a1), Orbit::Z).h0.nonzero);
    }
    EXPECT_FALSE(orbit_analysis(hirzebruch(1), Orbit::Y).result.nonzero);
}

TEST(Fano, ZeroA1IsAlwaysFano) {
    for (const auto& cd : dedupe(instantiate(catalog(), 6))) EXPECT_EQ(fano_status(with_a1(cd.datum, 0)).status, FanoStatus::Fano);
}

TEST(Fano, Examples) {
    EXPECT_EQ(fano_status(xviii8("A2", 1)).status, FanoStatus::Fano);
    EXPECT_EQ(fano_status(xviii8("A2", 1)).a_alpha1, 2);
    const auto h = fano_status(hirzebruch(2));
    EXPECT_EQ(h.status, FanoStatus::WeakFano);
    EXPECT_EQ(h.a_beta, 2);
    EXPECT_EQ(h.a_alpha1, 1);
    EXPECT_EQ(fano_status(hirzebruch(3)).status, FanoStatus::Neither);
}

TEST(Obstruction, WeakFanoReason) {
    const auto v = obstruction_verdict(hirzebruch(2));
    EXPECT_TRUE(v.trivial);
    EXPECT_EQ(v.reason, "weak Fano");
}

TEST(Obstruction, SeventeenthFamilyAtTwo) {
    const auto d = with_a1(find_case(catalog(), "G2xA3", "XVII.1"), 2);
    EXPECT_TRUE(obstruction_verdict(d).trivial);
    EXPECT_EQ(orbit_analysis(d, Orbit::Z).lambda, 0);
}

TEST(Obstruction, SecondCohomologyForA2) {
    for (int b = 1; b <= 2; ++b) {
        for (int a1 = 0; a1 <= 2; ++a1) EXPECT_FALSE(orbit_analysis(xviii8("A2", a1, b), Orbit::Y).h2.nonzero);
        for (int a1 = 3; a1 <= 6; ++a1) {
            const auto d = xviii8("A2", a1, b);
            const auto y = orbit_analysis(d, Orbit::Y);
            ASSERT_TRUE(y.h2.nonzero) << a1;
            // (a1 - 3) on the A2 node other than beta
            const int other = d.beta == 0 ? 1 : 0;
            auto want = (a1 - 3) * fundamental_weight(d.rs, other) + fundamental_weight(d.rs, d.alpha1.index);
            EXPECT_EQ(y.h2.highest_weight, want);
            EXPECT_FALSE(obstruction_verdict(d).trivial);
        }
    }
    // dimension of V(w_alpha1) on the G2 factor, from multiplicities
    const auto g2 = make_root_system("G2");
    EXPECT_EQ(oracle::Freudenthal(g2).dimension({1, 0}), 7);
    const auto r = rigidity_report(xviii8("A2", 3));
    EXPECT_EQ(r.h2_total_dim, 7);
}

TEST(Obstruction, OtherRanksOfTheEighteenthEightVanish) {
    for (const auto& g0 : {"A1", "A3", "A4", "B3", "G2"})
        for (int a1 = 0; a1 <= 6; ++a1) EXPECT_TRUE(obstruction_verdict(xviii8(g0, a1)).trivial) << g0 << " a1=" << a1;
}

TEST(Report, WorkedExampleIsRigid) {
    for (int a1 = 0; a1 <= 10; ++a1) {
        const auto r = rigidity_report(v1(a1));
        EXPECT_TRUE(r.locally_rigid);
        EXPECT_EQ(r.h1_total_dim, 0);
        EXPECT_TRUE(r.agreement);
    }
}

TEST(Report, HirzebruchDimension) {
    EXPECT_EQ(rigidity_report(hirzebruch(4)).h1_total_dim, 3);
    for (int a1 = 2; a1 <= 9; ++a1) EXPECT_EQ(rigidity_report(hirzebruch(a1)).h1_total_dim, a1 - 1);
}

TEST(Report, BothOrbitsForA1) {
    for (int a1 = 2; a1 <= 6; ++a1) {
        const auto r = rigidity_report(xviii8("A1", a1));
        EXPECT_TRUE(r.Y.h1.nonzero);
        EXPECT_TRUE(r.Z.h1.nonzero);
        EXPECT_FALSE(r.locally_rigid);
    }
    const auto one = rigidity_report(xviii8("A1", 1));
    EXPECT_FALSE(one.Y.h1.nonzero);
    EXPECT_TRUE(one.Z.h1.nonzero);
}

TEST(Report, RigidityMatchesBothOrbits) {
    for (const auto& cd : dedupe(instantiate(catalog(), 5)))
        for (int a1 = 0; a1 <= 3; ++a1) {
            const auto r = rigidity_report(with_a1(cd.datum, a1));
            EXPECT_EQ(r.locally_rigid, !r.Y.h1.nonzero && !r.Z.h1.nonzero);
        }
}

TEST(DatumValidation, Errors) {
    const auto a3 = make_root_system("A3");
    auto bad = [&](HorosphericalDatum d) { EXPECT_THROW(d.validate(), DatumError); };
    bad({a3, 3, RootRef::concrete(0), RootRef::concrete(1), 0, std::nullopt});
    bad({a3, 0, RootRef::concrete(0), RootRef::concrete(1), 0, std::nullopt});
    bad({a3, 0, RootRef::concrete(1), RootRef::concrete(1), 0, std::nullopt});
    bad({a3, 0, RootRef::none(), RootRef::concrete(1), 0, std::nullopt});
    bad({a3, 0, RootRef::concrete(2), RootRef::none(), 0, std::nullopt});
    bad({a3, 0, RootRef::concrete(1), RootRef::concrete(2), -1, std::nullopt});
    bad({make_root_system("A1xA2"), 1, RootRef::concrete(0), RootRef::concrete(2), 0, std::nullopt});
    bad({make_root_system("-xA2"), 0, RootRef::concrete(1), RootRef::none(), 0, std::nullopt});
    EXPECT_THROW(rigidity_report({a3, 0, RootRef::concrete(0), RootRef::concrete(1), 0, std::nullopt}), DatumError);
    EXPECT_NO_THROW(hirzebruch(0).validate());
}

TEST(CanonicalKey, DiagramSymmetries) {
    const auto a3 = make_root_system("A3");
    const HorosphericalDatum x{a3, 0, RootRef::concrete(1), RootRef::concrete(2), 0, std::nullopt};
    const HorosphericalDatum y{a3, 2, RootRef::concrete(1), RootRef::concrete(0), 0, std::nullopt};
    EXPECT_NE(x.key(), y.key());
    EXPECT_EQ(x.canonical_key(), y.canonical_key());
    const HorosphericalDatum z{a3, 1, RootRef::concrete(0), RootRef::concrete(2), 0, std::nullopt};
    EXPECT_NE(x.canonical_key(), z.canonical_key());
}

TEST(CanonicalKey, C2IsB2) {
    const HorosphericalDatum c{make_root_system("C2xA1"), 0, RootRef::concrete(1), RootRef::concrete(2), 0, std::nullopt};
    const HorosphericalDatum b{make_root_system("B2xA1"), 1, RootRef::concrete(0), RootRef::concrete(2), 0, std::nullopt};
    EXPECT_EQ(c.canonical_key(), b.canonical_key());
    for (int a1 = 0; a1 <= 4; ++a1) {
        const auto rc = rigidity_report(with_a1(c, a1));
        const auto rb = rigidity_report(with_a1(b, a1));
        EXPECT_EQ(rc.h1_total_dim, rb.h1_total_dim);
        EXPECT_EQ(rc.h2_total_dim, rb.h2_total_dim);
    }
}

TEST(CanonicalKey, D4Triality) {
    const auto d4 = make_root_system("D4");
    const HorosphericalDatum x{d4, 1, RootRef::concrete(0), RootRef::concrete(2), 0, std::nullopt};
    const HorosphericalDatum y{d4, 1, RootRef::concrete(3), RootRef::concrete(0), 0, std::nullopt};
    EXPECT_EQ(x.canonical_key(), y.canonical_key());
}

TEST(Swapped, ExchangesRootsAndFactors) {
    const auto s = hirzebruch(3).swapped();
    EXPECT_EQ(s.rs.name(), "A1xC*x-");
    EXPECT_EQ(s.swapped().rs.name(), "A1x-xC*");
}

TEST(Properties, FundamentalWeightImage) { expect_ok(props::fundamental_weight_image()); }
TEST(Properties, MaximalCoroot) { expect_ok(props::maximal_coroot_check()); }
TEST(Properties, CValuesUpToRankEight) { expect_ok(props::c_values_scan()); }
TEST(Properties, FixedWeights) { expect_ok(props::fixed_weights()); }

TEST(Properties, OracleEquivalenceOnTheCatalog) {
    const auto corpus = props::catalog_corpus(9, 6);
    expect_ok(props::oracle_equivalence(corpus, "catalog"));
    expect_ok(props::single_degree(corpus));
    expect_ok(props::swap_parity(corpus));
}

TEST(Properties, OracleEquivalenceOnABruteScan) {
    ScanConfig cfg;
    cfg.max_rank = 5;
    cfg.max_a1 = 4;
    cfg.g0_g1 = true;
    expect_ok(props::scan_equivalence(cfg));
}

TEST(Properties, CExceedsTwoOnlyAtTheKnownExceptions) {
    // the excluded E7/E8 positions really do produce c > 2
    bool seen = false;
    const auto e8 = make_root_system("E8");
    props::for_each_triple(e8, [&](const HorosphericalDatum& d) {
        if (d.alpha0.imaginary || d.beta != 7) return;
        if (cd_coefficients(d, Source::Alpha1).c > 2) seen = true;
    });
    EXPECT_TRUE(seen);
}
