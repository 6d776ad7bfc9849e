#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace intprob;
using fixtures::Entries;
using fixtures::set;

TEST(MassFunction, Validation)
{
    const auto f = fixtures::xyz();
    EXPECT_THROW(MassFunction(f, Entries{{set(f, {"x"}), .5}}), domain_error);
    EXPECT_THROW(MassFunction(f, Entries{{set(f, {"x"}), 1.2}, {set(f, {"y"}), -.2}}), domain_error);
    EXPECT_THROW(MassFunction(f, Entries{{Subset(), .5}, {set(f, {"y"}), .5}}), domain_error);
    EXPECT_THROW(MassFunction(f, Entries{{Subset(0b1000), .5}, {set(f, {"y"}), .5}}), domain_error);
    EXPECT_THROW(MassFunction(f, Entries{{set(f, {"x"}), std::nan("")}}), domain_error);
    EXPECT_NO_THROW(MassFunction(f, Entries{{set(f, {"x"}), 1.2}, {set(f, {"y"}), -.2}}, true));
}

TEST(MassFunction, DuplicatesAccumulateAndZerosDrop)
{
    const auto f = fixtures::xyz();
    const MassFunction m(f, Entries{{set(f, {"x"}), .25}, {set(f, {"x"}), .25}, {set(f, {"y"}), .5}, {set(f, {"z"}), 0.0}});
    EXPECT_DOUBLE_EQ(m.mass(set(f, {"x"})), .5);
    EXPECT_EQ(m.focal().size(), 2u);
    EXPECT_EQ(m.max_focal_size(), 1u);
}

TEST(MassFunction, VacuousAndBayesian)
{
    const auto f = fixtures::xyz();
    const auto v = MassFunction::vacuous(f);
    EXPECT_DOUBLE_EQ(v.mass(f.full()), 1.0);
    EXPECT_EQ(classify(v), MassClass::consonant);
    EXPECT_EQ(classify(fixtures::bayesian()), MassClass::bayesian);
    EXPECT_EQ(classify(fixtures::ternary()), MassClass::general);
    EXPECT_STREQ(to_string(MassClass::general), "general");
    const auto p = Distribution(f, {.2, .3, .5});
    const auto m = MassFunction::from_distribution(p);
    EXPECT_EQ(m.singleton_masses(), (std::vector<double>{.2, .3, .5}));
}

TEST(MassFunction, ConsonantChain)
{
    const auto f = fixtures::xyz();
    const MassFunction m(f, Entries{{set(f, {"x"}), .5}, {set(f, {"x", "z"}), .3}, {f.full(), .2}});
    EXPECT_EQ(classify(m), MassClass::consonant);
}

TEST(BeliefPlausibility, MatchBruteForce)
{
    for (std::uint64_t seed = 0; seed < 30; ++seed) {
        const auto frame = Frame::of_size(2 + seed % 5);
        const auto m = random_mass(frame, seed, MassProfile::dense());
        const auto bel = belief_values(m);
        const auto pl = plausibility_values(m);
        for (mask_t a = 0; a < frame.subset_count(); ++a) {
            EXPECT_NEAR(bel(Subset(a)), oracle::bel(m, a), 1e-12);
            EXPECT_NEAR(pl(Subset(a)), oracle::pl(m, a), 1e-12);
            EXPECT_NEAR(pl(Subset(a)), 1.0 - bel(frame.complement(Subset(a))), 1e-12);
            EXPECT_LE(bel(Subset(a)), pl(Subset(a)) + 1e-12);
        }
    }
}

TEST(BeliefPlausibility, MonotoneAndNormalised)
{
    const auto m = fixtures::ternary();
    const auto bel = belief_values(m);
    EXPECT_DOUBLE_EQ(bel(Subset()), 0.0);
    EXPECT_NEAR(bel(m.frame().full()), 1.0, 1e-12);
    for (mask_t a = 0; a < 8; ++a)
        for (mask_t b = 0; b < 8; ++b)
            if (oracle::subset(a, b))
                EXPECT_LE(bel(Subset(a)), bel(Subset(b)) + 1e-12);
}

TEST(MobiusPlausibility, MixedMassTable)
{
    const auto m = fixtures::mixed_mass();
    const auto& f = m.frame();
    const auto mu = mobius_plausibility(m);
    // x, y, z, xy, xz, yz, xyz
    const std::vector<std::pair<Subset, double>> expected{
        {set(f, {"x"}), .8},       {set(f, {"y"}), .6},       {set(f, {"z"}), .6},      {set(f, {"x", "y"}), -.6},
        {set(f, {"x", "z"}), -.4}, {set(f, {"y", "z"}), -.3}, {f.full(), .3}};
    for (const auto& [s, v] : expected) {
        EXPECT_NEAR(mu(s), v, 1e-3);
        EXPECT_NEAR(mu(s), oracle::mu(m, s.bits()), 1e-12);
    }
}

TEST(MobiusPlausibility, SingletonIdentity)
{
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        const auto frame = Frame::of_size(2 + seed % 5);
        const auto m = random_mass(frame, 1000 + seed, MassProfile::dense());
        const auto mu = mobius_plausibility(m);
        double total = 0;
        for (mask_t a = 1; a < frame.subset_count(); ++a)
            total += mu(Subset(a));
        EXPECT_NEAR(total, 1.0, 1e-9);
        for (std::size_t x = 0; x < frame.size(); ++x) {
            double s = 0;
            for (mask_t a = 1; a < frame.subset_count(); ++a)
                if (Subset(a).contains(x))
                    s += mu(Subset(a));
            EXPECT_NEAR(s, m.mass(Subset::singleton(x)), 1e-9);
        }
    }
}

TEST(MobiusPlausibility, AsPseudoMass)
{
    const auto mu = plausibility_assignment(fixtures::mixed_mass());
    EXPECT_TRUE(mu.pseudo());
    EXPECT_NEAR(mu.mass(fixtures::set(mu.frame(), {"x", "y"})), -.6, 1e-12);
}

TEST(SetFunction, MassRoundTrip)
{
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        const auto m = random_mass(Frame::of_size(4), seed, MassProfile::dense());
        EXPECT_LT(max_abs_diff(mass_from_set_function(belief_values(m), false), m), 1e-12);
    }
}

TEST(SingletonTotals, CardinalityIdentity)
{
    const auto t = singleton_totals(fixtures::ternary());
    EXPECT_NEAR(t.k_bel, .6, 1e-12);
    EXPECT_NEAR(t.k_pl, 1.5, 1e-12);
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto m = random_mass(Frame::of_size(2 + seed % 5), seed, MassProfile::dense());
        double k = 0;
        for (const auto& [a, v] : m.focal())
            k += v * a.size();
        EXPECT_NEAR(singleton_totals(m).k_pl, k, 1e-12);
    }
}

TEST(RandomMass, ProfilesAndDeterminism)
{
    const auto f = Frame::of_size(5);
    const auto a = random_mass(f, 3, MassProfile::dense()), b = random_mass(f, 3, MassProfile::dense());
    EXPECT_EQ(max_abs_diff(a, b), 0.0);
    EXPECT_EQ(a.focal().size(), 31u);
    const auto k2 = random_mass(f, 3, parse_profile("k-additive:2"));
    EXPECT_EQ(k2.max_focal_size(), 2u);
    const auto sf = random_mass(f, 3, parse_profile("singleton-free"));
    for (double v : sf.singleton_masses())
        EXPECT_EQ(v, 0.0);
    EXPECT_THROW(parse_profile("sparse"), parse_error);
    EXPECT_THROW(random_mass(f, 3, MassProfile::k_additive(6)), domain_error);
}
