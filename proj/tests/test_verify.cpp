#include <random>

#include <gtest/gtest.h>

#include "oracles.hpp"

using namespace intprob;

TEST(CombinationEquivalence, BayesianInputIsTrivial)
{
    const auto r = check_combination_equivalence(fixtures::bayesian(), Distribution::uniform(fixtures::xyz()));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.max_residual, 0.0);
}

TEST(CombinationEquivalence, HoldsExactlyWhenBetaIsOneHalf)
{
    // beta = 1/2 for every 2-additive mass; there the two combinations agree.
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto f = Frame::of_size(2 + seed % 4);
        const auto m = random_mass(f, seed, MassProfile::k_additive(2));
        const auto r = check_combination_equivalence(m, random_distribution(f, seed + 1));
        EXPECT_TRUE(r.pass) << r.max_residual;
    }
}

TEST(CombinationEquivalence, DiffersWhenBetaIsNotOneHalf)
{
    // varsigma has singleton plausibility beta m + (1 - beta) Pl, while the intersection
    // probability is (1 - beta) m + beta Pl: the weights are swapped.
    const auto m = fixtures::mixed_mass();
    const Distribution p(m.frame(), {.2, .5, .3});
    const auto r = check_combination_equivalence(m, p);
    EXPECT_FALSE(r.pass);
    EXPECT_GT(r.max_residual, 1e-2);
    ASSERT_TRUE(r.counterexample.has_value());
    const auto v = varsigma(m);
    const auto pl_v = plausibility_values(v.mass);
    const auto ms = m.singleton_masses(), pl = m.singleton_plausibilities();
    for (std::size_t x = 0; x < 3; ++x)
        EXPECT_NEAR(pl_v(Subset::singleton(x)), v.beta.value * ms[x] + (1 - v.beta.value) * pl[x], 1e-12);
    const auto d = dempster(v.mass, MassFunction::from_distribution(p)).singleton_masses();
    EXPECT_NEAR(d[0], .25, 1e-3);
    EXPECT_NEAR(d[1], .431, 1e-3);
    EXPECT_NEAR(d[2], .319, 1e-3);
    const auto e = dempster(MassFunction::from_distribution(intersection_probability(m)), MassFunction::from_distribution(p))
                       .singleton_masses();
    EXPECT_NEAR(e[0], .25, 1e-3);
    EXPECT_NEAR(e[1], .398, 1e-3);
    EXPECT_NEAR(e[2], .352, 1e-3);
}

TEST(RelativePlausibilityRepresentation, RandomPairs)
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto f = Frame::of_size(2 + seed % 4);
        const auto r = check_relative_plausibility_representation(random_mass(f, seed, MassProfile::dense()),
                                                                  random_distribution(f, seed + 9));
        EXPECT_TRUE(r.pass) << r.max_residual;
    }
}

TEST(AffineFormula, Endpoints)
{
    const auto m1 = fixtures::ternary(), m2 = fixtures::mixed_mass();
    const auto at1 = affine_formula_terms(m1, m2, 1.0);
    EXPECT_LT(max_abs_diff(at1.closed_form, intersection_probability(m1)), 1e-12);
    const auto at0 = affine_formula_terms(m1, m2, 0.0);
    EXPECT_LT(max_abs_diff(at0.closed_form, intersection_probability(m2)), 1e-12);
    EXPECT_THROW(check_affine_formula(m1, fixtures::bayesian(), .5), domain_error);
    EXPECT_THROW(check_affine_formula(m1, m2, 1.5), domain_error);
}

TEST(AffineFormula, RandomPairsAndAlphaGrid)
{
    for (std::uint64_t seed = 0; seed < 500; ++seed) {
        const auto f = Frame::of_size(2 + seed % 4);
        const auto m1 = random_mass(f, 2 * seed, MassProfile::dense());
        const auto m2 = random_mass(f, 2 * seed + 1, seed % 3 ? MassProfile::dense() : MassProfile::k_additive(2));
        for (double a : alpha_grid) {
            const auto r = check_affine_formula(m1, m2, a);
            EXPECT_TRUE(r.pass) << "seed " << seed << " a " << a << " residual " << r.max_residual;
        }
    }
}

TEST(AffineFormula, BinaryFrameClosedForm)
{
    const Frame f({"x", "y"});
    using E = std::vector<std::pair<Subset, double>>;
    const MassFunction m1(f, E{{Subset::singleton(0), .5}, {Subset::singleton(1), .2}, {f.full(), .3}});
    const MassFunction m2(f, E{{Subset::singleton(0), .1}, {Subset::singleton(1), .3}, {f.full(), .6}});
    const auto terms = affine_formula_terms(m1, m2, .4);
    // m1(Theta)/(m1(Theta)+m2(Theta)) [m2(x) + m2(Theta)/2] + m2(Theta)/(...) [m1(x) + m1(Theta)/2]
    EXPECT_NEAR(terms.t[0], (.3 * (.1 + .3) + .6 * (.5 + .15)) / .9, 1e-12);
    EXPECT_NEAR(terms.t[1], (.3 * (.3 + .3) + .6 * (.2 + .15)) / .9, 1e-12);
    EXPECT_TRUE(check_affine_formula(m1, m2, .4).pass);
}

TEST(Commutation, TwoAdditivePairsCommute)
{
    for (std::uint64_t seed = 0; seed < 50; ++seed) {
        const auto f = Frame::of_size(3 + seed % 3);
        const auto m1 = random_mass(f, seed, MassProfile::k_additive(2));
        const auto m2 = random_mass(f, seed + 77, MassProfile::k_additive(2));
        EXPECT_NEAR(beta(m1).value, .5, 1e-12);
        EXPECT_LT(commutation_residual(m1, m2).residual, 1e-9);
        EXPECT_TRUE(check_commutation_criteria(m1, m2).pass);
    }
}

TEST(Commutation, ConstructedPartners)
{
    std::mt19937_64 rng(21);
    for (std::uint64_t seed = 0; seed < 60; ++seed) {
        const auto f = Frame::of_size(3 + seed % 4);
        const auto m = random_mass(f, seed, MassProfile::dense());
        const auto r_eq = r_equal_partner(m, rng);
        EXPECT_LT(max_abs_diff(relative_uncertainty(m), relative_uncertainty(r_eq)), 1e-12);
        EXPECT_GT(std::abs(beta(m).value - beta(r_eq).value), 1e-6);
        const auto b_eq = beta_equal_partner(m, rng);
        EXPECT_NEAR(beta(m).value, beta(b_eq).value, 1e-12);
        EXPECT_GT(max_abs_diff(relative_uncertainty(m), relative_uncertainty(b_eq)), 1e-6);
        const auto s_eq = sigma_ratio_partner(m, rng);
        EXPECT_TRUE(sigma_ratio_condition(m, s_eq, 1e-12));
        const auto perm = permuted_partner(m, rng);
        for (const auto& other : {r_eq, b_eq, s_eq, perm}) {
            const auto rep = check_commutation_criteria(m, other);
            EXPECT_TRUE(rep.pass) << rep.max_residual;
            EXPECT_LT(commutation_residual(m, other).residual, 1e-9);
        }
    }
}

TEST(Commutation, GenericPairsShowWitnesses)
{
    std::size_t witnesses = 0;
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
        const auto f = Frame::of_size(3 + seed % 4);
        const auto m1 = random_mass(f, 2 * seed, MassProfile::dense());
        const auto m2 = random_mass(f, 2 * seed + 1, MassProfile::dense());
        const auto rep = check_commutation_criteria(m1, m2);
        EXPECT_TRUE(rep.pass);
        if (commutation_residual(m1, m2).residual > witness_threshold) {
            ++witnesses;
            EXPECT_FALSE(rep.note.empty());
        }
    }
    EXPECT_GE(witnesses, 95u);
}

TEST(Commutation, RejectsBayesianInput)
{
    EXPECT_THROW(check_commutation_criteria(fixtures::bayesian(), fixtures::ternary()), domain_error);
}

TEST(Report, PassMatchesTolerance)
{
    TheoremReport r{"x", 0, 0.0, 1e-9};
    r.record(1e-10, [] { return json(); });
    EXPECT_TRUE(r.pass);
    EXPECT_FALSE(r.counterexample);
    r.record(1e-3, [] { return json{{"k", 1}}; });
    EXPECT_FALSE(r.pass);
    EXPECT_TRUE(r.counterexample);
    r.record(std::nan(""), [] { return json(); });
    EXPECT_FALSE(r.pass);
    r.record(0.0, [] { return json(); });
    EXPECT_FALSE(r.pass);
    const auto j = to_json(r);
    EXPECT_EQ(j["id"], "x");
    EXPECT_FALSE(j["pass"].get<bool>());
}

TEST(RunAll, GuardsAndEmpty)
{
    EXPECT_TRUE(run_all(1, 0, 4).empty());
    EXPECT_THROW(run_all(1, 10, 7), domain_error);
    EXPECT_THROW(run_all(1, 10, 1), domain_error);
}

TEST(RunAll, DeterministicPerSeed)
{
    const auto a = run_all(42, 30, 5), b = run_all(42, 30, 5);
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i)
        EXPECT_EQ(to_json(a[i]).dump(), to_json(b[i]).dump());
}

TEST(RunAll, OnlyCombinationEquivalenceFails)
{
    for (std::size_t max_n : {2u, 4u, 6u}) {
        for (const auto& r : run_all(42, 100, max_n)) {
            if (r.id == "combination_equivalence")
                EXPECT_EQ(r.pass, max_n == 2); // binary frames always have beta = 1/2
            else
                EXPECT_TRUE(r.pass) << r.id << " " << to_json(r).dump();
        }
    }
}
