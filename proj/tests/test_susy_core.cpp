#include "qescal/root_count.hpp"
#include "qescal/susy.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace qescal;

namespace {

Rational R(long p, long q = 1) { return Rational(p, q); }

const std::vector<Rational> kAlphas{R(1, 2), R(1), R(2), R(7, 2)};

// Divides the scale by sqrt(E), the factor relating A- chi+_n to chi-_n.
QuasiPolyWave lowered_over_sqrt_energy(const SuperPotentialParams& p, int n) {
    const auto lowered = apply_ladder(p, LadderDirection::Minus, chi_plus(p, n));
    return lowered.with_scale(lowered.scale().over_sqrt(analytic_energy(p, Sector::Plus, n)));
}

}  // namespace

TEST(Params, ConstraintFixesG1) {
    EXPECT_EQ(make_params(R(1, 2)).g1(), R(1, 2));
    EXPECT_EQ(make_params(R(1)).g1(), R(2, 5));
    for (const auto& a : kAlphas) EXPECT_EQ(make_params(a).g1() * (2 * a + 3), R(2));
}

TEST(Params, RejectsNonPositiveAlpha) {
    EXPECT_THROW(make_params(R(0)), std::invalid_argument);
    EXPECT_THROW(make_params(R(-1)), std::invalid_argument);
}

TEST(Superpotential, HandSubstitution) {
    // 1 + (4/5)/(7/5) + 2
    EXPECT_NEAR(superpotential(make_params(R(1)), 1.0), 25.0 / 7.0, 1e-15);
    EXPECT_THROW(superpotential(make_params(R(1)), 0.0), std::domain_error);
}

TEST(Superpotential, LinearGrowthAtInfinity) {
    const auto p = make_params(R(1));
    for (double r : {1e2, 1e3, 1e4}) {
        const double excess = r * (superpotential(p, r) - r);
        EXPECT_NEAR(excess, 2.0 + 2.0, 1e-3 * 1e4 / r);  // (alpha + 1) + 2
    }
}

TEST(Superpotential, SymbolicFormMatchesNumeric) {
    for (const auto& a : kAlphas) {
        const auto w = make_params(a).coefficients();
        const auto form = superpotential_form(w);
        for (double r : {0.1, 0.7, 2.0, 5.5}) EXPECT_NEAR(form(r), superpotential(w, r), 1e-13 * superpotential(w, r));
    }
}

TEST(PartnerPotentials, ClosedFormValues) {
    const auto p = make_params(R(1));
    EXPECT_NEAR(partner_potential(p, Sector::Plus, 1.0), 12.0, 1e-14);
    const double W = superpotential(p, 1.0), dW = superpotential_derivative(p, 1.0);
    EXPECT_NEAR(partner_potential(p, Sector::Minus, 1.0), W * W - dW, 1e-12 * (W * W - dW));
}

TEST(PartnerPotentials, VMinusApproachesShiftedOscillator) {
    for (const auto& a : kAlphas) {
        const auto p = make_params(a);
        const double r = 1e3;
        EXPECT_NEAR(partner_potential(p, Sector::Minus, r) - r * r, to_double(2 * a + 5), 1e-4);
    }
}

TEST(PartnerPotentials, FactorizationAtRandomRadii) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> radius(0.05, 12.0);
    for (const auto& a : kAlphas) {
        const auto w = make_params(a).coefficients();
        for (int i = 0; i < 100; ++i) {
            const double r = radius(rng);
            for (Sector s : {Sector::Plus, Sector::Minus}) {
                const double V = partner_potential(w, s, r);
                EXPECT_LE(std::abs(factorized_potential(w, s, r) - V), 1e-11 * (1 + std::abs(V)));
            }
        }
    }
}

TEST(PartnerPotentials, FactorizationIsExactSymbolically) {
    for (const auto& a : kAlphas)
        for (Sector s : {Sector::Plus, Sector::Minus}) {
            const auto w = make_params(a).coefficients();
            EXPECT_EQ(factorized_potential_form(w, s), partner_potential_form(w, s));
        }
}

TEST(PartnerPotentials, DetuningBreaksFactorization) {
    const auto p = make_params(R(1));
    const auto w = detune(p, R(101, 100));
    for (Sector s : {Sector::Plus, Sector::Minus})
        EXPECT_NE(factorized_potential_form(w, s), partner_potential_form(p.coefficients(), s));
}

TEST(Energies, ExamplesAndIsospectrality) {
    EXPECT_EQ(analytic_energy(make_params(R(1)), Sector::Minus, 0), R(14));
    EXPECT_EQ(analytic_energy(make_params(R(1, 2)), Sector::Minus, 2), R(20));
    for (const auto& a : kAlphas)
        for (int n = 0; n <= 20; ++n) {
            const auto p = make_params(a);
            EXPECT_EQ(analytic_energy(p, Sector::Plus, n), analytic_energy(p, Sector::Minus, n));
        }
    EXPECT_THROW(analytic_energy(make_params(R(1)), Sector::Plus, -1), std::invalid_argument);
}

TEST(Waves, GroundStateShapes) {
    const auto p = make_params(R(1));
    const auto plus = chi_plus(p, 0);
    EXPECT_EQ(plus.power(), R(2));
    EXPECT_TRUE(plus.radial().is_polynomial());
    EXPECT_EQ(plus.num().degree(), 0);

    const auto minus = chi_minus(p, 0);
    EXPECT_EQ(minus.power(), R(3));
    const RationalFunction ratio(RationalPoly{R(7, 2), R(1)}, RationalPoly{R(5, 2), R(1)});
    EXPECT_TRUE(minus.radial().ratio_to(ratio).has_value());
}

TEST(Waves, ExceptionalFormEqualsLadderForm) {
    for (const auto& a : kAlphas)
        for (int n = 0; n <= 10; ++n)
            EXPECT_EQ(chi_minus_exceptional_ratio(a, n), chi_minus_ladder_bracket(make_params(a).coefficients(), n))
                << "alpha=" << a << " n=" << n;
}

TEST(Waves, DenominatorHasNoPositiveRoot) {
    for (const auto& a : kAlphas) {
        const auto chi = chi_minus(make_params(a), 3);
        EXPECT_EQ(count_positive_roots(chi.den()), 0);
        EXPECT_EQ(chi.den(), (RationalPoly{a + R(3, 2), R(1)}));
    }
}

TEST(Waves, RejectsDenominatorWithPositiveRoot) {
    const RationalFunction bad(RationalPoly{R(1)}, RationalPoly{R(-1), R(1)});
    EXPECT_THROW(QuasiPolyWave(Normalization{}, R(1), bad), std::domain_error);
}

TEST(Waves, NodeCountAndPhase) {
    for (const auto& a : kAlphas)
        for (int n = 0; n <= 8; ++n) {
            const auto chi = chi_minus(make_params(a), n);
            EXPECT_EQ(node_count(chi), n);
            EXPECT_EQ(chi.num().degree(), n + 1);
            EXPECT_EQ(count_negative_roots(chi.num()), 1);
            EXPECT_GT(chi(1e-3), 0.0);
        }
}

TEST(Ladder, LoweringMapsPlusToMinus) {
    for (const auto& a : kAlphas)
        for (int n = 0; n <= 8; ++n) {
            const auto p = make_params(a);
            EXPECT_TRUE(same_function(lowered_over_sqrt_energy(p, n), chi_minus(p, n))) << "alpha=" << a << " n=" << n;
        }
}

TEST(Ladder, RaisingAfterLoweringGivesEnergy) {
    for (const auto& a : kAlphas)
        for (int n = 0; n <= 8; ++n) {
            const auto p = make_params(a);
            const auto chi = chi_plus(p, n);
            const auto round = apply_ladder(p, LadderDirection::Plus, apply_ladder(p, LadderDirection::Minus, chi));
            const auto ratio = radial_ratio(round, chi);
            ASSERT_TRUE(ratio.has_value());
            EXPECT_EQ(*ratio, analytic_energy(p, Sector::Plus, n));
        }
}

TEST(Ladder, RaisingMinusReturnsToPlus) {
    const auto p = make_params(R(2));
    for (int n = 0; n <= 5; ++n) {
        const auto up = apply_ladder(p, LadderDirection::Plus, chi_minus(p, n));
        const auto r = radial_ratio(up, chi_plus(p, n));
        ASSERT_TRUE(r.has_value());
        EXPECT_GT(*r, 0);
    }
}

TEST(Schrodinger, ResidualVanishesExactly) {
    for (const auto& a : kAlphas)
        for (int n = 0; n <= 8; ++n) {
            const auto p = make_params(a);
            const auto E = analytic_energy(p, Sector::Minus, n);
            EXPECT_TRUE(schrodinger_residual(chi_minus(p, n), partner_potential_form(p.coefficients(), Sector::Minus), E)
                            .is_zero());
            EXPECT_TRUE(
                schrodinger_residual(chi_plus(p, n), partner_potential_form(p.coefficients(), Sector::Plus), E).is_zero());
        }
}

TEST(Schrodinger, WrongEnergyOrDetunedPotentialLeavesResidual) {
    const auto p = make_params(R(1));
    const auto chi = chi_minus(p, 2);
    const auto V = partner_potential_form(p.coefficients(), Sector::Minus);
    EXPECT_FALSE(schrodinger_residual(chi, V, R(23)).is_zero());
    const auto Vd = factorized_potential_form(detune(p, R(101, 100)), Sector::Minus);
    EXPECT_FALSE(schrodinger_residual(chi, Vd, R(22)).is_zero());
}

TEST(Schrodinger, NumericResidualSmallOnGrid) {
    const auto p = make_params(R(1));
    const auto chi = chi_minus(p, 3);
    const double E = 26, h = 1e-3;
    for (double r : {0.4, 1.1, 2.3, 3.7}) {
        const double d2 = (chi(r + h) - 2 * chi(r) + chi(r - h)) / (h * h);
        const double res = -d2 + partner_potential(p, Sector::Minus, r) * chi(r) - E * chi(r);
        EXPECT_LT(std::abs(res), 1e-4 * (1 + std::abs(E * chi(r))));
    }
}

TEST(Overlaps, NormIsOneHalfInBothSectors) {
    for (const auto& a : {R(1, 2), R(1), R(2)})
        for (int n = 0; n <= 5; ++n) {
            const auto p = make_params(a);
            EXPECT_NEAR(overlap(chi_minus(p, n), chi_minus(p, n)), 0.5, 1e-10);
            EXPECT_NEAR(overlap(chi_plus(p, n), chi_plus(p, n)), 0.5, 1e-10);
        }
}

TEST(Overlaps, DistinctLevelsAreOrthogonal) {
    for (const auto& a : {R(1, 2), R(1), R(2)}) {
        const auto p = make_params(a);
        for (int n = 0; n <= 5; ++n)
            for (int m = n + 1; m <= 5; ++m) EXPECT_LT(std::abs(overlap(chi_minus(p, n), chi_minus(p, m))), 1e-8);
    }
}

TEST(SusyPhase, BrokenForThisFamily) {
    const auto one = classify_susy(make_params(R(1)));
    EXPECT_EQ(one.value, SusyPhaseValue::Broken);
    EXPECT_EQ(one.origin_exponents.first, R(-2));
    EXPECT_EQ(one.origin_exponents.second, R(2));
    EXPECT_FALSE(one.evidence.empty());
    EXPECT_EQ(classify_susy(make_params(R(1, 2))).value, SusyPhaseValue::Broken);
}

TEST(SusyPhase, PureOscillatorIsUnbroken) {
    // W = r: no pole at the origin, unit slope at infinity.
    EXPECT_EQ(classify_susy(SuperpotentialAsymptotics{R(0), R(1)}).value, SusyPhaseValue::Unbroken);
}
