#include "spincoh/analytic.hpp"
#include "spincoh/coherence.hpp"
#include "spincoh/models.hpp"
#include "spincoh/thermal.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <cmath>

using namespace spincoh;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

double engine_coherence(const OperatorSpec& spec, int site, double T) {
    return local_coherence(gibbs_state(build_operator(spec), T), site, spec.n_sites);
}

}  // namespace

TEST_CASE("c1_direct_exact") {
    CHECK_THAT(c1_direct_exact(0.5, 1.0, 1.3, 0.5), WithinAbs(0.3109523618735153, 1e-13));
    CHECK(c1_direct_exact(0.0, 1.0, 1.3, 0.5) == 0.0);
    CHECK_THAT(c1_direct_exact(0.5, 1.0, 1.3, 1e-4), WithinAbs(0.4472135954999579, 1e-12));
    CHECK_THROWS_AS(c1_direct_exact(0.5, 1.0, 1.3, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(c1_direct_exact(0.5, -1.0, 1.3, 0.5), std::invalid_argument);

    SECTION("matches the exact engine on a parameter grid") {
        for (double g : {0.1, 0.5, 2.0})
            for (double w2 : {0.5, 1.3})
                for (double t : {0.01, 0.1, 1.0, 10.0, 100.0}) {
                    const double engine = engine_coherence(direct_model(1.0, w2, g), 0, t);
                    CHECK_THAT(engine, WithinAbs(c1_direct_exact(g, 1.0, w2, t), 1e-10));
                }
    }

    SECTION("nonincreasing in T") {
        double prev = 1.0;
        for (double logt = -2.0; logt <= 2.01; logt += 0.1) {
            const double c = c1_direct_exact(0.5, 1.0, 1.3, std::pow(10.0, logt));
            CHECK(c <= prev + 1e-15);
            prev = c;
        }
    }
}

TEST_CASE("c1_direct_lowT") {
    CHECK_THAT(c1_direct_lowT(0.5, 1.0, 0.05), WithinAbs(0.4472135953260076, 1e-13));
    CHECK_THAT(c1_direct_lowT(100.0, 1.0, 0.01), WithinAbs(0.9999500037496876, 1e-12));
    // strong-coupling saturation 1 - w1^2 / (2 gamma^2)
    CHECK_THAT(c1_direct_lowT(100.0, 1.0, 0.01), WithinAbs(1.0 - 1.0 / (2.0 * 1e4), 1e-8));
    CHECK(c1_direct_lowT(0.0, 1.0, 0.05) == 0.0);
    CHECK_THROWS_AS(c1_direct_lowT(0.5, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("c2_indirect_lowT") {
    CHECK_THAT(c2_indirect_lowT(0.5, 0.5, 0.5, 1.0), WithinAbs(0.1987568534155134, 1e-13));
    CHECK_THAT(c2_indirect_lowT(0.1, 0.1, 1.0, 1.0), WithinAbs(0.0049566485952792, 1e-13));
    // weak-coupling limit theta gamma / (w1 (w1 + w2))
    CHECK_THAT(c2_indirect_lowT(0.1, 0.1, 1.0, 1.0), WithinAbs(0.005, 1e-4));
    CHECK(c2_indirect_lowT(0.0, 0.5, 1.0, 1.0) == 0.0);

    SECTION("cross-check against the exact engine at T = 0.01") {
        const double engine = engine_coherence(indirect_model(0.5, 1.0, 0.5, 0.5), 1, 0.01);
        CHECK_THAT(engine, WithinAbs(c2_indirect_lowT(0.5, 0.5, 0.5, 1.0), 5e-3));
        CHECK_THAT(engine, WithinAbs(0.1987568534155132, 1e-10));
    }

    SECTION("degenerate resonance raises the singularity error") {
        // omega2 = sqrt(omega1^2 + gamma^2) with theta = 0: denominator vanishes
        CHECK_THROWS_AS(c2_indirect_lowT(0.8, 0.0, 0.6, 1.0), std::domain_error);
    }
}

TEST_CASE("gamma_opt") {
    CHECK_THAT(gamma_opt(0.3, 0.8, 1.0), WithinAbs(0.8868514958047248, 1e-13));
    CHECK_THAT(gamma_opt(0.0, 0.8, 1.0), WithinAbs(0.8617738760127536, 1e-13));
    CHECK_THAT(gamma_opt(0.0, 0.8, 1.0),
               WithinAbs(std::pow(0.8, 2.0 / 3.0) * std::cbrt(1.0), 1e-14));
}

TEST_CASE("c0_transferred_lowT") {
    CHECK_THAT(c0_transferred_lowT(0.5, 0.5, 1.0, 0.5), WithinAbs(1.0 / 3.0, 1e-14));
    CHECK(c0_transferred_lowT(0.5, 0.5, 1.0, 0.5) < 1.0);
    // strong couplings reach near-perfect transfer
    CHECK(c0_transferred_lowT(50.0, 50.0, 1.0, 1.0) > 0.999);
    CHECK(c0_transferred_lowT(0.0, 0.5, 1.0, 0.5) == 0.0);
}

TEST_CASE("c1_direct_lowT_N") {
    CHECK_THAT(c1_direct_lowT_N({0.25, 0.25, 0.25, 0.25}, 1.0),
               WithinAbs(1.0 / std::sqrt(2.0), 1e-14));
    CHECK_THAT(c1_direct_lowT_N(std::vector<double>(8, 0.5), 1.0),
               WithinAbs(0.9701425001453319, 1e-13));
    // single source reduces to the leading term of the two-TLS plateau
    CHECK_THAT(c1_direct_lowT_N({0.5}, 1.0), WithinAbs(0.4472135954999579, 1e-13));
    CHECK_THROWS_AS(c1_direct_lowT_N({}, 1.0), std::invalid_argument);

    SECTION("cross-check against the exact engine at T = 0.01") {
        const double engine = engine_coherence(
            direct_model_N(1.0, std::vector<double>(8, 1.3), std::vector<double>(8, 0.5)),
            0, 0.01);
        CHECK_THAT(engine, WithinAbs(0.9701425001453319, 1e-3));
    }
}

TEST_CASE("cT_indirect_lowT_N") {
    CHECK_THAT(cT_indirect_lowT_N(1, 0.1, 1.0, 1.0), WithinAbs(0.005, 1e-15));
    CHECK_THAT(cT_indirect_lowT_N(3, 0.1, 1.0, 1.0), WithinAbs(0.015, 1e-15));
    CHECK(cT_indirect_lowT_N(4, 0.0, 1.0, 1.0) == 0.0);
    CHECK_THROWS_AS(cT_indirect_lowT_N(0, 0.1, 1.0, 1.0), std::invalid_argument);

    SECTION("leading-order agreement with the exact engine") {
        const double engine = engine_coherence(
            indirect_model_N(1.0, std::vector<double>(3, 1.0), std::vector<double>(3, 0.1),
                             std::vector<double>(3, 0.1)),
            0, 0.005);
        CHECK_THAT(engine, WithinAbs(0.0148310951261158, 1e-9));
        CHECK_THAT(cT_indirect_lowT_N(3, 0.1, 1.0, 1.0), WithinRel(engine, 0.20));
    }
}

TEST_CASE("c0_transferred_lowT_N") {
    CHECK_THAT(c0_transferred_lowT_N(7, 0.5, 0.5, 1.0, 0.5),
               WithinAbs(0.4436069753671346, 1e-13));
    const double n4 = c0_transferred_lowT_N(4, 0.5, 0.5, 1.0, 0.5);
    CHECK_THAT(n4, WithinAbs(0.4364357804719848, 1e-13));
    // within 3% of the N -> infinity saturation value theta / sqrt(theta^2 + w0^2)
    const double saturation = 0.5 / std::sqrt(0.25 + 1.0);
    CHECK(std::abs(n4 / saturation - 1.0) < 0.03);
    CHECK_THAT(c0_transferred_lowT_N(1, 0.5, 0.5, 1.0, 0.5),
               WithinAbs(c0_transferred_lowT(0.5, 0.5, 1.0, 0.5), 1e-15));
    CHECK_THROWS_AS(c0_transferred_lowT_N(0, 0.5, 0.5, 1.0, 0.5), std::invalid_argument);
}

TEST_CASE("highT_asymptote") {
    ModelParams p;
    p.gamma = 0.5;
    p.theta = 0.5;
    p.omega2 = 1.3;

    SECTION("direct") {
        const AsymptoteLaw law = highT_asymptote(ModelTag::direct, p);
        CHECK_THAT(law.exponent, WithinAbs(-2.0, 1e-15));
        REQUIRE(law.prefactor.has_value());
        CHECK_THAT(*law.prefactor, WithinAbs(0.1625, 1e-15));
    }

    SECTION("indirect") {
        ModelParams q = p;
        q.omega2 = 1.0;
        const AsymptoteLaw law = highT_asymptote(ModelTag::indirect, q);
        CHECK_THAT(law.exponent, WithinAbs(-3.0, 1e-15));
        CHECK_THAT(*law.prefactor, WithinAbs(0.0104166666666667, 1e-12));
    }

    SECTION("transferred") {
        const AsymptoteLaw law = highT_asymptote(ModelTag::transferred, p);
        CHECK_THAT(law.exponent, WithinAbs(-3.0, 1e-15));
        CHECK_THAT(*law.prefactor, WithinAbs(0.040625, 1e-15));
    }

    SECTION("direct-N") {
        ModelParams q;
        q.omega_sources.assign(4, 1.3);
        q.gamma_sources.assign(4, 0.5);
        const AsymptoteLaw law = highT_asymptote(ModelTag::direct_N, q);
        CHECK_THAT(law.exponent, WithinAbs(-2.0, 1e-15));
        CHECK_THAT(*law.prefactor, WithinAbs(0.65, 1e-14));
    }

    SECTION("indirect-N") {
        ModelParams q;
        q.omega1 = 1.0;
        q.gamma_sources.assign(3, 0.1);
        const AsymptoteLaw law = highT_asymptote(ModelTag::indirect_N, q);
        CHECK_THAT(law.exponent, WithinAbs(-3.0, 1e-15));
        CHECK_THAT(*law.prefactor, WithinAbs(0.00125, 1e-15));
    }

    SECTION("transferred-N has no closed-form prefactor") {
        ModelParams q;
        const AsymptoteLaw law = highT_asymptote(ModelTag::transferred_N, q);
        CHECK_THAT(law.exponent, WithinAbs(-3.0, 1e-15));
        CHECK_FALSE(law.prefactor.has_value());
    }

    SECTION("coupling signs do not enter the magnitude laws") {
        ModelParams q = p;
        q.gamma = -q.gamma;
        CHECK_THAT(*highT_asymptote(ModelTag::direct, q).prefactor,
                   WithinAbs(*highT_asymptote(ModelTag::direct, p).prefactor, 1e-15));
        CHECK(*highT_asymptote(ModelTag::indirect, q).prefactor > 0.0);
    }

    SECTION("unknown tag") {
        CHECK_THROWS_AS(highT_asymptote(ModelTag::xyz, p), std::invalid_argument);
    }
}

TEST_CASE("low-T formulas agree with the engine at T = 1e-3 min scale") {
    SECTION("direct") {
        for (double g : {0.1, 0.5}) {
            const double t = 1e-3 * std::min(g, 1.0);
            const double engine = engine_coherence(direct_model(1.0, 1.3, g), 0, t);
            CHECK_THAT(engine, WithinAbs(c1_direct_lowT(g, 1.0, t), 1e-3));
        }
    }
    SECTION("indirect") {
        const double engine = engine_coherence(indirect_model(1.0, 1.0, 0.1, 0.1), 1, 1e-4);
        CHECK_THAT(engine, WithinAbs(c2_indirect_lowT(0.1, 0.1, 1.0, 1.0), 1e-3));
    }
    SECTION("transferred") {
        const double engine =
            engine_coherence(transferred_model(1.0, 0.5, 1.3, 0.3, 0.2), 0, 2e-4);
        CHECK_THAT(engine, WithinAbs(c0_transferred_lowT(0.3, 0.2, 1.0, 0.5), 1e-3));
    }
}

TEST_CASE("indirect ordering C_2 <= C_1 at low temperature") {
    for (double g : {0.1, 0.3, 0.5}) {
        const DensityMatrix tau =
            gibbs_state(build_operator(indirect_model(0.8, 1.0, g, g)), 0.01);
        CHECK(local_coherence(tau, 1, 2) <= local_coherence(tau, 0, 2) + 1e-9);
    }
}

TEST_CASE("transfer ratio law at low temperature") {
    const double g = 0.5, w1 = 1.0, w2 = 1.3, w0 = 1.0;
    for (double x : {0.5, 1.0, 2.0}) {
        const double c1 = engine_coherence(direct_model(w1, w2, g), 0, 1e-3);
        const double c0 =
            engine_coherence(transferred_model(w0, w1, w2, g, x * w0), 0, 1e-3);
        CHECK_THAT(c0 / c1, WithinAbs(x / std::sqrt(1.0 + c1 * c1 * x * x), 1e-2));
    }
}
