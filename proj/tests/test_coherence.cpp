#include "spincoh/coherence.hpp"
#include "spincoh/analytic.hpp"
#include "spincoh/models.hpp"
#include "spincoh/thermal.hpp"
#include "spincoh/verify.hpp"

#include "oracle.hpp"

#include <catch2/catch_amalgamated.hpp>

#include <random>

using namespace spincoh;
using Catch::Matchers::WithinAbs;

TEST_CASE("local_coherence") {
    SECTION("maximally mixed state carries none") {
        const DensityMatrix mixed = DensityMatrix::Identity(4, 4) / 4.0;
        CHECK(local_coherence(mixed, 0, 2) < 1e-15);
        CHECK(local_coherence(mixed, 1, 2) < 1e-15);
    }

    SECTION("the balanced superposition is maximally coherent") {
        Eigen::VectorXcd plus(2);
        plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
        const DensityMatrix rho = plus * plus.adjoint();
        CHECK_THAT(local_coherence(rho, 0, 1), WithinAbs(1.0, 1e-14));
    }

    SECTION("direct model at T = 0.5 reproduces the closed form") {
        const DensityMatrix tau = gibbs_state(build_operator(direct_model(1.0, 1.3, 0.5)), 0.5);
        const double c1 = local_coherence(tau, 0, 2);
        CHECK_THAT(c1, WithinAbs(0.3109523618735153, 1e-11));
        CHECK_THAT(c1, WithinAbs(c1_direct_exact(0.5, 1.0, 1.3, 0.5), 1e-10));
    }

    SECTION("equals twice the reduced off-diagonal (two computation paths)") {
        std::mt19937_64 rng(23);
        std::uniform_real_distribution<double> coupling(-1.0, 1.0);
        for (int trial = 0; trial < 10; ++trial) {
            const OperatorSpec spec = indirect_model(0.7, 1.1, coupling(rng), coupling(rng));
            const DensityMatrix tau = gibbs_state(build_operator(spec), 0.3);
            for (int site : {0, 1}) {
                const DensityMatrix r = reduced_density(tau, {site});
                CHECK_THAT(local_coherence(tau, site, 2),
                           WithinAbs(2.0 * std::abs(r(0, 1)), 1e-12));
            }
        }
    }

    SECTION("dimension mismatch throws") {
        const DensityMatrix mixed = DensityMatrix::Identity(4, 4) / 4.0;
        CHECK_THROWS_AS(local_coherence(mixed, 0, 3), std::invalid_argument);
        CHECK_THROWS_AS(local_coherence(mixed, 2, 2), std::invalid_argument);
    }
}

TEST_CASE("coherence_profile") {
    SECTION("direct model: carrier holds the coherence, partner none") {
        const CoherenceProfile prof = coherence_profile(direct_model(1.0, 1.3, 0.5), 0.5);
        REQUIRE(prof.per_site.size() == 2);
        CHECK_THAT(prof.per_site[0], WithinAbs(0.3109523618735153, 1e-10));
        CHECK(prof.per_site[1] < 1e-12);
    }

    SECTION("XYZ chain yields zero everywhere") {
        for (double t : {0.05, 0.5, 5.0}) {
            const CoherenceProfile prof =
                coherence_profile(xyz_chain_model(1.0, 1.0, 0.7, 0.3, 0.2), t);
            for (double c : prof.per_site) CHECK(c < 1e-12);
        }
    }

    SECTION("high temperature washes everything out") {
        const CoherenceProfile prof = coherence_profile(direct_model(1.0, 1.3, 0.5), 1e6);
        for (double c : prof.per_site) CHECK(c < 1e-5);
    }
}

TEST_CASE("z_generator") {
    SECTION("one and two sites") {
        const DenseOperator z1 = z_generator(1);
        CHECK_THAT(z1(0, 0).real(), WithinAbs(1.0, 1e-15));
        CHECK_THAT(z1(1, 1).real(), WithinAbs(-1.0, 1e-15));
        const DenseOperator z2 = z_generator(2);
        const Eigen::Vector4d expect(1.0, -1.0, -1.0, 1.0);
        for (int i = 0; i < 4; ++i) CHECK_THAT(z2(i, i).real(), WithinAbs(expect(i), 1e-15));
    }

    SECTION("matches the Kronecker power of sigma^z and squares to identity") {
        const DenseOperator z3 = z_generator(3);
        const oracle::Mat ref = oracle::kron_chain(
            {oracle::pauli_z(), oracle::pauli_z(), oracle::pauli_z()});
        CHECK((z3 - ref).cwiseAbs().maxCoeff() < 1e-15);
        CHECK((z3 * z3 - DenseOperator::Identity(8, 8)).cwiseAbs().maxCoeff() == 0.0);
    }

    SECTION("cap") {
        CHECK_THROWS_AS(z_generator(13), std::invalid_argument);
        CHECK_NOTHROW(z_generator(13, 13));
    }
}

TEST_CASE("is_z2_symmetric") {
    CHECK(is_z2_symmetric(xyz_chain_model(1.0, 1.0, 0.3, -0.8, 1.4)));
    CHECK_FALSE(is_z2_symmetric(direct_model(1.0, 1.3, 0.5)));
    CHECK(is_z2_symmetric(direct_model(1.0, 1.3, 0.0)));
    CHECK_THROWS_AS(is_z2_symmetric(direct_model(1.0, 1.3, 0.5), 0.0),
                    std::invalid_argument);

    SECTION("empty-terms spec counts as symmetric, with all-zero coherence") {
        OperatorSpec spec;
        spec.n_sites = 2;
        CHECK(is_z2_symmetric(spec));
        const CoherenceProfile prof = coherence_profile(spec, 0.7);
        for (double c : prof.per_site) CHECK(c < 1e-15);
    }
}

TEST_CASE("symmetric Hamiltonians carry no Gibbs coherence", "[property]") {
    std::mt19937_64 rng(2024);
    std::uniform_int_distribution<int> n_dist(1, 4);
    for (int i = 0; i < 25; ++i) {
        const OperatorSpec spec = random_z2_symmetric_spec(rng, n_dist(rng));
        REQUIRE(is_z2_symmetric(spec));
        for (double t : {0.05, 0.5, 5.0}) {
            const CoherenceProfile prof = coherence_profile(spec, t);
            for (double c : prof.per_site) CHECK(c <= 1e-10);
        }
    }
}

TEST_CASE("asymmetric catalog families do generate coherence somewhere") {
    // two-site sufficiency direction, sampled on the catalog
    const CoherenceProfile direct_prof = coherence_profile(direct_model(1.0, 1.3, 0.5), 0.5);
    CHECK(direct_prof.per_site[0] > 1e-3);
    const CoherenceProfile indirect_prof =
        coherence_profile(indirect_model(0.5, 1.0, 0.5, 0.5), 0.05);
    CHECK(indirect_prof.per_site[1] > 1e-3);
}

TEST_CASE("coherence magnitude is invariant under gamma sign flip") {
    for (double t : {0.05, 0.5, 5.0}) {
        const CoherenceProfile plus = coherence_profile(direct_model(1.0, 1.3, 0.5), t);
        const CoherenceProfile minus = coherence_profile(direct_model(1.0, 1.3, -0.5), t);
        CHECK_THAT(plus.per_site[0], WithinAbs(minus.per_site[0], 1e-12));
    }
}
