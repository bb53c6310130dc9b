#include "alphaenergy/bounds.hpp"
#include "alphaenergy/generators.hpp"

#include <doctest.h>

#include <cmath>

using namespace alphaenergy;

namespace {

BoundEvaluation eval(BoundId id, const Graph& g, double alpha) {
    const auto sp = alpha_spectrum(g, alpha);
    return evaluate(id, g, sp, certify(g, sp));
}

void check_value(BoundId id, const Graph& g, double alpha, double expected, double tol = 1e-9) {
    const auto e = eval(id, g, alpha);
    INFO(to_string(id), " alpha=", alpha);
    REQUIRE(e.applicable);
    CHECK(std::abs(e.value - expected) <= tol);
    CHECK(e.holds);
}

const Graph k4 = generate(family::Complete{4});
const Graph k13 = generate(family::Star{3});

} // namespace

TEST_CASE("bound names round-trip") {
    CHECK(kAllBounds.size() == 15);
    for (BoundId id : kAllBounds) {
        CHECK(bound_from_string(to_string(id)) == id);
    }
    CHECK_FALSE(bound_from_string("ub_nonsense").has_value());
    CHECK(is_documented_exception(BoundId::lb_frobenius_asstated));
    CHECK_FALSE(is_documented_exception(BoundId::lb_frobenius_repaired));
    CHECK(to_string(BoundKind::lower) == "lower");
}

TEST_CASE("evaluate_all covers every bound in order") {
    const auto all = evaluate_all(generate(family::Petersen{}), 0.3);
    REQUIRE(all.size() == kAllBounds.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
        CHECK(all[i].id == kAllBounds[i]);
    }
}

TEST_CASE("exact equality fixtures") {
    check_value(BoundId::ub_koolen_alpha, k4, 0.5, 3.0);
    check_value(BoundId::ub_eta, k4, 0.5, 3.0);
    check_value(BoundId::lb_average_degree, k4, 0.5, 3.0);
    check_value(BoundId::lb_zagreb, k4, 0.5, 3.0);

    check_value(BoundId::ub_koolen_energy, k4, 0.0, 6.0);
    check_value(BoundId::ub_log_zagreb, k4, 0.0, 6.0);
    check_value(BoundId::ub_log_degree, k4, 0.0, 6.0);
    check_value(BoundId::lb_log, k4, 0.0, 6.0);

    check_value(BoundId::lb_maxdeg, k13, 0.0, 2.0 * std::sqrt(3.0));
    check_value(BoundId::lb_maxdeg, k13, 0.5, 2.5);
    check_value(BoundId::rho_lb_star, k13, 0.5, 2.0);

    for (BoundId id : {BoundId::ub_koolen_alpha, BoundId::ub_eta, BoundId::lb_average_degree, BoundId::lb_zagreb}) {
        const auto e = eval(id, k4, 0.5);
        CHECK(e.equality);
        CHECK(e.equality_claim_matched == true);
    }
}

TEST_CASE("frozen values on small graphs") {
    // K_4 at alpha = 1/4
    check_value(BoundId::ub_mcclelland, k4, 0.25, 5.196152422706632);
    check_value(BoundId::ub_koolen_alpha, k4, 0.25, 4.5);
    check_value(BoundId::ub_log_zagreb, k4, 0.25, 4.800546217355343);
    check_value(BoundId::ub_log_degree, k4, 0.25, 4.800546217355343);
    check_value(BoundId::lb_log, k4, 0.25, 4.386953782644657);
    CHECK(lb_log_printed_value(alpha_spectrum(k4, 0.25)) == doctest::Approx(5.136953782644657).epsilon(1e-12));

    // K_4 at alpha = 1/2
    check_value(BoundId::ub_log_zagreb, k4, 0.5, 4.329441541679834);
    check_value(BoundId::lb_log, k4, 0.5, 2.420558458320165);
    CHECK(lb_log_printed_value(alpha_spectrum(k4, 0.5)) == doctest::Approx(3.920558458320165).epsilon(1e-12));

    const Graph k5 = generate(family::Complete{5});
    check_value(BoundId::ub_koolen_alpha, k5, 0.3, 5.6);
    check_value(BoundId::ub_log_zagreb, k5, 0.3, 6.186699775754931);
    check_value(BoundId::lb_log, k5, 0.3, 5.37330022424507);

    const Graph p4 = generate(family::Path{4});
    check_value(BoundId::ub_mcclelland, p4, 0.2, 3.9395431207184424);
    check_value(BoundId::ub_koolen_alpha, p4, 0.2, 3.905549851693737);
    check_value(BoundId::ub_log_zagreb, p4, 0.2, 4.644401184504514);
    check_value(BoundId::ub_log_degree, p4, 0.2, 4.699151219787197);
    check_value(BoundId::lb_log, p4, 0.2, 3.1565597737143807);

    const Graph c5 = generate(family::Cycle{5});
    check_value(BoundId::ub_koolen_energy, c5, 0.0, 6.898979485566356);
    check_value(BoundId::ub_log_zagreb, c5, 0.0, 8.0);
    check_value(BoundId::ub_log_degree, c5, 0.0, 8.0);
    check_value(BoundId::lb_log, c5, 0.0, 6.0);

    const Graph petersen = generate(family::Petersen{});
    check_value(BoundId::ub_koolen_alpha, petersen, 0.3, 11.723408959407262);
    check_value(BoundId::ub_log_zagreb, petersen, 0.3, 12.827485773208807);
    check_value(BoundId::lb_log, petersen, 0.3, 10.662514226791188);
}

TEST_CASE("signless-Laplacian form of the Koolen bound") {
    const auto e_k4 = eval(BoundId::ub_koolen_signless, k4, 0.5);
    REQUIRE(e_k4.applicable);
    CHECK(e_k4.target == doctest::Approx(6.0));
    CHECK(e_k4.value == doctest::Approx(6.0));
    CHECK(e_k4.equality);

    const auto e_c4 = eval(BoundId::ub_koolen_signless, generate(family::Cycle{4}), 0.5);
    CHECK(e_c4.target == doctest::Approx(4.0));
    CHECK(e_c4.value == doctest::Approx(2.0 + std::sqrt(12.0)));
    CHECK(e_c4.holds);
    CHECK_FALSE(e_c4.equality);
}

TEST_CASE("Frobenius counterexample") {
    const auto stated = eval(BoundId::lb_frobenius_asstated, k4, 0.5);
    CHECK(std::abs(stated.value - std::sqrt(15.0)) <= 1e-9);
    CHECK_FALSE(stated.holds);
    CHECK(stated.gap < 0.0);

    const auto repaired = eval(BoundId::lb_frobenius_repaired, k4, 0.5);
    CHECK(std::abs(repaired.value - std::sqrt(6.0)) <= 1e-9);
    CHECK(repaired.holds);
}

TEST_CASE("printed log lower bound fails where the corrected one holds") {
    const auto sp = alpha_spectrum(k4, 0.5);
    CHECK(lb_log_printed_value(sp) > sp.energy);
    CHECK(eval(BoundId::lb_log, k4, 0.5).holds);
}

TEST_CASE("applicability") {
    const Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK(eval(BoundId::ub_koolen_alpha, disconnected, 0.0).reason == "requires connected");
    CHECK_FALSE(eval(BoundId::ub_koolen_alpha, disconnected, 0.0).applicable);
    CHECK(eval(BoundId::ub_mcclelland, disconnected, 0.0).reason == "requires connected");

    const Graph k2 = generate(family::Complete{2});
    CHECK(eval(BoundId::lb_zagreb, k2, 0.0).reason == "requires n >= 3");

    CHECK(eval(BoundId::ub_koolen_energy, k4, 0.5).reason == "requires alpha = 0");
    CHECK(eval(BoundId::ub_koolen_signless, k4, 0.0).reason == "requires alpha = 1/2");
    CHECK(eval(BoundId::ub_eta, k4, 0.3).reason == "requires 1/2 <= alpha < 1");
    CHECK(eval(BoundId::ub_koolen_alpha, k4, 1.0).reason == "requires alpha < 1");
    CHECK(eval(BoundId::lb_average_degree, k4, 1.0).reason == "requires alpha < 1");

    // K_4: alpha <= 1 - 4/12.
    CHECK(eval(BoundId::ub_log_zagreb, k4, 0.7).reason == "requires alpha <= 1 - n/(2m)");
    CHECK(eval(BoundId::ub_log_zagreb, k4, 2.0 / 3.0).applicable);
    // P_3 has a zero eigenvalue at alpha = 0.
    CHECK(eval(BoundId::lb_log, generate(family::Path{3}), 0.0).reason == "singular shift");

    const auto na = eval(BoundId::ub_eta, k4, 0.0);
    CHECK(std::isnan(na.value));
    CHECK(std::isnan(na.gap));
    CHECK_FALSE(na.holds);
    CHECK_FALSE(na.equality);
}

TEST_CASE("equality certificates") {
    const auto sp = alpha_spectrum(k4, 0.5);
    const auto cert = certify(k4, sp);
    CHECK(cert.is_connected);
    CHECK(cert.is_complete);
    CHECK(cert.is_regular);
    CHECK_FALSE(cert.is_star);
    CHECK(cert.distinct_alpha_eigenvalue_count == 2);
    CHECK(cert.adjacency_inertia == Inertia{1, 0, 3});

    const Graph c4 = generate(family::Cycle{4});
    const auto c4_cert = certify(c4, alpha_spectrum(c4, 0.0));
    CHECK(c4_cert.adjacency_inertia == Inertia{1, 2, 1});
    // C_4 is tight for the average-degree bound but lies outside its stated class.
    const auto e = eval(BoundId::lb_average_degree, c4, 0.0);
    CHECK(e.equality);
    CHECK(e.equality_claim_matched == false);

    const auto star_cert = certify(k13, alpha_spectrum(k13, 0.2));
    CHECK(star_cert.is_star);
    CHECK_FALSE(star_cert.is_regular);
}

TEST_CASE("bounds hold on random connected graphs") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        const Graph g = generate(family::ErdosRenyi{4 + seed % 9, 0.35, seed, true});
        for (double alpha : {0.0, 0.1, 0.3, 0.5, 0.6, 0.8, 0.95}) {
            for (const BoundEvaluation& e : evaluate_all(g, alpha)) {
                if (e.applicable && !is_documented_exception(e.id)) {
                    INFO(to_string(e.id), " seed=", seed, " alpha=", alpha, " gap=", e.gap);
                    CHECK(e.holds);
                }
            }
        }
    }
}
