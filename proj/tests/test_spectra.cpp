#include "alphaenergy/error.hpp"
#include "alphaenergy/generators.hpp"
#include "alphaenergy/spectra.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <numeric>

using namespace alphaenergy;

namespace {

oracle::EdgeList plain_edges(const Graph& g) {
    oracle::EdgeList out;
    for (const Edge& e : g.edges()) {
        out.emplace_back(static_cast<int>(e.u), static_cast<int>(e.v));
    }
    return out;
}

void check_spectrum(const std::vector<double>& got, const std::vector<double>& expected, double tol = 1e-10) {
    REQUIRE(got.size() == expected.size());
    for (std::size_t i = 0; i < got.size(); ++i) {
        CHECK(std::abs(got[i] - expected[i]) <= tol);
    }
}

} // namespace

TEST_CASE("alpha matrix") {
    const Graph p3 = generate(family::Path{3});
    const auto m = alpha_matrix(p3, 0.25);
    CHECK(m(1, 1) == 0.5);
    CHECK(m(0, 0) == 0.25);
    CHECK(m(0, 1) == 0.75);
    CHECK(m(0, 2) == 0.0);
    CHECK_THROWS_AS(alpha_matrix(p3, -0.1), AlphaOutOfRange);
    CHECK_THROWS_AS(alpha_matrix(p3, 1.5), AlphaOutOfRange);
    CHECK_THROWS_AS(alpha_spectrum(p3, std::nan("")), AlphaOutOfRange);

    // A_alpha(G) - A_alpha(G - e) is the rank-2 perturbation for e.
    const Graph k3 = generate(family::Complete{3});
    const auto diff = alpha_matrix(k3, 0.3) - alpha_matrix(delete_edge(k3, 0, 2), 0.3);
    CHECK(diff == edge_perturbation_matrix(3, 0, 2, 0.3));
}

TEST_CASE("closed-form spectra") {
    for (double alpha : {0.0, 0.25, 0.5, 0.8, 1.0}) {
        for (int n = 2; n <= 9; ++n) {
            check_spectrum(alpha_spectrum(generate(family::Complete{static_cast<std::size_t>(n)}), alpha).rho,
                           oracle::complete_spectrum(n, alpha));
        }
        for (int n = 3; n <= 12; ++n) {
            check_spectrum(alpha_spectrum(generate(family::Cycle{static_cast<std::size_t>(n)}), alpha).rho,
                           oracle::cycle_spectrum(n, alpha));
        }
        for (int d = 1; d <= 8; ++d) {
            check_spectrum(alpha_spectrum(generate(family::Star{static_cast<std::size_t>(d)}), alpha).rho,
                           oracle::star_spectrum(d, alpha));
        }
    }
}

TEST_CASE("spectrum examples") {
    const auto k4 = alpha_spectrum(generate(family::Complete{4}), 0.5);
    check_spectrum(k4.rho, {3.0, 1.0, 1.0, 1.0});
    CHECK(k4.energy == doctest::Approx(3.0).epsilon(1e-12));
    CHECK(k4.shift == 1.5);
    CHECK(k4.eta == 1);
    CHECK(k4.zagreb == 36);
    CHECK(k4.connected);
    CHECK(k4.spectral_radius() == doctest::Approx(3.0));

    const auto p3 = alpha_spectrum(generate(family::Path{3}), 0.0);
    check_spectrum(p3.rho, {std::sqrt(2.0), 0.0, -std::sqrt(2.0)});
    CHECK(p3.energy == doctest::Approx(2.0 * std::sqrt(2.0)).epsilon(1e-12));
    // rho = 0 ties with the shift, so eta counts it.
    CHECK(p3.eta == 2);
    CHECK(p3.shift_singular);
    CHECK(p3.gamma_det == 0.0);
}

TEST_CASE("frozen auxiliaries for K_4") {
    const Graph k4 = generate(family::Complete{4});
    const auto q = alpha_spectrum(k4, 0.25);
    CHECK(q.energy == doctest::Approx(4.5).epsilon(1e-12));
    CHECK(q.gamma_det == doctest::Approx(0.94921875).epsilon(1e-12));
    CHECK(q.theta == doctest::Approx(2.25).epsilon(1e-12));
    CHECK(q.two_S == doctest::Approx(6.75).epsilon(1e-12));

    const auto h = alpha_spectrum(k4, 0.5);
    CHECK(h.gamma_det == doctest::Approx(0.1875).epsilon(1e-12));
    CHECK(h.theta == doctest::Approx(1.5).epsilon(1e-12));
}

TEST_CASE("energy matches LAPACK on assorted graphs") {
    std::vector<Graph> graphs{generate(family::Path{4}),          generate(family::Petersen{}),
                              generate(family::CompleteBipartite{2, 5}), generate(family::ErdosRenyi{11, 0.4, 5, true}),
                              generate(family::RandomRegular{12, 5, 3})};
    for (const Graph& g : graphs) {
        for (double alpha : {0.0, 0.2, 0.5, 0.7, 0.95, 1.0}) {
            const auto sp = alpha_spectrum(g, alpha);
            const double ref = oracle::alpha_energy(static_cast<int>(g.order()), plain_edges(g), alpha);
            CHECK(sp.energy == doctest::Approx(ref).epsilon(1e-10));
            CHECK(energy_via_partial_sums(sp) == doctest::Approx(sp.energy).epsilon(1e-10));
        }
    }
    CHECK(alpha_spectrum(generate(family::Path{4}), 0.2).energy == doctest::Approx(3.595596975474827).epsilon(1e-12));
    CHECK(alpha_spectrum(generate(family::Cycle{5}), 0.0).energy == doctest::Approx(6.472135954999578).epsilon(1e-12));
    CHECK(alpha_spectrum(generate(family::Petersen{}), 0.3).energy == doctest::Approx(11.2).epsilon(1e-12));
}

TEST_CASE("trace identities and derived scalars") {
    const Graph g = generate(family::ErdosRenyi{9, 0.45, 21, true});
    const double m = static_cast<double>(g.size());
    const double n = static_cast<double>(g.order());
    const double zg = static_cast<double>(zagreb_index(g));
    for (double alpha : {0.0, 0.3, 0.5, 0.9}) {
        const auto sp = alpha_spectrum(g, alpha);
        const double sum = std::accumulate(sp.rho.begin(), sp.rho.end(), 0.0);
        double squares = 0.0;
        for (double x : sp.rho) {
            squares += x * x;
        }
        CHECK(std::abs(sum - 2.0 * alpha * m) <= 1e-9);
        CHECK(std::abs(squares - (alpha * alpha * zg + (1 - alpha) * (1 - alpha) * 2 * m)) <= 1e-9 * (1 + squares));
        CHECK(std::abs(sp.two_S - sp.two_S_spectral) <= 1e-9 * (1 + sp.two_S));
        CHECK(std::abs(std::accumulate(sp.s.begin(), sp.s.end(), 0.0)) <= 1e-9);
        CHECK(sp.shift == doctest::Approx(2 * alpha * m / n));
        CHECK(sp.theta == doctest::Approx(std::sqrt(zg / n) - 2 * alpha * m / n));
        CHECK(two_S(g, alpha) == sp.two_S);

        std::size_t eta = 0;
        double product = 1.0;
        for (double x : sp.rho) {
            eta += x >= sp.shift - 1e-9 ? 1 : 0;
            product *= x - sp.shift;
        }
        CHECK(sp.eta == eta);
        if (!sp.shift_singular) {
            CHECK(sp.gamma_det == doctest::Approx(std::abs(product)).epsilon(1e-9));
        }
    }
}

TEST_CASE("regular graphs scale the adjacency energy") {
    for (const Graph& g : {generate(family::Petersen{}), generate(family::Cycle{7}), generate(family::RandomRegular{10, 4, 8})}) {
        const double e0 = alpha_spectrum(g, 0.0).energy;
        for (double alpha : {0.1, 0.5, 0.95}) {
            CHECK(std::abs(alpha_spectrum(g, alpha).energy - (1 - alpha) * e0) <= 1e-9);
        }
    }
}

TEST_CASE("disconnected graphs are still analysed") {
    const Graph g(4, {{0, 1}, {2, 3}});
    const auto sp = alpha_spectrum(g, 0.0);
    CHECK_FALSE(sp.connected);
    check_spectrum(sp.rho, {1.0, 1.0, -1.0, -1.0});
}
