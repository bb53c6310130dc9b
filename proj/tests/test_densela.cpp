#include "alphaenergy/densela.hpp"
#include "alphaenergy/error.hpp"

#include "oracle.hpp"

#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

using namespace alphaenergy;

namespace {

SymmetricMatrix to_matrix(const oracle::Matrix& a, std::size_t n) { return SymmetricMatrix::from_row_major(a, n); }

// max |M v_k - lambda_k v_k| and max |V^T V - I|.
std::pair<double, double> residuals(const SymmetricMatrix& m, const EigenDecomposition& d) {
    const std::size_t n = m.order();
    double reconstruction = 0.0;
    double orthogonality = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        for (std::size_t i = 0; i < n; ++i) {
            double mv = 0.0;
            for (std::size_t j = 0; j < n; ++j) {
                mv += m(i, j) * d.vector_component(j, k);
            }
            reconstruction = std::max(reconstruction, std::abs(mv - d.eigenvalues[k] * d.vector_component(i, k)));
        }
        for (std::size_t l = 0; l < n; ++l) {
            double dot = 0.0;
            for (std::size_t i = 0; i < n; ++i) {
                dot += d.vector_component(i, k) * d.vector_component(i, l);
            }
            orthogonality = std::max(orthogonality, std::abs(dot - (k == l ? 1.0 : 0.0)));
        }
    }
    return {reconstruction, orthogonality};
}

} // namespace

TEST_CASE("matrix construction") {
    CHECK_THROWS_AS(SymmetricMatrix(0), InvalidParameters);

    const SymmetricMatrix id = SymmetricMatrix::identity(3);
    CHECK(id.trace() == 3.0);
    CHECK(id(0, 1) == 0.0);

    SymmetricMatrix m(2);
    m.set(0, 1, 4.0);
    CHECK(m(1, 0) == 4.0);
    m.add_to_diagonal(1.5);
    CHECK(m(0, 0) == 1.5);
    CHECK((m - m) == SymmetricMatrix(2));
    CHECK((2.0 * id)(2, 2) == 2.0);
    CHECK((id + id).trace() == 6.0);
}

TEST_CASE("from_row_major enforces symmetry") {
    const std::vector<double> asym{1.0, 2.0, 2.5, 1.0};
    CHECK_THROWS_AS(SymmetricMatrix::from_row_major(asym, 2), NonSymmetric);

    const std::vector<double> wrong_size{1.0, 2.0, 2.0};
    CHECK_THROWS_AS(SymmetricMatrix::from_row_major(wrong_size, 2), InvalidParameters);

    const std::vector<double> nearly{1.0, 2.0, 2.0 + 1e-14, 1.0};
    const SymmetricMatrix m = SymmetricMatrix::from_row_major(nearly, 2);
    CHECK(m(0, 1) == m(1, 0));
}

TEST_CASE("eigendecompose small closed forms") {
    SUBCASE("1x1") {
        const std::vector<double> a{-3.25};
        const auto d = eigendecompose(a, 1);
        REQUIRE(d.eigenvalues.size() == 1);
        CHECK(d.eigenvalues[0] == -3.25);
        CHECK(std::abs(d.vector_component(0, 0)) == 1.0);
    }
    SUBCASE("2x2 [[2,1],[1,2]]") {
        const std::vector<double> a{2.0, 1.0, 1.0, 2.0};
        const auto d = eigendecompose(a, 2);
        CHECK(d.eigenvalues[0] == doctest::Approx(3.0).epsilon(1e-14));
        CHECK(d.eigenvalues[1] == doctest::Approx(1.0).epsilon(1e-14));
    }
    SUBCASE("diagonal input is sorted descending") {
        const std::vector<double> a{1.0, 0.0, 0.0, 0.0, 5.0, 0.0, 0.0, 0.0, -2.0};
        const auto d = eigendecompose(a, 3);
        CHECK(d.eigenvalues == std::vector<double>{5.0, 1.0, -2.0});
        CHECK(d.sweeps == 0);
    }
    SUBCASE("zero matrix") {
        const auto d = eigendecompose(SymmetricMatrix(4));
        for (double x : d.eigenvalues) {
            CHECK(x == 0.0);
        }
    }
}

TEST_CASE("eigendecompose agrees with LAPACK and has small residuals") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 40; ++trial) {
        const int n = 1 + trial % 20;
        const auto a = oracle::random_symmetric(n, rng);
        const SymmetricMatrix m = to_matrix(a, static_cast<std::size_t>(n));
        const auto d = eigendecompose(m);
        const double scale = 1.0 + frobenius_norm(m);

        const auto [rec, orth] = residuals(m, d);
        CHECK(rec <= 1e-10 * scale);
        CHECK(orth <= 1e-10 * scale);

        const auto ref = oracle::lapack_eigenvalues(a, n);
        for (int k = 0; k < n; ++k) {
            CHECK(std::abs(d.eigenvalues[k] - ref[k]) <= 1e-10 * scale);
        }
    }
}

TEST_CASE("eigenvalues match characteristic polynomial roots for n <= 4") {
    std::mt19937_64 rng(11);
    for (int n = 1; n <= 4; ++n) {
        for (int trial = 0; trial < 5; ++trial) {
            const auto a = oracle::random_symmetric(n, rng);
            const auto roots = oracle::polynomial_roots(oracle::characteristic_polynomial(a, n));
            const auto d = eigendecompose(a, static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k) {
                CHECK(d.eigenvalues[k] == doctest::Approx(roots[k]).epsilon(1e-8));
            }
        }
    }
}

TEST_CASE("repeated eigenvalues") {
    // J_5 - I has spectrum {4, -1, -1, -1, -1}.
    std::vector<double> a(25, 1.0);
    for (int i = 0; i < 5; ++i) {
        a[i * 5 + i] = 0.0;
    }
    const auto d = eigendecompose(a, 5);
    CHECK(d.eigenvalues[0] == doctest::Approx(4.0).epsilon(1e-13));
    for (int k = 1; k < 5; ++k) {
        CHECK(d.eigenvalues[k] == doctest::Approx(-1.0).epsilon(1e-13));
    }
    const auto [rec, orth] = residuals(SymmetricMatrix::from_row_major(a, 5), d);
    CHECK(rec < 1e-12);
    CHECK(orth < 1e-12);
}

TEST_CASE("shifted determinant and product") {
    std::mt19937_64 rng(3);
    for (int n = 1; n <= 8; ++n) {
        auto a = oracle::random_symmetric(n, rng);
        const double shift = 0.75;
        const double got = shifted_abs_determinant(SymmetricMatrix::from_row_major(a, n), shift);
        for (int i = 0; i < n; ++i) {
            a[i * n + i] -= shift;
        }
        const double ref = std::abs(oracle::determinant(a, n));
        CHECK(got == doctest::Approx(ref).epsilon(1e-9));
    }
    const std::vector<double> eig{3.0, 1.0, -1.0};
    CHECK(shifted_abs_product(eig, 1.0) == 0.0);
    CHECK(shifted_abs_product(eig, 0.0) == 3.0);
}

TEST_CASE("frobenius norm") {
    const std::vector<double> a{3.0, 0.0, 0.0, 4.0};
    CHECK(frobenius_norm(SymmetricMatrix::from_row_major(a, 2)) == doctest::Approx(5.0));
}
