#ifndef ALPHAENERGY_SPECTRA_HPP
#define ALPHAENERGY_SPECTRA_HPP

#include "alphaenergy/densela.hpp"
#include "alphaenergy/graph.hpp"

#include <cstddef>
#include <cstdint>
#include <vector>

namespace alphaenergy {

/// An eigenvalue within this distance of the mean 2*alpha*m/n counts as >= the mean.
inline constexpr double kEtaTieTolerance = 1e-9;
/// A shifted eigenvalue below this magnitude makes the shifted determinant singular.
inline constexpr double kSingularShiftTolerance = 1e-10;

/// alpha * D(G) + (1 - alpha) * A(G). Throws AlphaOutOfRange unless 0 <= alpha <= 1.
SymmetricMatrix alpha_matrix(const Graph& g, double alpha);

/// Matrix N with A_alpha(G) = A_alpha(G - uv) + N: alpha on (u,u) and (v,v),
/// 1 - alpha on (u,v) and (v,u), zero elsewhere.
SymmetricMatrix edge_perturbation_matrix(std::size_t n, Vertex u, Vertex v, double alpha);

/// Spectrum of A_alpha(G) and every scalar derived from it.
struct AlphaSpectrum {
    double alpha = 0.0;
    std::size_t n = 0;
    std::size_t m = 0;
    bool connected = false;
    std::uint64_t zagreb = 0;
    std::size_t max_degree = 0;

    /// Eigenvalues of A_alpha, descending.
    std::vector<double> rho;
    /// Mean eigenvalue 2*alpha*m/n.
    double shift = 0.0;
    /// Auxiliary eigenvalues rho_i - shift.
    std::vector<double> s;

    /// sum |s_i|.
    double energy = 0.0;
    /// #{i : rho_i >= shift - kEtaTieTolerance}.
    std::size_t eta = 0;
    /// Closed form (1-alpha)^2 * 2m + sum (alpha*d_i - shift)^2; authoritative.
    double two_S = 0.0;
    /// sum s_i^2 from the computed spectrum, kept for cross-checking.
    double two_S_spectral = 0.0;
    /// |det(A_alpha - shift*I)|, forced to 0 when `shift_singular`.
    double gamma_det = 0.0;
    bool shift_singular = false;
    /// sqrt(Zg/n) - shift.
    double theta = 0.0;

    double spectral_radius() const { return rho.front(); }
};

/// Throws AlphaOutOfRange, or propagates eigensolver errors.
AlphaSpectrum alpha_spectrum(const Graph& g, double alpha);

/// 2 * max_j (sum_{i<=j} rho_i - j*shift); equals the energy for any spectrum.
double energy_via_partial_sums(const AlphaSpectrum& sp);

/// (1-alpha)^2 * 2m + sum_i (alpha*d_i - 2*alpha*m/n)^2.
double two_S(const Graph& g, double alpha);

} // namespace alphaenergy

#endif // ALPHAENERGY_SPECTRA_HPP
