#include "alphaenergy/spectra.hpp"

#include "alphaenergy/error.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace alphaenergy {

namespace {

void check_alpha(double alpha) {
    if (!(alpha >= 0.0 && alpha <= 1.0)) {
        throw AlphaOutOfRange("alpha must lie in [0, 1], got " + std::to_string(alpha));
    }
}

} // namespace

SymmetricMatrix alpha_matrix(const Graph& g, double alpha) {
    check_alpha(alpha);
    SymmetricMatrix out(g.order());
    for (const Edge& e : g.edges()) {
        out.set(e.u, e.v, 1.0 - alpha);
    }
    for (Vertex v = 0; v < g.order(); ++v) {
        out.set(v, v, alpha * static_cast<double>(g.degree(v)));
    }
    return out;
}

SymmetricMatrix edge_perturbation_matrix(std::size_t n, Vertex u, Vertex v, double alpha) {
    check_alpha(alpha);
    if (u >= n || v >= n || u == v) {
        throw InvalidParameters("edge_perturbation_matrix: need distinct vertices below n");
    }
    SymmetricMatrix out(n);
    out.set(u, u, alpha);
    out.set(v, v, alpha);
    out.set(u, v, 1.0 - alpha);
    return out;
}

double two_S(const Graph& g, double alpha) {
    check_alpha(alpha);
    const double n = static_cast<double>(g.order());
    const double m = static_cast<double>(g.size());
    const double shift = 2.0 * alpha * m / n;
    double sum = (1.0 - alpha) * (1.0 - alpha) * 2.0 * m;
    for (Vertex v = 0; v < g.order(); ++v) {
        const double dev = alpha * static_cast<double>(g.degree(v)) - shift;
        sum += dev * dev;
    }
    return sum;
}

AlphaSpectrum alpha_spectrum(const Graph& g, double alpha) {
    check_alpha(alpha);
    AlphaSpectrum sp;
    sp.alpha = alpha;
    sp.n = g.order();
    sp.m = g.size();
    sp.connected = is_connected(g);
    sp.zagreb = zagreb_index(g);
    sp.max_degree = g.max_degree();

    sp.rho = eigendecompose(alpha_matrix(g, alpha)).eigenvalues;
    sp.shift = 2.0 * alpha * static_cast<double>(sp.m) / static_cast<double>(sp.n);

    sp.s.reserve(sp.n);
    for (double r : sp.rho) {
        const double s = r - sp.shift;
        sp.s.push_back(s);
        sp.energy += std::abs(s);
        sp.two_S_spectral += s * s;
        if (r >= sp.shift - kEtaTieTolerance) {
            ++sp.eta;
        }
        if (std::abs(s) < kSingularShiftTolerance) {
            sp.shift_singular = true;
        }
    }
    sp.two_S = two_S(g, alpha);
    sp.gamma_det = sp.shift_singular ? 0.0 : shifted_abs_product(sp.rho, sp.shift);
    sp.theta = std::sqrt(static_cast<double>(sp.zagreb) / static_cast<double>(sp.n)) - sp.shift;
    return sp;
}

double energy_via_partial_sums(const AlphaSpectrum& sp) {
    double best = -INFINITY;
    double partial = 0.0;
    for (std::size_t j = 0; j < sp.rho.size(); ++j) {
        partial += sp.rho[j];
        best = std::max(best, partial - static_cast<double>(j + 1) * sp.shift);
    }
    return 2.0 * best;
}

} // namespace alphaenergy
