#include "alphaenergy/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace alphaenergy {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
// Slack for comparing user-supplied alpha against the special values 0 and 1/2
// and against the threshold 1 - n/(2m).
constexpr double kAlphaSlack = 1e-12;

struct NamedBound {
    BoundId id;
    std::string_view name;
};

constexpr std::array kNames = {
    NamedBound{BoundId::ub_mcclelland, "ub_mcclelland"},
    NamedBound{BoundId::ub_koolen_alpha, "ub_koolen_alpha"},
    NamedBound{BoundId::ub_koolen_energy, "ub_koolen_energy"},
    NamedBound{BoundId::ub_koolen_signless, "ub_koolen_signless"},
    NamedBound{BoundId::ub_eta, "ub_eta"},
    NamedBound{BoundId::ub_log_zagreb, "ub_log_zagreb"},
    NamedBound{BoundId::ub_log_degree, "ub_log_degree"},
    NamedBound{BoundId::lb_frobenius_asstated, "lb_frobenius_asstated"},
    NamedBound{BoundId::lb_frobenius_repaired, "lb_frobenius_repaired"},
    NamedBound{BoundId::lb_average_degree, "lb_average_degree"},
    NamedBound{BoundId::lb_zagreb, "lb_zagreb"},
    NamedBound{BoundId::lb_maxdeg, "lb_maxdeg"},
    NamedBound{BoundId::lb_log, "lb_log"},
    NamedBound{BoundId::rho_lb_star, "rho_lb_star"},
    NamedBound{BoundId::rho_lb_chain, "rho_lb_chain"},
};

// Graph-level quantities shared by the formulas, as doubles.
struct Params {
    double n;
    double m;
    double alpha;
    double zagreb;
    double delta;
    double avg_degree;  // 2m/n
    double root_zagreb; // sqrt(Zg/n)
    double energy;
    double rho1;

    explicit Params(const AlphaSpectrum& sp)
        : n(static_cast<double>(sp.n)),
          m(static_cast<double>(sp.m)),
          alpha(sp.alpha),
          zagreb(static_cast<double>(sp.zagreb)),
          delta(static_cast<double>(sp.max_degree)),
          avg_degree(2.0 * m / n),
          root_zagreb(std::sqrt(zagreb / n)),
          energy(sp.energy),
          rho1(sp.spectral_radius()) {}
};

BoundEvaluation not_applicable(BoundId id, BoundKind kind, double target, std::string reason) {
    BoundEvaluation e;
    e.id = id;
    e.kind = kind;
    e.applicable = false;
    e.reason = std::move(reason);
    e.value = kNaN;
    e.target = target;
    e.gap = kNaN;
    return e;
}

BoundEvaluation verdict(BoundId id, BoundKind kind, double value, double target, std::optional<bool> claim,
                        const Tolerances& tol) {
    BoundEvaluation e;
    e.id = id;
    e.kind = kind;
    e.applicable = true;
    e.value = value;
    e.target = target;
    e.gap = kind == BoundKind::upper ? value - target : target - value;
    e.holds = e.gap >= -tol.holds * (1.0 + std::abs(value));
    e.equality = e.holds && std::abs(e.gap) <= tol.equality * (1.0 + std::abs(target));
    e.equality_claim_matched = claim;
    return e;
}

bool is_zero_alpha(double alpha) { return std::abs(alpha) <= kAlphaSlack; }
bool is_half_alpha(double alpha) { return std::abs(alpha - 0.5) <= kAlphaSlack; }

// Common hypothesis chain; returns the failure reason or empty.
std::string check_connected(const AlphaSpectrum& sp) { return sp.connected ? "" : "requires connected"; }

std::string check_connected_order3(const AlphaSpectrum& sp) {
    if (!sp.connected) {
        return "requires connected";
    }
    return sp.n >= 3 ? "" : "requires n >= 3";
}

std::string check_log_hypotheses(const AlphaSpectrum& sp, const Params& p) {
    if (auto r = check_connected_order3(sp); !r.empty()) {
        return r;
    }
    if (!(p.alpha <= 1.0 - p.n / (2.0 * p.m) + kAlphaSlack)) {
        return "requires alpha <= 1 - n/(2m)";
    }
    if (sp.shift_singular) {
        return "singular shift";
    }
    if (!(sp.theta > 0.0)) {
        return "requires theta > 0";
    }
    return "";
}

// Does the merged alpha-spectrum consist of exactly these three values?
bool has_three_values(const ExtremalCertificate& cert, double a, double b, double c) {
    if (cert.distinct_alpha_eigenvalue_count != 3) {
        return false;
    }
    std::array targets{a, b, c};
    std::sort(targets.begin(), targets.end(), std::greater<>());
    for (std::size_t i = 0; i < 3; ++i) {
        if (std::abs(cert.distinct_alpha_eigenvalues[i] - targets[i]) > kDistinctEigenvalueTolerance) {
            return false;
        }
    }
    return true;
}

// Koolen-type class: K_n, or connected k-regular with alpha-eigenvalues
// {k, alpha*k + (1-alpha)*c, alpha*k - (1-alpha)*c}, c = sqrt((2m - k^2)/(n-1)).
bool koolen_class(const ExtremalCertificate& cert, const Params& p, double alpha) {
    if (cert.is_complete) {
        return true;
    }
    if (!cert.is_connected || !cert.is_regular) {
        return false;
    }
    const double k = p.avg_degree;
    const double c = std::sqrt(std::max(0.0, (2.0 * p.m - k * k) / (p.n - 1.0)));
    return has_three_values(cert, k, alpha * k + (1.0 - alpha) * c, alpha * k - (1.0 - alpha) * c);
}

// Logarithmic class: K_n with alpha = 0, or k-regular with alpha-eigenvalues
// {k, alpha*k + 1, alpha*k - 1}.
bool log_class(const ExtremalCertificate& cert, const Params& p) {
    if (cert.is_complete && is_zero_alpha(p.alpha)) {
        return true;
    }
    if (!cert.is_connected || !cert.is_regular) {
        return false;
    }
    const double k = p.avg_degree;
    return has_three_values(cert, k, p.alpha * k + 1.0, p.alpha * k - 1.0);
}

bool one_positive_rest_negative(const ExtremalCertificate& cert, const AlphaSpectrum& sp) {
    return cert.is_regular && cert.adjacency_inertia == Inertia{1, 0, sp.n - 1};
}

double star_radius_bound(const Params& p) {
    const double a = p.alpha;
    const double d = p.delta;
    const double disc = std::max(0.0, a * a * (d + 1.0) * (d + 1.0) + 4.0 * d * (1.0 - 2.0 * a));
    return 0.5 * (a * (d + 1.0) + std::sqrt(disc));
}

// Implementations shared by the public per-bound functions and evaluate().

BoundEvaluation do_ub_mcclelland(const AlphaSpectrum& sp, const ExtremalCertificate&, const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::ub_mcclelland;
    if (auto r = check_connected(sp); !r.empty()) {
        return not_applicable(id, BoundKind::upper, p.energy, r);
    }
    return verdict(id, BoundKind::upper, std::sqrt(sp.two_S * p.n), p.energy, std::nullopt, tol);
}

BoundEvaluation do_ub_koolen_alpha(const AlphaSpectrum& sp, const ExtremalCertificate& cert,
                                   const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::ub_koolen_alpha;
    if (auto r = check_connected_order3(sp); !r.empty()) {
        return not_applicable(id, BoundKind::upper, p.energy, r);
    }
    if (!(p.alpha < 1.0)) {
        return not_applicable(id, BoundKind::upper, p.energy, "requires alpha < 1");
    }
    if (p.alpha > 0.5 + kAlphaSlack) {
        const double upper = 8.0 * p.m * p.m / p.n - 2.0 * p.m;
        const double lower = 4.0 * p.m * p.m / p.n;
        if (!(p.zagreb > upper || p.zagreb < lower)) {
            return not_applicable(id, BoundKind::upper, p.energy,
                                  "alpha in (1/2,1) requires Zg > 8m^2/n - 2m or Zg < 4m^2/n");
        }
    }
    const double lead = (1.0 - p.alpha) * p.avg_degree;
    const double radicand = (p.n - 1.0) * (sp.two_S - lead * lead);
    const double value = lead + std::sqrt(std::max(0.0, radicand));
    return verdict(id, BoundKind::upper, value, p.energy, koolen_class(cert, p, p.alpha), tol);
}

BoundEvaluation do_ub_koolen_energy(const AlphaSpectrum& sp, const ExtremalCertificate& cert,
                                    const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::ub_koolen_energy;
    if (auto r = check_connected_order3(sp); !r.empty()) {
        return not_applicable(id, BoundKind::upper, p.energy, r);
    }
    if (!is_zero_alpha(p.alpha)) {
        return not_applicable(id, BoundKind::upper, p.energy, "requires alpha = 0");
    }
    const double k = p.avg_degree;
    const double value = k + std::sqrt(std::max(0.0, (p.n - 1.0) * (2.0 * p.m - k * k)));
    return verdict(id, BoundKind::upper, value, p.energy, koolen_class(cert, p, 0.0), tol);
}

BoundEvaluation do_ub_koolen_signless(const AlphaSpectrum& sp, const ExtremalCertificate& cert,
                                      const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::ub_koolen_signless;
    const double signless_energy = 2.0 * p.energy;
    if (auto r = check_connected_order3(sp); !r.empty()) {
        return not_applicable(id, BoundKind::upper, signless_energy, r);
    }
    if (!is_half_alpha(p.alpha)) {
        return not_applicable(id, BoundKind::upper, signless_energy, "requires alpha = 1/2");
    }
    const double radicand =
        (p.n - 1.0) * (2.0 * p.m + p.zagreb - (4.0 * p.m * p.m / p.n) * (1.0 + 1.0 / p.n));
    const double value = p.avg_degree + std::sqrt(std::max(0.0, radicand));
    auto e = verdict(id, BoundKind::upper, value, signless_energy, koolen_class(cert, p, 0.5), tol);
    e.reason = "equality class read with +/- (printed with + twice)";
    return e;
}

BoundEvaluation do_ub_eta(const AlphaSpectrum& sp, const ExtremalCertificate& cert, const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::ub_eta;
    if (auto r = check_connected_order3(sp); !r.empty()) {
        return not_applicable(id, BoundKind::upper, p.energy, r);
    }
    if (!(p.alpha >= 0.5 - kAlphaSlack && p.alpha < 1.0)) {
        return not_applicable(id, BoundKind::upper, p.energy, "requires 1/2 <= alpha < 1");
    }
    const double eta = static_cast<double>(sp.eta);
    const double value =
        2.0 * (p.n - 1.0) + 2.0 * (eta - 1.0) * (p.alpha * p.n - 1.0) - 4.0 * p.alpha * eta * p.m / p.n;
    return verdict(id, BoundKind::upper, value, p.energy, cert.is_complete, tol);
}

BoundEvaluation do_ub_log_zagreb(const AlphaSpectrum& sp, const ExtremalCertificate& cert,
                                 const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::ub_log_zagreb;
    if (auto r = check_log_hypotheses(sp, p); !r.empty()) {
        return not_applicable(id, BoundKind::upper, p.energy, r);
    }
    const double a = p.alpha;
    const double n = p.n;
    const double m = p.m;
    const double rz = p.root_zagreb;
    const double value = a * a * p.zagreb + (1.0 - a) * (1.0 - a) * 2.0 * m -
                         (2.0 * a * m / (n * n)) * (2.0 * a * n * m + 2.0 * a * m + n) +
                         std::log(sp.theta / sp.gamma_det) + (4.0 * a * m / n) * rz - rz * (rz - 1.0);
    return verdict(id, BoundKind::upper, value, p.energy, log_class(cert, p), tol);
}

BoundEvaluation do_ub_log_degree(const AlphaSpectrum& sp, const ExtremalCertificate& cert,
                                 const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::ub_log_degree;
    if (auto r = check_log_hypotheses(sp, p); !r.empty()) {
        return not_applicable(id, BoundKind::upper, p.energy, r);
    }
    const double a = p.alpha;
    const double n = p.n;
    const double m = p.m;
    const double value = a * a * p.zagreb + (1.0 - a) * (1.0 - a) * 2.0 * m +
                         std::log(2.0 * m * (1.0 - a) / (n * sp.gamma_det)) -
                         (2.0 * a * m / (n * n)) * (2.0 * n * a * m + 2.0 * a * m - 4.0 * m + n) -
                         (2.0 * m / (n * n)) * (2.0 * m - n);
    return verdict(id, BoundKind::upper, value, p.energy, log_class(cert, p), tol);
}

std::string check_lower_hypotheses(const AlphaSpectrum& sp) {
    if (auto r = check_connected_order3(sp); !r.empty()) {
        return r;
    }
    return sp.alpha < 1.0 ? "" : "requires alpha < 1";
}

BoundEvaluation do_lb_frobenius_asstated(const AlphaSpectrum& sp, const ExtremalCertificate&,
                                         const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::lb_frobenius_asstated;
    if (auto r = check_lower_hypotheses(sp); !r.empty()) {
        return not_applicable(id, BoundKind::lower, p.energy, r);
    }
    const double a = p.alpha;
    const double inner = a * a * p.zagreb + (1.0 - a) * (1.0 - a) * 2.0 * p.m - 2.0 * (a * p.m) * (a * p.m) / p.n;
    return verdict(id, BoundKind::lower, std::sqrt(std::max(0.0, 2.0 * inner)), p.energy, std::nullopt, tol);
}

BoundEvaluation do_lb_frobenius_repaired(const AlphaSpectrum& sp, const ExtremalCertificate&,
                                         const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::lb_frobenius_repaired;
    if (auto r = check_lower_hypotheses(sp); !r.empty()) {
        return not_applicable(id, BoundKind::lower, p.energy, r);
    }
    return verdict(id, BoundKind::lower, std::sqrt(2.0 * sp.two_S), p.energy, std::nullopt, tol);
}

BoundEvaluation do_lb_average_degree(const AlphaSpectrum& sp, const ExtremalCertificate& cert,
                                     const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::lb_average_degree;
    if (auto r = check_lower_hypotheses(sp); !r.empty()) {
        return not_applicable(id, BoundKind::lower, p.energy, r);
    }
    const double value = 4.0 * (1.0 - p.alpha) * p.m / p.n;
    return verdict(id, BoundKind::lower, value, p.energy, one_positive_rest_negative(cert, sp), tol);
}

BoundEvaluation do_lb_zagreb(const AlphaSpectrum& sp, const ExtremalCertificate& cert, const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::lb_zagreb;
    if (auto r = check_lower_hypotheses(sp); !r.empty()) {
        return not_applicable(id, BoundKind::lower, p.energy, r);
    }
    const double value = 2.0 * p.root_zagreb - 4.0 * p.alpha * p.m / p.n;
    return verdict(id, BoundKind::lower, value, p.energy, one_positive_rest_negative(cert, sp), tol);
}

BoundEvaluation do_lb_maxdeg(const AlphaSpectrum& sp, const ExtremalCertificate& cert, const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::lb_maxdeg;
    if (auto r = check_lower_hypotheses(sp); !r.empty()) {
        return not_applicable(id, BoundKind::lower, p.energy, r);
    }
    const double value = 2.0 * star_radius_bound(p) - 4.0 * p.alpha * p.m / p.n;
    return verdict(id, BoundKind::lower, value, p.energy, cert.is_star, tol);
}

BoundEvaluation do_lb_log(const AlphaSpectrum& sp, const ExtremalCertificate& cert, const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::lb_log;
    if (auto r = check_log_hypotheses(sp, p); !r.empty()) {
        return not_applicable(id, BoundKind::lower, p.energy, r);
    }
    const double value = sp.theta + (p.n - 1.0) + std::log(sp.gamma_det / sp.theta);
    return verdict(id, BoundKind::lower, value, p.energy, log_class(cert, p), tol);
}

BoundEvaluation do_rho_lb_star(const AlphaSpectrum& sp, const ExtremalCertificate& cert, const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::rho_lb_star;
    if (auto r = check_connected(sp); !r.empty()) {
        return not_applicable(id, BoundKind::lower, p.rho1, r);
    }
    if (sp.n < 2) {
        return not_applicable(id, BoundKind::lower, p.rho1, "requires n >= 2");
    }
    if (!(p.alpha < 1.0)) {
        return not_applicable(id, BoundKind::lower, p.rho1, "requires alpha < 1");
    }
    return verdict(id, BoundKind::lower, star_radius_bound(p), p.rho1, cert.is_star, tol);
}

BoundEvaluation do_rho_lb_chain(const AlphaSpectrum& sp, const ExtremalCertificate& cert, const Tolerances& tol) {
    const Params p(sp);
    const auto id = BoundId::rho_lb_chain;
    if (auto r = check_connected(sp); !r.empty()) {
        return not_applicable(id, BoundKind::lower, p.rho1, r);
    }
    // First link rho_1 >= sqrt(Zg/n) drives gap and equality; the second
    // link sqrt(Zg/n) >= 2m/n must also hold.
    auto e = verdict(id, BoundKind::lower, p.root_zagreb, p.rho1, cert.is_regular, tol);
    const double second_gap = p.root_zagreb - p.avg_degree;
    if (second_gap < -tol.holds * (1.0 + p.avg_degree)) {
        e.holds = false;
        e.equality = false;
        e.reason = "second link sqrt(Zg/n) >= 2m/n violated";
    }
    return e;
}

using BoundFn = BoundEvaluation (*)(const AlphaSpectrum&, const ExtremalCertificate&, const Tolerances&);

BoundFn dispatch(BoundId id) {
    switch (id) {
    case BoundId::ub_mcclelland: return do_ub_mcclelland;
    case BoundId::ub_koolen_alpha: return do_ub_koolen_alpha;
    case BoundId::ub_koolen_energy: return do_ub_koolen_energy;
    case BoundId::ub_koolen_signless: return do_ub_koolen_signless;
    case BoundId::ub_eta: return do_ub_eta;
    case BoundId::ub_log_zagreb: return do_ub_log_zagreb;
    case BoundId::ub_log_degree: return do_ub_log_degree;
    case BoundId::lb_frobenius_asstated: return do_lb_frobenius_asstated;
    case BoundId::lb_frobenius_repaired: return do_lb_frobenius_repaired;
    case BoundId::lb_average_degree: return do_lb_average_degree;
    case BoundId::lb_zagreb: return do_lb_zagreb;
    case BoundId::lb_maxdeg: return do_lb_maxdeg;
    case BoundId::lb_log: return do_lb_log;
    case BoundId::rho_lb_star: return do_rho_lb_star;
    case BoundId::rho_lb_chain: return do_rho_lb_chain;
    }
    return do_ub_mcclelland;
}

} // namespace

std::string_view to_string(BoundId id) {
    for (const auto& entry : kNames) {
        if (entry.id == id) {
            return entry.name;
        }
    }
    return "unknown";
}

std::optional<BoundId> bound_from_string(std::string_view name) {
    for (const auto& entry : kNames) {
        if (entry.name == name) {
            return entry.id;
        }
    }
    return std::nullopt;
}

bool is_documented_exception(BoundId id) { return id == BoundId::lb_frobenius_asstated; }

std::string_view to_string(BoundKind kind) { return kind == BoundKind::upper ? "upper" : "lower"; }

ExtremalCertificate certify(const Graph& g, const AlphaSpectrum& sp) {
    ExtremalCertificate cert;
    const std::size_t n = g.order();
    cert.is_connected = sp.connected;
    cert.is_regular = g.is_regular();
    cert.is_complete = g.size() == n * (n - 1) / 2;
    cert.is_star = n >= 2 && g.size() == n - 1 && g.max_degree() == n - 1;

    for (double r : sp.rho) {
        if (cert.distinct_alpha_eigenvalues.empty() ||
            cert.distinct_alpha_eigenvalues.back() - r > kDistinctEigenvalueTolerance) {
            cert.distinct_alpha_eigenvalues.push_back(r);
        }
    }
    cert.distinct_alpha_eigenvalue_count = cert.distinct_alpha_eigenvalues.size();

    const std::vector<double> adjacency =
        sp.alpha == 0.0 ? sp.rho : eigendecompose(adjacency_matrix(g)).eigenvalues;
    for (double lambda : adjacency) {
        if (lambda > kInertiaTolerance) {
            ++cert.adjacency_inertia.positive;
        } else if (lambda < -kInertiaTolerance) {
            ++cert.adjacency_inertia.negative;
        } else {
            ++cert.adjacency_inertia.zero;
        }
    }
    return cert;
}

double lb_log_printed_value(const AlphaSpectrum& sp) {
    const Params p(sp);
    return p.root_zagreb + (p.n - 1.0) + std::log(sp.gamma_det / sp.theta);
}

BoundEvaluation evaluate(BoundId id, const Graph&, const AlphaSpectrum& sp, const ExtremalCertificate& cert,
                         const Tolerances& tol) {
    return dispatch(id)(sp, cert, tol);
}

#define ALPHAENERGY_BOUND_ENTRY(name)                                                        \
    BoundEvaluation name(const Graph& g, const AlphaSpectrum& sp, const Tolerances& tol) { \
        return do_##name(sp, certify(g, sp), tol);                                           \
    }

ALPHAENERGY_BOUND_ENTRY(ub_mcclelland)
ALPHAENERGY_BOUND_ENTRY(ub_koolen_alpha)
ALPHAENERGY_BOUND_ENTRY(ub_koolen_energy)
ALPHAENERGY_BOUND_ENTRY(ub_koolen_signless)
ALPHAENERGY_BOUND_ENTRY(ub_eta)
ALPHAENERGY_BOUND_ENTRY(ub_log_zagreb)
ALPHAENERGY_BOUND_ENTRY(ub_log_degree)
ALPHAENERGY_BOUND_ENTRY(lb_frobenius_asstated)
ALPHAENERGY_BOUND_ENTRY(lb_frobenius_repaired)
ALPHAENERGY_BOUND_ENTRY(lb_average_degree)
ALPHAENERGY_BOUND_ENTRY(lb_zagreb)
ALPHAENERGY_BOUND_ENTRY(lb_maxdeg)
ALPHAENERGY_BOUND_ENTRY(lb_log)
ALPHAENERGY_BOUND_ENTRY(rho_lb_star)
ALPHAENERGY_BOUND_ENTRY(rho_lb_chain)

#undef ALPHAENERGY_BOUND_ENTRY

Analysis analyze(const Graph& g, double alpha, const Tolerances& tol) {
    Analysis out;
    out.spectrum = alpha_spectrum(g, alpha);
    out.certificate = certify(g, out.spectrum);
    out.evaluations.reserve(kAllBounds.size());
    for (BoundId id : kAllBounds) {
        out.evaluations.push_back(evaluate(id, g, out.spectrum, out.certificate, tol));
    }
    return out;
}

std::vector<BoundEvaluation> evaluate_all(const Graph& g, double alpha, const Tolerances& tol) {
    return analyze(g, alpha, tol).evaluations;
}

} // namespace alphaenergy
