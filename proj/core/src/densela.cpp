#include "alphaenergy/densela.hpp"

#include "alphaenergy/error.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

namespace alphaenergy {

namespace {

constexpr int kMaxSweeps = 100;
constexpr double kConvergenceScale = 1e-13;

double off_diagonal_norm(const std::vector<double>& a, std::size_t n) {
    double sum = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            sum += a[i * n + j] * a[i * n + j];
        }
    }
    return std::sqrt(2.0 * sum);
}

// One Jacobi rotation annihilating a(p,q); `a` is kept fully symmetric.
void rotate(std::vector<double>& a, std::vector<double>& v, std::size_t n, std::size_t p, std::size_t q) {
    const double apq = a[p * n + q];
    const double app = a[p * n + p];
    const double aqq = a[q * n + q];

    const double theta = (aqq - app) / (2.0 * apq);
    double t;
    if (std::abs(theta) > 1e150) {
        t = 0.5 / theta;
    } else {
        t = 1.0 / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        if (theta < 0.0) {
            t = -t;
        }
    }
    const double c = 1.0 / std::sqrt(t * t + 1.0);
    const double s = t * c;

    for (std::size_t k = 0; k < n; ++k) {
        if (k == p || k == q) {
            continue;
        }
        const double akp = a[k * n + p];
        const double akq = a[k * n + q];
        const double new_kp = c * akp - s * akq;
        const double new_kq = s * akp + c * akq;
        a[k * n + p] = new_kp;
        a[p * n + k] = new_kp;
        a[k * n + q] = new_kq;
        a[q * n + k] = new_kq;
    }
    a[p * n + p] = app - t * apq;
    a[q * n + q] = aqq + t * apq;
    a[p * n + q] = 0.0;
    a[q * n + p] = 0.0;

    for (std::size_t k = 0; k < n; ++k) {
        const double vkp = v[k * n + p];
        const double vkq = v[k * n + q];
        v[k * n + p] = c * vkp - s * vkq;
        v[k * n + q] = s * vkp + c * vkq;
    }
}

} // namespace

SymmetricMatrix::SymmetricMatrix(std::size_t order) : order_(order), data_(order * order, 0.0) {
    if (order == 0) {
        throw InvalidParameters("SymmetricMatrix: order must be at least 1");
    }
}

SymmetricMatrix SymmetricMatrix::identity(std::size_t order) {
    SymmetricMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        m.data_[i * order + i] = 1.0;
    }
    return m;
}

SymmetricMatrix SymmetricMatrix::from_row_major(std::span<const double> entries, std::size_t order,
                                                double tolerance) {
    if (entries.size() != order * order) {
        throw InvalidParameters("SymmetricMatrix: expected " + std::to_string(order * order) + " entries, got " +
                                std::to_string(entries.size()));
    }
    SymmetricMatrix m(order);
    for (std::size_t i = 0; i < order; ++i) {
        for (std::size_t j = i; j < order; ++j) {
            const double upper = entries[i * order + j];
            const double lower = entries[j * order + i];
            if (!(std::abs(upper - lower) <= tolerance)) {
                throw NonSymmetric("matrix is not symmetric at (" + std::to_string(i) + ", " + std::to_string(j) +
                                   ")");
            }
            m.set(i, j, i == j ? upper : 0.5 * (upper + lower));
        }
    }
    return m;
}

void SymmetricMatrix::add_to_diagonal(double shift) noexcept {
    for (std::size_t i = 0; i < order_; ++i) {
        data_[i * order_ + i] += shift;
    }
}

double SymmetricMatrix::trace() const noexcept {
    double sum = 0.0;
    for (std::size_t i = 0; i < order_; ++i) {
        sum += data_[i * order_ + i];
    }
    return sum;
}

SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    if (a.order_ != b.order_) {
        throw InvalidParameters("SymmetricMatrix: order mismatch in addition");
    }
    SymmetricMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) {
        out.data_[i] += b.data_[i];
    }
    return out;
}

SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b) {
    return a + (-1.0) * b;
}

SymmetricMatrix operator*(double scale, const SymmetricMatrix& a) {
    SymmetricMatrix out = a;
    for (double& x : out.data_) {
        x *= scale;
    }
    return out;
}

EigenDecomposition eigendecompose(const SymmetricMatrix& m) {
    const std::size_t n = m.order();
    std::vector<double> a(m.row_major().begin(), m.row_major().end());
    std::vector<double> v(n * n, 0.0);
    for (std::size_t i = 0; i < n; ++i) {
        v[i * n + i] = 1.0;
    }

    const double threshold = kConvergenceScale * (1.0 + frobenius_norm(m));
    int sweeps = 0;
    bool converged = false;
    for (;;) {
        if (off_diagonal_norm(a, n) <= threshold) {
            converged = true;
            break;
        }
        if (sweeps == kMaxSweeps) {
            break;
        }
        for (std::size_t p = 0; p + 1 < n; ++p) {
            for (std::size_t q = p + 1; q < n; ++q) {
                const double apq = a[p * n + q];
                if (apq == 0.0) {
                    continue;
                }
                // Late sweeps: drop entries that can no longer move the diagonal.
                const double g = 100.0 * std::abs(apq);
                if (sweeps >= 4 && std::abs(a[p * n + p]) + g == std::abs(a[p * n + p]) &&
                    std::abs(a[q * n + q]) + g == std::abs(a[q * n + q])) {
                    a[p * n + q] = 0.0;
                    a[q * n + p] = 0.0;
                    continue;
                }
                rotate(a, v, n, p, q);
            }
        }
        ++sweeps;
    }
    if (!converged) {
        throw NoConvergence("Jacobi eigensolver did not converge within " + std::to_string(kMaxSweeps) + " sweeps");
    }

    std::vector<std::size_t> order(n);
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t i, std::size_t j) { return a[i * n + i] > a[j * n + j]; });

    EigenDecomposition out;
    out.sweeps = sweeps;
    out.eigenvalues.resize(n);
    out.eigenvectors.resize(n * n);
    for (std::size_t k = 0; k < n; ++k) {
        const std::size_t src = order[k];
        out.eigenvalues[k] = a[src * n + src];
        for (std::size_t row = 0; row < n; ++row) {
            out.eigenvectors[row * n + k] = v[row * n + src];
        }
    }
    return out;
}

EigenDecomposition eigendecompose(std::span<const double> row_major, std::size_t order) {
    return eigendecompose(SymmetricMatrix::from_row_major(row_major, order));
}

double frobenius_norm(const SymmetricMatrix& m) {
    double sum = 0.0;
    for (double x : m.row_major()) {
        sum += x * x;
    }
    return std::sqrt(sum);
}

double shifted_abs_product(std::span<const double> eigenvalues, double shift) {
    double product = 1.0;
    for (double e : eigenvalues) {
        product *= e - shift;
    }
    return std::abs(product);
}

double shifted_abs_determinant(const SymmetricMatrix& m, double shift) {
    return shifted_abs_product(eigendecompose(m).eigenvalues, shift);
}

} // namespace alphaenergy
