#ifndef ALPHAENERGY_DENSELA_HPP
#define ALPHAENERGY_DENSELA_HPP

#include <cstddef>
#include <span>
#include <vector>

namespace alphaenergy {

/// Absolute entrywise tolerance accepted when ingesting a matrix that should be symmetric.
inline constexpr double kSymmetryTolerance = 1e-12;

/// Dense real symmetric matrix stored row-major.
///
/// Writes go through `set`, which updates both (i,j) and (j,i), so the
/// symmetry invariant cannot be broken after construction.
class SymmetricMatrix {
public:
    /// Zero matrix of the given order (order >= 1).
    explicit SymmetricMatrix(std::size_t order);

    static SymmetricMatrix identity(std::size_t order);

    /// Builds from a row-major n*n buffer. Throws NonSymmetric if any
    /// |a(i,j) - a(j,i)| exceeds `tolerance`; the stored value is the mean.
    static SymmetricMatrix from_row_major(std::span<const double> entries, std::size_t order,
                                          double tolerance = kSymmetryTolerance);

    std::size_t order() const noexcept { return order_; }

    double operator()(std::size_t i, std::size_t j) const noexcept { return data_[i * order_ + j]; }

    void set(std::size_t i, std::size_t j, double value) noexcept {
        data_[i * order_ + j] = value;
        data_[j * order_ + i] = value;
    }

    void add_to_diagonal(double shift) noexcept;

    double trace() const noexcept;

    std::span<const double> row_major() const noexcept { return data_; }

    friend SymmetricMatrix operator+(const SymmetricMatrix& a, const SymmetricMatrix& b);
    friend SymmetricMatrix operator-(const SymmetricMatrix& a, const SymmetricMatrix& b);
    friend SymmetricMatrix operator*(double scale, const SymmetricMatrix& a);

    bool operator==(const SymmetricMatrix&) const = default;

private:
    std::size_t order_;
    std::vector<double> data_;
};

/// Eigenvalues in descending order with their orthonormal eigenvectors.
struct EigenDecomposition {
    std::vector<double> eigenvalues;
    /// Row-major n*n; column k is the eigenvector of eigenvalues[k].
    std::vector<double> eigenvectors;
    /// Number of full Jacobi sweeps performed.
    int sweeps = 0;

    std::size_t order() const noexcept { return eigenvalues.size(); }

    double vector_component(std::size_t row, std::size_t k) const noexcept {
        return eigenvectors[row * order() + k];
    }
};

/// Cyclic Jacobi eigensolver.
///
/// Converges when the off-diagonal Frobenius norm drops to
/// 1e-13 * (1 + ||m||_F); throws NoConvergence after 100 sweeps. The sweep
/// order is fixed, so the result is bitwise reproducible.
EigenDecomposition eigendecompose(const SymmetricMatrix& m);

/// Validating overload for raw row-major input; throws NonSymmetric.
EigenDecomposition eigendecompose(std::span<const double> row_major, std::size_t order);

double frobenius_norm(const SymmetricMatrix& m);

/// |prod_i (e_i - shift)| over the eigenvalues of m, i.e. |det(m - shift*I)|.
double shifted_abs_determinant(const SymmetricMatrix& m, double shift);

/// Same product over an already computed spectrum.
double shifted_abs_product(std::span<const double> eigenvalues, double shift);

} // namespace alphaenergy

#endif // ALPHAENERGY_DENSELA_HPP
