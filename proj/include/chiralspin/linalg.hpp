#pragma once

#include <complex>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

namespace chiralspin {

using Complex = std::complex<double>;

/// Dense square complex matrix stored row-major.
///
/// This is the carrier for every operator in the library: angular momentum
/// components, Hamiltonians and rotation unitaries. Dimension is at least 1.
class ComplexMatrix {
public:
    /// Zero matrix of the given dimension.
    explicit ComplexMatrix(std::size_t dim);

    /// Row-major entries; `entries.size()` must be a non-zero perfect square
    /// and every entry finite.
    static ComplexMatrix from_row_major(std::span<const Complex> entries);
    static ComplexMatrix from_rows(std::initializer_list<std::initializer_list<Complex>> rows);
    static ComplexMatrix identity(std::size_t dim);
    static ComplexMatrix diagonal(std::span<const double> values);

    std::size_t dim() const noexcept { return dim_; }

    Complex operator()(std::size_t row, std::size_t col) const { return entries_[row * dim_ + col]; }
    Complex& operator()(std::size_t row, std::size_t col) { return entries_[row * dim_ + col]; }

    std::span<const Complex> data() const noexcept { return entries_; }

    std::vector<Complex> column(std::size_t col) const;

    bool all_finite() const noexcept;

    ComplexMatrix& operator+=(const ComplexMatrix& rhs);
    ComplexMatrix& operator-=(const ComplexMatrix& rhs);
    ComplexMatrix& operator*=(Complex scalar);

    friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

private:
    std::size_t dim_;
    std::vector<Complex> entries_;
};

ComplexMatrix operator+(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix lhs, const ComplexMatrix& rhs);
ComplexMatrix operator-(ComplexMatrix m);
ComplexMatrix operator*(const ComplexMatrix& lhs, const ComplexMatrix& rhs);
ComplexMatrix operator*(Complex scalar, ComplexMatrix m);
ComplexMatrix operator*(ComplexMatrix m, Complex scalar);
std::vector<Complex> operator*(const ComplexMatrix& m, std::span<const Complex> v);

/// Conjugate transpose.
ComplexMatrix adjoint(const ComplexMatrix& m);
Complex trace(const ComplexMatrix& m);
double frobenius_norm(const ComplexMatrix& m);
double vector_norm(std::span<const Complex> v);

/// AB - BA
ComplexMatrix commutator(const ComplexMatrix& a, const ComplexMatrix& b);
/// AB + BA
ComplexMatrix anticommutator(const ComplexMatrix& a, const ComplexMatrix& b);

/// Kronecker product. The left factor varies slowest along the product
/// basis, so `kron(A, B)(i*dimB + k, j*dimB + l) = A(i,j) * B(k,l)`.
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);

struct MatrixReport {
    double frobenius_norm = 0.0;
    double hermiticity_defect = 0.0; // ||A - A^+||_F
    double unitarity_defect = 0.0;   // ||A^+ A - I||_F
};

MatrixReport norms_and_checks(const ComplexMatrix& m);

/// Scale-relative Hermiticity acceptance threshold: 1e-12 * max(1, ||A||_F).
double hermitian_tolerance(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m);
/// Throws PreconditionError naming `context` when `m` is not Hermitian.
void require_hermitian(const ComplexMatrix& m, const char* context);

struct EigenDecomposition {
    std::vector<double> eigenvalues; // ascending
    ComplexMatrix eigenvectors;      // unitary, column k belongs to eigenvalues[k]
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix.
///
/// Sweeps until the off-diagonal Frobenius norm drops below 1e-14 * ||H||_F,
/// at most 100 sweeps (ConvergenceError otherwise). Eigenvalues are returned
/// ascending with stable tie order; eigenvectors inside a degenerate cluster
/// are re-orthonormalized.
EigenDecomposition hermitian_eigensolve(const ComplexMatrix& h);

/// Eigenvalues only (ascending); same algorithm as hermitian_eigensolve.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& h);

/// exp(-i t A) for Hermitian A, via the spectral decomposition of A.
ComplexMatrix unitary_exp(const ComplexMatrix& generator, double t);

} // namespace chiralspin
