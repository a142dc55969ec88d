#pragma once

#include "braidkit/scalars.hpp"

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

namespace braidkit {

struct Inconsistent : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct Singular : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotComplementary : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct DimensionMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using Vec = std::vector<QScalar>;

class Matrix {
public:
    Matrix() = default;
    Matrix(std::size_t rows, std::size_t cols) : r_(rows), c_(cols), a_(rows * cols) {}
    static Matrix identity(std::size_t n);
    static Matrix diag(const Vec& d);
    static Matrix from_rows(const std::vector<Vec>& rows);
    static Matrix from_columns(const std::vector<Vec>& cols, std::size_t height);

    std::size_t rows() const { return r_; }
    std::size_t cols() const { return c_; }
    QScalar& operator()(std::size_t i, std::size_t j) { return a_[i * c_ + j]; }
    const QScalar& operator()(std::size_t i, std::size_t j) const { return a_[i * c_ + j]; }

    Vec row(std::size_t i) const;
    Vec col(std::size_t j) const;
    Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
    Matrix columns(const std::vector<std::size_t>& idx) const;
    static Matrix hstack(const Matrix& a, const Matrix& b);
    static Matrix vstack(const Matrix& a, const Matrix& b);

    Matrix transpose() const;
    Vec apply(const Vec& v) const;
    Matrix operator-() const;
    friend Matrix operator+(const Matrix& a, const Matrix& b);
    friend Matrix operator-(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const Matrix& a, const Matrix& b);
    friend Matrix operator*(const QScalar& s, const Matrix& m);
    friend bool operator==(const Matrix& a, const Matrix& b) {
        return a.r_ == b.r_ && a.c_ == b.c_ && a.a_ == b.a_;
    }
    friend bool operator!=(const Matrix& a, const Matrix& b) { return !(a == b); }

    bool is_zero() const;
    bool is_identity() const;
    std::size_t nonzeros() const;
    QScalar trace() const;
    // first nonzero entry, reported as a witness
    std::string first_nonzero() const;
    Matrix map(QScalar (*f)(const QScalar&)) const;
    std::string str() const;

private:
    std::size_t r_ = 0, c_ = 0;
    std::vector<QScalar> a_;
};

Matrix kron(const Matrix& a, const Matrix& b);

struct Echelon {
    Matrix rows;                      // nonzero rows of the reduced echelon form
    std::vector<std::size_t> pivots;  // pivot column of each row
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// columns span the null space
Matrix kernel(const Matrix& m);
// a solution X of A X = B, throws Inconsistent
Matrix solve(const Matrix& a, const Matrix& b);
struct Solution {
    Matrix particular;
    Matrix kernel;
};
Solution solve_general(const Matrix& a, const Matrix& b);
Matrix inverse(const Matrix& m);

// Operator on a tensor product of spaces; the first factor is the most significant index.
class TensorOperator {
public:
    TensorOperator() = default;
    TensorOperator(std::vector<std::size_t> dims, Matrix m);
    static TensorOperator identity(std::vector<std::size_t> dims);

    const std::vector<std::size_t>& dims() const { return dims_; }
    const Matrix& matrix() const { return m_; }
    Matrix& matrix() { return m_; }
    std::size_t size() const { return m_.rows(); }
    const QScalar& operator()(std::size_t i, std::size_t j) const { return m_(i, j); }

    friend TensorOperator operator*(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator+(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator-(const TensorOperator& a, const TensorOperator& b);
    friend TensorOperator operator*(const QScalar& s, const TensorOperator& a);
    friend bool operator==(const TensorOperator& a, const TensorOperator& b) {
        return a.dims_ == b.dims_ && a.m_ == b.m_;
    }

private:
    std::vector<std::size_t> dims_;
    Matrix m_;
};

TensorOperator kron(const TensorOperator& a, const TensorOperator& b);
// a acting on the factors starting at 1-based `position` of the ambient product
TensorOperator embed(const TensorOperator& a, std::size_t position, const std::vector<std::size_t>& ambient);
// trace over the 1-based legs
TensorOperator partial_trace(const TensorOperator& a, const std::set<std::size_t>& legs);
// operator sending e_{i_1} ⊗ ... ⊗ e_{i_k} to the tensor whose leg perm[j] carries i_j
TensorOperator leg_permutation(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm);
// the flip x ⊗ y -> y ⊗ x on V ⊗ V
TensorOperator swap_operator(std::size_t n);

std::size_t product(const std::vector<std::size_t>& dims);
std::vector<std::size_t> multi_index(std::size_t flat, const std::vector<std::size_t>& dims);
std::size_t flat_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims);

// Subspace of K^ambient held by its reduced row echelon basis.
class Subspace {
public:
    explicit Subspace(std::size_t ambient = 0) : ambient_(ambient), basis_(0, ambient) {}
    // span of the columns
    static Subspace span(const Matrix& columns);
    static Subspace whole(std::size_t n);
    static Subspace image(const Matrix& m) { return span(m); }
    static Subspace null_space(const Matrix& m);

    std::size_t ambient() const { return ambient_; }
    std::size_t dim() const { return basis_.rows(); }
    const Matrix& basis_rows() const { return basis_; }
    Matrix basis_columns() const { return basis_.transpose(); }
    bool contains(const Vec& v) const;
    bool contains(const Subspace& other) const;

    Subspace sum(const Subspace& other) const;
    Subspace intersect(const Subspace& other) const;
    // orthogonal complement for the standard bilinear form
    Subspace annihilator() const;

    friend bool operator==(const Subspace& a, const Subspace& b) {
        return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
    }

private:
    std::size_t ambient_;
    Matrix basis_;
};

// P with image u and kernel w
Matrix projector_along(const Subspace& u, const Subspace& w);

// Basis (as columns) of the subspace of W^{⊗k} killed by `constraint` on every pair of
// adjacent legs; `constraint` has w*w columns, one row per functional.
Matrix constrained_tensor_power(const Matrix& constraint, std::size_t w, std::size_t k);

}  // namespace braidkit
