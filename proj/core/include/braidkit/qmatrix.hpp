#pragma once

#include "braidkit/braiding.hpp"
#include "braidkit/ncpoly.hpp"

#include <string>
#include <vector>

namespace braidkit {

struct TracelessUnitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A matrix whose entries live in one algebra.
class AlgMatrix {
public:
    AlgMatrix() = default;
    AlgMatrix(PresentationPtr p, std::size_t rows, std::size_t cols);
    static AlgMatrix identity(PresentationPtr p, std::size_t n);
    // the matrix of generators L_i^j of an n x n quantum matrix algebra
    static AlgMatrix generators(PresentationPtr p, std::size_t n);
    static AlgMatrix parse(PresentationPtr p, const std::vector<std::vector<std::string>>& entries);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    const PresentationPtr& presentation() const { return p_; }
    AlgebraElement& operator()(std::size_t i, std::size_t j) { return e_[i * cols_ + j]; }
    const AlgebraElement& operator()(std::size_t i, std::size_t j) const { return e_[i * cols_ + j]; }

    bool is_zero() const;
    friend bool operator==(const AlgMatrix& a, const AlgMatrix& b);
    friend AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b);
    friend AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b);
    friend AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b);
    friend AlgMatrix operator*(const QScalar& s, const AlgMatrix& a);
    // entrywise left multiplication by an algebra element
    friend AlgMatrix operator*(const AlgebraElement& s, const AlgMatrix& a);

    std::string str() const;

private:
    PresentationPtr p_;
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<AlgebraElement> e_;
};

AlgMatrix mat_mul(const AlgMatrix& a, const AlgMatrix& b);
AlgMatrix mat_pow(const AlgMatrix& m, int k);

// Σ C_i^j M_j^i
AlgebraElement r_trace_mat(const HeckeSymmetry& h, const AlgMatrix& m);
// Tr_R(L^k)
AlgebraElement power_sum(const HeckeSymmetry& h, const AlgMatrix& l, int k);

struct SlShift {
    AlgMatrix F;
    AlgebraElement ell;  // Tr_R(L)
};
// F = L - (Tr_R L / Tr_R Id) Id
SlShift sl_shift(const HeckeSymmetry& h, const AlgMatrix& l);

// substitutes L_i^j -> L_i^j - hbar/(q - q^-1) δ_i^j in a presentation on n^2 generators in L_i^j order
PresentationPtr hbar_shift(const Presentation& p, std::size_t n, const QScalar& hbar);
// the quotient by a generator set to zero
PresentationPtr quotient_by_generator(const Presentation& p, const std::string& g);

// F = [[q h/2_q, b], [c, -q^-1 h/2_q]] in an algebra with generators b, h, c
AlgMatrix sl2_matrix(const PresentationPtr& p);
// q^-1 bc + h^2/2_q + q cb
AlgebraElement sl2_casimir(const PresentationPtr& p);
// l^2/2_q + q^-1 bc + h^2/2_q + q cb
AlgebraElement lhbc_casimir(const PresentationPtr& p);
// F^2 - q^-1 hbar F - (Cas/2_q) Id, zero when the Cayley-Hamilton identity holds
AlgMatrix cayley_hamilton_residual(const PresentationPtr& sl, const QScalar& hbar);

}  // namespace braidkit
