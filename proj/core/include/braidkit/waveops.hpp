#pragma once

#include "braidkit/braidlie.hpp"

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

namespace braidkit {

struct DegreeOverflow : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class WaveAlgebra { kq_r3, kq_r4, rea_full };
std::string to_string(WaveAlgebra a);
WaveAlgebra wave_algebra_from_string(const std::string& s);

// A quadratic algebra A = T(W)/<I_-> with a complement I_+ of I_- in W ⊗ W. For each degree
// n <= d_max the component A_n is identified with I_+^{∩n}; the canonical form of a normal
// monomial is its preimage there.
struct CanonicalizerPair {
    std::string name;
    PresentationPtr algebra;
    std::size_t w = 0;
    std::size_t d_max = 0;
    Subspace I_minus, I_plus;

    struct Component {
        std::vector<Word> monomials;  // normal words of length n
        std::unordered_map<Word, std::size_t> index;
        Matrix quotient;   // m x w^n, word -> normal form coordinates
        Matrix canonical;  // w^n x m, canonical forms of the normal monomials
    };
    std::vector<Component> components;  // degrees 0..d_max

    const Component& component(std::size_t n) const;
    std::size_t dim(std::size_t n) const { return component(n).monomials.size(); }
    // P_+^{(n)}: onto I_+^{∩n} along I_-^{∪n}
    Matrix projector(std::size_t n) const;
    // Σ_k W^{⊗k} ⊗ I_- ⊗ W^{⊗(n-2-k)}, built explicitly
    Subspace minus_union(std::size_t n) const;
    Subspace plus_intersection(std::size_t n) const;

    Vec coordinates(const AlgebraElement& f, std::size_t n) const;  // the degree n part
    AlgebraElement element(const Vec& coords, std::size_t n) const;
    Vec word_vector(const Word& w) const;  // the basis tensor of a raw word
};
using CanonicalizerPtr = std::shared_ptr<const CanonicalizerPair>;

// pre: d_max >= 2 and I_- spanned by the quadratic relations of `algebra`
CanonicalizerPtr build_canonicalizer(const std::string& name, PresentationPtr algebra, const Subspace& I_minus,
                                     const Subspace& I_plus, std::size_t d_max);
CanonicalizerPtr build_canonicalizer(WaveAlgebra a, std::size_t d_max, const QScalar& q = QScalar::q());
// built once per (algebra, d_max, q) and shared
CanonicalizerPtr shared_canonicalizer(WaveAlgebra a, std::size_t d_max, const QScalar& q = QScalar::q());

// the complements: V_0 ⊕ V_2 in SL^{⊗2}, and with ℓ⊗x + x⊗ℓ, ℓ⊗ℓ added
Subspace sl_plus(const QScalar& q = QScalar::q());
Subspace sl_minus(const QScalar& q = QScalar::q());
Subspace slt_plus(const QScalar& q = QScalar::q());
Subspace slt_minus(const QScalar& q = QScalar::q());

// Bilinear form on W; extended to W^{⊗2} by <a⊗b, c⊗d> = <b,c><a,d>.
struct PairingTable {
    Matrix form;
    const QScalar& operator()(std::size_t x, std::size_t y) const { return form(x, y); }
    Matrix on_square() const;
    bool nondegenerate() const;
};
// <b,c> = q^-1, <h,h> = 2_q, <c,b> = q, and <ℓ,ℓ> = 1/epsilon when with_ell
PairingTable standard_pairing(bool with_ell, const QScalar& epsilon = QScalar(1), const QScalar& q = QScalar::q());
CheckResult orthogonality_check(const PairingTable& p, const Subspace& a, const Subspace& b);

// A linear operator on A acting degree-wise: parts[n] maps A_n to A_{n + shift}; it is missing
// when the target lies above d_max.
struct GradedOperator {
    std::string name;
    CanonicalizerPtr space;
    int shift = 0;
    std::vector<std::optional<Matrix>> parts;

    bool defined(std::size_t n) const { return n < parts.size() && parts[n].has_value(); }
    AlgebraElement operator()(const AlgebraElement& f) const;

    friend GradedOperator operator+(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator-(const GradedOperator& a, const GradedOperator& b);
    friend GradedOperator operator*(const GradedOperator& a, const GradedOperator& b);  // a ∘ b
    friend GradedOperator operator*(const QScalar& s, const GradedOperator& a);
};

GradedOperator identity_operator(CanonicalizerPtr s);
GradedOperator zero_operator(CanonicalizerPtr s, int shift);
// multiplication by a scalar depending on the source degree
GradedOperator degree_scalar(CanonicalizerPtr s, const std::function<QScalar(std::size_t)>& f, std::string name);
// f -> x f for a homogeneous x
GradedOperator left_multiplication(CanonicalizerPtr s, const AlgebraElement& x);
// f -> n (M)_1 f on canonical forms; column y of M is the image of the letter y
GradedOperator first_factor_extension(CanonicalizerPtr s, const Matrix& m, std::string name);
// ∂_x: n times the coefficient of the letter x in the first factor of the canonical form
GradedOperator partial(CanonicalizerPtr s, const std::string& x);
// D_X = Σ_Y <X, Y> ∂_Y for X in {b, h, c}; D_ℓ = ∂_ℓ
GradedOperator pairing_derivative(CanonicalizerPtr s, const std::string& x, const PairingTable& p);
GradedOperator pairing_derivative(CanonicalizerPtr s, const std::string& x);

// pre: f of degree <= d_max
AlgebraElement derivative(CanonicalizerPtr s, const std::string& x, const AlgebraElement& f);

// every defined part of a - b vanishes
CheckResult operator_equal(const std::string& name, const GradedOperator& a, const GradedOperator& b);

using OperatorMatrix = std::vector<std::vector<GradedOperator>>;
OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b);
OperatorMatrix scalar_identity(const GradedOperator& x, std::size_t size);
CheckResult operator_equal(const std::string& name, const OperatorMatrix& a, const OperatorMatrix& b);

// ∂_i^j on the REA of the standard n = 2 symmetry through the chain
// Id + Q'_12 + Q'_12 Q'_23 + ... applied to the normal word, read on the first factor
GradedOperator qprime_partial(CanonicalizerPtr rea, std::size_t i, std::size_t j);
// the canonical form route for the same derivative
GradedOperator canonical_partial(CanonicalizerPtr rea, std::size_t i, std::size_t j);
AlgebraElement qprime_derivative(CanonicalizerPtr rea, std::size_t i, std::size_t j, const AlgebraElement& f);
// Id + Q'_12 + Q'_12 Q'_23 + ... on W^{⊗n}
Vec qprime_chain(const Matrix& qprime, std::size_t w, std::size_t n, const Vec& v);

// q^-1 D_b D_c + D_h^2/2_q + q D_c D_b, plus ε D_ℓ^2 on kq_r4
GradedOperator laplace3(CanonicalizerPtr r3);
GradedOperator laplace4(CanonicalizerPtr r4, const QScalar& epsilon);

// q^2 D_h D_b - D_b D_h, 2_q q (D_b D_c - D_c D_b) + (q^2 - 1) D_h^2, q^2 D_c D_h - D_h D_c and
// [D_ℓ, D_x] vanish on all components
std::vector<CheckResult> derivative_algebra_check(CanonicalizerPtr s, const PairingTable& p);
std::vector<CheckResult> derivative_algebra_check(CanonicalizerPtr s);

OperatorMatrix dirac3(CanonicalizerPtr r3);
OperatorMatrix dirac4(CanonicalizerPtr r4, const QScalar& epsilon);
std::vector<CheckResult> dirac_checks(CanonicalizerPtr r3, CanonicalizerPtr r4, const QScalar& epsilon);

struct TangentFields {
    GradedOperator B, H, C;
    QScalar w;
    // value of hbar for which B, H, C satisfy the sl relations on A_n; empty if none does
    std::vector<std::optional<QScalar>> hbar;
};
// pre: w != 0, s is kq_r3
TangentFields tangent_fields(CanonicalizerPtr r3, const QScalar& w);
// q^-1 b C_q + h H_q/2_q + q c B_q = 0
CheckResult tangent_relation_check(const TangentFields& t);
// the three sl relations with hbar(n) on each component
CheckResult tangent_sl_check(const TangentFields& t);

// 𝔅_q = q^2 h B_q - b H_q, ℌ_q = q 2_q (b C_q - c B_q) + (q^2 - 1) h H_q, ℭ_q = q^2 c H_q - h C_q
struct RotationOperators {
    GradedOperator B, H, C;
};
RotationOperators rotation_operators(const TangentFields& t);
// ρ_q D_x = q^-2/2_q 𝔛_q + (n/2_q) x on components 1..max_degree, with
// ρ_q = (q^-1 bc + h^2/2_q + q cb)/2_q central; ρ_q ∂_ρ acts as n/2 on A_n
std::vector<CheckResult> pseudospherical_check(CanonicalizerPtr r3, std::size_t max_degree = 1);
AlgebraElement rho_q(PresentationPtr r3);

// Δ_{H^2} = q^-1 𝔅ℭ + ℌ^2/2_q + q ℭ𝔅 in the graded model
GradedOperator laplace_H2(const RotationOperators& r);
OperatorMatrix dirac_H2(const TangentFields& t);
// Dir^2 = q^-1 hbar(n) Dir + (q^-1 B C + H^2/2_q + q C B)/2_q Id on components 0..max_degree
CheckResult dirac_H2_check(const TangentFields& t, std::size_t max_degree = SIZE_MAX);

// Maxwell operators act on columns; grad gives the column (∂_b φ, ∂_h φ, ∂_c φ[, ∂_ℓ φ])
using Column = std::vector<AlgebraElement>;
Column maxwell3(CanonicalizerPtr r3, const Column& v);
Column maxwell4(CanonicalizerPtr r4, const QScalar& epsilon, const Column& v);
Column gradient(CanonicalizerPtr s, const AlgebraElement& phi);
// Mw_{H^2} = e'(Δ_{H^2} - (q^-1 ℭ, ℌ/2_q, q 𝔅)^T (𝔅, ℌ, ℭ)) with e' = 1 - ē', computed in the
// graded model and reduced in the hyperboloid with ρ_q = q^-2 2_q
Column maxwell_H2(const TangentFields& t, const Column& v);
// (q^-1 ℭ φ, ℌ φ/2_q, q 𝔅 φ)
Column gradient_H2(const TangentFields& t, const AlgebraElement& phi);
QScalar hyperboloid_casimir(const QScalar& q = QScalar::q());

// Mw(grad φ) = 0 for every normal monomial φ of degree <= max_degree
CheckResult maxwell_kernel_check(CanonicalizerPtr s, const QScalar& epsilon, std::size_t max_degree);
CheckResult maxwell_H2_kernel_check(const TangentFields& t, std::size_t max_degree);

// Classical oracles. The presentation must be commutative (q = 1).
// ordinary partial derivative of commutative polynomials
GradedOperator classical_partial(CanonicalizerPtr s, const std::string& x);
// K[x, y, z] with the symmetric tensors as I_+
CanonicalizerPtr euclidean_canonicalizer(std::size_t d_max);
// q = 1 forms of the Dirac operator and its square on K[sl(2)*], the hyperbolic rotations and
// the hyperboloid Dirac square; the spherical form of ∂_x, x X + y Y + z Z = 0 and the radial
// form of the Laplacian on R^3 (multiplied through by ρ = x^2 + y^2 + z^2)
std::vector<CheckResult> classical_checks(std::size_t d_max = 4);

}  // namespace braidkit
