#pragma once

#include "braidkit/reptheory.hpp"

#include <string>
#include <vector>

namespace braidkit {

struct NotInvolutive : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Change of basis on ℒ^{⊗2} between the copies entries (L_{\bar 1} ⊗̇ L_{\bar 2})_{αβ} and the
// plain products L_{g1} ⊗ L_{g2}; built once per symmetry and shared.
struct CopiesBasis {
    Matrix K;     // column (α, β) in the plain basis
    Matrix Kinv;
};
const CopiesBasis& copies_basis(const HeckeSymmetry& h);

// Q(L_{\bar 1} ⊗̇ L_{\bar 2}) = R^-1 L_{\bar 1} ⊗̇ L_{\bar 2} R in the plain basis of ℒ^{⊗2}
TensorOperator build_Q(const HeckeSymmetry& h);
// Q'(L_{\bar 1} ⊗̇ L_{\bar 2}) = R^-1 L_{\bar 1} ⊗̇ L_{\bar 2} R^-1
TensorOperator build_Qprime(const HeckeSymmetry& h);
// ((q^2 + q^-2) Id + Q + Q^-1) / 2_q^2
TensorOperator build_Sq(const HeckeSymmetry& h);

// L_{i1}^{j1} ∘ L_{i2}^{j2} = B_{i2}^{j1} L_{i1}^{j2}, an n^2 x n^4 matrix
Matrix composition(const HeckeSymmetry& h);

struct BraidedBracket {
    SymmetryPtr sym;
    Matrix structure;  // N x N^2, column g1*N + g2 holds [L_{g1}, L_{g2}]
    // the adjoint module over the mREA with hbar = 1
    Representation adjoint() const;
};
// [ , ] = ∘ (Id - Q)
BraidedBracket bracket(const HeckeSymmetry& h);

struct CheckResult {
    std::string name;
    bool pass = true;
    std::string witness;
};
// skew-symmetry against S_q, the adjoint representation, R_End-invariance in both forms
std::vector<CheckResult> theorem_checks(const BraidedBracket& br);

// (Q + q^2)(Q + q^-2)(Q - 1), Q^-1 = Q^2 + (q^2 + q^-2 - 1)(Q - Id), [Q, Q'], (Id - Q)(Id + Q')
std::vector<CheckResult> q_operator_checks(const HeckeSymmetry& h);

// functional X -> tr_R X on ℒ, realized through ρ_V
Vec categorical_trace_functional(const HeckeSymmetry& h);

// n = 2 only: the bracket restricted to span(b, h = a - d, c), columns x*3 + y for [x, y]
Matrix sl_table(const HeckeSymmetry& h);
// the multiplication table of the braided sl(2) with factor w, same layout as sl_table
Matrix sl_table_reference(const QScalar& w, const QScalar& q = QScalar::q());
// ad_sl F_{\bar 1}(F_{\bar 2}) = F_1 R_12 - R_12 F_1 restricted to span(b, h, c), over sl_n2(1)
Representation sl_adjoint(const HeckeSymmetry& h);

struct AdjointMatrices {
    Matrix B, H, C;
    QScalar hbar;  // w (q^4 - q^2 + 1) / 2_q
};
AdjointMatrices adjoint_matrices(const QScalar& w, const QScalar& q = QScalar::q());
// the three matrices as a module over sl_n2 with the matching hbar
Representation adjoint_module(const QScalar& w, const QScalar& q = QScalar::q());

// generalized Lie algebra axioms 1, 2, 2.a-2.c, 3 for an involutive R on V^{⊗2} and a bracket
// V^{⊗2} -> V, as operator identities on V^{⊗3}
std::vector<CheckResult> glie_axiom_check(const Matrix& R, const Matrix& bracket);
// R_End and ∘ (Id - R_End) for an involutive symmetry
std::vector<CheckResult> glie_axiom_check(const HeckeSymmetry& h);

}  // namespace braidkit
