#pragma once

#include "braidkit/braiding.hpp"
#include "braidkit/ncpoly.hpp"

#include <memory>
#include <string>
#include <vector>

namespace braidkit {

struct NonScalarTrace : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OmegaZero : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotInvariant : std::runtime_error {
    using std::runtime_error::runtime_error;
};

using SymmetryPtr = std::shared_ptr<const HeckeSymmetry>;

// A finite-dimensional module over a presentation. Generator images are indexed like the
// presentation's generators. Modules built from V^{⊗k} remember k and, for submodules, the
// inclusion into V^{⊗k} and an equivariant projection onto it.
struct Representation {
    std::string name;
    PresentationPtr algebra;
    SymmetryPtr sym;
    std::size_t dim = 0;
    std::vector<Matrix> images;
    // braiding End(V) ⊗ U -> U ⊗ End(V); column g*dim + u, row u*n^2 + g. Empty when unknown.
    Matrix end_braid;
    std::size_t tensor_degree = 0;
    Matrix inclusion;   // n^k x dim, empty for the whole tensor power
    Matrix projection;  // dim x n^k

    const Matrix& image(const std::string& generator) const;
};

struct RepCheck {
    bool pass = true;
    std::string witness;
};
// every relation of the presentation maps to the zero operator
RepCheck check_rep(const Representation& r);
// images of an arbitrary element
Matrix evaluate(const Representation& r, const Terms& t);
Matrix evaluate(const Representation& r, const AlgebraElement& e);

// ρ_V(L_i^j) x_k = x_i B^j_k on the mREA with hbar = 1
Representation rho_V(const HeckeSymmetry& h);
// ρ_{V*}(L_i^j) x^k = -x^r R_{ri}^{kj}
Representation rho_Vstar(const HeckeSymmetry& h);

// braiding of End(V)^{⊗2}; column (g1, g2) holds the image of L_{g1} ⊗ L_{g2}
Matrix build_REnd(const HeckeSymmetry& h);
// braiding End(V) ⊗ V -> V ⊗ End(V); column g*n + k, row t*n^2 + g
Matrix build_REndV(const HeckeSymmetry& h);

// Matrix elements of the copies L_{\bar p} inside V^{⊗k}: column (α, β) of the result is the
// entry (α, β) of L_{\bar p_1} ⊗̇ ... ⊗̇ L_{\bar p_m} expanded in the plain basis of ℒ^{⊗m}.
Matrix copies_matrix(const HeckeSymmetry& h, std::size_t k, const std::vector<std::size_t>& copies);
// L_{\bar p} as coefficient matrices on V^{⊗k}, one per generator
std::vector<Matrix> copy_coefficients(const HeckeSymmetry& h, std::size_t k, std::size_t p);

// Δ(L_i^j) = L_i^j ⊗ 1 + 1 ⊗ L_i^j - (q - q^-1) Σ_k L_i^k ⊗ L_k^j; index 0 is the unit,
// 1 + g the generator g, so the result has (1 + n^2)^2 entries indexed x*(1 + n^2) + y.
Vec coproduct_image(const HeckeSymmetry& h, std::size_t generator);

// the module U ⊗ W through the braided coproduct; U must carry its braiding with End(V)
Representation tensor_rep(const Representation& u, const Representation& w);
Representation tensor_power(const HeckeSymmetry& h, std::size_t k);
// restriction to an invariant subspace given by basis columns and a projection onto it
Representation restrict_rep(const Representation& r, const Matrix& inclusion, const Matrix& projection);
// V_k, the q-symmetric part of V^{⊗k}
Representation symmetric_module(const HeckeSymmetry& h, std::size_t k);
// the complementary submodule spanned by the q-antisymmetric pieces
Subspace symmetric_complement(const HeckeSymmetry& h, std::size_t k);

struct SlReduction {
    Representation rep;  // over sl_n2(1) with generators b, h, c
    QScalar chi1;        // scalar value of Tr_R(L)
    QScalar omega;
    std::vector<Matrix> F;  // images of F_i^j, index i*n + j
};
SlReduction sl_reduce_rep(const Representation& r);

// categorical trace on a module of V^{⊗k}: s^k Tr(X C^{⊗k}) with s = n_q / Tr C
QScalar quantum_trace_on_module(const Representation& r, const Matrix& x);
QScalar qdim(const Representation& r);

// value of the sl Casimir q^-1 bc + h^2/2_q + q cb on V_k, computed through the module
QScalar casimir_on_module(const HeckeSymmetry& h, std::size_t k);
// q^-2 k_q (k+2)_q/(k+1)_q ((k+2)_q + k_q)/((k+2)_q - k_q)^2
QScalar casimir_value(int k, const QScalar& q = QScalar::q());

// action map ℒ ⊗ U -> U; column g*dim + u
Matrix action_matrix(const Representation& r);
// braiding U ⊗ V -> V ⊗ U for U = V^{⊗k} or a submodule of it
Matrix braiding_with_V(const Representation& r);
// (id_V ⊗ act) ∘ (R_{ℒ,V} ⊗ id) ∘ (id_ℒ ⊗ R_{U,V}) = R_{U,V} ∘ (act ⊗ id_V)
bool equivariant(const Representation& r, std::string* witness = nullptr);

// the (k+1)-dimensional U_q(sl(2)) module pushed through the FRT parametrization into the
// REA (hbar = 0, standard n = 2, generators a, b, c, d)
Representation frt_module(std::size_t k);

struct FrtReduction {
    QScalar ell;    // scalar value of q^-1 a + q d
    QScalar hbar;   // -(q - q^-1) ell / 2_q, the value absorbed by the rescaling
    Representation sl;  // b, a - d, c divided by hbar, over sl_n2(1)
    QScalar C;      // central element of the X_0, X_+, X_- presentation, q^-2 ell / 2_q
    // C^2 - (q - q^-1)^2 (X_0^2 + (q X_- X_+ + q^-1 X_+ X_-)/2_q) - 1
    Matrix quadratic_residual;
};
FrtReduction frt_sl_reduction(const Representation& frt);

}  // namespace braidkit
