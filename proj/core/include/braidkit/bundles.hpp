#pragma once

#include "braidkit/qmatrix.hpp"
#include "braidkit/reptheory.hpp"

#include <string>

namespace braidkit {

struct RepeatedRoots : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NonSquareDiscriminant : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct CasimirMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct Idempotent {
    AlgMatrix e;
    std::string tag;  // "CH-root", "RTT" or "cotangent"
    bool idempotent() const { return e * e == e; }
};

struct ChIdempotents {
    Idempotent e0, e1;
    QScalar mu0, mu1;
    QScalar casimir;  // the C of the quotient the entries live in
};
// roots of mu^2 - q^-1 hbar mu - C/2_q and e_i = (F - mu_j Id)/(mu_i - mu_j) over hyperboloid(C);
// mu_1 takes the square root of the discriminant with positive leading coefficient, mu_0 the other
ChIdempotents ch_idempotents(const QScalar& hbar, const QScalar& C);
QScalar ch_discriminant(const QScalar& hbar, const QScalar& C);

// Tr_R normalized to be additive and multiplicative: s Σ C_i^j e_j^i with s = 2_q / Tr C
AlgebraElement normalized_r_trace(const AlgMatrix& e);

// Tr_R(π(Tr_R e)) for π the sl-reduced module on V_k
QScalar q_index(const Representation& pi, const Idempotent& e, const QScalar& casimir);
// the sl-reduced module on V_k
Representation index_module(std::size_t k);

// e_{-1} = (a, c)^T (d, -q^-1 b) and e_{+1} = (d, b)^T (a, -q c) over rtt_n2
std::pair<Idempotent, Idempotent> rtt_idempotents(const QScalar& q = QScalar::q());

// e' = (q^-1 c, h/2_q, q b)^T (b, h, c)/C and e'' = (c, h, b)^T (q^-1 b, h/2_q, q c)/C over the
// q-commutative hyperboloid with Casimir C
std::pair<Idempotent, Idempotent> cotangent_idempotents(const QScalar& C, const QScalar& q = QScalar::q());

}  // namespace braidkit
