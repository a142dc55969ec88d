#include "braidkit/bundles.hpp"

namespace braidkit {

static PresentationPtr hyperboloid(const QScalar& q, const QScalar& hbar, const QScalar& C) {
    PresetParams pp;
    pp.q = q;
    pp.hbar = hbar;
    pp.casimir = C;
    return preset("hyperboloid", pp);
}

QScalar ch_discriminant(const QScalar& hbar, const QScalar& C) {
    const QScalar q = QScalar::q();
    return q.pow(-2) * hbar * hbar + QScalar(4) * C / qint(2, q);
}

ChIdempotents ch_idempotents(const QScalar& hbar, const QScalar& C) {
    const QScalar q = QScalar::q();
    QScalar disc = ch_discriminant(hbar, C);
    if (disc.is_zero()) throw RepeatedRoots("the Cayley-Hamilton polynomial has a double root");
    QScalar root;
    if (!try_sqrt(disc, root)) throw NonSquareDiscriminant("discriminant " + disc.str() + " is not a square in Q(q)");
    if (root.num().lc() < 0) root = -root;
    ChIdempotents out;
    out.casimir = C;
    out.mu0 = (q.inv() * hbar - root) / QScalar(2);
    out.mu1 = (q.inv() * hbar + root) / QScalar(2);
    auto p = hyperboloid(q, hbar, C);
    AlgMatrix f = sl2_matrix(p), id = AlgMatrix::identity(p, 2);
    QScalar gap = out.mu0 - out.mu1;
    out.e0 = {gap.inv() * (f - out.mu1 * id), "CH-root"};
    out.e1 = {(-gap).inv() * (f - out.mu0 * id), "CH-root"};
    return out;
}

AlgebraElement normalized_r_trace(const AlgMatrix& e) {
    HeckeSymmetry h = standard_R(e.rows(), e.presentation()->q());
    QScalar s = qint(static_cast<int>(h.n), h.q) / h.C.trace();
    return s * r_trace_mat(h, e);
}

Representation index_module(std::size_t k) {
    return sl_reduce_rep(symmetric_module(standard_R(2), k)).rep;
}

QScalar q_index(const Representation& pi, const Idempotent& e, const QScalar& casimir) {
    Matrix cas = evaluate(pi, sl2_casimir(pi.algebra));
    if (cas != casimir * Matrix::identity(pi.dim))
        throw CasimirMismatch("the module Casimir differs from the C of the idempotent");
    AlgebraElement t = normalized_r_trace(e.e);
    // the trace lives in the quotient; map generators to the module by name
    const Presentation& src = *t.presentation();
    Matrix image(pi.dim, pi.dim);
    for (const auto& [w, c] : t.terms()) {
        Matrix m = Matrix::identity(pi.dim);
        for (char ch : w) m = m * pi.image(src.generators()[static_cast<unsigned char>(ch)]);
        image = image + c * m;
    }
    return quantum_trace_on_module(pi, image);
}

std::pair<Idempotent, Idempotent> rtt_idempotents(const QScalar& q) {
    PresetParams pp;
    pp.q = q;
    auto p = preset("rtt_n2", pp);
    AlgMatrix col1 = AlgMatrix::parse(p, {{"a"}, {"c"}}), row1 = AlgMatrix::parse(p, {{"d", "-q^-1*b"}});
    AlgMatrix col2 = AlgMatrix::parse(p, {{"d"}, {"b"}}), row2 = AlgMatrix::parse(p, {{"a", "-q*c"}});
    return {{col1 * row1, "RTT"}, {col2 * row2, "RTT"}};
}

std::pair<Idempotent, Idempotent> cotangent_idempotents(const QScalar& C, const QScalar& q) {
    if (C.is_zero()) throw std::invalid_argument("the Casimir value must be nonzero");
    auto p = hyperboloid(q, QScalar(0), C);
    AlgMatrix u1 = AlgMatrix::parse(p, {{"q^-1*c"}, {"h/(q+q^-1)"}, {"q*b"}});
    AlgMatrix v1 = AlgMatrix::parse(p, {{"b", "h", "c"}});
    AlgMatrix u2 = AlgMatrix::parse(p, {{"c"}, {"h"}, {"b"}});
    AlgMatrix v2 = AlgMatrix::parse(p, {{"q^-1*b", "h/(q+q^-1)", "q*c"}});
    QScalar s = C.inv();
    return {{s * (u1 * v1), "cotangent"}, {s * (u2 * v2), "cotangent"}};
}

}  // namespace braidkit
