#include "braidkit/bundles.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace braidkit;

static QScalar q() { return QScalar::q(); }

TEST_CASE("Cayley-Hamilton idempotents on the hyperboloids V_k") {
    for (int k = 1; k <= 4; ++k) {
        CAPTURE(k);
        QScalar C = casimir_value(k);
        QScalar disc = ch_discriminant(QScalar(1), C);
        QScalar root;
        REQUIRE(try_sqrt(disc, root));
        CHECK(root * root == disc);

        ChIdempotents ch = ch_idempotents(QScalar(1), C);
        // both roots solve the characteristic equation
        for (const QScalar& mu : {ch.mu0, ch.mu1})
            CHECK(mu * mu - q().inv() * mu - C / qint(2) == QScalar(0));
        CHECK(ch.e0.idempotent());
        CHECK(ch.e1.idempotent());
        auto p = ch.e0.e.presentation();
        CHECK(ch.e0.e + ch.e1.e == AlgMatrix::identity(p, 2));
        CHECK((ch.e0.e * ch.e1.e).is_zero());
        CHECK((ch.e1.e * ch.e0.e).is_zero());
        CHECK(is_central(normalized_r_trace(ch.e0.e)));
        CHECK(is_central(normalized_r_trace(ch.e1.e)));
        CHECK(ch.e0.tag == "CH-root");
    }
}

TEST_CASE("degenerate discriminants") {
    // q^-2 + 4 C / 2_q vanishes
    QScalar c0 = -qint(2) * q().pow(-2) / QScalar(4);
    CHECK_THROWS_AS(ch_idempotents(QScalar(1), c0), RepeatedRoots);
    CHECK_THROWS_AS(ch_idempotents(QScalar(1), QScalar(1)), NonSquareDiscriminant);
}

TEST_CASE("q-index of the line bundles") {
    for (int k = 1; k <= 4; ++k) {
        CAPTURE(k);
        QScalar C = casimir_value(k);
        ChIdempotents ch = ch_idempotents(QScalar(1), C);
        Representation pi = index_module(k);
        QScalar i0 = q_index(pi, ch.e0, C), i1 = q_index(pi, ch.e1, C);
        CHECK(i0 == qint(k + 2));
        CHECK(i1 == qint(k));
        CHECK(eval_at(i0, 1) == k + 2);
        CHECK(eval_at(i1, 1) == k);
        // symmetric under q -> q^-1
        CHECK(i0.substitute(q().inv()) == i0);
    }
    ChIdempotents ch3 = ch_idempotents(QScalar(1), casimir_value(3));
    CHECK_THROWS_AS(q_index(index_module(2), ch3.e0, casimir_value(3)), CasimirMismatch);
}

TEST_CASE("RTT idempotents") {
    auto [em, ep] = rtt_idempotents();
    CHECK(em.idempotent());
    CHECK(ep.idempotent());
    CHECK(em.tag == "RTT");
    auto p = em.e.presentation();
    CHECK(em.e(0, 0) == AlgebraElement::parse(p, "a*d"));
    CHECK(ep.e(1, 1) == AlgebraElement::parse(p, "-q*b*c"));

    auto [cm, cp] = rtt_idempotents(QScalar(1));
    CHECK(cm.idempotent());
    CHECK(cp.idempotent());
    auto p1 = cm.e.presentation();
    CHECK((cm.e(0, 0) + cm.e(1, 1)).scalar_value() == QScalar(1));
    CHECK((cp.e(0, 0) + cp.e(1, 1)).scalar_value() == QScalar(1));
    CHECK(cm.e(0, 1) == AlgebraElement::parse(p1, "-a*b"));
}

TEST_CASE("cotangent idempotents") {
    for (const QScalar& C : {QScalar(1), QScalar(-2), q(), casimir_value(2)}) {
        auto [e1, e2] = cotangent_idempotents(C);
        CHECK(e1.idempotent());
        CHECK(e2.idempotent());
        CHECK(e1.e.rows() == 3);
    }
    auto [c1, c2] = cotangent_idempotents(QScalar(2), QScalar(1));
    CHECK(c1.idempotent());
    CHECK(c2.idempotent());
    // classical conormal projectors have rank one
    CHECK((c1.e(0, 0) + c1.e(1, 1) + c1.e(2, 2)).scalar_value() == QScalar(1));
    CHECK((c2.e(0, 0) + c2.e(1, 1) + c2.e(2, 2)).scalar_value() == QScalar(1));
    CHECK_THROWS_AS(cotangent_idempotents(QScalar(0)), std::invalid_argument);
}

TEST_CASE("property: cotangent idempotents for random rational Casimir values") {
    for (int t = 0; t < 6; ++t) {
        QScalar C = gen::nonzero_scalar();
        auto [e1, e2] = cotangent_idempotents(C);
        CHECK(e1.idempotent());
        CHECK(e2.idempotent());
    }
}
