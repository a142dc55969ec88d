#include "braidkit/scalars.hpp"
#include "generators.hpp"

#include <doctest.h>

using braidkit::QScalar;
using braidkit::qint;
namespace bk = braidkit;

static QScalar q() { return QScalar::q(); }

TEST_CASE("qint small values") {
    CHECK(qint(0) == QScalar(0));
    CHECK(qint(1) == QScalar(1));
    CHECK(qint(2) == q() + q().inv());
    CHECK(qint(-2) == -qint(2));
}

TEST_CASE("qint times q - q^-1") {
    QScalar d = q() - q().inv();
    for (int k = -12; k <= 12; ++k) CHECK(qint(k) * d == q().pow(k) - q().pow(-k));
}

TEST_CASE("eval_at") {
    CHECK(bk::eval_at(qint(2), 1) == 2);
    // (8 - 1/8) / (2 - 1/2) = (63/8) / (3/2)
    CHECK(bk::eval_at(qint(3), 2) == mpq_class(21, 4));
    QScalar pole = (q() - QScalar(1)).inv();
    CHECK_THROWS_AS(bk::eval_at(pole, 1), bk::PoleError);
    CHECK_THROWS_AS(bk::eval_at(q().inv(), 0), bk::PoleError);
}

TEST_CASE("limit_coefficient") {
    CHECK(bk::limit_coefficient(q().pow(-2) - QScalar(1), 1) == -2);
    CHECK(bk::limit_coefficient(qint(2), 0) == 2);
    CHECK(bk::limit_coefficient(q() - q().inv(), 1) == 2);
    // removable singularity: (q^2 - 1)/(q - 1) = q + 1
    QScalar r = (q().pow(2) - QScalar(1)) / (q() - QScalar(1));
    CHECK(bk::limit_coefficient(r, 0) == 2);
    CHECK(bk::limit_coefficient(r, 1) == 1);
    CHECK_THROWS_AS(bk::limit_coefficient((q() - QScalar(1)).inv(), 0), bk::PoleError);
}

TEST_CASE("field identities") {
    CHECK(q() * q().inv() == QScalar(1));
    CHECK(qint(2) * qint(2) - qint(3) - QScalar(1) == QScalar(0));
    QScalar qm1 = q() - QScalar(1);
    CHECK(qm1 / qm1 == QScalar(1));
    CHECK_THROWS_AS(QScalar(1) / QScalar(0), bk::DivisionByZero);
    CHECK_THROWS_AS(QScalar(0).inv(), bk::DivisionByZero);
}

TEST_CASE("printing") {
    CHECK((q() - q().inv()).str() == "q - q^-1");
    CHECK(q().pow(-3).str() == "q^-3");
    CHECK(QScalar(mpq_class(1, 2)).str() == "1/2");
    CHECK(((q().pow(2) + QScalar(1)) / (q().pow(4) + QScalar(1))).str() == "(q^2 + 1)/(q^4 + 1)");
    CHECK((-q()).str() == "-q");
    CHECK(QScalar(0).str() == "0");
}

TEST_CASE("parsing") {
    CHECK(bk::parse_scalar("(q^2+1)/(q^4+1)") == (q().pow(2) + QScalar(1)) / (q().pow(4) + QScalar(1)));
    CHECK(bk::parse_scalar("q^-3") == q().pow(-3));
    CHECK(bk::parse_scalar("2*q - -q^(-1)") == QScalar(2) * q() + q().inv());
    CHECK(bk::parse_scalar("(q+1)^2 - q^2 - 2*q") == QScalar(1));
    CHECK_THROWS_AS(bk::parse_scalar("q +"), bk::ParseError);
    CHECK_THROWS_AS(bk::parse_scalar("x"), bk::ParseError);
    CHECK_THROWS_AS(bk::parse_scalar("(q"), bk::ParseError);
    CHECK_THROWS_AS(bk::parse_scalar("1/(q-q)"), bk::ParseError);
    try {
        bk::parse_scalar("q * )");
    } catch (const bk::ParseError& e) {
        CHECK(e.position == 4);
    }
}

TEST_CASE("square roots") {
    QScalar s = (q() + QScalar(2) * q().inv()) / (QScalar(3) * q().pow(2) - QScalar(1));
    QScalar r;
    REQUIRE(bk::try_sqrt(s * s, r));
    CHECK(r * r == s * s);
    CHECK_FALSE(bk::try_sqrt(q(), r));
    CHECK_FALSE(bk::try_sqrt(QScalar(2), r));
}

TEST_CASE("property: parse of print is identity") {
    for (int i = 0; i < 300; ++i) {
        QScalar s = gen::scalar();
        CHECK(bk::parse_scalar(s.str()) == s);
    }
}

TEST_CASE("property: canonical form is idempotent") {
    for (int i = 0; i < 300; ++i) {
        QScalar s = gen::scalar();
        QScalar t = QScalar::from_parts(s.num(), s.den(), s.shift());
        CHECK(t == s);
        // scaling numerator and denominator by a common factor is invisible
        bk::Poly f = gen::poly(2, 3);
        if (f.is_zero()) continue;
        CHECK(QScalar::from_parts(s.num() * f, s.den() * f, s.shift()) == s);
    }
}

TEST_CASE("property: field laws") {
    for (int i = 0; i < 200; ++i) {
        QScalar a = gen::scalar(), b = gen::scalar(), c = gen::scalar();
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        CHECK(a - a == QScalar(0));
        if (!a.is_zero()) CHECK(a * a.inv() == QScalar(1));
    }
}

TEST_CASE("property: eval_at is a ring map") {
    for (int i = 0; i < 200; ++i) {
        QScalar a = gen::scalar(), b = gen::scalar();
        mpq_class x(gen::small_int(-7, 7), gen::small_int(1, 5));
        x.canonicalize();
        try {
            mpq_class ea = bk::eval_at(a, x), eb = bk::eval_at(b, x);
            CHECK(bk::eval_at(a * b, x) == ea * eb);
            CHECK(bk::eval_at(a + b, x) == ea + eb);
        } catch (const bk::PoleError&) {
        }
    }
}

TEST_CASE("substitute") {
    QScalar s = qint(3);
    CHECK(s.substitute(QScalar(2)) == QScalar(mpq_class(21, 4)));
    CHECK(s.substitute(q().pow(2)) == q().pow(4) + QScalar(1) + q().pow(-4));
}
