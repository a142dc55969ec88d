#include "braidkit/braiding.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace braidkit;

static QScalar q() { return QScalar::q(); }

static bool all_pass(const HeckeSymmetry& h) {
    bool ok = true;
    for (const auto& c : validate(h)) {
        INFO(h.name << " " << c.id << " " << c.witness);
        CHECK(c.pass);
        ok = ok && c.pass;
    }
    return ok;
}

TEST_CASE("standard R for n = 2 matches the explicit matrix") {
    HeckeSymmetry h = standard_R(2);
    QScalar z;
    Matrix expect = Matrix::from_rows({{q(), z, z, z},
                                       {z, q() - q().inv(), QScalar(1), z},
                                       {z, QScalar(1), z, z},
                                       {z, z, z, q()}});
    CHECK(h.R.matrix() == expect);
    CHECK(h.B == Matrix::diag({q().pow(-1), q().pow(-3)}));
    CHECK(h.C == Matrix::diag({q().pow(-3), q().pow(-1)}));
    CHECK(h.C.trace() == q().pow(-2) * qint(2));
    all_pass(h);
}

TEST_CASE("standard R for n = 3, 4 validates") {
    for (std::size_t n : {3u, 4u}) {
        HeckeSymmetry h = standard_R(n);
        all_pass(h);
        // Tr C = q^{-n} n_q
        CHECK(h.C.trace() == q().pow(-static_cast<int>(n)) * qint(static_cast<int>(n)));
    }
}

TEST_CASE("skew-inverse trace identity through partial traces") {
    HeckeSymmetry h = standard_R(2);
    std::vector<std::size_t> d3{2, 2, 2};
    TensorOperator lhs = partial_trace(embed(h.R, 1, d3) * embed(h.Psi, 2, d3), {2});
    CHECK(lhs.matrix() == swap_operator(2).matrix());
}

TEST_CASE("flip and superflip") {
    HeckeSymmetry f = flip(2);
    CHECK((f.R * f.R).matrix().is_identity());
    CHECK(f.B.is_identity());
    CHECK(f.C.is_identity());
    CHECK(f.Psi.matrix() == swap_operator(2).matrix());
    all_pass(f);
    HeckeSymmetry s = superflip(1, 1);
    all_pass(s);
    // x_1 is odd: x_1 ⊗ x_1 -> -x_1 ⊗ x_1, x_0 ⊗ x_1 -> x_1 ⊗ x_0
    CHECK(s.r(1, 1, 1, 1) == QScalar(-1));
    CHECK(s.r(1, 0, 0, 1) == QScalar(1));
    CHECK(s.r(0, 0, 0, 0) == QScalar(1));
    CHECK((s.R * s.R).matrix().is_identity());
    CHECK(s.C.trace() == QScalar(0));
}

TEST_CASE("skew-inverse failure") {
    Matrix r(4, 4);
    r(0, 0) = QScalar(1);
    CHECK_THROWS_AS(skew_inverse(TensorOperator({2, 2}, r)), NotSkewInvertible);
    // invertible but diagonal: the trace system has no solution
    Matrix d = Matrix::diag({QScalar(1), QScalar(2), QScalar(3), QScalar(4)});
    CHECK_THROWS_AS(skew_inverse(TensorOperator({2, 2}, d)), NotSkewInvertible);
}

TEST_CASE("r_trace") {
    HeckeSymmetry h = standard_R(2);
    CHECK(r_trace(h, Matrix::identity(2)) == q().pow(-1) + q().pow(-3));
    HeckeSymmetry f = flip(3);
    Matrix x = gen::laurent_matrix(3, 3);
    CHECK(r_trace(f, x) == x.trace());
}

TEST_CASE("property: R-trace of a conjugated first leg") {
    for (std::size_t n : {2u, 3u}) {
        HeckeSymmetry h = standard_R(n);
        auto d2 = h.dims(2);
        TensorOperator c2 = embed(TensorOperator({n}, h.C), 2, d2);
        for (int t = 0; t < 3; ++t) {
            Matrix x = gen::laurent_matrix(n, n);
            TensorOperator x1 = embed(TensorOperator({n}, x), 1, d2);
            Matrix a = partial_trace(c2 * h.R * x1 * h.Rinv, {2}).matrix();
            Matrix b = partial_trace(c2 * h.Rinv * x1 * h.R, {2}).matrix();
            Matrix e = r_trace(h, x) * Matrix::identity(n);
            CHECK(a == e);
            CHECK(b == e);
        }
    }
}

TEST_CASE("bi-rank detection") {
    CHECK(birank_detect(standard_R(2)) == BiRank{2, 0});
    CHECK(birank_detect(flip(3)) == BiRank{3, 0});
    CHECK(birank_detect(superflip(1, 1)) == BiRank{1, 1});
}

TEST_CASE("q-symmetric and q-antisymmetric dimensions") {
    auto binom = [](int n, int k) {
        long r = 1;
        for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
        return static_cast<std::size_t>(k < 0 || k > n ? 0 : r);
    };
    HeckeSymmetry h2 = standard_R(2);
    for (int k = 1; k <= 6; ++k) {
        CHECK(symmetric_tensors(h2, k).cols() == binom(2 + k - 1, k));
        CHECK(antisymmetric_tensors(h2, k).cols() == binom(2, k));
    }
    HeckeSymmetry h3 = standard_R(3);
    for (int k = 1; k <= 6; ++k) {
        CHECK(symmetric_tensors(h3, k).cols() == binom(3 + k - 1, k));
        CHECK(antisymmetric_tensors(h3, k).cols() == binom(3, k));
    }
}

TEST_CASE("custom R from JSON") {
    std::string doc = R"({"n": 2, "R": [["q","0","0","0"],["0","q-q^-1","1","0"],["0","1","0","0"],["0","0","0","q"]]})";
    HeckeSymmetry h = symmetry_from_json(doc);
    CHECK(h.R == standard_R(2).R);
    std::string bad = R"({"n": 2, "R": [["q","0","0","0"],["0","q","1","0"],["0","1","0","0"],["0","0","0","q"]]})";
    CHECK_THROWS(symmetry_from_json(bad));
}

TEST_CASE("numeric specialization") {
    HeckeSymmetry h = standard_R(2, QScalar(mpq_class(3, 2)));
    all_pass(h);
    CHECK(h.B(0, 0) == QScalar(mpq_class(2, 3)));
}
