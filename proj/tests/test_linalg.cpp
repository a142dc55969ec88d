#include "braidkit/braiding.hpp"
#include "braidkit/linalg.hpp"
#include "generators.hpp"

#include <doctest.h>

using namespace braidkit;

TEST_CASE("kron basics") {
    CHECK(kron(Matrix::identity(2), Matrix::identity(2)) == Matrix::identity(4));
    TensorOperator p = TensorOperator({2, 2}, swap_operator(2).matrix());
    TensorOperator p12 = kron(p, TensorOperator::identity({2}));
    CHECK(p12 == leg_permutation({2, 2, 2}, {1, 0, 2}));
    for (int t = 0; t < 10; ++t) {
        Matrix a = gen::laurent_matrix(2, 2), b = gen::laurent_matrix(2, 2);
        Matrix c = gen::laurent_matrix(2, 2), d = gen::laurent_matrix(2, 2);
        CHECK(kron(a, b) * kron(c, d) == kron(a * c, b * d));
    }
}

TEST_CASE("embed") {
    HeckeSymmetry h = standard_R(2);
    std::vector<std::size_t> d3{2, 2, 2};
    TensorOperator r23 = embed(h.R, 2, d3);
    CHECK(r23 == kron(TensorOperator::identity({2}), h.R));
    TensorOperator r12 = embed(h.R, 1, d3);
    CHECK(r12 * r23 * r12 == r23 * r12 * r23);
    CHECK(embed(TensorOperator::identity({2}), 3, d3) == TensorOperator::identity(d3));
    CHECK_THROWS_AS(embed(h.R, 3, d3), DimensionMismatch);
}

TEST_CASE("partial trace") {
    TensorOperator id4 = TensorOperator::identity({2, 2});
    TensorOperator t = partial_trace(id4, {1, 2});
    CHECK(t.size() == 1);
    CHECK(t(0, 0) == QScalar(4));
    Matrix a = gen::laurent_matrix(2, 2), b = gen::laurent_matrix(3, 3);
    TensorOperator ab = kron(TensorOperator({2}, a), TensorOperator({3}, b));
    CHECK(partial_trace(ab, {2}).matrix() == b.trace() * a);
    CHECK(partial_trace(ab, {1}).matrix() == a.trace() * b);
}

TEST_CASE("partial trace over disjoint legs commutes") {
    for (int t = 0; t < 5; ++t) {
        TensorOperator x({2, 2, 2}, gen::laurent_matrix(8, 8));
        TensorOperator a = partial_trace(partial_trace(x, {3}), {1});
        TensorOperator b = partial_trace(partial_trace(x, {1}), {2});
        CHECK(a == b);
        CHECK(a == partial_trace(x, {1, 3}));
    }
}

TEST_CASE("partial trace is linear") {
    for (int t = 0; t < 5; ++t) {
        TensorOperator x({2, 3}, gen::laurent_matrix(6, 6)), y({2, 3}, gen::laurent_matrix(6, 6));
        QScalar s = gen::scalar();
        CHECK(partial_trace(x + s * y, {2}) == partial_trace(x, {2}) + s * partial_trace(y, {2}));
    }
}

TEST_CASE("solve and kernel") {
    Matrix v = gen::matrix(4, 1);
    CHECK(solve(Matrix::identity(4), v) == v);
    HeckeSymmetry h = standard_R(2);
    CHECK(kernel(h.R.matrix() - h.q * Matrix::identity(4)).cols() == 3);
    Matrix sing(2, 2);
    sing(0, 0) = QScalar(1);
    Matrix rhs(2, 1);
    rhs(1, 0) = QScalar(1);
    CHECK_THROWS_AS(solve(sing, rhs), Inconsistent);
    CHECK_THROWS_AS(inverse(sing), Singular);
}

TEST_CASE("property: inverse") {
    for (int t = 0; t < 10; ++t) {
        Matrix m = gen::matrix(4, 4);
        if (rank(m) < 4) continue;
        CHECK(m * inverse(m) == Matrix::identity(4));
    }
}

TEST_CASE("property: kernel vectors are annihilated") {
    for (int t = 0; t < 10; ++t) {
        Matrix m = gen::matrix(3, 5);
        Matrix k = kernel(m);
        CHECK(k.cols() + rank(m) == 5);
        CHECK((m * k).is_zero());
    }
}

TEST_CASE("subspace lattice") {
    for (int t = 0; t < 10; ++t) {
        Subspace u = Subspace::span(gen::matrix(5, 2));
        CHECK(u.intersect(u) == u);
        CHECK(u.sum(u) == u);
        // a different spanning set gives the same canonical basis
        Matrix mix = gen::matrix(2, 3);
        Matrix other = u.basis_columns() * mix;
        if (rank(other) == u.dim()) CHECK(Subspace::span(other) == u);
        Subspace w = Subspace::span(gen::matrix(5, 4));
        Subspace cap = u.intersect(w);
        CHECK(u.contains(cap));
        CHECK(w.contains(cap));
        CHECK(cap.dim() + u.sum(w).dim() == u.dim() + w.dim());
    }
}

TEST_CASE("projector along a complement") {
    for (int t = 0; t < 10; ++t) {
        Subspace u = Subspace::span(gen::matrix(4, 2));
        Subspace w = Subspace::span(gen::matrix(4, 2));
        if (u.dim() != 2 || u.intersect(w).dim() != 0 || w.dim() != 2) continue;
        Matrix p = projector_along(u, w);
        Matrix pw = projector_along(w, u);
        CHECK(p * p == p);
        CHECK(p + pw == Matrix::identity(4));
        CHECK((p * w.basis_columns()).is_zero());
        CHECK(p * u.basis_columns() == u.basis_columns());
    }
    Subspace u = Subspace::span(Matrix::identity(3).block(0, 0, 3, 2));
    CHECK_THROWS_AS(projector_along(u, u), NotComplementary);
}

TEST_CASE("constrained tensor power") {
    // classical symmetric tensors: the constraint is Id - flip
    Matrix c = Matrix::identity(4) - swap_operator(2).matrix();
    for (std::size_t k = 1; k <= 5; ++k) CHECK(constrained_tensor_power(c, 2, k).cols() == k + 1);
}
