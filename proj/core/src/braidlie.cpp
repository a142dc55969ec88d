#include "braidkit/braidlie.hpp"

#include "braidkit/qmatrix.hpp"

#include <map>
#include <memory>
#include <mutex>

namespace braidkit {

const CopiesBasis& copies_basis(const HeckeSymmetry& h) {
    static std::mutex mu;
    static std::map<std::string, std::unique_ptr<CopiesBasis>> cache;
    const std::string key = h.name + "|" + h.q.str() + "|" + h.R.matrix().str();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto cb = std::make_unique<CopiesBasis>();
    cb->K = copies_matrix(h, 2, {1, 2});
    cb->Kinv = inverse(cb->K);
    return *cache.emplace(key, std::move(cb)).first->second;
}

// operator on the copies entries: E_{γδ} -> Σ left(γ, α) right(β, δ) E_{αβ}
static TensorOperator sandwich(const HeckeSymmetry& h, const Matrix& left, const Matrix& right) {
    const std::size_t N = h.n * h.n;
    Matrix qc(N * N, N * N);
    for (std::size_t g = 0; g < N; ++g)
        for (std::size_t a = 0; a < N; ++a) {
            if (left(g, a).is_zero()) continue;
            for (std::size_t d = 0; d < N; ++d)
                for (std::size_t b = 0; b < N; ++b)
                    if (!right(b, d).is_zero()) qc(a * N + b, g * N + d) += left(g, a) * right(b, d);
        }
    const CopiesBasis& cb = copies_basis(h);
    return TensorOperator({N, N}, cb.K * qc * cb.Kinv);
}

TensorOperator build_Q(const HeckeSymmetry& h) { return sandwich(h, h.Rinv.matrix(), h.R.matrix()); }

TensorOperator build_Qprime(const HeckeSymmetry& h) { return sandwich(h, h.Rinv.matrix(), h.Rinv.matrix()); }

TensorOperator build_Sq(const HeckeSymmetry& h) {
    const std::size_t N = h.n * h.n;
    Matrix q = build_Q(h).matrix();
    Matrix id = Matrix::identity(N * N);
    QScalar two = qint(2, h.q);
    Matrix s = (h.q * h.q + h.q.pow(-2)) * id + q + inverse(q);
    return TensorOperator({N, N}, (two * two).inv() * s);
}

Matrix composition(const HeckeSymmetry& h) {
    const std::size_t n = h.n, N = n * n;
    Matrix m(N, N * N);
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < n; ++j1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < n; ++j2)
                    m(i1 * n + j2, (i1 * n + j1) * N + i2 * n + j2) = h.B(i2, j1);
    return m;
}

BraidedBracket bracket(const HeckeSymmetry& h) {
    const std::size_t N = h.n * h.n;
    BraidedBracket br;
    br.sym = std::make_shared<HeckeSymmetry>(h);
    br.structure = composition(h) * (Matrix::identity(N * N) - build_Q(h).matrix());
    return br;
}

Representation BraidedBracket::adjoint() const {
    const std::size_t N = sym->n * sym->n;
    Representation r;
    r.name = "ad";
    r.sym = sym;
    r.algebra = mrea_from_R(*sym, QScalar(1));
    r.dim = N;
    for (std::size_t g = 0; g < N; ++g) r.images.push_back(structure.block(0, g * N, N, N));
    r.end_braid = build_REnd(*sym);
    return r;
}

static CheckResult equal_check(const std::string& name, const Matrix& a, const Matrix& b) {
    CheckResult c;
    c.name = name;
    Matrix d = a - b;
    c.pass = d.is_zero();
    if (!c.pass) c.witness = d.first_nonzero();
    return c;
}

std::vector<CheckResult> theorem_checks(const BraidedBracket& br) {
    const HeckeSymmetry& h = *br.sym;
    const std::size_t N = h.n * h.n;
    std::vector<CheckResult> out;
    const Matrix& b = br.structure;
    out.push_back(equal_check("skew-symmetry", b * build_Sq(h).matrix(), Matrix(N, N * N)));

    RepCheck rc = check_rep(br.adjoint());
    out.push_back({"adjoint representation", rc.pass, rc.witness});

    Matrix re = build_REnd(h), id = Matrix::identity(N);
    Matrix b12 = kron(b, id), b23 = kron(id, b), re12 = kron(re, id), re23 = kron(id, re);
    out.push_back(equal_check("R_End invariance (23)", re * b23, b12 * re23 * re12));
    out.push_back(equal_check("R_End invariance (12)", re * b12, b23 * re12 * re23));
    return out;
}

std::vector<CheckResult> q_operator_checks(const HeckeSymmetry& h) {
    const std::size_t N = h.n * h.n;
    const QScalar q2 = h.q * h.q, qm2 = h.q.pow(-2);
    Matrix q = build_Q(h).matrix(), qp = build_Qprime(h).matrix(), s = build_Sq(h).matrix();
    Matrix id = Matrix::identity(N * N), zero(N * N, N * N);
    std::vector<CheckResult> out;
    out.push_back(equal_check("minimal polynomial", (q + q2 * id) * (q + qm2 * id) * (q - id), zero));
    QScalar k = q2 + qm2 - QScalar(1);
    out.push_back(equal_check("inverse", inverse(q), q * q + k * (q - id)));
    out.push_back(equal_check("Q and Q' commute", q * qp, qp * q));
    out.push_back(equal_check("(Id - Q)(Id + Q') = 0", (id - q) * (id + qp), zero));
    out.push_back(equal_check("S_q idempotent", s * s, s));
    return out;
}

Vec categorical_trace_functional(const HeckeSymmetry& h) {
    const std::size_t n = h.n;
    Vec t(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k) t[i * n + j] += h.B(j, k) * h.C(k, i);
    return t;
}

// b, h = a - d, c as columns in ℒ
static Matrix sl_basis() {
    Matrix s(4, 3);
    s(1, 0) = QScalar(1);
    s(0, 1) = QScalar(1);
    s(3, 1) = QScalar(-1);
    s(2, 2) = QScalar(1);
    return s;
}

Matrix sl_table(const HeckeSymmetry& h) {
    if (h.n != 2) throw DimensionMismatch("the sl table is defined for n = 2");
    Matrix s = sl_basis();
    Matrix images = bracket(h).structure * kron(s, s);
    // the sl basis has a left inverse reading off the b, a, c coordinates
    Matrix left(3, 4);
    left(0, 1) = QScalar(1);
    left(1, 0) = QScalar(1);
    left(2, 2) = QScalar(1);
    Matrix coords = left * images;
    if (s * coords != images) throw NotInvariant("the bracket leaves the traceless subspace");
    return coords;
}

Matrix sl_table_reference(const QScalar& w, const QScalar& q) {
    const QScalar r = q / qint(2, q);
    Matrix t(3, 9);
    t(0, 0 * 3 + 1) = -w;
    t(1, 0 * 3 + 2) = w * r;
    t(0, 1 * 3 + 0) = w * q * q;
    t(1, 1 * 3 + 1) = w * (q * q - QScalar(1));
    t(2, 1 * 3 + 2) = -w;
    t(1, 2 * 3 + 0) = -w * r;
    t(2, 2 * 3 + 1) = w * q * q;
    return t;
}

Representation sl_adjoint(const HeckeSymmetry& h) {
    Matrix t = sl_table(h);
    PresetParams pp;
    pp.q = h.q;
    Representation r;
    r.name = "ad_sl";
    r.sym = std::make_shared<HeckeSymmetry>(h);
    r.algebra = preset("sl_n2", pp);
    r.dim = 3;
    for (std::size_t x = 0; x < 3; ++x) r.images.push_back(t.block(0, x * 3, 3, 3));
    return r;
}

AdjointMatrices adjoint_matrices(const QScalar& w, const QScalar& q) {
    if (w.is_zero()) throw std::invalid_argument("the factor w must be nonzero");
    const QScalar r = q / qint(2, q);
    AdjointMatrices m{Matrix(3, 3), Matrix(3, 3), Matrix(3, 3), QScalar(0)};
    m.B(0, 1) = -w;
    m.B(1, 2) = w * r;
    m.H(0, 0) = w * q * q;
    m.H(1, 1) = w * (q * q - QScalar(1));
    m.H(2, 2) = -w;
    m.C(1, 0) = -w * r;
    m.C(2, 1) = w * q * q;
    m.hbar = w * (q.pow(4) - q * q + QScalar(1)) / qint(2, q);
    return m;
}

Representation adjoint_module(const QScalar& w, const QScalar& q) {
    AdjointMatrices m = adjoint_matrices(w, q);
    PresetParams pp;
    pp.q = q;
    pp.hbar = m.hbar;
    Representation r;
    r.name = "ad(w)";
    r.sym = std::make_shared<HeckeSymmetry>(standard_R(2, q));
    r.algebra = preset("sl_n2", pp);
    r.dim = 3;
    r.images = {m.B, m.H, m.C};
    return r;
}

std::vector<CheckResult> glie_axiom_check(const Matrix& R, const Matrix& br) {
    const std::size_t d = br.rows();
    if (R.rows() != d * d || R.cols() != d * d || br.cols() != d * d)
        throw DimensionMismatch("bracket and braiding shapes do not match");
    if (!(R * R).is_identity()) throw NotInvolutive("R^2 != Id");
    Matrix id = Matrix::identity(d), id3 = Matrix::identity(d * d * d);
    Matrix r12 = kron(R, id), r23 = kron(id, R), b12 = kron(br, id), b23 = kron(id, br);
    Matrix cyc = id3 + r12 * r23 + r23 * r12;
    Matrix zero(d, d * d * d);
    std::vector<CheckResult> out;
    out.push_back(equal_check("1", br * R, -br));
    out.push_back(equal_check("2", br * b12 * cyc, zero));
    out.push_back(equal_check("2.a", br * b23 * cyc, zero));
    out.push_back(equal_check("2.b", br * b12 * (id3 - r23), br * b23));
    out.push_back(equal_check("2.c", br * b23 * (id3 - r12), br * b12));
    out.push_back(equal_check("3", R * b23, b12 * r23 * r12));
    return out;
}

std::vector<CheckResult> glie_axiom_check(const HeckeSymmetry& h) {
    if (!(h.R.matrix() * h.R.matrix()).is_identity()) throw NotInvolutive(h.name + " is not involutive");
    const std::size_t N = h.n * h.n;
    Matrix re = build_REnd(h);
    return glie_axiom_check(re, composition(h) * (Matrix::identity(N * N) - re));
}

}  // namespace braidkit
