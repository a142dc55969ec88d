#include "braidkit/reptheory.hpp"

#include "braidkit/qmatrix.hpp"

#include <functional>

namespace braidkit {

const Matrix& Representation::image(const std::string& generator) const {
    return images.at(static_cast<std::size_t>(algebra->index_of(generator)));
}

Matrix evaluate(const Representation& r, const Terms& t) {
    Matrix acc(r.dim, r.dim);
    for (const auto& [w, c] : t) {
        Matrix m = Matrix::identity(r.dim);
        for (char ch : w) m = m * r.images[static_cast<unsigned char>(ch)];
        acc = acc + c * m;
    }
    return acc;
}

Matrix evaluate(const Representation& r, const AlgebraElement& e) { return evaluate(r, e.terms()); }

RepCheck check_rep(const Representation& r) {
    RepCheck out;
    if (r.images.size() != r.algebra->ngens()) {
        out.pass = false;
        out.witness = "wrong number of generator images";
        return out;
    }
    for (const auto& rel : r.algebra->relations()) {
        Matrix m = evaluate(r, rel);
        if (!m.is_zero()) {
            out.pass = false;
            out.witness = r.algebra->str(rel) + " acts as nonzero, " + m.first_nonzero();
            return out;
        }
    }
    return out;
}

static Representation base_rep(const HeckeSymmetry& h, const std::string& name) {
    Representation r;
    r.name = name;
    r.sym = std::make_shared<HeckeSymmetry>(h);
    r.algebra = mrea_from_R(h, QScalar(1));
    r.dim = h.n;
    return r;
}

Representation rho_V(const HeckeSymmetry& h) {
    const std::size_t n = h.n;
    Representation r = base_rep(h, "V");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m(n, n);
            for (std::size_t k = 0; k < n; ++k) m(i, k) = h.B(j, k);
            r.images.push_back(m);
        }
    r.end_braid = build_REndV(h);
    r.tensor_degree = 1;
    return r;
}

Representation rho_Vstar(const HeckeSymmetry& h) {
    const std::size_t n = h.n;
    Representation r = base_rep(h, "V*");
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m(n, n);
            for (std::size_t row = 0; row < n; ++row)
                for (std::size_t k = 0; k < n; ++k) m(row, k) = -h.r(row, i, k, j);
            r.images.push_back(m);
        }
    return r;
}

Matrix build_REnd(const HeckeSymmetry& h) {
    const std::size_t n = h.n, N = n * n;
    Matrix out(N * N, N * N);
    auto R = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> const QScalar& { return h.r(a, b, c, d); };
    auto Ri = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> const QScalar& {
        return h.rinv(a, b, c, d);
    };
    auto Ps = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t d) -> const QScalar& {
        return h.psi(a, b, c, d);
    };
    // R_End(L_{i1}^{j1} ⊗ L_{i2}^{j2}) = Tr_0(R_10 L_1 R_10^{-1} ⊗̇ L_1 R_10 Ψ_02) P_12, entry ((i1,i2),(j1,j2))
    for (std::size_t i1 = 0; i1 < n; ++i1)
        for (std::size_t j1 = 0; j1 < n; ++j1)
            for (std::size_t i2 = 0; i2 < n; ++i2)
                for (std::size_t j2 = 0; j2 < n; ++j2) {
                    const std::size_t col = (i1 * n + j1) * N + (i2 * n + j2);
                    for (std::size_t i0 = 0; i0 < n; ++i0)
                        for (std::size_t d0 = 0; d0 < n; ++d0) {
                            const QScalar& psi = Ps(d0, i2, i0, j1);
                            if (psi.is_zero()) continue;
                            for (std::size_t k1 = 0; k1 < n; ++k1)
                                for (std::size_t k0 = 0; k0 < n; ++k0)
                                    for (std::size_t c1 = 0; c1 < n; ++c1) {
                                        const QScalar& r3 = R(c1, k0, j2, d0);
                                        if (r3.is_zero()) continue;
                                        QScalar right = r3 * psi;
                                        for (std::size_t a1 = 0; a1 < n; ++a1)
                                            for (std::size_t a0 = 0; a0 < n; ++a0) {
                                                const QScalar& r1 = R(i1, i0, a1, a0);
                                                if (r1.is_zero()) continue;
                                                for (std::size_t b1 = 0; b1 < n; ++b1) {
                                                    const QScalar& r2 = Ri(b1, a0, k1, k0);
                                                    if (r2.is_zero()) continue;
                                                    out((a1 * n + b1) * N + (k1 * n + c1), col) += r1 * r2 * right;
                                                }
                                            }
                                    }
                        }
                }
    return out;
}

Matrix build_REndV(const HeckeSymmetry& h) {
    const std::size_t n = h.n, N = n * n;
    Matrix out(n * N, N * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            for (std::size_t k = 0; k < n; ++k)
                for (std::size_t m = 0; m < n; ++m)
                    for (std::size_t l = 0; l < n; ++l) {
                        const QScalar& psi = h.psi(m, j, l, k);
                        if (psi.is_zero()) continue;
                        for (std::size_t t = 0; t < n; ++t)
                            for (std::size_t u = 0; u < n; ++u) {
                                const QScalar& rr = h.r(t, u, i, m);
                                if (!rr.is_zero()) out(t * N + (u * n + l), (i * n + j) * n + k) += psi * rr;
                            }
                    }
    return out;
}

std::vector<Matrix> copy_coefficients(const HeckeSymmetry& h, std::size_t k, std::size_t p) {
    if (p < 1 || p > k) throw std::invalid_argument("copy index out of range");
    const std::size_t n = h.n;
    std::vector<std::size_t> dims(k, n);
    const std::size_t rest = product(dims) / n;
    std::vector<Matrix> m;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix e(n, n);
            e(i, j) = QScalar(1);
            m.push_back(kron(e, Matrix::identity(rest)));
        }
    for (std::size_t s = 1; s < p; ++s) {
        Matrix r = embed(h.R, s, dims).matrix();
        Matrix ri = embed(h.Rinv, s, dims).matrix();
        for (auto& x : m) x = r * x * ri;
    }
    return m;
}

Matrix copies_matrix(const HeckeSymmetry& h, std::size_t k, const std::vector<std::size_t>& copies) {
    const std::size_t n = h.n, N = n * n;
    std::size_t dimk = 1;
    for (std::size_t i = 0; i < k; ++i) dimk *= n;
    std::vector<std::vector<Matrix>> coeffs;
    for (std::size_t p : copies) coeffs.push_back(copy_coefficients(h, k, p));
    std::size_t rows = 1;
    for (std::size_t i = 0; i < copies.size(); ++i) rows *= N;
    Matrix out(rows, dimk * dimk);
    std::function<void(std::size_t, std::size_t, const Matrix&)> rec = [&](std::size_t level, std::size_t index,
                                                                          const Matrix& prefix) {
        if (level == copies.size()) {
            for (std::size_t a = 0; a < dimk; ++a)
                for (std::size_t b = 0; b < dimk; ++b)
                    if (!prefix(a, b).is_zero()) out(index, a * dimk + b) = prefix(a, b);
            return;
        }
        for (std::size_t g = 0; g < N; ++g) {
            Matrix next = level == 0 ? coeffs[0][g] : prefix * coeffs[level][g];
            if (next.is_zero()) continue;
            rec(level + 1, index * N + g, next);
        }
    };
    rec(0, 0, Matrix());
    return out;
}

Vec coproduct_image(const HeckeSymmetry& h, std::size_t generator) {
    const std::size_t n = h.n, N = n * n, M = N + 1;
    const std::size_t i = generator / n, j = generator % n;
    Vec out(M * M);
    out[(1 + generator) * M] += QScalar(1);
    out[1 + generator] += QScalar(1);
    QScalar lambda = h.q - h.q.inv();
    for (std::size_t k = 0; k < n; ++k) out[(1 + i * n + k) * M + (1 + k * n + j)] -= lambda;
    return out;
}

Representation tensor_rep(const Representation& u, const Representation& w) {
    if (u.algebra != w.algebra && !same_relations(*u.algebra, *w.algebra))
        throw std::invalid_argument("tensor factors are modules over different algebras");
    if (u.end_braid.rows() == 0) throw std::invalid_argument("left tensor factor has no braiding with End(V)");
    const HeckeSymmetry& h = *u.sym;
    const std::size_t n = h.n, N = n * n, du = u.dim, dw = w.dim;
    const QScalar lambda = h.q - h.q.inv();
    const Matrix iw = Matrix::identity(dw);
    // Y_g = Σ BR_U[(u', g'), (g, u)] E_{u'u} ⊗ ρ_W(g')
    std::vector<Matrix> y(N, Matrix(du * dw, du * dw));
    for (std::size_t g = 0; g < N; ++g)
        for (std::size_t a = 0; a < du; ++a)
            for (std::size_t a2 = 0; a2 < du; ++a2)
                for (std::size_t g2 = 0; g2 < N; ++g2) {
                    const QScalar& c = u.end_braid(a2 * N + g2, g * du + a);
                    if (c.is_zero()) continue;
                    const Matrix& img = w.images[g2];
                    for (std::size_t r = 0; r < dw; ++r)
                        for (std::size_t s = 0; s < dw; ++s)
                            if (!img(r, s).is_zero()) y[g](a2 * dw + r, a * dw + s) += c * img(r, s);
                }
    Representation out;
    out.name = u.name + "⊗" + w.name;
    out.algebra = u.algebra;
    out.sym = u.sym;
    out.dim = du * dw;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m = kron(u.images[i * n + j], iw) + y[i * n + j];
            if (!lambda.is_zero())
                for (std::size_t k = 0; k < n; ++k)
                    m = m - lambda * (kron(u.images[i * n + k], iw) * y[k * n + j]);
            out.images.push_back(std::move(m));
        }
    if (w.end_braid.rows() != 0)
        out.end_braid = kron(Matrix::identity(du), w.end_braid) * kron(u.end_braid, iw);
    if (u.tensor_degree && w.tensor_degree) {
        out.tensor_degree = u.tensor_degree + w.tensor_degree;
        if (u.inclusion.rows() || w.inclusion.rows()) {
            auto incl = [](const Representation& r) { return r.inclusion.rows() ? r.inclusion : Matrix::identity(r.dim); };
            auto proj = [](const Representation& r) { return r.projection.rows() ? r.projection : Matrix::identity(r.dim); };
            out.inclusion = kron(incl(u), incl(w));
            out.projection = kron(proj(u), proj(w));
        }
    }
    return out;
}

Representation tensor_power(const HeckeSymmetry& h, std::size_t k) {
    if (k == 0) throw std::invalid_argument("tensor power needs k >= 1");
    Representation v = rho_V(h);
    Representation acc = v;
    for (std::size_t i = 1; i < k; ++i) acc = tensor_rep(v, acc);
    acc.name = "V^" + std::to_string(k);
    return acc;
}

Representation restrict_rep(const Representation& r, const Matrix& inclusion, const Matrix& projection) {
    Representation out = r;
    out.dim = inclusion.cols();
    out.images.clear();
    for (const auto& img : r.images) {
        Matrix x = projection * img * inclusion;
        if (img * inclusion != inclusion * x) throw NotInvariant("subspace is not invariant under the action");
        out.images.push_back(std::move(x));
    }
    if (r.end_braid.rows()) {
        const std::size_t N = r.sym->n * r.sym->n;
        out.end_braid = kron(projection, Matrix::identity(N)) * r.end_braid * kron(Matrix::identity(N), inclusion);
    }
    out.inclusion = r.inclusion.rows() ? r.inclusion * inclusion : inclusion;
    out.projection = r.projection.rows() ? projection * r.projection : projection;
    return out;
}

Subspace symmetric_complement(const HeckeSymmetry& h, std::size_t k) {
    std::vector<std::size_t> dims(k, h.n);
    Subspace acc(product(dims));
    TensorOperator anti = h.q * TensorOperator::identity(h.dims(2)) - h.R;
    for (std::size_t i = 1; i < k; ++i) acc = acc.sum(Subspace::image(embed(anti, i, dims).matrix()));
    return acc;
}

Representation symmetric_module(const HeckeSymmetry& h, std::size_t k) {
    if (k == 0) throw std::invalid_argument("V_k needs k >= 1");
    if (k == 1) {
        Representation v = rho_V(h);
        v.name = "V_1";
        return v;
    }
    Representation amb = tensor_power(h, k);
    Matrix s = symmetric_tensors(h, k);
    Matrix p = projector_along(Subspace::span(s), symmetric_complement(h, k));
    Representation out = restrict_rep(amb, s, solve(s, p));
    out.name = "V_" + std::to_string(k);
    return out;
}

SlReduction sl_reduce_rep(const Representation& r) {
    const HeckeSymmetry& h = *r.sym;
    const std::size_t n = h.n;
    if (n != 2) throw DimensionMismatch("sl reduction of representations is implemented for n = 2");
    Matrix tr(r.dim, r.dim);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j)
            if (!h.C(i, j).is_zero()) tr = tr + h.C(i, j) * r.images[j * n + i];
    QScalar chi = tr(0, 0);
    if (tr != chi * Matrix::identity(r.dim)) throw NonScalarTrace("Tr_R(L) does not act as a scalar on " + r.name);
    QScalar unit = h.C.trace();
    if (unit.is_zero()) throw TracelessUnitError("Tr C = 0");
    QScalar ratio = chi / unit;
    QScalar omega = QScalar(1) - (h.q - h.q.inv()) * ratio;
    if (omega.is_zero()) throw OmegaZero("omega vanishes for " + r.name);
    SlReduction out;
    out.chi1 = chi;
    out.omega = omega;
    QScalar inv = omega.inv();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            Matrix m = r.images[i * n + j];
            if (i == j) m = m - ratio * Matrix::identity(r.dim);
            out.F.push_back(inv * m);
        }
    PresetParams pp;
    pp.q = h.q;
    pp.hbar = QScalar(1);
    out.rep = r;
    out.rep.name = r.name + "/sl";
    out.rep.algebra = preset("sl_n2", pp);
    out.rep.images = {out.F[1], h.q.inv() * qint(2, h.q) * out.F[0], out.F[2]};
    out.rep.end_braid = Matrix();
    return out;
}

QScalar quantum_trace_on_module(const Representation& r, const Matrix& x) {
    const HeckeSymmetry& h = *r.sym;
    if (r.tensor_degree == 0) throw std::invalid_argument("categorical trace needs a module inside a tensor power of V");
    QScalar unit = h.C.trace();
    if (unit.is_zero()) throw TracelessUnitError("Tr C = 0");
    QScalar s = qint(static_cast<int>(h.n), h.q) / unit;
    Matrix ck = Matrix::identity(1);
    for (std::size_t i = 0; i < r.tensor_degree; ++i) ck = kron(ck, h.C);
    QScalar t = r.inclusion.rows() ? (x * r.projection * ck * r.inclusion).trace() : (x * ck).trace();
    return s.pow(static_cast<int>(r.tensor_degree)) * t;
}

QScalar qdim(const Representation& r) { return quantum_trace_on_module(r, Matrix::identity(r.dim)); }

QScalar casimir_value(int k, const QScalar& q) {
    QScalar kq = qint(k, q), k1 = qint(k + 1, q), k2 = qint(k + 2, q);
    QScalar gap = k2 - kq;
    return q.pow(-2) * kq * k2 / k1 * (k2 + kq) / (gap * gap);
}

QScalar casimir_on_module(const HeckeSymmetry& h, std::size_t k) {
    SlReduction red = sl_reduce_rep(symmetric_module(h, k));
    Matrix cas = evaluate(red.rep, sl2_casimir(red.rep.algebra));
    QScalar c = cas(0, 0);
    if (cas != c * Matrix::identity(cas.rows())) throw NonScalarTrace("Casimir is not scalar on V_" + std::to_string(k));
    return c;
}

Matrix action_matrix(const Representation& r) {
    const std::size_t N = r.images.size(), d = r.dim;
    Matrix a(d, N * d);
    for (std::size_t g = 0; g < N; ++g)
        for (std::size_t i = 0; i < d; ++i)
            for (std::size_t u = 0; u < d; ++u) a(i, g * d + u) = r.images[g](i, u);
    return a;
}

Matrix braiding_with_V(const Representation& r) {
    const HeckeSymmetry& h = *r.sym;
    const std::size_t k = r.tensor_degree;
    if (k == 0) throw std::invalid_argument("braiding with V needs a module inside a tensor power of V");
    std::vector<std::size_t> dims(k + 1, h.n);
    Matrix m = Matrix::identity(product(dims));
    for (std::size_t i = 1; i <= k; ++i) m = m * embed(h.R, i, dims).matrix();
    if (r.inclusion.rows())
        m = kron(Matrix::identity(h.n), r.projection) * m * kron(r.inclusion, Matrix::identity(h.n));
    return m;
}

bool equivariant(const Representation& r, std::string* witness) {
    const HeckeSymmetry& h = *r.sym;
    const std::size_t n = h.n, N = n * n, d = r.dim;
    Matrix act = action_matrix(r);
    Matrix ruv = braiding_with_V(r);
    Matrix lhs = ruv * kron(act, Matrix::identity(n));
    Matrix rhs = kron(Matrix::identity(n), act) * kron(build_REndV(h), Matrix::identity(d)) *
                 kron(Matrix::identity(N), ruv);
    if (lhs == rhs) return true;
    if (witness) *witness = "naturality defect at " + (lhs - rhs).first_nonzero();
    return false;
}

Representation frt_module(std::size_t k) {
    HeckeSymmetry h = standard_R(2);
    Representation r = base_rep(h, "FRT_" + std::to_string(k));
    r.algebra = mrea_from_R(h, QScalar(0));
    const QScalar q = h.q;
    // the parametrization is written for the opposite braiding: run it at p = q^-1 and
    // exchange the off-diagonal generators
    const QScalar p = q.inv(), lp = p - p.inv();
    const std::size_t d = k + 1;
    const int kk = static_cast<int>(k);
    Matrix e(d, d), f(d, d), ell(d, d), b(d, d), c(d, d);
    for (std::size_t j = 0; j < d; ++j) {
        const int jj = static_cast<int>(j);
        if (j > 0) e(j - 1, j) = qint(kk - jj + 1, p);
        if (j + 1 < d) f(j + 1, j) = qint(jj + 1, p);
    }
    for (std::size_t j = 0; j < d; ++j) {
        const int jj = static_cast<int>(j);
        // λ p^{-H} E and λ p^{-H-2} F, conjugated by p^{k/2} to keep integer powers
        if (j > 0) c(j - 1, j) = lp * p.pow(jj - 1) * e(j - 1, j);
        if (j + 1 < d) b(j + 1, j) = lp * p.pow(jj - 1 - kk) * f(j + 1, j);
        const int m = kk - 2 * jj;  // eigenvalue of 2H
        ell(j, j) = p.pow(m - 1) + p.pow(-m - 3);
    }
    Matrix fe = f * e, ef = e * f;
    ell = ell + (lp * lp * p.pow(-2)) * fe;
    Matrix hh = (-(lp / p)) * (p * ef - p.inv() * fe);
    QScalar inv2 = qint(2, q).inv();
    r.dim = d;
    r.images = {inv2 * (ell + q * hh), b, c, inv2 * (ell - q.inv() * hh)};
    return r;
}

FrtReduction frt_sl_reduction(const Representation& frt) {
    const QScalar q = frt.sym->q, lambda = q - q.inv(), two = qint(2, q);
    const Matrix &a = frt.images[0], &d = frt.images[3];
    Matrix ell = q.inv() * a + q * d;
    FrtReduction out;
    out.ell = ell(0, 0);
    if (ell != out.ell * Matrix::identity(frt.dim)) throw NonScalarTrace("l is not scalar on " + frt.name);
    out.hbar = -(lambda * out.ell) / two;
    if (out.hbar.is_zero()) throw OmegaZero("the effective hbar vanishes on " + frt.name);
    QScalar s = out.hbar.inv();
    PresetParams pp;
    pp.q = q;
    out.sl = frt;
    out.sl.name = frt.name + "/sl";
    out.sl.algebra = preset("sl_n2", pp);
    out.sl.images = {s * frt.images[1], s * (a - d), s * frt.images[2]};
    out.C = q.pow(-2) * out.ell / two;
    const Matrix &bb = out.sl.images[0], &hh = out.sl.images[1], &cc = out.sl.images[2];
    Matrix x0 = (q * out.C / two) * hh, xp = (q * out.C) * bb, xm = (q * out.C) * cc;
    Matrix id = Matrix::identity(frt.dim);
    out.quadratic_residual = (out.C * out.C) * id -
                             (lambda * lambda) * (x0 * x0 + two.inv() * (q * (xm * xp) + q.inv() * (xp * xm))) - id;
    return out;
}

}  // namespace braidkit
