#include "braidkit/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace braidkit {

Matrix Matrix::identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = QScalar(1);
    return m;
}

Matrix Matrix::diag(const Vec& d) {
    Matrix m(d.size(), d.size());
    for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
    return m;
}

Matrix Matrix::from_rows(const std::vector<Vec>& rows) {
    if (rows.empty()) return {};
    Matrix m(rows.size(), rows[0].size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].size() != m.c_) throw DimensionMismatch("ragged rows");
        for (std::size_t j = 0; j < m.c_; ++j) m(i, j) = rows[i][j];
    }
    return m;
}

Matrix Matrix::from_columns(const std::vector<Vec>& cols, std::size_t height) {
    Matrix m(height, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        if (cols[j].size() != height) throw DimensionMismatch("ragged columns");
        for (std::size_t i = 0; i < height; ++i) m(i, j) = cols[j][i];
    }
    return m;
}

Vec Matrix::row(std::size_t i) const { return Vec(a_.begin() + static_cast<long>(i * c_), a_.begin() + static_cast<long>((i + 1) * c_)); }

Vec Matrix::col(std::size_t j) const {
    Vec v(r_);
    for (std::size_t i = 0; i < r_; ++i) v[i] = (*this)(i, j);
    return v;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
    Matrix m(nr, nc);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 0; j < nc; ++j) m(i, j) = (*this)(r0 + i, c0 + j);
    return m;
}

Matrix Matrix::columns(const std::vector<std::size_t>& idx) const {
    Matrix m(r_, idx.size());
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < idx.size(); ++j) m(i, j) = (*this)(i, idx[j]);
    return m;
}

Matrix Matrix::hstack(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_) throw DimensionMismatch("hstack row mismatch");
    Matrix m(a.r_, a.c_ + b.c_);
    for (std::size_t i = 0; i < a.r_; ++i) {
        for (std::size_t j = 0; j < a.c_; ++j) m(i, j) = a(i, j);
        for (std::size_t j = 0; j < b.c_; ++j) m(i, a.c_ + j) = b(i, j);
    }
    return m;
}

Matrix Matrix::vstack(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.c_) throw DimensionMismatch("vstack column mismatch");
    Matrix m(a.r_ + b.r_, a.c_);
    std::copy(a.a_.begin(), a.a_.end(), m.a_.begin());
    std::copy(b.a_.begin(), b.a_.end(), m.a_.begin() + static_cast<long>(a.a_.size()));
    return m;
}

Matrix Matrix::transpose() const {
    Matrix m(c_, r_);
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j) m(j, i) = (*this)(i, j);
    return m;
}

Vec Matrix::apply(const Vec& v) const {
    if (v.size() != c_) throw DimensionMismatch("apply size mismatch");
    Vec out(r_);
    for (std::size_t j = 0; j < c_; ++j) {
        if (v[j].is_zero()) continue;
        for (std::size_t i = 0; i < r_; ++i) {
            const QScalar& x = (*this)(i, j);
            if (!x.is_zero()) out[i] += x * v[j];
        }
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix m = *this;
    for (auto& x : m.a_)
        if (!x.is_zero()) x = -x;
    return m;
}

Matrix operator+(const Matrix& a, const Matrix& b) {
    if (a.r_ != b.r_ || a.c_ != b.c_) throw DimensionMismatch("matrix sum shape mismatch");
    Matrix m = a;
    for (std::size_t k = 0; k < m.a_.size(); ++k)
        if (!b.a_[k].is_zero()) m.a_[k] += b.a_[k];
    return m;
}

Matrix operator-(const Matrix& a, const Matrix& b) { return a + (-b); }

Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.c_ != b.r_) throw DimensionMismatch("matrix product shape mismatch");
    Matrix m(a.r_, b.c_);
    std::vector<std::vector<std::size_t>> nzb(b.r_);
    for (std::size_t k = 0; k < b.r_; ++k)
        for (std::size_t j = 0; j < b.c_; ++j)
            if (!b(k, j).is_zero()) nzb[k].push_back(j);
    for (std::size_t i = 0; i < a.r_; ++i)
        for (std::size_t k = 0; k < a.c_; ++k) {
            const QScalar& x = a(i, k);
            if (x.is_zero()) continue;
            for (std::size_t j : nzb[k]) m(i, j) += x * b(k, j);
        }
    return m;
}

Matrix operator*(const QScalar& s, const Matrix& m) {
    Matrix r = m;
    if (s.is_one()) return r;
    for (auto& x : r.a_)
        if (!x.is_zero()) x = s * x;
    return r;
}

bool Matrix::is_zero() const {
    return std::all_of(a_.begin(), a_.end(), [](const QScalar& x) { return x.is_zero(); });
}

bool Matrix::is_identity() const {
    if (r_ != c_) return false;
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if ((*this)(i, j) != QScalar(i == j ? 1 : 0)) return false;
    return true;
}

std::size_t Matrix::nonzeros() const {
    return static_cast<std::size_t>(std::count_if(a_.begin(), a_.end(), [](const QScalar& x) { return !x.is_zero(); }));
}

QScalar Matrix::trace() const {
    QScalar t;
    for (std::size_t i = 0; i < std::min(r_, c_); ++i) t += (*this)(i, i);
    return t;
}

std::string Matrix::first_nonzero() const {
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < c_; ++j)
            if (!(*this)(i, j).is_zero())
                return "entry (" + std::to_string(i) + "," + std::to_string(j) + ") = " + (*this)(i, j).str();
    return "";
}

Matrix Matrix::map(QScalar (*f)(const QScalar&)) const {
    Matrix m = *this;
    for (auto& x : m.a_) x = f(x);
    return m;
}

std::string Matrix::str() const {
    std::ostringstream os;
    os << '[';
    for (std::size_t i = 0; i < r_; ++i) {
        os << (i ? ", [" : "[");
        for (std::size_t j = 0; j < c_; ++j) os << (j ? ", " : "") << (*this)(i, j).str();
        os << ']';
    }
    os << ']';
    return os.str();
}

Matrix kron(const Matrix& a, const Matrix& b) {
    Matrix m(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) {
            const QScalar& x = a(i, j);
            if (x.is_zero()) continue;
            for (std::size_t k = 0; k < b.rows(); ++k)
                for (std::size_t l = 0; l < b.cols(); ++l) {
                    const QScalar& y = b(k, l);
                    if (!y.is_zero()) m(i * b.rows() + k, j * b.cols() + l) = x * y;
                }
        }
    return m;
}

// ---------------------------------------------------------------- elimination

Echelon rref(Matrix m) {
    const std::size_t R = m.rows(), C = m.cols();
    std::vector<std::size_t> pivots;
    std::size_t pr = 0;
    std::vector<std::size_t> nz;
    for (std::size_t c = 0; c < C && pr < R; ++c) {
        std::size_t best = R;
        std::size_t best_cost = 0;
        for (std::size_t r = pr; r < R; ++r) {
            const QScalar& x = m(r, c);
            if (x.is_zero()) continue;
            std::size_t cost = x.complexity();
            if (best == R || cost < best_cost) {
                best = r;
                best_cost = cost;
            }
        }
        if (best == R) continue;
        if (best != pr)
            for (std::size_t j = c; j < C; ++j) std::swap(m(pr, j), m(best, j));
        QScalar inv = m(pr, c).inv();
        nz.clear();
        for (std::size_t j = c; j < C; ++j) {
            if (m(pr, j).is_zero()) continue;
            if (!inv.is_one()) m(pr, j) = m(pr, j) * inv;
            nz.push_back(j);
        }
        for (std::size_t r = 0; r < R; ++r) {
            if (r == pr) continue;
            QScalar f = m(r, c);
            if (f.is_zero()) continue;
            for (std::size_t j : nz) m(r, j) -= f * m(pr, j);
        }
        pivots.push_back(c);
        ++pr;
    }
    Echelon e;
    e.rows = m.block(0, 0, pr, C);
    e.pivots = std::move(pivots);
    return e;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

static Matrix kernel_from_echelon(const Echelon& e, std::size_t C) {
    std::vector<bool> is_pivot(C, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<std::size_t> free;
    for (std::size_t j = 0; j < C; ++j)
        if (!is_pivot[j]) free.push_back(j);
    Matrix k(C, free.size());
    for (std::size_t f = 0; f < free.size(); ++f) {
        k(free[f], f) = QScalar(1);
        for (std::size_t r = 0; r < e.pivots.size(); ++r) {
            const QScalar& x = e.rows(r, free[f]);
            if (!x.is_zero()) k(e.pivots[r], f) = -x;
        }
    }
    return k;
}

Matrix kernel(const Matrix& m) { return kernel_from_echelon(rref(m), m.cols()); }

Solution solve_general(const Matrix& a, const Matrix& b) {
    if (a.rows() != b.rows()) throw DimensionMismatch("solve shape mismatch");
    const std::size_t n = a.cols();
    Echelon e = rref(Matrix::hstack(a, b));
    Solution s;
    s.particular = Matrix(n, b.cols());
    std::vector<std::size_t> apiv;
    for (std::size_t r = 0; r < e.pivots.size(); ++r) {
        if (e.pivots[r] >= n) throw Inconsistent("linear system has no solution");
        for (std::size_t j = 0; j < b.cols(); ++j) s.particular(e.pivots[r], j) = e.rows(r, n + j);
    }
    Echelon ea;
    ea.rows = e.rows.block(0, 0, e.pivots.size(), n);
    ea.pivots = e.pivots;
    s.kernel = kernel_from_echelon(ea, n);
    return s;
}

Matrix solve(const Matrix& a, const Matrix& b) { return solve_general(a, b).particular; }

Matrix inverse(const Matrix& m) {
    if (m.rows() != m.cols()) throw DimensionMismatch("inverse of non-square matrix");
    Solution s;
    try {
        s = solve_general(m, Matrix::identity(m.rows()));
    } catch (const Inconsistent&) {
        throw Singular("matrix is singular");
    }
    if (s.kernel.cols() != 0) throw Singular("matrix is singular");
    return s.particular;
}

// ---------------------------------------------------------------- tensors

std::size_t product(const std::vector<std::size_t>& dims) {
    std::size_t p = 1;
    for (auto d : dims) p *= d;
    return p;
}

std::vector<std::size_t> multi_index(std::size_t flat, const std::vector<std::size_t>& dims) {
    std::vector<std::size_t> idx(dims.size());
    for (std::size_t k = dims.size(); k-- > 0;) {
        idx[k] = flat % dims[k];
        flat /= dims[k];
    }
    return idx;
}

std::size_t flat_index(const std::vector<std::size_t>& idx, const std::vector<std::size_t>& dims) {
    std::size_t f = 0;
    for (std::size_t k = 0; k < dims.size(); ++k) f = f * dims[k] + idx[k];
    return f;
}

TensorOperator::TensorOperator(std::vector<std::size_t> dims, Matrix m) : dims_(std::move(dims)), m_(std::move(m)) {
    std::size_t n = product(dims_);
    if (m_.rows() != n || m_.cols() != n) throw DimensionMismatch("operator size does not match factor dimensions");
}

TensorOperator TensorOperator::identity(std::vector<std::size_t> dims) {
    std::size_t n = product(dims);
    return TensorOperator(std::move(dims), Matrix::identity(n));
}

TensorOperator operator*(const TensorOperator& a, const TensorOperator& b) {
    if (a.dims_ != b.dims_) throw DimensionMismatch("composition of operators on different spaces");
    return TensorOperator(a.dims_, a.m_ * b.m_);
}

TensorOperator operator+(const TensorOperator& a, const TensorOperator& b) {
    if (a.dims_ != b.dims_) throw DimensionMismatch("sum of operators on different spaces");
    return TensorOperator(a.dims_, a.m_ + b.m_);
}

TensorOperator operator-(const TensorOperator& a, const TensorOperator& b) {
    if (a.dims_ != b.dims_) throw DimensionMismatch("difference of operators on different spaces");
    return TensorOperator(a.dims_, a.m_ - b.m_);
}

TensorOperator operator*(const QScalar& s, const TensorOperator& a) { return TensorOperator(a.dims_, s * a.m_); }

TensorOperator kron(const TensorOperator& a, const TensorOperator& b) {
    std::vector<std::size_t> d = a.dims();
    d.insert(d.end(), b.dims().begin(), b.dims().end());
    return TensorOperator(std::move(d), kron(a.matrix(), b.matrix()));
}

TensorOperator embed(const TensorOperator& a, std::size_t position, const std::vector<std::size_t>& ambient) {
    const auto& ad = a.dims();
    if (position < 1 || position - 1 + ad.size() > ambient.size())
        throw DimensionMismatch("embedding does not fit the ambient product");
    for (std::size_t k = 0; k < ad.size(); ++k)
        if (ambient[position - 1 + k] != ad[k]) throw DimensionMismatch("embedded factor dimensions differ");
    std::size_t left = 1, right = 1;
    for (std::size_t k = 0; k + 1 < position; ++k) left *= ambient[k];
    for (std::size_t k = position - 1 + ad.size(); k < ambient.size(); ++k) right *= ambient[k];
    Matrix m = kron(kron(Matrix::identity(left), a.matrix()), Matrix::identity(right));
    return TensorOperator(ambient, std::move(m));
}

TensorOperator partial_trace(const TensorOperator& a, const std::set<std::size_t>& legs) {
    const auto& d = a.dims();
    for (auto l : legs)
        if (l < 1 || l > d.size()) throw DimensionMismatch("trace leg out of range");
    std::vector<std::size_t> keep, traced, kd, td;
    for (std::size_t k = 0; k < d.size(); ++k) {
        if (legs.count(k + 1)) {
            traced.push_back(k);
            td.push_back(d[k]);
        } else {
            keep.push_back(k);
            kd.push_back(d[k]);
        }
    }
    const std::size_t nk = product(kd), nt = product(td);
    Matrix out(nk, nk);
    std::vector<std::size_t> full(d.size());
    auto compose = [&](std::size_t kflat, std::size_t tflat) {
        auto ki = multi_index(kflat, kd);
        auto ti = multi_index(tflat, td);
        for (std::size_t k = 0; k < keep.size(); ++k) full[keep[k]] = ki[k];
        for (std::size_t k = 0; k < traced.size(); ++k) full[traced[k]] = ti[k];
        return flat_index(full, d);
    };
    for (std::size_t i = 0; i < nk; ++i)
        for (std::size_t j = 0; j < nk; ++j) {
            QScalar s;
            for (std::size_t t = 0; t < nt; ++t) {
                const QScalar& x = a(compose(i, t), compose(j, t));
                if (!x.is_zero()) s += x;
            }
            out(i, j) = s;
        }
    return TensorOperator(kd, std::move(out));
}

TensorOperator leg_permutation(const std::vector<std::size_t>& dims, const std::vector<std::size_t>& perm) {
    if (perm.size() != dims.size()) throw DimensionMismatch("permutation length mismatch");
    std::vector<std::size_t> out_dims(dims.size());
    for (std::size_t j = 0; j < dims.size(); ++j) out_dims[perm[j]] = dims[j];
    if (out_dims != dims) throw DimensionMismatch("leg permutation must preserve factor dimensions");
    const std::size_t n = product(dims);
    Matrix m(n, n);
    std::vector<std::size_t> oi(dims.size());
    for (std::size_t f = 0; f < n; ++f) {
        auto ii = multi_index(f, dims);
        for (std::size_t j = 0; j < dims.size(); ++j) oi[perm[j]] = ii[j];
        m(flat_index(oi, dims), f) = QScalar(1);
    }
    return TensorOperator(dims, std::move(m));
}

TensorOperator swap_operator(std::size_t n) { return leg_permutation({n, n}, {1, 0}); }

// ---------------------------------------------------------------- subspaces

Subspace Subspace::span(const Matrix& columns) {
    Subspace s(columns.rows());
    s.basis_ = rref(columns.transpose()).rows;
    return s;
}

Subspace Subspace::whole(std::size_t n) { return span(Matrix::identity(n)); }

Subspace Subspace::null_space(const Matrix& m) { return span(kernel(m)); }

bool Subspace::contains(const Vec& v) const {
    if (v.size() != ambient_) throw DimensionMismatch("vector outside ambient space");
    Matrix one(1, ambient_);
    for (std::size_t j = 0; j < ambient_; ++j) one(0, j) = v[j];
    return rank(Matrix::vstack(basis_, one)) == dim();
}

bool Subspace::contains(const Subspace& other) const { return sum(other).dim() == dim(); }

Subspace Subspace::sum(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambients");
    Subspace s(ambient_);
    s.basis_ = rref(Matrix::vstack(basis_, other.basis_)).rows;
    return s;
}

Subspace Subspace::intersect(const Subspace& other) const {
    if (other.ambient_ != ambient_) throw DimensionMismatch("subspaces in different ambients");
    if (dim() == 0 || other.dim() == 0) return Subspace(ambient_);
    // left kernel of the stacked bases gives the coefficient pairs a u = -b w
    Matrix stacked = Matrix::vstack(basis_, other.basis_);
    Matrix k = kernel(stacked.transpose());
    Matrix coeff = k.block(0, 0, dim(), k.cols()).transpose();
    return span((coeff * basis_).transpose());
}

Subspace Subspace::annihilator() const {
    if (dim() == 0) return whole(ambient_);
    return span(kernel(basis_));
}

Matrix projector_along(const Subspace& u, const Subspace& w) {
    if (u.ambient() != w.ambient()) throw DimensionMismatch("subspaces in different ambients");
    const std::size_t n = u.ambient();
    if (u.dim() + w.dim() != n) throw NotComplementary("dimensions do not add up to the ambient dimension");
    Matrix t = Matrix::hstack(u.basis_columns(), w.basis_columns());
    Matrix ti;
    try {
        ti = inverse(t);
    } catch (const Singular&) {
        throw NotComplementary("subspaces intersect nontrivially");
    }
    return u.basis_columns() * ti.block(0, 0, u.dim(), n);
}

Matrix constrained_tensor_power(const Matrix& constraint, std::size_t w, std::size_t k) {
    if (constraint.cols() != w * w) throw DimensionMismatch("constraint must act on W ⊗ W");
    if (k == 0) return Matrix::identity(1);
    if (k == 1) return Matrix::identity(w);
    Matrix a = rref(constraint).rows;
    Matrix basis = kernel(a);
    std::size_t ww = w * w;
    for (std::size_t deg = 3; deg <= k; ++deg) {
        const std::size_t prev = basis.rows();  // w^(deg-1)
        const std::size_t s = basis.cols();
        const std::size_t head = prev / w;      // w^(deg-2)
        // candidate columns: basis ⊗ e_t, as vectors in W^{deg}
        Matrix cand(prev * w, s * w);
        for (std::size_t i = 0; i < prev; ++i)
            for (std::size_t c = 0; c < s; ++c) {
                const QScalar& x = basis(i, c);
                if (x.is_zero()) continue;
                for (std::size_t t = 0; t < w; ++t) cand(i * w + t, c * w + t) = x;
            }
        Matrix m(head * a.rows(), s * w);
        for (std::size_t col = 0; col < s * w; ++col)
            for (std::size_t h = 0; h < head; ++h)
                for (std::size_t t = 0; t < ww; ++t) {
                    const QScalar& v = cand(h * ww + t, col);
                    if (v.is_zero()) continue;
                    for (std::size_t r = 0; r < a.rows(); ++r) {
                        const QScalar& f = a(r, t);
                        if (!f.is_zero()) m(h * a.rows() + r, col) += f * v;
                    }
                }
        basis = cand * kernel(m);
    }
    return basis;
}

}  // namespace braidkit
