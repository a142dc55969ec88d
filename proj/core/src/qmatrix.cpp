#include "braidkit/qmatrix.hpp"

namespace braidkit {

AlgMatrix::AlgMatrix(PresentationPtr p, std::size_t rows, std::size_t cols)
    : p_(std::move(p)), rows_(rows), cols_(cols), e_(rows * cols, AlgebraElement::scalar(p_, QScalar(0))) {}

AlgMatrix AlgMatrix::identity(PresentationPtr p, std::size_t n) {
    AlgMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = AlgebraElement::scalar(p, QScalar(1));
    return m;
}

AlgMatrix AlgMatrix::generators(PresentationPtr p, std::size_t n) {
    AlgMatrix m(p, n, n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) m(i, j) = AlgebraElement::gen(p, mrea_generator_name(n, i, j));
    return m;
}

AlgMatrix AlgMatrix::parse(PresentationPtr p, const std::vector<std::vector<std::string>>& entries) {
    AlgMatrix m(p, entries.size(), entries.empty() ? 0 : entries[0].size());
    for (std::size_t i = 0; i < m.rows_; ++i) {
        if (entries[i].size() != m.cols_) throw DimensionMismatch("ragged matrix");
        for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = AlgebraElement::parse(p, entries[i][j]);
    }
    return m;
}

bool AlgMatrix::is_zero() const {
    for (const auto& e : e_)
        if (!e.is_zero()) return false;
    return true;
}

bool operator==(const AlgMatrix& a, const AlgMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
}

static void same_shape(const AlgMatrix& a, const AlgMatrix& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) throw DimensionMismatch("matrix shapes differ");
}

AlgMatrix operator+(const AlgMatrix& a, const AlgMatrix& b) {
    same_shape(a, b);
    AlgMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] += b.e_[k];
    return r;
}

AlgMatrix operator-(const AlgMatrix& a, const AlgMatrix& b) {
    same_shape(a, b);
    AlgMatrix r = a;
    for (std::size_t k = 0; k < r.e_.size(); ++k) r.e_[k] -= b.e_[k];
    return r;
}

AlgMatrix operator*(const AlgMatrix& a, const AlgMatrix& b) {
    if (a.cols_ != b.rows_) throw DimensionMismatch("matrix product shapes");
    AlgMatrix r(a.p_, a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            if (a(i, k).is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j)
                if (!b(k, j).is_zero()) r(i, j) += a(i, k) * b(k, j);
        }
    return r;
}

AlgMatrix operator*(const QScalar& s, const AlgMatrix& a) {
    AlgMatrix r = a;
    for (auto& e : r.e_) e = s * e;
    return r;
}

AlgMatrix operator*(const AlgebraElement& s, const AlgMatrix& a) {
    AlgMatrix r = a;
    for (auto& e : r.e_) e = s * e;
    return r;
}

std::string AlgMatrix::str() const {
    std::string out = "[";
    for (std::size_t i = 0; i < rows_; ++i) {
        out += i ? ", [" : "[";
        for (std::size_t j = 0; j < cols_; ++j) out += (j ? ", " : "") + (*this)(i, j).str();
        out += "]";
    }
    return out + "]";
}

AlgMatrix mat_mul(const AlgMatrix& a, const AlgMatrix& b) { return a * b; }

AlgMatrix mat_pow(const AlgMatrix& m, int k) {
    if (m.rows() != m.cols()) throw DimensionMismatch("power of a non-square matrix");
    if (k < 0) throw std::invalid_argument("negative matrix power");
    AlgMatrix r = AlgMatrix::identity(m.presentation(), m.rows());
    for (int i = 0; i < k; ++i) r = r * m;
    return r;
}

AlgebraElement r_trace_mat(const HeckeSymmetry& h, const AlgMatrix& m) {
    if (m.rows() != h.n || m.cols() != h.n) throw DimensionMismatch("R-trace needs an n x n matrix");
    AlgebraElement acc = AlgebraElement::scalar(m.presentation(), QScalar(0));
    for (std::size_t i = 0; i < h.n; ++i)
        for (std::size_t j = 0; j < h.n; ++j)
            if (!h.C(i, j).is_zero()) acc += h.C(i, j) * m(j, i);
    return acc;
}

AlgebraElement power_sum(const HeckeSymmetry& h, const AlgMatrix& l, int k) {
    return r_trace_mat(h, mat_pow(l, k));
}

SlShift sl_shift(const HeckeSymmetry& h, const AlgMatrix& l) {
    QScalar unit = h.C.trace();
    if (unit.is_zero()) throw TracelessUnitError("Tr_R(Id) = 0 for " + h.name + "; the trace part cannot be split off");
    SlShift s;
    s.ell = r_trace_mat(h, l);
    s.F = l - s.ell * ((unit.inv()) * AlgMatrix::identity(l.presentation(), h.n));
    return s;
}

PresentationPtr hbar_shift(const Presentation& p, std::size_t n, const QScalar& hbar) {
    if (p.ngens() != n * n) throw DimensionMismatch("hbar shift expects n^2 generators");
    QScalar gap = p.q() - p.q().inv();
    if (gap.is_zero() && !hbar.is_zero()) throw PoleError("hbar shift divides by q - q^-1, which vanishes here");
    QScalar shift = hbar.is_zero() ? QScalar(0) : hbar / gap;
    std::vector<Terms> images(p.ngens());
    for (std::size_t g = 0; g < p.ngens(); ++g) {
        add_term(images[g], Word(1, static_cast<char>(g)), QScalar(1));
        if (g / n == g % n) add_term(images[g], Word(), -shift);
    }
    std::vector<Terms> rels;
    for (const auto& rel : p.relations()) {
        Terms out;
        for (const auto& [w, c] : rel) {
            Terms prod{{Word(), c}};
            for (char ch : w) prod = free_mul(prod, images[static_cast<unsigned char>(ch)]);
            out = add(out, prod);
        }
        rels.push_back(std::move(out));
    }
    return Presentation::from_relations(p.name() + "+shift", p.generators(), rels, p.q(), p.weights());
}

PresentationPtr quotient_by_generator(const Presentation& p, const std::string& g) {
    const auto drop = static_cast<unsigned char>(p.index_of(g));
    std::vector<std::string> gens;
    std::vector<int> weights;
    for (std::size_t i = 0; i < p.ngens(); ++i)
        if (i != drop) {
            gens.push_back(p.generators()[i]);
            weights.push_back(p.weights()[i]);
        }
    std::vector<Terms> rels;
    for (const auto& rel : p.relations()) {
        Terms out;
        for (const auto& [w, c] : rel) {
            if (w.find(static_cast<char>(drop)) != Word::npos) continue;
            Word v = w;
            for (auto& ch : v)
                if (static_cast<unsigned char>(ch) > drop) --ch;
            add_term(out, v, c);
        }
        if (!out.empty()) rels.push_back(std::move(out));
    }
    return Presentation::from_relations(p.name() + "/" + g, gens, rels, p.q(), weights);
}

AlgMatrix sl2_matrix(const PresentationPtr& p) {
    return AlgMatrix::parse(p, {{"q*h/(q+q^-1)", "b"}, {"c", "-q^-1*h/(q+q^-1)"}});
}

AlgebraElement sl2_casimir(const PresentationPtr& p) {
    return AlgebraElement::parse(p, "q^-1*b*c + h^2/(q+q^-1) + q*c*b");
}

AlgebraElement lhbc_casimir(const PresentationPtr& p) {
    return AlgebraElement::parse(p, "l^2/(q+q^-1) + q^-1*b*c + h^2/(q+q^-1) + q*c*b");
}

AlgMatrix cayley_hamilton_residual(const PresentationPtr& sl, const QScalar& hbar) {
    const QScalar q = sl->q();
    AlgMatrix f = sl2_matrix(sl);
    AlgMatrix id = AlgMatrix::identity(sl, 2);
    return f * f - (q.inv() * hbar) * f - (qint(2, q).inv() * sl2_casimir(sl)) * id;
}

}  // namespace braidkit
