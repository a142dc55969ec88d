#include "braidkit/waveops.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace braidkit {

namespace {

std::size_t ipow(std::size_t w, std::size_t n) {
    std::size_t r = 1;
    for (std::size_t i = 0; i < n; ++i) r *= w;
    return r;
}

QScalar two_q(const QScalar& q) { return qint(2, q); }

Word word_at(std::size_t flat, std::size_t w, std::size_t n) {
    Word word(n, '\0');
    for (std::size_t k = n; k-- > 0;) {
        word[k] = static_cast<char>(flat % w);
        flat /= w;
    }
    return word;
}

std::size_t flat_of(const Word& word, std::size_t w) {
    std::size_t f = 0;
    for (char c : word) f = f * w + static_cast<std::size_t>(static_cast<unsigned char>(c));
    return f;
}

// vectors x⊗y given as (x, y, coefficient) triples
Vec tensor2(std::size_t w, std::initializer_list<std::tuple<std::size_t, std::size_t, QScalar>> entries) {
    Vec v(w * w);
    for (const auto& [x, y, c] : entries) v[x * w + y] += c;
    return v;
}

Subspace span_of(const std::vector<Vec>& vs, std::size_t ambient) {
    return Subspace::span(Matrix::from_columns(vs, ambient));
}

std::vector<Vec> sl_minus_vectors(const QScalar& q, std::size_t w) {
    const std::size_t b = 0, h = 1, c = 2;
    const QScalar q2 = q * q, t = two_q(q);
    return {
        tensor2(w, {{h, b, q2}, {b, h, QScalar(-1)}}),
        tensor2(w, {{c, h, q2}, {h, c, QScalar(-1)}}),
        tensor2(w, {{b, c, t * q}, {c, b, -t * q}, {h, h, q2 - QScalar(1)}}),
    };
}

std::vector<Vec> sl_plus_vectors(const QScalar& q, std::size_t w) {
    const std::size_t b = 0, h = 1, c = 2;
    const QScalar q2 = q * q, t = two_q(q);
    return {
        tensor2(w, {{b, c, q.inv()}, {h, h, t.inv()}, {c, b, q}}),
        tensor2(w, {{b, b, QScalar(1)}}),
        tensor2(w, {{b, h, q2}, {h, b, QScalar(1)}}),
        tensor2(w, {{b, c, q2 * q}, {h, h, -q}, {c, b, q.inv()}}),
        tensor2(w, {{h, c, q2}, {c, h, QScalar(1)}}),
        tensor2(w, {{c, c, QScalar(1)}}),
    };
}

std::size_t target_dim(const CanonicalizerPair& s, long k) {
    if (k < 0) return 0;
    return s.dim(static_cast<std::size_t>(k));
}

bool in_range(const CanonicalizerPair& s, long k) { return k <= static_cast<long>(s.d_max); }

GradedOperator blank(CanonicalizerPtr s, int shift, std::string name) {
    GradedOperator g;
    g.name = std::move(name);
    g.space = std::move(s);
    g.shift = shift;
    g.parts.resize(g.space->d_max + 1);
    return g;
}

std::size_t letter_index(const CanonicalizerPair& s, const std::string& x) {
    int i = s.algebra->index_of(x);
    if (i < 0) throw std::invalid_argument("unknown generator " + x);
    return static_cast<std::size_t>(i);
}

}  // namespace

std::string to_string(WaveAlgebra a) {
    switch (a) {
        case WaveAlgebra::kq_r3: return "kq_r3";
        case WaveAlgebra::kq_r4: return "kq_r4";
        case WaveAlgebra::rea_full: return "rea_full";
    }
    return "?";
}

WaveAlgebra wave_algebra_from_string(const std::string& s) {
    if (s == "kq_r3" || s == "r3") return WaveAlgebra::kq_r3;
    if (s == "kq_r4" || s == "r4") return WaveAlgebra::kq_r4;
    if (s == "rea_full" || s == "rea") return WaveAlgebra::rea_full;
    throw std::invalid_argument("unknown wave algebra " + s);
}

// ---------------------------------------------------------------- canonicalizer

const CanonicalizerPair::Component& CanonicalizerPair::component(std::size_t n) const {
    if (n > d_max)
        throw DegreeOverflow("degree " + std::to_string(n) + " exceeds the cached bound " + std::to_string(d_max));
    return components[n];
}

Matrix CanonicalizerPair::projector(std::size_t n) const {
    const Component& c = component(n);
    return c.canonical * c.quotient;
}

Subspace CanonicalizerPair::minus_union(std::size_t n) const {
    if (n < 2) return Subspace(ipow(w, n));
    Matrix rel = I_minus.basis_columns();
    Matrix all(ipow(w, n), 0);
    for (std::size_t k = 0; k + 2 <= n; ++k) {
        Matrix e = kron(kron(Matrix::identity(ipow(w, k)), rel), Matrix::identity(ipow(w, n - 2 - k)));
        all = Matrix::hstack(all, e);
    }
    return Subspace::span(all);
}

Subspace CanonicalizerPair::plus_intersection(std::size_t n) const {
    return Subspace::span(constrained_tensor_power(I_plus.annihilator().basis_rows(), w, n));
}

Vec CanonicalizerPair::coordinates(const AlgebraElement& f, std::size_t n) const {
    const Component& c = component(n);
    Vec v(c.monomials.size());
    for (const auto& [word, coef] : f.terms()) {
        if (word.size() != n) continue;
        auto it = c.index.find(word);
        if (it == c.index.end()) throw std::logic_error("term is not a normal word");
        v[it->second] = coef;
    }
    return v;
}

AlgebraElement CanonicalizerPair::element(const Vec& coords, std::size_t n) const {
    const Component& c = component(n);
    Terms t;
    for (std::size_t i = 0; i < coords.size(); ++i)
        if (!coords[i].is_zero()) add_term(t, c.monomials[i], coords[i]);
    return AlgebraElement(algebra, t);
}

Vec CanonicalizerPair::word_vector(const Word& word) const {
    Vec v(ipow(w, word.size()));
    v[flat_of(word, w)] = QScalar(1);
    return v;
}

CanonicalizerPtr build_canonicalizer(const std::string& name, PresentationPtr algebra, const Subspace& I_minus,
                                     const Subspace& I_plus, std::size_t d_max) {
    if (d_max < 2) throw std::invalid_argument("d_max must be at least 2");
    auto s = std::make_shared<CanonicalizerPair>();
    s->name = name;
    s->algebra = algebra;
    s->w = algebra->ngens();
    s->d_max = d_max;
    s->I_minus = I_minus;
    s->I_plus = I_plus;
    const std::size_t w = s->w;
    if (I_minus.ambient() != w * w || I_plus.ambient() != w * w)
        throw DimensionMismatch("I_- and I_+ must live in W ⊗ W");
    const Matrix constraint = I_plus.annihilator().basis_rows();

    for (std::size_t n = 0; n <= d_max; ++n) {
        CanonicalizerPair::Component c;
        const std::size_t size = ipow(w, n);
        for (std::size_t f = 0; f < size; ++f) {
            Word word = word_at(f, w, n);
            if (algebra->is_irreducible(word)) {
                c.index.emplace(word, c.monomials.size());
                c.monomials.push_back(word);
            }
        }
        const std::size_t m = c.monomials.size();
        c.quotient = Matrix(m, size);
        for (std::size_t f = 0; f < size; ++f)
            for (const auto& [word, coef] : algebra->normal_form(word_at(f, w, n))) {
                auto it = c.index.find(word);
                if (word.size() != n || it == c.index.end())
                    throw std::invalid_argument(name + " is not a homogeneous quadratic algebra");
                c.quotient(it->second, f) = coef;
            }
        if (n == 2) {
            // I_- must be the kernel of the quotient map on W ⊗ W
            Matrix img = c.quotient * I_minus.basis_columns();
            if (!img.is_zero() || I_minus.dim() + m != size)
                throw std::invalid_argument("I_- is not the relation space of " + name);
        }
        Matrix plus = constrained_tensor_power(constraint, w, n);
        Matrix t = c.quotient * plus;
        if (plus.cols() != m || rank(t) != m)
            throw NotComplementary(name + ": I_-^{∪n} and I_+^{∩n} are not complementary in degree " +
                                   std::to_string(n) + " (dim I_+^{∩n} = " + std::to_string(plus.cols()) +
                                   ", dim A_n = " + std::to_string(m) + ")");
        c.canonical = plus * inverse(t);
        s->components.push_back(std::move(c));
    }
    return s;
}

Subspace sl_minus(const QScalar& q) { return span_of(sl_minus_vectors(q, 3), 9); }
Subspace sl_plus(const QScalar& q) { return span_of(sl_plus_vectors(q, 3), 9); }

Subspace slt_minus(const QScalar& q) {
    std::vector<Vec> v = sl_minus_vectors(q, 4);
    for (std::size_t x = 0; x < 3; ++x) v.push_back(tensor2(4, {{3, x, QScalar(1)}, {x, 3, QScalar(-1)}}));
    return span_of(v, 16);
}

Subspace slt_plus(const QScalar& q) {
    std::vector<Vec> v = sl_plus_vectors(q, 4);
    for (std::size_t x = 0; x < 3; ++x) v.push_back(tensor2(4, {{3, x, QScalar(1)}, {x, 3, QScalar(1)}}));
    v.push_back(tensor2(4, {{3, 3, QScalar(1)}}));
    return span_of(v, 16);
}

CanonicalizerPtr build_canonicalizer(WaveAlgebra a, std::size_t d_max, const QScalar& q) {
    PresetParams pp;
    pp.q = q;
    switch (a) {
        case WaveAlgebra::kq_r3: return build_canonicalizer("kq_r3", preset("kq_r3", pp), sl_minus(q), sl_plus(q), d_max);
        case WaveAlgebra::kq_r4:
            return build_canonicalizer("kq_r4", preset("kq_r4", pp), slt_minus(q), slt_plus(q), d_max);
        case WaveAlgebra::rea_full: {
            HeckeSymmetry h = standard_R(2, q);
            const Matrix id = Matrix::identity(16);
            Subspace minus = Subspace::image(id - build_Q(h).matrix());
            Subspace plus = Subspace::image(id + build_Qprime(h).matrix());
            return build_canonicalizer("rea_full", mrea_from_R(h, QScalar(0)), minus, plus, d_max);
        }
    }
    throw std::invalid_argument("unknown wave algebra");
}

CanonicalizerPtr shared_canonicalizer(WaveAlgebra a, std::size_t d_max, const QScalar& q) {
    static std::mutex mu;
    static std::map<std::string, CanonicalizerPtr> cache;
    const std::string key = to_string(a) + "|" + std::to_string(d_max) + "|" + q.str();
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
    return cache.emplace(key, build_canonicalizer(a, d_max, q)).first->second;
}

// ---------------------------------------------------------------- pairing

Matrix PairingTable::on_square() const {
    const std::size_t w = form.rows();
    Matrix g(w * w, w * w);
    for (std::size_t a = 0; a < w; ++a)
        for (std::size_t b = 0; b < w; ++b)
            for (std::size_t c = 0; c < w; ++c)
                for (std::size_t d = 0; d < w; ++d) g(a * w + b, c * w + d) = form(b, c) * form(a, d);
    return g;
}

bool PairingTable::nondegenerate() const { return rank(form) == form.rows(); }

PairingTable standard_pairing(bool with_ell, const QScalar& epsilon, const QScalar& q) {
    if (with_ell && epsilon.is_zero()) throw std::invalid_argument("epsilon must be nonzero");
    PairingTable p{Matrix(with_ell ? 4 : 3, with_ell ? 4 : 3)};
    p.form(0, 2) = q.inv();
    p.form(1, 1) = two_q(q);
    p.form(2, 0) = q;
    if (with_ell) p.form(3, 3) = epsilon.inv();
    return p;
}

CheckResult orthogonality_check(const PairingTable& p, const Subspace& a, const Subspace& b) {
    Matrix m = a.basis_rows() * p.on_square() * b.basis_columns();
    CheckResult r{"orthogonality", m.is_zero(), ""};
    if (!r.pass) r.witness = m.first_nonzero();
    return r;
}

// ---------------------------------------------------------------- graded operators

AlgebraElement GradedOperator::operator()(const AlgebraElement& f) const {
    std::map<std::size_t, bool> degrees;
    for (const auto& [word, coef] : f.terms()) degrees[word.size()] = true;
    AlgebraElement out = AlgebraElement::scalar(space->algebra, QScalar(0));
    for (const auto& [n, unused] : degrees) {
        if (n > space->d_max || !defined(n))
            throw DegreeOverflow(name + " is not available in degree " + std::to_string(n));
        const long k = static_cast<long>(n) + shift;
        if (k < 0) continue;
        out += space->element(parts[n]->apply(space->coordinates(f, n)), static_cast<std::size_t>(k));
    }
    return out;
}

static GradedOperator combine(const GradedOperator& a, const GradedOperator& b, const QScalar& sb, const char* op) {
    if (a.space != b.space) throw std::invalid_argument("operators on different spaces");
    if (a.shift != b.shift) throw std::invalid_argument("operators of different degree shift");
    GradedOperator g = blank(a.space, a.shift, "(" + a.name + op + b.name + ")");
    for (std::size_t n = 0; n < g.parts.size(); ++n)
        if (a.defined(n) && b.defined(n)) g.parts[n] = *a.parts[n] + sb * *b.parts[n];
    return g;
}

GradedOperator operator+(const GradedOperator& a, const GradedOperator& b) { return combine(a, b, QScalar(1), " + "); }
GradedOperator operator-(const GradedOperator& a, const GradedOperator& b) { return combine(a, b, QScalar(-1), " - "); }

GradedOperator operator*(const GradedOperator& a, const GradedOperator& b) {
    if (a.space != b.space) throw std::invalid_argument("operators on different spaces");
    const CanonicalizerPair& s = *a.space;
    GradedOperator g = blank(a.space, a.shift + b.shift, a.name + " " + b.name);
    for (std::size_t n = 0; n < g.parts.size(); ++n) {
        if (!b.defined(n)) continue;
        const long mid = static_cast<long>(n) + b.shift;
        const long end = mid + a.shift;
        if (!in_range(s, end)) continue;
        if (mid < 0) {
            g.parts[n] = Matrix(target_dim(s, end), s.dim(n));
            continue;
        }
        if (!a.defined(static_cast<std::size_t>(mid))) continue;
        g.parts[n] = *a.parts[static_cast<std::size_t>(mid)] * *b.parts[n];
    }
    return g;
}

GradedOperator operator*(const QScalar& s, const GradedOperator& a) {
    GradedOperator g = a;
    g.name = s.str() + "*" + a.name;
    for (auto& p : g.parts)
        if (p) *p = s * *p;
    return g;
}

GradedOperator identity_operator(CanonicalizerPtr s) {
    GradedOperator g = blank(s, 0, "Id");
    for (std::size_t n = 0; n < g.parts.size(); ++n) g.parts[n] = Matrix::identity(s->dim(n));
    return g;
}

GradedOperator zero_operator(CanonicalizerPtr s, int shift) {
    GradedOperator g = blank(s, shift, "0");
    for (std::size_t n = 0; n < g.parts.size(); ++n) {
        const long k = static_cast<long>(n) + shift;
        if (in_range(*s, k)) g.parts[n] = Matrix(target_dim(*s, k), s->dim(n));
    }
    return g;
}

GradedOperator degree_scalar(CanonicalizerPtr s, const std::function<QScalar(std::size_t)>& f, std::string name) {
    GradedOperator g = blank(s, 0, std::move(name));
    for (std::size_t n = 0; n < g.parts.size(); ++n) g.parts[n] = f(n) * Matrix::identity(s->dim(n));
    return g;
}

GradedOperator left_multiplication(CanonicalizerPtr s, const AlgebraElement& x) {
    std::size_t k = 0;
    bool first = true;
    for (const auto& [word, coef] : x.terms()) {
        if (!first && word.size() != k) throw std::invalid_argument("left multiplication needs a homogeneous element");
        k = word.size();
        first = false;
    }
    GradedOperator g = blank(s, static_cast<int>(k), x.str());
    for (std::size_t n = 0; n + k <= s->d_max; ++n) {
        const auto& src = s->component(n);
        Matrix m(s->dim(n + k), src.monomials.size());
        for (std::size_t j = 0; j < src.monomials.size(); ++j) {
            Terms mono;
            add_term(mono, src.monomials[j], QScalar(1));
            AlgebraElement prod(s->algebra, free_mul(x.terms(), mono));
            Vec v = s->coordinates(prod, n + k);
            for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
        }
        g.parts[n] = std::move(m);
    }
    return g;
}

GradedOperator first_factor_extension(CanonicalizerPtr s, const Matrix& m, std::string name) {
    const std::size_t w = s->w;
    if (m.rows() != w || m.cols() != w) throw DimensionMismatch("letter operator must be w x w");
    GradedOperator g = blank(s, 0, std::move(name));
    g.parts[0] = Matrix(1, 1);
    for (std::size_t n = 1; n < g.parts.size(); ++n) {
        const auto& c = s->component(n);
        const std::size_t tail = ipow(w, n - 1), cols = c.monomials.size();
        Matrix acted(ipow(w, n), cols);
        for (std::size_t x = 0; x < w; ++x)
            for (std::size_t y = 0; y < w; ++y) {
                const QScalar& f = m(y, x);
                if (f.is_zero()) continue;
                for (std::size_t r = 0; r < tail; ++r)
                    for (std::size_t j = 0; j < cols; ++j) {
                        const QScalar& v = c.canonical(x * tail + r, j);
                        if (!v.is_zero()) acted(y * tail + r, j) += f * v;
                    }
            }
        g.parts[n] = QScalar(static_cast<long>(n)) * (c.quotient * acted);
    }
    return g;
}

GradedOperator partial(CanonicalizerPtr s, const std::string& x) {
    const std::size_t w = s->w, letter = letter_index(*s, x);
    GradedOperator g = blank(s, -1, "∂_" + x);
    g.parts[0] = Matrix(0, 1);
    for (std::size_t n = 1; n < g.parts.size(); ++n) {
        const auto& c = s->component(n);
        const std::size_t tail = ipow(w, n - 1);
        Matrix head = c.canonical.block(letter * tail, 0, tail, c.monomials.size());
        g.parts[n] = QScalar(static_cast<long>(n)) * (s->component(n - 1).quotient * head);
    }
    return g;
}

GradedOperator pairing_derivative(CanonicalizerPtr s, const std::string& x, const PairingTable& p) {
    if (x == "l") {
        GradedOperator g = partial(s, "l");
        g.name = "D_l";
        return g;
    }
    const std::size_t ix = letter_index(*s, x);
    GradedOperator g = zero_operator(s, -1);
    for (const std::string y : {"b", "h", "c"}) {
        const QScalar& f = p(ix, letter_index(*s, y));
        if (!f.is_zero()) g = g + f * partial(s, y);
    }
    g.name = "D_" + x;
    return g;
}

GradedOperator pairing_derivative(CanonicalizerPtr s, const std::string& x) {
    return pairing_derivative(s, x, standard_pairing(s->w == 4, QScalar(1), s->algebra->q()));
}

AlgebraElement derivative(CanonicalizerPtr s, const std::string& x, const AlgebraElement& f) {
    if (f.degree() > s->d_max) throw DegreeOverflow("element degree exceeds the cached bound");
    return pairing_derivative(s, x)(f);
}

CheckResult operator_equal(const std::string& name, const GradedOperator& a, const GradedOperator& b) {
    CheckResult r{name, true, ""};
    if (a.shift != b.shift) return {name, false, "degree shifts differ"};
    for (std::size_t n = 0; n < a.parts.size(); ++n) {
        if (!a.defined(n) || !b.defined(n)) continue;
        Matrix d = *a.parts[n] - *b.parts[n];
        if (!d.is_zero()) return {name, false, "degree " + std::to_string(n) + ": " + d.first_nonzero()};
    }
    return r;
}

OperatorMatrix operator*(const OperatorMatrix& a, const OperatorMatrix& b) {
    const std::size_t r = a.size(), k = b.size(), c = b.front().size();
    if (a.front().size() != k) throw DimensionMismatch("operator matrix shapes");
    OperatorMatrix out(r);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < c; ++j) {
            GradedOperator s = a[i][0] * b[0][j];
            for (std::size_t t = 1; t < k; ++t) s = s + a[i][t] * b[t][j];
            out[i].push_back(s);
        }
    return out;
}

OperatorMatrix scalar_identity(const GradedOperator& x, std::size_t size) {
    OperatorMatrix m(size);
    for (std::size_t i = 0; i < size; ++i)
        for (std::size_t j = 0; j < size; ++j) m[i].push_back(i == j ? x : zero_operator(x.space, x.shift));
    return m;
}

CheckResult operator_equal(const std::string& name, const OperatorMatrix& a, const OperatorMatrix& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < a[i].size(); ++j) {
            CheckResult c = operator_equal(name, a[i][j], b[i][j]);
            if (!c.pass) {
                c.witness = "entry (" + std::to_string(i) + "," + std::to_string(j) + ") " + c.witness;
                return c;
            }
        }
    return {name, true, ""};
}

// ---------------------------------------------------------------- Q' route

static Vec apply_two_leg(const Matrix& op, std::size_t w, std::size_t n, std::size_t pos, const Vec& v) {
    Vec out(v.size());
    const std::size_t tail = ipow(w, n - pos - 2);
    for (std::size_t f = 0; f < v.size(); ++f) {
        if (v[f].is_zero()) continue;
        const std::size_t low = f % tail, pair = (f / tail) % (w * w), high = f / (tail * w * w);
        for (std::size_t p = 0; p < w * w; ++p) {
            const QScalar& x = op(p, pair);
            if (!x.is_zero()) out[(high * w * w + p) * tail + low] += x * v[f];
        }
    }
    return out;
}

Vec qprime_chain(const Matrix& qprime, std::size_t w, std::size_t n, const Vec& v) {
    Vec out = v;
    for (std::size_t k = 1; k < n; ++k) {
        // Q'_12 Q'_23 ... Q'_{k,k+1} v
        Vec t = v;
        for (std::size_t pos = k; pos-- > 0;) t = apply_two_leg(qprime, w, n, pos, t);
        for (std::size_t i = 0; i < out.size(); ++i) out[i] += t[i];
    }
    return out;
}

static std::size_t rea_letter(const CanonicalizerPair& s, std::size_t i, std::size_t j) {
    if (s.w != 4 || i > 1 || j > 1) throw std::invalid_argument("indices of the n = 2 REA are 0 or 1");
    return j * 2 + i;  // ∂_i^j is dual to L_j^i
}

GradedOperator qprime_partial(CanonicalizerPtr rea, std::size_t i, std::size_t j) {
    const std::size_t w = rea->w, letter = rea_letter(*rea, i, j);
    const Matrix qp = build_Qprime(standard_R(2, rea->algebra->q())).matrix();
    GradedOperator g = blank(rea, -1, "∂'^" + std::to_string(i) + "_" + std::to_string(j));
    g.parts[0] = Matrix(0, 1);
    for (std::size_t n = 1; n < g.parts.size(); ++n) {
        const auto& c = rea->component(n);
        const auto& below = rea->component(n - 1);
        const std::size_t tail = ipow(w, n - 1);
        Matrix m(below.monomials.size(), c.monomials.size());
        for (std::size_t col = 0; col < c.monomials.size(); ++col) {
            Vec chained = qprime_chain(qp, w, n, rea->word_vector(c.monomials[col]));
            Vec head(chained.begin() + static_cast<long>(letter * tail),
                     chained.begin() + static_cast<long>((letter + 1) * tail));
            Vec v = below.quotient.apply(head);
            for (std::size_t r = 0; r < v.size(); ++r) m(r, col) = v[r];
        }
        g.parts[n] = std::move(m);
    }
    return g;
}

GradedOperator canonical_partial(CanonicalizerPtr rea, std::size_t i, std::size_t j) {
    return partial(rea, rea->algebra->generators()[rea_letter(*rea, i, j)]);
}

AlgebraElement qprime_derivative(CanonicalizerPtr rea, std::size_t i, std::size_t j, const AlgebraElement& f) {
    if (f.degree() > rea->d_max) throw DegreeOverflow("element degree exceeds the cached bound");
    return qprime_partial(rea, i, j)(f);
}

// ---------------------------------------------------------------- Laplace and Dirac

static GradedOperator laplace_part(CanonicalizerPtr s) {
    const QScalar q = s->algebra->q();
    GradedOperator db = pairing_derivative(s, "b"), dh = pairing_derivative(s, "h"), dc = pairing_derivative(s, "c");
    return q.inv() * (db * dc) + two_q(q).inv() * (dh * dh) + q * (dc * db);
}

GradedOperator laplace3(CanonicalizerPtr r3) {
    GradedOperator g = laplace_part(r3);
    g.name = "Δ3";
    return g;
}

GradedOperator laplace4(CanonicalizerPtr r4, const QScalar& epsilon) {
    if (epsilon.is_zero()) throw std::invalid_argument("epsilon must be nonzero");
    GradedOperator dl = pairing_derivative(r4, "l");
    GradedOperator g = epsilon * (dl * dl) + laplace_part(r4);
    g.name = "Δ4";
    return g;
}

std::vector<CheckResult> derivative_algebra_check(CanonicalizerPtr s, const PairingTable& p) {
    const QScalar q = s->algebra->q(), q2 = q * q, t = two_q(q);
    GradedOperator db = pairing_derivative(s, "b", p), dh = pairing_derivative(s, "h", p),
                   dc = pairing_derivative(s, "c", p);
    GradedOperator zero = zero_operator(s, -2);
    std::vector<CheckResult> out;
    out.push_back(operator_equal("q^2 D_h D_b - D_b D_h = 0", q2 * (dh * db) - db * dh, zero));
    out.push_back(operator_equal("2_q q (D_b D_c - D_c D_b) + (q^2 - 1) D_h^2 = 0",
                                 (t * q) * (db * dc - dc * db) + (q2 - QScalar(1)) * (dh * dh), zero));
    out.push_back(operator_equal("q^2 D_c D_h - D_h D_c = 0", q2 * (dc * dh) - dh * dc, zero));
    if (s->w == 4) {
        GradedOperator dl = pairing_derivative(s, "l", p);
        for (const auto& [x, d] : {std::pair{"b", db}, {"h", dh}, {"c", dc}})
            out.push_back(operator_equal(std::string("[D_l, D_") + x + "] = 0", dl * d, d * dl));
    }
    return out;
}

std::vector<CheckResult> derivative_algebra_check(CanonicalizerPtr s) {
    return derivative_algebra_check(s, standard_pairing(s->w == 4, QScalar(1), s->algebra->q()));
}

static OperatorMatrix sigma_matrix(const GradedOperator& b, const GradedOperator& h, const GradedOperator& c,
                                   const QScalar& q) {
    const QScalar t = two_q(q);
    return {{(q / t) * h, b}, {c, (-(t * q).inv()) * h}};
}

OperatorMatrix dirac3(CanonicalizerPtr r3) {
    return sigma_matrix(pairing_derivative(r3, "b"), pairing_derivative(r3, "h"), pairing_derivative(r3, "c"),
                        r3->algebra->q());
}

OperatorMatrix dirac4(CanonicalizerPtr r4, const QScalar& epsilon) {
    if (epsilon.is_zero()) throw std::invalid_argument("epsilon must be nonzero");
    OperatorMatrix s = dirac3(r4);
    GradedOperator el = epsilon * pairing_derivative(r4, "l"), zero = zero_operator(r4, -1);
    OperatorMatrix d(4, std::vector<GradedOperator>(4, zero));
    for (std::size_t i = 0; i < 2; ++i) {
        d[i][i + 2] = el;
        d[i + 2][i] = el;
        for (std::size_t j = 0; j < 2; ++j) {
            d[i][j] = s[i][j];
            d[i + 2][j + 2] = QScalar(-1) * s[i][j];
        }
    }
    return d;
}

std::vector<CheckResult> dirac_checks(CanonicalizerPtr r3, CanonicalizerPtr r4, const QScalar& epsilon) {
    const QScalar t3 = two_q(r3->algebra->q()), t4 = two_q(r4->algebra->q());
    std::vector<CheckResult> out;
    OperatorMatrix d3 = dirac3(r3);
    out.push_back(operator_equal("Dir3^2 = Δ3/2_q Id", d3 * d3, scalar_identity(t3.inv() * laplace3(r3), 2)));
    OperatorMatrix d4 = dirac4(r4, epsilon);
    GradedOperator dl = pairing_derivative(r4, "l");
    GradedOperator rhs = (epsilon * epsilon) * (dl * dl) + t4.inv() * laplace_part(r4);
    out.push_back(operator_equal("Dir4^2 = (ε^2 D_l^2 + Δ3/2_q) Id", d4 * d4, scalar_identity(rhs, 4)));
    return out;
}

// ---------------------------------------------------------------- tangent fields

static GradedOperator lmul(CanonicalizerPtr s, const std::string& x) {
    return left_multiplication(s, AlgebraElement::gen(s->algebra, x));
}

TangentFields tangent_fields(CanonicalizerPtr r3, const QScalar& w) {
    if (r3->w != 3) throw std::invalid_argument("tangent fields act on kq_r3");
    const QScalar q = r3->algebra->q(), q2 = q * q, t = two_q(q);
    AdjointMatrices m = adjoint_matrices(w, q);
    TangentFields f{first_factor_extension(r3, m.B, "B_q"), first_factor_extension(r3, m.H, "H_q"),
                    first_factor_extension(r3, m.C, "C_q"), w, {}};
    f.hbar.resize(r3->d_max + 1);
    for (std::size_t n = 1; n <= r3->d_max; ++n) {
        const Matrix &B = *f.B.parts[n], &H = *f.H.parts[n], &C = *f.C.parts[n];
        const Matrix x = q2 * (H * B) - B * H, y = t * B;
        std::optional<QScalar> hb;
        for (std::size_t i = 0; i < y.rows() && !hb; ++i)
            for (std::size_t j = 0; j < y.cols() && !hb; ++j)
                if (!y(i, j).is_zero()) hb = x(i, j) / y(i, j);
        if (!hb) continue;
        const bool ok = x == *hb * y && q2 * (C * H) - H * C == (t * *hb) * C &&
                        (t * q) * (B * C - C * B) + (q2 - QScalar(1)) * (H * H) == (t * *hb) * H;
        if (ok) f.hbar[n] = hb;
    }
    return f;
}

CheckResult tangent_relation_check(const TangentFields& t) {
    CanonicalizerPtr s = t.B.space;
    const QScalar q = s->algebra->q();
    GradedOperator rel = q.inv() * (lmul(s, "b") * t.C) + two_q(q).inv() * (lmul(s, "h") * t.H) +
                         q * (lmul(s, "c") * t.B);
    return operator_equal("q^-1 b C_q + h H_q/2_q + q c B_q = 0", rel, zero_operator(s, 1));
}

CheckResult tangent_sl_check(const TangentFields& t) {
    CheckResult r{"sl relations with hbar(n)", true, ""};
    for (std::size_t n = 1; n < t.hbar.size(); ++n)
        if (!t.hbar[n]) return {r.name, false, "no consistent hbar in degree " + std::to_string(n)};
    return r;
}

RotationOperators rotation_operators(const TangentFields& t) {
    CanonicalizerPtr s = t.B.space;
    const QScalar q = s->algebra->q(), q2 = q * q;
    GradedOperator lb = lmul(s, "b"), lh = lmul(s, "h"), lc = lmul(s, "c");
    RotationOperators r{q2 * (lh * t.B) - lb * t.H,
                        (q * two_q(q)) * (lb * t.C - lc * t.B) + (q2 - QScalar(1)) * (lh * t.H),
                        q2 * (lc * t.H) - lh * t.C};
    r.B.name = "𝔅_q";
    r.H.name = "ℌ_q";
    r.C.name = "ℭ_q";
    return r;
}

AlgebraElement rho_q(PresentationPtr r3) {
    const QScalar q = r3->q(), t = two_q(q);
    AlgebraElement b = AlgebraElement::gen(r3, "b"), h = AlgebraElement::gen(r3, "h"), c = AlgebraElement::gen(r3, "c");
    return t.inv() * (q.inv() * (b * c) + t.inv() * (h * h) + q * (c * b));
}

static GradedOperator restricted(GradedOperator g, std::size_t lo, std::size_t hi) {
    for (std::size_t n = 0; n < g.parts.size(); ++n)
        if (n < lo || n > hi) g.parts[n].reset();
    return g;
}

std::vector<CheckResult> pseudospherical_check(CanonicalizerPtr r3, std::size_t max_degree) {
    if (max_degree + 1 > r3->d_max) throw DegreeOverflow("pseudospherical check needs d_max > max_degree");
    const QScalar q = r3->algebra->q(), t = two_q(q);
    TangentFields tf = tangent_fields(r3, QScalar(1));
    RotationOperators rot = rotation_operators(tf);
    GradedOperator rho = left_multiplication(r3, rho_q(r3->algebra));
    GradedOperator n = degree_scalar(r3, [](std::size_t d) { return QScalar(static_cast<long>(d)); }, "n");
    std::vector<CheckResult> out;
    for (const auto& [x, op] : {std::pair{"b", rot.B}, {"h", rot.H}, {"c", rot.C}}) {
        GradedOperator lhs = rho * pairing_derivative(r3, x);
        GradedOperator rhs = (q.pow(-2) / t) * op + t.inv() * (lmul(r3, x) * n);
        out.push_back(operator_equal(std::string("pseudospherical D_") + x, restricted(lhs, 1, max_degree),
                                     restricted(rhs, 1, max_degree)));
    }
    return out;
}

GradedOperator laplace_H2(const RotationOperators& r) {
    const QScalar q = r.B.space->algebra->q();
    GradedOperator g = q.inv() * (r.B * r.C) + two_q(q).inv() * (r.H * r.H) + q * (r.C * r.B);
    g.name = "Δ_H2";
    return g;
}

OperatorMatrix dirac_H2(const TangentFields& t) { return sigma_matrix(t.B, t.H, t.C, t.B.space->algebra->q()); }

CheckResult dirac_H2_check(const TangentFields& t, std::size_t max_degree) {
    CanonicalizerPtr s = t.B.space;
    const QScalar q = s->algebra->q(), tq = two_q(q);
    OperatorMatrix d = dirac_H2(t);
    GradedOperator hb = degree_scalar(
        s, [&](std::size_t n) { return n < t.hbar.size() && t.hbar[n] ? q.inv() * *t.hbar[n] : QScalar(0); },
        "q^-1 hbar(n)");
    GradedOperator cas = tq.inv() * (q.inv() * (t.B * t.C) + tq.inv() * (t.H * t.H) + q * (t.C * t.B));
    OperatorMatrix rhs = scalar_identity(cas, 2);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j) rhs[i][j] = rhs[i][j] + hb * d[i][j];
    OperatorMatrix lhs = d * d;
    for (auto* m : {&lhs, &rhs})
        for (auto& row : *m)
            for (auto& op : row)
                for (std::size_t n = max_degree + 1; n < op.parts.size(); ++n) op.parts[n].reset();
    CheckResult r = operator_equal("Dir_H2^2 = q^-1 hbar(n) Dir + Cas/2_q Id", lhs, rhs);
    if (r.pass)
        for (std::size_t n = 1; n < t.hbar.size() && n <= max_degree; ++n)
            if (!t.hbar[n]) return {r.name, false, "hbar undetermined in degree " + std::to_string(n)};
    return r;
}

// ---------------------------------------------------------------- Maxwell

Column gradient(CanonicalizerPtr s, const AlgebraElement& phi) {
    Column c;
    for (const auto& g : s->algebra->generators()) c.push_back(partial(s, g)(phi));
    return c;
}

static Column maxwell_impl(CanonicalizerPtr s, const GradedOperator& lap, const QScalar& epsilon, const Column& v) {
    const QScalar q = s->algebra->q();
    if (v.size() != s->w) throw DimensionMismatch("column length must match the generators");
    AlgebraElement div = q.inv() * partial(s, "c")(v[0]) + two_q(q) * partial(s, "h")(v[1]) + q * partial(s, "b")(v[2]);
    if (s->w == 4) div += epsilon * partial(s, "l")(v[3]);
    Column out;
    for (std::size_t i = 0; i < v.size(); ++i)
        out.push_back(lap(v[i]) - partial(s, s->algebra->generators()[i])(div));
    return out;
}

Column maxwell3(CanonicalizerPtr r3, const Column& v) { return maxwell_impl(r3, laplace3(r3), QScalar(0), v); }

Column maxwell4(CanonicalizerPtr r4, const QScalar& epsilon, const Column& v) {
    return maxwell_impl(r4, laplace4(r4, epsilon), epsilon, v);
}

QScalar hyperboloid_casimir(const QScalar& q) { return q.pow(-2) * two_q(q) * two_q(q); }

Column gradient_H2(const TangentFields& t, const AlgebraElement& phi) {
    const QScalar q = t.B.space->algebra->q();
    RotationOperators r = rotation_operators(t);
    return {q.inv() * r.C(phi), two_q(q).inv() * r.H(phi), q * r.B(phi)};
}

Column maxwell_H2(const TangentFields& t, const Column& v) {
    CanonicalizerPtr s = t.B.space;
    const QScalar q = s->algebra->q(), tq = two_q(q);
    if (v.size() != 3) throw DimensionMismatch("columns on the hyperboloid have length 3");
    RotationOperators r = rotation_operators(t);
    GradedOperator lap = laplace_H2(r);
    AlgebraElement inner = r.B(v[0]) + r.H(v[1]) + r.C(v[2]);
    Column raw{lap(v[0]) - q.inv() * r.C(inner), lap(v[1]) - tq.inv() * r.H(inner), lap(v[2]) - q * r.B(inner)};

    PresetParams pp;
    pp.q = q;
    pp.hbar = QScalar(0);
    pp.casimir = hyperboloid_casimir(q);
    PresentationPtr hyp = preset("hyperboloid", pp);
    Column red;
    for (const auto& x : raw) red.push_back(AlgebraElement(hyp, x.terms()));
    // e' = 1 - (1/C)(c, h, b)^T (q^-1 b, h/2_q, q c)
    auto g = [&](const char* x) { return AlgebraElement::gen(hyp, x); };
    AlgebraElement y = q.inv() * (g("b") * red[0]) + tq.inv() * (g("h") * red[1]) + q * (g("c") * red[2]);
    const QScalar cinv = pp.casimir.inv();
    Column out{red[0] - cinv * (g("c") * y), red[1] - cinv * (g("h") * y), red[2] - cinv * (g("b") * y)};
    return out;
}

static CheckResult column_zero(const std::string& name, const Column& c, const std::string& where) {
    for (std::size_t i = 0; i < c.size(); ++i)
        if (!c[i].is_zero()) return {name, false, where + ", row " + std::to_string(i) + ": " + c[i].str()};
    return {name, true, ""};
}

CheckResult maxwell_kernel_check(CanonicalizerPtr s, const QScalar& epsilon, std::size_t max_degree) {
    const std::string name = s->w == 4 ? "Mw4(grad φ) = 0" : "Mw3(grad φ) = 0";
    for (std::size_t n = 0; n <= max_degree; ++n)
        for (const auto& mono : s->component(n).monomials) {
            Terms t;
            add_term(t, mono, QScalar(1));
            AlgebraElement phi(s->algebra, t);
            Column g = gradient(s, phi);
            Column m = s->w == 4 ? maxwell4(s, epsilon, g) : maxwell3(s, g);
            CheckResult r = column_zero(name, m, "φ = " + phi.str());
            if (!r.pass) return r;
        }
    return {name, true, ""};
}

CheckResult maxwell_H2_kernel_check(const TangentFields& t, std::size_t max_degree) {
    CanonicalizerPtr s = t.B.space;
    if (max_degree + 2 > s->d_max) throw DegreeOverflow("the hyperboloid Maxwell check needs d_max >= max_degree + 2");
    const std::string name = "Mw_H2(grad φ) = 0";
    for (std::size_t n = 0; n <= max_degree; ++n)
        for (const auto& mono : s->component(n).monomials) {
            Terms tm;
            add_term(tm, mono, QScalar(1));
            AlgebraElement phi(s->algebra, tm);
            CheckResult r = column_zero(name, maxwell_H2(t, gradient_H2(t, phi)), "φ = " + phi.str());
            if (!r.pass) return r;
        }
    return {name, true, ""};
}

// ---------------------------------------------------------------- classical oracles

GradedOperator classical_partial(CanonicalizerPtr s, const std::string& x) {
    const std::size_t letter = letter_index(*s, x);
    GradedOperator g = blank(s, -1, "d/d" + x);
    g.parts[0] = Matrix(0, 1);
    for (std::size_t n = 1; n < g.parts.size(); ++n) {
        const auto& c = s->component(n);
        Matrix m(s->dim(n - 1), c.monomials.size());
        for (std::size_t j = 0; j < c.monomials.size(); ++j) {
            const Word& word = c.monomials[j];
            long count = 0;
            Word rest;
            for (char ch : word) {
                if (static_cast<std::size_t>(ch) == letter && count++ == 0) continue;
                rest.push_back(ch);
            }
            if (count == 0) continue;
            Terms t;
            add_term(t, rest, QScalar(count));
            Vec v = s->coordinates(AlgebraElement(s->algebra, t), n - 1);
            for (std::size_t i = 0; i < v.size(); ++i) m(i, j) = v[i];
        }
        g.parts[n] = std::move(m);
    }
    return g;
}

CanonicalizerPtr euclidean_canonicalizer(std::size_t d_max) {
    std::vector<Terms> rels;
    std::vector<Vec> sym, anti;
    for (std::size_t i = 0; i < 3; ++i)
        for (std::size_t j = i; j < 3; ++j) {
            sym.push_back(tensor2(3, {{i, j, QScalar(1)}, {j, i, QScalar(1)}}));
            if (i == j) continue;
            anti.push_back(tensor2(3, {{i, j, QScalar(1)}, {j, i, QScalar(-1)}}));
            Terms t;
            add_term(t, Word{static_cast<char>(j), static_cast<char>(i)}, QScalar(1));
            add_term(t, Word{static_cast<char>(i), static_cast<char>(j)}, QScalar(-1));
            rels.push_back(t);
        }
    PresentationPtr p = Presentation::from_relations("euclid_r3", {"x", "y", "z"}, rels, QScalar(1));
    return build_canonicalizer("euclid_r3", p, span_of(anti, 9), span_of(sym, 9), d_max);
}

std::vector<CheckResult> classical_checks(std::size_t d_max) {
    std::vector<CheckResult> out;
    const QScalar one(1), two(2);
    auto add = [&](CheckResult c, const std::string& name) {
        c.name = name;
        out.push_back(std::move(c));
    };

    CanonicalizerPtr r3 = build_canonicalizer(WaveAlgebra::kq_r3, d_max, one);
    GradedOperator pb = classical_partial(r3, "b"), ph = classical_partial(r3, "h"), pc = classical_partial(r3, "c");
    GradedOperator db = pairing_derivative(r3, "b"), dh = pairing_derivative(r3, "h"), dc = pairing_derivative(r3, "c");
    GradedOperator lb = lmul(r3, "b"), lh = lmul(r3, "h"), lc = lmul(r3, "c");
    add(operator_equal("", db, pc), "q=1: D_b = d/dc");
    add(operator_equal("", dh, two * ph), "q=1: D_h = 2 d/dh");
    add(operator_equal("", dc, pb), "q=1: D_c = d/db");
    OperatorMatrix d3 = dirac3(r3);
    OperatorMatrix classical{{ph, pc}, {pb, QScalar(-1) * ph}};
    add(operator_equal("", d3, classical), "q=1: Dir3 = [[D_h/2, D_b], [D_c, -D_h/2]]");
    add(operator_equal("", d3 * d3, scalar_identity(ph * ph + pb * pc, 2)), "q=1: Dir3^2 = (d_h^2 + d_b d_c) Id");

    TangentFields tf = tangent_fields(r3, two);
    add(operator_equal("", tf.B, QScalar(-2) * (lb * ph) + lh * pc), "q=1: B = -2b d_h + h d_c");
    add(operator_equal("", tf.H, two * (lb * pb) - two * (lc * pc)), "q=1: H = 2b d_b - 2c d_c");
    add(operator_equal("", tf.C, QScalar(-1) * (lh * pb) + two * (lc * ph)), "q=1: C = -h d_b + 2c d_h");
    add(tangent_relation_check(tf), "q=1: b C + h H/2 + c B = 0");
    add(dirac_H2_check(tf), "q=1: Dir_H2^2 = Dir + (BC + H^2/2 + CB)/2 Id");
    for (auto& c : pseudospherical_check(r3, d_max - 1)) add(c, "q=1: " + c.name);

    CanonicalizerPtr e = euclidean_canonicalizer(d_max);
    GradedOperator px = partial(e, "x"), py = partial(e, "y"), pz = partial(e, "z");
    add(operator_equal("", px, classical_partial(e, "x")), "R^3: canonical d_x = d/dx");
    GradedOperator lx = lmul(e, "x"), ly = lmul(e, "y"), lz = lmul(e, "z");
    GradedOperator X = lz * py - ly * pz, Y = lx * pz - lz * px, Z = ly * px - lx * py;
    add(operator_equal("", lx * X + ly * Y + lz * Z, zero_operator(e, 1)), "R^3: x X + y Y + z Z = 0");
    AlgebraElement x = AlgebraElement::gen(e->algebra, "x"), y = AlgebraElement::gen(e->algebra, "y"),
                   z = AlgebraElement::gen(e->algebra, "z");
    GradedOperator rho = left_multiplication(e, x * x + y * y + z * z);
    GradedOperator n = degree_scalar(e, [](std::size_t d) { return QScalar(static_cast<long>(d)); }, "n");
    add(operator_equal("", rho * px, ly * Z - lz * Y + lx * n), "R^3: rho d_x = y Z - z Y + 2 x rho d_rho");
    add(operator_equal("", rho * py, lz * X - lx * Z + ly * n), "R^3: rho d_y = z X - x Z + 2 y rho d_rho");
    add(operator_equal("", rho * pz, lx * Y - ly * X + lz * n), "R^3: rho d_z = x Y - y X + 2 z rho d_rho");
    GradedOperator radial = degree_scalar(e, [&](std::size_t d) { return QScalar(static_cast<long>(d * (d + 1))); }, "");
    add(operator_equal("", rho * (px * px + py * py + pz * pz), X * X + Y * Y + Z * Z + radial),
        "R^3: rho Δ = X^2 + Y^2 + Z^2 + 6 rho d_rho + 4 rho^2 d_rho^2");
    return out;
}

}  // namespace braidkit
