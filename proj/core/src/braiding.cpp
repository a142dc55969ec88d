#include "braidkit/braiding.hpp"

#include <json.hpp>

namespace braidkit {

namespace {

Matrix standard_matrix(std::size_t n, const QScalar& q) {
    Matrix m(n * n, n * n);
    QScalar d = q - q.inv();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            if (i == j) {
                m(i * n + i, i * n + i) = q;
                continue;
            }
            m(i * n + j, j * n + i) = QScalar(1);
            if (i < j) m(i * n + j, i * n + j) += d;
        }
    return m;
}

std::string nz_witness(const std::string& what, const Matrix& m) { return m.is_zero() ? "" : what + ": " + m.first_nonzero(); }

}  // namespace

TensorOperator skew_inverse(const TensorOperator& r) {
    const auto& d = r.dims();
    if (d.size() != 2 || d[0] != d[1]) throw DimensionMismatch("skew_inverse needs an operator on V ⊗ V");
    const std::size_t n = d[0];
    const std::size_t n2 = n * n, n4 = n2 * n2;
    auto rr = [&](std::size_t i, std::size_t j, std::size_t k, std::size_t l) -> const QScalar& {
        return r(i * n + j, k * n + l);
    };
    // unknown Psi(a*n+b, c*n+e) sits at column (a*n+b)*n2 + c*n+e
    auto var = [&](std::size_t a, std::size_t b, std::size_t c, std::size_t e) { return (a * n + b) * n2 + c * n + e; };
    Matrix sys(2 * n4, n4);
    Matrix rhs(2 * n4, 1);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t j = 0; j < n; ++j)
                for (std::size_t l = 0; l < n; ++l) {
                    std::size_t row = ((i * n + k) * n + j) * n + l;
                    if (i == l && k == j) {
                        rhs(row, 0) = QScalar(1);
                        rhs(n4 + row, 0) = QScalar(1);
                    }
                    for (std::size_t m = 0; m < n; ++m)
                        for (std::size_t x = 0; x < n; ++x) {
                            // sum R(i,m;j,x) Psi(x,k;m,l)
                            const QScalar& a = rr(i, m, j, x);
                            if (!a.is_zero()) sys(row, var(x, k, m, l)) += a;
                            // sum Psi(i,m;j,x) R(x,k;m,l)
                            const QScalar& b = rr(x, k, m, l);
                            if (!b.is_zero()) sys(n4 + row, var(i, m, j, x)) += b;
                        }
                }
    Solution s;
    try {
        s = solve_general(sys, rhs);
    } catch (const Inconsistent&) {
        throw NotSkewInvertible("no operator satisfies the skew-inverse trace identities");
    }
    if (s.kernel.cols() != 0) throw NotSkewInvertible("skew-inverse is not unique");
    Matrix psi(n2, n2);
    for (std::size_t a = 0; a < n2; ++a)
        for (std::size_t b = 0; b < n2; ++b) psi(a, b) = s.particular(a * n2 + b, 0);
    return TensorOperator(d, std::move(psi));
}

HeckeSymmetry make_symmetry(std::string name, std::size_t n, const QScalar& q, const Matrix& r,
                            std::optional<BiRank> birank, std::vector<int> parity) {
    if (r.rows() != n * n || r.cols() != n * n) throw DimensionMismatch("R must be n^2 x n^2");
    HeckeSymmetry h;
    h.name = std::move(name);
    h.n = n;
    h.q = q;
    h.R = TensorOperator({n, n}, r);
    try {
        h.Rinv = TensorOperator({n, n}, inverse(r));
    } catch (const Singular&) {
        throw NotSkewInvertible("R is not invertible");
    }
    h.Psi = skew_inverse(h.R);
    h.B = partial_trace(h.Psi, {1}).matrix();
    h.C = partial_trace(h.Psi, {2}).matrix();
    h.birank = birank;
    h.parity = std::move(parity);
    return h;
}

HeckeSymmetry standard_R(std::size_t n, const QScalar& q) {
    if (n < 2) throw std::invalid_argument("standard_R needs n >= 2");
    return make_symmetry("uqsl" + std::to_string(n), n, q, standard_matrix(n, q),
                         BiRank{static_cast<int>(n), 0});
}

HeckeSymmetry flip(std::size_t n) {
    if (n < 1) throw std::invalid_argument("flip needs n >= 1");
    return make_symmetry("flip" + std::to_string(n), n, QScalar(1), swap_operator(n).matrix(),
                         BiRank{static_cast<int>(n), 0});
}

HeckeSymmetry superflip(std::size_t m, std::size_t k) {
    const std::size_t n = m + k;
    if (n < 1) throw std::invalid_argument("superflip needs a nonzero dimension");
    std::vector<int> parity(n, 0);
    for (std::size_t i = m; i < n; ++i) parity[i] = 1;
    Matrix r(n * n, n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) r(j * n + i, i * n + j) = QScalar((parity[i] & parity[j]) ? -1 : 1);
    return make_symmetry("superflip" + std::to_string(m) + "_" + std::to_string(k), n, QScalar(1), r,
                         BiRank{static_cast<int>(m), static_cast<int>(k)}, parity);
}

HeckeSymmetry symmetry_from_json(const std::string& text) {
    auto j = nlohmann::json::parse(text);
    std::size_t n = j.at("n").get<std::size_t>();
    QScalar q = j.contains("q") ? parse_scalar(j.at("q").get<std::string>()) : QScalar::q();
    const auto& rows = j.at("R");
    if (rows.size() != n * n) throw DimensionMismatch("R must have n^2 rows");
    Matrix r(n * n, n * n);
    for (std::size_t i = 0; i < n * n; ++i) {
        if (rows[i].size() != n * n) throw DimensionMismatch("R must have n^2 columns");
        for (std::size_t k = 0; k < n * n; ++k) {
            const auto& e = rows[i][k];
            r(i, k) = e.is_string() ? parse_scalar(e.get<std::string>()) : QScalar(e.get<long>());
        }
    }
    std::optional<BiRank> br;
    if (j.contains("birank")) br = BiRank{j["birank"].at(0).get<int>(), j["birank"].at(1).get<int>()};
    HeckeSymmetry h = make_symmetry(j.value("name", std::string("custom")), n, q, r, br);
    for (const auto& c : validate(h))
        if (!c.pass) throw InvalidBraiding(c.id + " fails: " + c.witness);
    return h;
}

HeckeSymmetry preset_symmetry(const std::string& name, const QScalar& q) {
    if (name.rfind("uqsl", 0) == 0) {
        std::string rest = name.substr(4);
        if (!rest.empty() && rest.front() == '(') rest = rest.substr(1, rest.size() - 2);
        return standard_R(rest.empty() ? 2 : static_cast<std::size_t>(std::stoul(rest)), q);
    }
    if (name.rfind("superflip", 0) == 0) {
        std::string rest = name.substr(9);
        for (char& c : rest)
            if (c == '(' || c == ')' || c == ',' || c == '_') c = ' ';
        std::size_t m = 1, k = 1;
        if (rest.find_first_not_of(' ') != std::string::npos) {
            std::size_t used = 0;
            m = std::stoul(rest, &used);
            k = std::stoul(rest.substr(used));
        }
        return superflip(m, k);
    }
    if (name.rfind("flip", 0) == 0) {
        std::string rest = name.substr(4);
        if (!rest.empty() && rest.front() == '(') rest = rest.substr(1, rest.size() - 2);
        return flip(rest.empty() ? 2 : static_cast<std::size_t>(std::stoul(rest)));
    }
    throw std::invalid_argument("unknown symmetry preset '" + name + "'");
}

QScalar r_trace(const HeckeSymmetry& h, const Matrix& x) {
    if (x.rows() != h.n || x.cols() != h.n) throw DimensionMismatch("R-trace of a matrix of the wrong size");
    QScalar t;
    for (std::size_t i = 0; i < h.n; ++i)
        for (std::size_t j = 0; j < h.n; ++j)
            if (!h.C(i, j).is_zero() && !x(j, i).is_zero()) t += h.C(i, j) * x(j, i);
    return t;
}

std::vector<CheckItem> validate(const HeckeSymmetry& h) {
    std::vector<CheckItem> out;
    const std::size_t n = h.n;
    auto d3 = h.dims(3);
    TensorOperator r12 = embed(h.R, 1, d3), r23 = embed(h.R, 2, d3);
    Matrix ybe = (r12 * r23 * r12 - r23 * r12 * r23).matrix();
    out.push_back({"yang-baxter", ybe.is_zero(), nz_witness("R12 R23 R12 - R23 R12 R23", ybe)});

    Matrix id = Matrix::identity(n * n);
    Matrix hecke = (h.R.matrix() - h.q * id) * (h.R.matrix() + h.q.inv() * id);
    out.push_back({"hecke", hecke.is_zero(), nz_witness("(R - q)(R + q^-1)", hecke)});

    // after tracing leg 2, P13 is the flip of the remaining legs
    TensorOperator psi12 = embed(h.Psi, 1, d3), psi23 = embed(h.Psi, 2, d3);
    Matrix p13 = swap_operator(n).matrix();
    Matrix s1 = partial_trace(r12 * psi23, {2}).matrix() - p13;
    Matrix s2 = partial_trace(psi12 * r23, {2}).matrix() - p13;
    out.push_back({"skew-inverse-left", s1.is_zero(), nz_witness("Tr2 R12 Psi23 - P13", s1)});
    out.push_back({"skew-inverse-right", s2.is_zero(), nz_witness("Tr2 Psi12 R23 - P13", s2)});

    bool b_inv = rank(h.B) == n, c_inv = rank(h.C) == n;
    out.push_back({"B-C-invertible", b_inv && c_inv, b_inv ? (c_inv ? "" : "C singular") : "B singular"});

    auto d2 = h.dims(2);
    TensorOperator b1 = embed(TensorOperator({n}, h.B), 1, d2);
    TensorOperator c2 = embed(TensorOperator({n}, h.C), 2, d2);
    Matrix t1 = partial_trace(b1 * h.R, {1}).matrix() - Matrix::identity(n);
    Matrix t2 = partial_trace(c2 * h.R, {2}).matrix() - Matrix::identity(n);
    out.push_back({"trace-B-R", t1.is_zero(), nz_witness("Tr1 B1 R12 - Id", t1)});
    out.push_back({"trace-C-R", t2.is_zero(), nz_witness("Tr2 C2 R12 - Id", t2)});

    if (h.birank) {
        QScalar expected = h.q.pow(2 * (h.birank->n - h.birank->m));
        Matrix bc = h.B * h.C - expected * Matrix::identity(n);
        out.push_back({"birank-BC", bc.is_zero(), nz_witness("B C - q^{2(n-m)} Id", bc)});
    }
    return out;
}

Matrix symmetric_tensors(const HeckeSymmetry& h, std::size_t k) {
    Matrix a = h.q * Matrix::identity(h.n * h.n) - h.R.matrix();
    return constrained_tensor_power(a.transpose(), h.n, k);
}

Matrix antisymmetric_tensors(const HeckeSymmetry& h, std::size_t k) {
    Matrix a = h.q.inv() * Matrix::identity(h.n * h.n) + h.R.matrix();
    return constrained_tensor_power(a.transpose(), h.n, k);
}

BiRank birank_detect(const HeckeSymmetry& h, std::size_t max_degree) {
    auto bc_scalar = [&]() -> std::optional<QScalar> {
        Matrix bc = h.B * h.C;
        QScalar s = bc(0, 0);
        if (bc != s * Matrix::identity(h.n)) return std::nullopt;
        return s;
    };
    for (std::size_t k = 1; k <= max_degree; ++k) {
        if (antisymmetric_tensors(h, k).cols() != 0) continue;
        BiRank b{static_cast<int>(k) - 1, 0};
        auto s = bc_scalar();
        if (!s || *s != h.q.pow(-2 * b.m))
            throw Undetermined("exterior series terminates but B C disagrees with the detected rank");
        return b;
    }
    if (h.birank && !h.parity.empty()) {
        auto s = bc_scalar();
        if (s && *s == h.q.pow(2 * (h.birank->n - h.birank->m))) return *h.birank;
    }
    throw Undetermined("exterior series does not terminate within degree " + std::to_string(max_degree));
}

}  // namespace braidkit
